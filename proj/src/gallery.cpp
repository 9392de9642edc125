#include "splitcomp/gallery.hpp"

#include <algorithm>
#include <sstream>

#include "internal/parallel.hpp"
#include "splitcomp/biject.hpp"
#include "splitcomp/classify.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"

namespace splitcomp {

namespace {

CensusEntry entry_of(Object o) {
  CensusEntry e;
  e.key = canon_key(o);
  e.in_domain = in_balance_domain(o);
  if (e.in_domain) e.balance = balance_of(o);
  e.object = std::move(o);
  return e;
}

}  // namespace

std::vector<GalleryRow> gallery(int n, const EnumerateOptions& opts) {
  const Census splits = enumerate_split(n, opts);
  std::vector<GalleryRow> rows(splits.size());
  detail::parallel_for(splits.size(), opts.workers, [&](std::size_t i) {
    const CensusEntry& s = splits.entries[i];
    GalleryRow& row = rows[i];
    row.split = s;
    row.cover = entry_of(apply_map(MapId::split_to_cover, s.object).object);
    row.poset = entry_of(apply_map(MapId::split_to_poset, s.object).object);
    row.xy = entry_of(apply_map(MapId::split_to_xy, s.object).object);
    if (s.balance.unbalanced()) row.shift_xy = entry_of(apply_map(MapId::shift_split_to_xy, s.object).object);
  });
  std::stable_sort(rows.begin(), rows.end(), [](const GalleryRow& a, const GalleryRow& b) {
    return a.split.balance.unbalanced() && !b.split.balance.unbalanced();
  });
  return rows;
}

std::string render_gallery(int n, const std::vector<GalleryRow>& rows) {
  const auto unbalanced = std::count_if(rows.begin(), rows.end(),
                                        [](const GalleryRow& r) { return r.split.balance.unbalanced(); });
  std::ostringstream out;
  out << "# gallery n=" << n << " rows=" << rows.size() << " unbalanced=" << unbalanced
      << " balanced=" << rows.size() - unbalanced << '\n';
  out << "# row\tbalance\tsplit_g6\tsplit_key\tcover\tposet\txy\tshift_xy\n";
  int index = 1;
  for (const auto& r : rows) {
    out << index++ << '\t' << to_string(r.split.balance.value) << '\t' << serialize_line(r.split.object) << '\t'
        << r.split.key.hex() << '\t' << serialize_line(r.cover.object) << '\t' << serialize_line(r.poset.object)
        << '\t' << serialize_line(r.xy.object) << '\t' << (r.shift_xy ? serialize_line(r.shift_xy->object) : "-")
        << '\n';
  }
  return out.str();
}

}  // namespace splitcomp
