#include "splitcomp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "internal/parallel.hpp"
#include "splitcomp/biject.hpp"
#include "splitcomp/classify.hpp"
#include "splitcomp/errors.hpp"

namespace splitcomp {

std::size_t Census::balanced() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const CensusEntry& e) { return e.in_domain && !e.balance.unbalanced(); });
}

std::size_t Census::unbalanced() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const CensusEntry& e) { return e.in_domain && e.balance.unbalanced(); });
}

std::size_t Census::out_of_domain() const {
  return std::count_if(entries.begin(), entries.end(), [](const CensusEntry& e) { return !e.in_domain; });
}

std::vector<CanonicalKey> Census::keys() const {
  std::vector<CanonicalKey> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.key);
  return out;
}

std::string Census::header() const {
  return "# class=" + std::string(to_string(class_tag)) + " n=" + std::to_string(n) +
         " count=" + std::to_string(size()) + " balanced=" + std::to_string(balanced()) +
         " unbalanced=" + std::to_string(unbalanced());
}

namespace {

void check_order(int n) {
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > kMaxEnumerationOrder)
    throw ResourceError("n=" + std::to_string(n) + " is above the supported bound " +
                        std::to_string(kMaxEnumerationOrder));
}

CensusEntry make_entry(Object o) {
  CensusEntry e;
  e.key = canon_key(o);
  e.in_domain = in_balance_domain(o);
  if (e.in_domain) e.balance = balance_of(o);
  e.object = std::move(o);
  return e;
}

void sort_entries(std::vector<CensusEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.key < b.key; });
}

// ---------------------------------------------------------- orderly generation

// Canonical matrices are closed under deleting the last row: a smaller
// arrangement of the prefix would extend, with the same column order, to a
// smaller arrangement of the whole. So every canonical matrix is reached
// exactly once by appending rows no smaller than the current last row and
// keeping the canonical results.
class RowGenerator {
 public:
  RowGenerator(int nx, int ny, const std::function<bool(const BitMatrix&)>& leaf)
      : nx_(nx), ny_(ny), leaf_(leaf) {}

  // Walks the subtree whose first row is `first`; false once the callback
  // asked to stop.
  bool run_shard(std::uint64_t first) {
    BitMatrix m(0, ny_);
    m.push_row(first);
    if (!is_canonical(m)) return true;
    return extend(m);
  }

  static std::vector<std::uint64_t> first_rows(int ny) {
    // A single canonical row has its ones packed at the end.
    std::vector<std::uint64_t> out;
    for (int ones = 0; ones <= ny; ++ones) out.push_back(low_bits(ones));
    return out;
  }

 private:
  static bool is_canonical(const BitMatrix& m) { return canon_matrix(m).bits == m; }

  bool extend(BitMatrix& m) {
    if (m.rows() == nx_) return leaf_(m);
    const std::uint64_t last = m.row_word(m.rows() - 1);
    const std::uint64_t end = std::uint64_t{1} << ny_;
    for (std::uint64_t w = last; w < end; ++w) {
      BitMatrix next = m;
      next.push_row(w);
      if (!is_canonical(next)) continue;
      if (!extend(next)) return false;
    }
    return true;
  }

  int nx_;
  int ny_;
  const std::function<bool(const BitMatrix&)>& leaf_;
};

struct Shard {
  int nx;
  int ny;
  std::optional<std::uint64_t> first;  // empty when nx == 0
};

std::vector<Shard> shards(int n) {
  std::vector<Shard> out;
  for (int nx = 0; nx <= n; ++nx) {
    const int ny = n - nx;
    if (nx == 0) {
      out.push_back({nx, ny, std::nullopt});
      continue;
    }
    for (std::uint64_t first : RowGenerator::first_rows(ny)) out.push_back({nx, ny, first});
  }
  return out;
}

bool run_shard(const Shard& s, const std::function<bool(const BitMatrix&)>& leaf) {
  if (!s.first) return leaf(BitMatrix(0, s.ny));
  RowGenerator gen(s.nx, s.ny, leaf);
  return gen.run_shard(*s.first);
}

bool no_y_isolates(const BitMatrix& m) {
  for (int c = 0; c < m.cols(); ++c)
    if (m.column_empty(c)) return false;
  return true;
}

// Transport of one canonical XY-matrix into the requested class.
Object transport(ClassTag tag, const BitMatrix& m) {
  const XYGraph g(m);
  switch (tag) {
    case ClassTag::xy: return g;
    case ClassTag::split: return xy_to_split(g).object;
    case ClassTag::cover: return split_to_cover(xy_to_split(g).object).object;
    case ClassTag::poset: return split_to_poset(xy_to_split(g).object).object;
  }
  throw std::logic_error("bad class tag");
}

Census census_from(ClassTag tag, int n, bool filter, const EnumerateOptions& opts) {
  check_order(n);
  const auto parts = shards(n);
  std::vector<std::vector<CensusEntry>> found(parts.size());
  detail::parallel_for(parts.size(), opts.workers, [&](std::size_t i) {
    std::function<bool(const BitMatrix&)> leaf = [&](const BitMatrix& m) {
      if (filter && !no_y_isolates(m)) return true;
      found[i].push_back(make_entry(transport(tag, m)));
      return true;
    };
    run_shard(parts[i], leaf);
  });

  Census c;
  c.class_tag = tag;
  c.n = n;
  for (auto& v : found)
    for (auto& e : v) c.entries.push_back(std::move(e));
  sort_entries(c.entries);
  const std::size_t before = c.entries.size();
  c.entries.erase(std::unique(c.entries.begin(), c.entries.end(),
                              [](const CensusEntry& a, const CensusEntry& b) { return a.key == b.key; }),
                  c.entries.end());
  if (c.entries.size() != before)
    throw std::logic_error("transport into " + std::string(to_string(tag)) + " merged distinct objects at n=" +
                           std::to_string(n));
  return c;
}

// ---------------------------------------------------------------- naive oracle

bool brute_force_split(const Graph& g) {
  const int n = g.order();
  for (VertexSet k = 0; k <= low_bits(n); ++k) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (contains(k, u) == contains(k, v) && g.adjacent(u, v) != contains(k, u)) ok = false;
    if (ok) return true;
    if (k == low_bits(n)) break;
  }
  return false;
}

bool brute_force_minimal_cover(int n, const std::vector<VertexSet>& family) {
  VertexSet all = 0;
  for (VertexSet s : family) all |= s;
  if (all != low_bits(n)) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    VertexSet others = 0;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) others |= family[j];
    if ((family[i] & ~others) == 0) return false;
  }
  return true;
}

SetCover cover_from_masks(int n, const std::vector<VertexSet>& family) {
  std::vector<std::vector<int>> sets;
  for (VertexSet s : family) sets.push_back(members(s));
  return SetCover(n, std::move(sets));
}

// Families of distinct nonempty subsets in increasing mask order, at most n
// of them (a minimal cover of an n-set has at most n sets).
void each_family(int n, VertexSet from, std::vector<VertexSet>& family,
                 const std::function<void(const std::vector<VertexSet>&)>& fn) {
  fn(family);
  if (static_cast<int>(family.size()) == n) return;
  for (VertexSet s = from; s <= low_bits(n); ++s) {
    family.push_back(s);
    each_family(n, s + 1, family, fn);
    family.pop_back();
  }
}

void each_matrix(int n, bool columns_nonempty, const std::function<void(const BitMatrix&)>& fn) {
  for (int rows = 0; rows <= n; ++rows) {
    const int cols = n - rows;
    const int cells = rows * cols;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      BitMatrix m(rows, cols);
      for (int i = 0; i < cells; ++i)
        if ((bits >> i) & 1U) m.set(i / cols, i % cols);
      if (columns_nonempty && !no_y_isolates(m)) continue;
      fn(m);
    }
  }
}

}  // namespace

Census enumerate_xy(int n, bool require_no_y_isolates, const EnumerateOptions& opts) {
  return census_from(ClassTag::xy, n, require_no_y_isolates, opts);
}

Census enumerate_split(int n, const EnumerateOptions& opts) { return census_from(ClassTag::split, n, true, opts); }
Census enumerate_cover(int n, const EnumerateOptions& opts) { return census_from(ClassTag::cover, n, true, opts); }
Census enumerate_poset(int n, const EnumerateOptions& opts) { return census_from(ClassTag::poset, n, true, opts); }

Census enumerate(ClassTag tag, int n, const EnumerateOptions& opts) {
  return census_from(tag, n, tag != ClassTag::xy, opts);
}

Census enumerate_domain(ClassTag tag, int n, const EnumerateOptions& opts) {
  return census_from(tag, n, true, opts);
}

void visit(ClassTag tag, int n, bool require_no_y_isolates, const std::function<bool(const CensusEntry&)>& fn) {
  check_order(n);
  const bool filter = require_no_y_isolates || tag != ClassTag::xy;
  std::function<bool(const BitMatrix&)> leaf = [&](const BitMatrix& m) {
    if (filter && !no_y_isolates(m)) return true;
    return fn(make_entry(transport(tag, m)));
  };
  for (const auto& s : shards(n))
    if (!run_shard(s, leaf)) return;
}

int naive_oracle_bound(ClassTag tag) {
  return tag == ClassTag::split || tag == ClassTag::cover ? kMaxOracleOrderSmall : kMaxOracleOrderLarge;
}

Census naive_oracle(ClassTag tag, int n) {
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > naive_oracle_bound(tag))
    throw ResourceError("naive oracle for " + std::string(to_string(tag)) + " supports n <= " +
                        std::to_string(naive_oracle_bound(tag)));
  std::map<CanonicalKey, Object> seen;
  auto add = [&](const Object& o) {
    Canonical c = canonicalize(o);
    seen.try_emplace(std::move(c.key), std::move(c.object));
  };

  switch (tag) {
    case ClassTag::split: {
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        Graph g(n);
        int i = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++i)
            if ((bits >> i) & 1U) g.add_edge(u, v);
        if (brute_force_split(g)) add(g);
      }
      break;
    }
    case ClassTag::cover: {
      std::vector<VertexSet> family;
      each_family(n, 1, family, [&](const std::vector<VertexSet>& f) {
        if (brute_force_minimal_cover(n, f)) add(cover_from_masks(n, f));
      });
      break;
    }
    case ClassTag::xy:
      each_matrix(n, false, [&](const BitMatrix& m) { add(XYGraph(m)); });
      break;
    case ClassTag::poset:
      each_matrix(n, true, [&](const BitMatrix& m) { add(BipartitePoset(m)); });
      break;
  }

  Census c;
  c.class_tag = tag;
  c.n = n;
  for (auto& [key, obj] : seen) {
    CensusEntry e;
    e.key = key;
    e.in_domain = in_balance_domain(obj);
    if (e.in_domain) e.balance = balance_of(obj);
    e.object = std::move(obj);
    c.entries.push_back(std::move(e));
  }
  return c;
}

std::vector<CountRow> count_table(int max_n, const EnumerateOptions& opts) {
  check_order(max_n);
  std::vector<CountRow> rows;
  std::size_t cumulative = 0;
  auto counts = [](const Census& c) {
    return CountRow::ClassCounts{c.size(), c.balanced(), c.unbalanced()};
  };
  for (int n = 0; n <= max_n; ++n) {
    CountRow row;
    row.n = n;
    row.split = counts(enumerate_split(n, opts));
    row.cover = counts(enumerate_cover(n, opts));
    row.xy = counts(enumerate_xy(n, true, opts));
    row.poset = counts(enumerate_poset(n, opts));
    row.xy_all = enumerate_xy(n, false, opts).size();
    row.cumulative = cumulative;
    cumulative += row.split.total;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace splitcomp
