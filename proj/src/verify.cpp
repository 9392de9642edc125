#include "splitcomp/verify.hpp"

#include <algorithm>
#include <set>

#include "internal/parallel.hpp"
#include "splitcomp/classify.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"

namespace splitcomp {

using json = nlohmann::ordered_json;

json SuiteResult::to_json() const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  j["checked"] = checked;
  j["asserting"] = asserting;
  j["passed"] = passed();
  json fs = json::array();
  for (const auto& f : failures)
    fs.push_back({{"input", f.input}, {"object", f.object}, {"expectation", f.expectation}, {"observed", f.observed}});
  j["failures"] = std::move(fs);
  if (!details.is_null()) j["details"] = details;
  return j;
}

namespace {

using Failures = std::vector<SuiteFailure>;

void fail(Failures& out, const CensusEntry& e, std::string expectation, std::string observed) {
  out.push_back({e.key.hex(), serialize_line(e.object), std::move(expectation), std::move(observed)});
}

void fail_census(Failures& out, std::string where, std::string expectation, std::string observed) {
  out.push_back({std::move(where), "", std::move(expectation), std::move(observed)});
}

// Runs `check` over the entries in parallel and appends results in entry
// order. `check` returns how many properties it examined.
template <class Check>
void check_all(const std::vector<const CensusEntry*>& items, int workers, SuiteResult& r, Check check) {
  std::vector<Failures> found(items.size());
  std::vector<std::size_t> counts(items.size(), 0);
  detail::parallel_for(items.size(), workers, [&](std::size_t i) {
    try {
      counts[i] = check(*items[i], found[i]);
    } catch (const std::exception& ex) {
      counts[i] = 1;
      fail(found[i], *items[i], "no error", std::string("error: ") + ex.what());
    }
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    r.checked += counts[i];
    for (auto& f : found[i]) r.failures.push_back(std::move(f));
  }
}

std::vector<const CensusEntry*> all_of(const Census& c) {
  std::vector<const CensusEntry*> out;
  for (const auto& e : c.entries) out.push_back(&e);
  return out;
}

std::vector<const CensusEntry*> unbalanced_of(const Census& c) {
  std::vector<const CensusEntry*> out;
  for (const auto& e : c.entries)
    if (e.in_domain && e.balance.unbalanced()) out.push_back(&e);
  return out;
}

std::set<CanonicalKey> key_set(const std::vector<const CensusEntry*>& items) {
  std::set<CanonicalKey> out;
  for (const auto* e : items) out.insert(e->key);
  return out;
}

std::string short_key(const CanonicalKey& k) { return k.hex(); }

std::string balance_name(const Balance& b) { return std::string(to_string(b.value)); }

// Domain census and item list for the source side of `id` at n.
struct Side {
  Census census;
  std::vector<const CensusEntry*> items;
};

Side side_for(MapId id, int n, const EnumerateOptions& eo) {
  Side s;
  if (id == MapId::xy_to_shift_split) {
    s.census = enumerate_xy(n, false, eo);
    s.items = all_of(s.census);
  } else if (id == MapId::shift_split_to_xy) {
    s.census = enumerate_split(n + 1, eo);
    s.items = unbalanced_of(s.census);
  } else {
    s.census = enumerate_domain(map_info(id).from, n, eo);
    s.items = all_of(s.census);
  }
  return s;
}

int roundtrip_bound(const MapPair& pair, int max_n) {
  return pair.forward == MapId::xy_to_shift_split ? std::min(max_n, kMaxEnumerationOrder - 1) : max_n;
}

// Structural facts about split graphs that the balance of the bijections
// rests on: omega + alpha = n exactly when balanced, the S-max partition's
// trichotomy case, and loyalty of every S-vertex.
std::size_t split_structure(const CensusEntry& e, Failures& out) {
  const Graph& g = std::get<Graph>(e.object);
  const auto oa = omega_alpha(g);
  const bool balanced = !e.balance.unbalanced();
  if ((oa.omega + oa.alpha == g.order()) != balanced)
    fail(out, e, "omega + alpha = n iff balanced",
         "omega=" + std::to_string(oa.omega) + " alpha=" + std::to_string(oa.alpha) + " " + balance_name(e.balance));
  const KSPartition p = s_max_partition(g);
  const auto tri = trichotomy(g, p);
  const auto expected = balanced ? Trichotomy::balanced : Trichotomy::unbalanced_s_max;
  if (tri.trichotomy_case != expected || (!balanced && !tri.swing))
    fail(out, e, std::string("S-max partition in case ") + std::string(to_string(expected)),
         std::string(to_string(tri.trichotomy_case)));
  if ((p.stable & ~loyal_vertices_split(g)) != 0) fail(out, e, "every S-vertex loyal", "S-vertex in two cliques");
  return 3;
}

}  // namespace

SuiteResult verify_roundtrip(const MapPair& pair, int max_n, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "roundtrip";
  const int bound = roundtrip_bound(pair, max_n);
  r.params = {{"pair", pair.name}, {"max_n", bound}};
  const EnumerateOptions eo{opts.workers};
  for (int n = 0; n <= bound; ++n) {
    Side a = side_for(pair.forward, n, eo);
    Side b = side_for(pair.inverse, n, eo);
    if (a.items.size() != b.items.size())
      fail_census(r.failures, "n=" + std::to_string(n), "equal census sizes " + std::to_string(a.items.size()),
                  std::to_string(b.items.size()));
    const auto a_keys = key_set(a.items);
    const auto b_keys = key_set(b.items);
    auto there_and_back = [&](MapId there, MapId back, const std::set<CanonicalKey>& codomain) {
      const std::set<CanonicalKey>* targets = &codomain;
      return [there, back, targets](const CensusEntry& e, Failures& out) -> std::size_t {
        const auto image = apply_map(there, e.object);
        if (!targets->contains(image.report.output_key))
          fail(out, e, std::string(map_info(there).name) + " lands in the codomain census",
               short_key(image.report.output_key));
        const auto home = apply_map(back, image.object);
        if (home.report.output_key != e.key)
          fail(out, e, "inverse returns the input key", short_key(home.report.output_key));
        return 2;
      };
    };
    check_all(a.items, opts.workers, r, there_and_back(pair.forward, pair.inverse, b_keys));
    check_all(b.items, opts.workers, r, there_and_back(pair.inverse, pair.forward, a_keys));
  }
  return r;
}

SuiteResult verify_balance(const MapPair& pair, int max_n, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "balance";
  r.params = {{"pair", pair.name}, {"max_n", max_n}};
  if (!pair.balance_preserving) throw UsageError("pair " + std::string(pair.name) + " does not preserve balance");
  const EnumerateOptions eo{opts.workers};
  for (int n = 0; n <= max_n; ++n) {
    for (MapId id : {pair.forward, pair.inverse}) {
      Side s = side_for(id, n, eo);
      check_all(s.items, opts.workers, r, [&](const CensusEntry& e, Failures& out) -> std::size_t {
        const auto image = apply_map(id, e.object);
        const Balance after = balance_of(image.object);
        if (after.value != e.balance.value)
          fail(out, e, std::string(map_info(id).name) + " keeps balance " + balance_name(e.balance),
               balance_name(after));
        std::size_t checked = 1;
        if (class_of(e.object) == ClassTag::split && id == pair.forward) checked += split_structure(e, out);
        return checked;
      });
    }
  }
  return r;
}

SuiteResult verify_compilation(ClassTag tag, int max_n, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "compilation";
  r.params = {{"class", to_string(tag)}, {"max_n", max_n}};
  const EnumerateOptions eo{opts.workers};
  const MapId down = compile_down_map(tag);
  const MapId up = compile_up_map(tag);

  std::vector<Census> censuses;
  for (int n = 0; n <= max_n; ++n) censuses.push_back(enumerate_domain(tag, n, eo));

  json sizes = json::array();
  for (int n = 1; n <= max_n; ++n) {
    const auto unbalanced = unbalanced_of(censuses[n]);
    std::vector<const CensusEntry*> smaller;
    for (int t = 0; t < n; ++t)
      for (const auto* e : all_of(censuses[t])) smaller.push_back(e);
    sizes.push_back({{"n", n}, {"unbalanced", unbalanced.size()}, {"cumulative", smaller.size()}});
    if (unbalanced.size() != smaller.size())
      fail_census(r.failures, "n=" + std::to_string(n),
                  "unbalanced(n) = sum of totals below n = " + std::to_string(smaller.size()),
                  std::to_string(unbalanced.size()));
    const auto unbalanced_keys = key_set(unbalanced);
    const auto smaller_keys = key_set(smaller);

    std::vector<CanonicalKey> images(unbalanced.size());
    std::vector<const CensusEntry*> indexed = unbalanced;
    std::vector<Failures> found(indexed.size());
    std::vector<std::size_t> counts(indexed.size(), 0);
    detail::parallel_for(indexed.size(), opts.workers, [&](std::size_t i) {
      const CensusEntry& e = *indexed[i];
      try {
        const auto d = apply_map(down, e.object);
        images[i] = d.report.output_key;
        if (order_of(d.object) >= n)
          fail(found[i], e, "down image has fewer than n points", std::to_string(order_of(d.object)));
        if (!smaller_keys.contains(d.report.output_key))
          fail(found[i], e, "down image in the census below n", short_key(d.report.output_key));
        const auto back = apply_map(up, d.object, n);
        if (back.report.output_key != e.key)
          fail(found[i], e, "up(down(o)) = o", short_key(back.report.output_key));
        counts[i] = 3;
      } catch (const std::exception& ex) {
        counts[i] = 1;
        fail(found[i], e, "no error", std::string("error: ") + ex.what());
      }
    });
    for (std::size_t i = 0; i < indexed.size(); ++i) {
      r.checked += counts[i];
      for (auto& f : found[i]) r.failures.push_back(std::move(f));
    }
    std::vector<CanonicalKey> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail_census(r.failures, "n=" + std::to_string(n), "down is injective", "two inputs share an image");
    ++r.checked;

    check_all(smaller, opts.workers, r, [&](const CensusEntry& e, Failures& out) -> std::size_t {
      const auto u = apply_map(up, e.object, n);
      if (order_of(u.object) != n)
        fail(out, e, "up image has exactly n=" + std::to_string(n) + " points", std::to_string(order_of(u.object)));
      if (!balance_of(u.object).unbalanced()) fail(out, e, "up image unbalanced", "balanced");
      if (!unbalanced_keys.contains(u.report.output_key))
        fail(out, e, "up image in the unbalanced census", short_key(u.report.output_key));
      const auto back = apply_map(down, u.object);
      if (back.report.output_key != e.key) fail(out, e, "down(up(o)) = o", short_key(back.report.output_key));
      return 4;
    });
  }
  r.details = {{"sizes", sizes}};
  return r;
}

SuiteResult verify_choice_independence(MapId id, int max_n, const VerifyOptions& opts) {
  const MapInfo& info = map_info(id);
  SuiteResult r;
  r.suite = "choice";
  r.params = {{"map", info.name}, {"max_n", max_n}};
  const EnumerateOptions eo{opts.workers};

  auto sweep = [&](int target) {
    return [&, target](const CensusEntry& e, Failures& out) -> std::size_t {
      const auto keys = sweep_choices(id, e.object, target);
      for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i] != keys[0]) {
          fail(out, e, "choice sequence " + std::to_string(i) + " gives the default key " + keys[0].hex(),
               keys[i].hex());
          break;
        }
      return keys.size();
    };
  };

  if (info.takes_target_order) {
    std::vector<Census> censuses;
    for (int t = 0; t < max_n; ++t) censuses.push_back(enumerate_domain(info.from, t, eo));
    for (int n = 1; n <= max_n; ++n)
      for (int t = 0; t < n; ++t) check_all(all_of(censuses[t]), opts.workers, r, sweep(n));
    return r;
  }
  const bool needs_unbalanced =
      id == MapId::compile_split_down || id == MapId::compile_cover_down || id == MapId::compile_xy_down ||
      id == MapId::compile_poset_down;
  const int bound = id == MapId::shift_split_to_xy ? std::min(max_n, kMaxEnumerationOrder - 1) : max_n;
  for (int n = 0; n <= bound; ++n) {
    if (needs_unbalanced) {
      const Census c = enumerate_domain(info.from, n, eo);
      check_all(unbalanced_of(c), opts.workers, r, sweep(-1));
    } else {
      Side s = side_for(id, n, eo);
      check_all(s.items, opts.workers, r, sweep(-1));
    }
  }
  return r;
}

SuiteResult verify_counts(int max_n, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "counts";
  r.params = {{"max_n", max_n}};
  const auto table = count_table(max_n, {opts.workers});
  constexpr int kSeqLen = static_cast<int>(std::size(kUnbalancedSplitSequence));
  auto check = [&](const std::string& where, const std::string& what, std::size_t expected, std::size_t observed) {
    ++r.checked;
    if (expected != observed)
      fail_census(r.failures, where, what + " = " + std::to_string(expected), std::to_string(observed));
  };
  auto unbalanced_at = [&](int n) -> std::size_t { return n == 0 ? 0 : kUnbalancedSplitSequence[n - 1]; };

  json rows = json::array();
  for (const auto& row : table) {
    const int n = row.n;
    const std::string where = "n=" + std::to_string(n);
    if (n >= 1 && n <= kSeqLen) check(where, "unbalanced split graphs", kUnbalancedSplitSequence[n - 1], row.split.unbalanced);
    if (n + 1 <= kSeqLen) {
      check(where, "split graphs (sequence difference)", unbalanced_at(n + 1) - unbalanced_at(n), row.split.total);
      check(where, "XY-graphs (shift of the sequence)", unbalanced_at(n + 1), row.xy_all);
    }
    if (n >= 1) check(where, "cumulative split total below n", row.cumulative, row.split.unbalanced);
    for (const auto* other : {&row.cover, &row.xy, &row.poset}) {
      check(where, "total matches split", row.split.total, other->total);
      check(where, "balanced matches split", row.split.balanced, other->balanced);
      check(where, "unbalanced matches split", row.split.unbalanced, other->unbalanced);
    }
    if (n == 3) check(where, "XY-graphs on three vertices", 8, row.xy_all);
    rows.push_back({{"n", n},
                    {"split", row.split.total},
                    {"split_balanced", row.split.balanced},
                    {"split_unbalanced", row.split.unbalanced},
                    {"cover", row.cover.total},
                    {"poset", row.poset.total},
                    {"xy", row.xy.total},
                    {"xy_all", row.xy_all},
                    {"cumulative", row.cumulative}});
  }
  r.details = {{"table", rows}};
  return r;
}

SuiteResult verify_triangle(int max_n, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "triangle";
  r.params = {{"max_n", max_n}};
  r.asserting = false;
  json per_n = json::array();
  std::size_t agree_total = 0;
  std::size_t total = 0;
  for (int n = 0; n <= max_n; ++n) {
    const Census c = enumerate_split(n, {opts.workers});
    std::vector<char> agree(c.size(), 0);
    detail::parallel_for(c.size(), opts.workers, [&](std::size_t i) {
      const Object& g = c.entries[i].object;
      const auto direct = apply_map(MapId::split_to_poset, g);
      const auto cover = apply_map(MapId::split_to_cover, g);
      const auto via = apply_map(MapId::cover_to_poset, cover.object);
      agree[i] = direct.report.output_key == via.report.output_key;
    });
    const auto a = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
    per_n.push_back({{"n", n}, {"objects", c.size()}, {"agree", a}});
    agree_total += a;
    total += c.size();
  }
  r.checked = total;
  r.details = {{"per_n", per_n},
               {"agree", agree_total},
               {"objects", total},
               {"percent", total == 0 ? 100.0 : 100.0 * static_cast<double>(agree_total) / static_cast<double>(total)}};
  return r;
}

std::vector<SuiteResult> run_suite(std::string_view name, int max_n, const VerifyOptions& opts) {
  if (max_n < 0) throw UsageError("max-n must be non-negative");
  if (max_n > kMaxEnumerationOrder)
    throw ResourceError("max-n=" + std::to_string(max_n) + " is above the supported bound " +
                        std::to_string(kMaxEnumerationOrder));
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "roundtrip") {
    known = true;
    for (const auto& p : bijection_pairs()) out.push_back(verify_roundtrip(p, max_n, opts));
  }
  if (all || name == "balance") {
    known = true;
    for (const auto& p : bijection_pairs())
      if (p.balance_preserving) out.push_back(verify_balance(p, max_n, opts));
  }
  if (all || name == "compilation") {
    known = true;
    for (ClassTag t : {ClassTag::split, ClassTag::cover, ClassTag::xy, ClassTag::poset})
      out.push_back(verify_compilation(t, max_n, opts));
  }
  if (all || name == "choice") {
    known = true;
    for (const auto& m : all_maps()) out.push_back(verify_choice_independence(m.id, max_n, opts));
  }
  if (all || name == "counts") {
    known = true;
    out.push_back(verify_counts(max_n, opts));
  }
  if (name == "triangle") {
    known = true;
    out.push_back(verify_triangle(max_n, opts));
  }
  if (!known) throw UsageError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace splitcomp
