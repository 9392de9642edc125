#include "splitcomp/biject.hpp"

#include <algorithm>
#include <array>

#include "splitcomp/classify.hpp"
#include "splitcomp/coverage.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"

namespace splitcomp {

using coverage::Op;
using coverage::touch;

namespace {

constexpr std::array<MapInfo, 22> kMaps = {{
    {MapId::split_to_cover, "split->cover", ClassTag::split, ClassTag::cover, MapId::cover_to_split, false, true},
    {MapId::cover_to_split, "cover->split", ClassTag::cover, ClassTag::split, MapId::split_to_cover, false, true},
    {MapId::split_to_xy, "split->xy", ClassTag::split, ClassTag::xy, MapId::xy_to_split, false, true},
    {MapId::xy_to_split, "xy->split", ClassTag::xy, ClassTag::split, MapId::split_to_xy, false, false},
    {MapId::split_to_poset, "split->poset", ClassTag::split, ClassTag::poset, MapId::poset_to_split, false, true},
    {MapId::poset_to_split, "poset->split", ClassTag::poset, ClassTag::split, MapId::split_to_poset, false, false},
    {MapId::xy_to_shift_split, "xy->split-shift", ClassTag::xy, ClassTag::split, MapId::shift_split_to_xy, false,
     false},
    {MapId::shift_split_to_xy, "split-shift->xy", ClassTag::split, ClassTag::xy, MapId::xy_to_shift_split, false,
     true},
    {MapId::cover_to_poset, "cover->poset", ClassTag::cover, ClassTag::poset, MapId::poset_to_cover, false, true},
    {MapId::poset_to_cover, "poset->cover", ClassTag::poset, ClassTag::cover, MapId::cover_to_poset, false, false},
    {MapId::xy_to_cover, "xy->cover", ClassTag::xy, ClassTag::cover, MapId::cover_to_xy, false, false},
    {MapId::cover_to_xy, "cover->xy", ClassTag::cover, ClassTag::xy, MapId::xy_to_cover, false, true},
    {MapId::xy_to_poset, "xy->poset", ClassTag::xy, ClassTag::poset, MapId::poset_to_xy, false, false},
    {MapId::poset_to_xy, "poset->xy", ClassTag::poset, ClassTag::xy, MapId::xy_to_poset, false, false},
    {MapId::compile_split_down, "compile-split-down", ClassTag::split, ClassTag::split, MapId::compile_split_up,
     false, true},
    {MapId::compile_split_up, "compile-split-up", ClassTag::split, ClassTag::split, MapId::compile_split_down, true,
     true},
    {MapId::compile_cover_down, "compile-cover-down", ClassTag::cover, ClassTag::cover, MapId::compile_cover_up,
     false, true},
    {MapId::compile_cover_up, "compile-cover-up", ClassTag::cover, ClassTag::cover, MapId::compile_cover_down, true,
     true},
    {MapId::compile_xy_down, "compile-xy-down", ClassTag::xy, ClassTag::xy, MapId::compile_xy_up, false, true},
    {MapId::compile_xy_up, "compile-xy-up", ClassTag::xy, ClassTag::xy, MapId::compile_xy_down, true, false},
    {MapId::compile_poset_down, "compile-poset-down", ClassTag::poset, ClassTag::poset, MapId::compile_poset_up,
     false, true},
    {MapId::compile_poset_up, "compile-poset-up", ClassTag::poset, ClassTag::poset, MapId::compile_poset_down, true,
     true},
}};

constexpr std::array<MapPair, 7> kPairs = {{
    {"split-cover", MapId::split_to_cover, MapId::cover_to_split, true},
    {"split-xy", MapId::split_to_xy, MapId::xy_to_split, true},
    {"split-poset", MapId::split_to_poset, MapId::poset_to_split, true},
    {"cover-poset", MapId::cover_to_poset, MapId::poset_to_cover, true},
    {"xy-cover", MapId::xy_to_cover, MapId::cover_to_xy, true},
    {"xy-poset", MapId::xy_to_poset, MapId::poset_to_xy, true},
    {"xy-shift", MapId::xy_to_shift_split, MapId::shift_split_to_xy, false},
}};

// ------------------------------------------------------------------ helpers

KSPartition choose_s_max(const Graph& g, Chooser& ch) {
  touch(Op::s_max_partition);
  const auto parts = s_max_partitions(g);
  return parts[ch.pick("s_max_partition", static_cast<int>(parts.size()))];
}

KSPartition choose_k_max(const Graph& g, Chooser& ch) {
  touch(Op::k_max_partition);
  const auto parts = k_max_partitions(g);
  return parts[ch.pick("k_max_partition", static_cast<int>(parts.size()))];
}

int choose_from(VertexSet candidates, std::string_view point, Chooser& ch) {
  const auto list = members(candidates);
  return list[ch.pick(point, static_cast<int>(list.size()))];
}

void require_split(const Graph& g) {
  if (!is_split(g)) throw DomainError("not a split graph");
}

void require_minimal(const SetCover& c) {
  if (!is_minimal(c)) throw DomainError("not minimal");
}

void require_no_y_isolates(const XYGraph& g) {
  if (xy_isolates_universals(g).isolates_in_y != 0) throw DomainError("Y has isolates");
}

void require_valid(const BipartitePoset& p) {
  const auto v = validate(p);
  if (!v.empty()) throw DomainError("invalid poset: " + v.front());
}

void require_smaller(int t, int n) {
  if (n > kMaxOrder) throw ResourceError("target order above 64");
  if (t >= n)
    throw DomainError("compile up needs an object on at most n-1 points (got " + std::to_string(t) + " points, n=" +
                      std::to_string(n) + ")");
}

// One loyal representative per set, picked in set order.
std::vector<int> choose_representatives(const SetCover& c, Chooser& ch) {
  const auto loyal = loyal_elements(c);
  std::vector<int> reps(c.set_count());
  for (int i = 0; i < c.set_count(); ++i)
    reps[i] = loyal[i][ch.pick("representative[" + std::to_string(i) + "]", static_cast<int>(loyal[i].size()))];
  return reps;
}

// Split graph on X ∪ Y (X first) with the matrix's cross edges and Y a clique.
Graph split_from_matrix(const BitMatrix& m) {
  const int nx = m.rows();
  const int ny = m.cols();
  Graph g(nx + ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (m.get(x, y)) g.add_edge(x, nx + y);
  g.make_clique(low_bits(nx + ny) & ~low_bits(nx));
  return g;
}

// Rows are the S side, columns the K side, entries the cross edges.
BitMatrix cross_matrix(const Graph& g, const KSPartition& p) {
  const auto s = members(p.stable);
  const auto k = members(p.clique);
  BitMatrix m(static_cast<int>(s.size()), static_cast<int>(k.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      if (g.adjacent(s[i], k[j])) m.set(static_cast<int>(i), static_cast<int>(j));
  return m;
}

// One set per row: the row's own element plus its columns (offset by rows).
SetCover cover_from_matrix(const BitMatrix& m) {
  std::vector<std::vector<int>> sets(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    sets[r].push_back(r);
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) sets[r].push_back(m.rows() + c);
  }
  return SetCover(m.rows() + m.cols(), std::move(sets));
}

// Representatives become rows, the remaining elements columns, entries
// co-membership.
BitMatrix matrix_from_cover(const SetCover& c, const std::vector<int>& reps) {
  std::vector<int> set_of_rep(c.ground_size(), -1);
  for (int i = 0; i < c.set_count(); ++i) set_of_rep[reps[i]] = i;
  std::vector<int> rows_order;
  std::vector<int> cols_order;
  for (int e = 0; e < c.ground_size(); ++e) (set_of_rep[e] >= 0 ? rows_order : cols_order).push_back(e);
  std::vector<int> col_of(c.ground_size(), -1);
  for (std::size_t j = 0; j < cols_order.size(); ++j) col_of[cols_order[j]] = static_cast<int>(j);
  BitMatrix m(static_cast<int>(rows_order.size()), static_cast<int>(cols_order.size()));
  for (std::size_t r = 0; r < rows_order.size(); ++r)
    for (int e : c.set(set_of_rep[rows_order[r]]))
      if (col_of[e] >= 0) m.set(static_cast<int>(r), col_of[e]);
  return m;
}

}  // namespace

std::span<const MapInfo> all_maps() { return kMaps; }

const MapInfo& map_info(MapId id) {
  for (const auto& m : kMaps)
    if (m.id == id) return m;
  throw std::logic_error("unknown map id");
}

MapId parse_map_name(std::string_view name) {
  for (const auto& m : kMaps)
    if (m.name == name) return m.id;
  throw UsageError("unknown map '" + std::string(name) + "'");
}

std::span<const MapPair> bijection_pairs() { return kPairs; }

const MapPair& parse_pair_name(std::string_view name) {
  for (const auto& p : kPairs)
    if (p.name == name) return p;
  throw UsageError("unknown map pair '" + std::string(name) + "'");
}

MapId compile_down_map(ClassTag tag) {
  switch (tag) {
    case ClassTag::split: return MapId::compile_split_down;
    case ClassTag::cover: return MapId::compile_cover_down;
    case ClassTag::xy: return MapId::compile_xy_down;
    case ClassTag::poset: return MapId::compile_poset_down;
  }
  throw std::logic_error("bad class tag");
}

MapId compile_up_map(ClassTag tag) { return map_info(compile_down_map(tag)).inverse; }

namespace construct {

SetCover split_to_cover(const Graph& g, Chooser& ch) {
  touch(Op::split_to_cover);
  require_split(g);
  const KSPartition p = choose_s_max(g, ch);
  std::vector<std::vector<int>> sets;
  for (int s : members(p.stable)) sets.push_back(members(g.neighbors(s) | bit(s)));
  return SetCover(g.order(), std::move(sets));
}

Graph cover_to_split(const SetCover& c, Chooser& ch) {
  touch(Op::cover_to_split);
  require_minimal(c);
  const auto reps = choose_representatives(c, ch);
  Graph g(c.ground_size());
  for (const auto& s : c.sets()) g.make_clique(make_set(s));
  g.make_clique(g.all() & ~make_set(reps));
  return g;
}

XYGraph split_to_xy(const Graph& g, Chooser& ch) {
  touch(Op::split_to_xy);
  require_split(g);
  return XYGraph(cross_matrix(g, choose_s_max(g, ch)));
}

Graph xy_to_split(const XYGraph& h) {
  touch(Op::xy_to_split);
  require_no_y_isolates(h);
  return split_from_matrix(h.incidence());
}

BipartitePoset split_to_poset(const Graph& g, Chooser& ch) {
  touch(Op::split_to_poset);
  require_split(g);
  return BipartitePoset(cross_matrix(g, choose_s_max(g, ch)));
}

Graph poset_to_split(const BipartitePoset& p) {
  touch(Op::poset_to_split);
  require_valid(p);
  return split_from_matrix(p.relation());
}

Graph xy_to_unbalanced_split(const XYGraph& g) {
  touch(Op::xy_to_unbalanced_split);
  // The new vertex v = n joins Y in the clique and has no X-neighbour.
  BitMatrix m(g.nx(), g.ny() + 1);
  for (int x = 0; x < g.nx(); ++x)
    for (int y = 0; y < g.ny(); ++y)
      if (g.edge(x, y)) m.set(x, y);
  return split_from_matrix(m);
}

XYGraph unbalanced_split_to_xy(const Graph& h, Chooser& ch) {
  touch(Op::unbalanced_split_to_xy);
  require_split(h);
  if (!balance_split(h).unbalanced()) throw DomainError("balanced input: no swing vertex to remove");
  const KSPartition p = choose_k_max(h, ch);
  const int v = choose_from(swing_vertices(h, p), "swing", ch);
  return XYGraph(cross_matrix(h, {p.clique & ~bit(v), p.stable}));
}

BipartitePoset cover_to_poset(const SetCover& c, Chooser& ch) {
  touch(Op::cover_to_poset);
  require_minimal(c);
  return BipartitePoset(matrix_from_cover(c, choose_representatives(c, ch)));
}

SetCover poset_to_cover(const BipartitePoset& p) {
  touch(Op::poset_to_cover);
  require_valid(p);
  return cover_from_matrix(p.relation());
}

SetCover xy_to_cover(const XYGraph& g) {
  touch(Op::xy_to_cover);
  require_no_y_isolates(g);
  return cover_from_matrix(g.incidence());
}

XYGraph cover_to_xy(const SetCover& c, Chooser& ch) {
  touch(Op::cover_to_xy);
  require_minimal(c);
  return XYGraph(matrix_from_cover(c, choose_representatives(c, ch)));
}

BipartitePoset xy_to_poset(const XYGraph& g) {
  touch(Op::xy_to_poset);
  require_no_y_isolates(g);
  return BipartitePoset(g.incidence());
}

XYGraph poset_to_xy(const BipartitePoset& p) {
  touch(Op::poset_to_xy);
  require_valid(p);
  return XYGraph(p.relation());
}

Graph compile_split_down(const Graph& g, Chooser& ch) {
  touch(Op::compile_split_down);
  require_split(g);
  if (!balance_split(g).unbalanced()) throw DomainError("balanced input: compile down needs a swing vertex");
  const KSPartition p = choose_s_max(g, ch);
  const int s = choose_from(swing_vertices(g, p), "swing", ch);
  const VertexSet rest = p.stable & ~bit(s);
  VertexSet kept_k = 0;
  for (int k : members(p.clique))
    if ((g.neighbors(k) & rest) != 0) kept_k |= bit(k);
  return g.induced(members(kept_k | rest));
}

Graph compile_split_up(const Graph& h, int n, Chooser& ch) {
  touch(Op::compile_split_up);
  require_split(h);
  const int t = h.order();
  require_smaller(t, n);
  const KSPartition p = choose_s_max(h, ch);
  Graph g(n);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  const int s = t;
  const VertexSet padding = low_bits(n) & ~low_bits(t + 1);
  const VertexSet clique = p.clique | padding;
  g.make_clique(clique);
  for (int k : members(clique)) g.add_edge(s, k);
  return g;
}

SetCover compile_cover_down(const SetCover& c, Chooser& ch) {
  touch(Op::compile_cover_down);
  require_minimal(c);
  const auto ext = extremal_sets(c);
  if (ext.empty()) throw DomainError("balanced input: no set of size |V|-|C|+1");
  const int y = ext[ch.pick("extremal_set", static_cast<int>(ext.size()))];
  const VertexSet only_in_y = make_set(loyal_elements(c)[y]);
  std::vector<int> relabel(c.ground_size(), -1);
  int next = 0;
  for (int e = 0; e < c.ground_size(); ++e)
    if (!contains(only_in_y, e)) relabel[e] = next++;
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < c.set_count(); ++i) {
    if (i == y) continue;
    std::vector<int> s;
    for (int e : c.set(i)) s.push_back(relabel[e]);
    sets.push_back(std::move(s));
  }
  return SetCover(next, std::move(sets));
}

SetCover compile_cover_up(const SetCover& c, int n, Chooser& ch) {
  touch(Op::compile_cover_up);
  require_minimal(c);
  const int t = c.ground_size();
  require_smaller(t, n);
  const auto reps = choose_representatives(c, ch);
  const VertexSet designated = make_set(reps);
  std::vector<int> y;
  for (int e = 0; e < t; ++e)
    if (!contains(designated, e)) y.push_back(e);
  for (int e = t; e < n; ++e) y.push_back(e);
  auto sets = c.sets();
  sets.push_back(std::move(y));
  return SetCover(n, std::move(sets));
}

XYGraph compile_xy_down(const XYGraph& g, Chooser& ch) {
  touch(Op::compile_xy_down);
  require_no_y_isolates(g);
  const VertexSet universals = xy_isolates_universals(g).universals_in_x;
  if (universals == 0) throw DomainError("balanced input: no universal vertex in X");
  const int u = choose_from(universals, "universal", ch);
  std::vector<int> xs;
  for (int x = 0; x < g.nx(); ++x)
    if (x != u) xs.push_back(x);
  std::vector<int> ys;
  for (int y = 0; y < g.ny(); ++y)
    if (std::any_of(xs.begin(), xs.end(), [&](int x) { return g.edge(x, y); })) ys.push_back(y);
  XYGraph h(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (g.edge(xs[i], ys[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

XYGraph compile_xy_up(const XYGraph& h, int n) {
  touch(Op::compile_xy_up);
  require_no_y_isolates(h);
  const int t = h.order();
  require_smaller(t, n);
  const int ny = h.ny() + (n - 1 - t);
  XYGraph g(h.nx() + 1, ny);
  for (int x = 0; x < h.nx(); ++x)
    for (int y = 0; y < h.ny(); ++y)
      if (h.edge(x, y)) g.add_edge(x, y);
  for (int y = 0; y < ny; ++y) g.add_edge(h.nx(), y);
  return g;
}

BipartitePoset compile_poset_down(const BipartitePoset& p, Chooser& ch) {
  touch(Op::compile_poset_down);
  require_valid(p);
  const auto sup = poset_support(p);
  if (sup.full == 0) throw DomainError("balanced input: no full support point");
  const auto partial = members(sup.partial);
  VertexSet demotable = 0;
  for (int h = 0; h < p.n1(); ++h)
    if (std::none_of(partial.begin(), partial.end(), [&](int x) { return p.below(x, h); })) demotable |= bit(h);

  if (demotable == 0) {
    BipartitePoset q(static_cast<int>(partial.size()), p.n1());
    for (std::size_t i = 0; i < partial.size(); ++i)
      for (int h = 0; h < p.n1(); ++h)
        if (p.below(partial[i], h)) q.add_relation(static_cast<int>(i), h);
    return q;
  }
  // Demote u: it drops its old comparabilities and goes below every other
  // height-1 point.
  const int u = choose_from(demotable, "demoted_point", ch);
  std::vector<int> highs;
  for (int h = 0; h < p.n1(); ++h)
    if (h != u) highs.push_back(h);
  const int rows = static_cast<int>(partial.size()) + 1;
  BipartitePoset q(rows, static_cast<int>(highs.size()));
  for (std::size_t i = 0; i < partial.size(); ++i)
    for (std::size_t j = 0; j < highs.size(); ++j)
      if (p.below(partial[i], highs[j])) q.add_relation(static_cast<int>(i), static_cast<int>(j));
  for (std::size_t j = 0; j < highs.size(); ++j) q.add_relation(rows - 1, static_cast<int>(j));
  return q;
}

BipartitePoset compile_poset_up(const BipartitePoset& q, int n, Chooser& ch) {
  touch(Op::compile_poset_up);
  require_valid(q);
  const int t = q.order();
  require_smaller(t, n);
  const int added = n - t;
  const auto sup = poset_support(q);
  if (sup.full == 0) {
    BipartitePoset p(q.n0() + added, q.n1());
    for (int x = 0; x < q.n0(); ++x)
      for (int h = 0; h < q.n1(); ++h)
        if (q.below(x, h)) p.add_relation(x, h);
    for (int x = q.n0(); x < q.n0() + added; ++x)
      for (int h = 0; h < q.n1(); ++h) p.add_relation(x, h);
    return p;
  }
  // Promote v to height 1, directly above the new points only.
  const int v = choose_from(sup.full, "promoted_point", ch);
  std::vector<int> lows;
  for (int x = 0; x < q.n0(); ++x)
    if (x != v) lows.push_back(x);
  const int n0 = static_cast<int>(lows.size()) + added;
  const int n1 = q.n1() + 1;
  BipartitePoset p(n0, n1);
  for (std::size_t i = 0; i < lows.size(); ++i)
    for (int h = 0; h < q.n1(); ++h)
      if (q.below(lows[i], h)) p.add_relation(static_cast<int>(i), h);
  for (int x = static_cast<int>(lows.size()); x < n0; ++x)
    for (int h = 0; h < n1; ++h) p.add_relation(x, h);
  return p;
}

Object apply(MapId id, const Object& in, Chooser& ch, int target_order) {
  const MapInfo& info = map_info(id);
  if (class_of(in) != info.from)
    throw UsageError("map " + std::string(info.name) + " expects a " + std::string(to_string(info.from)) +
                     " object, got " + std::string(to_string(class_of(in))));
  if (info.takes_target_order && target_order < 0)
    throw UsageError("map " + std::string(info.name) + " needs a target order n");
  switch (id) {
    case MapId::split_to_cover: return construct::split_to_cover(std::get<Graph>(in), ch);
    case MapId::cover_to_split: return construct::cover_to_split(std::get<SetCover>(in), ch);
    case MapId::split_to_xy: return construct::split_to_xy(std::get<Graph>(in), ch);
    case MapId::xy_to_split: return construct::xy_to_split(std::get<XYGraph>(in));
    case MapId::split_to_poset: return construct::split_to_poset(std::get<Graph>(in), ch);
    case MapId::poset_to_split: return construct::poset_to_split(std::get<BipartitePoset>(in));
    case MapId::xy_to_shift_split: return construct::xy_to_unbalanced_split(std::get<XYGraph>(in));
    case MapId::shift_split_to_xy: return construct::unbalanced_split_to_xy(std::get<Graph>(in), ch);
    case MapId::cover_to_poset: return construct::cover_to_poset(std::get<SetCover>(in), ch);
    case MapId::poset_to_cover: return construct::poset_to_cover(std::get<BipartitePoset>(in));
    case MapId::xy_to_cover: return construct::xy_to_cover(std::get<XYGraph>(in));
    case MapId::cover_to_xy: return construct::cover_to_xy(std::get<SetCover>(in), ch);
    case MapId::xy_to_poset: return construct::xy_to_poset(std::get<XYGraph>(in));
    case MapId::poset_to_xy: return construct::poset_to_xy(std::get<BipartitePoset>(in));
    case MapId::compile_split_down: return construct::compile_split_down(std::get<Graph>(in), ch);
    case MapId::compile_split_up: return construct::compile_split_up(std::get<Graph>(in), target_order, ch);
    case MapId::compile_cover_down: return construct::compile_cover_down(std::get<SetCover>(in), ch);
    case MapId::compile_cover_up: return construct::compile_cover_up(std::get<SetCover>(in), target_order, ch);
    case MapId::compile_xy_down: return construct::compile_xy_down(std::get<XYGraph>(in), ch);
    case MapId::compile_xy_up: return construct::compile_xy_up(std::get<XYGraph>(in), target_order);
    case MapId::compile_poset_down: return construct::compile_poset_down(std::get<BipartitePoset>(in), ch);
    case MapId::compile_poset_up: return construct::compile_poset_up(std::get<BipartitePoset>(in), target_order, ch);
  }
  throw std::logic_error("unhandled map id");
}

}  // namespace construct

Mapped<Object> apply_map(MapId id, const Object& in, Chooser& ch, int target_order) {
  Canonical input = canonicalize(in);
  Object raw = construct::apply(id, input.object, ch, target_order);
  Canonical output = canonicalize(raw);
  return {std::move(output.object), {std::move(input.key), std::move(output.key), ch.log()}};
}

Mapped<Object> apply_map(MapId id, const Object& in, int target_order) {
  Chooser ch;
  return apply_map(id, in, ch, target_order);
}

std::vector<CanonicalKey> sweep_choices(MapId id, const Object& in, int target_order) {
  const Object input = canonical_form(in);
  std::vector<CanonicalKey> keys;
  Chooser ch;
  do {
    keys.push_back(canon_key(construct::apply(id, input, ch, target_order)));
  } while (ch.advance());
  return keys;
}

namespace {

template <class T, class In>
Mapped<T> typed(MapId id, const In& in, int target_order = -1) {
  auto m = apply_map(id, Object(in), target_order);
  return {std::get<T>(std::move(m.object)), std::move(m.report)};
}

}  // namespace

Mapped<SetCover> split_to_cover(const Graph& g) { return typed<SetCover>(MapId::split_to_cover, g); }
Mapped<Graph> cover_to_split(const SetCover& c) { return typed<Graph>(MapId::cover_to_split, c); }
Mapped<XYGraph> split_to_xy(const Graph& g) { return typed<XYGraph>(MapId::split_to_xy, g); }
Mapped<Graph> xy_to_split(const XYGraph& h) { return typed<Graph>(MapId::xy_to_split, h); }
Mapped<BipartitePoset> split_to_poset(const Graph& g) { return typed<BipartitePoset>(MapId::split_to_poset, g); }
Mapped<Graph> poset_to_split(const BipartitePoset& p) { return typed<Graph>(MapId::poset_to_split, p); }
Mapped<Graph> xy_to_unbalanced_split(const XYGraph& g) { return typed<Graph>(MapId::xy_to_shift_split, g); }
Mapped<XYGraph> unbalanced_split_to_xy(const Graph& h) { return typed<XYGraph>(MapId::shift_split_to_xy, h); }
Mapped<BipartitePoset> cover_to_poset(const SetCover& c) { return typed<BipartitePoset>(MapId::cover_to_poset, c); }
Mapped<SetCover> poset_to_cover(const BipartitePoset& p) { return typed<SetCover>(MapId::poset_to_cover, p); }
Mapped<SetCover> xy_to_cover(const XYGraph& g) { return typed<SetCover>(MapId::xy_to_cover, g); }
Mapped<XYGraph> cover_to_xy(const SetCover& c) { return typed<XYGraph>(MapId::cover_to_xy, c); }
Mapped<BipartitePoset> xy_to_poset(const XYGraph& g) { return typed<BipartitePoset>(MapId::xy_to_poset, g); }
Mapped<XYGraph> poset_to_xy(const BipartitePoset& p) { return typed<XYGraph>(MapId::poset_to_xy, p); }
Mapped<Graph> compile_split_down(const Graph& g) { return typed<Graph>(MapId::compile_split_down, g); }
Mapped<Graph> compile_split_up(const Graph& h, int n) { return typed<Graph>(MapId::compile_split_up, h, n); }
Mapped<SetCover> compile_cover_down(const SetCover& c) { return typed<SetCover>(MapId::compile_cover_down, c); }
Mapped<SetCover> compile_cover_up(const SetCover& c, int n) {
  return typed<SetCover>(MapId::compile_cover_up, c, n);
}
Mapped<XYGraph> compile_xy_down(const XYGraph& g) { return typed<XYGraph>(MapId::compile_xy_down, g); }
Mapped<XYGraph> compile_xy_up(const XYGraph& h, int n) { return typed<XYGraph>(MapId::compile_xy_up, h, n); }
Mapped<BipartitePoset> compile_poset_down(const BipartitePoset& p) {
  return typed<BipartitePoset>(MapId::compile_poset_down, p);
}
Mapped<BipartitePoset> compile_poset_up(const BipartitePoset& q, int n) {
  return typed<BipartitePoset>(MapId::compile_poset_up, q, n);
}

}  // namespace splitcomp
