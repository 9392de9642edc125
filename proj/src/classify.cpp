#include "splitcomp/classify.hpp"

#include <algorithm>
#include <numeric>

#include "splitcomp/coverage.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"

namespace splitcomp {

using coverage::Op;
using coverage::touch;

namespace {

// Vertices ordered by degree descending, ties by id.
std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

int clique_index(const Graph& g, const std::vector<int>& order) {
  int m = 0;
  for (int i = 0; i < g.order(); ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  return m;
}

bool degree_criterion(const Graph& g) {
  const auto order = degree_order(g);
  const int m = clique_index(g, order);
  long head = 0;
  long tail = 0;
  for (int i = 0; i < g.order(); ++i) (i < m ? head : tail) += g.degree(order[i]);
  return head == static_cast<long>(m) * (m - 1) + tail;
}

void require_split(const Graph& g) {
  if (!degree_criterion(g)) throw DomainError("not a split graph");
}

bool is_partition_of(const Graph& g, VertexSet clique) {
  const VertexSet stable = g.all() & ~clique;
  for (int v : members(clique))
    if ((clique & ~g.neighbors(v) & ~bit(v)) != 0) return false;
  for (int v : members(stable))
    if ((g.neighbors(v) & stable) != 0) return false;
  return true;
}

// The K-side of the degree partition: the m highest-degree vertices form a
// clique and the rest a stable set whenever the degree criterion holds.
VertexSet degree_clique(const Graph& g) {
  const auto order = degree_order(g);
  const int m = clique_index(g, order);
  VertexSet k = 0;
  for (int i = 0; i < m; ++i) k |= bit(order[i]);
  return k;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : members(p | x)) {
    const int c = count(p & g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : members(p & ~g.neighbors(pivot))) {
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::optional<int> least(VertexSet s) {
  if (s == 0) return std::nullopt;
  return std::countr_zero(s);
}

void require_cover(const SetCover& c) {
  const auto violations = validate(c);
  for (const auto& v : violations)
    if (v.rfind("union", 0) == 0 || v.find("outside ground set") != std::string::npos)
      throw DomainError("not a cover: " + v);
}

}  // namespace

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::balanced: return "balanced";
    case Trichotomy::unbalanced_s_max: return "unbalanced_S_max";
    case Trichotomy::unbalanced_k_max: return "unbalanced_K_max";
  }
  return "?";
}

bool is_split(const Graph& g) {
  touch(Op::is_split);
  return degree_criterion(g);
}

SplitAnalysis omega_alpha(const Graph& g) {
  touch(Op::omega_alpha);
  require_split(g);
  const VertexSet k = degree_clique(g);
  const VertexSet s = g.all() & ~k;
  VertexSet swing = 0;
  for (int v : members(k))
    if ((g.neighbors(v) & s) == 0) swing |= bit(v);
  SplitAnalysis a;
  a.omega = count(k);
  a.alpha = count(s) + (swing != 0 ? 1 : 0);
  a.trichotomy_case = swing != 0 ? Trichotomy::unbalanced_k_max : Trichotomy::balanced;
  a.swing = least(swing);
  return a;
}

std::vector<KSPartition> all_ks_partitions(const Graph& g) {
  require_split(g);
  // Two KS-partitions differ by at most one vertex moving in each direction,
  // since K ∩ S' is both a clique and a stable set.
  const VertexSet k0 = degree_clique(g);
  const VertexSet s0 = g.all() & ~k0;
  std::vector<int> out_of_k = members(k0);
  std::vector<int> into_k = members(s0);
  out_of_k.push_back(-1);
  into_k.push_back(-1);
  std::vector<VertexSet> cliques;
  for (int a : out_of_k) {
    for (int b : into_k) {
      VertexSet k = k0;
      if (a >= 0) k &= ~bit(a);
      if (b >= 0) k |= bit(b);
      if (is_partition_of(g, k)) cliques.push_back(k);
    }
  }
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  std::vector<KSPartition> out;
  out.reserve(cliques.size());
  for (VertexSet k : cliques) out.push_back({k, g.all() & ~k});
  return out;
}

std::vector<KSPartition> s_max_partitions(const Graph& g) {
  const int alpha = omega_alpha(g).alpha;
  auto all = all_ks_partitions(g);
  std::erase_if(all, [&](const KSPartition& p) { return count(p.stable) != alpha; });
  return all;
}

std::vector<KSPartition> k_max_partitions(const Graph& g) {
  const int omega = omega_alpha(g).omega;
  auto all = all_ks_partitions(g);
  std::erase_if(all, [&](const KSPartition& p) { return count(p.clique) != omega; });
  return all;
}

KSPartition s_max_partition(const Graph& g) {
  touch(Op::s_max_partition);
  return s_max_partitions(g).front();
}

KSPartition k_max_partition(const Graph& g) {
  touch(Op::k_max_partition);
  return k_max_partitions(g).front();
}

SplitAnalysis trichotomy(const Graph& g, const KSPartition& p) {
  touch(Op::trichotomy);
  const auto violations = validate(g, p);
  if (!violations.empty()) throw DomainError("invalid KS-partition: " + violations.front());
  SplitAnalysis a = omega_alpha(g);
  const int k = count(p.clique);
  const int s = count(p.stable);
  if (k == a.omega && s == a.alpha) {
    a.trichotomy_case = Trichotomy::balanced;
    a.swing.reset();
  } else if (k == a.omega - 1 && s == a.alpha) {
    a.trichotomy_case = Trichotomy::unbalanced_s_max;
    VertexSet swing = 0;
    for (int v : members(p.stable))
      if ((p.clique & ~g.neighbors(v)) == 0) swing |= bit(v);
    a.swing = least(swing);
  } else if (k == a.omega && s == a.alpha - 1) {
    a.trichotomy_case = Trichotomy::unbalanced_k_max;
    VertexSet swing = 0;
    for (int v : members(p.clique))
      if ((g.neighbors(v) & p.stable) == 0) swing |= bit(v);
    a.swing = least(swing);
  } else {
    throw std::logic_error("KS-partition outside the Hammer-Simeone trichotomy");
  }
  return a;
}

VertexSet swing_vertices(const Graph& g, const KSPartition& p) {
  touch(Op::swing_vertices);
  const auto a = trichotomy(g, p);
  VertexSet out = 0;
  if (a.trichotomy_case == Trichotomy::unbalanced_s_max) {
    for (int v : members(p.stable))
      if ((p.clique & ~g.neighbors(v)) == 0) out |= bit(v);
  } else if (a.trichotomy_case == Trichotomy::unbalanced_k_max) {
    for (int v : members(p.clique))
      if ((g.neighbors(v) & p.stable) == 0) out |= bit(v);
  }
  return out;
}

Balance balance_split(const Graph& g) {
  touch(Op::balance_split);
  if (omega_alpha(g).trichotomy_case == Trichotomy::balanced) return Balance::balanced();
  const VertexSet swing = swing_vertices(g, s_max_partition(g));
  return Balance::unbalanced_at(std::countr_zero(swing));
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, 0, g.all(), 0, out);
  return out;
}

VertexSet loyal_vertices_split(const Graph& g) {
  touch(Op::loyal_vertices_split);
  require_split(g);
  std::vector<int> hits(g.order(), 0);
  for (VertexSet c : maximal_cliques(g))
    for (int v : members(c)) ++hits[v];
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (hits[v] == 1) out |= bit(v);
  return out;
}

std::vector<std::vector<int>> loyal_elements(const SetCover& c) {
  touch(Op::loyal_elements);
  std::vector<int> memberships(c.ground_size(), 0);
  for (const auto& s : c.sets())
    for (int e : s)
      if (e >= 0 && e < c.ground_size()) ++memberships[e];
  std::vector<std::vector<int>> out(c.set_count());
  for (int i = 0; i < c.set_count(); ++i)
    for (int e : c.set(i))
      if (e >= 0 && e < c.ground_size() && memberships[e] == 1) out[i].push_back(e);
  return out;
}

bool is_minimal(const SetCover& c) {
  touch(Op::is_minimal);
  require_cover(c);
  const auto loyal = loyal_elements(c);
  return std::all_of(loyal.begin(), loyal.end(), [](const auto& l) { return !l.empty(); });
}

std::vector<int> extremal_sets(const SetCover& c) {
  const long threshold = static_cast<long>(c.ground_size()) - c.set_count() + 1;
  std::vector<int> out;
  for (int i = 0; i < c.set_count(); ++i)
    if (static_cast<long>(c.set(i).size()) == threshold) out.push_back(i);
  return out;
}

Balance balance_cover(const SetCover& c) {
  touch(Op::balance_cover);
  if (!is_minimal(c)) throw DomainError("not minimal");
  const auto ext = extremal_sets(c);
  if (ext.empty()) return Balance::balanced();
  return Balance::unbalanced_at(ext.front());
}

XYStructure xy_isolates_universals(const XYGraph& g) {
  touch(Op::xy_isolates_universals);
  XYStructure out;
  for (int y = 0; y < g.ny(); ++y)
    if (g.incidence().column_empty(y)) out.isolates_in_y |= bit(y);
  for (int x = 0; x < g.nx(); ++x)
    if (g.incidence().row_full(x)) out.universals_in_x |= bit(x);
  return out;
}

bool has_y_isolates(const XYGraph& g) {
  for (int y = 0; y < g.ny(); ++y)
    if (g.incidence().column_empty(y)) return true;
  return false;
}

Balance balance_xy(const XYGraph& g) {
  touch(Op::balance_xy);
  const auto st = xy_isolates_universals(g);
  if (st.isolates_in_y != 0) throw DomainError("balance undefined: Y has isolates");
  if (st.universals_in_x == 0) return Balance::balanced();
  return Balance::unbalanced_at(std::countr_zero(st.universals_in_x));
}

PosetSupport poset_support(const BipartitePoset& p) {
  touch(Op::poset_support);
  PosetSupport out;
  for (int x = 0; x < p.n0(); ++x) (p.relation().row_full(x) ? out.full : out.partial) |= bit(x);
  return out;
}

Balance balance_poset(const BipartitePoset& p) {
  touch(Op::balance_poset);
  const auto sup = poset_support(p);
  if (sup.full == 0) return Balance::balanced();
  return Balance::unbalanced_at(std::countr_zero(sup.full));
}

Balance balance_of(const Object& o) {
  switch (o.index()) {
    case 0: return balance_split(std::get<Graph>(o));
    case 1: return balance_cover(std::get<SetCover>(o));
    case 2: return balance_xy(std::get<XYGraph>(o));
    default: return balance_poset(std::get<BipartitePoset>(o));
  }
}

bool in_balance_domain(const Object& o) {
  switch (o.index()) {
    case 0: return degree_criterion(std::get<Graph>(o));
    case 1: {
      const auto& c = std::get<SetCover>(o);
      try {
        return is_minimal(c);
      } catch (const DomainError&) {
        return false;
      }
    }
    case 2: return !has_y_isolates(std::get<XYGraph>(o));
    default: return validate(std::get<BipartitePoset>(o)).empty();
  }
}

}  // namespace splitcomp
