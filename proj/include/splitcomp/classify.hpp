#pragma once

#include <vector>

#include "splitcomp/types.hpp"

namespace splitcomp {

enum class Trichotomy { balanced, unbalanced_s_max, unbalanced_k_max };

std::string_view to_string(Trichotomy t);

struct SplitAnalysis {
  int omega = 0;
  int alpha = 0;
  Trichotomy trichotomy_case = Trichotomy::balanced;
  /// Least swing vertex of the analysed partition, for the two unbalanced cases.
  std::optional<int> swing;
};

// ------------------------------------------------------------ split graphs

/// Degree-sequence test: with degrees d_1 >= ... >= d_n and
/// m = max{i : d_i >= i-1}, g is split iff
/// sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
bool is_split(const Graph& g);

/// Exact clique and stable-set numbers of a split graph. `trichotomy_case`
/// describes the graph's K-max partition (balanced or unbalanced_k_max).
SplitAnalysis omega_alpha(const Graph& g);

/// Every KS-partition of a split graph, ordered by clique mask.
std::vector<KSPartition> all_ks_partitions(const Graph& g);
std::vector<KSPartition> s_max_partitions(const Graph& g);
std::vector<KSPartition> k_max_partitions(const Graph& g);

/// First partition of the corresponding list above.
KSPartition s_max_partition(const Graph& g);
KSPartition k_max_partition(const Graph& g);

/// Hammer-Simeone case of a partition, with the promised swing vertex.
SplitAnalysis trichotomy(const Graph& g, const KSPartition& p);

/// S-vertices adjacent to all of K in case (ii), K-vertices with no S-neighbour
/// in case (iii), nothing for a balanced partition.
VertexSet swing_vertices(const Graph& g, const KSPartition& p);

/// Unbalanced iff the S-max partition has a swing vertex; the witness is the
/// least such vertex.
Balance balance_split(const Graph& g);

/// Vertices lying in exactly one maximal clique.
VertexSet loyal_vertices_split(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with pivoting), in discovery order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// --------------------------------------------------------------- set covers

/// Element e is listed under set i iff set i is the only set containing e.
std::vector<std::vector<int>> loyal_elements(const SetCover& c);

/// Every set has a loyal element. DomainError if `c` does not cover.
bool is_minimal(const SetCover& c);

/// Unbalanced iff some set has |V| - |C| + 1 elements; the witness is that
/// set's index. DomainError unless `c` is a minimal cover.
Balance balance_cover(const SetCover& c);

/// Sets of size |V| - |C| + 1.
std::vector<int> extremal_sets(const SetCover& c);

// ---------------------------------------------------------------- XY-graphs

struct XYStructure {
  VertexSet isolates_in_y = 0;
  VertexSet universals_in_x = 0;
};

XYStructure xy_isolates_universals(const XYGraph& g);
bool has_y_isolates(const XYGraph& g);

/// Unbalanced iff X has a universal vertex. DomainError when Y has isolates,
/// since balance is only defined without them.
Balance balance_xy(const XYGraph& g);

// ------------------------------------------------------------ bipartite posets

struct PosetSupport {
  VertexSet full = 0;
  VertexSet partial = 0;
};

/// Height-0 points comparable to every height-1 point are full support points.
PosetSupport poset_support(const BipartitePoset& p);

Balance balance_poset(const BipartitePoset& p);

/// Native balance for any class; DomainError outside the class's domain.
Balance balance_of(const Object& o);

/// Whether `o` lies in the domain on which its class defines balance.
bool in_balance_domain(const Object& o);

}  // namespace splitcomp
