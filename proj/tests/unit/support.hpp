#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "splitcomp/types.hpp"

namespace splitcomp::testing {

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.add_edge(0, n - 1);
  return g;
}

// Center 0, leaves 1..k.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if ((bits >> i) & 1U) g.add_edge(u, v);
  return g;
}

inline BitMatrix matrix_from_bits(int rows, int cols, std::uint64_t bits) {
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i)
    if ((bits >> i) & 1U) m.set(i / cols, i % cols);
  return m;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orbit label of a graph: its adjacency bit string minimized over every
// relabeling.
inline std::string brute_force_graph_label(const Graph& g, const std::vector<std::vector<int>>& perms) {
  std::string best;
  for (const auto& p : perms) {
    const Graph h = g.relabeled(p);
    std::string s;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) s.push_back(h.adjacent(u, v) ? '1' : '0');
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Same for a matrix under independent row and column permutations.
inline std::string brute_force_matrix_label(const BitMatrix& m, const std::vector<std::vector<int>>& row_perms,
                                            const std::vector<std::vector<int>>& col_perms) {
  std::string best;
  bool first = true;
  for (const auto& rp : row_perms)
    for (const auto& cp : col_perms) {
      const std::string s = m.permuted(rp, cp).bit_string();
      if (first || s < best) {
        best = s;
        first = false;
      }
    }
  return best;
}

// Clique and stable set found by trying every subset.
inline bool brute_force_split(const Graph& g, KSPartition* found = nullptr) {
  const int n = g.order();
  for (VertexSet k = 0;; ++k) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool both_k = contains(k, u) && contains(k, v);
        const bool both_s = !contains(k, u) && !contains(k, v);
        if ((both_k && !g.adjacent(u, v)) || (both_s && g.adjacent(u, v))) ok = false;
      }
    if (ok) {
      if (found != nullptr) *found = {k, low_bits(n) & ~k};
      return true;
    }
    if (k == low_bits(n)) return false;
  }
}

inline std::vector<KSPartition> brute_force_partitions(const Graph& g) {
  std::vector<KSPartition> out;
  const int n = g.order();
  for (VertexSet k = 0;; ++k) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool both_k = contains(k, u) && contains(k, v);
        const bool both_s = !contains(k, u) && !contains(k, v);
        if ((both_k && !g.adjacent(u, v)) || (both_s && g.adjacent(u, v))) ok = false;
      }
    if (ok) out.push_back({k, low_bits(n) & ~k});
    if (k == low_bits(n)) break;
  }
  return out;
}

inline int brute_force_clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet s = 0;; ++s) {
    bool ok = true;
    for (int u : members(s))
      if ((s & ~bit(u) & ~g.neighbors(u)) != 0) ok = false;
    if (ok) best = std::max(best, count(s));
    if (s == g.all()) break;
  }
  return best;
}

inline int brute_force_stable_number(const Graph& g) {
  int best = 0;
  for (VertexSet s = 0;; ++s) {
    bool ok = true;
    for (int u : members(s))
      if ((s & g.neighbors(u)) != 0) ok = false;
    if (ok) best = std::max(best, count(s));
    if (s == g.all()) break;
  }
  return best;
}

}  // namespace splitcomp::testing
