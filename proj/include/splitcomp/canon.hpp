#pragma once

#include <vector>

#include "splitcomp/types.hpp"

namespace splitcomp {

/// Lexicographically least row-major arrangement of a 0/1 matrix under
/// independent row and column permutations.
struct MatrixCanonForm {
  BitMatrix bits;
  /// Input row r lands at row_perm[r]; input column c lands at col_perm[c].
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

MatrixCanonForm canon_matrix(const BitMatrix& m);

struct GraphCanonForm {
  CanonicalKey key;
  Graph graph;
  /// Input vertex v becomes perm[v] in `graph`.
  std::vector<int> perm;
};

/// Individualization-refinement canonical labeling. Exact for every order; the
/// search is practical up to about 16 vertices.
GraphCanonForm canon_graph(const Graph& g);

CanonicalKey canon_xy(const XYGraph& g);
CanonicalKey canon_cover(const SetCover& c);
CanonicalKey canon_poset(const BipartitePoset& p);
CanonicalKey canon_key(const Object& o);

/// Canonically labeled representative of the object's isomorphism class.
Graph canonical_form(const Graph& g);
SetCover canonical_form(const SetCover& c);
XYGraph canonical_form(const XYGraph& g);
BipartitePoset canonical_form(const BipartitePoset& p);
Object canonical_form(const Object& o);

struct Canonical {
  Object object;
  CanonicalKey key;
};

/// Canonical form and key in one pass.
Canonical canonicalize(const Object& o);

/// Both arguments must belong to the same class (UsageError otherwise).
bool is_isomorphic(const Object& a, const Object& b);

}  // namespace splitcomp
