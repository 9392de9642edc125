#include <doctest.h>

#include <map>
#include <random>

#include "splitcomp/canon.hpp"
#include "splitcomp/errors.hpp"
#include "support.hpp"

using namespace splitcomp;
using namespace splitcomp::testing;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  auto p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("graph keys separate exactly the isomorphism classes up to 5 vertices") {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    std::map<std::string, CanonicalKey> by_orbit;
    std::map<CanonicalKey, std::string> by_key;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const auto label = brute_force_graph_label(g, perms);
      const auto form = canon_graph(g);
      auto [it, fresh] = by_orbit.emplace(label, form.key);
      CHECK(it->second == form.key);
      auto [jt, fresh_key] = by_key.emplace(form.key, label);
      CHECK(jt->second == label);
    }
    CHECK(by_orbit.size() == by_key.size());
  }
}

TEST_CASE("graph canonical witness relabels the input onto the canonical graph") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    const auto form = canon_graph(g);
    CHECK(g.relabeled(form.perm) == form.graph);
    const Graph h = g.relabeled(shuffled(n, rng));
    const auto other = canon_graph(h);
    CHECK(other.key == form.key);
    CHECK(other.graph == form.graph);
  }
}

TEST_CASE("graph canonicalization is idempotent with identity witness") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 10);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const auto once = canon_graph(g);
    const auto twice = canon_graph(once.graph);
    CHECK(twice.key == once.key);
    CHECK(twice.perm == identity(n));
  }
}

TEST_CASE("graph canonicalization handles regular and larger graphs") {
  std::mt19937_64 rng(9);
  const Graph c12 = cycle(12);
  CHECK(canon_graph(c12).key == canon_graph(c12.relabeled(shuffled(12, rng))).key);
  Graph two_triangles(6);
  two_triangles.make_clique(0b000111);
  two_triangles.make_clique(0b111000);
  CHECK(canon_graph(two_triangles).key != canon_graph(cycle(6)).key);
  Graph g(24);
  for (int u = 0; u < 24; ++u)
    for (int v = u + 1; v < 24; ++v)
      if (rng() % 2) g.add_edge(u, v);
  CHECK(canon_graph(g).key == canon_graph(g.relabeled(shuffled(24, rng))).key);
}

TEST_CASE("matrix keys separate exactly the row/column orbits up to 3x3") {
  for (int rows = 0; rows <= 3; ++rows)
    for (int cols = 0; cols <= 3; ++cols) {
      const auto rp = all_permutations(rows);
      const auto cp = all_permutations(cols);
      std::map<std::string, std::string> by_orbit;
      std::map<std::string, std::string> by_form;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (rows * cols)); ++bits) {
        const BitMatrix m = matrix_from_bits(rows, cols, bits);
        const auto label = brute_force_matrix_label(m, rp, cp);
        const auto form = canon_matrix(m);
        CHECK(form.bits.bit_string() == label);
        CHECK(m.permuted(form.row_perm, form.col_perm) == form.bits);
        by_orbit.emplace(label, form.bits.bit_string());
        by_form.emplace(form.bits.bit_string(), label);
      }
      CHECK(by_orbit.size() == by_form.size());
    }
}

TEST_CASE("canonical matrices are fixed points") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = static_cast<int>(rng() % 7);
    const int cols = static_cast<int>(rng() % 7);
    const BitMatrix m = matrix_from_bits(rows, cols, rng());
    const auto form = canon_matrix(m);
    const auto again = canon_matrix(form.bits);
    CHECK(again.bits == form.bits);
    CHECK(again.row_perm == identity(rows));
    CHECK(again.col_perm == identity(cols));
  }
}

TEST_CASE("keys embed class and dimensions") {
  const XYGraph empty_xy(2, 0);
  const XYGraph other_xy(0, 2);
  CHECK(canon_xy(empty_xy) != canon_xy(other_xy));
  CHECK(canon_key(Graph(2)) != canon_key(Graph(3)));
  CHECK(canon_key(Graph(2)).tag() == ClassTag::split);
  CHECK(canon_key(SetCover(1, {{0}})).tag() == ClassTag::cover);
}

TEST_CASE("poset keys are XY keys of the same matrix with the tag swapped") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix m = matrix_from_bits(1 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), rng());
    auto xy = canon_xy(XYGraph(m)).bytes;
    auto poset = canon_poset(BipartitePoset(m)).bytes;
    CHECK(xy[0] == static_cast<std::uint8_t>(ClassTag::xy));
    CHECK(poset[0] == static_cast<std::uint8_t>(ClassTag::poset));
    xy.erase(xy.begin());
    poset.erase(poset.begin());
    CHECK(xy == poset);
  }
}

TEST_CASE("cover keys ignore element and set labels") {
  const SetCover a(4, {{0, 1}, {1, 2, 3}});
  const SetCover b(4, {{2, 3}, {0, 1, 3}});
  const SetCover c(4, {{0, 1}, {2, 3}});
  CHECK(canon_cover(a) == canon_cover(b));
  CHECK(canon_cover(a) != canon_cover(c));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(a, c));
}

TEST_CASE("canonicalize returns the form with its key") {
  const Object o = path(5);
  const auto c = canonicalize(o);
  CHECK(c.key == canon_key(o));
  CHECK(canon_key(c.object) == c.key);
  CHECK(std::get<Graph>(c.object) == canonical_form(path(5)));
}

TEST_CASE("isomorphism across classes is a usage error") {
  CHECK_THROWS_AS(is_isomorphic(Graph(1), XYGraph(1, 0)), UsageError);
}
