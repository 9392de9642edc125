#include <doctest.h>

#include <random>
#include <string>

#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"
#include "support.hpp"

using namespace splitcomp;
using namespace splitcomp::testing;

namespace {

// Decoder written from the published graph6 description: N(n) is one byte
// n+63 for n <= 62, followed by the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... in 6-bit groups, each group plus 63.
Graph reference_decode(const std::string& s) {
  const int n = s[0] - 63;
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int group = s[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace

TEST_CASE("vertex set helpers") {
  CHECK(members(0b10110) == std::vector<int>{1, 2, 4});
  const std::vector<int> ids{0, 3, 63};
  CHECK(make_set(ids) == (bit(0) | bit(3) | bit(63)));
  CHECK(low_bits(64) == ~VertexSet{0});
  CHECK(count(low_bits(7)) == 7);
}

TEST_CASE("class tags parse and print") {
  for (auto tag : {ClassTag::split, ClassTag::cover, ClassTag::xy, ClassTag::poset})
    CHECK(parse_class_tag(to_string(tag)) == tag);
  CHECK_THROWS_AS(parse_class_tag("graph"), UsageError);
}

TEST_CASE("bit matrix rows compare lexicographically") {
  BitMatrix m(2, 3);
  m.set(0, 2);
  m.set(1, 0);
  CHECK(m.bit_string() == "001100");
  CHECK(m.row_word(0) < m.row_word(1));
  CHECK(m.transposed().bit_string() == "010010");
  CHECK(m.column_empty(1));
  CHECK_FALSE(m.row_full(1));
}

TEST_CASE("set cover normal form sorts sets and family") {
  SetCover c(4, {{3, 1}, {0, 2}, {1}});
  CHECK(c.sets() == std::vector<std::vector<int>>{{0, 2}, {1}, {1, 3}});
  CHECK(SetCover::from_incidence(c.incidence()) == c);
}

TEST_CASE("graph6 known encodings") {
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6("A_") == Graph::complete(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(serialize_graph6(path(4)) == "Ch");
  CHECK(serialize_graph6(cycle(4)) == "Cl");
  CHECK(serialize_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 agrees with the reference decoder") {
  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const std::string s = serialize_graph6(g);
      CHECK(reference_decode(s) == g);
      CHECK(parse_graph6(s) == g);
    }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 63);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const std::string s = serialize_graph6(g);
    REQUIRE(reference_decode(s) == g);
    REQUIRE(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("C"), doctest::Contains("truncated"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("C~~"), doctest::Contains("trailing"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("Bx"), doctest::Contains("padding"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("C\x7f"), doctest::Contains("byte 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("~?@?"), doctest::Contains("'~'"), ParseError);
  CHECK_THROWS_AS(serialize_graph6(Graph(63)), ResourceError);
}

TEST_CASE("json objects round-trip field-identically") {
  const std::vector<Object> objects{
      SetCover(3, {{0, 1}, {1, 2}}),
      SetCover(0, {}),
      XYGraph(0, 0),
      BipartitePoset(0, 0),
  };
  for (const auto& o : objects) CHECK(parse_object(serialize_object(o)) == o);

  XYGraph g(2, 3);
  g.add_edge(1, 2);
  g.add_edge(0, 0);
  CHECK(serialize_object(g) == R"({"class":"xy","nx":2,"ny":3,"edges":[[0,0],[1,2]]})");
  CHECK(parse_object(serialize_object(g)) == Object(g));

  BipartitePoset p(2, 1);
  p.add_relation(0, 0);
  p.add_relation(1, 0);
  CHECK(serialize_object(p) == R"({"class":"poset","n0":2,"n1":1,"below":[[0,0],[1,0]]})");
  CHECK(parse_object(serialize_object(p)) == Object(p));
}

TEST_CASE("json serialization is the sorted normal form") {
  const Object a = parse_object(R"({"class":"cover","n":3,"sets":[[2,1],[0,1]]})");
  const Object b = parse_object(R"({"sets":[[0,1],[1,2]],"n":3,"class":"cover"})");
  CHECK(serialize_object(a) == serialize_object(b));
  CHECK(serialize_object(a) == R"({"class":"cover","n":3,"sets":[[0,1],[1,2]]})");
}

TEST_CASE("json errors separate syntax from schema") {
  CHECK_THROWS_AS(parse_object("{\"class\":"), ParseError);
  CHECK_THROWS_AS(parse_object("[1,2]"), ValidationError);
  CHECK_THROWS_AS(parse_object(R"({"class":"xy","nx":1})"), ValidationError);
  CHECK_THROWS_AS(parse_object(R"({"class":"xy","nx":1,"ny":1,"edges":[[0,1]]})"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_object(R"({"class":"cover","n":3,"sets":[[0,1]]})"),
                       doctest::Contains("element 2 uncovered"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_object(R"({"class":"cover","n":2,"sets":[[0,1],[1,0]]})"),
                       doctest::Contains("duplicate sets"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_object(R"({"class":"poset","n0":1,"n1":2,"below":[[0,0]]})"),
                       doctest::Contains("empty down-set"), ValidationError);
  CHECK_THROWS_AS(parse_object(R"({"class":"split"})"), ValidationError);
  CHECK_THROWS_AS(parse_object(R"({"class":"hypergraph"})"), ValidationError);
}

TEST_CASE("parse_line picks the format from the first character") {
  CHECK(std::holds_alternative<Graph>(parse_line("  Ch \n")));
  CHECK(std::holds_alternative<SetCover>(parse_line(R"( {"class":"cover","n":1,"sets":[[0]]})")));
  CHECK(serialize_line(path(3)) == "Bg");
}

TEST_CASE("validate reports invariant violations") {
  CHECK(validate(path(4)).empty());
  CHECK_FALSE(validate(Graph::from_rows({0b10, 0b00})).empty());

  const Graph p4 = path(4);
  CHECK(validate(p4, {0b0110, 0b1001}).empty());
  const auto bad_k = validate(p4, {0b0101, 0b1010});
  REQUIRE_FALSE(bad_k.empty());
  CHECK(bad_k.front().find("K not a clique") != std::string::npos);
  const auto bad_s = validate(p4, {0b1000, 0b0111});
  REQUIRE_FALSE(bad_s.empty());
  CHECK(bad_s.front().find("S not stable") != std::string::npos);
  CHECK_FALSE(validate(p4, {0b0110, 0b0001}).empty());

  CHECK(validate(SetCover(2, {{0}, {1}})).empty());
  CHECK_FALSE(validate(SetCover(2, {{0}})).empty());
  CHECK_FALSE(validate(SetCover(1, {{0}, {0}})).empty());
  CHECK(validate(XYGraph(2, 2)).empty());
  CHECK_FALSE(validate(BipartitePoset(1, 1)).empty());
}

TEST_CASE("validate is total on arbitrary adjacency rows") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    std::vector<VertexSet> rows(n);
    for (auto& r : rows) r = rng();
    CHECK_NOTHROW(validate(Graph::from_rows(rows)));
    CHECK_NOTHROW(validate(Graph::from_rows(rows), {rng(), rng()}));
  }
}

TEST_CASE("canonical key hex round-trip") {
  CanonicalKey k{{0x01, 0x00, 0x04, 0x34}};
  CHECK(k.hex() == "01000434");
  CHECK(CanonicalKey::from_hex("01000434") == k);
  CHECK(k.tag() == ClassTag::split);
}
