#include <doctest.h>

#include "splitcomp/biject.hpp"
#include "splitcomp/classify.hpp"
#include "splitcomp/enumerate.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/serialize.hpp"
#include "support.hpp"

using namespace splitcomp;
using namespace splitcomp::testing;

namespace {

template <class A, class B>
bool same_class(const A& a, const B& b) {
  return canon_key(Object(a)) == canon_key(Object(b));
}

XYGraph xy_from(int nx, int ny, std::initializer_list<std::pair<int, int>> edges) {
  XYGraph g(nx, ny);
  for (auto [x, y] : edges) g.add_edge(x, y);
  return g;
}

BipartitePoset poset_from(int n0, int n1, std::initializer_list<std::pair<int, int>> below) {
  BipartitePoset p(n0, n1);
  for (auto [lo, hi] : below) p.add_relation(lo, hi);
  return p;
}

}  // namespace

TEST_CASE("map registry") {
  CHECK(all_maps().size() == 22);
  for (const auto& m : all_maps()) {
    CHECK(parse_map_name(m.name) == m.id);
    CHECK(map_info(m.inverse).inverse == m.id);
    CHECK(map_info(m.inverse).from == m.to);
  }
  CHECK(bijection_pairs().size() == 7);
  CHECK(parse_pair_name("split-cover").forward == MapId::split_to_cover);
  CHECK_THROWS_AS(parse_map_name("split->graph"), UsageError);
  CHECK(compile_up_map(ClassTag::poset) == MapId::compile_poset_up);
}

TEST_CASE("split to cover and back") {
  Chooser ch;
  const SetCover c = construct::split_to_cover(path(3), ch);
  CHECK(c == SetCover(3, {{0, 1}, {1, 2}}));
  CHECK(split_to_cover(Graph(1)).object == SetCover(1, {{0}}));
  Chooser ch2;
  CHECK(construct::split_to_cover(path(4), ch2) == SetCover(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(balance_cover(SetCover(4, {{0, 1}, {2, 3}})).unbalanced());

  Chooser ch3;
  CHECK(same_class(construct::cover_to_split(SetCover(3, {{0, 1}, {1, 2}}), ch3), path(3)));
  CHECK(same_class(cover_to_split(SetCover(1, {{0}})).object, Graph(1)));
  CHECK_THROWS_WITH_AS(cover_to_split(SetCover(3, {{0, 1}, {0, 1, 2}})), "not minimal", DomainError);
  CHECK_THROWS_AS(split_to_cover(cycle(4)), DomainError);
}

TEST_CASE("split to XY and back") {
  const XYGraph p4 = split_to_xy(path(4)).object;
  CHECK(same_class(p4, xy_from(2, 2, {{0, 0}, {1, 1}})));
  CHECK(same_class(split_to_xy(Graph(1)).object, XYGraph(1, 0)));
  CHECK(same_class(split_to_xy(star(3)).object, xy_from(3, 1, {{0, 0}, {1, 0}, {2, 0}})));
  CHECK(same_class(xy_to_split(xy_from(2, 2, {{0, 0}, {1, 1}})).object, path(4)));
  CHECK_THROWS_AS(xy_to_split(XYGraph(1, 1)), DomainError);
}

TEST_CASE("split to poset and back") {
  const BipartitePoset vee = poset_from(2, 1, {{0, 0}, {1, 0}});
  CHECK(same_class(split_to_poset(path(3)).object, vee));
  CHECK(same_class(split_to_poset(Graph(4)).object, BipartitePoset(4, 0)));
  CHECK(same_class(poset_to_split(vee).object, path(3)));
}

TEST_CASE("XY-graphs on n vertices shift to unbalanced split graphs on n+1") {
  const Graph p3 = xy_to_unbalanced_split(xy_from(1, 1, {{0, 0}})).object;
  CHECK(same_class(p3, path(3)));
  CHECK(same_class(xy_to_unbalanced_split(XYGraph(1, 0)).object, Graph(2)));
  CHECK(same_class(unbalanced_split_to_xy(path(3)).object, xy_from(1, 1, {{0, 0}})));
  CHECK_THROWS_WITH_AS(unbalanced_split_to_xy(path(4)), doctest::Contains("balanced"), DomainError);

  std::set<CanonicalKey> images;
  for (const auto& e : enumerate_xy(3, false).entries) {
    const auto h = xy_to_unbalanced_split(std::get<XYGraph>(e.object));
    CHECK(h.object.order() == 4);
    CHECK(balance_split(h.object).unbalanced());
    images.insert(h.report.output_key);
  }
  CHECK(images.size() == 8);
}

TEST_CASE("cover to poset and back") {
  const BipartitePoset vee = poset_from(2, 1, {{0, 0}, {1, 0}});
  CHECK(same_class(cover_to_poset(SetCover(3, {{0, 1}, {1, 2}})).object, vee));
  CHECK(same_class(cover_to_poset(SetCover(1, {{0}})).object, BipartitePoset(1, 0)));
  CHECK(same_class(poset_to_cover(vee).object, SetCover(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("XY to cover and back") {
  CHECK(xy_to_cover(xy_from(2, 2, {{0, 0}, {1, 1}})).object == SetCover(4, {{0, 1}, {2, 3}}));
  CHECK(same_class(xy_to_cover(xy_from(1, 2, {{0, 0}, {0, 1}})).object, SetCover(3, {{0, 1, 2}})));
  CHECK(same_class(xy_to_cover(XYGraph(1, 0)).object, SetCover(1, {{0}})));
  CHECK(same_class(cover_to_xy(SetCover(4, {{0, 1}, {2, 3}})).object, xy_from(2, 2, {{0, 0}, {1, 1}})));
}

TEST_CASE("XY to poset and back") {
  CHECK(same_class(xy_to_poset(xy_from(1, 1, {{0, 0}})).object, poset_from(1, 1, {{0, 0}})));
  CHECK(same_class(xy_to_poset(xy_from(2, 2, {{0, 0}, {1, 1}})).object, poset_from(2, 2, {{0, 0}, {1, 1}})));
  CHECK(same_class(xy_to_poset(xy_from(2, 1, {{0, 0}, {1, 0}})).object, poset_from(2, 1, {{0, 0}, {1, 0}})));
  Chooser ch;
  const XYGraph g = xy_from(2, 3, {{0, 0}, {1, 1}, {1, 2}});
  CHECK(construct::poset_to_xy(construct::xy_to_poset(g)) == g);
}

TEST_CASE("images keep the balance of every split graph on four points") {
  for (const auto& e : enumerate_split(4).entries) {
    const Graph& g = std::get<Graph>(e.object);
    const Balance b = e.balance;
    CHECK(balance_cover(split_to_cover(g).object).value == b.value);
    CHECK(balance_poset(split_to_poset(g).object).value == b.value);
    CHECK(balance_xy(split_to_xy(g).object).value == b.value);
  }
}

TEST_CASE("split compilation") {
  const auto down = compile_split_down(star(3));
  CHECK(same_class(down.object, path(3)));
  CHECK(compile_split_down(Graph(1)).object.order() == 0);
  CHECK_THROWS_AS(compile_split_down(path(4)), DomainError);
  CHECK(same_class(compile_split_up(path(3), 4).object, star(3)));
  CHECK_THROWS_AS(compile_split_up(path(3), 3), DomainError);
  const Graph up = compile_split_up(Graph(0), 3).object;
  CHECK(up.order() == 3);
  CHECK(balance_split(up).unbalanced());
}

TEST_CASE("cover compilation") {
  CHECK(compile_cover_down(SetCover(4, {{0, 1, 2, 3}})).object == SetCover(0, {}));
  const SetCover up = compile_cover_up(SetCover(1, {{0}}), 2).object;
  CHECK(same_class(up, SetCover(2, {{0}, {1}})));
  CHECK_THROWS_AS(compile_cover_down(SetCover(4, {{0, 1}, {2, 3}})), DomainError);
  CHECK_THROWS_AS(compile_cover_up(SetCover(2, {{0}, {1}}), 2), DomainError);
}

TEST_CASE("XY compilation") {
  CHECK(compile_xy_down(xy_from(1, 2, {{0, 0}, {0, 1}})).object == XYGraph(0, 0));
  CHECK(same_class(compile_xy_up(XYGraph(0, 0), 3).object, xy_from(1, 2, {{0, 0}, {0, 1}})));
  CHECK_THROWS_AS(compile_xy_down(xy_from(2, 2, {{0, 0}, {1, 1}})), DomainError);
}

TEST_CASE("poset compilation") {
  const BipartitePoset chain = poset_from(1, 1, {{0, 0}});
  CHECK(same_class(compile_poset_down(chain).object, BipartitePoset(1, 0)));
  CHECK(same_class(compile_poset_up(BipartitePoset(1, 0), 2).object, chain));
  CHECK(compile_poset_down(BipartitePoset(4, 0)).object == BipartitePoset(0, 0));
  CHECK(same_class(compile_poset_up(BipartitePoset(0, 0), 2).object, BipartitePoset(2, 0)));
  const BipartitePoset balanced = poset_from(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  CHECK_THROWS_AS(compile_poset_down(poset_from(2, 2, {{0, 0}, {1, 1}})), DomainError);
  CHECK(compile_poset_down(balanced).object.order() < 4);
}

TEST_CASE("compile-down shrinks and compile-up lands on n points, unbalanced") {
  for (ClassTag tag : {ClassTag::split, ClassTag::cover, ClassTag::xy, ClassTag::poset})
    for (int n = 1; n <= 5; ++n) {
      for (const auto& e : enumerate_domain(tag, n).entries) {
        if (!e.balance.unbalanced()) continue;
        CHECK(order_of(apply_map(compile_down_map(tag), e.object).object) < n);
      }
      for (int t = 0; t < n; ++t)
        for (const auto& e : enumerate_domain(tag, t).entries) {
          const Object up = apply_map(compile_up_map(tag), e.object, n).object;
          CHECK(order_of(up) == n);
          CHECK(balance_of(up).unbalanced());
        }
    }
}

TEST_CASE("reports record choices and replay them") {
  const SetCover c(4, {{0, 1}, {1, 2, 3}});
  Chooser ch;
  const auto first = apply_map(MapId::cover_to_split, c, ch);
  REQUIRE(first.report.choices.size() == 2);
  std::vector<int> script;
  int wide = -1;
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(first.report.choices[i].point == "representative[" + std::to_string(i) + "]");
    script.push_back(first.report.choices[i].options - 1);
    if (first.report.choices[i].options == 2) wide = static_cast<int>(i);
  }
  REQUIRE(wide >= 0);
  CHECK(first.report.choices[1 - wide].options == 1);

  Chooser scripted(script);
  const auto second = apply_map(MapId::cover_to_split, c, scripted);
  CHECK(second.report.choices[wide].index == 1);
  Chooser replay = Chooser::replaying(second.report.choices);
  const auto third = apply_map(MapId::cover_to_split, c, replay);
  CHECK(third.object == second.object);
  CHECK(third.report.choices == second.report.choices);
  CHECK(second.report.output_key == first.report.output_key);
}

TEST_CASE("chooser walks every combination") {
  Chooser ch;
  std::vector<std::pair<int, int>> seen;
  do {
    const int a = ch.pick("a", 2);
    const int b = ch.pick("b", a == 0 ? 3 : 1);
    seen.emplace_back(a, b);
  } while (ch.advance());
  CHECK(seen == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
  Chooser bad({5});
  CHECK_THROWS_AS(bad.pick("x", 2), DomainError);
  CHECK_THROWS_AS(bad.pick("y", 0), DomainError);
}

TEST_CASE("sweeps see every admissible choice") {
  const SetCover c(3, {{0}, {1}, {2}});
  const auto keys = sweep_choices(MapId::compile_cover_down, c);
  CHECK(keys.size() == 3);
  for (const auto& k : keys) CHECK(k == keys.front());
  CHECK(sweep_choices(MapId::xy_to_split, XYGraph(1, 0)).size() == 1);
}

TEST_CASE("apply checks the class and target order") {
  Chooser ch;
  CHECK_THROWS_AS(construct::apply(MapId::split_to_cover, XYGraph(1, 0), ch), UsageError);
  CHECK_THROWS_AS(apply_map(MapId::compile_split_up, Graph(1)), UsageError);
}
