#include <doctest.h>

#include <algorithm>
#include <map>

#include "woi/graph.hpp"
#include "woi/rng.hpp"

using namespace woi;

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

WeightedOrientedGraph two_sink_pentagon(int w2, int w4) {
  return WeightedOrientedGraph(
      {"x1", "x2", "x3", "x4", "x5"}, {1, w2, 1, w4, 2},
      {{"x1", "x2"}, {"x1", "x5"}, {"x3", "x2"}, {"x3", "x4"}, {"x5", "x4"}});
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(WeightedOrientedGraph({"a"}, {1}, {{"a", "a"}}),
                  graph_error);
  CHECK_THROWS_AS(
      WeightedOrientedGraph({"a", "b"}, {1, 1}, {{"a", "b"}, {"a", "b"}}),
      graph_error);
  CHECK_THROWS_AS(
      WeightedOrientedGraph({"a", "b"}, {1, 1}, {{"a", "b"}, {"b", "a"}}),
      graph_error);
  CHECK_THROWS_AS(WeightedOrientedGraph({"a", "b"}, {1, 1}, {{"a", "z"}}),
                  graph_error);
  CHECK_THROWS_AS(WeightedOrientedGraph({"a", "b"}, {1, 0}, {{"a", "b"}}),
                  graph_error);
  CHECK_THROWS_AS(WeightedOrientedGraph({"a", "b"}, {1}, {{"a", "b"}}),
                  graph_error);
}

TEST_CASE("sources are forced to weight one") {
  WeightedOrientedGraph g({"a", "b", "c"}, {7, 2, 3},
                          {{"a", "b"}, {"b", "c"}});
  CHECK(g.source_weights_normalized());
  CHECK(g.weight(0) == 1);  // source
  CHECK(g.weight(1) == 2);
  CHECK(g.weight(2) == 3);  // sink keeps its weight
  WeightedOrientedGraph quiet({"a", "b"}, {1, 5}, {{"a", "b"}});
  CHECK(!quiet.source_weights_normalized());
}

TEST_CASE("pentagon accessors") {
  WeightedOrientedGraph g = two_sink_pentagon(2, 2);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.vertex_name(4) == "x5");
  CHECK(g.weights() == std::vector<int>{1, 2, 1, 2, 2});
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(1, 0));
  CHECK(g.out_neighbors(0) == std::vector<std::size_t>{1, 4});
  CHECK(g.in_neighbors(3) == std::vector<std::size_t>{2, 4});
  CHECK(g.neighbors(4) == std::vector<std::size_t>{0, 3});
  CHECK(g.degree(2) == 2);
  CHECK(g.v_plus() == std::vector<std::size_t>{1, 3, 4});
  CHECK(g.sources() == std::vector<std::size_t>{0, 2});
  CHECK(g.sinks() == std::vector<std::size_t>{1, 3});
  CHECK(!g.is_sink_only_vplus());  // x5 is weighted but not a sink
  // edges come back sorted by (tail, head)
  auto e = g.edges();
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(e == std::vector<std::pair<std::size_t, std::size_t>>{
                 {0, 1}, {0, 4}, {2, 1}, {2, 3}, {4, 3}});
}

TEST_CASE("weight-class queries") {
  WeightedOrientedGraph g({"a", "b"}, {1, 2}, {{"a", "b"}});
  CHECK(g.v_plus() == std::vector<std::size_t>{1});
  CHECK(g.is_sink_only_vplus());
  CHECK(g.with_weights({1, 1}).v_plus().empty());
}

TEST_CASE("cycle family: natural, seeded and explicit orientations") {
  WeightedOrientedGraph c5 = make_cycle(5, {1, 2, 1, 1, 1});
  CHECK(c5.vertex_count() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(c5.has_edge(i, (i + 1) % 5));

  std::vector<bool> flips{false, true, false, false, true};
  WeightedOrientedGraph mixed =
      make_cycle(5, {1, 1, 1, 1, 1}, Orientation::explicit_flips(flips));
  CHECK(mixed.has_edge(0, 1));
  CHECK(mixed.has_edge(2, 1));  // flipped
  CHECK(mixed.has_edge(0, 4));  // flipped wrap-around edge

  WeightedOrientedGraph s1 =
      make_cycle(7, {1, 1, 1, 1, 1, 1, 1}, Orientation::seeded(99));
  WeightedOrientedGraph s2 =
      make_cycle(7, {1, 1, 1, 1, 1, 1, 1}, Orientation::seeded(99));
  CHECK(s1.edges() == s2.edges());

  CHECK_THROWS_AS(make_cycle(2, {1, 1}), graph_error);
  CHECK_THROWS_AS(make_cycle(3, {1, 1}), graph_error);
  CHECK_THROWS_AS(
      make_cycle(3, {1, 1, 1}, Orientation::explicit_flips({true})),
      graph_error);
}

TEST_CASE("path family is naturally oriented with x0 as source") {
  WeightedOrientedGraph p = make_path(3, {1, 2, 2, 1});
  CHECK(p.vertex_count() == 4);
  CHECK(p.vertex_name(0) == "x0");
  CHECK(p.has_edge(0, 1));
  CHECK(p.has_edge(1, 2));
  CHECK(p.has_edge(2, 3));
  CHECK(p.sources() == std::vector<std::size_t>{0});
  CHECK(p.sinks() == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(make_path(0, {1}), graph_error);
}

TEST_CASE("path fixture matches an explicitly named graph up to renaming") {
  WeightedOrientedGraph by_family = make_path(3, {1, 2, 1, 1});
  WeightedOrientedGraph by_hand(
      {"x1", "x2", "x3", "x4"}, {1, 2, 1, 1},
      {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}});
  CHECK(by_family.weights() == by_hand.weights());
  CHECK(by_family.edges() == by_hand.edges());
  CHECK(by_family.vertex_name(0) == "x0");
  CHECK(by_hand.vertex_name(0) == "x1");
}

TEST_CASE("star family spokes point out of the hub by default") {
  WeightedOrientedGraph s = make_star(3, {2, 1, 2, 3});
  CHECK(s.vertex_count() == 4);
  CHECK(s.vertex_name(0) == "x0");
  // the hub is a source under the natural orientation, so its weight resets
  CHECK(s.weight(0) == 1);
  CHECK(s.source_weights_normalized());
  for (std::size_t i = 1; i <= 3; ++i) CHECK(s.has_edge(0, i));

  WeightedOrientedGraph in = make_star(
      3, {2, 1, 2, 3}, Orientation::explicit_flips({true, true, true}));
  CHECK(in.weight(0) == 2);  // hub is now a sink and keeps its weight
  for (std::size_t i = 1; i <= 3; ++i) CHECK(in.has_edge(i, 0));
  CHECK_THROWS_AS(make_star(0, {1}), graph_error);
}

TEST_CASE("two odd cycles glued at the first vertex") {
  WeightedOrientedGraph g = make_clique_sum(1, 1, {1, 1, 1, 1, 1});
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.degree(0) == 4);
  for (std::size_t v = 1; v < 5; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.has_edge(0, 1));  // x1 -> x2
  CHECK(g.has_edge(2, 0));  // x3 -> x1 closes the first triangle
  CHECK(g.has_edge(0, 3));  // x1 -> y2
  CHECK(g.has_edge(4, 0));  // y3 -> x1 closes the second
  CHECK_THROWS_AS(make_clique_sum(0, 1, {1, 1, 1}), graph_error);
}

TEST_CASE("complete multipartite structure") {
  WeightedOrientedGraph g =
      make_complete_multipartite({2, 1, 1}, {1, 1, 1, 1});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);  // 2*1 + 2*1 + 1*1
  // vertices in the same part are non-adjacent; across parts adjacent
  CHECK(!g.has_edge(0, 1));
  CHECK(!g.has_edge(1, 0));
  for (std::size_t a : {0u, 1u})
    for (std::size_t b : {2u, 3u}) CHECK((g.has_edge(a, b) || g.has_edge(b, a)));
  CHECK((g.has_edge(2, 3) || g.has_edge(3, 2)));
  // natural direction points from the lower part to the higher
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 3));
  CHECK_THROWS_AS(make_complete_multipartite({3}, {1, 1, 1}), graph_error);
}

TEST_CASE("vertex deletion keeps weights except for new sources") {
  // a -> b -> c with c weighted; deleting b isolates a and c
  WeightedOrientedGraph g({"a", "b", "c"}, {1, 2, 3},
                          {{"a", "b"}, {"b", "c"}});
  WeightedOrientedGraph h = delete_vertices(g, {1});
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 0);
  CHECK(h.weight(0) == 1);
  CHECK(h.weight(1) == 3);  // isolated, not a source: weight survives

  WeightedOrientedGraph pent = two_sink_pentagon(2, 3);
  WeightedOrientedGraph cut = delete_vertices(pent, {4});  // drop x5
  CHECK(cut.vertex_count() == 4);
  CHECK(cut.edge_count() == 3);
  CHECK(cut.universe()->name(3) == "x4");
  CHECK(cut.weight(1) == 2);
  CHECK(cut.weight(3) == 3);
  CHECK_THROWS_AS(delete_vertices(pent, {9}), std::out_of_range);
}

TEST_CASE("weighted sinks reset to one") {
  WeightedOrientedGraph g = two_sink_pentagon(2, 2);
  auto [reduced, reset] = sink_weights_to_one(g);
  CHECK(reset == std::vector<std::size_t>{1, 3});
  CHECK(reduced.weights() == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(reduced.edges() == g.edges());
  // already-reduced graphs come back unchanged
  auto [again, none] = sink_weights_to_one(reduced);
  CHECK(none.empty());
  CHECK(again.weights() == reduced.weights());
}

TEST_CASE("clamping caps weights at two") {
  WeightedOrientedGraph g = two_sink_pentagon(5, 3);
  WeightedOrientedGraph c = clamp_weights_to_two(g);
  CHECK(c.weights() == std::vector<int>{1, 2, 1, 2, 2});
  CHECK(c.edges() == g.edges());
}

TEST_CASE("seeded orientations resolve deterministically") {
  Orientation o = Orientation::seeded(1234);
  auto f1 = o.resolve(9);
  auto f2 = o.resolve(9);
  CHECK(f1 == f2);
  CHECK(f1.size() == 9);
  CHECK(Orientation::natural().resolve(4) == std::vector<bool>(4, false));
  auto ex = Orientation::explicit_flips({true, false});
  CHECK(ex.resolve(2) == std::vector<bool>{true, false});
  CHECK_THROWS_AS(ex.resolve(3), graph_error);
}
