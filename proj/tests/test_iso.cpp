#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "vrsp/figures.hpp"

using namespace vrsp;
using support::quick_graph;

namespace {

Graph renamed(const Graph& g, const std::string& prefix) {
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices()) vs.push_back(Vertex{prefix + v.id, v.kind, v.origin});
  std::vector<Arc> as;
  for (const auto& a : g.arcs()) as.push_back(Arc{prefix + a.tail, prefix + a.head, a.label});
  return build_graph(std::move(vs), std::move(as));
}

}  // namespace

TEST_CASE("renamed copies are isomorphic with a valid witness") {
  for (const Graph& g : {figures::fig1().graph, figures::fig4().graph, figures::fig5().graph}) {
    Graph h = renamed(g, "z_");
    auto w = is_isomorphic(g, h);
    REQUIRE(w.has_value());
    CHECK(validate_witness(g, h, *w));
  }
}

TEST_CASE("label differences break isomorphism") {
  Graph a = quick_graph({"a", "b"}, {{"a", "b", "p"}});
  Graph b = quick_graph({"x", "y"}, {{"x", "y", "q"}});
  CHECK_FALSE(is_isomorphic(a, b).has_value());

  // same action, different weight: label pairs differ
  Graph c = quick_graph({"x", "y"}, {{"x", "y", "p"}}, "2");
  CHECK_FALSE(is_isomorphic(a, c).has_value());
}

TEST_CASE("empty graphs are isomorphic") {
  auto w = is_isomorphic(Graph{}, Graph{});
  REQUIRE(w.has_value());
  CHECK(w->vertex_map.empty());
}

TEST_CASE("reflexive, symmetric, transitive on a fixture set") {
  std::vector<Graph> gs{figures::fig1().graph, figures::fig4().graph,
                        quick_graph({"a", "b", "c"}, {{"a", "b", "p"}, {"b", "c", "q"}})};
  for (const Graph& g : gs) {
    auto self = is_isomorphic(g, g);
    REQUIRE(self.has_value());
    CHECK(validate_witness(g, g, *self));

    Graph h = renamed(g, "r_");
    auto fwd = is_isomorphic(g, h);
    REQUIRE(fwd.has_value());
    CHECK(validate_witness(h, g, invert_witness(*fwd)));

    Graph k = renamed(h, "s_");
    auto snd = is_isomorphic(h, k);
    REQUIRE(snd.has_value());
    IsoWitness composed;
    for (const auto& [u, v] : fwd->vertex_map) composed.vertex_map[u] = snd->vertex_map.at(v);
    CHECK(validate_witness(g, k, composed));
  }
}

TEST_CASE("witnesses are deterministic") {
  Graph g = figures::fig1().graph;
  Graph h = renamed(g, "w_");
  auto a = is_isomorphic(g, h);
  auto b = is_isomorphic(g, h);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->vertex_map == b->vertex_map);
}

TEST_CASE("backtracking agrees with the permutation oracle") {
  support::TestRng rng(23);
  int agree = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = support::random_dag(rng, 6, 2);
    Graph h;
    if (rng.pick(2)) {
      h = renamed(g, "m_");
    } else {
      h = support::random_dag(rng, 6, 2);
    }
    bool fast = is_isomorphic(g, h).has_value();
    bool slow = support::brute_force_isomorphic(g, h);
    CHECK(fast == slow);
    agree += fast == slow;
  }
  CHECK(agree == 80);
}

TEST_CASE("near-symmetric graphs need real search") {
  // two parallel diamonds distinguished only by deep labels
  Graph g = quick_graph({"s", "a", "b", "t"},
                        {{"s", "a", "p"}, {"s", "b", "p"}, {"a", "t", "q"}, {"b", "t", "r"}});
  Graph h = quick_graph({"s", "a", "b", "t"},
                        {{"s", "a", "p"}, {"s", "b", "p"}, {"a", "t", "r"}, {"b", "t", "q"}});
  auto w = is_isomorphic(g, h);
  REQUIRE(w.has_value());
  CHECK(w->vertex_map.at("a") == "b");
  CHECK(support::brute_force_isomorphic(g, h));
}
