#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "vrsp/figures.hpp"

using namespace vrsp;
using support::quick_graph;

TEST_CASE("build_graph basics and merge rule") {
  Graph g = quick_graph({"u", "v"}, {{"u", "v", "a"}});
  CHECK(g.vertices().size() == 2);
  CHECK(g.arcs().size() == 1);

  // duplicate (tail, head, label) triples collapse
  Graph merged = quick_graph({"u", "v"}, {{"u", "v", "a"}, {"u", "v", "a"}});
  CHECK(merged.arcs().size() == 1);

  // parallel arcs with distinct labels stay
  Graph par = quick_graph({"u", "v"}, {{"u", "v", "a"}, {"u", "v", "b"}});
  CHECK(par.arcs().size() == 2);
}

TEST_CASE("build_graph error paths") {
  CHECK_THROWS_WITH_AS(quick_graph({"u", "v"}, {{"u", "v", "a"}, {"v", "u", "b"}}),
                       doctest::Contains("cycle"), Error);
  try {
    quick_graph({"u", "v"}, {{"u", "v", "a"}, {"v", "u", "b"}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CycleDetected);
  }
  try {
    quick_graph({"u"}, {{"u", "w", "a"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DanglingEndpoint);
  }
  try {
    quick_graph({"u", "v"}, {{"u", "v", ""}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyAction);
  }
  CHECK_THROWS_AS(Weight::parse("0"), Error);
  CHECK_THROWS_AS(Weight::parse("-1"), Error);
  try {
    quick_graph({"u", "v"}, {{"u", "u", "a"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CycleDetected);  // loops are 1-cycles
  }
}

TEST_CASE("weights are exact decimals") {
  CHECK(Weight::parse("1.50").str() == "1.5");
  CHECK(Weight::parse("01").str() == "1");
  CHECK(Weight::parse(".5").str() == "0.5");
  CHECK(Weight::parse("0.25") == Weight::parse("0.250"));
  CHECK(Weight::parse("0.25") < Weight::parse("0.5"));
  CHECK(Weight::parse("2") > Weight::parse("1.75"));
  CHECK(Label{"a", Weight::parse("1")} != Label{"a", Weight::parse("1.5")});
}

TEST_CASE("degrees on fig1") {
  Graph g = figures::fig1().graph;
  CHECK(degrees(g, "u0") == Degrees{0, 4});
  CHECK(degrees(g, "v3") == Degrees{2, 0});
  CHECK_THROWS_AS(degrees(g, "nope"), Error);

  Graph iso = quick_graph({"alone"}, {});
  CHECK(degrees(iso, "alone") == Degrees{0, 0});
}

TEST_CASE("source and sink sets") {
  Graph g = figures::fig1().graph;
  CHECK(source_set(g) == std::set<std::string>{"u0"});
  CHECK(sink_set(g) == std::set<std::string>{"v3", "v4"});

  Graph single = quick_graph({"s"}, {});
  CHECK(source_set(single) == std::set<std::string>{"s"});
  CHECK(sink_set(single) == std::set<std::string>{"s"});

  Graph f4 = figures::fig4().graph;
  CHECK(source_set(f4) == std::set<std::string>{"u2"});
  CHECK(sink_set(f4) == std::set<std::string>{"u13"});
}

TEST_CASE("level assignment") {
  Graph path = quick_graph({"u", "v", "w"}, {{"u", "v", "a"}, {"v", "w", "b"}});
  LevelAssignment la = level_assignment(path);
  CHECK(la.level.at("u") == 0);
  CHECK(la.level.at("v") == 1);
  CHECK(la.level.at("w") == 2);
  CHECK(la.max_level == 2);

  // frozen from peeling fig1's arc list by hand
  Graph g = figures::fig1().graph;
  LevelAssignment lg = level_assignment(g);
  CHECK(lg.level.at("u0") == 0);
  CHECK(lg.level.at("u1,1") == 1);
  CHECK(lg.level.at("u1,2") == 1);
  for (const char* v : {"v1,1", "v1,2", "v2,1", "v2,2"}) CHECK(lg.level.at(v) == 2);
  CHECK(lg.level.at("v3") == 3);
  CHECK(lg.level.at("v4") == 3);

  Graph anti = quick_graph({"a", "b", "c"}, {});
  LevelAssignment lc = level_assignment(anti);
  for (const auto& [id, lvl] : lc.level) CHECK(lvl == 0);

  // every arc strictly increases level, on all fixtures
  for (const Graph& fg :
       {figures::fig1().graph, figures::fig2().graph, figures::fig4().graph,
        figures::fig5().graph}) {
    LevelAssignment l = level_assignment(fg);
    for (const auto& a : fg.arcs()) CHECK(l.level.at(a.tail) < l.level.at(a.head));
  }
}

TEST_CASE("last level and sink set differ in general") {
  Graph g = quick_graph({"u", "v", "w", "x"},
                        {{"u", "v", "a"}, {"v", "w", "b"}, {"u", "x", "c"}});
  LevelAssignment la = level_assignment(g);
  std::set<std::string> last;
  for (const auto& [id, lvl] : la.level)
    if (lvl == la.max_level) last.insert(id);
  CHECK(last == std::set<std::string>{"w"});
  CHECK(sink_set(g) == std::set<std::string>{"w", "x"});
}

TEST_CASE("components") {
  Graph g = figures::fig1().graph;
  CHECK(components(g).size() == 1);

  std::vector<Vertex> vs;
  for (const auto& v : g.vertices()) vs.push_back(v);
  vs.push_back(Vertex{"zzz-isolated", VertexKind::Plain, {}});
  std::vector<Arc> as = g.arcs();
  Graph g2 = build_graph(vs, as);
  auto comps = components(g2);
  CHECK(comps.size() == 2);
  // ordered by smallest vertex id
  CHECK(comps[0].has_vertex("u0"));
  CHECK(comps[1].has_vertex("zzz-isolated"));

  CHECK(components(Graph{}).empty());
}

TEST_CASE("induced and arc-induced subgraphs") {
  Graph g = figures::fig1().graph;
  Graph block = induced_subgraph(g, {"u1,1", "u1,2", "v1,1", "v1,2", "v2,1", "v2,2"});
  CHECK(block.arcs().size() == 8);
  for (const auto& a : block.arcs()) CHECK(a.label.action == "d");

  CHECK(induced_subgraph(g, {}).vertices().empty());
  CHECK_THROWS_AS(induced_subgraph(g, {"nope"}), Error);

  std::vector<int> e_arcs;
  for (std::size_t i = 0; i < g.arcs().size(); ++i)
    if (g.arcs()[i].label.action == "e") e_arcs.push_back(static_cast<int>(i));
  Graph ge = arc_induced_subgraph(g, e_arcs);
  CHECK(ge.vertex_ids() == std::set<std::string>{"v1,1", "v3"});
  CHECK(ge.arcs().size() == 1);
  CHECK_THROWS_AS(arc_induced_subgraph(g, {9999}), Error);
}

TEST_CASE("cut classification") {
  Graph g = figures::fig1().graph;
  std::set<std::string> x{"u0", "u1,1", "u1,2"};
  std::set<std::string> y;
  for (const auto& v : g.vertices())
    if (!x.count(v.id)) y.insert(v.id);
  CutSet c = cut(g, x, y);
  CHECK(c.forward.size() == 10);  // a, i and the eight d arcs
  CHECK(c.backward.empty());

  CutSet none = cut(g, {"v3"}, {"v4"});
  CHECK(none.forward.empty());
  CHECK(none.backward.empty());

  Graph f4 = figures::fig4().graph;
  CutSet rows = cut(f4, {"u2", "u5", "u8", "u11"}, {"u3", "u6", "u9", "u12"});
  CHECK(rows.forward.size() == 4);
  for (int i : rows.forward) CHECK(f4.arcs()[i].label.action == "b");

  CHECK_THROWS_AS(cut(g, {}, y), Error);
  CHECK_THROWS_AS(cut(g, {"u0"}, {"u0", "v3"}), Error);
}

TEST_CASE("cut cardinality equals direct crossing count") {
  support::TestRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = support::random_dag(rng, 7, 3);
    if (g.vertices().size() < 2) continue;
    std::set<std::string> x, y;
    for (const auto& v : g.vertices()) (rng.pick(2) ? x : y).insert(v.id);
    if (x.empty() || y.empty()) continue;
    CutSet c = cut(g, x, y);
    std::size_t direct = 0;
    for (const auto& a : g.arcs()) {
      bool tx = x.count(a.tail), hx = x.count(a.head);
      if (tx != hx) ++direct;
    }
    CHECK(c.forward.size() + c.backward.size() == direct);
  }
}

TEST_CASE("disjoint union") {
  Graph a = quick_graph({"u", "v"}, {{"u", "v", "a"}});
  CHECK(same_graph(disjoint_union({a}), a));

  Graph b = quick_graph({"x", "y"}, {{"x", "y", "b"}});
  Graph u = disjoint_union({a, b});
  CHECK(u.vertices().size() == 4);
  CHECK(u.arcs().size() == 2);
  CHECK(components(u).size() == 2);

  // round trip through components, piecewise isomorphic
  auto comps = components(u);
  Graph again = disjoint_union(comps);
  auto comps2 = components(again);
  REQUIRE(comps.size() == comps2.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    CHECK(is_isomorphic(comps[i], comps2[i]).has_value());
}
