#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "vrsp/contract.hpp"
#include "vrsp/figures.hpp"

using namespace vrsp;
using support::quick_graph;

TEST_CASE("contracting one head pair of fig1 merges its d arcs") {
  GraphDocument doc = figures::fig1();
  ContractionResult res = contract(doc.graph, {"v1,1", "v1,2"});
  std::string merged = res.image.at("v1,1");
  CHECK(merged == res.image.at("v1,2"));
  CHECK(res.graph.vertices().size() == 8);

  // in: a, d from u1,1, d from u1,2 after the merge; out: e, f
  std::multiset<std::string> in_labels, out_labels;
  for (int i : res.graph.in_arcs(merged)) in_labels.insert(res.graph.arcs()[i].label.action);
  for (int i : res.graph.out_arcs(merged)) out_labels.insert(res.graph.arcs()[i].label.action);
  CHECK(in_labels == std::multiset<std::string>{"a", "d", "d"});
  CHECK(out_labels == std::multiset<std::string>{"e", "f"});

  const Vertex& v = res.graph.vertex(merged);
  CHECK(v.kind == VertexKind::Contracted);
  CHECK(v.origin == std::vector<std::string>{"v1,1", "v1,2"});
}

TEST_CASE("contracting a singleton renames only") {
  Graph g = quick_graph({"u", "v"}, {{"u", "v", "a"}});
  ContractionResult res = contract(g, {"u"});
  CHECK(res.graph.vertices().size() == 2);
  CHECK(res.graph.arcs().size() == 1);
  CHECK(is_isomorphic(g, res.graph).has_value());
  CHECK(res.image.at("u") != "u");
  CHECK(res.image.at("v") == "v");
}

TEST_CASE("contraction error paths") {
  Graph path = quick_graph({"u", "v", "w"}, {{"u", "v", "a"}, {"v", "w", "b"}});
  try {
    contract(path, {"u", "w"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContractionCreatesCycle);
  }
  try {
    contract(path, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySet);
  }
  try {
    contract(path, {"u", "v", "w"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotProperSubset);
  }
  try {
    contract(path, {"zz"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
}

TEST_CASE("contract_seq reproduces the fig1 factor") {
  GraphDocument doc = figures::fig1();
  ContractionSpec spec{{doc.sets.at("R2"), doc.sets.at("R3"), doc.sets.at("R4")}};
  ContractionResult res = contract_seq(doc.graph, spec);
  CHECK(res.graph.vertices().size() == 6);
  CHECK(res.graph.arcs().size() == 10);

  // parallel b and c arcs into the contracted middle vertex
  std::string xt = res.image.at("u1,1");
  std::multiset<std::string> in_labels;
  for (int i : res.graph.in_arcs(xt)) in_labels.insert(res.graph.arcs()[i].label.action);
  CHECK(in_labels == std::multiset<std::string>{"b", "c"});
}

TEST_CASE("contract_seq with empty spec is identity") {
  Graph g = figures::fig4().graph;
  ContractionResult res = contract_seq(g, ContractionSpec{});
  CHECK(same_graph(res.graph, g));
}

TEST_CASE("overlapping sets follow the substitution rule") {
  Graph g = quick_graph({"a", "b", "c", "d"}, {});
  ContractionSpec spec{{{"a", "b"}, {"b", "c"}}};
  ContractionResult res = contract_seq(g, spec);
  CHECK(res.graph.vertices().size() == 2);
  CHECK(res.image.at("a") == res.image.at("b"));
  CHECK(res.image.at("b") == res.image.at("c"));
  CHECK(res.image.at("d") == "d");
  // the second contraction absorbed the first's vertex and c
  CHECK(res.graph.vertex(res.image.at("c")).origin ==
        std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("contract_seq reports the failing set index") {
  Graph path = quick_graph({"u", "v", "w"}, {{"u", "v", "a"}, {"v", "w", "b"}});
  try {
    contract_seq(path, ContractionSpec{{{"u"}, {"zz"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
    CHECK(std::string(e.what()).find("set 1") != std::string::npos);
  }
}

TEST_CASE("contraction size law on antichain subsets") {
  support::TestRng rng(11);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 60; ++trial) {
    Graph g = support::random_dag(rng, 8, 3);
    if (g.vertices().size() < 3) continue;
    // a subset of one level never creates a cycle
    LevelAssignment la = level_assignment(g);
    std::map<int, std::vector<std::string>> by_level;
    for (const auto& [id, lvl] : la.level) by_level[lvl].push_back(id);
    auto& pool = by_level.begin()->second;
    std::set<std::string> x;
    for (const auto& id : pool)
      if (rng.pick(2)) x.insert(id);
    if (x.empty()) x.insert(pool.front());
    if (x.size() >= g.vertices().size()) continue;
    ContractionResult res = contract(g, x);
    CHECK(res.graph.vertices().size() == g.vertices().size() - x.size() + 1);
    // every surviving arc corresponds to exactly one (tail, head, label)
    // class of the original with not both ends in x
    std::set<std::string> classes;
    for (const auto& a : g.arcs()) {
      bool tin = x.count(a.tail), hin = x.count(a.head);
      if (tin && hin) continue;
      classes.insert(res.image.at(a.tail) + "|" + res.image.at(a.head) + "|" + a.label.str());
    }
    CHECK(classes.size() == res.graph.arcs().size());
    ++tested;
  }
  CHECK(tested >= 30);
}
