#pragma once

#include <random>
#include <string>
#include <vector>

#include "vrsp/document.hpp"
#include "vrsp/figures.hpp"
#include "vrsp/graph.hpp"
#include "vrsp/iso.hpp"

namespace support {

using namespace vrsp;

inline std::string fixture_path(const std::string& name) {
  return std::string(VRSP_FIXTURES_DIR) + "/" + name;
}

inline Graph quick_graph(const std::vector<std::string>& vertex_ids,
                         const std::vector<std::tuple<std::string, std::string, std::string>>&
                             arcs_by_action,
                         const std::string& weight = "1") {
  std::vector<Vertex> vs;
  for (const auto& id : vertex_ids) vs.push_back(Vertex{id, VertexKind::Plain, {}});
  std::vector<Arc> as;
  for (const auto& [t, h, action] : arcs_by_action)
    as.push_back(Arc{t, h, Label{action, Weight::parse(weight)}});
  return build_graph(std::move(vs), std::move(as));
}

// Deterministic random DAGs for property suites. Raw engine draws only; the
// standard distributions are not portable.
struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(std::uint64_t seed) : eng(seed) {}
  int pick(int n) { return n <= 1 ? 0 : static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
};

inline Graph random_dag(TestRng& rng, int max_vertices, int label_pool, bool connected = false) {
  int n = 1 + rng.pick(max_vertices);
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(Vertex{"n" + std::to_string(i), VertexKind::Plain, {}});
  std::vector<Arc> as;
  static const char* weights[] = {"1", "0.5", "2"};
  auto label = [&] {
    return Label{"l" + std::to_string(rng.pick(label_pool)),
                 Weight::parse(weights[rng.pick(3)])};
  };
  if (connected)
    for (int v = 1; v < n; ++v)
      as.push_back(Arc{"n" + std::to_string(rng.pick(v)), "n" + std::to_string(v), label()});
  int extra = rng.pick(2 * n + 1);
  for (int e = 0; e < extra && n >= 2; ++e) {
    int a = rng.pick(n - 1);
    int b = a + 1 + rng.pick(n - 1 - a);
    as.push_back(Arc{"n" + std::to_string(a), "n" + std::to_string(b), label()});
  }
  return build_graph(std::move(vs), std::move(as));
}

// Exhaustive permutation oracle for isomorphism, independent of the
// backtracking search. Only for graphs of at most ~8 vertices.
inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertices().size() != h.vertices().size() || g.arcs().size() != h.arcs().size())
    return false;
  std::vector<std::string> gs, hs;
  for (const auto& v : g.vertices()) gs.push_back(v.id);
  for (const auto& v : h.vertices()) hs.push_back(v.id);
  std::sort(hs.begin(), hs.end());
  do {
    bool ok = true;
    std::map<std::string, std::string> map;
    for (std::size_t i = 0; i < gs.size(); ++i) map[gs[i]] = hs[i];
    for (const auto& a : g.arcs())
      if (!h.has_arc(map[a.tail], map[a.head], a.label)) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(hs.begin(), hs.end()));
  return false;
}

}  // namespace support
