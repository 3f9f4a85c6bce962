#include "vrsp/contract.hpp"

#include <algorithm>

namespace vrsp {

namespace {

// Ids a contraction vertex stands for: a contracted member passes on its
// own origin, anything else contributes its id.
std::vector<std::string> absorbed_ids(const Graph& g, const std::set<std::string>& x) {
  std::set<std::string> acc;
  for (const auto& id : x) {
    const Vertex& v = g.vertex(id);
    if (v.kind == VertexKind::Contracted)
      acc.insert(v.origin.begin(), v.origin.end());
    else
      acc.insert(id);
  }
  return {acc.begin(), acc.end()};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Vertex make_contraction_vertex(const Graph& g, const std::set<std::string>& x,
                               const std::set<std::string>& kept) {
  Vertex nv;
  nv.kind = VertexKind::Contracted;
  nv.origin = absorbed_ids(g, x);
  nv.id = "{" + join(nv.origin, "+") + "}";
  while (kept.count(nv.id)) nv.id += "'";
  return nv;
}

ContractionResult contract_total(const Graph& g) {
  Vertex nv = make_contraction_vertex(g, g.vertex_ids(), {});
  ContractionResult res;
  res.graph = build_graph({nv}, {});
  for (const auto& v : g.vertices()) res.image[v.id] = nv.id;
  return res;
}

}  // namespace

ContractionResult contract(const Graph& g, const std::set<std::string>& x) {
  if (x.empty()) throw Error(ErrorKind::EmptySet, "contraction set is empty");
  for (const auto& id : x) g.vertex(id);
  if (x.size() >= g.vertices().size())
    throw Error(ErrorKind::NotProperSubset, "contraction set must be a proper subset");

  std::set<std::string> kept;
  for (const auto& v : g.vertices())
    if (!x.count(v.id)) kept.insert(v.id);
  Vertex nv = make_contraction_vertex(g, x, kept);

  std::vector<Vertex> vs;
  for (const auto& id : kept) vs.push_back(g.vertex(id));
  vs.push_back(nv);

  std::vector<Arc> as;
  for (const auto& a : g.arcs()) {
    bool tin = x.count(a.tail) > 0, hin = x.count(a.head) > 0;
    if (tin && hin) continue;
    as.push_back(Arc{tin ? nv.id : a.tail, hin ? nv.id : a.head, a.label});
  }

  ContractionResult res;
  try {
    res.graph = build_graph(std::move(vs), std::move(as));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CycleDetected)
      throw Error(ErrorKind::ContractionCreatesCycle,
                  std::string("contracting would create a cycle (") + e.what() + ")");
    throw;
  }
  for (const auto& v : g.vertices()) res.image[v.id] = x.count(v.id) ? nv.id : v.id;
  return res;
}

ContractionResult contract_seq(const Graph& g, const ContractionSpec& spec, bool allow_total) {
  ContractionResult acc;
  acc.graph = g;
  for (const auto& v : g.vertices()) acc.image[v.id] = v.id;

  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    // Resolve members through earlier contractions (the overlap rule).
    std::set<std::string> resolved;
    for (const auto& raw : spec.sets[i]) {
      if (acc.graph.has_vertex(raw)) {
        resolved.insert(raw);
        continue;
      }
      auto it = acc.image.find(raw);
      if (it == acc.image.end() || !acc.graph.has_vertex(it->second))
        throw Error(ErrorKind::UnknownVertex,
                    "set " + std::to_string(i) + ": no vertex '" + raw + "'");
      resolved.insert(it->second);
    }
    ContractionResult step;
    if (allow_total && resolved.size() == acc.graph.vertices().size()) {
      step = contract_total(acc.graph);
    } else {
      try {
        step = contract(acc.graph, resolved);
      } catch (const Error& e) {
        throw Error(e.kind(), "set " + std::to_string(i) + ": " + e.what());
      }
    }
    for (auto& [orig, cur] : acc.image) cur = step.image.at(cur);
    acc.graph = std::move(step.graph);
  }
  return acc;
}

}  // namespace vrsp
