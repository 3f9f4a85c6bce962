#include "vrsp/iso.hpp"

#include <algorithm>

namespace vrsp {

namespace {

struct Signature {
  int level;
  int in_deg;
  int out_deg;
  std::vector<Label> in_labels;   // sorted, with multiplicity
  std::vector<Label> out_labels;
  auto operator<=>(const Signature&) const = default;
};

std::map<std::string, Signature> signatures(const Graph& g) {
  LevelAssignment la = level_assignment(g);
  std::map<std::string, Signature> sig;
  for (const auto& v : g.vertices()) {
    Signature s;
    s.level = la.level.at(v.id);
    s.in_deg = g.in_degree(v.id);
    s.out_deg = g.out_degree(v.id);
    for (int i : g.in_arcs(v.id)) s.in_labels.push_back(g.arcs()[i].label);
    for (int i : g.out_arcs(v.id)) s.out_labels.push_back(g.arcs()[i].label);
    std::sort(s.in_labels.begin(), s.in_labels.end());
    std::sort(s.out_labels.begin(), s.out_labels.end());
    sig[v.id] = std::move(s);
  }
  return sig;
}

struct Search {
  const Graph& g;
  const Graph& h;
  std::vector<std::string> order;              // g vertices, by (signature, id)
  std::map<std::string, std::vector<std::string>> candidates;  // g vertex -> h vertices
  std::map<std::string, std::string> fwd;      // g -> h
  std::set<std::string> used;

  bool consistent(const std::string& u, const std::string& hu) const {
    for (const auto& [w, hw] : fwd) {
      if (g.arcs_between(u, w) != h.arcs_between(hu, hw)) return false;
      if (g.arcs_between(w, u) != h.arcs_between(hw, hu)) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::string& u = order[depth];
    for (const auto& hu : candidates.at(u)) {
      if (used.count(hu) || !consistent(u, hu)) continue;
      fwd[u] = hu;
      used.insert(hu);
      if (run(depth + 1)) return true;
      fwd.erase(u);
      used.erase(hu);
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertices().size() != h.vertices().size() || g.arcs().size() != h.arcs().size())
    return std::nullopt;
  if (g.vertices().empty()) return IsoWitness{};

  auto sg = signatures(g);
  auto sh = signatures(h);

  std::map<Signature, std::vector<std::string>> class_g, class_h;
  for (const auto& [id, s] : sg) class_g[s].push_back(id);
  for (const auto& [id, s] : sh) class_h[s].push_back(id);
  if (class_g.size() != class_h.size()) return std::nullopt;
  for (const auto& [s, ids] : class_g) {
    auto it = class_h.find(s);
    if (it == class_h.end() || it->second.size() != ids.size()) return std::nullopt;
  }

  Search search{g, h, {}, {}, {}, {}};
  for (const auto& [s, ids] : class_g)
    for (const auto& id : ids) {
      search.order.push_back(id);
      search.candidates[id] = class_h.at(s);  // already sorted by id
    }

  if (!search.run(0)) return std::nullopt;
  IsoWitness w{search.fwd};
  return validate_witness(g, h, w) ? std::optional<IsoWitness>(w) : std::nullopt;
}

bool validate_witness(const Graph& g, const Graph& h, const IsoWitness& w) {
  if (w.vertex_map.size() != g.vertices().size()) return false;
  if (g.vertices().size() != h.vertices().size() || g.arcs().size() != h.arcs().size())
    return false;
  std::set<std::string> image;
  for (const auto& [u, hu] : w.vertex_map) {
    if (!g.has_vertex(u) || !h.has_vertex(hu)) return false;
    image.insert(hu);
  }
  if (image.size() != h.vertices().size()) return false;
  for (const auto& a : g.arcs())
    if (!h.has_arc(w.vertex_map.at(a.tail), w.vertex_map.at(a.head), a.label)) return false;
  // Arc counts agree and triples are unique, so the converse holds too.
  return true;
}

IsoWitness invert_witness(const IsoWitness& w) {
  IsoWitness inv;
  for (const auto& [a, b] : w.vertex_map) inv.vertex_map[b] = a;
  return inv;
}

}  // namespace vrsp
