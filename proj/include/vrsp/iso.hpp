#pragma once

#include <map>
#include <optional>
#include <string>

#include "vrsp/graph.hpp"

namespace vrsp {

struct IsoWitness {
  // Bijection V(G) -> V(H). Arcs and labels transfer exactly.
  std::map<std::string, std::string> vertex_map;
};

// Backtracking over vertices ordered by refinement signature
// (level, in-degree, out-degree, incident label multisets); candidates are
// restricted to equal signatures and tried in id order, so witnesses are
// deterministic.
std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h);

// Re-validates a witness by direct arc-set comparison.
bool validate_witness(const Graph& g, const Graph& h, const IsoWitness& w);

IsoWitness invert_witness(const IsoWitness& w);

}  // namespace vrsp
