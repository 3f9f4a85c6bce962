#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vrsp/graph.hpp"

namespace vrsp {

// Ordered list of vertex sets to contract left to right. Later sets may
// name vertices already absorbed by earlier contractions; they resolve to
// the replacement vertex.
struct ContractionSpec {
  std::vector<std::vector<std::string>> sets;
};

struct ContractionResult {
  Graph graph;
  // Maps every vertex id of the input graph to the id carrying it in the
  // result (itself when untouched).
  std::map<std::string, std::string> image;
};

// Replace x by a fresh vertex, drop internal arcs, re-end crossing arcs,
// merge arcs that become identical triples. Errors: EmptySet,
// NotProperSubset, UnknownVertex, ContractionCreatesCycle.
ContractionResult contract(const Graph& g, const std::set<std::string>& x);

// Left-to-right fold of contract with the absorbed-vertex substitution rule.
// Errors as contract, with the failing set index reported. When allow_total
// is set, a set resolving to the whole vertex universe collapses the graph
// to a single vertex instead of failing NotProperSubset.
ContractionResult contract_seq(const Graph& g, const ContractionSpec& spec,
                               bool allow_total = false);

}  // namespace vrsp
