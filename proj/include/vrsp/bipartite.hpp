#pragma once

#include <set>
#include <string>
#include <vector>

#include "vrsp/graph.hpp"

namespace vrsp {

// All arcs of a graph carrying one label, with the arc-induced subgraph.
struct LabelBlock {
  Label label;
  std::vector<int> arcs;
  std::set<std::string> tails;
  std::set<std::string> heads;
  Graph subgraph;
};

// One block per distinct label, ordered by label; blocks partition A(G).
std::vector<LabelBlock> label_blocks(const Graph& g);

struct BlockClass {
  bool bipartite = false;
  bool complete = false;
  bool semicomplete = false;
  bool trivial = false;
  bool all_forward = false;
  bool all_backward = false;
};

// Partite sets are (tails, heads) of the block. Throws NotBipartite when
// some vertex is both a tail and a head within the block.
BlockClass classify_block(const LabelBlock& block);

}  // namespace vrsp
