#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vrsp/graph.hpp"

namespace vrsp {

std::string pair_id(const std::string& left, const std::string& right);

// Vertex set V(G) x V(H); one type-left arc per (arc of G, vertex of H) and
// symmetrically. |A| = |A(G)|*|V(H)| + |V(G)|*|A(H)| exactly.
Graph cartesian_product(const Graph& g, const Graph& h);

struct SyncClassification {
  std::set<Label> sync_labels;                 // L(G) ∩ L(H)
  std::vector<int> async_left;                 // arcs of G with label not in L(H)
  std::vector<int> async_right;                // arcs of H with label not in L(G)
  std::vector<std::pair<int, int>> sync_pairs; // (arc of G, arc of H), equal labels
};

SyncClassification classify_sync(const Graph& g, const Graph& h);

// Cartesian product restricted to asynchronous arcs, plus one synchronous
// arc per sync pair.
Graph intermediate_product(const Graph& g, const Graph& h);

enum class PruneOrder { Queue, Stack };

// Intermediate product, then iterated removal of vertices whose in-degree
// (resp. out-degree) dropped to 0 while positive in the Cartesian product,
// together with their incident arcs, until fixpoint.
Graph vrsp(const Graph& g, const Graph& h, PruneOrder order = PruneOrder::Queue);

// Left-associated folds. Error: EmptyList.
Graph vrsp_fold(const std::vector<Graph>& gs);
Graph cartesian_fold(const std::vector<Graph>& gs);

}  // namespace vrsp
