#include "vrsp/bipartite.hpp"

#include <map>

namespace vrsp {

std::vector<LabelBlock> label_blocks(const Graph& g) {
  std::map<Label, LabelBlock> by_label;
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    const Arc& a = g.arcs()[i];
    LabelBlock& b = by_label[a.label];
    b.label = a.label;
    b.arcs.push_back(static_cast<int>(i));
    b.tails.insert(a.tail);
    b.heads.insert(a.head);
  }
  std::vector<LabelBlock> out;
  for (auto& [l, b] : by_label) {
    b.subgraph = arc_induced_subgraph(g, b.arcs);
    out.push_back(std::move(b));
  }
  return out;
}

BlockClass classify_block(const LabelBlock& block) {
  for (const auto& t : block.tails)
    if (block.heads.count(t))
      throw Error(ErrorKind::NotBipartite,
                  "'" + t + "' is both a tail and a head of label " + block.label.str());

  BlockClass c;
  c.bipartite = true;
  c.trivial = block.tails.size() == 1 && block.heads.size() == 1;

  // Partite sets are (tails, heads), so within the block every arc runs
  // tails -> heads.
  c.all_forward = true;
  c.all_backward = block.arcs.empty();

  std::size_t pairs = block.tails.size() * block.heads.size();
  std::size_t present = 0;
  for (const auto& t : block.tails)
    for (const auto& h : block.heads)
      if (!block.subgraph.arcs_between(t, h).empty()) ++present;
  c.complete = present == pairs;
  c.semicomplete = c.complete || present == 0;
  return c;
}

}  // namespace vrsp
