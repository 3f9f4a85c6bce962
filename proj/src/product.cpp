#include "vrsp/product.hpp"

#include <deque>

namespace vrsp {

std::string pair_id(const std::string& left, const std::string& right) {
  return "(" + left + "|" + right + ")";
}

namespace {

Vertex make_pair_vertex(const std::string& l, const std::string& r) {
  Vertex v;
  v.id = pair_id(l, r);
  v.kind = VertexKind::Pair;
  v.origin = {l, r};
  return v;
}

std::vector<Vertex> pair_vertices(const Graph& g, const Graph& h) {
  std::vector<Vertex> vs;
  for (const auto& vg : g.vertices())
    for (const auto& vh : h.vertices()) vs.push_back(make_pair_vertex(vg.id, vh.id));
  return vs;
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  std::vector<Arc> as;
  for (const auto& a : g.arcs())
    for (const auto& vh : h.vertices())
      as.push_back(Arc{pair_id(a.tail, vh.id), pair_id(a.head, vh.id), a.label});
  for (const auto& a : h.arcs())
    for (const auto& vg : g.vertices())
      as.push_back(Arc{pair_id(vg.id, a.tail), pair_id(vg.id, a.head), a.label});
  return build_graph(pair_vertices(g, h), std::move(as));
}

SyncClassification classify_sync(const Graph& g, const Graph& h) {
  SyncClassification sc;
  std::set<Label> lg = g.label_set(), lh = h.label_set();
  for (const auto& l : lg)
    if (lh.count(l)) sc.sync_labels.insert(l);
  for (std::size_t i = 0; i < g.arcs().size(); ++i)
    if (!sc.sync_labels.count(g.arcs()[i].label)) sc.async_left.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < h.arcs().size(); ++j)
    if (!sc.sync_labels.count(h.arcs()[j].label)) sc.async_right.push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    if (!sc.sync_labels.count(g.arcs()[i].label)) continue;
    for (std::size_t j = 0; j < h.arcs().size(); ++j)
      if (g.arcs()[i].label == h.arcs()[j].label)
        sc.sync_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return sc;
}

Graph intermediate_product(const Graph& g, const Graph& h) {
  SyncClassification sc = classify_sync(g, h);
  std::vector<Arc> as;
  for (int i : sc.async_left) {
    const Arc& a = g.arcs()[i];
    for (const auto& vh : h.vertices())
      as.push_back(Arc{pair_id(a.tail, vh.id), pair_id(a.head, vh.id), a.label});
  }
  for (int j : sc.async_right) {
    const Arc& a = h.arcs()[j];
    for (const auto& vg : g.vertices())
      as.push_back(Arc{pair_id(vg.id, a.tail), pair_id(vg.id, a.head), a.label});
  }
  for (const auto& [i, j] : sc.sync_pairs) {
    const Arc& ag = g.arcs()[i];
    const Arc& ah = h.arcs()[j];
    as.push_back(Arc{pair_id(ag.tail, ah.tail), pair_id(ag.head, ah.head), ag.label});
  }
  return build_graph(pair_vertices(g, h), std::move(as));
}

Graph vrsp(const Graph& g, const Graph& h, PruneOrder order) {
  Graph inter = intermediate_product(g, h);

  // Reference degrees come from the Cartesian product; for a pair cell they
  // are the sums of the operand degrees.
  std::map<std::string, int> box_in, box_out, cur_in, cur_out;
  for (const auto& vg : g.vertices())
    for (const auto& vh : h.vertices()) {
      std::string id = pair_id(vg.id, vh.id);
      box_in[id] = g.in_degree(vg.id) + h.in_degree(vh.id);
      box_out[id] = g.out_degree(vg.id) + h.out_degree(vh.id);
    }
  for (const auto& v : inter.vertices()) {
    cur_in[v.id] = inter.in_degree(v.id);
    cur_out[v.id] = inter.out_degree(v.id);
  }

  auto dead = [&](const std::string& id) {
    return (cur_in[id] == 0 && box_in[id] > 0) || (cur_out[id] == 0 && box_out[id] > 0);
  };

  std::set<std::string> alive = inter.vertex_ids();
  std::vector<bool> arc_alive(inter.arcs().size(), true);
  std::deque<std::string> work;
  for (const auto& v : inter.vertices())
    if (dead(v.id)) work.push_back(v.id);

  while (!work.empty()) {
    std::string id;
    if (order == PruneOrder::Queue) {
      id = work.front();
      work.pop_front();
    } else {
      id = work.back();
      work.pop_back();
    }
    if (!alive.count(id) || !dead(id)) continue;
    alive.erase(id);
    for (int i : inter.out_arcs(id)) {
      if (!arc_alive[i]) continue;
      arc_alive[i] = false;
      const std::string& head = inter.arcs()[i].head;
      if (--cur_in[head] >= 0 && alive.count(head) && dead(head)) work.push_back(head);
    }
    for (int i : inter.in_arcs(id)) {
      if (!arc_alive[i]) continue;
      arc_alive[i] = false;
      const std::string& tail = inter.arcs()[i].tail;
      if (--cur_out[tail] >= 0 && alive.count(tail) && dead(tail)) work.push_back(tail);
    }
  }

  std::vector<Vertex> vs;
  for (const auto& v : inter.vertices())
    if (alive.count(v.id)) vs.push_back(v);
  std::vector<Arc> as;
  for (std::size_t i = 0; i < inter.arcs().size(); ++i)
    if (arc_alive[i]) as.push_back(inter.arcs()[i]);
  return build_graph(std::move(vs), std::move(as));
}

Graph vrsp_fold(const std::vector<Graph>& gs) {
  if (gs.empty()) throw Error(ErrorKind::EmptyList, "vrsp_fold of no graphs");
  Graph acc = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) acc = vrsp(acc, gs[i]);
  return acc;
}

Graph cartesian_fold(const std::vector<Graph>& gs) {
  if (gs.empty()) throw Error(ErrorKind::EmptyList, "cartesian_fold of no graphs");
  Graph acc = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) acc = cartesian_product(acc, gs[i]);
  return acc;
}

}  // namespace vrsp
