#include "vrsp/graph.hpp"

#include <algorithm>
#include <deque>

namespace vrsp {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::EmptyAction: return "EmptyAction";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArc: return "UnknownArc";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotProperSubset: return "NotProperSubset";
    case ErrorKind::ContractionCreatesCycle: return "ContractionCreatesCycle";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::UnindexedVertex: return "UnindexedVertex";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

const Vertex& Graph::vertex(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "'");
  return verts_[it->second];
}

std::set<std::string> Graph::vertex_ids() const {
  std::set<std::string> ids;
  for (const auto& v : verts_) ids.insert(v.id);
  return ids;
}

const std::vector<int>& Graph::out_arcs(const std::string& id) const {
  vertex(id);
  static const std::vector<int> empty;
  auto it = out_.find(id);
  return it == out_.end() ? empty : it->second;
}

const std::vector<int>& Graph::in_arcs(const std::string& id) const {
  vertex(id);
  static const std::vector<int> empty;
  auto it = in_.find(id);
  return it == in_.end() ? empty : it->second;
}

std::set<Label> Graph::label_set() const {
  std::set<Label> ls;
  for (const auto& a : arcs_) ls.insert(a.label);
  return ls;
}

std::set<Label> Graph::arcs_between(const std::string& u, const std::string& v) const {
  std::set<Label> ls;
  auto it = out_.find(u);
  if (it == out_.end()) return ls;
  for (int i : it->second)
    if (arcs_[i].head == v) ls.insert(arcs_[i].label);
  return ls;
}

bool Graph::has_arc(const std::string& tail, const std::string& head, const Label& l) const {
  Arc probe{tail, head, l};
  return std::binary_search(arcs_.begin(), arcs_.end(), probe);
}

namespace {

// Returns one directed cycle as "a -> b -> ... -> a" for the error message.
std::string find_cycle(const Graph&, const std::vector<Vertex>& verts,
                       const std::vector<Arc>& arcs, const std::set<std::string>& cyclic) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& a : arcs)
    if (cyclic.count(a.tail) && cyclic.count(a.head)) succ[a.tail].push_back(a.head);
  (void)verts;
  // Walk from any cyclic vertex until a repeat appears.
  std::string start = *cyclic.begin();
  std::vector<std::string> path{start};
  std::map<std::string, int> seen{{start, 0}};
  std::string cur = start;
  while (true) {
    const auto& next = succ[cur];
    if (next.empty()) break;  // defensive; cyclic vertices always have successors
    cur = next.front();
    auto it = seen.find(cur);
    if (it != seen.end()) {
      std::string text;
      for (std::size_t i = it->second; i < path.size(); ++i) text += path[i] + " -> ";
      return text + cur;
    }
    seen[cur] = static_cast<int>(path.size());
    path.push_back(cur);
  }
  return start;
}

}  // namespace

Graph build_graph(std::vector<Vertex> vertices, std::vector<Arc> arcs) {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id.empty())
      throw Error(ErrorKind::ValidationError, "empty vertex id");
    if (i > 0 && vertices[i].id == vertices[i - 1].id)
      throw Error(ErrorKind::ValidationError, "duplicate vertex id '" + vertices[i].id + "'");
  }

  Graph g;
  g.verts_ = std::move(vertices);
  for (std::size_t i = 0; i < g.verts_.size(); ++i) g.vindex_[g.verts_[i].id] = static_cast<int>(i);

  for (const auto& a : arcs) {
    if (a.label.action.empty())
      throw Error(ErrorKind::EmptyAction, "arc " + a.tail + " -> " + a.head + " has empty action");
    if (!g.vindex_.count(a.tail))
      throw Error(ErrorKind::DanglingEndpoint, "arc tail '" + a.tail + "' is not a vertex");
    if (!g.vindex_.count(a.head))
      throw Error(ErrorKind::DanglingEndpoint, "arc head '" + a.head + "' is not a vertex");
    if (a.tail == a.head)
      throw Error(ErrorKind::CycleDetected, "loop at '" + a.tail + "': " + a.tail + " -> " + a.head);
  }

  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  g.arcs_ = std::move(arcs);

  for (std::size_t i = 0; i < g.arcs_.size(); ++i) {
    g.out_[g.arcs_[i].tail].push_back(static_cast<int>(i));
    g.in_[g.arcs_[i].head].push_back(static_cast<int>(i));
  }

  // Kahn's algorithm; leftovers witness a cycle.
  std::map<std::string, int> indeg;
  for (const auto& v : g.verts_) indeg[v.id] = 0;
  for (const auto& a : g.arcs_) ++indeg[a.head];
  std::deque<std::string> ready;
  for (const auto& [id, d] : indeg)
    if (d == 0) ready.push_back(id);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::string id = ready.front();
    ready.pop_front();
    ++removed;
    for (int i : g.out_[id])
      if (--indeg[g.arcs_[i].head] == 0) ready.push_back(g.arcs_[i].head);
  }
  if (removed != g.verts_.size()) {
    std::set<std::string> cyclic;
    for (const auto& [id, d] : indeg)
      if (d > 0) cyclic.insert(id);
    throw Error(ErrorKind::CycleDetected,
                "directed cycle: " + find_cycle(g, g.verts_, g.arcs_, cyclic));
  }
  return g;
}

Degrees degrees(const Graph& g, const std::string& v) {
  return Degrees{g.in_degree(v), g.out_degree(v)};
}

std::set<std::string> source_set(const Graph& g) {
  std::set<std::string> s;
  for (const auto& v : g.vertices())
    if (g.in_degree(v.id) == 0) s.insert(v.id);
  return s;
}

std::set<std::string> sink_set(const Graph& g) {
  std::set<std::string> s;
  for (const auto& v : g.vertices())
    if (g.out_degree(v.id) == 0) s.insert(v.id);
  return s;
}

LevelAssignment level_assignment(const Graph& g) {
  LevelAssignment la;
  std::map<std::string, int> indeg;
  for (const auto& v : g.vertices()) indeg[v.id] = g.in_degree(v.id);
  std::vector<std::string> frontier;
  for (const auto& [id, d] : indeg)
    if (d == 0) frontier.push_back(id);
  int level = 0;
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& id : frontier) {
      la.level[id] = level;
      for (int i : g.out_arcs(id))
        if (--indeg[g.arcs()[i].head] == 0) next.push_back(g.arcs()[i].head);
    }
    la.max_level = level;
    ++level;
    frontier = std::move(next);
  }
  return la;
}

std::vector<Graph> components(const Graph& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : g.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::set<std::string> unseen = g.vertex_ids();
  std::map<std::string, std::set<std::string>> groups;  // key: smallest member id
  while (!unseen.empty()) {
    std::string start = *unseen.begin();
    std::set<std::string> group;
    std::deque<std::string> work{start};
    unseen.erase(start);
    group.insert(start);
    while (!work.empty()) {
      std::string cur = work.front();
      work.pop_front();
      for (const auto& nb : adj[cur])
        if (unseen.erase(nb)) {
          group.insert(nb);
          work.push_back(nb);
        }
    }
    groups[*group.begin()] = std::move(group);
  }
  std::vector<Graph> out;
  for (const auto& [key, group] : groups) out.push_back(induced_subgraph(g, group));
  return out;
}

Graph induced_subgraph(const Graph& g, const std::set<std::string>& x) {
  std::vector<Vertex> vs;
  for (const auto& id : x) vs.push_back(g.vertex(id));
  std::vector<Arc> as;
  for (const auto& a : g.arcs())
    if (x.count(a.tail) && x.count(a.head)) as.push_back(a);
  return build_graph(std::move(vs), std::move(as));
}

Graph arc_induced_subgraph(const Graph& g, const std::vector<int>& arc_indices) {
  std::set<std::string> ends;
  std::vector<Arc> as;
  for (int i : arc_indices) {
    if (i < 0 || i >= static_cast<int>(g.arcs().size()))
      throw Error(ErrorKind::UnknownArc, "arc index " + std::to_string(i) + " out of range");
    const Arc& a = g.arcs()[i];
    as.push_back(a);
    ends.insert(a.tail);
    ends.insert(a.head);
  }
  std::vector<Vertex> vs;
  for (const auto& id : ends) vs.push_back(g.vertex(id));
  return build_graph(std::move(vs), std::move(as));
}

CutSet cut(const Graph& g, const std::set<std::string>& x, const std::set<std::string>& y) {
  if (x.empty() || y.empty()) throw Error(ErrorKind::EmptySet, "cut sets must be nonempty");
  for (const auto& id : x) g.vertex(id);
  for (const auto& id : y) g.vertex(id);
  for (const auto& id : x)
    if (y.count(id)) throw Error(ErrorKind::OverlappingSets, "'" + id + "' is in both sets");
  CutSet c;
  c.x = x;
  c.y = y;
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    const Arc& a = g.arcs()[i];
    bool tx = x.count(a.tail) > 0, ty = y.count(a.tail) > 0;
    bool hx = x.count(a.head) > 0, hy = y.count(a.head) > 0;
    if (tx && hy) c.forward.push_back(static_cast<int>(i));
    if (ty && hx) c.backward.push_back(static_cast<int>(i));
  }
  return c;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
  if (gs.size() == 1) return gs.front();
  std::vector<Vertex> vs;
  std::vector<Arc> as;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    std::string prefix = std::to_string(k) + ":";
    for (const auto& v : gs[k].vertices()) {
      Vertex copy = v;
      copy.id = prefix + v.id;
      vs.push_back(std::move(copy));
    }
    for (const auto& a : gs[k].arcs()) as.push_back(Arc{prefix + a.tail, prefix + a.head, a.label});
  }
  return build_graph(std::move(vs), std::move(as));
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.vertices().size() != b.vertices().size() || a.arcs().size() != b.arcs().size())
    return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    if (a.vertices()[i].id != b.vertices()[i].id) return false;
  return a.arcs() == b.arcs();
}

}  // namespace vrsp
