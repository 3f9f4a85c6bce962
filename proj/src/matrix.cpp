#include "vrsp/matrix.hpp"

#include <algorithm>

#include "vrsp/bipartite.hpp"
#include "vrsp/iso.hpp"

namespace vrsp {

int MatrixIndexing::row(const std::string& id) const {
  auto it = coord.find(id);
  if (it == coord.end()) throw Error(ErrorKind::UnindexedVertex, "no coordinate for '" + id + "'");
  return it->second.first;
}

int MatrixIndexing::col(const std::string& id) const {
  auto it = coord.find(id);
  if (it == coord.end()) throw Error(ErrorKind::UnindexedVertex, "no coordinate for '" + id + "'");
  return it->second.second;
}

MatrixIndexing make_indexing(const std::map<std::string, std::pair<int, int>>& coords) {
  std::map<std::pair<int, int>, std::string> cells;
  for (const auto& [id, c] : coords) {
    auto [it, fresh] = cells.emplace(c, id);
    if (!fresh)
      throw Error(ErrorKind::ValidationError,
                  "vertices '" + it->second + "' and '" + id + "' share cell (" +
                      std::to_string(c.first) + "," + std::to_string(c.second) + ")");
  }
  return MatrixIndexing{coords};
}

std::map<int, std::set<std::string>> rows(const MatrixIndexing& idx) {
  std::map<int, std::set<std::string>> out;
  for (const auto& [id, c] : idx.coord) out[c.first].insert(id);
  return out;
}

std::map<int, std::set<std::string>> cols(const MatrixIndexing& idx) {
  std::map<int, std::set<std::string>> out;
  for (const auto& [id, c] : idx.coord) out[c.second].insert(id);
  return out;
}

std::optional<GridSet> is_grid(const MatrixIndexing& idx, const std::set<std::string>& x) {
  GridSet gs;
  gs.vertices = x;
  for (const auto& id : x) {
    gs.row_ids.insert(idx.row(id));
    gs.col_ids.insert(idx.col(id));
  }
  if (x.size() != gs.row_ids.size() * gs.col_ids.size()) return std::nullopt;
  std::set<std::pair<int, int>> cells;
  for (const auto& id : x) cells.insert({idx.row(id), idx.col(id)});
  for (int i : gs.row_ids)
    for (int j : gs.col_ids)
      if (!cells.count({i, j})) return std::nullopt;
  for (const auto& id : x) {
    gs.grid_rows[idx.row(id)].insert(id);
    gs.grid_cols[idx.col(id)].insert(id);
  }
  return gs;
}

RowColumnCover cover_from_indexing(const MatrixIndexing& idx) {
  return RowColumnCover{rows(idx), cols(idx)};
}

bool Report::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

void Report::add(const std::string& req, bool pass, const std::string& witness) {
  entries.push_back(Entry{req, pass, witness});
}

std::string Report::summary() const {
  std::string out;
  for (const auto& e : entries) {
    out += (e.pass ? "pass " : "FAIL ") + e.requirement;
    if (!e.witness.empty()) out += " (" + e.witness + ")";
    out += "\n";
  }
  return out;
}

namespace {

std::string id_set_str(const std::set<std::string>& s, std::size_t limit = 6) {
  std::string out = "{";
  std::size_t n = 0;
  for (const auto& id : s) {
    if (n++) out += ",";
    if (n > limit) {
      out += "...";
      break;
    }
    out += id;
  }
  return out + "}";
}

// Union-find keyed by index into a vector of sets.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

// The division requirement: the sets' fiber slices within one global fiber
// must be pairwise linked through shared vertices.
bool slices_connected(const std::vector<std::set<std::string>>& slices,
                      std::string* witness) {
  if (slices.size() <= 1) return true;
  UnionFind uf(static_cast<int>(slices.size()));
  std::map<std::string, int> first_owner;
  for (std::size_t k = 0; k < slices.size(); ++k)
    for (const auto& id : slices[k]) {
      auto [it, fresh] = first_owner.emplace(id, static_cast<int>(k));
      if (!fresh) uf.merge(static_cast<int>(k), it->second);
    }
  int root = uf.find(0);
  for (std::size_t k = 1; k < slices.size(); ++k)
    if (uf.find(static_cast<int>(k)) != root) {
      if (witness)
        *witness = id_set_str(slices[0]) + " | " + id_set_str(slices[k]) + " not linked";
      return false;
    }
  return true;
}

}  // namespace

Report validate_bipartite_matrix_graph(const Graph& g, const MatrixIndexing& idx) {
  Report r;

  {
    bool ok = true;
    std::string w;
    for (const auto& v : g.vertices())
      if (!idx.has(v.id)) {
        ok = false;
        w = "vertex '" + v.id + "' has no coordinate";
        break;
      }
    r.add("vertices-indexed", ok, w);
    if (!ok) return r;
  }

  std::vector<LabelBlock> blocks = label_blocks(g);

  {
    bool ok = true;
    std::string w;
    for (const auto& b : blocks) {
      try {
        BlockClass c = classify_block(b);
        if (!c.semicomplete) {
          ok = false;
          w = "label " + b.label.str() + " block is not semicomplete between " +
              id_set_str(b.tails) + " and " + id_set_str(b.heads);
          break;
        }
      } catch (const Error& e) {
        ok = false;
        w = e.what();
        break;
      }
    }
    r.add("blocks-semicomplete-bipartite", ok, w);
  }

  // Distinct partite sets; z <= 2x is recorded, not enforced beyond the count.
  std::vector<std::set<std::string>> sets;
  for (const auto& b : blocks) {
    if (std::find(sets.begin(), sets.end(), b.tails) == sets.end()) sets.push_back(b.tails);
    if (std::find(sets.begin(), sets.end(), b.heads) == sets.end()) sets.push_back(b.heads);
  }
  r.add("set-count", sets.size() <= 2 * blocks.size(),
        "z=" + std::to_string(sets.size()) + " x=" + std::to_string(blocks.size()));

  {
    bool ok = true;
    std::string w;
    for (const auto& s : sets)
      if (!is_grid(idx, s)) {
        ok = false;
        w = id_set_str(s) + " is not a grid";
        break;
      }
    r.add("partite-sets-are-grids", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; a < sets.size() && ok; ++a)
      for (std::size_t b = a + 1; b < sets.size() && ok; ++b) {
        bool fwd = false, bwd = false;
        for (const auto& arc : g.arcs()) {
          bool ta = sets[a].count(arc.tail), ha = sets[a].count(arc.head);
          bool tb = sets[b].count(arc.tail), hb = sets[b].count(arc.head);
          if (ta && hb && !ha && !tb) fwd = true;
          if (tb && ha && !hb && !ta) bwd = true;
        }
        if (fwd && bwd) {
          ok = false;
          w = "arcs in both directions between " + id_set_str(sets[a]) + " and " +
              id_set_str(sets[b]);
        }
      }
    r.add("cuts-uniformly-directed", ok, w);
  }

  // Fiber slices of the sets, per global row / column.
  auto fiber_check = [&](bool by_row) {
    std::map<int, std::set<std::string>> fibers = by_row ? rows(idx) : cols(idx);
    bool share_ok = true, div_ok = true;
    std::string share_w, div_w;
    for (const auto& [i, fiber] : fibers) {
      std::vector<std::set<std::string>> slices;
      std::set<std::string> covered;
      for (const auto& s : sets) {
        std::set<std::string> slice;
        for (const auto& id : s) {
          int f = by_row ? idx.row(id) : idx.col(id);
          if (f == i) slice.insert(id);
        }
        if (!slice.empty()) {
          // Sharing requirement: a slice lies inside the global fiber by
          // construction of the indexing.
          slices.push_back(slice);
          covered.insert(slice.begin(), slice.end());
        }
      }
      if (div_ok && covered != fiber) {
        std::set<std::string> missing;
        for (const auto& id : fiber)
          if (!covered.count(id)) missing.insert(id);
        div_ok = false;
        div_w = (by_row ? "row " : "column ") + std::to_string(i) + ": " + id_set_str(missing) +
                " in no block set";
      }
      std::string w;
      if (div_ok && !slices_connected(slices, &w)) {
        div_ok = false;
        div_w = (by_row ? "row " : "column ") + std::to_string(i) + ": " + w;
      }
    }
    r.add(by_row ? "rows-share-coherently" : "cols-share-coherently", share_ok, share_w);
    r.add(by_row ? "row-divisions-overlap" : "col-divisions-overlap", div_ok, div_w);
  };
  fiber_check(true);
  fiber_check(false);

  return r;
}

Report validate_cartesian_matrix_graph(const Graph& g, const RowColumnCover& cover) {
  Report r;

  auto partition_check = [&](const std::map<int, std::set<std::string>>& fibers,
                             const char* what) {
    std::map<std::string, int> owner;
    bool ok = true;
    std::string w;
    for (const auto& [i, fiber] : fibers) {
      if (fiber.empty()) {
        ok = false;
        w = std::string(what) + " " + std::to_string(i) + " is empty";
        break;
      }
      for (const auto& id : fiber) {
        if (!g.has_vertex(id)) {
          ok = false;
          w = "'" + id + "' is not a vertex";
          break;
        }
        auto [it, fresh] = owner.emplace(id, i);
        if (!fresh) {
          ok = false;
          w = "'" + id + "' is in " + what + " " + std::to_string(it->second) + " and " +
              std::to_string(i);
          break;
        }
      }
      if (!ok) break;
    }
    if (ok && owner.size() != g.vertices().size()) {
      for (const auto& v : g.vertices())
        if (!owner.count(v.id)) {
          w = "'" + v.id + "' is in no " + what;
          break;
        }
      ok = false;
    }
    return std::pair<bool, std::string>(ok, w);
  };

  auto [rows_ok, rows_w] = partition_check(cover.rows, "row");
  r.add("rows-partition-vertices", rows_ok, rows_w);
  auto [cols_ok, cols_w] = partition_check(cover.cols, "column");
  r.add("cols-partition-vertices", cols_ok, cols_w);
  if (!rows_ok || !cols_ok) return r;

  std::map<std::string, int> row_of, col_of;
  for (const auto& [i, fiber] : cover.rows)
    for (const auto& id : fiber) row_of[id] = i;
  for (const auto& [j, fiber] : cover.cols)
    for (const auto& id : fiber) col_of[id] = j;

  std::map<std::pair<int, int>, std::string> cell;
  {
    bool ok = true;
    std::string w;
    for (const auto& v : g.vertices()) {
      auto [it, fresh] = cell.emplace(std::pair{row_of[v.id], col_of[v.id]}, v.id);
      if (!fresh) {
        ok = false;
        w = "'" + it->second + "' and '" + v.id + "' share a row and a column";
        break;
      }
    }
    r.add("row-col-intersection", ok, w);
    if (!ok) return r;
  }

  {
    bool ok = true;
    std::string w;
    for (const auto& [i, rf] : cover.rows) {
      for (const auto& [j, cf] : cover.cols)
        if (!cell.count({i, j})) {
          ok = false;
          w = "no vertex at row " + std::to_string(i) + ", column " + std::to_string(j);
          break;
        }
      if (!ok) break;
    }
    r.add("full-rectangle", ok, w);
  }

  auto iso_check = [&](const std::map<int, std::set<std::string>>& fibers, const char* what) {
    std::vector<std::pair<int, Graph>> subs;
    for (const auto& [i, fiber] : fibers) subs.emplace_back(i, induced_subgraph(g, fiber));
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = a + 1; b < subs.size(); ++b)
        if (!is_isomorphic(subs[a].second, subs[b].second))
          return std::pair<bool, std::string>(
              false, std::string(what) + "s " + std::to_string(subs[a].first) + " and " +
                         std::to_string(subs[b].first) + " are not isomorphic");
    return std::pair<bool, std::string>(true, "");
  };
  auto [riso_ok, riso_w] = iso_check(cover.rows, "row");
  r.add("rows-pairwise-isomorphic", riso_ok, riso_w);
  auto [ciso_ok, ciso_w] = iso_check(cover.cols, "column");
  r.add("cols-pairwise-isomorphic", ciso_ok, ciso_w);

  std::set<Label> row_labels, col_labels;
  bool contain_ok = true;
  std::string contain_w;
  for (const auto& a : g.arcs()) {
    bool in_row = row_of[a.tail] == row_of[a.head];
    bool in_col = col_of[a.tail] == col_of[a.head];
    if (in_row) row_labels.insert(a.label);
    if (in_col) col_labels.insert(a.label);
    if (!in_row && !in_col && contain_ok) {
      contain_ok = false;
      contain_w = a.key() + " crosses both rows and columns";
    }
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& l : row_labels)
      if (col_labels.count(l)) {
        ok = false;
        w = "label " + l.str() + " appears on row and column arcs";
        break;
      }
    r.add("row-col-labels-disjoint", ok, w);
  }
  r.add("arcs-within-row-or-column", contain_ok, contain_w);

  // Alignment: an arc pattern inside one fiber must repeat in every parallel
  // fiber; this is what lets asynchronous replication reproduce exactly the
  // original arcs.
  auto aligned = [&](bool by_row) {
    for (const auto& a : g.arcs()) {
      bool in_fiber = by_row ? row_of[a.tail] == row_of[a.head] : col_of[a.tail] == col_of[a.head];
      if (!in_fiber) continue;
      if (by_row) {
        int j1 = col_of[a.tail], j2 = col_of[a.head];
        for (const auto& [i2, fiber] : cover.rows) {
          auto t = cell.find({i2, j1});
          auto h = cell.find({i2, j2});
          if (t != cell.end() && h != cell.end() && !g.has_arc(t->second, h->second, a.label))
            return std::pair<bool, std::string>(
                false, a.key() + " has no counterpart in row " + std::to_string(i2));
        }
      } else {
        int i1 = row_of[a.tail], i2 = row_of[a.head];
        for (const auto& [j2, fiber] : cover.cols) {
          auto t = cell.find({i1, j2});
          auto h = cell.find({i2, j2});
          if (t != cell.end() && h != cell.end() && !g.has_arc(t->second, h->second, a.label))
            return std::pair<bool, std::string>(
                false, a.key() + " has no counterpart in column " + std::to_string(j2));
        }
      }
    }
    return std::pair<bool, std::string>(true, "");
  };
  auto [ra_ok, ra_w] = aligned(true);
  r.add("row-patterns-aligned", ra_ok, ra_w);
  auto [ca_ok, ca_w] = aligned(false);
  r.add("col-patterns-aligned", ca_ok, ca_w);

  return r;
}

std::optional<RowColumnCover> infer_cartesian_cover(const Graph& g) {
  std::set<Label> label_set = g.label_set();
  std::vector<Label> labels(label_set.begin(), label_set.end());
  if (labels.size() < 2 || labels.size() > 12) return std::nullopt;

  auto component_fibers = [&](const std::set<Label>& side) {
    std::map<std::string, std::string> root;  // id -> class representative
    for (const auto& v : g.vertices()) root[v.id] = v.id;
    std::function<std::string(const std::string&)> find = [&](const std::string& a) {
      return root[a] == a ? a : root[a] = find(root[a]);
    };
    for (const auto& a : g.arcs())
      if (side.count(a.label)) {
        std::string ra = find(a.tail), rb = find(a.head);
        if (ra != rb) root[std::min(ra, rb)] = std::max(ra, rb);
      }
    std::map<std::string, std::set<std::string>> classes;
    for (const auto& v : g.vertices()) classes[find(v.id)].insert(v.id);
    std::map<int, std::set<std::string>> fibers;
    int n = 1;
    for (auto& [rep, members] : classes) fibers[n++] = std::move(members);
    return fibers;
  };

  for (std::uint64_t mask = 1; mask + 1 < (1ull << labels.size()); ++mask) {
    std::set<Label> row_side, col_side;
    for (std::size_t k = 0; k < labels.size(); ++k)
      (mask >> k & 1 ? row_side : col_side).insert(labels[k]);
    RowColumnCover cover{component_fibers(row_side), component_fibers(col_side)};
    if (cover.rows.size() < 2 || cover.cols.size() < 2) continue;
    if (validate_cartesian_matrix_graph(g, cover).ok()) return cover;
  }
  return std::nullopt;
}

}  // namespace vrsp
