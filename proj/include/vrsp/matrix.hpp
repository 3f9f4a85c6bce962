#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vrsp/graph.hpp"

namespace vrsp {

// Injective assignment of (row, column) coordinates to vertex ids.
struct MatrixIndexing {
  std::map<std::string, std::pair<int, int>> coord;

  bool has(const std::string& id) const { return coord.count(id) > 0; }
  int row(const std::string& id) const;
  int col(const std::string& id) const;
};

// Throws ValidationError when two vertices share a cell.
MatrixIndexing make_indexing(const std::map<std::string, std::pair<int, int>>& coords);

std::map<int, std::set<std::string>> rows(const MatrixIndexing& idx);
std::map<int, std::set<std::string>> cols(const MatrixIndexing& idx);

struct GridSet {
  std::set<std::string> vertices;
  std::set<int> row_ids;
  std::set<int> col_ids;
  std::map<int, std::set<std::string>> grid_rows;
  std::map<int, std::set<std::string>> grid_cols;
};

// Present iff x is exactly row_ids x col_ids under the indexing.
// Throws UnindexedVertex.
std::optional<GridSet> is_grid(const MatrixIndexing& idx, const std::set<std::string>& x);

struct RowColumnCover {
  std::map<int, std::set<std::string>> rows;
  std::map<int, std::set<std::string>> cols;
};

// Fibers of the coordinate map, one entry per occupied index.
RowColumnCover cover_from_indexing(const MatrixIndexing& idx);

struct Report {
  struct Entry {
    std::string requirement;
    bool pass = true;
    std::string witness;  // set on failure
  };
  std::vector<Entry> entries;

  bool ok() const;
  void add(const std::string& req, bool pass, const std::string& witness = "");
  std::string summary() const;
};

// The six bipartite-matrix-graph requirements: label blocks are semicomplete
// bipartite, partite sets are grids with uniformly directed cuts, and the
// row/column sharing + division (connectivity) conditions.
Report validate_bipartite_matrix_graph(const Graph& g, const MatrixIndexing& idx);

// Rows/columns partition V, meet in at most one vertex, occupy a full
// rectangle, are pairwise isomorphic with aligned arc patterns, row and
// column arcs share no labels, and every arc stays within one row or column.
Report validate_cartesian_matrix_graph(const Graph& g, const RowColumnCover& cover);

// Best-effort heuristic: search label bipartitions whose two arc classes
// yield a valid Cartesian cover with at least two rows and two columns.
std::optional<RowColumnCover> infer_cartesian_cover(const Graph& g);

}  // namespace vrsp
