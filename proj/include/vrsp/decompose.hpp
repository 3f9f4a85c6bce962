#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vrsp/contract.hpp"
#include "vrsp/graph.hpp"
#include "vrsp/iso.hpp"
#include "vrsp/matrix.hpp"

namespace vrsp {

enum class Theorem { T1, T2, T5, T6, T7 };
const char* to_string(Theorem t);

struct DecompositionCertificate {
  Theorem theorem;
  Graph factor_left;
  Graph factor_right;
  ContractionSpec spec_left;
  ContractionSpec spec_right;
  // From vrsp(factor_left, factor_right) back to the decomposed graph.
  IsoWitness witness;
  std::vector<std::string> warnings;
};

struct Violation {
  std::string clause;
  std::string witness;
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// G ≅ G/Y ⧹ G/X for a cut [X, Y] whose same-label classes arc-induce
// complete bipartite subgraphs, with the cut arcs the only synchronising
// arcs, sources inside X, and no backward arcs.
DecompositionCertificate decompose_t1(const Graph& g, const std::set<std::string>& x);

// G ≅ G/Y ⧹ G/X1/X2 under the three-cut hypothesis set.
DecompositionCertificate decompose_t2(const Graph& g, const std::set<std::string>& x1,
                                      const std::set<std::string>& x2);

// Bipartite matrix graph: left factor contracts the row sets of every
// block's partite grids, right factor the column sets; witness maps v(i,j)
// to (row image, column image).
DecompositionCertificate decompose_t5(const Graph& g, const MatrixIndexing& idx);

// Cartesian matrix graph: factors contract whole rows / whole columns.
DecompositionCertificate decompose_t6(const Graph& g, const RowColumnCover& cover);

struct T7Partition {
  // Vertex sets of the declared Cartesian matrix subgraphs; remaining arcs
  // are grouped into semicomplete bipartite label blocks.
  std::vector<std::set<std::string>> m_blocks;
};

DecompositionCertificate decompose_t7(const Graph& g, const MatrixIndexing& idx,
                                      const T7Partition& partition);

// Recomputes the factors from the recorded specs, the VRSP of the factors,
// and re-validates the witness arc-by-arc against g.
bool verify(const DecompositionCertificate& cert, const Graph& g);

struct DecompositionTree {
  Graph graph;
  std::optional<DecompositionCertificate> certificate;
  std::string leaf_reason;  // set on leaves
  std::vector<std::unique_ptr<DecompositionTree>> children;

  int node_count() const;
  int depth() const;
};

// Greedy pipeline: T6 (cover from the indexing when given, else inferred),
// then T5 (explicit indexing only), then T1/T2 over cuts discovered from
// level prefixes/suffixes and label-block ancestor closures. Recurses on
// strictly smaller factors. Leaves are "not decomposable with discovered
// parameters", never a primality claim.
DecompositionTree decompose_fully(const Graph& g,
                                  const std::optional<MatrixIndexing>& idx = std::nullopt);

}  // namespace vrsp
