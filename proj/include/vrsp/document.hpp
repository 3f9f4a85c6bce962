#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vrsp/decompose.hpp"
#include "vrsp/graph.hpp"
#include "vrsp/matrix.hpp"

namespace vrsp {

// JSON interchange unit: a graph, optional vertex coordinates, named vertex
// sets (contraction specs, covers, partitions), free-form string metadata.
struct GraphDocument {
  Graph graph;
  std::optional<MatrixIndexing> indexing;
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, std::string> meta;
};

// Errors: SyntaxError (malformed JSON, with byte offset), ValidationError
// (schema/field problems and wrapped graph-core errors, with field context).
GraphDocument parse_document(const std::string& bytes);

// Canonical bytes: alphabetical keys, vertices sorted by id, arcs by
// (tail, head, action, weight), weights as decimal strings, two-space
// indent, trailing newline. parse(emit(d)) reproduces emit(d) exactly.
std::string emit_document(const GraphDocument& doc);
std::string emit_document(const Graph& g);

// One node line per vertex, one edge line per arc, labels as action/weight.
std::string emit_dot(const Graph& g);

std::string read_file(const std::string& path);            // IoError
void write_file_atomic(const std::string& path, const std::string& bytes);

// CERTDIR layout: factor_left.json, factor_right.json, certificate.json
// (theorem, both specs, witness as id pairs, warnings).
void write_certificate_dir(const std::string& dir, const DecompositionCertificate& cert);

std::string certificate_json(const DecompositionCertificate& cert);

}  // namespace vrsp
