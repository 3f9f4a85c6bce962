#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "vrsp/decompose.hpp"
#include "vrsp/document.hpp"
#include "vrsp/figures.hpp"
#include "vrsp/generate.hpp"
#include "vrsp/product.hpp"

namespace {

using namespace vrsp;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

GraphDocument load(const std::string& path) { return parse_document(read_file(path)); }

void emit_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty())
    std::cout << bytes;
  else
    write_file_atomic(out_path, bytes);
}

int run_validate(const std::string& path) {
  GraphDocument doc;
  try {
    doc = load(path);
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return (e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::IoError) ? kUsage
                                                                                  : kNegative;
  }
  const Graph& g = doc.graph;
  std::cout << "vertices: " << g.vertices().size() << "\n";
  std::cout << "arcs: " << g.arcs().size() << "\n";
  std::cout << "labels: " << g.label_set().size() << "\n";
  std::cout << "components: " << components(g).size() << "\n";
  std::cout << "levels: " << level_assignment(g).max_level + 1 << "\n";
  if (doc.indexing)
    std::cout << "indexing: " << doc.indexing->coord.size() << " vertices, "
              << rows(*doc.indexing).size() << " rows, " << cols(*doc.indexing).size()
              << " columns\n";
  for (const auto& [name, ids] : doc.sets)
    std::cout << "set " << name << ": " << ids.size() << " vertices\n";
  std::cout << "ok\n";
  return kOk;
}

int run_product(const std::string& op, const std::string& a_path, const std::string& b_path,
                const std::string& out) {
  GraphDocument a = load(a_path), b = load(b_path);
  Graph result;
  if (op == "cartesian")
    result = cartesian_product(a.graph, b.graph);
  else if (op == "intermediate")
    result = intermediate_product(a.graph, b.graph);
  else if (op == "vrsp")
    result = ::vrsp::vrsp(a.graph, b.graph);
  else
    throw Error(ErrorKind::InvalidSpec, "unknown --op '" + op + "'");
  emit_output(emit_document(result), out);
  return kOk;
}

int run_contract(const std::string& path, const std::vector<std::string>& set_names,
                 const std::string& out) {
  GraphDocument doc = load(path);
  ContractionSpec spec;
  for (const auto& name : set_names) {
    auto it = doc.sets.find(name);
    if (it == doc.sets.end())
      throw Error(ErrorKind::InvalidSpec, "document has no set '" + name + "'");
    spec.sets.push_back(it->second);
  }
  emit_output(emit_document(contract_seq(doc.graph, spec).graph), out);
  return kOk;
}

int run_iso(const std::string& a_path, const std::string& b_path) {
  GraphDocument a = load(a_path), b = load(b_path);
  auto witness = is_isomorphic(a.graph, b.graph);
  if (!witness) {
    std::cout << "not isomorphic\n";
    return kNegative;
  }
  std::cout << "isomorphic\n";
  for (const auto& [u, v] : witness->vertex_map) std::cout << u << " -> " << v << "\n";
  return kOk;
}

// Named sets "<prefix>1".."<prefix>k", in index order.
std::map<int, std::set<std::string>> collect_indexed_sets(const GraphDocument& doc,
                                                          const std::string& prefix) {
  std::map<int, std::set<std::string>> out;
  for (const auto& [name, ids] : doc.sets) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) continue;
    std::string tail = name.substr(prefix.size());
    if (tail.find_first_not_of("0123456789") != std::string::npos) continue;
    out[std::stoi(tail)] = std::set<std::string>(ids.begin(), ids.end());
  }
  return out;
}

void print_certificate(const DecompositionCertificate& cert) {
  std::cout << "theorem " << to_string(cert.theorem) << ": verified\n";
  std::cout << "factor_left: " << cert.factor_left.vertices().size() << " vertices, "
            << cert.factor_left.arcs().size() << " arcs\n";
  std::cout << "factor_right: " << cert.factor_right.vertices().size() << " vertices, "
            << cert.factor_right.arcs().size() << " arcs\n";
  for (const auto& w : cert.warnings) std::cout << "warning: " << w << "\n";
}

void write_tree(const std::string& dir, const DecompositionTree& tree) {
  std::filesystem::create_directories(dir);
  int counter = 0;
  std::string index;
  std::function<int(const DecompositionTree&)> walk = [&](const DecompositionTree& node) {
    int id = counter++;
    std::string node_dir = dir + "/node" + std::to_string(id);
    std::filesystem::create_directories(node_dir);
    write_file_atomic(node_dir + "/graph.json", emit_document(node.graph));
    if (node.certificate) {
      write_certificate_dir(node_dir, *node.certificate);
      index += "node" + std::to_string(id) + ": " + to_string(node.certificate->theorem);
    } else {
      index += "node" + std::to_string(id) + ": leaf (" + node.leaf_reason + ")";
    }
    std::vector<int> child_ids;
    for (const auto& c : node.children) child_ids.push_back(walk(*c));
    if (!child_ids.empty()) {
      index += " ->";
      for (int c : child_ids) index += " node" + std::to_string(c);
    }
    index += "\n";
    return id;
  };
  walk(tree);
  write_file_atomic(dir + "/tree.txt", index);
}

void print_tree(const DecompositionTree& node, int depth) {
  std::string pad(2 * depth, ' ');
  std::cout << pad << node.graph.vertices().size() << " vertices, " << node.graph.arcs().size()
            << " arcs: ";
  if (node.certificate)
    std::cout << to_string(node.certificate->theorem) << "\n";
  else
    std::cout << "leaf (" << node.leaf_reason << ")\n";
  for (const auto& c : node.children) print_tree(*c, depth + 1);
}

int run_decompose(const std::string& path, const std::string& theorem, const std::string& x_name,
                  const std::string& x1_name, const std::string& x2_name,
                  const std::string& rows_prefix, const std::string& cols_prefix,
                  const std::string& m_prefix, const std::string& out) {
  GraphDocument doc = load(path);
  auto need_indexing = [&]() -> const MatrixIndexing& {
    if (!doc.indexing)
      throw Error(ErrorKind::InvalidSpec, "this theorem needs vertex coordinates in the file");
    return *doc.indexing;
  };
  auto named_set = [&](const std::string& name) {
    auto it = doc.sets.find(name);
    if (it == doc.sets.end())
      throw Error(ErrorKind::InvalidSpec, "document has no set '" + name + "'");
    return std::set<std::string>(it->second.begin(), it->second.end());
  };

  if (theorem == "auto") {
    DecompositionTree tree = decompose_fully(doc.graph, doc.indexing);
    print_tree(tree, 0);
    if (!out.empty()) write_tree(out, tree);
    return kOk;
  }

  DecompositionCertificate cert;
  try {
    if (theorem == "1") {
      cert = decompose_t1(doc.graph, named_set(x_name));
    } else if (theorem == "2") {
      cert = decompose_t2(doc.graph, named_set(x1_name), named_set(x2_name));
    } else if (theorem == "5") {
      cert = decompose_t5(doc.graph, need_indexing());
    } else if (theorem == "6") {
      RowColumnCover cover{collect_indexed_sets(doc, rows_prefix),
                           collect_indexed_sets(doc, cols_prefix)};
      if (cover.rows.empty() && cover.cols.empty() && doc.indexing)
        cover = cover_from_indexing(*doc.indexing);
      cert = decompose_t6(doc.graph, cover);
    } else if (theorem == "7") {
      T7Partition partition;
      for (const auto& [idx, members] : collect_indexed_sets(doc, m_prefix))
        partition.m_blocks.push_back(members);
      cert = decompose_t7(doc.graph, need_indexing(), partition);
    } else {
      throw Error(ErrorKind::InvalidSpec, "--theorem must be 1, 2, 5, 6, 7 or auto");
    }
  } catch (const PreconditionFailed& e) {
    std::cout << "precondition failed:\n";
    for (const auto& v : e.violations()) {
      std::cout << "  " << v.clause;
      if (!v.witness.empty()) std::cout << ": " << v.witness;
      std::cout << "\n";
    }
    return kNegative;
  }
  print_certificate(cert);
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    write_certificate_dir(out, cert);
  }
  return kOk;
}

int run_gen(const std::string& kind, std::uint64_t seed, int rows_n, int cols_n, int blocks,
            int labels, const std::string& out) {
  GeneratorSpec spec;
  spec.kind = generator_kind_from_string(kind);
  spec.seed = seed;
  spec.rows = rows_n;
  spec.cols = cols_n;
  spec.blocks = blocks;
  spec.labels = labels;
  emit_output(emit_document(generate(spec)), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labelled acyclic multigraph products, contractions and VRSP decompositions"};
  app.require_subcommand(1);

  std::string path, path_b, out, op;
  std::vector<std::string> set_names;
  std::string theorem = "auto", x_name = "X", x1_name = "X1", x2_name = "X2";
  std::string rows_prefix = "R", cols_prefix = "C", m_prefix = "M";
  std::string gen_kind = "cartesian-matrix";
  std::uint64_t seed = 0;
  int rows_n = 3, cols_n = 4, blocks = 3, labels = 2;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a graph document");
  validate_cmd->add_option("file", path)->required();

  auto* product_cmd = app.add_subcommand("product", "product of two graphs");
  product_cmd->add_option("--op", op, "cartesian | intermediate | vrsp")->required();
  product_cmd->add_option("a", path)->required();
  product_cmd->add_option("b", path_b)->required();
  product_cmd->add_option("-o,--output", out);

  auto* contract_cmd = app.add_subcommand("contract", "contract named vertex sets in order");
  contract_cmd->add_option("file", path)->required();
  contract_cmd->add_option("--sets", set_names, "named sets from the document")->required();
  contract_cmd->add_option("-o,--output", out);

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism check with witness");
  iso_cmd->add_option("a", path)->required();
  iso_cmd->add_option("b", path_b)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose and certify");
  decompose_cmd->add_option("file", path)->required();
  decompose_cmd->add_option("--theorem", theorem, "1 | 2 | 5 | 6 | 7 | auto");
  decompose_cmd->add_option("--x", x_name, "set name for theorem 1");
  decompose_cmd->add_option("--x1", x1_name, "set name for theorem 2");
  decompose_cmd->add_option("--x2", x2_name, "set name for theorem 2");
  decompose_cmd->add_option("--rows", rows_prefix, "row set prefix for theorem 6");
  decompose_cmd->add_option("--cols", cols_prefix, "column set prefix for theorem 6");
  decompose_cmd->add_option("--mblocks", m_prefix, "Cartesian block set prefix for theorem 7");
  decompose_cmd->add_option("-o,--output", out, "certificate directory");

  auto* gen_cmd = app.add_subcommand("gen", "generate a theorem instance");
  gen_cmd->add_option("--kind", gen_kind,
                      "cartesian-matrix | bipartite-matrix | t1-cut | t2-cut | mixed-t7");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--rows", rows_n);
  gen_cmd->add_option("--cols", cols_n);
  gen_cmd->add_option("--blocks", blocks);
  gen_cmd->add_option("--labels", labels);
  gen_cmd->add_option("-o,--output", out);

  auto* dot_cmd = app.add_subcommand("export-dot", "emit Graphviz DOT");
  dot_cmd->add_option("file", path)->required();
  dot_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(path);
    if (app.got_subcommand(product_cmd)) return run_product(op, path, path_b, out);
    if (app.got_subcommand(contract_cmd)) return run_contract(path, set_names, out);
    if (app.got_subcommand(iso_cmd)) return run_iso(path, path_b);
    if (app.got_subcommand(decompose_cmd))
      return run_decompose(path, theorem, x_name, x1_name, x2_name, rows_prefix, cols_prefix,
                           m_prefix, out);
    if (app.got_subcommand(gen_cmd))
      return run_gen(gen_kind, seed, rows_n, cols_n, blocks, labels, out);
    if (app.got_subcommand(dot_cmd)) {
      emit_output(emit_dot(load(path).graph), out);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
