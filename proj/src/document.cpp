#include "vrsp/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vrsp {

namespace {

using nlohmann::json;

std::string ctx(const std::string& where) { return " (at " + where + ")"; }

const json& expect(const json& j, const char* field, json::value_t type,
                   const std::string& where) {
  auto it = j.find(field);
  if (it == j.end())
    throw Error(ErrorKind::ValidationError, "missing field '" + std::string(field) + "'" + ctx(where));
  if (it->type() != type &&
      !(type == json::value_t::array && it->is_array()) &&
      !(type == json::value_t::object && it->is_object()) &&
      !(type == json::value_t::string && it->is_string()))
    throw Error(ErrorKind::ValidationError,
                "field '" + std::string(field) + "' has the wrong type" + ctx(where));
  return *it;
}

std::string expect_string(const json& j, const char* field, const std::string& where) {
  const json& v = expect(j, field, json::value_t::string, where);
  return v.get<std::string>();
}

}  // namespace

GraphDocument parse_document(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ValidationError, "document is not an object");

  GraphDocument doc;
  std::vector<Vertex> vertices;
  std::map<std::string, std::pair<int, int>> coords;

  const json& jverts = expect(j, "vertices", json::value_t::array, "document");
  for (std::size_t k = 0; k < jverts.size(); ++k) {
    const std::string where = "vertices[" + std::to_string(k) + "]";
    const json& jv = jverts[k];
    if (!jv.is_object()) throw Error(ErrorKind::ValidationError, "not an object" + ctx(where));
    Vertex v;
    v.id = expect_string(jv, "id", where);
    if (jv.contains("coord")) {
      const json& c = jv["coord"];
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
          !c[1].is_number_integer())
        throw Error(ErrorKind::ValidationError, "coord must be [row, col]" + ctx(where));
      coords[v.id] = {c[0].get<int>(), c[1].get<int>()};
    }
    vertices.push_back(std::move(v));
  }

  std::vector<Arc> arcs;
  const json& jarcs = expect(j, "arcs", json::value_t::array, "document");
  for (std::size_t k = 0; k < jarcs.size(); ++k) {
    const std::string where = "arcs[" + std::to_string(k) + "]";
    const json& ja = jarcs[k];
    if (!ja.is_object()) throw Error(ErrorKind::ValidationError, "not an object" + ctx(where));
    Arc a;
    a.tail = expect_string(ja, "tail", where);
    a.head = expect_string(ja, "head", where);
    a.label.action = expect_string(ja, "action", where);
    try {
      a.label.weight = Weight::parse(expect_string(ja, "weight", where));
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + ctx(where));
    }
    arcs.push_back(std::move(a));
  }

  try {
    doc.graph = build_graph(std::move(vertices), std::move(arcs));
    if (!coords.empty()) doc.indexing = make_indexing(coords);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }

  if (j.contains("sets")) {
    const json& jsets = j["sets"];
    if (!jsets.is_object()) throw Error(ErrorKind::ValidationError, "sets must be an object");
    for (const auto& [name, members] : jsets.items()) {
      const std::string where = "sets." + name;
      if (!members.is_array())
        throw Error(ErrorKind::ValidationError, "not an array" + ctx(where));
      std::vector<std::string> ids;
      for (const auto& m : members) {
        if (!m.is_string()) throw Error(ErrorKind::ValidationError, "non-string id" + ctx(where));
        std::string id = m.get<std::string>();
        if (!doc.graph.has_vertex(id))
          throw Error(ErrorKind::ValidationError, "unknown vertex '" + id + "'" + ctx(where));
        ids.push_back(std::move(id));
      }
      doc.sets[name] = std::move(ids);
    }
  }
  if (j.contains("meta")) {
    const json& jmeta = j["meta"];
    if (!jmeta.is_object()) throw Error(ErrorKind::ValidationError, "meta must be an object");
    for (const auto& [k, v] : jmeta.items()) {
      if (!v.is_string()) throw Error(ErrorKind::ValidationError, "meta values must be strings");
      doc.meta[k] = v.get<std::string>();
    }
  }
  if (j.contains("format_version") && j["format_version"].is_string() &&
      j["format_version"].get<std::string>() != "1")
    throw Error(ErrorKind::ValidationError,
                "unsupported format_version '" + j["format_version"].get<std::string>() + "'");
  return doc;
}

std::string emit_document(const GraphDocument& doc) {
  json j;
  j["format_version"] = "1";
  j["vertices"] = json::array();
  for (const auto& v : doc.graph.vertices()) {
    json jv;
    jv["id"] = v.id;
    if (doc.indexing && doc.indexing->has(v.id))
      jv["coord"] = {doc.indexing->row(v.id), doc.indexing->col(v.id)};
    j["vertices"].push_back(std::move(jv));
  }
  j["arcs"] = json::array();
  for (const auto& a : doc.graph.arcs()) {
    json ja;
    ja["tail"] = a.tail;
    ja["head"] = a.head;
    ja["action"] = a.label.action;
    ja["weight"] = a.label.weight.str();
    j["arcs"].push_back(std::move(ja));
  }
  if (!doc.sets.empty()) {
    json jsets = json::object();
    for (const auto& [name, ids] : doc.sets) {
      std::vector<std::string> sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      jsets[name] = sorted;
    }
    j["sets"] = std::move(jsets);
  }
  if (!doc.meta.empty()) {
    json jmeta = json::object();
    for (const auto& [k, v] : doc.meta) jmeta[k] = v;
    j["meta"] = std::move(jmeta);
  }
  return j.dump(2) + "\n";
}

std::string emit_document(const Graph& g) {
  GraphDocument doc;
  doc.graph = g;
  return emit_document(doc);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const Graph& g) {
  std::string out = "digraph G {\n";
  for (const auto& v : g.vertices()) out += "  \"" + dot_escape(v.id) + "\";\n";
  for (const auto& a : g.arcs())
    out += "  \"" + dot_escape(a.tail) + "\" -> \"" + dot_escape(a.head) + "\" [label=\"" +
           dot_escape(a.label.str()) + "\"];\n";
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + tmp + "'");
    out << bytes;
    if (!out.good()) throw Error(ErrorKind::IoError, "write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorKind::IoError, "cannot rename '" + tmp + "' to '" + path + "'");
}

std::string certificate_json(const DecompositionCertificate& cert) {
  json j;
  j["theorem"] = to_string(cert.theorem);
  j["spec_left"] = cert.spec_left.sets;
  j["spec_right"] = cert.spec_right.sets;
  j["witness"] = json::array();
  for (const auto& [from, to] : cert.witness.vertex_map)
    j["witness"].push_back({from, to});
  j["warnings"] = cert.warnings;
  return j.dump(2) + "\n";
}

void write_certificate_dir(const std::string& dir, const DecompositionCertificate& cert) {
  write_file_atomic(dir + "/factor_left.json", emit_document(cert.factor_left));
  write_file_atomic(dir + "/factor_right.json", emit_document(cert.factor_right));
  write_file_atomic(dir + "/certificate.json", certificate_json(cert));
}

}  // namespace vrsp
