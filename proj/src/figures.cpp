#include "vrsp/figures.hpp"

namespace vrsp {
namespace figures {

namespace {

struct Builder {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::map<std::string, std::pair<int, int>> coords;

  void vertex(const std::string& id, int row, int col) {
    vertices.push_back(Vertex{id, VertexKind::Plain, {}});
    coords[id] = {row, col};
  }
  void arc(const std::string& tail, const std::string& head, const std::string& action) {
    arcs.push_back(Arc{tail, head, Label{action, Weight::from_int(1)}});
  }
  GraphDocument doc(std::map<std::string, std::vector<std::string>> sets = {},
                    std::map<std::string, std::string> meta = {}) {
    GraphDocument d;
    d.graph = build_graph(vertices, arcs);
    d.indexing = make_indexing(coords);
    d.sets = std::move(sets);
    d.meta = std::move(meta);
    return d;
  }
};

}  // namespace

GraphDocument fig1() {
  Builder b;
  b.vertex("u0", 1, 1);
  b.vertex("u1,1", 2, 2);
  b.vertex("u1,2", 2, 3);
  b.vertex("v1,1", 3, 4);
  b.vertex("v2,1", 3, 5);
  b.vertex("v1,2", 4, 4);
  b.vertex("v2,2", 4, 5);
  b.vertex("v3", 5, 6);
  b.vertex("v4", 6, 7);

  b.arc("u0", "v1,1", "a");
  b.arc("u0", "u1,1", "b");
  b.arc("u0", "u1,2", "c");
  b.arc("u0", "v4", "i");
  for (const char* t : {"u1,1", "u1,2"})
    for (const char* h : {"v1,1", "v1,2", "v2,1", "v2,2"}) b.arc(t, h, "d");
  b.arc("v1,1", "v3", "e");
  b.arc("v1,2", "v3", "f");
  b.arc("v2,1", "v4", "g");
  b.arc("v2,2", "v4", "h");

  return b.doc({
      {"C4", {"v1,1", "v1,2"}},
      {"C5", {"v2,1", "v2,2"}},
      {"R2", {"u1,1", "u1,2"}},
      {"R3", {"v1,1", "v2,1"}},
      {"R4", {"v1,2", "v2,2"}},
      {"X", {"u0", "u1,1", "u1,2"}},
  });
}

GraphDocument fig2() {
  Builder b;
  auto id = [](int i, int j) {
    return "u" + std::to_string(i) + "," + std::to_string(j);
  };
  // Occupied cells per row, as drawn.
  const std::vector<std::vector<int>> row_cols = {
      {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 5, 6},
      {2, 3, 4, 5, 6}, {7},
  };
  for (int i = 1; i <= 7; ++i)
    for (int j : row_cols[i - 1]) b.vertex(id(i, j), i, j);

  // Three complete bipartite blocks into the sink u7,7: grid X1 (label c),
  // grid X2 (label b), grid X3 (label a).
  std::vector<std::string> x1, x2, x3;
  for (int i : {2, 5, 6})
    for (int j : {2, 4, 5}) x1.push_back(id(i, j));
  for (int i : {1, 2, 3, 4, 5})
    for (int j : {1, 2, 3, 4}) x2.push_back(id(i, j));
  for (int i : {4, 5, 6})
    for (int j : {2, 3, 4, 6}) x3.push_back(id(i, j));
  for (const auto& v : x3) b.arc(v, id(7, 7), "a");
  for (const auto& v : x2) b.arc(v, id(7, 7), "b");
  for (const auto& v : x1) b.arc(v, id(7, 7), "c");

  return b.doc({
      {"X1", x1},
      {"X2", x2},
      {"X3", x3},
      {"X4", {id(7, 7)}},
  });
}

GraphDocument fig4() {
  Builder b;
  // 3x4 grid; column paths carry b,c; row paths carry d,e,f.
  const char* names[3][4] = {
      {"u2", "u5", "u8", "u11"},
      {"u3", "u6", "u9", "u12"},
      {"u4", "u7", "u10", "u13"},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) b.vertex(names[i][j], i + 1, j + 1);
  const char* col_labels[2] = {"b", "c"};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 2; ++i) b.arc(names[i][j], names[i + 1][j], col_labels[i]);
  const char* row_labels[3] = {"d", "e", "f"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.arc(names[i][j], names[i][j + 1], row_labels[j]);

  std::map<std::string, std::vector<std::string>> sets;
  for (int i = 0; i < 3; ++i)
    sets["R" + std::to_string(i + 1)] = {names[i][0], names[i][1], names[i][2], names[i][3]};
  for (int j = 0; j < 4; ++j)
    sets["C" + std::to_string(j + 1)] = {names[0][j], names[1][j], names[2][j]};
  return b.doc(sets);
}

GraphDocument fig5() {
  // Reconstructed: the published drawing is empty in the source. Two
  // Cartesian blocks (rows 1-2 x cols 1-3 and rows 4-5 x cols 5-6) bridged
  // through the junction vertex u3,4 by complete bipartite blocks, plus two
  // trivial skip arcs; 5 rows, 6 columns, labels a..i.
  Builder b;
  auto id = [](int i, int j) {
    return "u" + std::to_string(i) + "," + std::to_string(j);
  };
  for (int i : {1, 2})
    for (int j : {1, 2, 3}) b.vertex(id(i, j), i, j);
  b.vertex(id(3, 4), 3, 4);
  for (int i : {4, 5})
    for (int j : {5, 6}) b.vertex(id(i, j), i, j);

  for (int i : {1, 2}) {
    b.arc(id(i, 1), id(i, 2), "d");
    b.arc(id(i, 2), id(i, 3), "e");
  }
  for (int j : {1, 2, 3}) b.arc(id(1, j), id(2, j), "b");
  for (int j : {1, 2, 3}) b.arc(id(2, j), id(3, 4), "f");
  b.arc(id(1, 1), id(3, 4), "a");
  for (int j : {5, 6}) b.arc(id(3, 4), id(4, j), "g");
  for (int i : {4, 5}) b.arc(id(i, 5), id(i, 6), "h");
  for (int j : {5, 6}) b.arc(id(4, j), id(5, j), "c");
  b.arc(id(1, 1), id(5, 6), "i");

  return b.doc(
      {
          {"M1", {id(1, 1), id(1, 2), id(1, 3), id(2, 1), id(2, 2), id(2, 3)}},
          {"M2", {id(4, 5), id(4, 6), id(5, 5), id(5, 6)}},
      },
      {{"reconstructed", "true"}});
}

}  // namespace figures
}  // namespace vrsp
