#include "vrsp/generate.hpp"

#include <random>

#include "vrsp/decompose.hpp"

namespace vrsp {

GeneratorKind generator_kind_from_string(const std::string& s) {
  if (s == "cartesian-matrix") return GeneratorKind::CartesianMatrix;
  if (s == "bipartite-matrix") return GeneratorKind::BipartiteMatrix;
  if (s == "t1-cut") return GeneratorKind::T1Cut;
  if (s == "t2-cut") return GeneratorKind::T2Cut;
  if (s == "mixed-t7") return GeneratorKind::MixedT7;
  throw Error(ErrorKind::InvalidSpec, "unknown generator kind '" + s + "'");
}

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::CartesianMatrix: return "cartesian-matrix";
    case GeneratorKind::BipartiteMatrix: return "bipartite-matrix";
    case GeneratorKind::T1Cut: return "t1-cut";
    case GeneratorKind::T2Cut: return "t2-cut";
    case GeneratorKind::MixedT7: return "mixed-t7";
  }
  return "?";
}

namespace {

// mt19937_64 is reproducible across platforms; the standard distributions
// are not, so indices are drawn from the raw engine.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int pick(int n) { return n <= 1 ? 0 : static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

  Weight weight() {
    static const char* pool[] = {"1", "2", "0.5", "1.5", "0.25", "3"};
    return Weight::parse(pool[pick(6)]);
  }

  // k distinct values from 0..n-1, ascending.
  std::vector<int> sample(int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(all[i], all[pick(i + 1)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  }
};

struct TemplateArc {
  int from;
  int to;
  Label label;
};

// Connected DAG on n nodes with a unique source 0: a spanning arc into each
// node plus a few extra forward arcs, fresh label per arc.
std::vector<TemplateArc> random_template(Rng& rng, int n, int extra_max,
                                         const std::string& prefix) {
  std::vector<TemplateArc> arcs;
  int counter = 0;
  auto fresh = [&] { return Label{prefix + std::to_string(counter++), rng.weight()}; };
  for (int v = 1; v < n; ++v) arcs.push_back({rng.pick(v), v, fresh()});
  int extra = n >= 3 && extra_max > 0 ? rng.pick(extra_max + 1) : 0;
  for (int e = 0; e < extra; ++e) {
    int a = rng.pick(n - 1);
    int b = a + 1 + rng.pick(n - 1 - a);
    arcs.push_back({a, b, fresh()});
  }
  return arcs;
}

// Path 0 -> 1 -> ... -> n-1 plus extra forward arcs: unique source 0 and
// unique sink n-1.
std::vector<TemplateArc> random_path_template(Rng& rng, int n, int extra_max,
                                              const std::string& prefix) {
  std::vector<TemplateArc> arcs;
  int counter = 0;
  auto fresh = [&] { return Label{prefix + std::to_string(counter++), rng.weight()}; };
  for (int v = 1; v < n; ++v) arcs.push_back({v - 1, v, fresh()});
  int extra = n >= 3 && extra_max > 0 ? rng.pick(extra_max + 1) : 0;
  for (int e = 0; e < extra; ++e) {
    int a = rng.pick(n - 2);
    int b = a + 2 + rng.pick(n - 1 - a - 1);
    arcs.push_back({a, b, fresh()});
  }
  return arcs;
}

std::string cell_id(int i, int j) {
  return "u" + std::to_string(i) + "," + std::to_string(j);
}

struct Assembly {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::map<std::string, std::pair<int, int>> coords;
  std::map<std::string, std::vector<std::string>> sets;

  void vertex(const std::string& id) { vertices.push_back(Vertex{id, VertexKind::Plain, {}}); }
  void cell(int i, int j) {
    vertex(cell_id(i, j));
    coords[cell_id(i, j)] = {i, j};
  }
  GraphDocument doc(GeneratorKind kind, std::uint64_t seed, bool with_coords) {
    GraphDocument d;
    d.graph = build_graph(vertices, arcs);
    if (with_coords) d.indexing = make_indexing(coords);
    d.sets = std::move(sets);
    d.meta = {{"generator", to_string(kind)}, {"seed", std::to_string(seed)}};
    return d;
  }
};

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("generator self-check failed: ") + what);
}

GraphDocument gen_cartesian(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  int m = spec.rows, n = spec.cols;
  Assembly a;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) a.cell(i, j);

  auto row_template = random_template(rng, n, spec.labels, "r");
  auto col_template = random_template(rng, m, spec.labels, "c");
  for (const auto& t : row_template)
    for (int i = 1; i <= m; ++i)
      a.arcs.push_back({cell_id(i, t.from + 1), cell_id(i, t.to + 1), t.label});
  for (const auto& t : col_template)
    for (int j = 1; j <= n; ++j)
      a.arcs.push_back({cell_id(t.from + 1, j), cell_id(t.to + 1, j), t.label});

  for (int i = 1; i <= m; ++i) {
    std::vector<std::string> row;
    for (int j = 1; j <= n; ++j) row.push_back(cell_id(i, j));
    a.sets["R" + std::to_string(i)] = row;
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<std::string> column;
    for (int i = 1; i <= m; ++i) column.push_back(cell_id(i, j));
    a.sets["C" + std::to_string(j)] = column;
  }

  GraphDocument doc = a.doc(GeneratorKind::CartesianMatrix, spec.seed, true);
  require(validate_cartesian_matrix_graph(doc.graph, cover_from_indexing(*doc.indexing)).ok(),
          "cartesian-matrix instance failed its validator");
  return doc;
}

GraphDocument gen_bipartite(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  Assembly a;
  int row_off = 1, col_off = 1;
  std::vector<std::vector<std::string>> grids;
  for (int t = 0; t <= spec.blocks; ++t) {
    int h = 1 + rng.pick(spec.rows);
    int w = 1 + rng.pick(spec.cols);
    std::vector<std::string> grid;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) {
        a.cell(row_off + i, col_off + j);
        grid.push_back(cell_id(row_off + i, col_off + j));
      }
    grids.push_back(std::move(grid));
    row_off += h;
    col_off += w;
  }
  for (int t = 1; t <= spec.blocks; ++t) {
    Label label{"s" + std::to_string(t), rng.weight()};
    for (const auto& tail : grids[t - 1])
      for (const auto& head : grids[t]) a.arcs.push_back({tail, head, label});
  }

  GraphDocument doc = a.doc(GeneratorKind::BipartiteMatrix, spec.seed, true);
  require(validate_bipartite_matrix_graph(doc.graph, *doc.indexing).ok(),
          "bipartite-matrix instance failed its validator");
  return doc;
}

std::set<int> template_sinks(const std::vector<TemplateArc>& arcs, int n) {
  std::set<int> sinks;
  for (int i = 0; i < n; ++i) sinks.insert(i);
  for (const auto& t : arcs) sinks.erase(t.from);
  return sinks;
}

GraphDocument gen_t1(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  Assembly a;
  int nx = std::max(1, spec.rows), ny = std::max(1, spec.cols);
  std::vector<std::string> xs, ys;
  for (int i = 0; i < nx; ++i) {
    xs.push_back("p" + std::to_string(i));
    a.vertex(xs.back());
  }
  for (int i = 0; i < ny; ++i) {
    ys.push_back("q" + std::to_string(i));
    a.vertex(ys.back());
  }
  auto x_template = random_template(rng, nx, spec.labels, "x");
  auto y_template = random_template(rng, ny, spec.labels, "y");
  for (const auto& t : x_template) a.arcs.push_back({xs[t.from], xs[t.to], t.label});
  for (const auto& t : y_template) a.arcs.push_back({ys[t.from], ys[t.to], t.label});

  int k = std::max(1, spec.blocks);
  std::vector<std::set<int>> tails(k), heads(k);
  for (int b = 0; b < k; ++b) {
    for (int i : rng.sample(nx, 1 + rng.pick(nx))) tails[b].insert(i);
    for (int i : rng.sample(ny, 1 + rng.pick(ny))) heads[b].insert(i);
  }
  // Every Y source needs an in-arc across the cut, every X sink an out-arc,
  // or the whole graph's sources/sinks stop living in the right side.
  for (int s : {0}) {
    bool covered = false;
    for (const auto& h : heads) covered = covered || h.count(s);
    if (!covered) heads[rng.pick(k)].insert(s);
  }
  for (int s : template_sinks(x_template, nx)) {
    bool covered = false;
    for (const auto& t : tails) covered = covered || t.count(s);
    if (!covered) tails[rng.pick(k)].insert(s);
  }
  for (int b = 0; b < k; ++b) {
    Label label{"k" + std::to_string(b), rng.weight()};
    for (int t : tails[b])
      for (int h : heads[b]) a.arcs.push_back({xs[t], ys[h], label});
  }
  a.sets["X"] = xs;

  GraphDocument doc = a.doc(GeneratorKind::T1Cut, spec.seed, false);
  std::set<std::string> x(xs.begin(), xs.end());
  require(verify(decompose_t1(doc.graph, x), doc.graph), "t1 instance failed to decompose");
  return doc;
}

GraphDocument gen_t2(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  Assembly a;
  int n1 = std::max(1, spec.rows), ny = std::max(1, spec.cols), n2 = std::max(1, spec.blocks);
  std::vector<std::string> x1s, ys, x2s;
  for (int i = 0; i < n1; ++i) {
    x1s.push_back("p" + std::to_string(i));
    a.vertex(x1s.back());
  }
  for (int i = 0; i < ny; ++i) {
    ys.push_back("q" + std::to_string(i));
    a.vertex(ys.back());
  }
  for (int i = 0; i < n2; ++i) {
    x2s.push_back("r" + std::to_string(i));
    a.vertex(x2s.back());
  }
  auto x1_template = random_template(rng, n1, spec.labels, "a");
  auto y_template = random_template(rng, ny, spec.labels, "y");
  auto x2_template = random_template(rng, n2, spec.labels, "b");
  for (const auto& t : x1_template) a.arcs.push_back({x1s[t.from], x1s[t.to], t.label});
  for (const auto& t : y_template) a.arcs.push_back({ys[t.from], ys[t.to], t.label});
  for (const auto& t : x2_template) a.arcs.push_back({x2s[t.from], x2s[t.to], t.label});

  auto add_cut = [&](const std::vector<std::string>& from, int nf,
                     const std::vector<std::string>& to, int nt, const std::string& prefix,
                     std::set<int> cover_heads, std::set<int> cover_tails) {
    int blocks = 1 + rng.pick(2);
    std::vector<std::set<int>> tails(blocks), heads(blocks);
    for (int b = 0; b < blocks; ++b) {
      for (int i : rng.sample(nf, 1 + rng.pick(nf))) tails[b].insert(i);
      for (int i : rng.sample(nt, 1 + rng.pick(nt))) heads[b].insert(i);
    }
    for (int s : cover_heads) {
      bool covered = false;
      for (const auto& h : heads) covered = covered || h.count(s);
      if (!covered) heads[rng.pick(blocks)].insert(s);
    }
    for (int s : cover_tails) {
      bool covered = false;
      for (const auto& t : tails) covered = covered || t.count(s);
      if (!covered) tails[rng.pick(blocks)].insert(s);
    }
    for (int b = 0; b < blocks; ++b) {
      Label label{prefix + std::to_string(b), rng.weight()};
      for (int t : tails[b])
        for (int h : heads[b]) a.arcs.push_back({from[t], to[h], label});
    }
  };
  // Y sources are fed from X1, X2 sources from Y; X1 sinks exit through the
  // first cut, Y sinks through the second.
  add_cut(x1s, n1, ys, ny, "j", {0}, template_sinks(x1_template, n1));
  add_cut(ys, ny, x2s, n2, "k", {0}, template_sinks(y_template, ny));

  // Optional bridge arcs X1 -> X2 with their own labels, arbitrary shape.
  int bridges = rng.pick(3);
  for (int e = 0; e < bridges; ++e)
    a.arcs.push_back({x1s[rng.pick(n1)], x2s[rng.pick(n2)],
                      Label{"z" + std::to_string(rng.pick(2)), Weight::from_int(1)}});

  a.sets["X1"] = x1s;
  a.sets["X2"] = x2s;

  GraphDocument doc = a.doc(GeneratorKind::T2Cut, spec.seed, false);
  std::set<std::string> x1(x1s.begin(), x1s.end()), x2(x2s.begin(), x2s.end());
  require(verify(decompose_t2(doc.graph, x1, x2), doc.graph), "t2 instance failed to decompose");
  return doc;
}

GraphDocument gen_t7(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  Assembly a;
  int units = std::max(2, spec.blocks);
  int row_off = 1, col_off = 1;
  // Each unit is a Cartesian grid band or a single junction row; consecutive
  // units are joined by a complete bipartite block between boundary rows.
  struct Unit {
    std::vector<std::string> entry_row;
    std::vector<std::string> exit_row;
    std::vector<std::string> all;
    bool is_m = false;
  };
  std::vector<Unit> built;
  int m_count = 0;
  for (int u = 0; u < units; ++u) {
    bool is_m = u % 2 == 0;
    Unit unit;
    unit.is_m = is_m;
    if (is_m) {
      int h = 2 + rng.pick(std::max(1, spec.rows - 1));
      int w = 2 + rng.pick(std::max(1, spec.cols - 1));
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
          a.cell(row_off + i, col_off + j);
          unit.all.push_back(cell_id(row_off + i, col_off + j));
          if (i == 0) unit.entry_row.push_back(unit.all.back());
          if (i == h - 1) unit.exit_row.push_back(unit.all.back());
        }
      // Column arcs form a path so every cell drains into the exit row;
      // otherwise interior cells become sinks in entered fibers.
      std::string tag = std::to_string(u);
      for (const auto& t : random_template(rng, w, 1, "m" + tag + "r"))
        for (int i = 0; i < h; ++i)
          a.arcs.push_back({cell_id(row_off + i, col_off + t.from),
                            cell_id(row_off + i, col_off + t.to), t.label});
      for (const auto& t : random_path_template(rng, h, 1, "m" + tag + "c"))
        for (int j = 0; j < w; ++j)
          a.arcs.push_back({cell_id(row_off + t.from, col_off + j),
                            cell_id(row_off + t.to, col_off + j), t.label});
      a.sets["M" + std::to_string(++m_count)] = unit.all;
      row_off += h;
      col_off += w;
    } else {
      int w = 1 + rng.pick(spec.cols);
      for (int j = 0; j < w; ++j) {
        a.cell(row_off, col_off + j);
        unit.all.push_back(cell_id(row_off, col_off + j));
      }
      unit.entry_row = unit.exit_row = unit.all;
      row_off += 1;
      col_off += w;
    }
    built.push_back(std::move(unit));
  }
  for (int u = 1; u < units; ++u) {
    Label label{"s" + std::to_string(u), rng.weight()};
    for (const auto& tail : built[u - 1].exit_row)
      for (const auto& head : built[u].entry_row) a.arcs.push_back({tail, head, label});
  }
  if (units >= 3)
    a.arcs.push_back({built.front().all.front(), built.back().all.back(),
                      Label{"skip", rng.weight()}});

  GraphDocument doc = a.doc(GeneratorKind::MixedT7, spec.seed, true);
  T7Partition partition;
  for (const auto& [name, members] : doc.sets)
    if (name.starts_with("M"))
      partition.m_blocks.emplace_back(members.begin(), members.end());
  require(verify(decompose_t7(doc.graph, *doc.indexing, partition), doc.graph),
          "t7 instance failed to decompose");
  return doc;
}

}  // namespace

GraphDocument generate(const GeneratorSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0 || spec.blocks <= 0 || spec.labels < 0)
    throw Error(ErrorKind::InvalidSpec, "size parameters must be positive");
  switch (spec.kind) {
    case GeneratorKind::CartesianMatrix: return gen_cartesian(spec);
    case GeneratorKind::BipartiteMatrix: return gen_bipartite(spec);
    case GeneratorKind::T1Cut: return gen_t1(spec);
    case GeneratorKind::T2Cut: return gen_t2(spec);
    case GeneratorKind::MixedT7: return gen_t7(spec);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown generator kind");
}

}  // namespace vrsp
