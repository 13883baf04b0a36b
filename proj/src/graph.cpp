#include "p7c/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace p7c {

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~std::uint64_t(0);
  if (n % 64) s.w_.back() = (std::uint64_t(1) << (n % 64)) - 1;
  return s;
}

VertexSet VertexSet::of(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs) s.set(v);
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto x : w_) c += __builtin_popcountll(x);
  return c;
}

bool VertexSet::empty() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

int VertexSet::next(int from) const {
  if (from >= n_) return -1;
  std::size_t i = static_cast<std::size_t>(from) >> 6;
  std::uint64_t x = w_[i] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (x) return static_cast<int>(i * 64 + __builtin_ctzll(x));
    if (++i >= w_.size()) return -1;
    x = w_[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::lex_less(const VertexSet& o) const {
  auto a = to_vector(), b = o.to_vector();
  return a < b;
}

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

VertexSet Graph::closed_nbr(int v) const {
  VertexSet s = rows_[v];
  s.set(v);
  return s;
}

long Graph::edge_count() const {
  long m = 0;
  for (const auto& r : rows_) m += r.count();
  return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && !(s - closed_nbr(v)).empty()) ok = false;
  });
  return ok;
}

bool Graph::is_stable(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && rows_[v].intersects(s)) ok = false;
  });
  return ok;
}

bool Graph::is_complete() const { return edge_count() == static_cast<long>(n_) * (n_ - 1) / 2; }

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (rows_[v] != o.rows_[v]) return false;
  return true;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  g_.rows_[u].set(v);
  g_.rows_[v].set(u);
}

void GraphBuilder::make_clique(const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

void GraphBuilder::make_complete(const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b) add_edge(u, v);
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != g_.n_) throw std::invalid_argument("label count mismatch");
  g_.labels_ = std::move(labels);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph on empty set");
  std::vector<int> vs = s.to_vector();
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    (g.rows_[vs[i]] & s).for_each([&](int u) { h.rows_[i].set(pos[u]); });
  }
  h.origin_ = vs;
  if (!g.labels_.empty())
    for (int v : vs) h.labels_.push_back(g.labels_[v]);
  return h;
}

Graph induced(const Graph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced: vertex out of range");
  return induced(g, VertexSet::of(g.n(), vs));
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  VertexSet all = g.all();
  for (int v = 0; v < g.n(); ++v) {
    h.rows_[v] = all - g.rows_[v];
    h.rows_[v].reset(v);
  }
  h.labels_ = g.labels_;
  return h;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (left.any()) {
    int start = left.first();
    VertexSet comp(g.n()), frontier(g.n());
    frontier.set(start);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet nxt(g.n());
      frontier.for_each([&](int v) { nxt |= g.nbr(v); });
      nxt &= left;
      nxt -= comp;
      frontier = nxt;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

std::vector<VertexSet> anticomponents(const Graph& g) {
  auto comps = components(complement(g));
  std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a.first() < b.first();
  });
  return comps;
}

TwinDecomposition twin_decomposition(const Graph& g) {
  TwinDecomposition td;
  td.class_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int v = 0; v < g.n(); ++v) {
    auto key = g.closed_nbr(v).words();
    auto it = seen.find(key);
    if (it == seen.end()) {
      int c = static_cast<int>(td.classes.size());
      seen.emplace(std::move(key), c);
      td.classes.push_back({v});
      td.class_of[v] = c;
    } else {
      td.classes[it->second].push_back(v);
      td.class_of[v] = it->second;
    }
  }
  std::vector<int> reps;
  for (auto& c : td.classes) reps.push_back(c.front());
  td.skeleton = g.n() ? induced(g, reps) : Graph(0);
  return td;
}

UniversalPeel universal_clique_peel(const Graph& g) {
  UniversalPeel p{VertexSet(g.n()), VertexSet(g.n())};
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1)
      p.U.set(v);
    else
      p.core.set(v);
  }
  return p;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> declared) || (kind != "edge" && kind != "col") || n < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
    } else if (tag == "e") {
      int u, v;
      if (n < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": edge before header");
      if (!(ls >> u >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("missing 'p edge' header");
  return build_graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << g.n() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace p7c
