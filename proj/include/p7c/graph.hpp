#ifndef P7C_GRAPH_HPP
#define P7C_GRAPH_HPP

// Immutable simple graphs with bit-row adjacency.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p7c {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}
  static VertexSet full(int n);
  static VertexSet of(int n, const std::vector<int>& vs);

  int universe() const { return n_; }
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

  int count() const;
  bool empty() const;
  bool any() const { return !empty(); }
  // First member >= from, or -1.
  int next(int from) const;
  int first() const { return next(0); }
  std::vector<int> to_vector() const;

  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet operator&(const VertexSet& o) const { VertexSet r = *this; r &= o; return r; }
  VertexSet operator|(const VertexSet& o) const { VertexSet r = *this; r |= o; return r; }
  VertexSet operator-(const VertexSet& o) const { VertexSet r = *this; r -= o; return r; }
  VertexSet complement() const;

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  // Lexicographic on sorted member lists.
  bool lex_less(const VertexSet& o) const;

  const std::vector<std::uint64_t>& words() const { return w_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        int b = __builtin_ctzll(x);
        f(static_cast<int>(i * 64 + b));
        x &= x - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  bool adj(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& nbr(int v) const { return rows_[v]; }
  VertexSet closed_nbr(int v) const;
  int degree(int v) const { return rows_[v].count(); }
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // Vertex ids of the parent graph this one was derived from (identity when not derived).
  const std::vector<int>& origin() const { return origin_; }
  int origin_of(int v) const { return origin_.empty() ? v : origin_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_clique(const VertexSet& s) const;
  bool is_stable(const VertexSet& s) const;
  bool is_complete() const;
  bool operator==(const Graph& o) const;
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  friend class GraphBuilder;
  friend Graph induced(const Graph&, const VertexSet&);
  friend Graph complement(const Graph&);
  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> origin_;
  std::vector<std::string> labels_;
};

// Mutable staging area; the only way besides derivation to produce a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  void make_clique(const std::vector<int>& vs);
  void make_complete(const std::vector<int>& a, const std::vector<int>& b);
  void set_labels(std::vector<std::string> labels);
  int n() const { return g_.n_; }
  bool adj(int u, int v) const { return g_.adj(u, v); }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

struct TwinDecomposition {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by least member
  Graph skeleton;                         // on class representatives; origin = representative ids
  std::vector<int> class_of;
};

struct UniversalPeel {
  VertexSet U;
  VertexSet core;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph induced(const Graph& g, const VertexSet& s);
Graph induced(const Graph& g, const std::vector<int>& vs);
Graph complement(const Graph& g);
// Components of g restricted to s, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g);
TwinDecomposition twin_decomposition(const Graph& g);
UniversalPeel universal_clique_peel(const Graph& g);
// Vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = "");

// Small named graphs used across tests and examples.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

}  // namespace p7c

#endif
