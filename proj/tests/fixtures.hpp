#ifndef P7C_TESTS_FIXTURES_HPP
#define P7C_TESTS_FIXTURES_HPP

// Small named graphs shared by the unit tests.

#include "p7c/forge.hpp"
#include "p7c/graph.hpp"

#include <vector>

namespace p7c::fixture {

// K4 minus edge 13.
inline Graph diamond() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

// a = 0, b_i = i, c_i = r + i, d = 2r + 1.
inline Graph theta(int r) {
  std::vector<std::pair<int, int>> e;
  int d = 2 * r + 1;
  for (int i = 1; i <= r; ++i) {
    e.push_back({0, i});
    e.push_back({i, r + i});
    e.push_back({r + i, d});
  }
  return build_graph(2 * r + 2, e);
}

// Disjoint union of g and h.
inline Graph disjoint(const Graph& g, const Graph& h) {
  auto e = g.edges();
  for (auto [u, v] : h.edges()) e.push_back({u + g.n(), v + g.n()});
  return build_graph(g.n() + h.n(), e);
}

// join(K_k, g): g keeps ids 0..n-1, the clique follows.
inline Graph join_clique(const Graph& g, int k) { return add_universal_clique(g, k); }

// Cycle C_k with part sizes, each vertex blown up to a clique.
inline Graph blow_up_cycle(const std::vector<int>& sizes) {
  int k = static_cast<int>(sizes.size());
  std::vector<std::vector<int>> parts(k);
  int n = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < sizes[i]; ++j) parts[i].push_back(n++);
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i) {
    b.make_clique(parts[i]);
    b.make_complete(parts[i], parts[(i + 1) % k]);
  }
  return b.build();
}

inline Graph emerald() { return gen_emerald({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 0).g; }

// Two C7's sharing vertex 0.
inline Graph glued_c7() { return glue(cycle_graph(7), cycle_graph(7), {{0, 0}}); }

inline Graph random_graph(Rng& rng, int n, int num, int den) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(num, den)) b.add_edge(u, v);
  return b.build();
}

}  // namespace p7c::fixture

#endif
