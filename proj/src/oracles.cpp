#include "p7c/oracles.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace p7c::oracle {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix to_matrix(const Graph& g) {
  Matrix m(static_cast<std::size_t>(g.n()), std::vector<char>(static_cast<std::size_t>(g.n()), 0));
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v && g.adj(u, v)) m[u][v] = 1;
  return m;
}

void check_cap(const Graph& g, int cap, int dflt, const char* who) {
  int c = cap < 0 ? dflt : cap;
  if (g.n() > c)
    throw CapExceeded(std::string(who) + ": " + std::to_string(g.n()) + " vertices exceeds cap " +
                      std::to_string(c));
}

int degree_in(const Matrix& m, const std::vector<int>& vs, int v) {
  int d = 0;
  for (int u : vs)
    if (m[v][u]) ++d;
  return d;
}

bool connected_subset(const Matrix& m, const std::vector<int>& vs) {
  if (vs.empty()) return true;
  std::vector<char> seen(vs.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (!seen[j] && m[vs[i]][vs[j]]) {
        seen[j] = 1;
        ++cnt;
        stack.push_back(j);
      }
  }
  return cnt == vs.size();
}

bool is_induced_cycle(const Matrix& m, const std::vector<int>& vs) {
  for (int v : vs)
    if (degree_in(m, vs, v) != 2) return false;
  return connected_subset(m, vs);
}

bool is_induced_path(const Matrix& m, const std::vector<int>& vs) {
  int ends = 0;
  for (int v : vs) {
    int d = degree_in(m, vs, v);
    if (d == 1)
      ++ends;
    else if (d != 2)
      return false;
  }
  return ends == 2 && connected_subset(m, vs);
}

bool is_theta33(const Matrix& m, const std::vector<int>& vs) {
  if (vs.size() != 8) return false;
  std::vector<int> hubs, mids;
  for (int v : vs) {
    int d = degree_in(m, vs, v);
    if (d == 3)
      hubs.push_back(v);
    else if (d == 2)
      mids.push_back(v);
    else
      return false;
  }
  if (hubs.size() != 2 || m[hubs[0]][hubs[1]]) return false;
  int a = hubs[0], d = hubs[1];
  std::vector<int> na, nd;
  for (int v : mids) {
    if (m[a][v] && m[d][v]) return false;
    if (m[a][v]) na.push_back(v);
    if (m[d][v]) nd.push_back(v);
  }
  if (na.size() != 3 || nd.size() != 3) return false;
  for (int b : na) {
    int k = 0;
    for (int c : nd)
      if (m[b][c]) ++k;
    if (k != 1) return false;
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (m[na[i]][na[j]] || m[nd[i]][nd[j]]) return false;
  return true;
}

template <class F>
void for_each_subset_of_size(int n, int k, F&& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Exhaustive search over stable sets (or cliques) of positive-weight vertices.
BruteSet best_set(const Graph& g, const Weights& w, bool clique_mode) {
  if (static_cast<int>(w.size()) != g.n()) throw std::invalid_argument("weight count mismatch");
  Matrix m = to_matrix(g);
  std::vector<int> pos;
  for (int v = 0; v < g.n(); ++v)
    if (w[v] > 0) pos.push_back(v);
  BruteSet best{{}, Rational(0)};
  std::vector<int> chosen;
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& cur) {
    if (cur > best.weight) {
      best.weight = cur;
      best.vertices = chosen;
    }
    for (std::size_t j = i; j < pos.size(); ++j) {
      int v = pos[j];
      bool ok = true;
      for (int u : chosen) {
        bool e = m[u][v];
        if (e != clique_mode) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      rec(j + 1, cur + w[v]);
      chosen.pop_back();
    }
  };
  rec(0, Rational(0));
  return best;
}

}  // namespace

int brute_chromatic(const Graph& g, int cap) {
  check_cap(g, cap, kChromaticCap, "brute_chromatic");
  int n = g.n();
  if (n == 0) return 0;
  Matrix m = to_matrix(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = 0, db = 0;
    for (int x = 0; x < n; ++x) {
      da += m[a][x];
      db += m[b][x];
    }
    return da > db;
  });
  std::vector<int> col(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int, int)> rec = [&](int i, int k, int used) {
    if (i == n) return true;
    int v = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      for (int j = 0; j < i; ++j)
        if (m[v][order[j]] && col[order[j]] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      col[v] = c;
      if (rec(i + 1, k, std::max(used, c + 1))) return true;
      col[v] = -1;
    }
    return false;
  };
  for (int k = 1; k <= n; ++k)
    if (rec(0, k, 0)) return k;
  return n;
}

BruteSet brute_mwis(const Graph& g, const Weights& w, int cap) {
  check_cap(g, cap, kSetCap, "brute_mwis");
  return best_set(g, w, false);
}

BruteSet brute_max_clique(const Graph& g, const Weights& w, int cap) {
  check_cap(g, cap, kSetCap, "brute_max_clique");
  return best_set(g, w, true);
}

int brute_alpha(const Graph& g, int cap) {
  check_cap(g, cap, kSetCap, "brute_alpha");
  return static_cast<int>(best_set(g, unit_weights(g.n()), false).vertices.size());
}

int brute_omega(const Graph& g, int cap) {
  check_cap(g, cap, kSetCap, "brute_omega");
  return static_cast<int>(best_set(g, unit_weights(g.n()), true).vertices.size());
}

std::map<int, int> hole_census(const Graph& g, int cap) {
  check_cap(g, cap, kHoleCap, "hole_census");
  Matrix m = to_matrix(g);
  std::map<int, int> out;
  for (int k = 4; k <= g.n(); ++k)
    for_each_subset_of_size(g.n(), k, [&](const std::vector<int>& vs) {
      if (is_induced_cycle(m, vs)) ++out[k];
    });
  return out;
}

PatternCensus brute_patterns(const Graph& g, int cap) {
  check_cap(g, cap, kPatternCap, "brute_patterns");
  Matrix m = to_matrix(g);
  PatternCensus pc;
  int n = g.n();
  if (n >= 7) for_each_subset_of_size(n, 7, [&](const std::vector<int>& vs) {
      if (!pc.p7 && is_induced_path(m, vs)) pc.p7 = true;
      if (!pc.c7 && is_induced_cycle(m, vs)) pc.c7 = true;
    });
  if (n >= 4) for_each_subset_of_size(n, 4, [&](const std::vector<int>& vs) {
      if (!pc.c4 && is_induced_cycle(m, vs)) pc.c4 = true;
    });
  if (n >= 5) for_each_subset_of_size(n, 5, [&](const std::vector<int>& vs) {
      if (!pc.c5 && is_induced_cycle(m, vs)) pc.c5 = true;
    });
  if (n >= 8) for_each_subset_of_size(n, 8, [&](const std::vector<int>& vs) {
      if (!pc.theta33 && is_theta33(m, vs)) pc.theta33 = true;
    });
  return pc;
}

bool brute_has_clique_cutset(const Graph& g, int cap) {
  check_cap(g, cap, kCutsetCap, "brute_has_clique_cutset");
  Matrix m = to_matrix(g);
  int n = g.n();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  auto disconnected = [&]() {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!removed[v]) rest.push_back(v);
    return rest.size() >= 2 && !connected_subset(m, rest);
  };
  std::vector<int> clique;
  std::function<bool(int)> rec = [&](int start) {
    if (disconnected()) return true;
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : clique)
        if (!m[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      removed[v] = 1;
      if (rec(v + 1)) return true;
      removed[v] = 0;
      clique.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    if (colors[u] < 1) return false;
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adj(u, v) && colors[u] == colors[v]) return false;
  }
  return true;
}

}  // namespace p7c::oracle
