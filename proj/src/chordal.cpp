#include "p7c/chordal.hpp"

#include <algorithm>
#include <deque>

namespace p7c {

Rational set_weight(const std::vector<int>& vs, const Weights& w) {
  Rational s = 0;
  for (int v : vs) s += w[v];
  return s;
}

int max_color(const std::vector<int>& colors) {
  int m = 0;
  for (int c : colors) m = std::max(m, c);
  return m;
}

namespace {

// Maximum cardinality search; returns vertices in visit order (reverse of elimination).
std::vector<int> mcs_visit_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> label(static_cast<std::size_t>(n), 0), out;
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n + 1));
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  for (int v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  int top = 0;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    while (top >= 0) {
      auto& b = buckets[top];
      while (!b.empty() && (done[b.back()] || label[b.back()] != top)) b.pop_back();
      if (!b.empty()) break;
      --top;
    }
    int v = buckets[top].back();
    buckets[top].pop_back();
    done[v] = 1;
    out.push_back(v);
    g.nbr(v).for_each([&](int u) {
      if (!done[u]) {
        ++label[u];
        buckets[label[u]].push_back(u);
        top = std::max(top, label[u]);
      }
    });
  }
  return out;
}

void require_chordal(const Graph& g, const ChordalityResult& r, const char* who) {
  if (!r.chordal()) throw ClassViolation(std::string(who) + ": input is not chordal", r.hole);
}

}  // namespace

bool is_simplicial_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  VertexSet later = g.all();
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    later.reset(v);
    VertexSet ln = g.nbr(v) & later;
    int p = -1;
    ln.for_each([&](int u) {
      if (p < 0 || pos[u] < pos[p]) p = u;
    });
    if (p < 0) continue;
    VertexSet rest = ln;
    rest.reset(p);
    if (!rest.subset_of(g.nbr(p))) return false;
  }
  return true;
}

std::vector<int> find_hole(const Graph& g) {
  const int n = g.n();
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = g.nbr(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int x = nb[i], y = nb[j];
        if (g.adj(x, y)) continue;
        VertexSet allowed = g.all() - g.closed_nbr(v);
        allowed.set(x);
        allowed.set(y);
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::deque<int> q{x};
        parent[x] = -1;
        while (!q.empty() && parent[y] == -2) {
          int a = q.front();
          q.pop_front();
          (g.nbr(a) & allowed).for_each([&](int b) {
            if (parent[b] == -2) {
              parent[b] = a;
              q.push_back(b);
            }
          });
        }
        if (parent[y] == -2) continue;
        std::vector<int> hole{v};
        for (int c = y; c != -1; c = parent[c]) hole.push_back(c);
        return hole;
      }
  }
  return {};
}

ChordalityResult perfect_elimination_order(const Graph& g) {
  std::vector<int> order = mcs_visit_order(g);
  std::reverse(order.begin(), order.end());
  ChordalityResult r;
  if (is_simplicial_order(g, order)) {
    r.peo = EliminationOrder{order};
  } else {
    r.hole = find_hole(g);
    if (r.hole.empty()) throw InternalError("elimination order rejected but no hole found");
  }
  return r;
}

WeightedSet chordal_mwis(const Graph& g, const Weights& w) {
  auto r = perfect_elimination_order(g);
  require_chordal(g, r, "chordal_mwis");
  const auto& order = r.peo->order;
  const int n = g.n();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Weights residual = w;
  std::vector<char> red(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (residual[v] <= 0) continue;
    red[v] = 1;
    Rational take = residual[v];
    g.nbr(v).for_each([&](int u) {
      if (pos[u] > i) residual[u] -= take;
    });
  }
  WeightedSet out;
  VertexSet chosen(n);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (red[v] && !g.nbr(v).intersects(chosen)) chosen.set(v);
  }
  out.vertices = chosen.to_vector();
  out.weight = set_weight(out.vertices, w);
  return out;
}

WeightedSet chordal_max_weight_clique(const Graph& g, const Weights& w) {
  auto r = perfect_elimination_order(g);
  require_chordal(g, r, "chordal_max_weight_clique");
  const auto& order = r.peo->order;
  const int n = g.n();
  VertexSet positive(n), later = g.all();
  for (int v = 0; v < n; ++v)
    if (w[v] > 0) positive.set(v);
  WeightedSet best;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    later.reset(v);
    if (!positive.test(v)) continue;
    VertexSet c = g.nbr(v) & later & positive;
    c.set(v);
    std::vector<int> vs = c.to_vector();
    Rational s = set_weight(vs, w);
    if (s > best.weight) {
      best.weight = s;
      best.vertices = vs;
    }
  }
  return best;
}

Coloring chordal_coloring(const Graph& g) {
  auto r = perfect_elimination_order(g);
  require_chordal(g, r, "chordal_coloring");
  const auto& order = r.peo->order;
  const int n = g.n();
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    std::vector<char> used(static_cast<std::size_t>(n + 2), 0);
    g.nbr(v).for_each([&](int u) {
      if (c.colors[u] > 0) used[c.colors[u]] = 1;
    });
    int col = 1;
    while (used[col]) ++col;
    c.colors[v] = col;
  }
  c.count = max_color(c.colors);
  return c;
}

}  // namespace p7c
