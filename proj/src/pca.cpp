#include "p7c/pca.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Rational wrap(Rational x, const Rational& c) {
  while (x < 0) x += c;
  while (x >= c) x -= c;
  return x;
}

// Arcs with endpoints replaced by their rank among all distinct endpoint values.
// Cyclic order is all that intersection and containment depend on.
struct RankedArcs {
  long m = 0;  // circumference in ranks
  std::vector<long> s, e;
  long len(int i) const { return ((e[i] - s[i]) % m + m) % m; }
  bool on(long p, int i) const { return ((p - s[i]) % m + m) % m <= len(i); }
  bool meet(int i, int j) const { return on(s[j], i) || on(s[i], j); }
};

RankedArcs rank_arcs(const ArcRepresentation& rep) {
  if (rep.circumference <= 0) throw std::invalid_argument("arc model: circumference must be positive");
  const std::size_t n = rep.arcs.size();
  std::vector<Rational> vals;
  std::vector<Rational> s(n), e(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = wrap(rep.arcs[i].start, rep.circumference);
    e[i] = wrap(rep.arcs[i].end, rep.circumference);
    vals.push_back(s[i]);
    vals.push_back(e[i]);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  RankedArcs r;
  r.m = static_cast<long>(vals.size()) + 1;
  auto rank = [&](const Rational& x) {
    return static_cast<long>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    r.s.push_back(rank(s[i]));
    r.e.push_back(rank(e[i]));
  }
  return r;
}

Graph realize_ranked(const RankedArcs& r) {
  const int n = static_cast<int>(r.s.size());
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r.meet(i, j)) b.add_edge(i, j);
  return b.build();
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Sorted-order cyclic coloring search: colors increase along the arc order and wrap
// w times around k colors. Constraints are difference bounds solved by Bellman-Ford.
struct CyclicSearch {
  const Graph& g;
  const RankedArcs& r;
  std::vector<int> order;  // arcs by (start, end, id)
  std::vector<int> reach;  // forward neighbours in order
  bool usable = true;
  int alpha = 1;

  CyclicSearch(const Graph& g_, const RankedArcs& r_) : g(g_), r(r_) {
    const int n = g.n();
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (r.s[a] != r.s[b]) return r.s[a] < r.s[b];
      if (r.e[a] != r.e[b]) return r.e[a] < r.e[b];
      return a < b;
    });
    reach.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
      int c = 0;
      while (c + 1 < n && r.on(r.s[order[(i + c + 1) % n]], order[i])) ++c;
      reach[i] = c;
    }
    for (auto [u, v] : g.edges()) {
      int pu = pos[u], pv = pos[v];
      bool fwd = mod(pv - pu, n) <= reach[pu];
      bool bwd = mod(pu - pv, n) <= reach[pv];
      if (fwd == bwd) {
        usable = false;
        break;
      }
    }
    if (usable) {
      for (int i = 0; i < n; ++i) alpha = std::max(alpha, greedy_stable(i));
    }
  }

  int greedy_stable(int first) const {
    const int n = g.n();
    int count = 1, cur = first;
    while (true) {
      int nxt = cur + reach[mod(cur, n)] + 1;
      if (nxt >= first + n) break;
      if (g.adj(order[mod(nxt, n)], order[first])) break;
      ++count;
      cur = nxt;
    }
    return count;
  }

  std::optional<std::vector<int>> try_k(int k) const {
    const int n = g.n();
    if (!usable || n == 0) return std::nullopt;
    for (int w = ceil_div(n, k); w <= std::max(alpha, ceil_div(n, k)); ++w) {
      const long K = static_cast<long>(k) * w;
      struct E {
        int a, b;
        long c;
      };
      std::vector<E> es;
      for (int i = 0; i + 1 < n; ++i) es.push_back({i + 1, i, -1});
      es.push_back({0, n - 1, K - 1});
      for (int i = 0; i < n; ++i) {
        int j = i + reach[i];
        if (j < n)
          es.push_back({i, j, k - 1});
        else
          es.push_back({i, j - n, k - 1 - K});
      }
      std::vector<long> d(static_cast<std::size_t>(n), 0);
      bool stable = false;
      for (int it = 0; it <= n && !stable; ++it) {
        stable = true;
        for (const E& e : es)
          if (d[e.a] + e.c < d[e.b]) {
            d[e.b] = d[e.a] + e.c;
            stable = false;
          }
      }
      if (!stable) continue;
      std::vector<int> colors(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) colors[order[i]] = static_cast<int>(((d[i] % k) + k) % k) + 1;
      if (is_proper_coloring(g, colors)) return colors;
    }
    return std::nullopt;
  }
};

// Exact k-coloring by backtracking in arc order; twins take increasing colors.
struct Backtrack {
  const Graph& g;
  std::vector<int> order, twin_prev;
  std::vector<int> color;
  int k = 0;

  Backtrack(const Graph& g_, const RankedArcs& r) : g(g_) {
    const int n = g.n();
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (r.s[a] != r.s[b]) return r.s[a] < r.s[b];
      if (r.e[a] != r.e[b]) return r.e[a] < r.e[b];
      return a < b;
    });
    twin_prev.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i < n; ++i) {
      int a = order[i - 1], b = order[i];
      if (g.closed_nbr(a) == g.closed_nbr(b)) twin_prev[i] = i - 1;
    }
  }

  bool run(int kk) {
    k = kk;
    color.assign(static_cast<std::size_t>(g.n()), 0);
    return place(0, 0);
  }

  bool place(int i, int used) {
    if (i == g.n()) return true;
    int v = order[i];
    int lo = 1;
    if (twin_prev[i] >= 0) lo = color[order[twin_prev[i]]] + 1;
    int hi = std::min(k, used + 1);
    for (int c = lo; c <= hi; ++c) {
      bool ok = true;
      g.nbr(v).for_each([&](int u) {
        if (color[u] == c) ok = false;
      });
      if (!ok) continue;
      color[v] = c;
      if (place(i + 1, std::max(used, c))) return true;
      color[v] = 0;
    }
    return false;
  }
};

}  // namespace

bool point_on_arc(const ArcRepresentation& rep, const Rational& p, const Arc& a) {
  const Rational& c = rep.circumference;
  return wrap(p - a.start, c) <= wrap(a.end - a.start, c);
}

bool arcs_intersect(const ArcRepresentation& rep, const Arc& a, const Arc& b) {
  return point_on_arc(rep, b.start, a) || point_on_arc(rep, a.start, b);
}

Graph realize(const ArcRepresentation& rep) { return realize_ranked(rank_arcs(rep)); }

bool is_proper(const ArcRepresentation& rep) {
  RankedArcs r = rank_arcs(rep);
  const int n = static_cast<int>(r.s.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (r.s[i] == r.s[j] && r.e[i] == r.e[j]) continue;
      long d = ((r.s[i] - r.s[j]) % r.m + r.m) % r.m;
      if (d + r.len(i) <= r.len(j)) return false;
    }
  return true;
}

int arc_depth(const ArcRepresentation& rep) {
  RankedArcs r = rank_arcs(rep);
  const int n = static_cast<int>(r.s.size());
  int best = n ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = 0; j < n; ++j)
      if (r.on(r.s[i], j)) ++c;
    best = std::max(best, c);
  }
  return best;
}

ArcRepresentation emerald_arcs(const Graph& g, const BraceletPartition& p) {
  const int s = p.istar;
  auto S = [&](int i) { return p.star[mod(s + i, 7)]; };
  auto P = [&](int i) { return p.plus[mod(s + i, 7)]; };
  auto M = [&](int i) { return p.minus[mod(s + i, 7)]; };
  auto A = [&](int i) { return p.part(s + i); };
  // One arc per part on a circle of 360; every member of a part shares it.
  const std::vector<std::pair<std::vector<int>, std::pair<int, int>>> parts{
      {p.C, {60, 120}},  {A(3), {30, 100}},   {S(2), {0, 70}},   {M(2), {330, 40}},
      {A(1), {300, 10}}, {P(0), {230, 350}},  {A(4), {80, 150}}, {S(5), {110, 180}},
      {P(5), {140, 210}}, {A(6), {170, 240}}, {M(0), {190, 310}},
  };
  ArcRepresentation rep;
  rep.circumference = 360;
  rep.arcs.assign(static_cast<std::size_t>(g.n()), Arc{Rational(-1), Rational(-1)});
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (const auto& [vs, arc] : parts)
    for (int v : vs) {
      rep.arcs[v] = Arc{Rational(arc.first), Rational(arc.second)};
      seen[v] = 1;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) throw InternalError("emerald_arcs: vertex " + std::to_string(v) + " is in no part");
  Graph h = realize(rep);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (h.adj(u, v) != g.adj(u, v))
        throw InternalError("emerald_arcs: arcs disagree with the graph at pair " + std::to_string(u) + "," +
                            std::to_string(v));
  return rep;
}

CanonicalBracelet canonical_embed(const Graph& g, const BraceletPartition& p) {
  const int s = p.istar;
  auto S = [&](int i) { return p.star[mod(s + i, 7)]; };
  auto P = [&](int i) { return p.plus[mod(s + i, 7)]; };
  auto M = [&](int i) { return p.minus[mod(s + i, 7)]; };
  for (int i : {1, 2, 3, 4})
    if (!P(i).empty()) throw ClassViolation("canonical_embed: unexpected A+ part at offset " + std::to_string(i));
  for (int i : {3, 4, 5, 6})
    if (!M(i).empty()) throw ClassViolation("canonical_embed: unexpected A- part at offset " + std::to_string(i));
  if (!p.C.empty()) throw ClassViolation("canonical_embed: partition has a C part");

  CanonicalBracelet c;
  c.anchor = {S(4), S(5), S(6), S(0), S(1), S(2), S(3)};
  const std::array<std::pair<std::vector<int>, std::vector<int>>, 3> pairs{
      std::make_pair(P(5), M(0)), std::make_pair(P(0), M(2)), std::make_pair(P(6), M(1))};
  int t = 1;
  for (int q = 0; q < 3; ++q) {
    const auto& [X, Y] = pairs[q];
    VertexSet xs = VertexSet::of(g.n(), X), ys = VertexSet::of(g.n(), Y);
    // Distinct Y-neighbourhoods in X, largest first, must form a chain.
    std::vector<VertexSet> groups;
    for (int y : Y) {
      VertexSet nx = g.nbr(y) & xs;
      if (nx.empty()) throw ClassViolation("canonical_embed: wavy vertex " + std::to_string(y) + " has no partner");
      if (std::find(groups.begin(), groups.end(), nx) == groups.end()) groups.push_back(nx);
    }
    std::sort(groups.begin(), groups.end(), [](const VertexSet& a, const VertexSet& b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return a.lex_less(b);
    });
    for (std::size_t j = 1; j < groups.size(); ++j)
      if (!groups[j].subset_of(groups[j - 1]))
        throw ClassViolation("canonical_embed: wavy pair adjacency is not a staircase");
    const int m = static_cast<int>(groups.size());
    c.x[q].assign(static_cast<std::size_t>(m), {});
    c.y[q].assign(static_cast<std::size_t>(m), {});
    for (int y : Y) {
      VertexSet nx = g.nbr(y) & xs;
      int j = static_cast<int>(std::find(groups.begin(), groups.end(), nx) - groups.begin());
      c.y[q][j].push_back(y);
    }
    for (int x : X) {
      VertexSet ny = g.nbr(x) & ys;
      VertexSet prefix(g.n());
      int idx = 0;
      for (int j = 0; j < m; ++j) {
        VertexSet next = prefix;
        for (int y : c.y[q][j]) next.set(y);
        if (!next.subset_of(ny)) break;
        prefix = next;
        idx = j + 1;
      }
      if (idx == 0 || prefix != ny)
        throw ClassViolation("canonical_embed: wavy pair adjacency is not a staircase at vertex " + std::to_string(x));
      c.x[q][idx - 1].push_back(x);
    }
    t = std::max(t, m);
  }
  c.t = t;
  for (int q = 0; q < 3; ++q) {
    c.x[q].resize(static_cast<std::size_t>(t));
    c.y[q].resize(static_cast<std::size_t>(t));
  }
  return c;
}

std::vector<LabeledInterval> bracelet_intervals(const CanonicalBracelet& c, const Rational& s) {
  if (!(s * c.t > 0 && s * c.t < 1)) throw std::invalid_argument("bracelet_intervals: need 0 < s*t < 1");
  static const char* anchor_names[7] = {"a4", "a5*", "a6*", "a0*", "a1*", "a2*", "a3"};
  static const char* x_names[3] = {"A5+", "A0+", "A6+"};
  static const char* y_names[3] = {"A0-", "A2-", "A1-"};
  static const int x_left[3] = {3, 7, 5};
  std::vector<LabeledInterval> out;
  for (int a = 0; a < 6; ++a)
    out.push_back({anchor_names[a], Rational(1 + 2 * a), Rational(4 + 2 * a), c.anchor[a]});
  for (int q = 0; q < 3; ++q)
    for (int i = 1; i <= c.t; ++i) {
      Rational sh = s * i;
      std::string idx = std::to_string(i);
      out.push_back({"x" + idx + "[" + x_names[q] + "]", x_left[q] + sh, x_left[q] + 3 + sh, c.x[q][i - 1]});
      out.push_back({"y" + idx + "[" + y_names[q] + "]", x_left[q] + 3 + sh, x_left[q] + 6 + sh, c.y[q][i - 1]});
    }
  out.push_back({anchor_names[6], Rational(13), Rational(16), c.anchor[6]});
  return out;
}

ClosedCircle close_circle(const std::vector<LabeledInterval>& iv) {
  if (iv.size() < 2) throw std::invalid_argument("close_circle: need at least two intervals");
  const Rational L = iv.front().left, R = iv.back().right;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].left > iv[i].right) throw std::invalid_argument("close_circle: reversed interval " + iv[i].name);
    if (i > 0 && iv[i].left <= L) throw std::invalid_argument("close_circle: first interval is not strictly leftmost");
    if (i + 1 < iv.size() && iv[i].right >= R)
      throw std::invalid_argument("close_circle: last interval is not strictly rightmost");
  }
  ClosedCircle out;
  out.rep.circumference = R - L;
  for (const auto& x : iv) {
    Rational a = x.left - L, b = x.right - L;
    if (b == out.rep.circumference) b = 0;
    out.rep.arcs.push_back(Arc{a, b});
    out.names.push_back(x.name);
  }
  return out;
}

ArcRepresentation bracelet_arcs(const Graph& g, const BraceletPartition& p) {
  CanonicalBracelet c = canonical_embed(g, p);
  auto iv = bracelet_intervals(c, Rational(1, c.t + 1));
  ClosedCircle cc = close_circle(iv);
  ArcRepresentation rep;
  rep.circumference = cc.rep.circumference;
  rep.arcs.assign(static_cast<std::size_t>(g.n()), Arc{});
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (int v : iv[i].vertices) {
      rep.arcs[v] = cc.rep.arcs[i];
      seen[v] = 1;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) throw InternalError("bracelet_arcs: vertex " + std::to_string(v) + " has no slot");
  Graph h = realize(rep);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (h.adj(u, v) != g.adj(u, v))
        throw InternalError("bracelet_arcs: arcs disagree with the graph at pair " + std::to_string(u) + "," +
                            std::to_string(v));
  return rep;
}

Coloring pca_color(const Graph& g, const ArcRepresentation& rep) {
  if (static_cast<int>(rep.arcs.size()) != g.n()) throw ClassViolation("pca_color: arc count differs from vertex count");
  RankedArcs r = rank_arcs(rep);
  Graph h = realize_ranked(r);
  for (int u = 0; u < g.n(); ++u)
    if (h.nbr(u) != g.nbr(u)) throw ClassViolation("pca_color: arcs do not realize the graph", {u});
  Coloring out;
  if (g.n() == 0) return out;
  int depth = arc_depth(rep);
  CyclicSearch cyc(g, r);
  Backtrack bt(g, r);
  int lb = depth;
  // the greedy stable set is exact only for proper models
  if (cyc.usable && is_proper(rep)) lb = std::max(lb, ceil_div(g.n(), cyc.alpha));
  for (int k = lb; k <= g.n(); ++k) {
    if (auto cols = cyc.try_k(k)) {
      out.colors = *cols;
      break;
    }
    if (bt.run(k)) {
      out.colors = bt.color;
      break;
    }
  }
  out.count = max_color(out.colors);
  if (!is_proper_coloring(g, out.colors)) throw InternalError("pca_color: produced an improper coloring");
  return out;
}

}  // namespace p7c
