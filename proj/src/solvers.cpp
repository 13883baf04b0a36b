#include "p7c/solvers.hpp"

#include "p7c/chordal.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/pca.hpp"
#include "p7c/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Runs f(0..count-1) on up to `jobs` threads; rethrows the first exception.
template <class F>
void parallel_for(int count, int jobs, F&& f) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

void check_weights(const Graph& g, const Weights& w) {
  if (static_cast<int>(w.size()) != g.n())
    throw std::invalid_argument("weights: expected " + std::to_string(g.n()) + " values, got " +
                                std::to_string(w.size()));
}

Weights restrict(const Graph& sub, const Weights& w) {
  Weights out(static_cast<std::size_t>(sub.n()));
  for (int i = 0; i < sub.n(); ++i) out[i] = w[sub.origin_of(i)];
  return out;
}

std::vector<int> lift(const Graph& sub, const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(sub.origin_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_stable_set(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adj(vs[i], vs[j])) return false;
  return true;
}

bool is_clique_set(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adj(vs[i], vs[j])) return false;
  return true;
}

void check_proper(const Graph& g, const Coloring& c, const char* who) {
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v])
      throw InternalError(std::string(who) + ": edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " is monochromatic");
}

// Position of each parent vertex inside sub (or -1).
std::vector<int> position_map(const Graph& parent, const Graph& sub) {
  std::vector<int> pos(static_cast<std::size_t>(parent.n()), -1);
  for (int i = 0; i < sub.n(); ++i) pos[sub.origin_of(i)] = i;
  return pos;
}

std::vector<int> remap(const std::vector<int>& pos, const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(pos[v]);
  return out;
}

BraceletPartition remap(const std::vector<int>& pos, const BraceletPartition& p) {
  BraceletPartition q;
  q.istar = p.istar;
  q.C = remap(pos, p.C);
  for (int i = 0; i < 7; ++i) {
    q.star[i] = remap(pos, p.star[i]);
    q.plus[i] = remap(pos, p.plus[i]);
    q.minus[i] = remap(pos, p.minus[i]);
  }
  return q;
}

// Best clique of the window: chordal route first, exact search otherwise.
WeightedSet window_clique(const Graph& a, const std::vector<int>& window, const Weights& w) {
  if (window.empty()) return {};
  Graph h = induced(a, window);
  Weights wh = restrict(h, w);
  WeightedSet r;
  if (perfect_elimination_order(h).chordal()) {
    r = chordal_max_weight_clique(h, wh);
  } else {
    r = exact_max_weight_clique(h, wh);
    r.oracle_fallbacks = 1;
  }
  r.vertices = lift(h, r.vertices);
  return r;
}

std::vector<int> join(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> clique_windows(const AtomCertificate& c) {
  std::vector<std::vector<int>> out;
  switch (c.kind) {
    case AtomKind::Complete:
      break;
    case AtomKind::Ring6:
    case AtomKind::Wreath:
    case AtomKind::Crown:
      for (int i = 0; i < 6; ++i) out.push_back(join({&c.ring.X[i], &c.ring.X[mod(i + 1, 6)]}));
      break;
    case AtomKind::Lantern: {
      const auto& L = c.lantern;
      for (int i = 0; i < L.r; ++i) {
        out.push_back(join({&L.A, &L.B[i]}));
        out.push_back(join({&L.B[i], &L.C[i]}));
        out.push_back(join({&L.C[i], &L.D}));
      }
      break;
    }
    case AtomKind::Bracelet:
    case AtomKind::Emerald: {
      const auto& B = c.bracelet;
      std::array<std::vector<int>, 7> A;
      for (int i = 0; i < 7; ++i) A[i] = B.part(i);
      for (int i = 0; i < 7; ++i) out.push_back(join({&A[mod(i - 1, 7)], &A[i], &A[mod(i + 1, 7)]}));
      if (c.kind == AtomKind::Emerald) {
        int s = B.istar;
        out.push_back(join({&B.C, &B.star[mod(s + 2, 7)], &A[mod(s + 3, 7)], &A[mod(s - 3, 7)],
                            &B.star[mod(s - 2, 7)]}));
      }
      break;
    }
  }
  return out;
}

}  // namespace

void require_membership(const Graph& g, int limit) {
  if (g.n() > limit) return;
  ClassReport rep = class_membership(g);
  if (const PatternWitness* w = rep.violation())
    throw ClassViolation("graph contains an induced " + w->name(), w->vertices);
}

Coloring greedy_color_lantern(const Graph& g, const LanternPartition& p, int omega) {
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(g.n()), 0);
  auto up = [&](const std::vector<int>& vs) {
    for (std::size_t j = 0; j < vs.size(); ++j) c.colors[vs[j]] = static_cast<int>(j) + 1;
  };
  auto down = [&](const std::vector<int>& vs) {
    for (std::size_t j = 0; j < vs.size(); ++j) c.colors[vs[j]] = omega - static_cast<int>(j);
  };
  for (int i = 0; i < p.r; ++i) {
    up(p.B[i]);
    down(p.C[i]);
  }
  down(p.A);
  up(p.D);
  c.count = max_color(c.colors);
  for (auto [u, v] : g.edges())
    if (c.colors[u] > 0 && c.colors[u] == c.colors[v])
      throw InternalError("greedy_color_lantern: edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " is monochromatic");
  return c;
}

Coloring greedy_color_ring(const Graph& g, const RingPartition& p, int omega) {
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(g.n()), 0);
  for (int i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < p.X[i].size(); ++j)
      c.colors[p.X[i][j]] = i % 2 == 0 ? static_cast<int>(j) + 1 : omega - static_cast<int>(j);
  c.count = max_color(c.colors);
  for (auto [u, v] : g.edges())
    if (c.colors[u] > 0 && c.colors[u] == c.colors[v])
      throw InternalError("greedy_color_ring: edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " is monochromatic");
  return c;
}

WeightedSet clique_number_partition(const Graph& a, const AtomCertificate& cert, const Weights& w) {
  check_weights(a, w);
  WeightedSet best;
  int fallbacks = 0;
  for (const auto& win : clique_windows(cert)) {
    WeightedSet r = window_clique(a, win, w);
    fallbacks += r.oracle_fallbacks;
    if (r.weight > best.weight) best = r;
  }
  best.oracle_fallbacks = fallbacks;
  return best;
}

Coloring color_atom(const AtomCertificate& cert, const Graph& a) {
  Verdict v = verify_certificate(a, cert);
  if (!v.ok) throw ClassViolation("color_atom: certificate rejected: " + v.violations.front());
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(a.n()), 0);
  int core_colors = 0;
  switch (cert.kind) {
    case AtomKind::Complete:
      break;
    case AtomKind::Bracelet:
    case AtomKind::Emerald: {
      Graph k = induced(a, cert.core);
      auto pos = position_map(a, k);
      BraceletPartition local = remap(pos, cert.bracelet);
      ArcRepresentation rep = cert.kind == AtomKind::Emerald ? emerald_arcs(k, local) : bracelet_arcs(k, local);
      Coloring kc = pca_color(k, rep);
      for (int i = 0; i < k.n(); ++i) c.colors[k.origin_of(i)] = kc.colors[i];
      core_colors = kc.count;
      break;
    }
    case AtomKind::Lantern:
    case AtomKind::Ring6:
    case AtomKind::Wreath:
    case AtomKind::Crown: {
      int omega = static_cast<int>(clique_number_partition(a, cert, unit_weights(a.n())).weight);
      Coloring rc = cert.kind == AtomKind::Lantern ? greedy_color_lantern(a, cert.lantern, omega)
                                                   : greedy_color_ring(a, cert.ring, omega);
      for (int v : cert.core) c.colors[v] = rc.colors[v];
      core_colors = omega;
      break;
    }
  }
  int next = core_colors;
  for (int u : cert.U) c.colors[u] = ++next;
  c.count = max_color(c.colors);
  check_proper(a, c, "color_atom");
  return c;
}

Coloring min_coloring(const Graph& g, const SolveOptions& opt) {
  Coloring out;
  if (g.n() == 0) return out;
  require_membership(g, opt.membership_limit);
  DecompTree t = decompose(g);
  std::vector<int> leaves = t.leaves();
  std::vector<Coloring> cols(leaves.size());
  parallel_for(static_cast<int>(leaves.size()), opt.jobs, [&](int i) {
    Graph a = t.node_graph(leaves[i]);
    cols[i] = color_atom(recognize_atom(a), a);
  });
  int k = 0;
  std::map<int, Coloring> by_leaf;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    k = std::max(k, cols[i].count);
    by_leaf[leaves[i]] = cols[i];
  }
  out = merge_colorings(t, by_leaf, k);
  check_proper(g, out, "min_coloring");
  return out;
}

WeightedSet exact_max_weight_clique(const Graph& g, const Weights& w) {
  check_weights(g, w);
  std::vector<int> cand;
  for (int v = 0; v < g.n(); ++v)
    if (w[v] > 0) cand.push_back(v);
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  });
  WeightedSet best;
  std::vector<int> cur;
  auto rec = [&](auto&& self, const std::vector<int>& P, const Rational& have) -> void {
    if (have > best.weight) {
      best.weight = have;
      best.vertices = cur;
    }
    Rational bound = have;
    for (int v : P) bound += w[v];
    if (bound <= best.weight) return;
    for (std::size_t i = 0; i < P.size(); ++i) {
      Rational rest = have;
      for (std::size_t j = i; j < P.size(); ++j) rest += w[P[j]];
      if (rest <= best.weight) return;
      int v = P[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < P.size(); ++j)
        if (g.adj(v, P[j])) next.push_back(P[j]);
      cur.push_back(v);
      self(self, next, have + w[v]);
      cur.pop_back();
    }
  };
  rec(rec, cand, Rational(0));
  std::sort(best.vertices.begin(), best.vertices.end());
  return best;
}

WeightedSet mwis_atom(const Graph& a, const Weights& w) {
  check_weights(a, w);
  WeightedSet best;
  int fallbacks = 0;
  for (int v = 0; v < a.n(); ++v) {
    if (w[v] <= 0) continue;
    VertexSet rest = a.all() - a.closed_nbr(v);
    WeightedSet cand;
    cand.vertices = {v};
    cand.weight = w[v];
    if (rest.any()) {
      Graph h = induced(a, rest);
      Weights wh = restrict(h, w);
      WeightedSet s;
      if (perfect_elimination_order(h).chordal()) {
        s = chordal_mwis(h, wh);
      } else {
        s = mwis_atom(h, wh);
        fallbacks += 1 + s.oracle_fallbacks;
      }
      for (int x : lift(h, s.vertices)) cand.vertices.push_back(x);
      cand.weight += s.weight;
    }
    if (cand.weight > best.weight) best = cand;
  }
  std::sort(best.vertices.begin(), best.vertices.end());
  best.oracle_fallbacks = fallbacks;
  return best;
}

WeightedSet mwis(const Graph& g, const Weights& w, const SolveOptions& opt) {
  check_weights(g, w);
  if (g.n() == 0) return {};
  require_membership(g, opt.membership_limit);
  DecompTree t = decompose(g);
  Weights cur = w;
  int fallbacks = 0;

  auto solve_on = [&](const VertexSet& s) {
    if (s.empty()) return WeightedSet{};
    Graph h = induced(g, s);
    WeightedSet r = mwis_atom(h, restrict(h, cur));
    fallbacks += r.oracle_fallbacks;
    r.vertices = lift(h, r.vertices);
    r.weight = set_weight(r.vertices, cur);
    return r;
  };

  struct Level {
    std::vector<int> S;
    WeightedSet without_s;
    std::map<int, WeightedSet> avoiding;
  };
  std::vector<Level> levels;
  int node = 0;
  while (!t.nodes[node].is_leaf()) {
    const DecompNode& nd = t.nodes[node];
    VertexSet atom = VertexSet::of(g.n(), t.nodes[nd.left].vertices);
    Level lv;
    lv.S = nd.cutset;
    lv.without_s = solve_on(atom - VertexSet::of(g.n(), lv.S));
    for (int v : lv.S) lv.avoiding[v] = solve_on(atom - g.closed_nbr(v));
    // Later levels see the cutset weights adjusted by what this atom contributes.
    for (int v : lv.S) cur[v] = cur[v] + lv.avoiding[v].weight - lv.without_s.weight;
    levels.push_back(std::move(lv));
    node = nd.right;
  }
  WeightedSet I = solve_on(VertexSet::of(g.n(), t.nodes[node].vertices));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<int> hit;
    for (int v : it->S)
      if (std::binary_search(I.vertices.begin(), I.vertices.end(), v)) hit.push_back(v);
    if (hit.size() > 1) throw InternalError("mwis: stable set meets a clique cutset twice");
    const WeightedSet& add = hit.size() == 1 ? it->avoiding[hit[0]] : it->without_s;
    I.vertices.insert(I.vertices.end(), add.vertices.begin(), add.vertices.end());
    std::sort(I.vertices.begin(), I.vertices.end());
    I.vertices.erase(std::unique(I.vertices.begin(), I.vertices.end()), I.vertices.end());
  }
  I.weight = set_weight(I.vertices, w);
  I.oracle_fallbacks = fallbacks;
  if (!is_stable_set(g, I.vertices)) throw InternalError("mwis: result is not stable");
  return I;
}

WeightedSet max_weight_clique(const Graph& g, const Weights& w, const SolveOptions& opt) {
  check_weights(g, w);
  if (g.n() == 0) return {};
  require_membership(g, opt.membership_limit);
  DecompTree t = decompose(g);
  std::vector<int> leaves = t.leaves();
  std::vector<WeightedSet> per(leaves.size());
  parallel_for(static_cast<int>(leaves.size()), opt.jobs, [&](int i) {
    Graph a = t.node_graph(leaves[i]);
    Weights wa = restrict(a, w);
    AtomCertificate cert = recognize_atom(a);
    WeightedSet r = clique_number_partition(a, cert, wa);
    for (int u : cert.U)
      if (wa[u] > 0) r.vertices.push_back(u);
    r.vertices = lift(a, r.vertices);
    r.weight = set_weight(r.vertices, w);
    per[i] = r;
  });
  WeightedSet best;
  int fallbacks = 0;
  for (const auto& r : per) {
    fallbacks += r.oracle_fallbacks;
    if (r.weight > best.weight) best = r;
  }
  best.oracle_fallbacks = fallbacks;
  if (!is_clique_set(g, best.vertices)) throw InternalError("max_weight_clique: result is not a clique");
  return best;
}

}  // namespace p7c
