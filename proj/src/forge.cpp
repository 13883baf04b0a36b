#include "p7c/forge.hpp"

#include "p7c/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<int> random_perm(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

std::vector<int> map_ids(const std::vector<int>& perm, const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(perm[v]);
  return out;
}

std::vector<int> sorted_apply(const std::vector<int>& perm, const std::vector<int>& vs) {
  auto out = map_ids(perm, vs);
  std::sort(out.begin(), out.end());
  return out;
}

// Consecutive ids for a block of `size` vertices.
std::vector<int> block(int& next, int size) {
  std::vector<int> out(static_cast<std::size_t>(size));
  std::iota(out.begin(), out.end(), next);
  next += size;
  return out;
}

void add_stair(GraphBuilder& b, const std::vector<int>& rows, const std::vector<int>& cols, const Staircase& s) {
  for (int r = 0; r < s.rows; ++r)
    for (int c = 0; c < s.f[r]; ++c) b.add_edge(rows[r], cols[c]);
}

void need(const std::string& problem, const std::string& who) {
  if (!problem.empty()) throw std::invalid_argument(who + ": " + problem);
}

std::string first_violation(const Verdict& v) { return v.ok ? "" : v.violations.front(); }

// Adds `extra` vertices to random parts of `sizes`.
template <std::size_t N>
void sprinkle(Rng& rng, std::array<int, N>& sizes, int extra, const std::vector<int>& allowed) {
  for (int k = 0; k < extra; ++k) ++sizes[allowed[rng.uniform(0, static_cast<int>(allowed.size()) - 1)]];
}

bool in_class(const Graph& g) { return class_membership(g).in_class(); }

}  // namespace

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span);
  std::uint64_t x;
  do x = eng_();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

bool Rng::coin(int num, int den) { return uniform(0, den - 1) < num; }

Staircase Staircase::full(int rows, int cols) {
  Staircase s;
  s.rows = rows;
  s.cols = cols;
  s.f.assign(static_cast<std::size_t>(rows), cols);
  return s;
}

Staircase Staircase::random(Rng& rng, int rows, int cols) {
  Staircase s;
  s.rows = rows;
  s.cols = cols;
  int cur = cols;
  for (int r = 0; r < rows; ++r) {
    if (r > 0) cur = rng.uniform(1, cur);
    s.f.push_back(cur);
  }
  return s;
}

std::string Staircase::check() const {
  if (rows < 1 || cols < 1) return "staircase needs at least one row and one column";
  if (static_cast<int>(f.size()) != rows) return "staircase has " + std::to_string(f.size()) + " rows, expected " + std::to_string(rows);
  if (f[0] != cols) return "first staircase row must cover every column";
  for (int r = 1; r < rows; ++r)
    if (f[r] > f[r - 1]) return "staircase rows must be non-increasing";
  if (f[rows - 1] < 1) return "every staircase row needs a neighbour";
  return "";
}

GenRing gen_ring6(const std::array<int, 6>& sizes, const std::array<Staircase, 6>& stairs, std::uint64_t seed) {
  for (int i = 0; i < 6; ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("gen_ring6: part sizes must be positive");
    if (stairs[i].rows != sizes[i] || stairs[i].cols != sizes[(i + 1) % 6])
      throw std::invalid_argument("gen_ring6: staircase " + std::to_string(i) + " does not match the part sizes");
    need(stairs[i].check(), "gen_ring6");
  }
  int n = 0;
  RingPartition p;
  for (int i = 0; i < 6; ++i) p.X[i] = block(n, sizes[i]);
  GraphBuilder b(n);
  for (int i = 0; i < 6; ++i) {
    b.make_clique(p.X[i]);
    add_stair(b, p.X[i], p.X[(i + 1) % 6], stairs[i]);
  }
  auto perm = random_perm(n, seed);
  GenRing out{relabel(b.build(), perm), {}};
  for (int i = 0; i < 6; ++i) out.p.X[i] = map_ids(perm, p.X[i]);
  need(first_violation(verify_ring(out.g, out.p, out.g.all().to_vector())), "gen_ring6");
  return out;
}

GenLantern gen_lantern(int r, const LanternSizes& sizes, const Staircase& stair1, std::uint64_t seed) {
  if (r < 3) throw std::invalid_argument("gen_lantern: need at least three arms");
  if (static_cast<int>(sizes.b.size()) != r || static_cast<int>(sizes.c.size()) != r)
    throw std::invalid_argument("gen_lantern: need one B and one C size per arm");
  if (sizes.a < 1 || sizes.d < 1) throw std::invalid_argument("gen_lantern: part sizes must be positive");
  for (int i = 0; i < r; ++i)
    if (sizes.b[i] < 1 || sizes.c[i] < 1) throw std::invalid_argument("gen_lantern: part sizes must be positive");
  if (stair1.rows != sizes.b[0] || stair1.cols != sizes.c[0])
    throw std::invalid_argument("gen_lantern: first-arm staircase does not match |B1| x |C1|");
  need(stair1.check(), "gen_lantern");
  int n = 0;
  LanternPartition p;
  p.r = r;
  p.A = block(n, sizes.a);
  p.D = block(n, sizes.d);
  for (int i = 0; i < r; ++i) {
    p.B.push_back(block(n, sizes.b[i]));
    p.C.push_back(block(n, sizes.c[i]));
  }
  GraphBuilder b(n);
  b.make_clique(p.A);
  b.make_clique(p.D);
  for (int i = 0; i < r; ++i) {
    b.make_clique(p.B[i]);
    b.make_clique(p.C[i]);
    b.make_complete(p.A, p.B[i]);
    b.make_complete(p.D, p.C[i]);
    if (i == 0)
      add_stair(b, p.B[0], p.C[0], stair1);
    else
      b.make_complete(p.B[i], p.C[i]);
  }
  auto perm = random_perm(n, seed);
  GenLantern out{relabel(b.build(), perm), {}};
  out.p.r = r;
  out.p.A = sorted_apply(perm, p.A);
  out.p.D = sorted_apply(perm, p.D);
  for (int i = 0; i < r; ++i) {
    out.p.B.push_back(i == 0 ? map_ids(perm, p.B[i]) : sorted_apply(perm, p.B[i]));
    out.p.C.push_back(i == 0 ? map_ids(perm, p.C[i]) : sorted_apply(perm, p.C[i]));
  }
  need(first_violation(verify_lantern(out.g, out.p, out.g.all().to_vector())), "gen_lantern");
  return out;
}

std::vector<std::string> validate_bracelet_spec(const BraceletSpec& s) {
  std::vector<std::string> bad;
  auto P = [&](int i) { return s.plus[mod(i, 7)]; };
  auto M = [&](int i) { return s.minus[mod(i, 7)]; };
  auto add = [&](const std::string& id) {
    if (std::find(bad.begin(), bad.end(), id) == bad.end()) bad.push_back(id);
  };
  for (int i = 0; i < 7; ++i) {
    if (s.star[i] < 0 || s.plus[i] < 0 || s.minus[i] < 0) add("sizes");
    if (s.star[i] + s.plus[i] + s.minus[i] < 1) add("I");
  }
  const int t = s.istar;
  if (t < 0 || t > 6) add("istar");
  if (P(t - 3) || M(t - 3) || P(t + 3) || M(t + 3)) add("III");
  if (M(t - 2) || P(t + 2)) add("IV");
  if (M(t - 1) || P(t + 1)) add("V");
  for (int i = 0; i < 7; ++i) {
    if ((P(i) > 0) != (M(i + 2) > 0)) add("pair");
    if (P(i) && (P(i + 3) || P(i - 3) || M(i - 2) || M(i - 1))) add("exclusion");
    if (M(i) && (P(i + 1) || P(i + 2) || M(i + 3) || M(i - 3))) add("exclusion");
  }
  for (int i = 0; i < 7; ++i) {
    auto it = s.stairs.find(i);
    if (P(i) > 0 && M(i + 2) > 0) {
      if (it == s.stairs.end()) {
        add("stair");
        continue;
      }
      if (it->second.rows != P(i) || it->second.cols != M(i + 2) || !it->second.check().empty()) add("stair");
    } else if (it != s.stairs.end()) {
      add("stair");
    }
  }
  for (const auto& [k, st] : s.stairs)
    if (k < 0 || k > 6) add("stair");
  return bad;
}

GenBracelet gen_bracelet(const BraceletSpec& spec, std::uint64_t seed) {
  auto bad = validate_bracelet_spec(spec);
  if (!bad.empty()) {
    std::string msg = "gen_bracelet: spec violates";
    for (const auto& b : bad) msg += " " + b;
    throw std::invalid_argument(msg);
  }
  int n = 0;
  BraceletPartition p;
  p.istar = spec.istar;
  for (int i = 0; i < 7; ++i) {
    p.star[i] = block(n, spec.star[i]);
    p.plus[i] = block(n, spec.plus[i]);
    p.minus[i] = block(n, spec.minus[i]);
  }
  GraphBuilder b(n);
  std::array<std::vector<int>, 7> A;
  for (int i = 0; i < 7; ++i) A[i] = p.part(i);
  for (int i = 0; i < 7; ++i) {
    b.make_clique(A[i]);
    b.make_complete(A[i], A[(i + 1) % 7]);
  }
  for (const auto& [i, st] : spec.stairs) add_stair(b, p.plus[i], p.minus[(i + 2) % 7], st);
  auto perm = random_perm(n, seed);
  GenBracelet out{relabel(b.build(), perm), {}};
  out.p.istar = p.istar;
  for (int i = 0; i < 7; ++i) {
    out.p.star[i] = sorted_apply(perm, p.star[i]);
    out.p.plus[i] = map_ids(perm, p.plus[i]);
    out.p.minus[i] = map_ids(perm, p.minus[i]);
  }
  need(first_violation(verify_bracelet(out.g, out.p, out.g.all().to_vector())), "gen_bracelet");
  return out;
}

GenBracelet gen_emerald(const std::array<int, 11>& sizes, std::uint64_t seed) {
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("gen_emerald: all eleven parts must be nonempty");
  int n = 0;
  std::array<std::vector<int>, 11> part;
  for (int i = 0; i < 11; ++i) part[i] = block(n, sizes[i]);
  enum { c, a0m, a0p, a1, a2s, a2m, a3, a4, a5s, a5p, a6 };
  BraceletPartition p;
  p.istar = 0;
  p.C = part[c];
  p.minus[0] = part[a0m];
  p.plus[0] = part[a0p];
  p.star[1] = part[a1];
  p.star[2] = part[a2s];
  p.minus[2] = part[a2m];
  p.star[3] = part[a3];
  p.star[4] = part[a4];
  p.star[5] = part[a5s];
  p.plus[5] = part[a5p];
  p.star[6] = part[a6];
  GraphBuilder b(n);
  std::array<std::vector<int>, 7> A;
  for (int i = 0; i < 7; ++i) A[i] = p.part(i);
  for (int i = 0; i < 7; ++i) {
    b.make_clique(A[i]);
    b.make_complete(A[i], A[(i + 1) % 7]);
  }
  b.make_complete(part[a0m], part[a5p]);
  b.make_complete(part[a0p], part[a2m]);
  b.make_clique(part[c]);
  for (int q : {a2s, a3, a4, a5s}) b.make_complete(part[c], part[q]);
  auto perm = random_perm(n, seed);
  GenBracelet out{relabel(b.build(), perm), {}};
  out.p.istar = 0;
  out.p.C = sorted_apply(perm, p.C);
  for (int i = 0; i < 7; ++i) {
    out.p.star[i] = sorted_apply(perm, p.star[i]);
    out.p.plus[i] = sorted_apply(perm, p.plus[i]);
    out.p.minus[i] = sorted_apply(perm, p.minus[i]);
  }
  need(first_violation(verify_emerald(out.g, out.p, out.g.all().to_vector())), "gen_emerald");
  return out;
}

GenCrown gen_crown(int kind, const std::vector<int>& sizes, std::uint64_t seed) {
  if (kind != 3 && kind != 4) throw std::invalid_argument("gen_crown: kind must be 3 or 4");
  const std::size_t want = kind == 3 ? 9 : 10;
  if (sizes.size() != want)
    throw std::invalid_argument("gen_crown: expected " + std::to_string(want) + " part sizes");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("gen_crown: part sizes must be positive");
  int n = 0;
  CrownSplit cs;
  cs.istar = 0;
  for (int i = 0; i < 6; ++i) cs.C[i] = block(n, sizes[i]);
  std::size_t k = 6;
  for (int i = kind == 3 ? 1 : 0; i <= 3; ++i) cs.D[i] = block(n, sizes[k++]);
  GraphBuilder b(n);
  for (int i = 0; i < 6; ++i) {
    b.make_clique(cs.C[i]);
    b.make_clique(cs.D[i]);
    b.make_complete(cs.C[i], cs.C[(i + 1) % 6]);
    for (int d : {-1, 0, 1}) b.make_complete(cs.D[i], cs.C[mod(i + d, 6)]);
  }
  auto perm = random_perm(n, seed);
  GenCrown out{relabel(b.build(), perm), {}};
  out.w.wreath = false;
  out.w.crown.istar = 0;
  for (int i = 0; i < 6; ++i) {
    out.w.crown.C[i] = sorted_apply(perm, cs.C[i]);
    out.w.crown.D[i] = sorted_apply(perm, cs.D[i]);
    out.w.ring.X[i] = out.w.crown.C[i];
    out.w.ring.X[i].insert(out.w.ring.X[i].end(), out.w.crown.D[i].begin(), out.w.crown.D[i].end());
  }
  auto scope = out.g.all().to_vector();
  need(first_violation(verify_crown(out.g, out.w.crown, scope)), "gen_crown");
  need(first_violation(verify_ring(out.g, out.w.ring, scope)), "gen_crown");
  return out;
}

Graph glue(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& clique_map) {
  std::vector<int> k1, k2;
  std::vector<int> to(static_cast<std::size_t>(g2.n()), -1);
  for (auto [a, b] : clique_map) {
    if (a < 0 || a >= g1.n() || b < 0 || b >= g2.n()) throw std::invalid_argument("glue: vertex out of range");
    if (to[b] >= 0 || std::find(k1.begin(), k1.end(), a) != k1.end())
      throw std::invalid_argument("glue: clique map is not injective");
    to[b] = a;
    k1.push_back(a);
    k2.push_back(b);
  }
  if (!g1.is_clique(VertexSet::of(g1.n(), k1)) || !g2.is_clique(VertexSet::of(g2.n(), k2)))
    throw std::invalid_argument("glue: mapped sets must be cliques");
  int n = g1.n();
  for (int v = 0; v < g2.n(); ++v)
    if (to[v] < 0) to[v] = n++;
  GraphBuilder b(n);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    if (!b.adj(to[u], to[v])) b.add_edge(to[u], to[v]);
  return b.build();
}

Graph add_universal_clique(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("add_universal_clique: k must be nonnegative");
  const int n = g.n() + k;
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (int u = g.n(); u < n; ++u)
    for (int v = 0; v < u; ++v) b.add_edge(u, v);
  return b.build();
}

GenRing random_ring(Rng& rng, int max_n) {
  if (max_n < 6) throw std::invalid_argument("random_ring: need room for six vertices");
  for (int attempt = 0;; ++attempt) {
    std::array<int, 6> sizes{1, 1, 1, 1, 1, 1};
    sprinkle(rng, sizes, rng.uniform(0, max_n - 6), {0, 1, 2, 3, 4, 5});
    std::array<Staircase, 6> stairs;
    for (int i = 0; i < 6; ++i)
      stairs[i] = rng.coin(1, 2) ? Staircase::full(sizes[i], sizes[(i + 1) % 6])
                                 : Staircase::random(rng, sizes[i], sizes[(i + 1) % 6]);
    GenRing r = gen_ring6(sizes, stairs, rng.next());
    if (in_class(r.g)) return r;
    if (attempt > 1000) throw std::runtime_error("random_ring: no class member found");
  }
}

GenLantern random_lantern(Rng& rng, int max_n) {
  if (max_n < 8) throw std::invalid_argument("random_lantern: need room for eight vertices");
  int r = rng.uniform(3, std::max(3, std::min(5, (max_n - 2) / 2)));
  int base = 2 + 2 * r;
  std::vector<int> sz(static_cast<std::size_t>(2 + 2 * r), 1);
  int extra = rng.uniform(0, max_n - base);
  for (int k = 0; k < extra; ++k) ++sz[rng.uniform(0, static_cast<int>(sz.size()) - 1)];
  LanternSizes s;
  s.a = sz[0];
  s.d = sz[1];
  for (int i = 0; i < r; ++i) {
    s.b.push_back(sz[2 + 2 * i]);
    s.c.push_back(sz[3 + 2 * i]);
  }
  Staircase st = Staircase::random(rng, s.b[0], s.c[0]);
  return gen_lantern(r, s, st, rng.next());
}

GenBracelet random_bracelet(Rng& rng, int max_n) {
  if (max_n < 7) throw std::invalid_argument("random_bracelet: need room for seven vertices");
  for (int attempt = 0;; ++attempt) {
    BraceletSpec s;
    s.istar = rng.uniform(0, 6);
    const int t = s.istar;
    // Wavy pairs allowed around the pivot: (t-2 -> t), (t -> t+2), (t-1 -> t+1).
    std::array<int, 3> keys{mod(t - 2, 7), t, mod(t - 1, 7)};
    int budget = max_n;
    std::array<int, 21> sizes{};  // star 0..6, plus 7..13, minus 14..20
    for (int i = 0; i < 7; ++i) sizes[i] = 1;
    budget -= 7;
    std::vector<int> allowed{0, 1, 2, 3, 4, 5, 6};
    for (int k : keys) {
      if (budget < 2 || !rng.coin(1, 2)) continue;
      sizes[7 + k] = 1;
      sizes[14 + mod(k + 2, 7)] = 1;
      budget -= 2;
      allowed.push_back(7 + k);
      allowed.push_back(14 + mod(k + 2, 7));
    }
    for (int i = 0; i < 7; ++i)
      if (budget > 0 && rng.coin(1, 4)) {
        // Occasionally drop a star part when the wavy parts keep A_i nonempty.
        if (sizes[7 + i] + sizes[14 + i] > 0) {
          sizes[i] = 0;
          ++budget;
        }
      }
    sprinkle(rng, sizes, rng.uniform(0, std::max(0, budget)), allowed);
    for (int i = 0; i < 7; ++i) {
      s.star[i] = sizes[i];
      s.plus[i] = sizes[7 + i];
      s.minus[i] = sizes[14 + i];
    }
    for (int k : keys)
      if (s.plus[k] > 0) s.stairs[k] = Staircase::random(rng, s.plus[k], s.minus[mod(k + 2, 7)]);
    try {
      return gen_bracelet(s, rng.next());
    } catch (const std::invalid_argument&) {
      if (attempt > 1000) throw;
    }
  }
}

GenBracelet random_emerald(Rng& rng, int max_n) {
  if (max_n < 11) throw std::invalid_argument("random_emerald: need room for eleven vertices");
  std::array<int, 11> sizes;
  sizes.fill(1);
  sprinkle(rng, sizes, rng.uniform(0, max_n - 11), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  return gen_emerald(sizes, rng.next());
}

GenCrown random_crown(Rng& rng, int max_n) {
  int kind = max_n >= 10 && rng.coin(1, 2) ? 4 : 3;
  if (max_n < 9) throw std::invalid_argument("random_crown: need room for nine vertices");
  std::array<int, 10> sizes;
  sizes.fill(1);
  const int parts = kind == 3 ? 9 : 10;
  std::vector<int> allowed(static_cast<std::size_t>(parts));
  std::iota(allowed.begin(), allowed.end(), 0);
  sprinkle(rng, sizes, rng.uniform(0, max_n - parts), allowed);
  return gen_crown(kind, std::vector<int>(sizes.begin(), sizes.begin() + parts), rng.next());
}

namespace {

GenRing random_wreath(Rng& rng, int max_n) {
  for (int attempt = 0;; ++attempt) {
    std::array<int, 6> sizes{1, 1, 1, 1, 1, 1};
    sprinkle(rng, sizes, rng.uniform(0, max_n - 6), {0, 1, 2, 3, 4, 5});
    std::array<Staircase, 6> stairs;
    for (int i = 0; i < 6; ++i)
      stairs[i] = i % 2 == 0 ? Staircase::full(sizes[i], sizes[i + 1])
                             : Staircase::random(rng, sizes[i], sizes[(i + 1) % 6]);
    GenRing r = gen_ring6(sizes, stairs, rng.next());
    if (in_class(r.g)) return r;
    if (attempt > 1000) throw std::runtime_error("random_wreath: no class member found");
  }
}

// Any single atom of at most max_n vertices.
Graph random_atom(Rng& rng, int max_n) {
  std::vector<int> fam;
  if (max_n >= 6) fam.push_back(0);
  if (max_n >= 7) fam.push_back(1);
  if (max_n >= 8) fam.push_back(2);
  if (max_n >= 9) fam.push_back(3);
  if (max_n >= 11) fam.push_back(4);
  if (fam.empty()) return complete_graph(std::max(1, max_n));
  switch (fam[rng.uniform(0, static_cast<int>(fam.size()) - 1)]) {
    case 0: return random_ring(rng, max_n).g;
    case 1: return random_bracelet(rng, max_n).g;
    case 2: return random_lantern(rng, max_n).g;
    case 3: return random_crown(rng, max_n).g;
    default: return random_emerald(rng, max_n).g;
  }
}

std::vector<int> random_clique(Rng& rng, const Graph& g, int size) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<int> c{rng.uniform(0, g.n() - 1)};
    while (static_cast<int>(c.size()) < size) {
      VertexSet common = g.all();
      for (int v : c) common &= g.nbr(v);
      auto opts = common.to_vector();
      if (opts.empty()) break;
      c.push_back(opts[rng.uniform(0, static_cast<int>(opts.size()) - 1)]);
    }
    if (static_cast<int>(c.size()) == size) return c;
  }
  return {rng.uniform(0, g.n() - 1)};
}

// Gluing two atoms along a clique usually creates a long induced path, so the pieces are
// either a pendant clique or two universal joins glued through a universal vertex.
Graph random_glued(Rng& rng, int max_n) {
  if (rng.coin(1, 2)) {
    Graph g1 = random_atom(rng, max_n - 1);
    int size = rng.uniform(1, 2);
    auto c1 = random_clique(rng, g1, size);
    size = static_cast<int>(c1.size());
    int extra = rng.uniform(1, std::max(1, std::min(3, max_n - g1.n())));
    std::vector<std::pair<int, int>> m;
    for (int i = 0; i < size; ++i) m.emplace_back(c1[i], i);
    return glue(g1, complete_graph(size + extra), m);
  }
  int u1 = rng.uniform(1, 2), u2 = rng.uniform(1, 2);
  int n1 = rng.uniform(6, std::max(6, max_n - 5 - u1));
  Graph g1 = add_universal_clique(random_atom(rng, n1), u1);
  Graph g2 = add_universal_clique(random_atom(rng, std::max(6, max_n - g1.n() - u2 + 1)), u2);
  // the glued clique starts with a universal vertex on both sides
  std::vector<std::pair<int, int>> m{{g1.n() - 1, g2.n() - 1}};
  if (rng.coin(1, 2)) {
    VertexSet common = g1.nbr(g1.n() - 1);
    auto opts = common.to_vector();
    int x = opts[rng.uniform(0, static_cast<int>(opts.size()) - 1)];
    int y = rng.uniform(0, g2.n() - 2);
    m.emplace_back(x, y);
  }
  return glue(g1, g2, m);
}

}  // namespace

std::vector<CorpusItem> make_corpus(std::uint64_t seed, int count, int max_n) {
  if (max_n < 12) throw std::invalid_argument("make_corpus: max_n must be at least 12");
  Rng rng(seed);
  std::vector<CorpusItem> out;
  static const char* families[8] = {"ring", "wreath", "crown", "lantern", "bracelet", "emerald", "join", "glued"};
  for (int k = 0; k < count; ++k) {
    std::string fam = families[k % 8];
    Graph g;
    if (fam == "ring") {
      g = random_ring(rng, max_n).g;
    } else if (fam == "wreath") {
      g = random_wreath(rng, max_n).g;
    } else if (fam == "crown") {
      g = random_crown(rng, max_n).g;
    } else if (fam == "lantern") {
      g = random_lantern(rng, max_n).g;
    } else if (fam == "bracelet") {
      g = random_bracelet(rng, max_n).g;
    } else if (fam == "emerald") {
      g = random_emerald(rng, max_n).g;
    } else if (fam == "join") {
      int u = rng.uniform(1, 2);
      g = add_universal_clique(random_atom(rng, max_n - u), u);
      g = relabel(g, random_perm(g.n(), rng.next()));
    } else {
      for (int attempt = 0;; ++attempt) {
        Graph h = random_glued(rng, max_n);
        if (h.n() <= max_n && in_class(h)) {
          g = relabel(h, random_perm(h.n(), rng.next()));
          break;
        }
        if (attempt > 1000) throw std::runtime_error("make_corpus: gluing never stayed in the class");
      }
    }
    out.push_back({fam, g});
  }
  return out;
}

}  // namespace p7c
