#include "p7c/atoms.hpp"

#include <algorithm>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool complete_to(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (u != v && !g.adj(u, v)) return false;
  return true;
}

bool anticomplete_to(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (g.adj(u, v)) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& a) { return complete_to(g, a, a); }

bool has_nbr_in(const Graph& g, int v, const std::vector<int>& b) {
  for (int u : b)
    if (g.adj(v, u)) return true;
  return false;
}

std::vector<int> join(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

// parts must partition scope exactly
void check_partition(const Graph& g, const std::vector<const std::vector<int>*>& parts,
                     const std::vector<int>& scope, Verdict& v, const std::string& tag) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
  for (auto* p : parts)
    for (int x : *p) {
      if (x < 0 || x >= g.n()) {
        v.fail(tag + ".partition: vertex out of range");
        return;
      }
      ++seen[x];
    }
  std::vector<char> in_scope(static_cast<std::size_t>(g.n()), 0);
  for (int x : scope) in_scope[x] = 1;
  for (int x = 0; x < g.n(); ++x) {
    if (in_scope[x] && seen[x] != 1) {
      v.fail(tag + ".partition: vertex " + std::to_string(x) + " covered " + std::to_string(seen[x]) + " times");
      return;
    }
    if (!in_scope[x] && seen[x]) {
      v.fail(tag + ".partition: vertex " + std::to_string(x) + " outside scope");
      return;
    }
  }
}

VertexSet scope_set(const Graph& g, const std::vector<int>& scope) { return VertexSet::of(g.n(), scope); }

// N[u] within scope is contained in N[w] within scope
bool nested(const Graph& g, const VertexSet& sc, int u, int w) {
  return (g.closed_nbr(u) & sc).subset_of(g.closed_nbr(w) & sc);
}

bool nested_order(const Graph& g, const VertexSet& sc, const std::vector<int>& order) {
  for (std::size_t j = 1; j < order.size(); ++j)
    if (!nested(g, sc, order[j], order[j - 1])) return false;
  return true;
}

}  // namespace

std::vector<int> BraceletPartition::part(int i) const {
  i = mod(i, 7);
  return join({&star[i], &plus[i], &minus[i]});
}

std::string kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Complete: return "complete";
    case AtomKind::Ring6: return "ring6";
    case AtomKind::Wreath: return "wreath";
    case AtomKind::Crown: return "crown";
    case AtomKind::Lantern: return "lantern";
    case AtomKind::Bracelet: return "bracelet";
    case AtomKind::Emerald: return "emerald";
  }
  return "?";
}

std::vector<int> dominance_order(const Graph& g, std::vector<int> vs) {
  std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  return vs;
}

Verdict verify_ring(const Graph& g, const RingPartition& p, const std::vector<int>& scope) {
  Verdict v;
  std::vector<const std::vector<int>*> parts;
  for (auto& x : p.X) parts.push_back(&x);
  check_partition(g, parts, scope, v, "ring");
  if (!v.ok) return v;
  VertexSet sc = scope_set(g, scope);
  for (int i = 0; i < 6; ++i) {
    const auto& X = p.X[i];
    std::string t = "ring.X" + std::to_string(i);
    if (X.empty()) {
      v.fail(t + ": empty");
      continue;
    }
    auto window = join({&p.X[mod(i - 1, 6)], &X, &p.X[mod(i + 1, 6)]});
    if ((g.closed_nbr(X.front()) & sc) != VertexSet::of(g.n(), window))
      v.fail(t + ": first vertex does not see exactly X_{i-1}, X_i, X_{i+1}");
    if (!nested_order(g, sc, X)) v.fail(t + ": closed neighbourhoods not nested in the given order");
    if (!VertexSet::of(g.n(), X).subset_of(g.closed_nbr(X.back())))
      v.fail(t + ": last vertex does not see all of X_i");
  }
  return v;
}

Verdict verify_wreath(const Graph& g, const RingPartition& p, const std::vector<int>& scope) {
  Verdict v = verify_ring(g, p, scope);
  for (int i = 0; i < 6; i += 2)
    if (!complete_to(g, p.X[i], p.X[i + 1]))
      v.fail("wreath: X" + std::to_string(i) + " not complete to X" + std::to_string(i + 1));
  return v;
}

Verdict verify_crown(const Graph& g, const CrownSplit& c, const std::vector<int>& scope) {
  Verdict v;
  std::vector<const std::vector<int>*> parts;
  for (int i = 0; i < 6; ++i) {
    parts.push_back(&c.C[i]);
    parts.push_back(&c.D[i]);
  }
  check_partition(g, parts, scope, v, "crown");
  if (!v.ok) return v;
  const int s = c.istar;
  for (int i = 0; i < 6; ++i) {
    std::string t = std::to_string(i);
    if (c.C[i].empty()) v.fail("crown.C" + t + ": empty");
    if (!is_clique(g, c.C[i])) v.fail("crown.C" + t + ": not a clique");
    if (!is_clique(g, c.D[i])) v.fail("crown.D" + t + ": not a clique");
  }
  if (!c.D[mod(s - 2, 6)].empty() || !c.D[mod(s - 1, 6)].empty()) v.fail("crown.D: D_{i*-2} or D_{i*-1} nonempty");
  for (int d = 1; d <= 3; ++d)
    if (c.D[mod(s + d, 6)].empty()) v.fail("crown.D: D_{i*+" + std::to_string(d) + "} empty");
  for (int i = 0; i < 6; ++i) {
    std::string t = std::to_string(i);
    auto near = join({&c.C[mod(i - 1, 6)], &c.C[mod(i + 1, 6)]});
    auto far = join({&c.C[mod(i + 2, 6)], &c.C[mod(i + 3, 6)], &c.C[mod(i + 4, 6)]});
    if (!complete_to(g, c.C[i], near)) v.fail("crown.C" + t + ": not complete to C_{i-1}, C_{i+1}");
    if (!anticomplete_to(g, c.C[i], far)) v.fail("crown.C" + t + ": not anticomplete to C_{i+2..i+4}");
    auto dn = join({&c.C[mod(i - 1, 6)], &c.C[i], &c.C[mod(i + 1, 6)]});
    if (!complete_to(g, c.D[i], dn)) v.fail("crown.D" + t + ": not complete to C_{i-1}, C_i, C_{i+1}");
    if (!anticomplete_to(g, c.D[i], far)) v.fail("crown.D" + t + ": not anticomplete to C_{i+2..i+4}");
    for (int j = i + 1; j < 6; ++j)
      if (!anticomplete_to(g, c.D[i], c.D[j])) v.fail("crown.D" + t + ": not anticomplete to D" + std::to_string(j));
  }
  return v;
}

Verdict verify_lantern(const Graph& g, const LanternPartition& p, const std::vector<int>& scope) {
  Verdict v;
  if (p.r < 3 || static_cast<int>(p.B.size()) != p.r || static_cast<int>(p.C.size()) != p.r) {
    v.fail("lantern: need r >= 3 arms with matching B and C lists");
    return v;
  }
  std::vector<const std::vector<int>*> parts{&p.A, &p.D};
  for (int i = 0; i < p.r; ++i) {
    parts.push_back(&p.B[i]);
    parts.push_back(&p.C[i]);
  }
  check_partition(g, parts, scope, v, "lantern");
  if (!v.ok) return v;
  for (auto* q : parts)
    if (q->empty() || !is_clique(g, *q)) v.fail("lantern: some part is empty or not a clique");
  if (!v.ok) return v;
  if (!anticomplete_to(g, p.A, p.D)) v.fail("lantern: A not anticomplete to D");
  for (int i = 0; i < p.r; ++i) {
    std::string t = std::to_string(i + 1);
    if (!complete_to(g, p.A, p.B[i])) v.fail("lantern: A not complete to B" + t);
    if (!anticomplete_to(g, p.A, p.C[i])) v.fail("lantern: A not anticomplete to C" + t);
    if (!complete_to(g, p.D, p.C[i])) v.fail("lantern: D not complete to C" + t);
    if (!anticomplete_to(g, p.D, p.B[i])) v.fail("lantern: D not anticomplete to B" + t);
    if (i > 0 && !complete_to(g, p.B[i], p.C[i])) v.fail("lantern: B" + t + " not complete to C" + t);
    for (int j = i + 1; j < p.r; ++j) {
      auto ai = join({&p.B[i], &p.C[i]}), aj = join({&p.B[j], &p.C[j]});
      if (!anticomplete_to(g, ai, aj)) v.fail("lantern: arms " + t + " and " + std::to_string(j + 1) + " touch");
    }
  }
  VertexSet c1 = VertexSet::of(g.n(), p.C[0]), b1 = VertexSet::of(g.n(), p.B[0]);
  for (std::size_t j = 0; j < p.B[0].size(); ++j) {
    VertexSet cur = g.nbr(p.B[0][j]) & c1;
    if (j == 0 && cur != c1) v.fail("lantern: first vertex of B1 not complete to C1");
    if (j > 0 && !cur.subset_of(g.nbr(p.B[0][j - 1]) & c1)) v.fail("lantern: B1 order not nested");
  }
  for (std::size_t j = 0; j < p.C[0].size(); ++j) {
    VertexSet cur = g.nbr(p.C[0][j]) & b1;
    if (j == 0 && cur != b1) v.fail("lantern: first vertex of C1 not complete to B1");
    if (j > 0 && !cur.subset_of(g.nbr(p.C[0][j - 1]) & b1)) v.fail("lantern: C1 order not nested");
  }
  return v;
}

Verdict verify_bracelet(const Graph& g, const BraceletPartition& p, const std::vector<int>& scope) {
  Verdict v;
  if (!p.C.empty()) v.fail("bracelet: C must be empty");
  std::vector<const std::vector<int>*> parts;
  for (int i = 0; i < 7; ++i) {
    parts.push_back(&p.star[i]);
    parts.push_back(&p.plus[i]);
    parts.push_back(&p.minus[i]);
  }
  check_partition(g, parts, scope, v, "bracelet");
  if (!v.ok) return v;
  VertexSet sc = scope_set(g, scope);
  std::array<std::vector<int>, 7> A;
  for (int i = 0; i < 7; ++i) A[i] = p.part(i);
  auto Ai = [&](int i) -> const std::vector<int>& { return A[mod(i, 7)]; };
  for (int i = 0; i < 7; ++i) {
    std::string t = "bracelet.A" + std::to_string(i);
    if (A[i].empty() || !is_clique(g, A[i])) v.fail("I: " + t + " empty or not a clique");
    if (!complete_to(g, A[i], join({&Ai(i - 1), &Ai(i + 1)}))) v.fail("I: " + t + " not complete to A_{i-1}, A_{i+1}");
    if (!anticomplete_to(g, A[i], join({&Ai(i - 3), &Ai(i + 3)}))) v.fail("I: " + t + " not anticomplete to A_{i-3}, A_{i+3}");
    if (!anticomplete_to(g, p.star[i], join({&Ai(i - 2), &Ai(i + 2)}))) v.fail("II.a: " + t + "*");
    if (!anticomplete_to(g, p.plus[i], Ai(i - 2))) v.fail("II.b: " + t + "+ sees A_{i-2}");
    for (int x : p.plus[i])
      if (!has_nbr_in(g, x, Ai(i + 2))) v.fail("II.b: " + t + "+ vertex without neighbour in A_{i+2}");
    if (!anticomplete_to(g, p.minus[i], Ai(i + 2))) v.fail("II.c: " + t + "- sees A_{i+2}");
    for (int x : p.minus[i])
      if (!has_nbr_in(g, x, Ai(i - 2))) v.fail("II.c: " + t + "- vertex without neighbour in A_{i-2}");
    if (!nested_order(g, sc, p.plus[i])) v.fail("II.d: " + t + "+ order not nested");
    if (!nested_order(g, sc, p.minus[i])) v.fail("II.e: " + t + "- order not nested");
    bool witness = false;
    for (int x : A[i]) {
      bool miss_lo = false, miss_hi = false;
      for (int y : Ai(i - 2)) miss_lo |= !g.adj(x, y);
      for (int y : Ai(i + 2)) miss_hi |= !g.adj(x, y);
      if (miss_lo && miss_hi) witness = true;
    }
    if (!witness) v.fail("II.f: " + t + " has no vertex missing both A_{i-2} and A_{i+2}");
  }
  auto P = [&](int i) -> const std::vector<int>& { return p.plus[mod(i, 7)]; };
  auto M = [&](int i) -> const std::vector<int>& { return p.minus[mod(i, 7)]; };
  const int s = p.istar;
  if (!P(s - 3).empty() || !M(s - 3).empty() || !P(s + 3).empty() || !M(s + 3).empty())
    v.fail("III: A_{i*-3} or A_{i*+3} has a wavy part");
  if (!M(s - 2).empty() || !P(s + 2).empty()) v.fail("IV: A_{i*-2}- or A_{i*+2}+ nonempty");
  if (!M(s - 1).empty() || !P(s + 1).empty()) v.fail("V: A_{i*-1}- or A_{i*+1}+ nonempty");
  for (int i = 0; i < 7; ++i) {
    std::string t = std::to_string(i);
    if (P(i - 1).empty() != M(i + 1).empty()) v.fail("exclusion: A_{i-1}+ and A_{i+1}- disagree at i=" + t);
    if (!P(i).empty() && (!P(i + 3).empty() || !P(i - 3).empty() || !M(i - 2).empty() || !M(i - 1).empty()))
      v.fail("exclusion: A_" + t + "+ nonempty with a forbidden companion");
    if (!M(i).empty() && (!P(i + 1).empty() || !P(i + 2).empty() || !M(i + 3).empty() || !M(i - 3).empty()))
      v.fail("exclusion: A_" + t + "- nonempty with a forbidden companion");
  }
  return v;
}

Verdict verify_emerald(const Graph& g, const BraceletPartition& p, const std::vector<int>& scope) {
  Verdict v;
  std::vector<const std::vector<int>*> parts{&p.C};
  for (int i = 0; i < 7; ++i) {
    parts.push_back(&p.star[i]);
    parts.push_back(&p.plus[i]);
    parts.push_back(&p.minus[i]);
  }
  check_partition(g, parts, scope, v, "emerald");
  if (!v.ok) return v;
  std::array<std::vector<int>, 7> A;
  for (int i = 0; i < 7; ++i) A[i] = p.part(i);
  auto Ai = [&](int i) -> const std::vector<int>& { return A[mod(i, 7)]; };
  auto S = [&](int i) -> const std::vector<int>& { return p.star[mod(i, 7)]; };
  auto P = [&](int i) -> const std::vector<int>& { return p.plus[mod(i, 7)]; };
  auto M = [&](int i) -> const std::vector<int>& { return p.minus[mod(i, 7)]; };
  const int s = p.istar;
  if (p.C.empty() || !is_clique(g, p.C)) v.fail("emerald: C empty or not a clique");
  for (int i = 0; i < 7; ++i) {
    std::string t = "emerald.A" + std::to_string(i);
    if (A[i].empty() || !is_clique(g, A[i])) v.fail(t + ": empty or not a clique");
    if (!complete_to(g, A[i], join({&Ai(i - 1), &Ai(i + 1)}))) v.fail(t + ": not complete to A_{i-1}, A_{i+1}");
    if (!anticomplete_to(g, A[i], join({&Ai(i - 3), &Ai(i + 3)}))) v.fail(t + ": not anticomplete to A_{i-3}, A_{i+3}");
  }
  for (int d : {-3, -1, 1, 3}) {
    int i = s + d;
    std::string t = "emerald.A_{i*" + std::string(d > 0 ? "+" : "") + std::to_string(d) + "}";
    if (!anticomplete_to(g, Ai(i), join({&Ai(i - 2), &Ai(i + 2)}))) v.fail(t + ": sees a part at distance two");
    if (!P(i).empty() || !M(i).empty()) v.fail(t + ": has wavy parts");
  }
  if (M(s).empty() || P(s).empty() || S(s + 2).empty() || M(s + 2).empty() || S(s - 2).empty() || P(s - 2).empty())
    v.fail("emerald: one of the six named subcliques is empty");
  if (!S(s).empty() || !P(s + 2).empty() || !M(s - 2).empty()) v.fail("emerald: unexpected subclique around i*");
  if (!complete_to(g, M(s), P(s - 2))) v.fail("emerald: A_{i*}- not complete to A_{i*-2}+");
  if (!anticomplete_to(g, M(s), join({&S(s - 2), &Ai(s + 2)}))) v.fail("emerald: A_{i*}- touches A_{i*-2}* or A_{i*+2}");
  if (!complete_to(g, P(s), M(s + 2))) v.fail("emerald: A_{i*}+ not complete to A_{i*+2}-");
  if (!anticomplete_to(g, P(s), join({&S(s + 2), &Ai(s - 2)}))) v.fail("emerald: A_{i*}+ touches A_{i*+2}* or A_{i*-2}");
  if (!complete_to(g, p.C, join({&S(s + 2), &Ai(s + 3), &Ai(s - 3), &S(s - 2)})))
    v.fail("emerald: C not complete to its four attachment parts");
  if (!anticomplete_to(g, p.C, join({&P(s - 2), &Ai(s - 1), &Ai(s), &Ai(s + 1), &M(s + 2)})))
    v.fail("emerald: C touches a part it must avoid");
  return v;
}

Verdict verify_certificate(const Graph& g, const AtomCertificate& cert) {
  Verdict v;
  std::vector<int> all = cert.U;
  all.insert(all.end(), cert.core.begin(), cert.core.end());
  std::vector<const std::vector<int>*> parts{&cert.U, &cert.core};
  std::vector<int> everything(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) everything[i] = i;
  check_partition(g, parts, everything, v, "atom");
  if (!v.ok) return v;
  for (int u : cert.U)
    if (g.degree(u) != g.n() - 1) v.fail("atom: U vertex " + std::to_string(u) + " is not universal");
  Verdict k;
  switch (cert.kind) {
    case AtomKind::Complete:
      if (!cert.core.empty()) k.fail("complete: core must be empty");
      break;
    case AtomKind::Ring6: k = verify_ring(g, cert.ring, cert.core); break;
    case AtomKind::Wreath: k = verify_wreath(g, cert.ring, cert.core); break;
    case AtomKind::Crown: {
      k = verify_crown(g, cert.crown, cert.core);
      Verdict r = verify_ring(g, cert.ring, cert.core);
      for (auto& s : r.violations) k.fail(s);
      break;
    }
    case AtomKind::Lantern: k = verify_lantern(g, cert.lantern, cert.core); break;
    case AtomKind::Bracelet: k = verify_bracelet(g, cert.bracelet, cert.core); break;
    case AtomKind::Emerald: k = verify_emerald(g, cert.bracelet, cert.core); break;
  }
  for (auto& s : k.violations) v.fail(s);
  return v;
}

}  // namespace p7c
