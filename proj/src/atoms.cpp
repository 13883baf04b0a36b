#include "p7c/atoms.hpp"

#include "p7c/cutset_tree.hpp"
#include "p7c/types.hpp"

#include <algorithm>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Expands skeleton ids (class indices) to the twin classes, keeping the given order.
std::vector<int> expand(const TwinDecomposition& td, const std::vector<int>& sk) {
  std::vector<int> out;
  for (int c : sk) out.insert(out.end(), td.classes[c].begin(), td.classes[c].end());
  return out;
}

std::vector<int> to_parent(const Graph& sub, std::vector<int> vs) {
  for (int& v : vs) v = sub.origin_of(v);
  return vs;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RingPartition map_ring(const RingPartition& p, const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  RingPartition q;
  for (int i = 0; i < 6; ++i) q.X[i] = f(p.X[i]);
  return q;
}

CrownSplit map_crown(const CrownSplit& c, const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  CrownSplit q;
  q.istar = c.istar;
  for (int i = 0; i < 6; ++i) {
    q.C[i] = f(c.C[i]);
    q.D[i] = f(c.D[i]);
  }
  return q;
}

LanternPartition map_lantern(const LanternPartition& p,
                             const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  LanternPartition q;
  q.r = p.r;
  q.A = f(p.A);
  q.D = f(p.D);
  for (auto& b : p.B) q.B.push_back(f(b));
  for (auto& c : p.C) q.C.push_back(f(c));
  return q;
}

BraceletPartition map_bracelet(const BraceletPartition& p,
                               const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  BraceletPartition q;
  q.istar = p.istar;
  q.C = f(p.C);
  for (int i = 0; i < 7; ++i) {
    q.star[i] = f(p.star[i]);
    q.plus[i] = f(p.plus[i]);
    q.minus[i] = f(p.minus[i]);
  }
  return q;
}

// Orders a part so closed neighbourhoods (within scope) shrink; ties by id.
std::vector<int> nested_sort(const Graph& g, std::vector<int> vs, const VertexSet& scope) {
  std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
    int da = (g.closed_nbr(a) & scope).count(), db = (g.closed_nbr(b) & scope).count();
    if (da != db) return da > db;
    return a < b;
  });
  return vs;
}

std::optional<RingPartition> ring_on_skeleton(const Graph& s) {
  auto hole = find_k_hole(s, 6);
  if (!hole) return std::nullopt;
  std::vector<int> h = hole->vertices;
  VertexSet hs = VertexSet::of(s.n(), h);
  auto attach = [&](int v, const std::vector<int>& cyc) {
    int mask = 0;
    for (int i = 0; i < 6; ++i)
      if (v == cyc[i] || s.adj(v, cyc[i])) mask |= 1 << i;
    return mask;
  };
  auto triple = [](int i) { return (1 << mod(i - 1, 6)) | (1 << i) | (1 << mod(i + 1, 6)); };
  // Push each hole vertex to a dominant member of its group.
  for (int i = 0; i < 6; ++i) {
    int best = h[i];
    for (int v = 0; v < s.n(); ++v) {
      if (v == h[i] || hs.test(v)) continue;
      if (attach(v, h) != triple(i)) continue;
      if (s.degree(v) > s.degree(best) || (s.degree(v) == s.degree(best) && v < best)) best = v;
    }
    if (best != h[i]) {
      hs.reset(h[i]);
      h[i] = best;
      hs.set(best);
    }
  }
  RingPartition p;
  for (int v = 0; v < s.n(); ++v) {
    int m = attach(v, h);
    int part = -1;
    for (int i = 0; i < 6; ++i)
      if (m == triple(i)) part = i;
    if (part < 0) return std::nullopt;
    p.X[part].push_back(v);
  }
  VertexSet all = s.all();
  for (auto& x : p.X) x = nested_sort(s, x, all);
  return p;
}

std::optional<LanternPartition> lantern_on_graph(const Graph& g) {
  if (g.n() < 8) return std::nullopt;
  TwinDecomposition td = twin_decomposition(g);
  const Graph& s = td.skeleton;
  int hub_a = -1, hub_d = -1;
  for (int u = 0; u < s.n() && hub_a < 0; ++u) {
    if (s.degree(u) != 2) continue;
    std::vector<int> nb = s.nbr(u).to_vector();
    for (int k = 0; k < 2; ++k) {
      int w = nb[k], h = nb[1 - k];
      if (s.degree(w) != 2 || s.degree(h) < 3) continue;
      VertexSet rest = s.nbr(w);
      rest.reset(u);
      int other = rest.first();
      if (other < 0 || s.degree(other) < 3 || other == h) continue;
      hub_a = h;
      hub_d = other;
      break;
    }
  }
  if (hub_a < 0) return std::nullopt;
  LanternPartition p;
  p.A = td.classes[hub_a];
  p.D = td.classes[hub_d];
  VertexSet A = VertexSet::of(g.n(), p.A), D = VertexSet::of(g.n(), p.D);
  VertexSet rest = g.all() - A - D;
  VertexSet B = rest & g.nbr(p.A.front()), C = rest & g.nbr(p.D.front());
  if (B.intersects(C) || (B | C) != rest) return std::nullopt;
  auto arms = components(g, rest);
  if (arms.size() < 3) return std::nullopt;
  int wavy = -1;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    VertexSet bi = arms[i] & B, ci = arms[i] & C;
    bool complete = true;
    bi.for_each([&](int b) {
      if (!ci.subset_of(g.nbr(b))) complete = false;
    });
    if (!complete) {
      if (wavy >= 0) return std::nullopt;
      wavy = static_cast<int>(i);
    }
  }
  if (wavy < 0) wavy = 0;
  std::vector<int> order{wavy};
  for (int i = 0; i < static_cast<int>(arms.size()); ++i)
    if (i != wavy) order.push_back(i);
  p.r = static_cast<int>(arms.size());
  for (int i : order) {
    p.B.push_back((arms[i] & B).to_vector());
    p.C.push_back((arms[i] & C).to_vector());
  }
  VertexSet b1 = VertexSet::of(g.n(), p.B[0]), c1 = VertexSet::of(g.n(), p.C[0]);
  auto by_reach = [&](std::vector<int> vs, const VertexSet& other) {
    std::stable_sort(vs.begin(), vs.end(), [&](int x, int y) {
      int dx = (g.nbr(x) & other).count(), dy = (g.nbr(y) & other).count();
      if (dx != dy) return dx > dy;
      return x < y;
    });
    return vs;
  };
  p.B[0] = by_reach(p.B[0], c1);
  p.C[0] = by_reach(p.C[0], b1);
  std::vector<int> everything = g.all().to_vector();
  if (!verify_lantern(g, p, everything).ok) return std::nullopt;
  return p;
}

}  // namespace

std::optional<RingPartition> recognize_ring6(const Graph& g) {
  if (g.n() < 6) return std::nullopt;
  TwinDecomposition td = twin_decomposition(g);
  auto sk = ring_on_skeleton(td.skeleton);
  if (!sk) return std::nullopt;
  RingPartition p = map_ring(*sk, [&](const std::vector<int>& v) { return expand(td, v); });
  if (!verify_ring(g, p, g.all().to_vector()).ok) return std::nullopt;
  return p;
}

std::optional<LanternPartition> recognize_lantern(const Graph& g) { return lantern_on_graph(g); }

WreathOrCrown classify_wreath_or_crown(const Graph& g, const RingPartition& p) {
  auto complete = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b)
        if (!g.adj(u, v)) return false;
    return true;
  };
  std::array<bool, 6> e{};
  for (int i = 0; i < 6; ++i) e[i] = complete(p.X[i], p.X[mod(i + 1, 6)]);
  WreathOrCrown out;
  for (int o = 0; o < 2; ++o) {
    if (e[o] && e[o + 2] && e[o + 4]) {
      out.wreath = true;
      for (int j = 0; j < 6; ++j) out.ring.X[j] = p.X[mod(j + o, 6)];
      return out;
    }
  }
  out.ring = p;
  CrownSplit c;
  for (int i = 0; i < 6; ++i) {
    const auto& X = p.X[i];
    std::vector<int> nb = p.X[mod(i - 1, 6)];
    nb.insert(nb.end(), p.X[mod(i + 1, 6)].begin(), p.X[mod(i + 1, 6)].end());
    std::size_t s = 0;
    while (s < X.size() && complete({X[s]}, nb)) ++s;
    c.C[i].assign(X.begin(), X.begin() + static_cast<long>(s));
    c.D[i].assign(X.begin() + static_cast<long>(s), X.end());
  }
  c.istar = -1;
  for (int i = 0; i < 6 && c.istar < 0; ++i) {
    if (c.D[mod(i - 2, 6)].empty() && c.D[mod(i - 1, 6)].empty() && !c.D[mod(i + 1, 6)].empty() &&
        !c.D[mod(i + 2, 6)].empty() && !c.D[mod(i + 3, 6)].empty())
      c.istar = i;
  }
  std::vector<int> scope = g.all().to_vector();
  Verdict v;
  if (c.istar < 0)
    v.fail("crown: no index fits the D pattern");
  else
    v = verify_crown(g, c, scope);
  if (!v.ok) {
    auto p7 = find_induced_path(g, 7);
    std::string msg = "ring is neither a wreath nor a crown";
    if (!v.violations.empty()) msg += ": " + v.violations.front();
    throw ClassViolation(msg, p7 ? p7->vertices : std::vector<int>{});
  }
  out.crown = c;
  return out;
}

AtomCertificate recognize_atom(const Graph& a) {
  if (a.n() <= kPreconditionCheckLimit) {
    ClassReport rep = class_membership(a);
    if (const PatternWitness* w = rep.violation())
      throw ClassViolation("atom contains an induced " + w->name(), w->vertices);
    if (auto cut = has_clique_cutset(a)) throw ClassViolation("atom has a clique cutset", cut->clique);
  }
  AtomCertificate cert;
  UniversalPeel peel = universal_clique_peel(a);
  cert.U = peel.U.to_vector();
  cert.core = peel.core.to_vector();
  if (cert.core.empty()) {
    cert.kind = AtomKind::Complete;
    return cert;
  }
  Graph K = induced(a, peel.core);
  auto up = [&](const std::vector<int>& v) { return to_parent(K, v); };
  std::vector<std::string> failures;

  TwinDecomposition td = twin_decomposition(K);
  const Graph& S = td.skeleton;
  auto lift = [&](const std::vector<int>& v) { return up(expand(td, v)); };

  if (find_k_hole(S, 7)) {
    // Holes with the largest closed neighbourhood first, lexicographic within a size.
    std::vector<std::pair<int, std::vector<int>>> holes;
    for_each_k_hole(S, 7, [&](const std::vector<int>& h) {
      VertexSet nh(S.n());
      for (int x : h) nh |= S.closed_nbr(x);
      holes.emplace_back(nh.count(), h);
      return true;
    });
    std::stable_sort(holes.begin(), holes.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [sz, h] : holes) {
      BraceletBuild b = build_bracelet_from_hole(S, h);
      if (!b.ok) {
        if (failures.empty())
          failures = b.verdict.violations;
        continue;
      }
      cert.kind = b.emerald ? AtomKind::Emerald : AtomKind::Bracelet;
      BraceletPartition lifted = map_bracelet(b.partition, lift);
      for (int i = 0; i < 7; ++i) lifted.star[i] = sorted(lifted.star[i]);
      lifted.C = sorted(lifted.C);
      cert.bracelet = lifted;
      break;
    }
    if (cert.kind == AtomKind::Complete) {
      std::string msg = "core with a 7-hole is neither a bracelet nor an emerald";
      if (!failures.empty()) msg += ": " + failures.front();
      throw ClassViolation(msg);
    }
  } else if (find_theta33(S)) {
    auto lp = recognize_lantern(K);
    if (!lp) throw ClassViolation("core contains a theta but is not a lantern");
    cert.kind = AtomKind::Lantern;
    cert.lantern = map_lantern(*lp, up);
  } else {
    auto rp = recognize_ring6(K);
    if (!rp) throw ClassViolation("core fits no atom class");
    WreathOrCrown wc = classify_wreath_or_crown(K, *rp);
    cert.ring = map_ring(wc.ring, up);
    if (wc.wreath) {
      cert.kind = AtomKind::Wreath;
    } else {
      cert.kind = AtomKind::Crown;
      cert.crown = map_crown(wc.crown, up);
    }
  }
  Verdict v = verify_certificate(a, cert);
  if (!v.ok) {
    std::string msg = kind_name(cert.kind) + " certificate failed verification";
    for (const auto& s : v.violations) msg += "; " + s;
    throw ClassViolation(msg);
  }
  return cert;
}

}  // namespace p7c
