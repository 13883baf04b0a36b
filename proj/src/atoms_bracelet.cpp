#include "p7c/atoms.hpp"

#include <algorithm>

namespace p7c {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int bits(std::initializer_list<int> idx) {
  int m = 0;
  for (int i : idx) m |= 1 << mod(i, 7);
  return m;
}

bool complete_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool ok = true;
  a.for_each([&](int u) {
    if (ok && !(b - g.closed_nbr(u)).empty()) ok = false;
  });
  return ok;
}

}  // namespace

BraceletBuild build_bracelet_from_hole(const Graph& g, const std::vector<int>& hole) {
  BraceletBuild out;
  const int n = g.n();
  if (hole.size() != 7) {
    out.verdict.fail("hole: expected 7 vertices");
    return out;
  }
  std::array<VertexSet, 7> A;
  for (int i = 0; i < 7; ++i) {
    A[i] = VertexSet(n);
    A[i].set(hole[i]);
  }
  VertexSet on_hole = VertexSet::of(n, hole);
  std::vector<std::pair<int, int>> cand;  // (vertex, l)
  for (int v = 0; v < n; ++v) {
    if (on_hole.test(v)) continue;
    int mask = 0;
    for (int i = 0; i < 7; ++i)
      if (g.adj(v, hole[i])) mask |= 1 << i;
    if (mask == 0x7F) {
      out.verdict.fail("attachment: vertex " + std::to_string(v) + " is complete to the hole");
      return out;
    }
    if (mask == 0) {
      out.verdict.fail("attachment: vertex " + std::to_string(v) + " misses the hole");
      return out;
    }
    int part = -1, ell = -1;
    for (int i = 0; i < 7; ++i) {
      if (mask == bits({i - 1, i, i + 1})) part = i;
      if (mask == bits({i + 2, i + 3, i - 3, i - 2})) ell = i;
    }
    if (part >= 0)
      A[part].set(v);
    else if (ell >= 0)
      cand.emplace_back(v, ell);
    else {
      out.verdict.fail("attachment: vertex " + std::to_string(v) + " has an unexpected trace on the hole");
      return out;
    }
  }
  auto At = [&](int i) -> VertexSet& { return A[mod(i, 7)]; };

  // Candidates that really belong to A_{l+3} or A_{l-3}: shift the parts they miss.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      auto [c, l] = cand[k];
      VertexSet miss_hi = At(l + 2) - g.nbr(c);
      VertexSet miss_lo = At(l - 2) - g.nbr(c);
      if (complete_sets(g, At(l), miss_hi)) {
        At(l + 1) |= miss_hi;
        At(l + 2) -= miss_hi;
        At(l + 3).set(c);
      } else if (complete_sets(g, At(l), miss_lo)) {
        At(l - 1) |= miss_lo;
        At(l - 2) -= miss_lo;
        At(l - 3).set(c);
      } else {
        continue;
      }
      cand.erase(cand.begin() + static_cast<long>(k));
      changed = true;
      break;
    }
  }

  BraceletPartition& p = out.partition;
  int ell = -1;
  for (auto [c, l] : cand) {
    if (ell >= 0 && l != ell) {
      out.verdict.fail("attachment: outside vertices demand two different offsets");
      return out;
    }
    ell = l;
    p.C.push_back(c);
  }
  out.emerald = !p.C.empty();

  for (int i = 0; i < 7; ++i) {
    A[i].for_each([&](int v) {
      bool lo = g.nbr(v).intersects(At(i - 2)), hi = g.nbr(v).intersects(At(i + 2));
      if (lo && hi) return out.verdict.fail("II: vertex " + std::to_string(v) + " sees both A_{i-2} and A_{i+2}");
      if (hi)
        p.plus[i].push_back(v);
      else if (lo)
        p.minus[i].push_back(v);
      else
        p.star[i].push_back(v);
    });
    p.plus[i] = dominance_order(g, p.plus[i]);
    p.minus[i] = dominance_order(g, p.minus[i]);
  }
  if (!out.verdict.ok) return out;

  std::vector<int> scope = g.all().to_vector();
  if (out.emerald) {
    p.istar = ell;
    out.verdict = verify_emerald(g, p, scope);
    out.ok = out.verdict.ok;
    return out;
  }
  int forced = -1;
  for (int i = 0; i < 7; ++i)
    if (!p.plus[i].empty() && !p.minus[i].empty()) forced = i;
  std::vector<int> tries;
  if (forced >= 0)
    tries.push_back(forced);
  else
    for (int i = 0; i < 7; ++i) tries.push_back(i);
  for (int i : tries) {
    p.istar = i;
    out.verdict = verify_bracelet(g, p, scope);
    if (out.verdict.ok) break;
  }
  out.ok = out.verdict.ok;
  return out;
}

}  // namespace p7c
