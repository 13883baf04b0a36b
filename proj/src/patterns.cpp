#include "p7c/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace p7c {

std::string PatternWitness::name() const {
  switch (kind) {
    case PatternKind::Path: return "P" + std::to_string(length);
    case PatternKind::Hole: return "C" + std::to_string(length);
    case PatternKind::Theta33: return "Theta33";
  }
  return "?";
}

namespace {

struct PathSearch {
  const Graph& g;
  int k;
  std::vector<int> path;
  VertexSet blocked;  // closed neighbourhoods of all path vertices but the last

  bool extend() {
    if (static_cast<int>(path.size()) == k) return path.size() < 2 || path.back() > path.front();
    VertexSet cand = g.nbr(path.back()) - blocked;
    for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
      VertexSet saved = blocked;
      blocked |= g.closed_nbr(path.back());
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      blocked = saved;
    }
    return false;
  }
};

}  // namespace

std::optional<PatternWitness> find_induced_path(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("path length must be positive");
  if (k > g.n()) return std::nullopt;
  for (int s = 0; s < g.n(); ++s) {
    PathSearch ps{g, k, {s}, VertexSet(g.n())};
    if (ps.extend()) return PatternWitness{PatternKind::Path, k, ps.path};
  }
  return std::nullopt;
}

void for_each_k_hole(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& f) {
  if (k < 4) throw std::invalid_argument("holes have length at least 4");
  if (k > g.n()) return;
  const int n = g.n();
  std::vector<int> path;
  bool stop = false;
  for (int s = 0; s < n && !stop; ++s) {
    VertexSet low(n);
    for (int v = 0; v <= s; ++v) low.set(v);
    VertexSet ns = g.closed_nbr(s);
    // blocked: vertices <= s plus closed neighbourhoods of interior path vertices except the last
    auto rec = [&](auto&& self, const VertexSet& blocked) -> void {
      int len = static_cast<int>(path.size());
      int last = path.back();
      if (len == k - 1) {
        VertexSet cand = (g.nbr(last) & g.nbr(s)) - blocked;
        for (int v = cand.next(path[1] + 1); v >= 0 && !stop; v = cand.next(v + 1)) {
          path.push_back(v);
          if (!f(path)) stop = true;
          path.pop_back();
        }
        return;
      }
      VertexSet cand = g.nbr(last) - blocked - ns;
      VertexSet nb = blocked | g.closed_nbr(last);
      for (int v = cand.first(); v >= 0 && !stop; v = cand.next(v + 1)) {
        path.push_back(v);
        self(self, nb);
        path.pop_back();
      }
    };
    VertexSet first = g.nbr(s) - low;
    for (int v1 = first.first(); v1 >= 0 && !stop; v1 = first.next(v1 + 1)) {
      path = {s, v1};
      rec(rec, low);
    }
  }
}

std::optional<PatternWitness> find_k_hole(const Graph& g, int k) {
  std::optional<PatternWitness> out;
  for_each_k_hole(g, k, [&](const std::vector<int>& h) {
    out = PatternWitness{PatternKind::Hole, k, h};
    return false;
  });
  return out;
}

std::optional<PatternWitness> find_theta33(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    for (int d = a + 1; d < n; ++d) {
      if (g.adj(a, d)) continue;
      VertexSet B = g.nbr(a) - g.closed_nbr(d);
      VertexSet C = g.nbr(d) - g.closed_nbr(a);
      if (B.count() < 3 || C.count() < 3) continue;
      std::vector<int> bs, cs;
      auto rec = [&](auto&& self, int from_b) -> bool {
        if (bs.size() == 3) return true;
        for (int b = B.next(from_b); b >= 0; b = B.next(b + 1)) {
          bool ok = true;
          for (std::size_t i = 0; i < bs.size() && ok; ++i)
            if (g.adj(b, bs[i]) || g.adj(b, cs[i])) ok = false;
          if (!ok) continue;
          VertexSet cc = g.nbr(b) & C;
          for (int c = cc.first(); c >= 0; c = cc.next(c + 1)) {
            bool okc = true;
            for (std::size_t i = 0; i < bs.size() && okc; ++i)
              if (g.adj(c, bs[i]) || g.adj(c, cs[i])) okc = false;
            if (!okc) continue;
            bs.push_back(b);
            cs.push_back(c);
            if (self(self, b + 1)) return true;
            bs.pop_back();
            cs.pop_back();
          }
        }
        return false;
      };
      if (rec(rec, 0))
        return PatternWitness{PatternKind::Theta33, 8, {a, bs[0], bs[1], bs[2], cs[0], cs[1], cs[2], d}};
    }
  }
  return std::nullopt;
}

const PatternWitness* ClassReport::violation() const {
  if (p7) return &*p7;
  if (c4) return &*c4;
  if (c5) return &*c5;
  return nullptr;
}

ClassReport class_membership(const Graph& g) {
  // One sweep over induced paths of up to seven vertices; a step that closes back onto the
  // start vertex is a hole instead of a longer path.
  ClassReport r;
  const int n = g.n();
  std::vector<int> path;
  auto done = [&]() { return r.p7 && r.c4 && r.c5 && r.c7; };
  auto rec = [&](auto&& self, const VertexSet& blocked) -> void {
    int len = static_cast<int>(path.size());
    int s = path.front(), last = path.back();
    VertexSet cand = g.nbr(last) - blocked;
    if (len == 1) cand = g.nbr(s);
    for (int v = cand.first(); v >= 0 && !done(); v = cand.next(v + 1)) {
      if (len >= 2 && g.adj(v, s)) {
        int hl = len + 1;
        std::optional<PatternWitness>* slot = hl == 4 ? &r.c4 : hl == 5 ? &r.c5 : hl == 7 ? &r.c7 : nullptr;
        if (len >= 3 && slot && !*slot && v > path[1] && v > s &&
            std::all_of(path.begin(), path.end(), [s](int u) { return u >= s; })) {
          path.push_back(v);
          *slot = PatternWitness{PatternKind::Hole, hl, path};
          path.pop_back();
        }
        continue;
      }
      if (len + 1 == 7) {
        if (!r.p7 && v > s) {
          path.push_back(v);
          r.p7 = PatternWitness{PatternKind::Path, 7, path};
          path.pop_back();
        }
        continue;
      }
      VertexSet nb = blocked;
      if (len >= 2) nb |= g.closed_nbr(last);
      nb.set(v);
      path.push_back(v);
      self(self, nb);
      path.pop_back();
    }
  };
  for (int s = 0; s < n && !done(); ++s) {
    path = {s};
    VertexSet blocked(n);
    blocked.set(s);
    rec(rec, blocked);
  }
  r.theta33 = find_theta33(g);
  return r;
}

bool verify_witness(const Graph& g, const PatternWitness& w) {
  const auto& vs = w.vertices;
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : vs)
    if (v < 0 || v >= g.n()) return false;
  const int m = static_cast<int>(vs.size());
  auto expect = [&](auto&& edge) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (g.adj(vs[i], vs[j]) != edge(i, j)) return false;
    return true;
  };
  switch (w.kind) {
    case PatternKind::Path:
      return m == w.length && expect([](int i, int j) { return j == i + 1; });
    case PatternKind::Hole:
      return m == w.length && m >= 4 &&
             expect([m](int i, int j) { return j == i + 1 || (i == 0 && j == m - 1); });
    case PatternKind::Theta33:
      // order a, b1, b2, b3, c1, c2, c3, d
      return m == 8 && expect([](int i, int j) {
               if (i == 0) return j >= 1 && j <= 3;
               if (j == 7) return i >= 4 && i <= 6;
               return i >= 1 && i <= 3 && j == i + 3;
             });
  }
  return false;
}

std::vector<int> canonical_cycle(std::vector<int> cyc) {
  if (cyc.empty()) return cyc;
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

}  // namespace p7c
