#include "p7c/cutset_tree.hpp"

#include <algorithm>
#include <sstream>

namespace p7c {

namespace {

struct Split {
  VertexSet atom;       // C plus S
  VertexSet separator;  // S
};

// MCS-M: returns the elimination order (first eliminated first), the higher-numbered
// fill neighbourhoods madj, and the generator flags of minimal separators.
struct McsM {
  std::vector<int> elim;
  std::vector<VertexSet> madj;
  std::vector<char> generator;
};

McsM mcs_m(const Graph& g) {
  const int n = g.n();
  McsM r;
  r.madj.assign(static_cast<std::size_t>(n), VertexSet(n));
  r.generator.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  VertexSet unnumbered = g.all();
  std::vector<int> picked;
  int prev = -1;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    unnumbered.for_each([&](int u) {
      if (v < 0 || label[u] > label[v]) v = u;
    });
    if (label[v] <= prev) r.generator[v] = 1;
    prev = label[v];
    unnumbered.reset(v);
    picked.push_back(v);
    // reach[u]: least possible maximum label over intermediate vertices of a v-u path
    // through unnumbered vertices; direct neighbours get -1.
    std::vector<int> reach(static_cast<std::size_t>(n), n + 1);
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(n + 2));
    (g.nbr(v) & unnumbered).for_each([&](int u) {
      reach[u] = -1;
      bucket[0].push_back(u);
    });
    // process in increasing bottleneck order; bucket index = bottleneck + 1
    for (int b = 0; b <= n; ++b) {
      for (std::size_t idx = 0; idx < bucket[b].size(); ++idx) {
        int u = bucket[b][idx];
        if (reach[u] + 1 != b) continue;
        int through = std::max(reach[u], label[u]);
        (g.nbr(u) & unnumbered).for_each([&](int x) {
          if (x == v) return;
          if (through < reach[x]) {
            reach[x] = through;
            bucket[through + 1].push_back(x);
          }
        });
      }
    }
    std::vector<int> bumped;
    unnumbered.for_each([&](int u) {
      if (reach[u] < label[u]) bumped.push_back(u);
    });
    for (int u : bumped) {
      ++label[u];
      r.madj[u].set(v);
    }
  }
  r.elim.assign(picked.rbegin(), picked.rend());
  return r;
}

// Atoms of g in extraction order with the separator used at each step; the last atom has
// an empty separator slot.
std::vector<Split> tarjan_atoms(const Graph& g, bool first_only) {
  std::vector<Split> out;
  const int n = g.n();
  if (n == 0) return out;
  McsM m = mcs_m(g);
  VertexSet rest = g.all();
  for (int x : m.elim) {
    if (!rest.test(x) || !m.generator[x]) continue;
    const VertexSet& S = m.madj[x];
    if (!S.subset_of(rest) || !g.is_clique(S)) continue;
    VertexSet C(n);
    for (const auto& comp : components(g, rest - S))
      if (comp.test(x)) C = comp;
    VertexSet atom = C | S;
    if (atom == rest) continue;
    out.push_back({atom, S});
    rest -= C;
    if (first_only) break;
  }
  out.push_back({rest, VertexSet(n)});
  return out;
}

VertexSet lift(const TwinDecomposition& td, const VertexSet& s, int n) {
  VertexSet out(n);
  s.for_each([&](int c) {
    for (int v : td.classes[c]) out.set(v);
  });
  return out;
}

std::vector<Split> atoms_via_skeleton(const Graph& g, bool first_only) {
  TwinDecomposition td = twin_decomposition(g);
  std::vector<Split> sk = tarjan_atoms(td.skeleton, first_only);
  for (auto& s : sk) {
    s.atom = lift(td, s.atom, g.n());
    s.separator = lift(td, s.separator, g.n());
  }
  return sk;
}

}  // namespace

std::optional<CliqueCutPartition> has_clique_cutset(const Graph& g) {
  if (g.n() < 2) return std::nullopt;
  auto splits = atoms_via_skeleton(g, true);
  if (splits.size() < 2) return std::nullopt;
  const Split& s = splits.front();
  CliqueCutPartition p;
  p.clique = s.separator.to_vector();
  p.side_a = (s.atom - s.separator).to_vector();
  p.side_b = (g.all() - s.atom).to_vector();
  return p;
}

std::vector<int> DecompTree::leaves() const {
  std::vector<int> out;
  int i = 0;
  while (true) {
    const auto& nd = nodes[i];
    if (nd.is_leaf()) {
      out.push_back(i);
      break;
    }
    out.push_back(nd.left);
    i = nd.right;
  }
  return out;
}

Graph DecompTree::node_graph(int i) const { return induced(root, nodes[i].vertices); }

DecompTree decompose(const Graph& g) {
  DecompTree t;
  t.root = g;
  if (g.n() == 0) {
    t.nodes.push_back(DecompNode{});
    return t;
  }
  auto splits = atoms_via_skeleton(g, false);
  for (const auto& s : splits) {
    Graph a = induced(g, s.atom);
    if (a.n() > 1 && has_clique_cutset(a))
      throw InternalError("decompose: extracted piece still has a clique cutset");
  }
  // Caterpillar: node j holds the remaining graph, left = atom j, right = node j+1.
  VertexSet remaining = g.all();
  const std::size_t k = splits.size();
  t.nodes.reserve(2 * k);
  t.nodes.push_back(DecompNode{remaining.to_vector(), {}, -1, -1});
  int cur = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const Split& s = splits[j];
    VertexSet next = remaining - (s.atom - s.separator);
    int leaf = static_cast<int>(t.nodes.size());
    t.nodes.push_back(DecompNode{s.atom.to_vector(), {}, -1, -1});
    int right = static_cast<int>(t.nodes.size());
    t.nodes.push_back(DecompNode{next.to_vector(), {}, -1, -1});
    t.nodes[cur].cutset = s.separator.to_vector();
    t.nodes[cur].left = leaf;
    t.nodes[cur].right = right;
    remaining = next;
    cur = right;
  }
  return t;
}

std::string dump_tree(const DecompTree& t) {
  std::ostringstream os;
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  int i = 0, depth = 0;
  while (true) {
    const auto& nd = t.nodes[i];
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (nd.is_leaf()) {
      os << pad << "atom " << list(nd.vertices) << "\n";
      break;
    }
    os << pad << "cut " << list(nd.cutset) << " on " << nd.vertices.size() << " vertices\n";
    os << pad << "  atom " << list(t.nodes[nd.left].vertices) << "\n";
    i = nd.right;
    ++depth;
  }
  return os.str();
}

Coloring merge_colorings(const DecompTree& t, const std::map<int, Coloring>& leaf_colorings, int k) {
  const Graph& g = t.root;
  auto leaf_global = [&](int leaf) {
    auto it = leaf_colorings.find(leaf);
    if (it == leaf_colorings.end())
      throw std::invalid_argument("merge_colorings: missing coloring for leaf " + std::to_string(leaf));
    const auto& vs = t.nodes[leaf].vertices;
    const auto& cols = it->second.colors;
    if (cols.size() != vs.size())
      throw std::invalid_argument("merge_colorings: coloring size mismatch at leaf " + std::to_string(leaf));
    std::vector<int> global(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (cols[i] < 1 || cols[i] > k)
        throw std::invalid_argument("merge_colorings: color out of range 1.." + std::to_string(k) +
                                    " at leaf " + std::to_string(leaf));
      global[vs[i]] = cols[i];
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.adj(vs[i], vs[j]) && global[vs[i]] == global[vs[j]])
          throw std::invalid_argument("merge_colorings: improper coloring at leaf " + std::to_string(leaf));
    return global;
  };

  // Walk the spine to the bottom, then merge upwards.
  std::vector<int> spine;
  for (int i = 0;; i = t.nodes[i].right) {
    spine.push_back(i);
    if (t.nodes[i].is_leaf()) break;
  }
  std::vector<int> acc = leaf_global(spine.back());
  for (int s = static_cast<int>(spine.size()) - 2; s >= 0; --s) {
    const auto& nd = t.nodes[spine[s]];
    if (static_cast<int>(nd.cutset.size()) > k)
      throw std::invalid_argument("merge_colorings: k smaller than cutset at node " + std::to_string(spine[s]));
    std::vector<int> left = leaf_global(nd.left);
    std::vector<int> perm(static_cast<std::size_t>(k + 1), 0);
    std::vector<char> target_used(static_cast<std::size_t>(k + 1), 0);
    for (int v : nd.cutset) {
      int from = acc[v], to = left[v];
      if (perm[from] != 0 || target_used[to])
        throw std::invalid_argument("merge_colorings: cutset not rainbow at node " + std::to_string(spine[s]));
      perm[from] = to;
      target_used[to] = 1;
    }
    int next_target = 1;
    for (int c = 1; c <= k; ++c) {
      if (perm[c]) continue;
      while (target_used[next_target]) ++next_target;
      perm[c] = next_target;
      target_used[next_target] = 1;
    }
    for (int v : nd.vertices) {
      if (acc[v]) acc[v] = perm[acc[v]];
    }
    for (int v : t.nodes[nd.left].vertices) acc[v] = left[v];
  }
  Coloring c;
  c.colors = acc;
  c.count = max_color(acc);
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v])
      throw InternalError("merge_colorings produced a monochromatic edge");
  return c;
}

}  // namespace p7c
