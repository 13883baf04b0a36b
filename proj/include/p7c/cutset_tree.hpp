#ifndef P7C_CUTSET_TREE_HPP
#define P7C_CUTSET_TREE_HPP

// Clique-cutset decomposition and the coloring merge over the resulting tree.

#include "p7c/graph.hpp"
#include "p7c/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace p7c {

struct CliqueCutPartition {
  std::vector<int> clique;  // possibly empty
  std::vector<int> side_a;
  std::vector<int> side_b;
};

std::optional<CliqueCutPartition> has_clique_cutset(const Graph& g);

struct DecompNode {
  std::vector<int> vertices;  // ids in the root graph, sorted
  std::vector<int> cutset;    // internal nodes only
  int left = -1;              // always a leaf (an atom)
  int right = -1;
  bool is_leaf() const { return left < 0; }
};

struct DecompTree {
  Graph root;
  std::vector<DecompNode> nodes;  // nodes[0] is the root node
  std::vector<int> leaves() const;
  Graph node_graph(int i) const;
};

DecompTree decompose(const Graph& g);
std::string dump_tree(const DecompTree& t);

// leaf_colorings: leaf node index -> coloring indexed by position in that node's vertex list.
Coloring merge_colorings(const DecompTree& t, const std::map<int, Coloring>& leaf_colorings, int k);

}  // namespace p7c

#endif
