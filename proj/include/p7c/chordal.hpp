#ifndef P7C_CHORDAL_HPP
#define P7C_CHORDAL_HPP

#include "p7c/graph.hpp"
#include "p7c/types.hpp"

#include <optional>
#include <vector>

namespace p7c {

struct EliminationOrder {
  std::vector<int> order;  // order[0] is eliminated first
};

struct ChordalityResult {
  std::optional<EliminationOrder> peo;
  std::vector<int> hole;  // cyclic order, nonempty iff peo is absent
  bool chordal() const { return peo.has_value(); }
};

ChordalityResult perfect_elimination_order(const Graph& g);
bool is_simplicial_order(const Graph& g, const std::vector<int>& order);
// Shortest-path hole witness; empty when g is chordal.
std::vector<int> find_hole(const Graph& g);

// The following throw ClassViolation (with the hole as witness) on non-chordal input.
WeightedSet chordal_mwis(const Graph& g, const Weights& w);
WeightedSet chordal_max_weight_clique(const Graph& g, const Weights& w);
Coloring chordal_coloring(const Graph& g);

}  // namespace p7c

#endif
