#ifndef P7C_SOLVERS_HPP
#define P7C_SOLVERS_HPP

// Exact coloring, maximum weight stable set and maximum weight clique for the class,
// assembled from the clique-cutset tree and atom certificates.

#include "p7c/atoms.hpp"
#include "p7c/graph.hpp"
#include "p7c/types.hpp"

namespace p7c {

struct SolveOptions {
  int jobs = 1;                                  // worker threads for independent atoms
  int membership_limit = kPreconditionCheckLimit;  // run the class check up to this size
};

Coloring min_coloring(const Graph& g, const SolveOptions& opt = {});
Coloring color_atom(const AtomCertificate& cert, const Graph& a);
Coloring greedy_color_lantern(const Graph& g, const LanternPartition& p, int omega);
Coloring greedy_color_ring(const Graph& g, const RingPartition& p, int omega);

// Best clique inside the certificate's windows (core vertices only).
WeightedSet clique_number_partition(const Graph& a, const AtomCertificate& cert, const Weights& w);

WeightedSet mwis(const Graph& g, const Weights& w, const SolveOptions& opt = {});
WeightedSet mwis_atom(const Graph& a, const Weights& w);
WeightedSet max_weight_clique(const Graph& g, const Weights& w, const SolveOptions& opt = {});

// Exact branch and bound fallback used when a window leaves the chordal route.
WeightedSet exact_max_weight_clique(const Graph& g, const Weights& w);

// Throws ClassViolation with the first forbidden pattern when g has at most `limit` vertices.
void require_membership(const Graph& g, int limit);

}  // namespace p7c

#endif
