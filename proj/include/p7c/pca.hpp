#ifndef P7C_PCA_HPP
#define P7C_PCA_HPP

// Proper circular-arc models for emeralds and bracelets, and coloring through them.

#include "p7c/atoms.hpp"
#include "p7c/graph.hpp"
#include "p7c/rational.hpp"
#include "p7c/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace p7c {

// Closed arc running clockwise from start to end on [0, circumference).
struct Arc {
  Rational start, end;
};

struct ArcRepresentation {
  Rational circumference{0};
  std::vector<Arc> arcs;  // indexed by vertex
};

bool point_on_arc(const ArcRepresentation& rep, const Rational& p, const Arc& a);
bool arcs_intersect(const ArcRepresentation& rep, const Arc& a, const Arc& b);
Graph realize(const ArcRepresentation& rep);
// No arc properly contains another.
bool is_proper(const ArcRepresentation& rep);
// Largest number of arcs sharing a point.
int arc_depth(const ArcRepresentation& rep);

// Arcs for a verified emerald partition of g (scope = all of g's vertices).
ArcRepresentation emerald_arcs(const Graph& g, const BraceletPartition& p);

// Canonical bracelet slots. Anchors in left-to-right interval order:
// a4, a5*, a6*, a0*, a1*, a2*, a3 (indices relative to i*).
// Pairs: 0 = (A5+, A0-), 1 = (A0+, A2-), 2 = (A6+, A1-); x[i-1], y[i-1] hold the
// input vertices placed on canonical x_i, y_i (empty slot = padding).
struct CanonicalBracelet {
  int t = 1;
  std::array<std::vector<int>, 7> anchor;
  std::array<std::vector<std::vector<int>>, 3> x, y;
};

CanonicalBracelet canonical_embed(const Graph& g, const BraceletPartition& p);

struct LabeledInterval {
  std::string name;  // "a4", "x2[A5+]", ...
  Rational left, right;
  std::vector<int> vertices;  // input vertices sharing this slot
};

// Throws std::invalid_argument unless 0 < s*t < 1.
std::vector<LabeledInterval> bracelet_intervals(const CanonicalBracelet& c, const Rational& s);

struct ClosedCircle {
  ArcRepresentation rep;  // one arc per interval, same order
  std::vector<std::string> names;
};
// Glues the left end of the first interval (a4) to the right end of the last (a3).
ClosedCircle close_circle(const std::vector<LabeledInterval>& intervals);

// Full pipeline for a verified bracelet partition of g; arcs indexed by g's vertices.
ArcRepresentation bracelet_arcs(const Graph& g, const BraceletPartition& p);

// Optimal coloring of the graph realized by rep; throws ClassViolation if rep does not realize g.
Coloring pca_color(const Graph& g, const ArcRepresentation& rep);

}  // namespace p7c

#endif
