#ifndef P7C_ORACLES_HPP
#define P7C_ORACLES_HPP

// Brute-force ground truth. Each routine copies the graph into a plain
// boolean matrix and enumerates; nothing here touches the solver code paths.

#include "p7c/graph.hpp"
#include "p7c/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace p7c::oracle {

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

constexpr int kChromaticCap = 16;
constexpr int kSetCap = 22;
constexpr int kHoleCap = 16;
constexpr int kPatternCap = 12;
constexpr int kCutsetCap = 18;

struct BruteSet {
  std::vector<int> vertices;
  Rational weight;
};

// cap < 0 means the default cap for that oracle.
int brute_chromatic(const Graph& g, int cap = -1);
BruteSet brute_mwis(const Graph& g, const Weights& w, int cap = -1);
BruteSet brute_max_clique(const Graph& g, const Weights& w, int cap = -1);
int brute_alpha(const Graph& g, int cap = -1);
int brute_omega(const Graph& g, int cap = -1);
// length -> number of holes of that length
std::map<int, int> hole_census(const Graph& g, int cap = -1);

struct PatternCensus {
  bool p7 = false, c4 = false, c5 = false, c7 = false, theta33 = false;
};
PatternCensus brute_patterns(const Graph& g, int cap = -1);

// True iff some clique (possibly empty) disconnects g.
bool brute_has_clique_cutset(const Graph& g, int cap = -1);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

}  // namespace p7c::oracle

#endif
