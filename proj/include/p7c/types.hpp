#ifndef P7C_TYPES_HPP
#define P7C_TYPES_HPP

#include "p7c/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace p7c {

struct Coloring {
  std::vector<int> colors;  // colors[v] >= 1
  int count = 0;            // largest color used
};

struct WeightedSet {
  std::vector<int> vertices;  // sorted
  Rational weight{0};
  int oracle_fallbacks = 0;   // subproblems that left the recognized structure
};

// Input lies outside the graph class or violates a certificate; carries a witness when known.
struct ClassViolation : std::runtime_error {
  ClassViolation(const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), witness(std::move(witness)) {}
  std::vector<int> witness;
};

// Broken internal invariant; indicates a bug rather than bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Rational set_weight(const std::vector<int>& vs, const Weights& w);
int max_color(const std::vector<int>& colors);

}  // namespace p7c

#endif
