#ifndef P7C_PATTERNS_HPP
#define P7C_PATTERNS_HPP

// Exhaustive detectors for induced paths, holes and the theta graph.

#include "p7c/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace p7c {

enum class PatternKind { Path, Hole, Theta33 };

struct PatternWitness {
  PatternKind kind;
  int length = 0;              // vertex count of the path or hole; 8 for the theta
  std::vector<int> vertices;   // path order, cyclic hole order, or a,b1,b2,b3,c1,c2,c3,d
  std::string name() const;    // "P7", "C5", "Theta33", ...
};

std::optional<PatternWitness> find_induced_path(const Graph& g, int k);
std::optional<PatternWitness> find_k_hole(const Graph& g, int k);
std::optional<PatternWitness> find_theta33(const Graph& g);

// Calls f on every k-hole in canonical form (least vertex first, then the smaller
// neighbour) in lexicographic order; stops when f returns false.
void for_each_k_hole(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& f);

struct ClassReport {
  std::optional<PatternWitness> p7, c4, c5, c7, theta33;
  bool p7_free() const { return !p7; }
  bool c4_free() const { return !c4; }
  bool c5_free() const { return !c5; }
  bool c7_free() const { return !c7; }
  bool theta33_free() const { return !theta33; }
  bool in_class() const { return !p7 && !c4 && !c5; }
  // First witness among P7, C4, C5 (in that order), if any.
  const PatternWitness* violation() const;
};

ClassReport class_membership(const Graph& g);

// Re-checks a witness against g: induced subgraph matches the named pattern in the given order.
bool verify_witness(const Graph& g, const PatternWitness& w);

// Rotates and reflects a cycle so the least vertex comes first, followed by its smaller neighbour.
std::vector<int> canonical_cycle(std::vector<int> cyc);

}  // namespace p7c

#endif
