#ifndef P7C_ATOMS_HPP
#define P7C_ATOMS_HPP

// Certificates for the atom classes and the recognizers that produce them.

#include "p7c/graph.hpp"
#include "p7c/patterns.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace p7c {

// Six cliques around a cycle; each part ordered by decreasing closed neighbourhood.
struct RingPartition {
  std::array<std::vector<int>, 6> X;
};

struct CrownSplit {
  std::array<std::vector<int>, 6> C, D;
  int istar = 0;
};

struct LanternPartition {
  int r = 0;
  std::vector<int> A, D;
  std::vector<std::vector<int>> B, C;  // arm i at index i-1; B[0], C[0] in dominance order
};

// Seven cliques A_i = star_i + plus_i + minus_i. plus/minus lists are in dominance order.
// For thickened emeralds C is nonempty.
struct BraceletPartition {
  std::array<std::vector<int>, 7> star, plus, minus;
  std::vector<int> C;
  int istar = 0;
  std::vector<int> part(int i) const;  // A_i, sorted
};

enum class AtomKind { Complete, Ring6, Wreath, Crown, Lantern, Bracelet, Emerald };
std::string kind_name(AtomKind k);

struct AtomCertificate {
  AtomKind kind = AtomKind::Complete;
  std::vector<int> U;      // universal clique
  std::vector<int> core;   // the rest
  RingPartition ring;      // Ring6 / Wreath / Crown (crown parts as X_i = C_i then D_i)
  CrownSplit crown;        // Crown only
  LanternPartition lantern;
  BraceletPartition bracelet;  // Bracelet / Emerald
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Size up to which recognize_atom re-checks its own preconditions.
constexpr int kPreconditionCheckLimit = 64;

AtomCertificate recognize_atom(const Graph& a);

std::optional<RingPartition> recognize_ring6(const Graph& g);
std::optional<LanternPartition> recognize_lantern(const Graph& g);

struct WreathOrCrown {
  bool wreath = false;
  RingPartition ring;  // rotated for wreaths so (0,1), (2,3), (4,5) are complete pairs
  CrownSplit crown;
};
WreathOrCrown classify_wreath_or_crown(const Graph& g, const RingPartition& p);

struct BraceletBuild {
  bool ok = false;
  bool emerald = false;
  BraceletPartition partition;
  Verdict verdict;
};
// g is an anticonnected core without universal vertices; hole = x_0..x_6.
BraceletBuild build_bracelet_from_hole(const Graph& g, const std::vector<int>& hole);

Verdict verify_ring(const Graph& g, const RingPartition& p, const std::vector<int>& scope);
Verdict verify_wreath(const Graph& g, const RingPartition& p, const std::vector<int>& scope);
Verdict verify_crown(const Graph& g, const CrownSplit& c, const std::vector<int>& scope);
Verdict verify_lantern(const Graph& g, const LanternPartition& p, const std::vector<int>& scope);
Verdict verify_bracelet(const Graph& g, const BraceletPartition& p, const std::vector<int>& scope);
Verdict verify_emerald(const Graph& g, const BraceletPartition& p, const std::vector<int>& scope);
Verdict verify_certificate(const Graph& g, const AtomCertificate& cert);

// Orders vs by decreasing closed neighbourhood size, ties by id.
std::vector<int> dominance_order(const Graph& g, std::vector<int> vs);

}  // namespace p7c

#endif
