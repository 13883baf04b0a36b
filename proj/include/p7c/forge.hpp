#ifndef P7C_FORGE_HPP
#define P7C_FORGE_HPP

// Seeded generators for every atom class plus clique gluing and universal joins.

#include "p7c/atoms.hpp"
#include "p7c/graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace p7c {

// Deterministic across platforms: only the raw 64-bit engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int uniform(int lo, int hi);  // inclusive
  bool coin(int num, int den);  // true with probability num/den
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// Row r (0-based) is adjacent to the first f[r] columns. f non-increasing, f[0] = cols, f[last] >= 1.
struct Staircase {
  int rows = 0, cols = 0;
  std::vector<int> f;
  static Staircase full(int rows, int cols);
  static Staircase random(Rng& rng, int rows, int cols);
  std::string check() const;  // empty when valid
};

struct GenRing {
  Graph g;
  RingPartition p;
};
// stairs[i] joins X_i (rows) to X_{i+1} (columns).
GenRing gen_ring6(const std::array<int, 6>& sizes, const std::array<Staircase, 6>& stairs, std::uint64_t seed);

struct LanternSizes {
  int a = 1, d = 1;
  std::vector<int> b, c;  // per arm
};
struct GenLantern {
  Graph g;
  LanternPartition p;
};
GenLantern gen_lantern(int r, const LanternSizes& sizes, const Staircase& stair1, std::uint64_t seed);

struct BraceletSpec {
  std::array<int, 7> star{}, plus{}, minus{};
  int istar = 0;
  std::map<int, Staircase> stairs;  // key i: A_i^+ (rows) against A_{i+2}^- (columns)
};
// Axiom ids a BraceletSpec violates, found before any graph is built.
std::vector<std::string> validate_bracelet_spec(const BraceletSpec& s);

struct GenBracelet {
  Graph g;
  BraceletPartition p;
};
GenBracelet gen_bracelet(const BraceletSpec& spec, std::uint64_t seed);

// Part order: c, a0-, a0+, a1, a2*, a2-, a3, a4, a5*, a5+, a6 (pivot 0).
GenBracelet gen_emerald(const std::array<int, 11>& sizes, std::uint64_t seed);

struct GenCrown {
  Graph g;
  WreathOrCrown w;
};
// kind 3 or 4; sizes = C_0..C_5 then the present D parts (D_1..D_3, or D_0..D_3 for kind 4).
GenCrown gen_crown(int kind, const std::vector<int>& sizes, std::uint64_t seed);

// Vertices of g1 keep their ids; unmapped vertices of g2 follow in increasing order.
Graph glue(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& clique_map);
// Appends k new vertices adjacent to everything.
Graph add_universal_clique(const Graph& g, int k);

// Random specs with roughly at most max_n vertices.
GenRing random_ring(Rng& rng, int max_n);  // P7-free rings only
GenLantern random_lantern(Rng& rng, int max_n);
GenBracelet random_bracelet(Rng& rng, int max_n);
GenBracelet random_emerald(Rng& rng, int max_n);
GenCrown random_crown(Rng& rng, int max_n);

struct CorpusItem {
  std::string family;  // ring, wreath, crown, lantern, bracelet, emerald, join, glued
  Graph g;
};
// Mixed corpus of class members with at most max_n vertices; deterministic in seed.
std::vector<CorpusItem> make_corpus(std::uint64_t seed, int count, int max_n);

}  // namespace p7c

#endif
