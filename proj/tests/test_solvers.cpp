#include "fixtures.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/oracles.hpp"
#include "p7c/solvers.hpp"

#include <doctest.h>

using namespace p7c;

namespace {

SolveOptions trusting() {
  SolveOptions o;
  o.membership_limit = 0;
  return o;
}

Weights random_weights(Rng& rng, int n) {
  Weights w(n);
  for (auto& x : w) x = rng.uniform(-5, 9);
  return w;
}

bool stable(const Graph& g, const std::vector<int>& vs) { return g.is_stable(VertexSet::of(g.n(), vs)); }
bool clique(const Graph& g, const std::vector<int>& vs) { return g.is_clique(VertexSet::of(g.n(), vs)); }

}  // namespace

TEST_CASE("min_coloring examples") {
  CHECK(min_coloring(cycle_graph(7)).count == 3);

  // both inputs contain an induced P7, so the class check has to be switched off
  Coloring p7 = min_coloring(path_graph(7), trusting());
  CHECK(p7.count == 2);
  CHECK(oracle::is_proper_coloring(path_graph(7), p7.colors));
  Graph glued = fixture::glued_c7();
  Coloring gc = min_coloring(glued, trusting());
  CHECK(gc.count == 3);
  CHECK(oracle::is_proper_coloring(glued, gc.colors));

  try {
    min_coloring(glued);
    FAIL("expected a class violation");
  } catch (const ClassViolation& e) {
    CHECK(e.witness.size() == 7);
    CHECK(find_induced_path(induced(glued, e.witness), 7));
  }
}

TEST_CASE("color_atom examples") {
  Graph k5 = complete_graph(5);
  CHECK(color_atom(recognize_atom(k5), k5).count == 5);

  Graph j = fixture::join_clique(cycle_graph(7), 2);
  Coloring cj = color_atom(recognize_atom(j), j);
  CHECK(cj.count == 5);
  CHECK(oracle::is_proper_coloring(j, cj.colors));
  CHECK(cj.colors[7] >= 4);
  CHECK(cj.colors[8] >= 4);

  Graph th = fixture::theta(3);
  CHECK(color_atom(recognize_atom(th), th).count == 2);

  AtomCertificate bad = recognize_atom(th);
  std::swap(bad.lantern.A, bad.lantern.B[1]);
  CHECK_THROWS_AS(color_atom(bad, th), ClassViolation);
}

TEST_CASE("greedy_color_lantern examples") {
  Graph th = fixture::theta(3);
  LanternPartition p;
  p.r = 3;
  p.A = {0};
  p.D = {7};
  p.B = {{1}, {2}, {3}};
  p.C = {{4}, {5}, {6}};
  Coloring c = greedy_color_lantern(th, p, 2);
  CHECK(c.colors == std::vector<int>{2, 1, 1, 1, 2, 2, 2, 1});

  LanternSizes s;
  s.a = 2;
  s.b = {1, 1, 1};
  s.c = {1, 1, 1};
  GenLantern l = gen_lantern(3, s, Staircase::full(1, 1), 9);
  Coloring cl = greedy_color_lantern(l.g, l.p, 3);
  CHECK(cl.colors[l.p.A[0]] == 3);
  CHECK(cl.colors[l.p.A[1]] == 2);
  CHECK(cl.count == 3);
  CHECK(oracle::is_proper_coloring(l.g, cl.colors));
}

TEST_CASE("greedy_color_ring examples") {
  RingPartition c6;
  for (int i = 0; i < 6; ++i) c6.X[i] = {i};
  Coloring c = greedy_color_ring(cycle_graph(6), c6, 2);
  CHECK(c.colors == std::vector<int>{1, 2, 1, 2, 1, 2});

  Graph h = fixture::blow_up_cycle({1, 2, 3, 1, 2, 3});
  RingPartition p;
  p.X = {std::vector<int>{0}, {1, 2}, {3, 4, 5}, {6}, {7, 8}, {9, 10, 11}};
  Coloring ch = greedy_color_ring(h, p, 5);
  CHECK(ch.colors[3] == 1);
  CHECK(ch.colors[4] == 2);
  CHECK(ch.colors[5] == 3);
  CHECK(ch.colors[1] == 5);
  CHECK(ch.colors[2] == 4);
  CHECK(ch.count == 5);
  CHECK(oracle::is_proper_coloring(h, ch.colors));
}

TEST_CASE("clique_number_partition examples") {
  Graph c6 = cycle_graph(6);
  CHECK(clique_number_partition(c6, recognize_atom(c6), unit_weights(6)).weight == 2);
  Graph h = fixture::blow_up_cycle({1, 2, 3, 1, 2, 3});
  CHECK(clique_number_partition(h, recognize_atom(h), unit_weights(12)).weight == 5);
  Graph th = fixture::theta(3);
  CHECK(clique_number_partition(th, recognize_atom(th), unit_weights(8)).weight == 2);
}

TEST_CASE("mwis examples") {
  WeightedSet d = mwis(fixture::diamond(), unit_weights(4));
  CHECK(d.weight == 2);
  CHECK(d.vertices == std::vector<int>{1, 3});
  CHECK(mwis(cycle_graph(7), unit_weights(7)).weight == 3);
  CHECK(mwis(fixture::theta(3), unit_weights(8)).weight == 4);

  Weights w{Rational(1, 2), 3, Rational(-7, 3), 2, 2};
  Graph p5 = path_graph(5);
  CHECK(mwis(p5, w).weight == oracle::brute_mwis(p5, w).weight);
}

TEST_CASE("mwis_atom examples") {
  WeightedSet k4 = mwis_atom(complete_graph(4), {1, 2, 3, 4});
  CHECK(k4.vertices == std::vector<int>{3});
  CHECK(k4.weight == 4);
  CHECK(mwis_atom(cycle_graph(7), unit_weights(7)).weight == 3);
  WeightedSet neg = mwis_atom(cycle_graph(7), Weights(7, Rational(-1)));
  CHECK(neg.vertices.empty());
  CHECK(neg.weight == 0);
}

TEST_CASE("max_weight_clique examples") {
  CHECK(max_weight_clique(cycle_graph(7), unit_weights(7)).weight == 2);
  WeightedSet e = max_weight_clique(fixture::emerald(), unit_weights(11));
  CHECK(e.weight == 3);
  CHECK(clique(fixture::emerald(), e.vertices));
  Graph j = fixture::join_clique(cycle_graph(7), 2);
  CHECK(max_weight_clique(j, unit_weights(9)).weight == 4);
}

TEST_CASE("exact_max_weight_clique") {
  Rng rng(71);
  for (int it = 0; it < 200; ++it) {
    Graph g = fixture::random_graph(rng, rng.uniform(1, 14), 5, 10);
    Weights w = random_weights(rng, g.n());
    WeightedSet s = exact_max_weight_clique(g, w);
    CHECK(clique(g, s.vertices));
    CHECK(s.weight == oracle::brute_max_clique(g, w).weight);
  }
}

TEST_CASE("solvers against the oracles on the corpus") {
  Rng rng(73);
  for (const auto& item : make_corpus(79, 160, 14)) {
    const Graph& g = item.g;
    Coloring c = min_coloring(g);
    CHECK(oracle::is_proper_coloring(g, c.colors));
    CHECK(c.count == oracle::brute_chromatic(g));

    Weights w = random_weights(rng, g.n());
    WeightedSet s = mwis(g, w);
    CHECK(stable(g, s.vertices));
    CHECK(set_weight(s.vertices, w) == s.weight);
    CHECK(s.weight == oracle::brute_mwis(g, w).weight);
    CHECK(s.oracle_fallbacks == 0);

    WeightedSet q = max_weight_clique(g, w);
    CHECK(clique(g, q.vertices));
    CHECK(q.weight == oracle::brute_max_clique(g, w).weight);

    int omega = static_cast<int>(max_weight_clique(g, unit_weights(g.n())).weight);
    CHECK(c.count <= 3 * omega / 2);
  }
}

TEST_CASE("solving an atom directly agrees with the tree") {
  Rng rng(83);
  for (int it = 0; it < 40; ++it) {
    Graph g = it % 2 ? random_lantern(rng, 16).g : random_bracelet(rng, 16).g;
    REQUIRE(decompose(g).leaves().size() == 1);
    Weights w = random_weights(rng, g.n());
    CHECK(mwis(g, w).weight == mwis_atom(g, w).weight);
    AtomCertificate cert = recognize_atom(g);
    CHECK(color_atom(cert, g).count == min_coloring(g).count);
  }
}

TEST_CASE("jobs do not change answers") {
  SolveOptions par;
  par.jobs = 4;
  for (const auto& item : make_corpus(89, 24, 20)) {
    Weights w = unit_weights(item.g.n());
    CHECK(min_coloring(item.g).colors == min_coloring(item.g, par).colors);
    CHECK(mwis(item.g, w).vertices == mwis(item.g, w, par).vertices);
    CHECK(max_weight_clique(item.g, w).vertices == max_weight_clique(item.g, w, par).vertices);
  }
}
