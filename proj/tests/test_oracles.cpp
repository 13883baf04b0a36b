#include "fixtures.hpp"
#include "p7c/oracles.hpp"

#include <doctest.h>

using namespace p7c;
using namespace p7c::oracle;

TEST_CASE("brute_chromatic") {
  CHECK(brute_chromatic(cycle_graph(7)) == 3);
  CHECK(brute_chromatic(complete_graph(5)) == 5);
  CHECK(brute_chromatic(fixture::theta(3)) == 2);
  CHECK(brute_chromatic(empty_graph(3)) == 1);
  CHECK_THROWS_AS(brute_chromatic(cycle_graph(17)), CapExceeded);
  CHECK(brute_chromatic(cycle_graph(17), 17) == 3);
}

TEST_CASE("brute_mwis") {
  CHECK(brute_mwis(empty_graph(2), unit_weights(2)).weight == 2);
  CHECK(brute_mwis(complete_graph(4), unit_weights(4)).weight == 1);
  BruteSet c7 = brute_mwis(cycle_graph(7), unit_weights(7));
  CHECK(c7.weight == 3);
  CHECK(c7.vertices.size() == 3);
  BruteSet neg = brute_mwis(path_graph(3), Weights(3, Rational(-2)));
  CHECK(neg.weight == 0);
  CHECK(neg.vertices.empty());
  CHECK_THROWS_AS(brute_mwis(cycle_graph(23), unit_weights(23)), CapExceeded);
}

TEST_CASE("brute_max_clique") {
  CHECK(brute_max_clique(cycle_graph(7), unit_weights(7)).weight == 2);
  CHECK(brute_max_clique(complete_graph(5), unit_weights(5)).weight == 5);
  CHECK(brute_max_clique(fixture::diamond(), unit_weights(4)).weight == 3);
  CHECK(brute_max_clique(fixture::diamond(), {1, 5, 1, 5}).weight == 7);
}

TEST_CASE("hole_census") {
  CHECK(hole_census(cycle_graph(7)) == std::map<int, int>{{7, 1}});
  CHECK(hole_census(complete_graph(4)).empty());
  CHECK(hole_census(fixture::theta(3)) == std::map<int, int>{{6, 3}});
  CHECK(hole_census(fixture::theta(4)) == std::map<int, int>{{6, 6}});
  CHECK_THROWS_AS(hole_census(cycle_graph(17)), CapExceeded);
}

TEST_CASE("brute_alpha and brute_omega") {
  CHECK(brute_alpha(cycle_graph(7)) == 3);
  CHECK(brute_alpha(complete_graph(5)) == 1);
  CHECK(brute_alpha(fixture::theta(3)) == 4);
  CHECK(brute_omega(fixture::emerald()) == 3);
  CHECK(brute_alpha(fixture::emerald()) == 3);
}

TEST_CASE("brute_patterns and brute_has_clique_cutset") {
  PatternCensus c7 = brute_patterns(cycle_graph(7));
  CHECK_FALSE(c7.p7);
  CHECK(c7.c7);
  CHECK(brute_patterns(path_graph(7)).p7);
  PatternCensus th = brute_patterns(fixture::theta(3));
  CHECK(th.theta33);
  CHECK_FALSE(th.c4);
  CHECK_FALSE(th.c5);

  CHECK(brute_has_clique_cutset(fixture::diamond()));
  CHECK_FALSE(brute_has_clique_cutset(cycle_graph(7)));
  CHECK(brute_has_clique_cutset(empty_graph(2)));
}

TEST_CASE("is_proper_coloring") {
  CHECK(is_proper_coloring(path_graph(3), {1, 2, 1}));
  CHECK_FALSE(is_proper_coloring(path_graph(3), {1, 1, 2}));
  CHECK_FALSE(is_proper_coloring(path_graph(3), {1, 2}));
  CHECK_FALSE(is_proper_coloring(path_graph(3), {0, 2, 1}));
}

TEST_CASE("oracle consistency") {
  Rng rng(97);
  for (int it = 0; it < 400; ++it) {
    Graph g = fixture::random_graph(rng, rng.uniform(1, 12), rng.uniform(1, 9), 10);
    int omega = brute_omega(g);
    CHECK(brute_chromatic(g) >= omega);
    CHECK(omega == brute_max_clique(g, unit_weights(g.n())).weight);
    CHECK(brute_alpha(g) == brute_omega(complement(g)));
    CHECK(brute_alpha(g) == brute_mwis(g, unit_weights(g.n())).weight);
  }
}
