#include "fixtures.hpp"
#include "p7c/graph.hpp"
#include "p7c/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace p7c;

TEST_CASE("build_graph") {
  Graph c7 = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
  CHECK(c7 == cycle_graph(7));
  CHECK(c7.edge_count() == 7);

  Graph two = build_graph(2, {});
  CHECK(two.edge_count() == 0);

  Graph d = fixture::diamond();
  CHECK(std::vector<int>{d.degree(0), d.degree(1), d.degree(2), d.degree(3)} == std::vector<int>{3, 2, 3, 2});
  CHECK_FALSE(d.adj(1, 3));

  CHECK(build_graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("induced") {
  Graph p = induced(cycle_graph(7), std::vector<int>{0, 1, 2});
  CHECK(p == path_graph(3));
  CHECK(p.origin() == std::vector<int>{0, 1, 2});

  Graph q = induced(fixture::diamond(), std::vector<int>{0, 1, 3});
  CHECK(q.edge_count() == 2);
  CHECK(q.degree(0) == 2);  // vertex 0 of the diamond is the centre

  Graph c7 = cycle_graph(7);
  CHECK(induced(c7, c7.all()) == c7);
  CHECK_THROWS_AS(induced(c7, c7.empty_set()), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  Graph d = fixture::diamond();
  CHECK(complement(complement(d)) == d);
  Graph c5c = complement(cycle_graph(5));
  CHECK(c5c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
  CHECK(is_connected(c5c));
}

TEST_CASE("anticomponents") {
  auto k4 = anticomponents(complete_graph(4));
  CHECK(k4.size() == 4);
  for (auto& s : k4) CHECK(s.count() == 1);

  auto c7 = anticomponents(cycle_graph(7));
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].count() == 7);

  // join of K2 (vertices 2,3) with 2K1 (vertices 0,1)
  Graph j = fixture::join_clique(empty_graph(2), 2);
  auto a = anticomponents(j);
  REQUIRE(a.size() == 3);
  CHECK(a[0].to_vector() == std::vector<int>{0, 1});
  CHECK(a[1].to_vector() == std::vector<int>{2});
  CHECK(a[2].to_vector() == std::vector<int>{3});
}

TEST_CASE("twin_decomposition") {
  auto k4 = twin_decomposition(complete_graph(4));
  CHECK(k4.classes.size() == 1);
  CHECK(k4.skeleton.n() == 1);

  auto c7 = twin_decomposition(cycle_graph(7));
  CHECK(c7.classes.size() == 7);
  CHECK(c7.skeleton == cycle_graph(7));

  auto b = twin_decomposition(fixture::blow_up_cycle({2, 1, 1, 1, 1, 1}));
  REQUIRE(b.classes.size() == 6);
  CHECK(b.classes[0].size() == 2);
  for (int i = 1; i < 6; ++i) CHECK(b.classes[i].size() == 1);
  CHECK(b.skeleton == cycle_graph(6));
}

TEST_CASE("universal_clique_peel") {
  auto k5 = universal_clique_peel(complete_graph(5));
  CHECK(k5.U.count() == 5);
  CHECK(k5.core.empty());

  auto c7 = universal_clique_peel(cycle_graph(7));
  CHECK(c7.U.empty());
  CHECK(c7.core.count() == 7);

  auto j = universal_clique_peel(fixture::join_clique(cycle_graph(7), 2));
  CHECK(j.U.to_vector() == std::vector<int>{7, 8});
  CHECK(j.core.count() == 7);
}

TEST_CASE("dimacs round trip") {
  Graph g = fixture::theta(3);
  std::stringstream ss;
  write_dimacs(ss, g, "theta");
  Graph h = read_dimacs(ss);
  CHECK(g == h);

  std::istringstream bad("p edge 3 1\ne 1 4\n");
  CHECK_THROWS_AS(read_dimacs(bad), std::invalid_argument);
  std::istringstream nohdr("e 1 2\n");
  CHECK_THROWS_AS(read_dimacs(nohdr), std::invalid_argument);
}

TEST_CASE("properties on random graphs") {
  Rng rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = rng.uniform(1, 14);
    Graph g = fixture::random_graph(rng, n, rng.uniform(1, 9), 10);

    // anticomponents are the components of the complement
    auto ac = anticomponents(g);
    auto cc = components(complement(g));
    CHECK(ac.size() == cc.size());
    int covered = 0;
    for (auto& s : ac) {
      covered += s.count();
      bool found = false;
      for (auto& t : cc) found |= s == t;
      CHECK(found);
    }
    CHECK(covered == n);

    // twins share closed neighbourhoods, representatives do not
    auto td = twin_decomposition(g);
    for (auto& cls : td.classes)
      for (int v : cls) CHECK(g.closed_nbr(v) == g.closed_nbr(cls[0]));
    for (std::size_t a = 0; a < td.classes.size(); ++a)
      for (std::size_t b = a + 1; b < td.classes.size(); ++b)
        CHECK(g.closed_nbr(td.classes[a][0]) != g.closed_nbr(td.classes[b][0]));
    for (int a = 0; a < td.skeleton.n(); ++a)
      for (int b = 0; b < td.skeleton.n(); ++b)
        if (a != b) CHECK(td.skeleton.adj(a, b) == g.adj(td.classes[a][0], td.classes[b][0]));

    // universal peel
    auto pe = universal_clique_peel(g);
    CHECK(g.is_clique(pe.U));
    pe.U.for_each([&](int u) { CHECK(g.degree(u) == n - 1); });
    pe.core.for_each([&](int v) { CHECK(g.degree(v) < n - 1); });
    if (pe.core.any()) CHECK(oracle::brute_alpha(g) == oracle::brute_alpha(induced(g, pe.core)));
  }
}
