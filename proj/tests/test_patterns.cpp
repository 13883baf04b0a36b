#include "fixtures.hpp"
#include "p7c/oracles.hpp"
#include "p7c/patterns.hpp"

#include <doctest.h>

#include <algorithm>

using namespace p7c;

TEST_CASE("find_induced_path") {
  CHECK_FALSE(find_induced_path(cycle_graph(7), 7));
  CHECK(find_induced_path(cycle_graph(7), 6));

  auto w = find_induced_path(path_graph(7), 7);
  REQUIRE(w);
  CHECK(w->name() == "P7");
  CHECK(verify_witness(path_graph(7), *w));

  CHECK_FALSE(find_induced_path(complete_graph(5), 3));
}

TEST_CASE("find_k_hole") {
  auto w = find_k_hole(cycle_graph(7), 7);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_FALSE(find_k_hole(cycle_graph(7), 4));

  Graph th = fixture::theta(3);
  auto h = find_k_hole(th, 6);
  REQUIRE(h);
  CHECK(verify_witness(th, *h));
  CHECK(std::count(h->vertices.begin(), h->vertices.end(), 0) == 1);
  CHECK(std::count(h->vertices.begin(), h->vertices.end(), 7) == 1);
}

TEST_CASE("find_k_hole canonical order") {
  // C7 relabelled so the natural order is scrambled
  Graph g = relabel(cycle_graph(7), {3, 6, 0, 5, 1, 4, 2});
  auto w = find_k_hole(g, 7);
  REQUIRE(w);
  CHECK(w->vertices.front() == 0);
  CHECK(w->vertices[1] < w->vertices.back());
  CHECK(w->vertices == canonical_cycle(w->vertices));
}

TEST_CASE("find_theta33") {
  Graph th = fixture::theta(3);
  auto w = find_theta33(th);
  REQUIRE(w);
  CHECK(w->vertices.size() == 8);
  CHECK(verify_witness(th, *w));

  CHECK_FALSE(find_theta33(cycle_graph(7)));

  Graph apex = fixture::join_clique(th, 1);
  auto a = find_theta33(apex);
  REQUIRE(a);
  CHECK(std::find(a->vertices.begin(), a->vertices.end(), 8) == a->vertices.end());
}

TEST_CASE("class_membership") {
  auto c7 = class_membership(cycle_graph(7));
  CHECK(c7.p7_free());
  CHECK(c7.c4_free());
  CHECK(c7.c5_free());
  REQUIRE_FALSE(c7.c7_free());
  CHECK(c7.c7->vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(c7.in_class());

  auto p7 = class_membership(path_graph(7));
  CHECK_FALSE(p7.p7_free());
  CHECK_FALSE(p7.in_class());
  REQUIRE(p7.violation());
  CHECK(p7.violation()->name() == "P7");

  auto th = class_membership(fixture::theta(3));
  CHECK(th.in_class());
  CHECK(th.c7_free());
  CHECK_FALSE(th.theta33_free());
}

TEST_CASE("detectors agree with brute force on small graphs") {
  Rng rng(11);
  int checked = 0;
  for (int it = 0; it < 10000; ++it) {
    int n = rng.uniform(4, 9);
    Graph g = fixture::random_graph(rng, n, rng.uniform(2, 7), 10);
    ClassReport r = class_membership(g);
    oracle::PatternCensus pc = oracle::brute_patterns(g);
    CHECK(r.p7_free() == !pc.p7);
    CHECK(r.c4_free() == !pc.c4);
    CHECK(r.c5_free() == !pc.c5);
    CHECK(r.c7_free() == !pc.c7);
    CHECK(r.theta33_free() == !pc.theta33);
    for (const auto* w : {&r.p7, &r.c4, &r.c5, &r.c7, &r.theta33})
      if (*w) CHECK(verify_witness(g, **w));
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("patterns survive added vertices") {
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    int n = rng.uniform(5, 9);
    Graph g = fixture::random_graph(rng, n, 4, 10);
    ClassReport r = class_membership(g);
    // extra vertices with arbitrary attachments; the old vertices keep their ids
    GraphBuilder b(n + 2);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int x = n; x < n + 2; ++x)
      for (int v = 0; v < x; ++v)
        if (rng.coin(1, 2)) b.add_edge(x, v);
    ClassReport s = class_membership(b.build());
    if (!r.p7_free()) CHECK_FALSE(s.p7_free());
    if (!r.c4_free()) CHECK_FALSE(s.c4_free());
    if (!r.c5_free()) CHECK_FALSE(s.c5_free());
    if (!r.c7_free()) CHECK_FALSE(s.c7_free());
    if (!r.theta33_free()) CHECK_FALSE(s.theta33_free());
  }
}

TEST_CASE("generated atoms keep patterns after an apex") {
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    Graph b = random_bracelet(rng, 14).g;
    CHECK(find_k_hole(fixture::join_clique(b, 1), 7));
    Graph l = random_lantern(rng, 14).g;
    CHECK(find_theta33(fixture::join_clique(l, 1)));
  }
}

TEST_CASE("for_each_k_hole enumerates every hole once") {
  Graph th = fixture::theta(4);
  int count = 0;
  for_each_k_hole(th, 6, [&](const std::vector<int>& h) {
    CHECK(h == canonical_cycle(h));
    ++count;
    return true;
  });
  CHECK(count == oracle::hole_census(th).at(6));
}
