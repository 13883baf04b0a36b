#include "fixtures.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/forge.hpp"
#include "p7c/oracles.hpp"
#include "p7c/patterns.hpp"

#include <doctest.h>

#include <algorithm>

using namespace p7c;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::array<Staircase, 6> full_stairs(const std::array<int, 6>& s) {
  std::array<Staircase, 6> st;
  for (int i = 0; i < 6; ++i) st[i] = Staircase::full(s[i], s[(i + 1) % 6]);
  return st;
}

BraceletSpec c7_spec() {
  BraceletSpec s;
  s.star = {1, 1, 1, 1, 1, 1, 1};
  return s;
}

}  // namespace

TEST_CASE("Rng and Staircase") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform(0, 9) == b.uniform(0, 9));
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    int x = r.uniform(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
  CHECK(Staircase::full(2, 3).check().empty());
  CHECK(Staircase{2, 2, {2, 1}}.check().empty());
  CHECK_FALSE(Staircase{2, 2, {1, 1}}.check().empty());
  CHECK_FALSE(Staircase{2, 2, {1, 2}}.check().empty());
  CHECK_FALSE(Staircase{2, 2, {2, 0}}.check().empty());
  for (int i = 0; i < 200; ++i) CHECK(Staircase::random(r, r.uniform(1, 5), r.uniform(1, 5)).check().empty());
}

TEST_CASE("gen_ring6 examples") {
  std::array<int, 6> ones{1, 1, 1, 1, 1, 1};
  GenRing c6 = gen_ring6(ones, full_stairs(ones), 1);
  CHECK(c6.g.n() == 6);
  CHECK(oracle::hole_census(c6.g) == std::map<int, int>{{6, 1}});

  std::array<int, 6> twos{2, 2, 2, 2, 2, 2};
  GenRing h = gen_ring6(twos, full_stairs(twos), 2);
  CHECK(oracle::brute_omega(h.g) == 4);

  // a nested but non-complete contact on every edge
  std::array<int, 6> s{2, 2, 2, 2, 2, 2};
  std::array<Staircase, 6> st;
  for (int i = 0; i < 6; ++i) st[i] = Staircase{2, 2, {2, 1}};
  GenRing w = gen_ring6(s, st, 3);
  ClassReport rep = class_membership(w.g);
  if (rep.in_class())
    CHECK_FALSE(classify_wreath_or_crown(w.g, w.p).wreath);
  else
    CHECK_FALSE(rep.p7_free());

  CHECK_THROWS_AS(gen_ring6({1, 1, 0, 1, 1, 1}, full_stairs(ones), 1), std::invalid_argument);
}

TEST_CASE("gen_lantern examples") {
  LanternSizes s;
  s.b = {1, 1, 1};
  s.c = {1, 1, 1};
  GenLantern th = gen_lantern(3, s, Staircase::full(1, 1), 1);
  CHECK(th.g.n() == 8);
  CHECK(th.g.edge_count() == 9);
  CHECK(find_theta33(th.g));
  CHECK(oracle::hole_census(th.g) == std::map<int, int>{{6, 3}});

  LanternSizes s4;
  s4.b = {1, 3, 1, 1};
  s4.c = {1, 1, 1, 1};
  GenLantern t4 = gen_lantern(4, s4, Staircase::full(1, 1), 2);
  CHECK(t4.g.n() == 12);
  CHECK(t4.p.B[1].size() == 3);
  CHECK(verify_lantern(t4.g, t4.p, t4.g.all().to_vector()).ok);

  LanternSizes sw;
  sw.b = {2, 1, 1};
  sw.c = {2, 1, 1};
  GenLantern wavy = gen_lantern(3, sw, Staircase{2, 2, {2, 1}}, 3);
  CHECK(class_membership(wavy.g).in_class());
  CHECK(verify_lantern(wavy.g, wavy.p, wavy.g.all().to_vector()).ok);
  // the second B1 vertex misses the second C1 vertex
  CHECK_FALSE(wavy.g.adj(wavy.p.B[0][1], wavy.p.C[0][1]));

  CHECK_THROWS_AS(gen_lantern(2, LanternSizes{1, 1, {1, 1}, {1, 1}}, Staircase::full(1, 1), 1), std::invalid_argument);
}

TEST_CASE("gen_bracelet examples") {
  GenBracelet c7 = gen_bracelet(c7_spec(), 1);
  CHECK(c7.g.n() == 7);
  CHECK(oracle::hole_census(c7.g) == std::map<int, int>{{7, 1}});

  BraceletSpec w = c7_spec();
  w.plus[0] = 1;
  w.minus[2] = 1;
  w.stairs[0] = Staircase::full(1, 1);
  CHECK(validate_bracelet_spec(w).empty());
  GenBracelet small = gen_bracelet(w, 2);
  CHECK(small.g.n() == 9);
  CHECK(verify_bracelet(small.g, small.p, small.g.all().to_vector()).ok);
  CHECK(class_membership(small.g).in_class());

  BraceletSpec bad = c7_spec();
  bad.plus[1] = 1;
  bad.minus[3] = 1;
  bad.plus[3] = 1;
  bad.minus[5] = 1;
  bad.stairs[1] = Staircase::full(1, 1);
  bad.stairs[3] = Staircase::full(1, 1);
  // at i* = 0 the wavy A_3 breaks axiom III
  CHECK(contains(validate_bracelet_spec(bad), "III"));
  CHECK_THROWS_AS(gen_bracelet(bad, 1), std::invalid_argument);

  BraceletSpec skip = c7_spec();
  skip.istar = 5;
  skip.plus[0] = 1;
  skip.minus[2] = 1;
  skip.plus[3] = 1;
  skip.minus[5] = 1;
  skip.stairs[0] = Staircase::full(1, 1);
  skip.stairs[3] = Staircase::full(1, 1);
  CHECK(contains(validate_bracelet_spec(skip), "exclusion"));
  CHECK_THROWS_AS(gen_bracelet(skip, 1), std::invalid_argument);

  BraceletSpec unpaired = c7_spec();
  unpaired.plus[0] = 1;
  CHECK(contains(validate_bracelet_spec(unpaired), "pair"));
}

TEST_CASE("gen_emerald examples") {
  GenBracelet e = gen_emerald({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1);
  CHECK(e.g.n() == 11);
  CHECK(e.p.C.size() == 1);
  GenBracelet e3 = gen_emerald({3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 2);
  CHECK(e3.g.n() == 13);
  CHECK(e3.p.C.size() == 3);
  CHECK(oracle::brute_alpha(e3.g) == 3);
  CHECK_THROWS_AS(gen_emerald({1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1}, 1), std::invalid_argument);
}

TEST_CASE("gen_crown examples") {
  GenCrown c4 = gen_crown(4, std::vector<int>(10, 1), 1);
  CHECK(c4.g.n() == 10);
  CHECK(class_membership(c4.g).p7_free());
  GenCrown c3 = gen_crown(3, std::vector<int>(9, 1), 1);
  CHECK(c3.g.n() == 9);
  CHECK(class_membership(c3.g).p7_free());
  CHECK_THROWS_AS(gen_crown(5, std::vector<int>(9, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_crown(3, std::vector<int>(8, 1), 1), std::invalid_argument);
}

TEST_CASE("glue and add_universal_clique") {
  Graph two = fixture::glued_c7();
  CHECK(two.n() == 13);
  // one C7 per side of the cut vertex leaves room for an induced P7
  CHECK_FALSE(class_membership(two).p7_free());
  CHECK(class_membership(two).c4_free());

  Graph d = glue(complete_graph(3), complete_graph(3), {{0, 0}, {1, 1}});
  CHECK(d.n() == 4);
  CHECK(d.edge_count() == 5);

  Graph tail = glue(path_graph(7), complete_graph(2), {{6, 0}});
  CHECK(tail.n() == 8);
  CHECK_FALSE(class_membership(tail).p7_free());
  CHECK_THROWS_AS(glue(path_graph(3), complete_graph(2), {{0, 0}, {2, 1}}), std::invalid_argument);

  Graph w = add_universal_clique(cycle_graph(7), 1);
  CHECK(w.n() == 8);
  CHECK(w.degree(7) == 7);
  CHECK(add_universal_clique(fixture::theta(3), 0) == fixture::theta(3));
  AtomCertificate c = recognize_atom(add_universal_clique(fixture::theta(3), 2));
  CHECK(c.U.size() == 2);
}

TEST_CASE("generators are deterministic in the seed") {
  Rng a(101), b(101);
  for (int i = 0; i < 10; ++i) {
    CHECK(random_bracelet(a, 20).g == random_bracelet(b, 20).g);
    CHECK(random_lantern(a, 20).g == random_lantern(b, 20).g);
    CHECK(random_ring(a, 20).g == random_ring(b, 20).g);
  }
  auto c1 = make_corpus(7, 40, 16), c2 = make_corpus(7, 40, 16);
  for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i].g == c2[i].g);
}

TEST_CASE("generator outputs are class members with their shapes") {
  Rng rng(103);
  for (int it = 0; it < 40; ++it) {
    GenBracelet b = random_bracelet(rng, 16);
    CHECK(verify_bracelet(b.g, b.p, b.g.all().to_vector()).ok);
    CHECK(class_membership(b.g).in_class());
    CHECK(find_k_hole(b.g, 7));

    GenBracelet e = random_emerald(rng, 16);
    CHECK(verify_emerald(e.g, e.p, e.g.all().to_vector()).ok);
    CHECK(class_membership(e.g).in_class());
    CHECK(find_k_hole(e.g, 7));

    GenLantern l = random_lantern(rng, 16);
    CHECK(verify_lantern(l.g, l.p, l.g.all().to_vector()).ok);
    ClassReport lr = class_membership(l.g);
    CHECK(lr.in_class());
    CHECK_FALSE(lr.theta33_free());
    CHECK(lr.c7_free());

    GenRing r = random_ring(rng, 16);
    CHECK(verify_ring(r.g, r.p, r.g.all().to_vector()).ok);
    ClassReport rr = class_membership(r.g);
    CHECK(rr.in_class());
    CHECK(find_k_hole(r.g, 6));
    CHECK(rr.c7_free());

    GenCrown c = random_crown(rng, 16);
    CHECK(verify_crown(c.g, c.w.crown, c.g.all().to_vector()).ok);
    CHECK(class_membership(c.g).in_class());

    for (const Graph* g : {&b.g, &e.g, &l.g, &r.g, &c.g})
      if (g->n() <= 16) CHECK_FALSE(has_clique_cutset(*g));
  }
}

TEST_CASE("corpus covers every family inside the class") {
  auto corpus = make_corpus(107, 64, 14);
  std::map<std::string, int> seen;
  for (const auto& item : corpus) {
    ++seen[item.family];
    CHECK(item.g.n() <= 14);
    CHECK(class_membership(item.g).in_class());
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(make_corpus(1, 1, 11), std::invalid_argument);
}
