#include "fixtures.hpp"
#include "p7c/atoms.hpp"
#include "p7c/chordal.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace p7c;

namespace {

bool any_fail_starts(const Verdict& v, const std::string& prefix) {
  for (const auto& s : v.violations)
    if (s.rfind(prefix, 0) == 0) return true;
  return false;
}

std::vector<int> sizes_of(const std::vector<std::vector<int>>& parts) {
  std::vector<int> s;
  for (const auto& p : parts) s.push_back(static_cast<int>(p.size()));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("recognize_atom examples") {
  AtomCertificate c7 = recognize_atom(cycle_graph(7));
  CHECK(c7.kind == AtomKind::Bracelet);
  CHECK(c7.U.empty());
  for (int i = 0; i < 7; ++i) {
    CHECK(c7.bracelet.part(i).size() == 1);
    CHECK(c7.bracelet.plus[i].empty());
    CHECK(c7.bracelet.minus[i].empty());
  }
  CHECK(verify_certificate(cycle_graph(7), c7).ok);

  AtomCertificate th = recognize_atom(fixture::theta(3));
  CHECK(th.kind == AtomKind::Lantern);
  CHECK(th.lantern.r == 3);
  CHECK(th.lantern.A.size() == 1);
  CHECK(th.lantern.D.size() == 1);
  CHECK(sizes_of(th.lantern.B) == std::vector<int>{1, 1, 1});
  CHECK(sizes_of(th.lantern.C) == std::vector<int>{1, 1, 1});

  AtomCertificate c6 = recognize_atom(cycle_graph(6));
  CHECK(c6.kind == AtomKind::Wreath);
  CHECK(c6.U.empty());

  AtomCertificate k4 = recognize_atom(complete_graph(4));
  CHECK(k4.kind == AtomKind::Complete);
  CHECK(k4.U.size() == 4);

  AtomCertificate joined = recognize_atom(fixture::join_clique(fixture::theta(3), 2));
  CHECK(joined.kind == AtomKind::Lantern);
  CHECK(joined.U == std::vector<int>{8, 9});
}

TEST_CASE("recognize_atom rejects inputs outside the class") {
  CHECK_THROWS_AS(recognize_atom(cycle_graph(5)), ClassViolation);
  CHECK_THROWS_AS(recognize_atom(path_graph(7)), ClassViolation);
  CHECK_THROWS_AS(recognize_atom(fixture::diamond()), ClassViolation);
  try {
    recognize_atom(cycle_graph(4));
    FAIL("expected a class violation");
  } catch (const ClassViolation& e) {
    CHECK(e.witness.size() == 4);
  }
}

TEST_CASE("build_bracelet_from_hole examples") {
  Graph c7 = cycle_graph(7);
  BraceletBuild b = build_bracelet_from_hole(c7, {0, 1, 2, 3, 4, 5, 6});
  REQUIRE(b.ok);
  CHECK_FALSE(b.emerald);
  for (int i = 0; i < 7; ++i) CHECK(b.partition.part(i) == std::vector<int>{i});
  CHECK(b.partition.C.empty());

  Graph em = fixture::emerald();
  int holes = 0;
  for_each_k_hole(em, 7, [&](const std::vector<int>& h) {
    BraceletBuild e = build_bracelet_from_hole(em, h);
    if (e.ok) {
      CHECK(e.emerald);
      CHECK(e.partition.C.size() == 1);
      CHECK(verify_emerald(em, e.partition, em.all().to_vector()).ok);
    }
    ++holes;
    return true;
  });
  CHECK(holes > 0);

  Graph blow = fixture::blow_up_cycle({2, 1, 1, 1, 1, 1, 1});
  auto h = find_k_hole(blow, 7);
  REQUIRE(h);
  CHECK(h->vertices.front() == 0);
  BraceletBuild bb = build_bracelet_from_hole(blow, h->vertices);
  REQUIRE(bb.ok);
  CHECK(bb.partition.part(0) == std::vector<int>{0, 1});
  for (int i = 0; i < 7; ++i) {
    CHECK(bb.partition.plus[i].empty());
    CHECK(bb.partition.minus[i].empty());
  }
}

TEST_CASE("recognize_ring6 examples") {
  auto c6 = recognize_ring6(cycle_graph(6));
  REQUIRE(c6);
  for (const auto& x : c6->X) CHECK(x.size() == 1);

  GenCrown c64 = gen_crown(4, std::vector<int>(10, 1), 3);
  CHECK(c64.g.n() == 10);
  auto r = recognize_ring6(c64.g);
  REQUIRE(r);
  CHECK(verify_ring(c64.g, *r, c64.g.all().to_vector()).ok);
  int total = 0;
  for (const auto& x : r->X) total += static_cast<int>(x.size());
  CHECK(total == 10);

  CHECK_FALSE(recognize_ring6(cycle_graph(7)));
}

TEST_CASE("recognize_lantern examples") {
  auto th = recognize_lantern(fixture::theta(3));
  REQUIRE(th);
  CHECK(th->r == 3);

  LanternSizes s;
  s.b = {1, 3, 1, 1};
  s.c = {1, 1, 1, 1};
  GenLantern l = gen_lantern(4, s, Staircase::full(1, 1), 5);
  auto r = recognize_lantern(l.g);
  REQUIRE(r);
  CHECK(r->r == 4);
  // A and D are interchangeable, so the thick arm part may come back as a C part
  std::vector<int> thick{1, 1, 1, 3};
  CHECK((sizes_of(r->B) == thick || sizes_of(r->C) == thick));
  CHECK(verify_lantern(l.g, *r, l.g.all().to_vector()).ok);

  CHECK_FALSE(recognize_lantern(cycle_graph(6)));
}

TEST_CASE("classify_wreath_or_crown examples") {
  Graph c6 = cycle_graph(6);
  CHECK(classify_wreath_or_crown(c6, *recognize_ring6(c6)).wreath);

  GenCrown c63 = gen_crown(3, std::vector<int>(9, 1), 4);
  CHECK(c63.g.n() == 9);
  auto wc = classify_wreath_or_crown(c63.g, *recognize_ring6(c63.g));
  REQUIRE_FALSE(wc.wreath);
  int nonempty = 0;
  for (const auto& d : wc.crown.D) nonempty += !d.empty();
  CHECK(nonempty == 3);
  CHECK(verify_crown(c63.g, wc.crown, c63.g.all().to_vector()).ok);

  Graph hyper = fixture::blow_up_cycle({2, 2, 2, 2, 2, 2});
  auto hw = classify_wreath_or_crown(hyper, *recognize_ring6(hyper));
  CHECK(hw.wreath);
  CHECK(verify_wreath(hyper, hw.ring, hyper.all().to_vector()).ok);
}

TEST_CASE("verify_certificate examples") {
  Graph c7 = cycle_graph(7);
  AtomCertificate cert = recognize_atom(c7);
  CHECK(verify_certificate(c7, cert).ok);

  AtomCertificate bad = cert;
  std::swap(bad.bracelet.star[0], bad.bracelet.star[2]);
  Verdict v = verify_certificate(c7, bad);
  CHECK_FALSE(v.ok);
  CHECK(any_fail_starts(v, "I:"));

  Graph em = fixture::emerald();
  AtomCertificate ec = recognize_atom(em);
  CHECK(ec.kind == AtomKind::Emerald);
  CHECK(verify_certificate(em, ec).ok);

  AtomCertificate missing = ec;
  missing.core.pop_back();
  CHECK_FALSE(verify_certificate(em, missing).ok);
}

TEST_CASE("dominance_order") {
  // star: centre 0 has the largest closed neighbourhood
  Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(dominance_order(g, {3, 2, 1, 0}) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("round trip over generated atoms") {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    struct Case {
      Graph g;
      std::vector<AtomKind> kinds;
    };
    std::vector<Case> cases;
    GenRing ring = random_ring(rng, 16);
    WreathOrCrown wc = classify_wreath_or_crown(ring.g, ring.p);
    cases.push_back({ring.g, {wc.wreath ? AtomKind::Wreath : AtomKind::Crown}});
    cases.push_back({random_crown(rng, 16).g, {AtomKind::Crown}});
    cases.push_back({random_lantern(rng, 16).g, {AtomKind::Lantern}});
    cases.push_back({random_bracelet(rng, 16).g, {AtomKind::Bracelet}});
    cases.push_back({random_emerald(rng, 16).g, {AtomKind::Emerald}});
    for (const auto& c : cases) {
      AtomCertificate cert = recognize_atom(c.g);
      CHECK(std::find(c.kinds.begin(), c.kinds.end(), cert.kind) != c.kinds.end());
      CHECK(verify_certificate(c.g, cert).ok);
      CHECK(class_membership(c.g).in_class());
      if (c.g.n() <= 16) CHECK_FALSE(has_clique_cutset(c.g));
    }
  }
}

TEST_CASE("ring and lantern recognizers stay off seven-hole cores") {
  Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    Graph b = it % 2 ? random_bracelet(rng, 18).g : random_emerald(rng, 18).g;
    CHECK_FALSE((recognize_ring6(b) && recognize_lantern(b)));
    CHECK_FALSE(recognize_ring6(b));
  }
}

TEST_CASE("bracelet and emerald stability number is three") {
  Rng rng(47);
  for (int it = 0; it < 40; ++it) {
    CHECK(oracle::brute_alpha(random_bracelet(rng, 18).g) == 3);
    CHECK(oracle::brute_alpha(random_emerald(rng, 18).g) == 3);
  }
}

TEST_CASE("lantern and ring holes have length six") {
  Rng rng(53);
  for (int it = 0; it < 40; ++it) {
    auto hl = oracle::hole_census(random_lantern(rng, 16).g);
    CHECK(hl.size() == 1);
    CHECK(hl.count(6) == 1);
    auto hr = oracle::hole_census(random_ring(rng, 16).g);
    CHECK(hr.size() == 1);
    CHECK(hr.count(6) == 1);
  }
}

TEST_CASE("non-neighbourhoods are chordal") {
  Rng rng(59);
  for (int it = 0; it < 30; ++it) {
    for (const Graph& g : {random_ring(rng, 16).g, random_crown(rng, 16).g, random_lantern(rng, 16).g,
                           random_bracelet(rng, 16).g, random_emerald(rng, 16).g}) {
      for (int v = 0; v < g.n(); ++v) {
        VertexSet rest = g.all() - g.closed_nbr(v);
        if (rest.empty()) continue;
        CHECK(perfect_elimination_order(induced(g, rest)).chordal());
      }
    }
  }
}
