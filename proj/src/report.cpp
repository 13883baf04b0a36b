#include "p7c/report.hpp"

#include <stdexcept>

namespace p7c {

namespace {

const char* kind_tag(PatternKind k) {
  switch (k) {
    case PatternKind::Path: return "path";
    case PatternKind::Hole: return "hole";
    case PatternKind::Theta33: return "theta33";
  }
  return "?";
}

Json opt_witness(const std::optional<PatternWitness>& w) { return w ? to_json(*w) : Json(nullptr); }

std::vector<int> ints(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("certificate json: missing ") + key);
  return j.at(key).get<std::vector<int>>();
}

AtomKind kind_from(const std::string& s) {
  for (AtomKind k : {AtomKind::Complete, AtomKind::Ring6, AtomKind::Wreath, AtomKind::Crown, AtomKind::Lantern,
                     AtomKind::Bracelet, AtomKind::Emerald})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("certificate json: unknown kind " + s);
}

}  // namespace

Json to_json(const PatternWitness& w) {
  return Json{{"name", w.name()}, {"kind", kind_tag(w.kind)}, {"vertices", w.vertices}};
}

Json to_json(const ClassReport& r) {
  Json j;
  j["in_class"] = r.in_class();
  j["p7_free"] = r.p7_free();
  j["c4_free"] = r.c4_free();
  j["c5_free"] = r.c5_free();
  j["c7_free"] = r.c7_free();
  j["theta33_free"] = r.theta33_free();
  j["witnesses"] = Json{{"P7", opt_witness(r.p7)},
                        {"C4", opt_witness(r.c4)},
                        {"C5", opt_witness(r.c5)},
                        {"C7", opt_witness(r.c7)},
                        {"Theta33", opt_witness(r.theta33)}};
  return j;
}

Json to_json(const AtomCertificate& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["U"] = c.U;
  j["core"] = c.core;
  switch (c.kind) {
    case AtomKind::Complete:
      break;
    case AtomKind::Ring6:
    case AtomKind::Wreath:
      j["X"] = c.ring.X;
      break;
    case AtomKind::Crown:
      j["X"] = c.ring.X;
      j["C"] = c.crown.C;
      j["D"] = c.crown.D;
      j["istar"] = c.crown.istar;
      break;
    case AtomKind::Lantern:
      j["r"] = c.lantern.r;
      j["A"] = c.lantern.A;
      j["D"] = c.lantern.D;
      j["B"] = c.lantern.B;
      j["C"] = c.lantern.C;
      break;
    case AtomKind::Bracelet:
    case AtomKind::Emerald:
      j["istar"] = c.bracelet.istar;
      j["star"] = c.bracelet.star;
      j["plus"] = c.bracelet.plus;
      j["minus"] = c.bracelet.minus;
      if (c.kind == AtomKind::Emerald) j["C"] = c.bracelet.C;
      break;
  }
  return j;
}

AtomCertificate certificate_from_json(const Json& j) {
  AtomCertificate c;
  try {
    c.kind = kind_from(j.at("kind").get<std::string>());
    c.U = ints(j, "U");
    c.core = ints(j, "core");
    switch (c.kind) {
      case AtomKind::Complete:
        break;
      case AtomKind::Ring6:
      case AtomKind::Wreath:
        c.ring.X = j.at("X").get<std::array<std::vector<int>, 6>>();
        break;
      case AtomKind::Crown:
        c.ring.X = j.at("X").get<std::array<std::vector<int>, 6>>();
        c.crown.C = j.at("C").get<std::array<std::vector<int>, 6>>();
        c.crown.D = j.at("D").get<std::array<std::vector<int>, 6>>();
        c.crown.istar = j.at("istar").get<int>();
        break;
      case AtomKind::Lantern:
        c.lantern.r = j.at("r").get<int>();
        c.lantern.A = ints(j, "A");
        c.lantern.D = ints(j, "D");
        c.lantern.B = j.at("B").get<std::vector<std::vector<int>>>();
        c.lantern.C = j.at("C").get<std::vector<std::vector<int>>>();
        break;
      case AtomKind::Bracelet:
      case AtomKind::Emerald:
        c.bracelet.istar = j.at("istar").get<int>();
        c.bracelet.star = j.at("star").get<std::array<std::vector<int>, 7>>();
        c.bracelet.plus = j.at("plus").get<std::array<std::vector<int>, 7>>();
        c.bracelet.minus = j.at("minus").get<std::array<std::vector<int>, 7>>();
        if (c.kind == AtomKind::Emerald) c.bracelet.C = ints(j, "C");
        break;
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate json: ") + e.what());
  }
  return c;
}

Json to_json(const DecompTree& t) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    Json j{{"id", i}, {"vertices", nd.vertices}};
    if (nd.is_leaf()) {
      j["leaf"] = true;
    } else {
      j["leaf"] = false;
      j["cutset"] = nd.cutset;
      j["left"] = nd.left;
      j["right"] = nd.right;
    }
    nodes.push_back(j);
  }
  return Json{{"nodes", nodes}, {"atoms", t.leaves()}};
}

Json to_json(const ArcRepresentation& rep) {
  Json arcs = Json::array();
  for (const auto& a : rep.arcs) arcs.push_back({to_fraction_string(a.start), to_fraction_string(a.end)});
  return Json{{"circumference", to_fraction_string(rep.circumference)}, {"arcs", arcs}};
}

Json to_json(const Verdict& v) { return Json{{"ok", v.ok}, {"violations", v.violations}}; }

Json to_json(const Coloring& c) { return Json{{"count", c.count}, {"colors", c.colors}}; }

Json to_json(const WeightedSet& s) {
  return Json{{"weight", to_string(s.weight)}, {"vertices", s.vertices}, {"oracle_fallbacks", s.oracle_fallbacks}};
}

}  // namespace p7c
