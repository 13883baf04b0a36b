#include "p7c/chordal.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/forge.hpp"
#include "p7c/oracles.hpp"
#include "p7c/patterns.hpp"
#include "p7c/report.hpp"
#include "p7c/solvers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace p7c;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClass = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;

struct Options {
  std::string graph_path, second_path, family = "bracelet", spec_path, out_prefix, weights_path;
  std::uint64_t seed = 1;
  int jobs = 1, max_oracle = -1, n = 14;
  int membership_limit = kPreconditionCheckLimit;
};

Json header(const std::string& cmd) { return Json{{"schema", 1}, {"command", cmd}}; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Weights load_weights(const std::string& path, int n) {
  if (path.empty()) return unit_weights(n);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weights file " + path);
  Weights w;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    w.push_back(parse_rational(line.substr(b, e - b + 1)));
  }
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("weights file has " + std::to_string(w.size()) + " values for " +
                                std::to_string(n) + " vertices");
  return w;
}

int cap_or(int override_cap, int dflt) { return override_cap >= 0 ? override_cap : dflt; }

int cmd_check(const Options& o) {
  Graph g = read_dimacs_file(o.graph_path);
  ClassReport r = class_membership(g);
  Json j = header("check");
  j["n"] = g.n();
  j["m"] = g.edge_count();
  j["report"] = to_json(r);
  emit(j);
  std::cerr << "n=" << g.n() << " m=" << g.edge_count() << "  P7-free " << (r.p7_free() ? "yes" : "no")
            << "  C4-free " << (r.c4_free() ? "yes" : "no") << "  C5-free " << (r.c5_free() ? "yes" : "no")
            << "  C7-free " << (r.c7_free() ? "yes" : "no") << "\n";
  return r.in_class() ? kExitOk : kExitClass;
}

int cmd_decompose(const Options& o) {
  Graph g = read_dimacs_file(o.graph_path);
  DecompTree t = decompose(g);
  Json j = header("decompose");
  j["n"] = g.n();
  j["tree"] = to_json(t);
  emit(j);
  std::cerr << t.leaves().size() << " atom(s)\n" << dump_tree(t);
  return kExitOk;
}

int cmd_recognize(const Options& o) {
  Graph g = read_dimacs_file(o.graph_path);
  require_membership(g, o.membership_limit);
  DecompTree t = decompose(g);
  Json atoms = Json::array();
  bool all_ok = true;
  for (int leaf : t.leaves()) {
    Graph a = t.node_graph(leaf);
    AtomCertificate c = recognize_atom(a);
    Verdict v = verify_certificate(a, c);
    all_ok &= v.ok;
    atoms.push_back(Json{{"vertices", t.nodes[leaf].vertices}, {"certificate", to_json(c)}, {"verification", to_json(v)}});
    std::cerr << "atom of " << a.n() << " vertices: " << kind_name(c.kind) << (v.ok ? "" : " (verification failed)")
              << "\n";
  }
  Json j = header("recognize");
  j["n"] = g.n();
  j["note"] = "certificate vertex ids are positions in each atom's vertex list";
  j["atoms"] = atoms;
  emit(j);
  return all_ok ? kExitOk : kExitSelfCheck;
}

int cmd_color(const Options& o) {
  Graph g = read_dimacs_file(o.graph_path);
  SolveOptions so;
  so.jobs = o.jobs;
  so.membership_limit = o.membership_limit;
  Coloring c = min_coloring(g, so);
  bool proper = oracle::is_proper_coloring(g, c.colors);
  Json ver{{"proper", proper}};
  bool agree = true;
  if (g.n() <= cap_or(o.max_oracle, oracle::kChromaticCap)) {
    int chi = oracle::brute_chromatic(g, cap_or(o.max_oracle, oracle::kChromaticCap));
    ver["oracle_chromatic"] = chi;
    agree = chi == c.count;
    ver["oracle_agrees"] = agree;
  }
  if (g.n() <= kPreconditionCheckLimit) ver["class_report"] = to_json(class_membership(g));
  Json j = header("color");
  j["problem"] = "min_coloring";
  j["optimum"] = c.count;
  j["coloring"] = to_json(c);
  j["verification"] = ver;
  emit(j);
  std::cerr << "colors: " << c.count << (proper ? "" : " (IMPROPER)") << "\n";
  return proper && agree ? kExitOk : kExitSelfCheck;
}

int cmd_set(const Options& o, bool clique) {
  Graph g = read_dimacs_file(o.graph_path);
  Weights w = load_weights(o.weights_path, g.n());
  SolveOptions so;
  so.jobs = o.jobs;
  so.membership_limit = o.membership_limit;
  WeightedSet s = clique ? max_weight_clique(g, w, so) : mwis(g, w, so);
  bool shape = true;
  for (std::size_t i = 0; i < s.vertices.size(); ++i)
    for (std::size_t k = i + 1; k < s.vertices.size(); ++k)
      if (g.adj(s.vertices[i], s.vertices[k]) != clique) shape = false;
  bool sum_ok = set_weight(s.vertices, w) == s.weight;
  Json ver{{clique ? "clique" : "stable", shape}, {"weight_matches", sum_ok}};
  bool agree = true;
  int cap = cap_or(o.max_oracle, oracle::kSetCap);
  if (g.n() <= cap) {
    auto b = clique ? oracle::brute_max_clique(g, w, cap) : oracle::brute_mwis(g, w, cap);
    ver["oracle_weight"] = to_string(b.weight);
    agree = b.weight == s.weight;
    ver["oracle_agrees"] = agree;
  }
  if (g.n() <= kPreconditionCheckLimit) ver["class_report"] = to_json(class_membership(g));
  Json j = header(clique ? "clique" : "mwis");
  j["problem"] = clique ? "max_weight_clique" : "mwis";
  j["optimum"] = to_string(s.weight);
  j["set"] = to_json(s);
  j["verification"] = ver;
  emit(j);
  std::cerr << (clique ? "clique" : "stable set") << " weight " << to_string(s.weight) << " on "
            << s.vertices.size() << " vertices\n";
  return shape && sum_ok && agree ? kExitOk : kExitSelfCheck;
}

Staircase stair_from(const Json& j, int rows, int cols) {
  Staircase s;
  s.rows = rows;
  s.cols = cols;
  s.f = j.get<std::vector<int>>();
  return s;
}

struct Generated {
  Graph g;
  AtomCertificate cert;
};

AtomCertificate base_cert(const Graph& g, AtomKind k) {
  AtomCertificate c;
  c.kind = k;
  c.core = g.all().to_vector();
  return c;
}

Generated generate(const Options& o) {
  Generated out;
  Json spec;
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw std::invalid_argument("cannot open spec file " + o.spec_path);
    spec = Json::parse(in);
  }
  const bool has = !spec.is_null();
  Rng rng(o.seed);
  const std::string& f = o.family;
  if (f == "ring" || f == "ring6") {
    GenRing r;
    if (has) {
      auto sizes = spec.at("sizes").get<std::array<int, 6>>();
      std::array<Staircase, 6> st;
      for (int i = 0; i < 6; ++i)
        st[i] = spec.contains("stairs") ? stair_from(spec["stairs"][i], sizes[i], sizes[(i + 1) % 6])
                                        : Staircase::full(sizes[i], sizes[(i + 1) % 6]);
      r = gen_ring6(sizes, st, o.seed);
    } else {
      r = random_ring(rng, o.n);
    }
    out.g = r.g;
    WreathOrCrown wc = classify_wreath_or_crown(r.g, r.p);
    out.cert = base_cert(r.g, wc.wreath ? AtomKind::Wreath : AtomKind::Crown);
    out.cert.ring = wc.ring;
    out.cert.crown = wc.crown;
  } else if (f == "lantern") {
    GenLantern l;
    if (has) {
      LanternSizes s;
      int r = spec.at("r").get<int>();
      s.a = spec.value("a", 1);
      s.d = spec.value("d", 1);
      s.b = spec.contains("b") ? spec["b"].get<std::vector<int>>() : std::vector<int>(r, 1);
      s.c = spec.contains("c") ? spec["c"].get<std::vector<int>>() : std::vector<int>(r, 1);
      Staircase st = spec.contains("stair1") ? stair_from(spec["stair1"], s.b[0], s.c[0])
                                             : Staircase::full(s.b[0], s.c[0]);
      l = gen_lantern(r, s, st, o.seed);
    } else {
      l = random_lantern(rng, o.n);
    }
    out.g = l.g;
    out.cert = base_cert(l.g, AtomKind::Lantern);
    out.cert.lantern = l.p;
  } else if (f == "bracelet" || f == "emerald") {
    GenBracelet b;
    bool em = f == "emerald";
    if (has && em) {
      b = gen_emerald(spec.at("sizes").get<std::array<int, 11>>(), o.seed);
    } else if (has) {
      BraceletSpec s;
      s.star = spec.at("star").get<std::array<int, 7>>();
      s.plus = spec.value("plus", std::array<int, 7>{});
      s.minus = spec.value("minus", std::array<int, 7>{});
      s.istar = spec.value("istar", 0);
      if (spec.contains("stairs"))
        for (auto& [k, v] : spec["stairs"].items()) {
          int i = std::stoi(k);
          s.stairs[i] = stair_from(v, s.plus[i % 7], s.minus[(i + 2) % 7]);
        }
      for (int i = 0; i < 7; ++i)
        if (!s.stairs.count(i) && s.plus[i] > 0 && s.minus[(i + 2) % 7] > 0)
          s.stairs[i] = Staircase::full(s.plus[i], s.minus[(i + 2) % 7]);
      b = gen_bracelet(s, o.seed);
    } else {
      b = em ? random_emerald(rng, o.n) : random_bracelet(rng, o.n);
    }
    out.g = b.g;
    out.cert = base_cert(b.g, em ? AtomKind::Emerald : AtomKind::Bracelet);
    out.cert.bracelet = b.p;
  } else if (f == "crown") {
    GenCrown c = has ? gen_crown(spec.at("kind").get<int>(), spec.at("sizes").get<std::vector<int>>(), o.seed)
                     : random_crown(rng, o.n);
    out.g = c.g;
    out.cert = base_cert(c.g, AtomKind::Crown);
    out.cert.ring = c.w.ring;
    out.cert.crown = c.w.crown;
  } else {
    throw std::invalid_argument("unknown family " + f + " (ring, lantern, bracelet, emerald, crown)");
  }
  return out;
}

int cmd_gen(const Options& o) {
  Generated gen = generate(o);
  std::ostringstream dimacs;
  write_dimacs(dimacs, gen.g, "family " + o.family + " seed " + std::to_string(o.seed));
  Verdict v = verify_certificate(gen.g, gen.cert);
  Json j = header("gen");
  j["family"] = o.family;
  j["seed"] = o.seed;
  j["n"] = gen.g.n();
  j["m"] = gen.g.edge_count();
  j["certificate"] = to_json(gen.cert);
  j["verification"] = to_json(v);
  if (o.out_prefix.empty()) {
    j["dimacs"] = dimacs.str();
  } else {
    std::ofstream(o.out_prefix + ".dimacs") << dimacs.str();
    std::ofstream(o.out_prefix + ".cert.json") << to_json(gen.cert).dump(2) << "\n";
    j["files"] = Json{o.out_prefix + ".dimacs", o.out_prefix + ".cert.json"};
  }
  emit(j);
  std::cerr << o.family << ": n=" << gen.g.n() << " m=" << gen.g.edge_count() << "\n";
  return v.ok ? kExitOk : kExitSelfCheck;
}

int cmd_verify(const Options& o) {
  Graph g = read_dimacs_file(o.graph_path);
  std::ifstream in(o.second_path);
  if (!in) throw std::invalid_argument("cannot open certificate file " + o.second_path);
  AtomCertificate c = certificate_from_json(Json::parse(in));
  Verdict v = verify_certificate(g, c);
  Json j = header("verify");
  j["kind"] = kind_name(c.kind);
  j["verification"] = to_json(v);
  emit(j);
  std::cerr << kind_name(c.kind) << " certificate " << (v.ok ? "passes" : "fails") << "\n";
  for (const auto& s : v.violations) std::cerr << "  " << s << "\n";
  return v.ok ? kExitOk : kExitClass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p7c: structure and exact optimization for (P7,C4,C5)-free graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for generators");
  app.add_option("--jobs", o.jobs, "worker threads for independent atoms")->check(CLI::PositiveNumber);
  app.add_option("--weights", o.weights_path, "one rational weight per line, vertex order");
  app.add_option("--max-oracle", o.max_oracle, "size cap for brute-force cross-checks");
  app.add_option("--membership-limit", o.membership_limit, "check class membership up to this many vertices, 0 to skip")
      ->check(CLI::NonNegativeNumber);

  auto graph_cmd = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("graph", o.graph_path, "DIMACS graph file")->required();
    return c;
  };
  auto* check = graph_cmd("check", "report forbidden induced subgraphs");
  auto* decomp = graph_cmd("decompose", "clique-cutset decomposition tree");
  auto* recog = graph_cmd("recognize", "certify every atom");
  auto* color = graph_cmd("color", "minimum coloring");
  auto* mw = graph_cmd("mwis", "maximum weight stable set");
  auto* cl = graph_cmd("clique", "maximum weight clique");
  auto* verify = graph_cmd("verify", "check an atom certificate");
  verify->add_option("certificate", o.second_path, "certificate JSON")->required();
  auto* gen = app.add_subcommand("gen", "generate an atom");
  gen->add_option("family", o.family, "ring, lantern, bracelet, emerald or crown")->required();
  gen->add_option("--spec", o.spec_path, "JSON spec; random instance when absent");
  gen->add_option("--n", o.n, "size budget for random instances");
  gen->add_option("--out", o.out_prefix, "write <prefix>.dimacs and <prefix>.cert.json");
  for (auto* sub : {check, decomp, recog, color, mw, cl, verify, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*check) return cmd_check(o);
    if (*decomp) return cmd_decompose(o);
    if (*recog) return cmd_recognize(o);
    if (*color) return cmd_color(o);
    if (*mw) return cmd_set(o, false);
    if (*cl) return cmd_set(o, true);
    if (*gen) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
  } catch (const ClassViolation& e) {
    Json j = header("error");
    j["error"] = "class_violation";
    j["message"] = e.what();
    j["witness"] = e.witness;
    emit(j);
    std::cerr << "class violation: " << e.what() << "\n";
    return kExitClass;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
