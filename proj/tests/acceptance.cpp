// One PASS/FAIL line per acceptance criterion. Exit status is 0 when the set
// of failing criteria equals --known-failures (empty by default).

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "a22/baker.hpp"
#include "a22/characteristics.hpp"
#include "a22/igraph.hpp"
#include "a22/runge.hpp"
#include "a22/search.hpp"
#include "a22/symplectic.hpp"
#include "a22/theta.hpp"
#include "a22/theta_suite.hpp"
#include "a22/variety.hpp"
#include "golden_quadruples.hpp"

using namespace a22;

namespace {

// Pinned tolerances and budgets.
constexpr double kSumTolerance = 1e-6;
constexpr double kThetaTol = 1e-12;
constexpr double kResidualMax = 1e-9;
constexpr double kSplittingMax = 1e-9;
constexpr double kRosenhainMax = 1e-8;
constexpr std::uint64_t kThetaSeed = 20240601;

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::set<std::uint16_t> golden(const std::array<std::array<std::string_view, 4>, 15>& table) {
  std::set<std::uint16_t> out;
  for (const auto& row : table) {
    IndexSet s;
    for (auto c : row) s.insert(*chars::Characteristic::parse(c).index());
    out.insert(s.mask());
  }
  return out;
}

std::set<std::uint16_t> masks(const std::vector<IndexSet>& v) {
  std::set<std::uint16_t> out;
  for (auto s : v) out.insert(s.mask());
  return out;
}

void census(Outcome& o) {
  using chars::Kind;
  const std::map<Kind, std::size_t> expected{{Kind::even_chars, 10},     {Kind::syzygous_triples, 60},
                                             {Kind::azygous_triples, 60}, {Kind::goepel_quads, 15},
                                             {Kind::azygous_quads, 15}};
  for (auto [kind, n] : expected) {
    const auto got = chars::enumerate(kind).size();
    o.require(got == n, std::string(chars::kind_name(kind)) + " count " + std::to_string(got));
  }
  o.require(masks(chars::enumerate(Kind::goepel_quads)) == golden(kGoepelTable), "Goepel list");
  o.require(masks(chars::enumerate(Kind::azygous_quads)) == golden(kAzygousTable), "azygous quadruple list");
  o.note("counts 10/60/60/15/15, both quadruple lists match");
}

void group_facts(Outcome& o) {
  const auto& g = sp::Group::instance();
  o.require(g.order() == 720, "group order " + std::to_string(g.order()));
  const auto syz = chars::enumerate(chars::Kind::syzygous_triples)[0];
  const auto azy = chars::enumerate(chars::Kind::azygous_triples)[0];
  const auto gq = chars::enumerate(chars::Kind::goepel_quads)[0];
  const auto aq = chars::enumerate(chars::Kind::azygous_quads)[0];
  const std::vector<std::pair<IndexSet, std::size_t>> orbits{
      {IndexSet{1, 2}, 45}, {syz, 60}, {azy, 60}, {gq, 15}, {aq, 15}};
  for (auto [seed, n] : orbits) {
    const auto size = g.orbit(seed).size();
    o.require(size == n, "orbit of " + seed.to_string() + " has size " + std::to_string(size));
  }
  o.require(sp::epsilon(1, 2) == 1 && sp::epsilon(5, 10) == -1 && sp::epsilon(6, 9) == -1 && sp::epsilon(7, 8) == 1,
            "epsilon examples");
  int holds = 0, total = 0;
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j)
      for (int k = j + 1; k <= 10; ++k) {
        ++total;
        holds += sp::epsilon(i, j) * sp::epsilon(j, k) * sp::epsilon(i, k) == 1;
      }
  o.note("order 720, orbits 45, 60/60, 15/15, epsilon examples match");
  o.note("cocycle identity holds on " + std::to_string(holds) + "/" + std::to_string(total) +
         " triples (the product equals (-1)^e, failing on the azygous ones)");
  o.require(holds == total, "cocycle identity on all triples");
}

void graph_over_q(Outcome& o) {
  using igraph::Family;
  const auto w = variety::enumerate_small_points(Domain::rationals());
  const auto g = igraph::build_graph(Domain::rationals(), w);
  std::vector<int> profile;
  for (int n : g.depth_profile())
    if (n) profile.push_back(n);
  o.require(profile == std::vector<int>{10, 45, 60, 15, 15}, "depth profile");

  bool inclusions = true;
  for (unsigned m = 1; m < 1023; ++m) {
    const auto s = IndexSet::from_mask(static_cast<std::uint16_t>(m));
    const bool optimal = igraph::witness_closure(s, w) == s;
    const auto f = igraph::classify(s);
    const bool family = f == Family::singleton || f == Family::pair || f == Family::syzygous_triple ||
                        f == Family::azygous_quadruple || f == Family::goepel_complement;
    inclusions = inclusions && optimal == family && (!optimal || g.find(s).has_value());
  }
  o.require(inclusions, "optimal sets equal the five families");

  std::map<Family, std::map<Family, int>> children;
  for (const auto& v : g.vertices) {
    std::map<Family, int> c;
    for (auto k : v.children) ++c[g.vertices[k].family];
    children[v.family] = c;
  }
  auto count = [&](Family a, Family b) { return children[a][b]; };
  const int single = count(Family::singleton, Family::pair);
  const int pair_syz = count(Family::pair, Family::syzygous_triple);
  const int pair_azq = count(Family::pair, Family::azygous_quadruple);
  const int syz_gc = count(Family::syzygous_triple, Family::goepel_complement);
  const int azq_gc = count(Family::azygous_quadruple, Family::goepel_complement);
  std::ostringstream os;
  os << "children (" << single << "; " << pair_syz << "+" << pair_azq << "; " << syz_gc << "; " << azq_gc
     << "), expected (9; 4+4; 2; 3)";
  o.note("profile (10, 45, 60, 15, 15), optimal sets = five families (both inclusions), " +
         std::to_string(g.vertices.size()) + " vertices");
  o.note(os.str() + "; each pair lies in exactly 2 of the 15 azygous quadruples (15*6/45)");
  o.require(single == 9 && pair_syz == 4 && pair_azq == 4 && syz_gc == 2 && azq_gc == 3, "children counts");
}

void char_p(Outcome& o) {
  const auto q = igraph::build_graph(Domain::rationals());
  for (unsigned p : {5u, 7u}) {
    const auto d = igraph::compare_graphs(q, igraph::build_graph(Domain::prime_field(p)));
    o.require(d.empty(), "F_" + std::to_string(p) + " graph differs from Q");
  }
  const auto p2 = variety::ProjectivePoint::from_integers({0, 0, 0, 0, 1, 1, 1, 1, 1, 1}, Domain::prime_field(2));
  const auto p3 = variety::ProjectivePoint::from_integers({0, 0, 0, 0, 1, -1, 1, -1, 1, -1}, Domain::prime_field(3));
  o.require(variety::is_on_variety(p2), "F_2 point");
  o.require(variety::is_on_variety(p3), "F_3 point");
  o.note("F_5 and F_7 graphs equal the Q graph; both special points lie on the model");
}

void corollary_search(Outcome& o) {
  search::SearchConfig cfg;
  cfg.height_bound = 4.0;
  const auto r = search::run_search(cfg);
  const auto& c = r.certificate;
  o.require(r.points.empty(), "search returned points");
  o.require(c.free_tuples == 248832, "free tuple count " + std::to_string(c.free_tuples));
  o.require(c.candidates == c.free_tuples, "every tuple is a candidate");
  std::uint64_t rejected = 0;
  for (auto n : c.rejected_per_solved_coordinate) rejected += n;
  o.require(rejected + c.quartic_tested == c.candidates, "certificate accounts for every candidate");
  o.note("0 points, 248832 free tuples, " + std::to_string(rejected) + " rejected on solved coordinates, " +
         std::to_string(c.quartic_tested) + " reached the quartic; sha256 " + c.config_hash.substr(0, 16));
}

void runge_bounds(Outcome& o) {
  const auto generic = runge::runge_bound(runge::SProfile::generic());
  const double expect_generic = std::log(27.0) + 6 * std::log(2.0) + std::log(3.0);
  o.require(std::abs(generic.height_bound - expect_generic) < kSumTolerance, "generic sum");
  o.require(generic.height_bound <= 8.6, "generic bound <= 8.6");
  runge::SProfile cor;
  cor.contains_place_over_2 = true;
  cor.contains_place_over_3 = false;
  const auto c = runge::runge_bound(cor);
  const double expect_cor = std::log(27.0) + std::log(2.0);
  o.require(std::abs(c.height_bound - expect_cor) < kSumTolerance, "corollary sum");
  o.require(c.height_bound <= 4.0, "corollary bound <= 4");
  o.note(fmt("log27+6log2+log3 = %.6f <= 8.6", generic.height_bound) +
         fmt(", log27+log2 = %.6f <= 4", c.height_bound));
}

void baker_constants(Outcome& o) {
  using baker::Regime;
  const auto a = baker::constants(18, 9, Regime::archimedean);
  const auto n = baker::constants(18, 9, Regime::non_archimedean);
  auto in = [](double v, double lo, double hi) { return v > lo && v <= hi; };
  o.require(in(a.c1, 1e35, 8e35), "archimedean C1");
  o.require(in(a.c2, 1e12, 5e13), "archimedean C2");
  o.require(in(n.c1, 1e59, 7e59), "non-archimedean C1");
  o.require(in(n.c2, 1e11, 3e12), "non-archimedean C2");
  const auto ha = baker::headline_coefficient(18, 9, Regime::archimedean);
  const auto hn = baker::headline_coefficient(18, 9, Regime::non_archimedean);
  o.require(ha.hi() <= 1e66 && hn.hi() <= 1e66, "headline inequality");
  o.note(fmt("arch C1=%.4g", a.c1) + fmt(" C2=%.4g", a.c2) + fmt("; non-arch C1=%.4g", n.c1) +
         fmt(" C2=%.4g", n.c2) + fmt("; headline upper ends %.4g", ha.hi()) + fmt(" / %.4g <= 1e66", hn.hi()));
}

void theta_certification(Outcome& o) {
  const auto eq = theta::run_suite("equations", 100, kThetaSeed, kThetaTol);
  const auto mod = theta::run_suite("modularity", 20, kThetaSeed, kThetaTol);
  const auto split = theta::run_suite("splitting", 100, kThetaSeed, kThetaTol);
  const auto small = theta::run_suite("smallsets", 100, kThetaSeed, kThetaTol);
  const auto ros = theta::run_suite("rosenhain", 100, kThetaSeed, kThetaTol);
  o.require(eq.passed && eq.worst < kResidualMax, "equation residuals");
  o.require(mod.passed, "modularity common constant");
  o.require(split.passed && split.worst < kSplittingMax, "diagonal splitting");
  o.require(small.passed, "small-set verdict");
  o.require(ros.passed && ros.worst < kRosenhainMax, "Rosenhain agreement");
  o.note(fmt("residual %.2e", eq.worst) + fmt(", modularity spread %.2e", mod.worst) +
         fmt(", splitting %.2e", split.worst) + fmt(", Rosenhain %.2e", ros.worst) + ", small sets ok");
}

void exclusion_set(Outcome& o) {
  const auto points = variety::enumerate_small_points(Domain::rationals());
  std::size_t ok = 0;
  for (const auto& p : points) ok += theta::fixed_point_check(p).biconditional_holds;
  o.require(ok == points.size(), "biconditional on small points");
  const auto q = variety::ProjectivePoint::from_integers({0, 0, 1, 1, 0, 0, -1, -1, 0, 0});
  o.require(variety::apply_signed_map(q, sp::exclusion_involution()) == q, "M.Q = Q");
  o.note("biconditional holds for all 45 pairs on " + std::to_string(ok) + "/" + std::to_string(points.size()) +
         " small rational points; M.Q = Q");
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string known;
  app.add_option("--known-failures", known, "comma-separated criteria expected to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "combinatorial census", 1, census},
      {2, "group facts", 5, group_facts},
      {3, "graph of intersection over Q", 30, graph_over_q},
      {4, "characteristic p", 600, char_p},
      {5, "height-4 search", 60, corollary_search},
      {6, "Runge bounds", 1, runge_bounds},
      {7, "Baker constants", 1, baker_constants},
      {8, "theta certification", 120, theta_certification},
      {9, "exclusion-set criterion", 10, exclusion_set},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.budget_seconds, fmt("time budget %.0f s", c.budget_seconds));
    if (!o.passed) failed.insert(c.number);
    std::printf("criterion %d: %s  %-30s %8.3f s\n", c.number, o.passed ? "PASS" : "FAIL", c.title.c_str(), secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  }
  const auto expected = parse_list(known);
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing set differs from --known-failures\n");
    return 1;
  }
  return 0;
}
