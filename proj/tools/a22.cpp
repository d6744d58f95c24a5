// Command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "a22/baker.hpp"
#include "a22/characteristics.hpp"
#include "a22/errors.hpp"
#include "a22/igraph.hpp"
#include "a22/runge.hpp"
#include "a22/search.hpp"
#include "a22/symplectic.hpp"
#include "a22/theta_suite.hpp"
#include "a22/variety.hpp"

using nlohmann::json;
using namespace a22;

namespace {

Domain parse_domain(const std::string& s) {
  if (s == "q") return Domain::rationals();
  if (s.size() == 2 && s[0] == 'f') return Domain::prime_field(static_cast<std::uint32_t>(s[1] - '0'));
  throw ConfigurationError("unknown domain: " + s);
}

json ints(const std::vector<int>& v) { return json(v); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int chars_enumerate(const std::string& kind_name, const std::string& format) {
  const auto kind = chars::parse_kind(kind_name);
  if (!kind) throw ConfigurationError("unknown kind: " + kind_name);
  const auto sets = chars::enumerate(*kind);
  if (format == "json") {
    json out = json::array();
    for (const auto& s : sets) {
      json chs = json::array();
      for (int i : s.to_vector()) chs.push_back(chars::at(i).to_string());
      out.push_back({{"indices", ints(s.to_vector())}, {"characteristics", chs}});
    }
    std::cout << json{{"kind", kind_name}, {"count", sets.size()}, {"items", out}}.dump(2) << "\n";
  } else {
    std::cout << kind_name << ": " << sets.size() << "\n";
    for (const auto& s : sets) {
      std::cout << s.to_string() << " ";
      for (int i : s.to_vector()) std::cout << " " << chars::at(i).to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int group_verify() {
  const auto& g = sp::Group::instance();
  std::cout << "group order: " << g.order() << "\n";
  std::cout << "orbit sizes:\n";
  const std::vector<std::pair<std::string, IndexSet>> seeds = {
      {"singleton", IndexSet{1}},
      {"pair", IndexSet{1, 2}},
      {"syzygous triple", chars::enumerate(chars::Kind::syzygous_triples).front()},
      {"azygous triple", chars::enumerate(chars::Kind::azygous_triples).front()},
      {"goepel quadruple", chars::enumerate(chars::Kind::goepel_quads).front()},
      {"azygous quadruple", chars::enumerate(chars::Kind::azygous_quads).front()},
  };
  for (const auto& [name, seed] : seeds) {
    std::cout << "  " << std::left << std::setw(18) << name << std::right << seed.to_string() << " -> " << g.orbit(seed).size()
              << "\n";
  }
  std::cout << "epsilon(i,j):\n    ";
  for (int j = 1; j <= 10; ++j) std::cout << std::setw(3) << j;
  std::cout << "\n";
  for (int i = 1; i <= 10; ++i) {
    std::cout << std::setw(4) << i;
    for (int j = 1; j <= 10; ++j) std::cout << std::setw(3) << (i == j ? std::string(".") : std::to_string(sp::epsilon(i, j)));
    std::cout << "\n";
  }
  const auto M = sp::exclusion_involution();
  const auto map = sp::signed_map(M);
  std::cout << "exclusion involution M (rows): ";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) std::cout << M.matrix().at(r, c);
    std::cout << (r < 3 ? " " : "\n");
  }
  std::cout << "  i  m_i   m_i.M  target  phi(i,M)\n";
  for (int i = 1; i <= 10; ++i) {
    const auto m = chars::at(i);
    std::cout << std::setw(3) << i << "  " << m.to_string() << "  " << sp::dot_action(m, M).to_string() << "  "
              << std::setw(6) << map.source[i - 1] << "  " << std::setw(8) << map.sign[i - 1] << "\n";
  }
  return 0;
}

json point_json(const variety::ProjectivePoint& p) {
  json coords = json::array();
  for (const auto& v : p.integers()) coords.push_back(v.get_si());
  return {{"coords", coords}, {"zero_set", ints(p.zero_set().to_vector())}};
}

int variety_points(const std::string& domain) {
  json out = json::array();
  for (const auto& p : variety::enumerate_small_points(parse_domain(domain))) out.push_back(point_json(p));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int graph_build(const std::string& domain, const std::string& out_path, const std::string& dot_path) {
  const auto g = igraph::build_graph(parse_domain(domain));
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    json entry{{"indices", ints(v.indices.to_vector())},
               {"depth", v.depth},
               {"family", igraph::family_name(v.family)},
               {"dim", nullptr},
               {"irreducible", nullptr}};
    if (v.dim) {
      entry["dim"] = v.dim->dimension;
      entry["irreducible"] = v.dim->irreducible;
    }
    vertices.push_back(entry);
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  const json out{{"domain", g.domain}, {"depth_profile", g.depth_profile()}, {"vertices", vertices}, {"edges", edges}};
  write_file(out_path, out.dump(2) + "\n");
  if (!dot_path.empty()) write_file(dot_path, igraph::to_dot(g));
  std::cout << "wrote " << g.vertices.size() << " vertices and " << g.edges.size() << " edges to " << out_path << "\n";
  return 0;
}

int runge_bound_cmd(bool s2, bool s3) {
  runge::SProfile profile = runge::SProfile::generic();
  if (s2 || s3) profile = {s2, s3};
  const auto rep = runge::runge_bound(profile);
  json contributions = json::array();
  for (const auto& c : rep.contributions) contributions.push_back({{"source", c.source}, {"value", c.value}});
  json out{{"s_contains_place_over_2", profile.contains_place_over_2},
           {"s_contains_place_over_3", profile.contains_place_over_3},
           {"height_bound", rep.height_bound},
           {"contributions", contributions},
           {"faltings_bound", nullptr},
           {"faltings_provenance", rep.faltings_provenance}};
  if (rep.faltings_bound) out["faltings_bound"] = *rep.faltings_bound;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int runge_sample(int count, std::uint64_t seed) {
  const auto r = theta::run_suite("smallsets", count, seed, 1e-12);
  std::cout << theta::to_json(r).dump(2) << "\n";
  return r.passed ? 0 : 1;
}

json factors_json(const std::vector<baker::Factor>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"name", f.name}, {"value", f.value}});
  return out;
}

baker::Variant parse_variant(const std::string& s) {
  if (s == "thm22") return baker::Variant::theorem22;
  if (s == "p77") return baker::Variant::p77;
  throw ConfigurationError("unknown variant: " + s);
}

int baker_constants(int d, int s, const std::string& regime, const std::string& variant) {
  const auto r = regime == "arch" ? baker::Regime::archimedean : baker::Regime::non_archimedean;
  const auto k = baker::constants(d, s, r, parse_variant(variant));
  json out{{"d", d},
           {"s", s},
           {"regime", baker::regime_name(k.regime)},
           {"variant", r == baker::Regime::archimedean ? baker::variant_name(k.variant) : "n/a"},
           {"C1", k.c1},
           {"C2", k.c2},
           {"C1_factors", factors_json(k.c1_factors)},
           {"C2_factors", factors_json(k.c2_factors)},
           {"outside_headline_range", k.outside_headline_range}};
  if (k.outside_headline_range) out["warning"] = "outside the tabulated range d <= 18, s <= 9";
  std::cout << out.dump(2) << "\n";
  return 0;
}

int baker_bound(int d, int s, double hk, double rs, double ps, bool audit, const std::string& variant) {
  baker::BoundInputs in{d, s, hk, rs, ps, parse_variant(variant)};
  const auto b = baker::final_bound(in);
  json regimes = json::array();
  for (const auto& rb : b.regimes) {
    json e{{"regime", baker::regime_name(rb.regime)},
           {"N_v", rb.norm},
           {"value", rb.value},
           {"factors", factors_json(rb.factors)}};
    if (audit) e["audit_interval"] = {rb.audit.lo(), rb.audit.hi()};
    regimes.push_back(e);
  }
  json out{{"bound", b.value}, {"worst_regime", baker::regime_name(b.worst)}, {"regimes", regimes}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int search_run(double height, bool allow_zeros, const std::string& alphabet, const std::string& out_path,
               const std::string& cert_path, const std::vector<int>& free) {
  search::SearchConfig cfg;
  cfg.height_bound = height;
  cfg.allow_zero_coordinates = allow_zeros;
  if (alphabet == "pm1") {
    cfg.alphabet = search::AlphabetKind::pm1;
  } else if (alphabet != "pm2") {
    throw ConfigurationError("unknown alphabet: " + alphabet);
  }
  if (!free.empty()) {
    if (free.size() != 5) throw ConfigurationError("--free needs exactly five indices");
    std::array<int, 5> f{};
    std::copy(free.begin(), free.end(), f.begin());
    cfg.free_coordinates = f;
  }
  const auto reduction = search::candidate_form_reduction(cfg);
  const auto res = search::run_search(cfg);
  json points = json::array();
  for (const auto& p : res.points) points.push_back(point_json(p));
  write_file(out_path, json{{"height_bound", height}, {"points", points}}.dump(2) + "\n");

  const auto& c = res.certificate;
  json cert{{"free_coordinates", c.free_coordinates},
            {"solved_coordinates", c.solved_coordinates},
            {"exponent_range", c.exponent_range},
            {"alphabet", reduction.alphabet},
            {"alphabet_size", c.alphabet_size},
            {"free_tuples", c.free_tuples},
            {"candidates", c.candidates},
            {"rejected_per_solved_coordinate", c.rejected_per_solved_coordinate},
            {"quartic_tested", c.quartic_tested},
            {"accepted_tuples", c.accepted_tuples},
            {"distinct_points", c.distinct_points},
            {"reduction_steps", reduction.steps},
            {"search_space_ratio_vs_height_4", reduction.search_space_ratio_vs_height_4},
            {"wall_clock_seconds", c.wall_clock_seconds},
            {"config_hash", c.config_hash}};
  write_file(cert_path, cert.dump(2) + "\n");
  std::cout << c.distinct_points << " points; certificate " << c.config_hash << "\n";
  return 0;
}

int theta_verify(const std::string& suite, int samples, std::uint64_t seed, double tol, const std::string& format) {
  std::vector<std::string> names = suite == "all" ? theta::suite_names() : std::vector<std::string>{suite};
  json out = json::array();
  bool ok = true;
  for (const auto& n : names) {
    const auto r = theta::run_suite(n, samples, seed, tol);
    ok = ok && r.passed;
    out.push_back(theta::to_json(r));
    if (format != "json") std::cout << (r.passed ? "PASS " : "FAIL ") << n << " worst=" << r.worst << "\n";
  }
  if (format == "json") std::cout << json{{"seed", seed}, {"samples", samples}, {"tol", tol}, {"suites", out}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A2(2) integral points toolkit"};
  app.require_subcommand(1);

  auto* chars_cmd = app.add_subcommand("chars", "Even theta characteristics");
  chars_cmd->require_subcommand(1);
  auto* chars_enum = chars_cmd->add_subcommand("enumerate", "Canonical listings");
  std::string kind = "even_chars", format = "text";
  chars_enum->add_option("--kind", kind, "even_chars|syzygous_triples|azygous_triples|goepel_quads|azygous_quads");
  chars_enum->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* group_cmd = app.add_subcommand("group", "Sp4(F2) action");
  group_cmd->require_subcommand(1);
  auto* group_verify_cmd = group_cmd->add_subcommand("verify", "Print group tables");

  auto* variety_cmd = app.add_subcommand("variety", "The model in P^9");
  variety_cmd->require_subcommand(1);
  auto* points_cmd = variety_cmd->add_subcommand("points", "Small points");
  std::string domain = "q", vformat = "json";
  points_cmd->add_option("--domain", domain)->check(CLI::IsMember({"q", "f2", "f3", "f5", "f7"}));
  points_cmd->add_option("--format", vformat)->check(CLI::IsMember({"json"}));

  auto* graph_cmd = app.add_subcommand("graph", "Graph of intersection");
  graph_cmd->require_subcommand(1);
  auto* graph_build_cmd = graph_cmd->add_subcommand("build", "Build the graph");
  std::string gdomain = "q", gout = "graph.json", gdot;
  graph_build_cmd->add_option("--domain", gdomain)->check(CLI::IsMember({"q", "f2", "f3", "f5", "f7"}));
  graph_build_cmd->add_option("--out", gout);
  graph_build_cmd->add_option("--dot", gdot);

  auto* runge_cmd = app.add_subcommand("runge", "Runge height bounds");
  runge_cmd->require_subcommand(1);
  auto* runge_bound_sub = runge_cmd->add_subcommand("bound", "Height bound for an S profile");
  bool s2 = false, s3 = false;
  std::string rformat = "json";
  runge_bound_sub->add_flag("--s-contains-2", s2);
  runge_bound_sub->add_flag("--s-contains-3", s3);
  runge_bound_sub->add_option("--format", rformat)->check(CLI::IsMember({"json"}));
  auto* runge_sample_sub = runge_cmd->add_subcommand("sample", "Sampled small-set certificate");
  int count = 200;
  std::uint64_t rseed = 1;
  runge_sample_sub->add_option("--count", count);
  runge_sample_sub->add_option("--seed", rseed);

  auto* baker_cmd = app.add_subcommand("baker", "Linear forms in logarithms");
  baker_cmd->require_subcommand(1);
  auto* baker_const = baker_cmd->add_subcommand("constants", "C1 and C2");
  int d = 18, s = 9;
  std::string regime = "arch", variant = "thm22";
  baker_const->add_option("--d", d);
  baker_const->add_option("--s", s);
  baker_const->add_option("--regime", regime)->check(CLI::IsMember({"arch", "nonarch"}));
  baker_const->add_option("--variant", variant)->check(CLI::IsMember({"thm22", "p77"}));
  auto* baker_bound_sub = baker_cmd->add_subcommand("bound", "Final height bound");
  double hk = 1, rs = 1, ps = 1;
  bool audit = false;
  baker_bound_sub->add_option("--d", d);
  baker_bound_sub->add_option("--s", s);
  baker_bound_sub->add_option("--hk", hk);
  baker_bound_sub->add_option("--rs", rs);
  baker_bound_sub->add_option("--ps", ps);
  baker_bound_sub->add_option("--variant", variant)->check(CLI::IsMember({"thm22", "p77"}));
  baker_bound_sub->add_flag("--audit", audit);

  auto* search_cmd = app.add_subcommand("search", "Exhaustive point search");
  search_cmd->require_subcommand(1);
  auto* search_run_sub = search_cmd->add_subcommand("run", "Run the search");
  double height = 4;
  bool allow_zeros = false;
  std::string alphabet = "pm2", sout = "results.json", scert = "cert.json";
  std::vector<int> free;
  search_run_sub->add_option("--height", height);
  search_run_sub->add_flag("--allow-zeros", allow_zeros);
  search_run_sub->add_option("--alphabet", alphabet)->check(CLI::IsMember({"pm2", "pm1"}));
  search_run_sub->add_option("--out", sout);
  search_run_sub->add_option("--cert", scert);
  search_run_sub->add_option("--free", free, "five free coordinate indices");

  auto* theta_cmd = app.add_subcommand("theta", "Numeric theta identities");
  theta_cmd->require_subcommand(1);
  auto* theta_verify_sub = theta_cmd->add_subcommand("verify", "Run verification suites");
  std::string suite = "all", tformat = "json";
  int samples = 50;
  std::uint64_t tseed = 1;
  double tol = 1e-12;
  theta_verify_sub->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "equations", "modularity", "splitting", "rosenhain", "smallsets"}));
  theta_verify_sub->add_option("--samples", samples);
  theta_verify_sub->add_option("--seed", tseed);
  theta_verify_sub->add_option("--tol", tol);
  theta_verify_sub->add_option("--format", tformat)->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chars_enum) return chars_enumerate(kind, format);
    if (*group_verify_cmd) return group_verify();
    if (*points_cmd) return variety_points(domain);
    if (*graph_build_cmd) return graph_build(gdomain, gout, gdot);
    if (*runge_bound_sub) return runge_bound_cmd(s2, s3);
    if (*runge_sample_sub) return runge_sample(count, rseed);
    if (*baker_const) return baker_constants(d, s, regime, variant);
    if (*baker_bound_sub) return baker_bound(d, s, hk, rs, ps, audit, variant);
    if (*search_run_sub) return search_run(height, allow_zeros, alphabet, sout, scert, free);
    if (*theta_verify_sub) return theta_verify(suite, samples, tseed, tol, tformat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
