#include <doctest.h>

#include <map>
#include <set>

#include "a22/characteristics.hpp"
#include "a22/errors.hpp"
#include "a22/igraph.hpp"
#include "a22/kernels.hpp"
#include "a22/symplectic.hpp"
#include "a22/variety.hpp"

using namespace a22;
using namespace a22::igraph;

namespace {

const IntersectionGraph& q_graph() {
  static const IntersectionGraph g = build_graph(Domain::rationals());
  return g;
}

std::map<Family, std::map<Family, int>> child_family_counts(const IntersectionGraph& g) {
  std::map<Family, std::map<Family, int>> out;
  for (const auto& v : g.vertices) {
    std::map<Family, int> counts;
    for (auto c : v.children) ++counts[g.vertices[c].family];
    auto& slot = out[v.family];
    if (slot.empty()) {
      slot = counts;
    } else {
      REQUIRE(slot == counts);  // uniform within a family
    }
  }
  return out;
}

}  // namespace

TEST_CASE("family classification") {
  CHECK(classify(IndexSet{4}) == Family::singleton);
  CHECK(classify(IndexSet{4, 9}) == Family::pair);
  for (auto t : chars::enumerate(chars::Kind::syzygous_triples)) CHECK(classify(t) == Family::syzygous_triple);
  for (auto t : chars::enumerate(chars::Kind::azygous_triples)) CHECK(classify(t) == Family::unclassified);
  for (auto q : chars::enumerate(chars::Kind::azygous_quads)) CHECK(classify(q) == Family::azygous_quadruple);
  for (auto q : chars::enumerate(chars::Kind::goepel_quads)) {
    CHECK(classify(q) == Family::goepel_quadruple);
    CHECK(classify(q.complement()) == Family::goepel_complement);
  }
  CHECK(recorded_metadata(Family::singleton)->dimension == 2);
  CHECK(recorded_metadata(Family::pair)->irreducible == false);
  CHECK(recorded_metadata(Family::goepel_complement)->dimension == 0);
  CHECK_FALSE(recorded_metadata(Family::unclassified).has_value());
}

TEST_CASE("witness closure examples") {
  const auto w = variety::enumerate_small_points(Domain::rationals());
  CHECK(witness_closure(IndexSet{1}, w) == IndexSet{1});
  CHECK(witness_closure(IndexSet{1, 2}, w) == IndexSet{1, 2});
  const auto syz = chars::enumerate(chars::Kind::syzygous_triples)[0];
  const auto goepel = *chars::completions(syz).quadruple;
  // A syzygous triple plus an index outside its Goepel completion closes to a Goepel complement.
  for (int j : goepel.complement().to_vector()) {
    if (syz.contains(j)) continue;
    const auto c = witness_closure(syz | IndexSet{j}, w);
    CHECK((classify(c) == Family::goepel_complement || c == IndexSet::full()));
  }
  CHECK_THROWS_AS(witness_closure(IndexSet{1}, {}), ConfigurationError);
}

TEST_CASE("graph over Q: depth profile") {
  const auto& g = q_graph();
  const auto prof = g.depth_profile();
  CHECK(prof[0] == 10);
  CHECK(prof[1] == 45);
  CHECK(prof[2] == 60);
  CHECK(prof[3] == 15);
  CHECK(prof[5] == 15);
  CHECK(g.vertices.size() == 145);
}

TEST_CASE("optimal sets are exactly the five families") {
  const auto w = variety::enumerate_small_points(Domain::rationals());
  for (unsigned m = 1; m < 1023; ++m) {
    const auto s = IndexSet::from_mask(static_cast<std::uint16_t>(m));
    const bool optimal = witness_closure(s, w) == s;
    const auto f = classify(s);
    const bool family = f == Family::singleton || f == Family::pair || f == Family::syzygous_triple ||
                        f == Family::azygous_quadruple || f == Family::goepel_complement;
    REQUIRE(optimal == family);
    if (optimal) REQUIRE(q_graph().find(s).has_value());
  }
  CHECK_FALSE(q_graph().find(IndexSet::full()).has_value());
}

TEST_CASE("children counts over Q") {
  const auto counts = child_family_counts(q_graph());
  CHECK(counts.at(Family::singleton) == std::map<Family, int>{{Family::pair, 9}});
  CHECK(counts.at(Family::pair) == std::map<Family, int>{{Family::syzygous_triple, 4}, {Family::azygous_quadruple, 2}});
  CHECK(counts.at(Family::syzygous_triple) == std::map<Family, int>{{Family::goepel_complement, 2}});
  CHECK(counts.at(Family::azygous_quadruple) == std::map<Family, int>{{Family::goepel_complement, 3}});
  CHECK(counts.at(Family::goepel_complement).empty());
}

TEST_CASE("pair-to-azygous-quadruple incidence by direct count") {
  // Oracle for the child count above: 15 quadruples x 6 pairs / 45 pairs.
  const auto quads = chars::enumerate(chars::Kind::azygous_quads);
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      int n = 0;
      for (auto q : quads) n += IndexSet{i, j}.is_subset_of(q);
      REQUIRE(n == 2);
    }
}

TEST_CASE("edges are the Hasse diagram") {
  const auto& g = q_graph();
  std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(), g.edges.end());
  for (auto [a, b] : g.edges) {
    CHECK(g.vertices[a].indices.is_subset_of(g.vertices[b].indices));
    CHECK(g.vertices[a].indices != g.vertices[b].indices);
  }
  for (auto [a, b] : g.edges)
    for (auto [c, d] : g.edges)
      if (b == c) REQUIRE(edges.count({a, d}) == 0);
  // every strict containment is reachable through edges
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<std::size_t> stack{a};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto c : g.vertices[v].children)
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
    }
    for (std::size_t b = 0; b < g.vertices.size(); ++b) {
      const bool contained = a != b && g.vertices[a].indices.is_subset_of(g.vertices[b].indices);
      REQUIRE(seen[b] == contained);
    }
  }
}

TEST_CASE("the group permutes each depth level transitively") {
  const auto& g = q_graph();
  const auto& group = sp::Group::instance();
  std::map<int, std::set<std::uint16_t>> levels;
  for (const auto& v : g.vertices) levels[v.depth].insert(v.indices.mask());
  for (const auto& [depth, masks] : levels) {
    const auto orbit = group.orbit(IndexSet::from_mask(*masks.begin()));
    std::set<std::uint16_t> om;
    for (auto s : orbit) om.insert(s.mask());
    CHECK(om == masks);
  }
}

TEST_CASE("witness closure contains the linear closure") {
  const auto w = variety::enumerate_small_points(Domain::rationals());
  for (unsigned m = 0; m < 1024; ++m) {
    const auto s = IndexSet::from_mask(static_cast<std::uint16_t>(m));
    REQUIRE(variety::linear_closure(s).forced.is_subset_of(witness_closure(s, w)));
  }
}

TEST_CASE("graphs in odd characteristic") {
  CHECK(compare_graphs(q_graph(), q_graph()).empty());
  CHECK(compare_graphs(q_graph(), build_graph(Domain::prime_field(5))).empty());
  CHECK(compare_graphs(q_graph(), build_graph(Domain::prime_field(7))).empty());
  const auto d2 = compare_graphs(q_graph(), build_graph(Domain::prime_field(2)));
  const auto d3 = compare_graphs(q_graph(), build_graph(Domain::prime_field(3)));
  CHECK_FALSE(d2.empty());
  CHECK_FALSE(d3.empty());
  // The extra vertices in characteristic 2 and 3 are Goepel quadruples.
  for (auto s : d2.only_second) CHECK(classify(s) == Family::goepel_quadruple);
  CHECK(d2.only_second.size() == 15);
  CHECK(d2.only_first.empty());
}

TEST_CASE("closure table kernels agree") {
  std::vector<std::uint16_t> masks;
  for (const auto& p : variety::enumerate_small_points(Domain::prime_field(3))) masks.push_back(p.zero_set().mask());
  CHECK(kernels::closure_table(masks, kernels::Mode::serial) == kernels::closure_table(masks, kernels::Mode::parallel));
}

TEST_CASE("dot export is layered by depth") {
  const auto dot = to_dot(q_graph());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}
