#include <doctest.h>

#include <algorithm>
#include <set>

#include "a22/characteristics.hpp"
#include "a22/errors.hpp"
#include "golden_quadruples.hpp"

using namespace a22;
using namespace a22::chars;

namespace {

IndexSet from_strings(const std::array<std::string_view, 4>& chs) {
  IndexSet s;
  for (auto c : chs) s.insert(*Characteristic::parse(c).index());
  return s;
}

std::set<std::uint16_t> masks(const std::vector<IndexSet>& sets) {
  std::set<std::uint16_t> out;
  for (auto s : sets) out.insert(s.mask());
  return out;
}

}  // namespace

TEST_CASE("q2 separates the ten even characteristics") {
  int odd = 0;
  for (unsigned b = 0; b < 16; ++b) {
    const Characteristic m(b);
    const bool listed = std::find(kEven.begin(), kEven.end(), m) != kEven.end();
    CHECK(m.is_even() == listed);
    if (!m.is_even()) ++odd;
  }
  CHECK(odd == 6);
  CHECK(Characteristic::parse("1010").q2() == 1);
  CHECK(Characteristic::parse("(0110)") == Characteristic(0b0110));
  CHECK(Characteristic::parse("0 1 1 0").to_string() == "0110");
  CHECK(*Characteristic::parse("1111").index() == 10);
  CHECK_FALSE(Characteristic::parse("1010").index().has_value());
}

TEST_CASE("e_triple on the quoted triples") {
  const auto c = [](const char* s) { return Characteristic::parse(s); };
  CHECK(e_triple(c("1001"), c("0100"), c("1111")) == 0);
  CHECK(e_triple(c("0000"), c("0100"), c("0001")) == 1);
  CHECK(e_triple(c("0001"), c("0000"), c("0100")) == 1);
  CHECK_THROWS_AS(e_triple(c("0000"), c("0000"), c("0001")), PreconditionError);
  CHECK_THROWS_AS(e_triple(c("1010"), c("0000"), c("0001")), PreconditionError);
}

TEST_CASE("e_triple is zero exactly when the sum is even") {
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j)
      for (int k = j + 1; k <= 10; ++k) {
        const auto x = at(i), y = at(j), z = at(k);
        CHECK((e_triple(x, y, z) == 0) == (x + y + z).is_even());
      }
}

TEST_CASE("census sizes and the triple partition") {
  CHECK(enumerate(Kind::even_chars).size() == 10);
  const auto syz = enumerate(Kind::syzygous_triples);
  const auto azy = enumerate(Kind::azygous_triples);
  CHECK(syz.size() == 60);
  CHECK(azy.size() == 60);
  CHECK(enumerate(Kind::goepel_quads).size() == 15);
  CHECK(enumerate(Kind::azygous_quads).size() == 15);
  auto all = masks(syz);
  for (auto m : masks(azy)) CHECK(all.insert(m).second);
  CHECK(all.size() == 120);
}

TEST_CASE("listings are canonically ordered") {
  for (auto k : {Kind::syzygous_triples, Kind::azygous_triples, Kind::goepel_quads, Kind::azygous_quads}) {
    const auto v = enumerate(k);
    CHECK(std::is_sorted(v.begin(), v.end(), lex_less));
  }
}

TEST_CASE("quadruple sub-triples have the defining type") {
  for (auto q : enumerate(Kind::goepel_quads)) {
    for (int i : q.to_vector()) {
      auto t = q;
      t.erase(i);
      CHECK(classify_triple(t) == TripleTag::syzygous);
    }
    CHECK(classify_quadruple(q) == QuadrupleTag::goepel);
  }
  for (auto q : enumerate(Kind::azygous_quads)) {
    for (int i : q.to_vector()) {
      auto t = q;
      t.erase(i);
      CHECK(classify_triple(t) == TripleTag::azygous);
    }
  }
}

TEST_CASE("quadruple lists match the published tables") {
  std::set<std::uint16_t> goepel, azygous;
  for (const auto& q : kGoepelTable) goepel.insert(from_strings(q).mask());
  for (const auto& q : kAzygousTable) azygous.insert(from_strings(q).mask());
  CHECK(goepel.size() == 15);
  CHECK(azygous.size() == 15);
  CHECK(masks(enumerate(Kind::goepel_quads)) == goepel);
  CHECK(masks(enumerate(Kind::azygous_quads)) == azygous);
  CHECK(from_strings(kGoepelTable[0]) == from_strings({"0011", "0010", "1001", "1000"}));
}

TEST_CASE("Goepel quadruples are the even cosets of Lagrangian planes") {
  // Independent route: a + V with V a 2-dimensional isotropic subspace.
  std::set<std::uint16_t> cosets;
  for (unsigned u = 1; u < 16; ++u) {
    for (unsigned v = u + 1; v < 16; ++v) {
      if ((u ^ v) == 0 || pairing(Characteristic(u), Characteristic(v)) != 0) continue;
      const unsigned plane[4] = {0, u, v, u ^ v};
      for (unsigned a = 0; a < 16; ++a) {
        IndexSet s;
        bool even = true;
        for (unsigned p : plane) {
          const auto idx = Characteristic(a ^ p).index();
          if (!idx) {
            even = false;
            break;
          }
          s.insert(*idx);
        }
        if (even) cosets.insert(s.mask());
      }
    }
  }
  CHECK(cosets == masks(enumerate(Kind::goepel_quads)));
}

TEST_CASE("completions") {
  const auto idx = [](const char* s) { return *Characteristic::parse(s).index(); };
  const auto c = completions(IndexSet{idx("0000"), idx("0010")});
  std::vector<int> want{idx("0110"), idx("0100"), idx("0001"), idx("0011")};
  std::sort(want.begin(), want.end());
  CHECK(c.syzygous == want);
  CHECK(c.azygous.size() == 4);

  const auto t = completions(IndexSet{idx("0000"), idx("0010"), idx("0100")});
  REQUIRE(t.quadruple.has_value());
  CHECK(*t.quadruple == IndexSet{idx("0000"), idx("0010"), idx("0100"), idx("0110")});

  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      const auto p = completions(IndexSet{i, j});
      CHECK(p.syzygous.size() == 4);
      CHECK(p.azygous.size() == 4);
    }
  for (auto a : enumerate(Kind::azygous_triples)) {
    const auto q = completions(a).quadruple;
    REQUIRE(q.has_value());
    CHECK(classify_quadruple(*q) == QuadrupleTag::azygous);
  }
  CHECK_THROWS_AS(completions(IndexSet{1}), PreconditionError);
}

TEST_CASE("disjointness profiles") {
  for (auto t : enumerate(Kind::syzygous_triples)) CHECK(disjointness_profile(t) == 2);
  for (auto q : enumerate(Kind::azygous_quads)) CHECK(disjointness_profile(q) == 3);
  for (auto q : enumerate(Kind::goepel_quads)) CHECK(disjointness_profile(q) == 0);
}
