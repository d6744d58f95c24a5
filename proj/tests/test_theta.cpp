#include <doctest.h>

#include <cmath>
#include <random>

#include "a22/characteristics.hpp"
#include "a22/errors.hpp"
#include "a22/symplectic.hpp"
#include "a22/theta.hpp"
#include "a22/theta_suite.hpp"
#include "a22/variety.hpp"

using namespace a22;
using namespace a22::theta;

namespace {

constexpr double kTol = 1e-12;

std::vector<SiegelMatrix> samples(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SiegelMatrix> out;
  for (int i = 0; i < n; ++i) out.push_back(random_tau(rng));
  return out;
}

}  // namespace

TEST_CASE("Siegel matrices") {
  CHECK_THROWS_AS(SiegelMatrix({0, 1}, {0, 2}, {0, 1}), DomainError);
  CHECK_THROWS_AS(SiegelMatrix({0, -1}, {0, 0}, {0, 1}), DomainError);
  const SiegelMatrix t({0.3, 2}, {0.1, 0}, {0, 1});
  CHECK(t.lambda_min() == doctest::Approx(1));
  CHECK(t(1, 0) == t(0, 1));
  for (const auto& s : samples(50, 3)) CHECK(s.lambda_min() >= 0.5 - 1e-12);
}

TEST_CASE("odd characteristics vanish exactly") {
  const auto tau = samples(1, 1)[0];
  for (unsigned b = 0; b < 16; ++b) {
    const chars::Characteristic m(b);
    const auto v = theta_constant(m, tau, kTol);
    if (!m.is_even()) CHECK(v.value == cd(0, 0));
    if (m.is_even()) {
      CHECK(v.tail_bound < kTol);
      CHECK(std::abs(v.value) > 0);
    }
  }
}

TEST_CASE("characteristic symmetries") {
  for (const auto& tau : samples(10, 2)) {
    for (auto m : chars::kEven) {
      const std::array<int, 4> a{int(m.bit(0)), int(m.bit(1)), int(m.bit(2)), int(m.bit(3))};
      const cd base = theta_constant(a, tau, kTol).value;
      const std::array<int, 4> neg{-a[0], -a[1], -a[2], -a[3]};
      CHECK(std::abs(theta_constant(neg, tau, kTol).value - base) < 1e-11);
      for (int n1 = -1; n1 <= 1; ++n1)
        for (int n4 = -1; n4 <= 1; ++n4) {
          const std::array<int, 4> n{n1, 0, 1, n4};
          const std::array<int, 4> shifted{a[0] + 2 * n[0], a[1] + 2 * n[1], a[2] + 2 * n[2], a[3] + 2 * n[3]};
          const int sign = ((a[0] * n[2] + a[1] * n[3]) % 2 + 2) % 2 ? -1 : 1;
          CHECK(std::abs(theta_constant(shifted, tau, kTol).value - double(sign) * base) < 1e-11);
        }
    }
  }
}

TEST_CASE("truncation certificate") {
  for (const auto& tau : samples(10, 4)) {
    for (auto m : chars::kEven) {
      const std::array<int, 4> a{int(m.bit(0)), int(m.bit(1)), int(m.bit(2)), int(m.bit(3))};
      for (double tol : {1e-3, 1e-6, 1e-12}) {
        const auto v = theta_constant(a, tau, tol);
        const cd doubled = theta_sum(a, tau, 2 * v.radius);
        CHECK(std::abs(doubled - v.value) <= v.tail_bound + 1e-14);
        CHECK(v.tail_bound < tol);
      }
    }
  }
  CHECK(radius_for(2, 0.5, 1e-12) >= radius_for(2, 0.5, 1e-3));
  CHECK(radius_for(2, 0.1, 1e-12) > radius_for(2, 1.0, 1e-12));
}

TEST_CASE("psi lands on the model") {
  double worst = 0;
  for (const auto& tau : samples(100, 5)) {
    const auto psi = psi_numeric(tau, kTol);
    for (double r : residual_magnitudes(psi.x)) worst = std::max(worst, r);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("residuals stay below the truncation scale as tol shrinks") {
  // The truncation radius is an integer, so a smaller tol can leave it
  // unchanged; the residual is bounded by the tail plus rounding, not halved.
  const auto taus = samples(10, 6);
  for (double tol : {1e-4, 5e-5, 1e-8, 5e-9, 1e-12}) {
    double worst = 0;
    for (const auto& tau : taus) {
      const auto psi = psi_numeric(tau, tol);
      for (double r : residual_magnitudes(psi.x)) worst = std::max(worst, r);
    }
    CHECK(worst < 1e3 * tol + 1e-12);
  }
}

TEST_CASE("diagonal period matrices") {
  const auto tau = SiegelMatrix::diagonal({0, 1}, {0, 1});
  const auto psi = psi_numeric(tau, kTol);
  CHECK(std::abs(psi.x[9]) < 1e-12);
  std::mt19937_64 rng(7);
  for (int s = 0; s < 20; ++s) {
    const cd t1 = random_upper_half(rng), t2 = random_upper_half(rng);
    const auto d = SiegelMatrix::diagonal(t1, t2);
    for (unsigned b = 0; b < 16; ++b) {
      const chars::Characteristic m(b);
      const cd full = theta_constant(m, d, kTol).value;
      const cd split = theta1(int(m.bit(0)), int(m.bit(2)), t1, kTol).value * theta1(int(m.bit(1)), int(m.bit(3)), t2, kTol).value;
      CHECK(std::abs(full - split) < kTol);
    }
  }
}

TEST_CASE("modularity") {
  const IntMatrix id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  const auto tau = samples(1, 8)[0];
  const auto rep = verify_modularity(id, tau, kTol);
  for (const cd& r : rep.ratios) CHECK(std::abs(r - 1.0) < 1e-12);

  std::mt19937_64 rng(9);
  for (const auto& t : samples(20, 10)) {
    const auto m = random_symplectic(rng, t);
    CHECK(is_integral_symplectic(m));
    const auto r = verify_modularity(m, t, kTol);
    CHECK(r.spread < kModularitySpread);
    CHECK((r.zeta4 == 1 || r.zeta4 == -1));
    const auto n = random_symplectic(rng, t);
    const cd lhs = j_factor(multiply(m, n), t);
    const cd rhs = j_factor(m, act(n, t)) * j_factor(n, t);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
  IntMatrix bad = id;
  bad[0][1] = 1;
  CHECK_FALSE(is_integral_symplectic(bad));
  CHECK_THROWS_AS(act(bad, tau), PreconditionError);
}

TEST_CASE("reduction mod 2 is compatible with products") {
  std::mt19937_64 rng(11);
  const auto tau = samples(1, 12)[0];
  for (int i = 0; i < 30; ++i) {
    const auto a = random_symplectic(rng, tau);
    const auto b = random_symplectic(rng, tau);
    CHECK(reduce_mod2(multiply(a, b)) == reduce_mod2(a) * reduce_mod2(b));
  }
}

TEST_CASE("Rosenhain invariants") {
  for (const auto& tau : samples(50, 13)) {
    const auto psi = psi_numeric(tau, kTol);
    std::array<cd, 10> sq{};
    for (int i = 0; i < 10; ++i) sq[i] = psi.theta[i] * psi.theta[i];
    const auto r = rosenhain(sq, kTol);
    CHECK(r.lambda1_squared_agreement < 1e-8);
    CHECK(std::abs(r.lambda1_rational - r.lambda1) < 1e-8 * std::max(1.0, std::abs(r.lambda1)));
    CHECK(r.min_weierstrass_separation > 1e-6);
  }
  const auto psi = psi_numeric(SiegelMatrix::diagonal({0.2, 1.3}, {-0.4, 0.8}), kTol);
  std::array<cd, 10> sq{};
  for (int i = 0; i < 10; ++i) sq[i] = psi.theta[i] * psi.theta[i];
  CHECK_THROWS_AS(rosenhain(sq, kTol), DegeneratePointError);
}

TEST_CASE("fixed point check") {
  const auto q = variety::ProjectivePoint::from_integers({0, 0, 1, 1, 0, 0, -1, -1, 0, 0});
  const auto rep = fixed_point_check(q);
  CHECK(rep.pairs.size() == 45);
  CHECK(rep.biconditional_holds);
  CHECK(rep.pairs[0].i == 1);
  CHECK(rep.pairs[0].j == 2);
  CHECK(rep.pairs[0].equal_up_to_epsilon);
  CHECK(rep.pairs[0].fixed);
  CHECK(variety::apply_signed_map(q, sp::exclusion_involution()) == q);

  bool saw_unequal = false;
  for (const auto& p : variety::enumerate_small_points(Domain::rationals())) {
    CHECK(fixed_point_check(p).biconditional_holds);
    if (!(p[1] == p[2])) {
      saw_unequal = true;
      CHECK_FALSE(variety::apply_signed_map(p, sp::exclusion_involution()) == p);
    } else {
      CHECK(p[6] == -p[9]);
      CHECK(p[5] == -p[10]);
    }
  }
  CHECK(saw_unequal);
}

TEST_CASE("fixed point check over finite fields") {
  for (unsigned prime : {3u, 5u, 7u}) {
    const Domain f = Domain::prime_field(prime);
    int failures = 0;
    for (const auto& p : variety::enumerate_small_points(f)) {
      if (p[1] == p[2]) {
        CHECK(p[6] == -p[9]);
        CHECK(p[5] == -p[10]);
      }
      const auto rep = fixed_point_check(p);
      if (rep.biconditional_holds) continue;
      ++failures;
      // Over F_3 the conjugated involution can fix P projectively with
      // x_i = -eps(i,j) x_j, i.e. up to the scalar -1.
      for (const auto& c : rep.pairs) {
        if (c.fixed && !c.equal_up_to_epsilon) {
          CHECK(p[c.i] == -(p[c.j] * Scalar(sp::epsilon(c.i, c.j), f)));
        }
      }
    }
    CHECK(failures == (prime == 3 ? 15 : 0));
  }
}

TEST_CASE("suites run from a seed") {
  for (const auto& name : suite_names()) {
    const auto a = run_suite(name, 5, 42, kTol);
    const auto b = run_suite(name, 5, 42, kTol);
    CHECK(a.passed);
    CHECK(a.worst == b.worst);
  }
  CHECK_THROWS_AS(run_suite("nope", 5, 1, kTol), ConfigurationError);
}
