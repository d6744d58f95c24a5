#include "a22/theta_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "a22/errors.hpp"
#include "a22/runge.hpp"
#include "a22/theta.hpp"

namespace a22::theta {

namespace {

using nlohmann::json;

SuiteResult equations(int samples, std::mt19937_64& rng, double tol) {
  SuiteResult r{"equations", true, samples, 0, {}};
  double tails = 0;
  std::array<double, 6> worst{};
  for (int s = 0; s < samples; ++s) {
    const auto psi = psi_numeric(random_tau(rng), tol);
    const auto res = residual_magnitudes(psi.x);
    for (int k = 0; k < 6; ++k) worst[k] = std::max(worst[k], res[k]);
    tails = std::max(tails, psi.tail_total);
  }
  r.worst = *std::max_element(worst.begin(), worst.end());
  r.passed = r.worst < kResidualTolerance;
  r.details = {{"max_residual_per_equation", worst}, {"threshold", kResidualTolerance}, {"max_tail_total", tails}};
  return r;
}

SuiteResult modularity(int samples, std::mt19937_64& rng, double tol) {
  SuiteResult r{"modularity", true, samples, 0, {}};
  int plus = 0, minus = 0;
  double cocycle = 0;
  for (int s = 0; s < samples; ++s) {
    const auto tau = random_tau(rng);
    const auto m = random_symplectic(rng, tau);
    const auto rep = verify_modularity(m, tau, tol);
    r.worst = std::max(r.worst, rep.spread);
    (rep.zeta4 == 1 ? plus : minus)++;

    const auto n = random_symplectic(rng, tau);
    const cd lhs = j_factor(multiply(m, n), tau);
    const cd rhs = j_factor(m, act(n, tau)) * j_factor(n, tau);
    cocycle = std::max(cocycle, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0));
  }
  r.passed = r.worst < kModularitySpread && cocycle < kCocycleTolerance;
  r.details = {{"max_spread", r.worst},
               {"spread_threshold", kModularitySpread},
               {"zeta4_observed", {{"+1", plus}, {"-1", minus}}},
               {"max_cocycle_error", cocycle},
               {"cocycle_threshold", kCocycleTolerance}};
  return r;
}

SuiteResult splitting(int samples, std::mt19937_64& rng, double tol) {
  SuiteResult r{"splitting", true, samples, 0, {}};
  double excess = -1;  // worst (difference - certified bound)
  for (int s = 0; s < samples; ++s) {
    const cd t1 = random_upper_half(rng), t2 = random_upper_half(rng);
    const auto tau = SiegelMatrix::diagonal(t1, t2);
    for (unsigned bits = 0; bits < 16; ++bits) {
      const chars::Characteristic m(bits);
      const auto full = theta_constant(m, tau, tol);
      const auto a = theta1(int(m.bit(0)), int(m.bit(2)), t1, tol);
      const auto b = theta1(int(m.bit(1)), int(m.bit(3)), t2, tol);
      const double diff = std::abs(full.value - a.value * b.value);
      const double bound = full.tail_bound + std::abs(a.value) * b.tail_bound + std::abs(b.value) * a.tail_bound +
                           a.tail_bound * b.tail_bound + kFloatSlack;
      r.worst = std::max(r.worst, diff);
      excess = std::max(excess, diff - bound);
    }
  }
  r.passed = excess <= 0;
  r.details = {{"max_difference", r.worst}, {"characteristics_per_sample", 16}, {"within_certified_bound", r.passed}};
  return r;
}

SuiteResult rosenhain_suite(int samples, std::mt19937_64& rng, double tol) {
  SuiteResult r{"rosenhain", true, samples, 0, {}};
  double separation = INFINITY;
  int degenerate = 0;
  for (int s = 0; s < samples; ++s) {
    const auto psi = psi_numeric(random_tau(rng), tol);
    std::array<cd, 10> sq{};
    for (int i = 0; i < 10; ++i) sq[i] = psi.theta[i] * psi.theta[i];
    try {
      const auto rep = rosenhain(sq, tol);
      r.worst = std::max(r.worst, rep.lambda1_squared_agreement);
      separation = std::min(separation, rep.min_weierstrass_separation);
    } catch (const DegeneratePointError&) {
      ++degenerate;
    }
  }
  bool diagonal_rejected = false;
  try {
    const auto psi = psi_numeric(SiegelMatrix::diagonal({0.1, 1.1}, {-0.2, 0.9}), tol);
    std::array<cd, 10> sq{};
    for (int i = 0; i < 10; ++i) sq[i] = psi.theta[i] * psi.theta[i];
    rosenhain(sq, tol);
  } catch (const DegeneratePointError&) {
    diagonal_rejected = true;
  }
  r.passed = r.worst < kRosenhainAgreement && separation > kWeierstrassSeparation && degenerate == 0 &&
             diagonal_rejected;
  r.details = {{"max_lambda1_squared_disagreement", r.worst},
               {"agreement_threshold", kRosenhainAgreement},
               {"min_weierstrass_separation", separation},
               {"separation_threshold", kWeierstrassSeparation},
               {"degenerate_samples", degenerate},
               {"diagonal_tau_rejected", diagonal_rejected}};
  return r;
}

SuiteResult smallsets(int samples, std::mt19937_64& rng, double tol) {
  SuiteResult r{"smallsets", true, samples, 0, {}};
  const auto place = runge::Place::infinity();
  const auto floor = runge::floor_constant(place);
  const auto goepel = chars::enumerate(chars::Kind::goepel_quads);
  int verdict_failures = 0, floor_failures = 0;
  double min_ratio = INFINITY;  // min over quadruples of max_{i in quad} |x_i| / max |x|
  int max_small = 0;
  for (int s = 0; s < samples; ++s) {
    const auto psi = psi_numeric(random_tau(rng), tol);
    std::array<double, 10> mags{};
    for (int i = 0; i < 10; ++i) mags[i] = std::abs(psi.x[i]);
    const double top = *std::max_element(mags.begin(), mags.end());
    const auto small = runge::small_coordinate_set(mags, place);
    max_small = std::max(max_small, small.small.size());
    if (!small.verdict) ++verdict_failures;
    for (const auto& q : goepel) {
      if (!runge::goepel_floor_check(mags, q, floor)) ++floor_failures;
      double best = 0;
      for (int i : q.to_vector()) best = std::max(best, mags[i - 1]);
      min_ratio = std::min(min_ratio, best / top);
    }
  }
  r.worst = min_ratio;
  r.passed = verdict_failures == 0 && floor_failures == 0;
  r.details = {{"small_set_verdict_failures", verdict_failures},
               {"goepel_floor_failures", floor_failures},
               {"largest_small_set", max_small},
               {"min_goepel_max_ratio", min_ratio},
               {"floor_constant", floor.get_d()}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"equations", "modularity", "splitting", "rosenhain", "smallsets"}; }

SuiteResult run_suite(const std::string& name, int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw ConfigurationError("samples must be positive");
  std::mt19937_64 rng(seed);
  if (name == "equations") return equations(samples, rng, tol);
  if (name == "modularity") return modularity(samples, rng, tol);
  if (name == "splitting") return splitting(samples, rng, tol);
  if (name == "rosenhain") return rosenhain_suite(samples, rng, tol);
  if (name == "smallsets") return smallsets(samples, rng, tol);
  throw ConfigurationError("unknown theta suite: " + name);
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"passed", r.passed}, {"samples", r.samples}, {"worst", r.worst}, {"details", r.details}};
}

}  // namespace a22::theta
