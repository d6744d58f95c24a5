#include "a22/runge.hpp"

#include <algorithm>
#include <cmath>

#include "a22/characteristics.hpp"
#include "a22/errors.hpp"

namespace a22::runge {

Place Place::finite(std::uint32_t p) {
  if (!is_prime(p)) throw ConfigurationError("finite place needs a prime, got " + std::to_string(p));
  return Place{Kind::finite, p};
}

Rational Place::abs_of_prime(std::uint32_t q) const {
  if (is_archimedean()) return Rational(q);
  return prime == q ? Rational(1, q) : Rational(1);
}

std::string Place::name() const { return is_archimedean() ? "inf" : std::to_string(prime); }

Rational small_threshold(const Place& place) { return place.is_archimedean() ? kSmallThresholdArch : Rational(1); }

Rational floor_constant(const Place& place) {
  return place.is_archimedean() ? kFloorArch : Rational(place.abs_of_prime(2) * place.abs_of_prime(3));
}

Rational choice_constant(const Place& place) {
  return place.is_archimedean() ? kSmallThresholdArch : Rational(place.abs_of_prime(2) * place.abs_of_prime(3));
}

bool small_set_verdict(IndexSet small) {
  if (small.size() <= 4) return true;
  for (IndexSet g : chars::enumerate(chars::Kind::goepel_quads)) {
    if (small.is_subset_of(g.complement())) return true;
  }
  return false;
}

namespace {

// An upper bound for c * m in double arithmetic.
double scaled_up(double m, const Rational& c) {
  const double num = c.get_num().get_d();
  const double den = c.get_den().get_d();
  double t = std::nextafter(m * num, INFINITY);
  t = std::nextafter(t / den, INFINITY);
  return std::nextafter(t, INFINITY);
}

template <typename T>
T max_of(const std::array<T, 10>& m) {
  return *std::max_element(m.begin(), m.end());
}

}  // namespace

SmallSetReport small_coordinate_set(const std::array<double, 10>& magnitudes, const Place& place) {
  const double top = max_of(magnitudes);
  if (!(top > 0)) throw PreconditionError("all magnitudes are zero");
  const double bound = scaled_up(top, small_threshold(place));
  SmallSetReport r;
  for (int i = 0; i < 10; ++i) {
    if (magnitudes[i] < bound) r.small.insert(i + 1);
  }
  r.verdict = small_set_verdict(r.small);
  return r;
}

SmallSetReport small_coordinate_set(const std::array<Rational, 10>& magnitudes, const Place& place) {
  const Rational top = max_of(magnitudes);
  if (top <= 0) throw PreconditionError("all magnitudes are zero");
  const Rational bound = small_threshold(place) * top;
  SmallSetReport r;
  for (int i = 0; i < 10; ++i) {
    if (magnitudes[i] < bound) r.small.insert(i + 1);
  }
  r.verdict = small_set_verdict(r.small);
  return r;
}

bool goepel_floor_check(const std::array<double, 10>& magnitudes, IndexSet quad, Rational c) {
  const double floor = scaled_up(max_of(magnitudes), c);
  for (int i : quad.to_vector()) {
    if (magnitudes[i - 1] >= floor) return true;
  }
  return false;
}

bool goepel_floor_check(const std::array<Rational, 10>& magnitudes, IndexSet quad, Rational c) {
  const Rational floor = c * max_of(magnitudes);
  for (int i : quad.to_vector()) {
    if (magnitudes[i - 1] >= floor) return true;
  }
  return false;
}

std::array<Rational, 10> magnitudes(const variety::ProjectivePoint& p, const Place& place) {
  if (!p.domain().is_rational()) throw PreconditionError("magnitudes need a rational point");
  std::array<Rational, 10> out;
  for (int i = 0; i < 10; ++i) {
    const Rational& x = p[i + 1].rational();
    if (place.is_archimedean()) {
      out[i] = abs(x);
      continue;
    }
    if (x == 0) {
      out[i] = 0;
      continue;
    }
    Integer n = x.get_num();
    Integer d = x.get_den();
    Integer prime(static_cast<unsigned long>(place.prime));
    const long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t()));
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(std::labs(vn - vd)));
    out[i] = vn - vd >= 0 ? Rational(Integer(1), power) : Rational(power);
    out[i].canonicalize();
  }
  return out;
}

bool satisfies_choice_inequality(const variety::ProjectivePoint& p, int index, const Place& v) {
  const auto m = magnitudes(p, v);
  return m[index - 1] >= choice_constant(v) * max_of(m);
}

int choose_coordinate(const variety::ProjectivePoint& p, const Place& v1, const Place& v2) {
  if (!p.domain().is_rational()) throw PreconditionError("choose_coordinate needs a rational point");
  if (!p.zero_set().empty()) throw PreconditionError("choose_coordinate needs a point without zero coordinates");
  const auto m1 = magnitudes(p, v1);
  const auto m2 = magnitudes(p, v2);
  const Rational f1 = choice_constant(v1) * max_of(m1);
  const Rational f2 = choice_constant(v2) * max_of(m2);
  for (int i = 0; i < 10; ++i) {
    if (m1[i] >= f1 && m2[i] >= f2) return i + 1;
  }
  throw PreconditionError("no coordinate is large at both places; the point is not on the model");
}

std::optional<double> recorded_faltings_conversion(double height_bound) {
  if (height_bound <= 8.6) return 985.0;
  return std::nullopt;
}

RungeReport runge_bound(const SProfile& profile, const FaltingsConversion& conversion) {
  RungeReport r;
  r.contributions.push_back({"archimedean", std::log(27.0)});
  if (profile.contains_place_over_2) {
    r.contributions.push_back({"place over 2 in S", std::log(2.0)});
  } else {
    r.contributions.push_back({"places over 2 outside S", 6 * std::log(2.0)});
  }
  if (profile.contains_place_over_3) r.contributions.push_back({"place over 3 in S", std::log(3.0)});
  for (const auto& c : r.contributions) r.height_bound += c.value;
  r.faltings_bound = conversion(r.height_bound);
  r.faltings_provenance = r.faltings_bound ? "recorded constant; conversion not reimplemented" : "none";
  return r;
}

}  // namespace a22::runge
