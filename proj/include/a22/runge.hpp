#pragma once

// Runge-side arithmetic: the small-coordinate thresholds, the choice of a
// coordinate good at two places, and the resulting height bounds.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "a22/index_set.hpp"
#include "a22/scalar.hpp"
#include "a22/variety.hpp"

namespace a22::runge {

// A place of Q: archimedean, or p-adic with |x|_p = p^{-v_p(x)}.
struct Place {
  enum class Kind { archimedean, finite };
  Kind kind = Kind::archimedean;
  std::uint32_t prime = 0;

  static Place infinity() { return {}; }
  static Place finite(std::uint32_t p);  // ConfigurationError unless p is prime
  bool is_archimedean() const { return kind == Kind::archimedean; }
  // |q| for q = 2, 3 at this place (1 unless the place lies over q).
  Rational abs_of_prime(std::uint32_t q) const;
  std::string name() const;
};

inline const Rational kSmallThresholdArch{1, 27};
inline const Rational kFloorArch{51, 1000};

// 1/27 at the archimedean place, 1 at finite places.
Rational small_threshold(const Place& place);
// 51/1000 at the archimedean place, |2||3| at finite places.
Rational floor_constant(const Place& place);
// 1/27 at the archimedean place, |2||3| at finite places: the constant C_v
// of the two-place coordinate choice.
Rational choice_constant(const Place& place);

struct SmallSetReport {
  IndexSet small;
  bool verdict = false;  // |small| <= 4 or small lies in a Goepel complement
};

// Indices i with |x_i| < threshold * max. Floating magnitudes are compared
// with the threshold rounded outward so the returned set can only be larger
// than the exact one; the verdict is monotone, so a true verdict is sound.
SmallSetReport small_coordinate_set(const std::array<double, 10>& magnitudes, const Place& place);
SmallSetReport small_coordinate_set(const std::array<Rational, 10>& magnitudes, const Place& place);

bool small_set_verdict(IndexSet small);

// Some index of the Goepel quadruple has |x| >= c * max. The floating
// version rounds the floor upward, so true is sound.
bool goepel_floor_check(const std::array<double, 10>& magnitudes, IndexSet quad, Rational c);
bool goepel_floor_check(const std::array<Rational, 10>& magnitudes, IndexSet quad, Rational c);

// |x_i|_v for a rational point; exact.
std::array<Rational, 10> magnitudes(const variety::ProjectivePoint& p, const Place& place);

// Lowest index whose coordinate satisfies |x|_v >= choice_constant(v) * max
// at both places. PreconditionError on a zero coordinate or a non-rational point.
int choose_coordinate(const variety::ProjectivePoint& p, const Place& v1, const Place& v2);
bool satisfies_choice_inequality(const variety::ProjectivePoint& p, int index, const Place& v);

struct SProfile {
  bool contains_place_over_2 = false;
  bool contains_place_over_3 = true;

  static SProfile generic() { return {}; }
};

struct Contribution {
  std::string source;
  double value = 0;
};

struct RungeReport {
  double height_bound = 0;
  std::vector<Contribution> contributions;
  std::optional<double> faltings_bound;
  std::string faltings_provenance;
};

// Maps a bound on h(psi(P)) to a Faltings height bound, or nullopt.
using FaltingsConversion = std::function<std::optional<double>(double)>;
// Returns the recorded 985 for any bound <= 8.6, nothing otherwise.
std::optional<double> recorded_faltings_conversion(double height_bound);

RungeReport runge_bound(const SProfile& profile,
                        const FaltingsConversion& conversion = recorded_faltings_conversion);

}  // namespace a22::runge
