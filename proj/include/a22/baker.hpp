#pragma once

// Baker-side arithmetic: the linear-forms constants C1(d,s), C2(d,s), the
// unit-basis bounds, and the final height bound
//   h(P) <= 400 C1 R_S h_K N_v log*(R_S h_K N_v) log(200 C1 C2).

#include <string>
#include <vector>

#include "a22/interval.hpp"

namespace a22::baker {

enum class Regime { archimedean, non_archimedean };
enum class Variant { theorem22, p77 };

std::string_view regime_name(Regime r);
std::string_view variant_name(Variant v);

struct Factor {
  std::string name;
  double value = 0;
};

struct LinearFormsConstants {
  double c1 = 0;
  double c2 = 0;
  Regime regime = Regime::archimedean;
  Variant variant = Variant::theorem22;
  std::vector<Factor> c1_factors;
  std::vector<Factor> c2_factors;
  bool outside_headline_range = false;  // d > 18 or s > 9
};

// variant is ignored for the non-archimedean regime. Throws
// PreconditionError for d < 1, s < 1, and for p77 at d = 1 (log d = 0).
LinearFormsConstants constants(int d, int s, Regime regime, Variant variant = Variant::theorem22);

// Same closed forms evaluated in interval arithmetic.
struct ConstantsInterval {
  Interval c1;
  Interval c2;
};
ConstantsInterval constants_interval(int d, int s, Regime regime, Variant variant = Variant::theorem22);

struct UnitBasisBounds {
  double product_height_bound = 0;  // ((s-1)!)^2 / (2^{s-2} d^{s-1}) R_S
  double b_coefficient = 0;         // 53 ((s-1)!)^2 / 2^{s-3} d^2 log(6d)
};
// PreconditionError for s < 2.
UnitBasisBounds unit_basis_bounds(int d, int s, double regulator);

struct BoundInputs {
  int d = 1;
  int s = 2;
  double class_number = 1;  // h_K
  double regulator = 1;     // R_S
  double largest_norm = 1;  // P_S
  Variant archimedean_variant = Variant::theorem22;
};

struct RegimeBound {
  Regime regime = Regime::archimedean;
  double norm = 1;  // N_v
  double value = 0;
  Interval audit;
  std::vector<Factor> factors;
};

struct FinalBound {
  double value = 0;  // worst regime
  Regime worst = Regime::archimedean;
  std::vector<RegimeBound> regimes;
};

double log_star(double x);
Interval log_star(Interval x);

// PreconditionError unless d >= 1, s >= 1, h_K >= 1, R_S > 0, P_S >= 1.
FinalBound final_bound(const BoundInputs& in);

// 400 C1 log(200 C1 C2) at (d, s) in the given regime, as an outward-rounded interval.
Interval headline_coefficient(int d, int s, Regime regime, Variant variant = Variant::theorem22);

struct LedgerStep {
  std::string label;
  double value = 0;
};

struct HeightDropLedger {
  std::vector<LedgerStep> steps;
  bool in_regime = true;  // h_P > 1000
  std::string warning;
};

HeightDropLedger height_drop_ledger(double h_p, Regime regime, double class_number = 1);

}  // namespace a22::baker
