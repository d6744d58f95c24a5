#pragma once

// Genus-2 theta constants in double precision with a certified truncation
// bound, the map psi to P^9, and numeric checks of the identities they obey.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "a22/characteristics.hpp"
#include "a22/symplectic.hpp"
#include "a22/variety.hpp"

namespace a22::theta {

using cd = std::complex<double>;

// Symmetric 2x2 complex matrix with positive definite imaginary part.
class SiegelMatrix {
 public:
  // Throws DomainError unless Im is positive definite.
  SiegelMatrix(cd t11, cd t12, cd t22);
  static SiegelMatrix diagonal(cd t1, cd t2) { return SiegelMatrix(t1, 0.0, t2); }

  cd operator()(int r, int c) const { return r == 0 ? (c == 0 ? t11_ : t12_) : (c == 0 ? t12_ : t22_); }
  // Smallest eigenvalue of Im(tau).
  double lambda_min() const;

 private:
  cd t11_, t12_, t22_;
};

struct ThetaValue {
  cd value;
  int radius = 0;         // truncation |p|_inf <= radius
  double tail_bound = 0;  // bound on the omitted terms
};

// Bound on the omitted mass for |p|_inf > n in dimension dim (1 or 2):
// sum_{k > n} c_k exp(-pi lambda (k - 1/2)^2), c_k = 2 (dim 1) or 8k (dim 2),
// summed geometrically.
double tail_bound(int dim, int n, double lambda);
// Smallest radius >= 1 whose tail bound is below tol.
int radius_for(int dim, double lambda, double tol);

// m = (m'_1, m'_2, m''_1, m''_2) in Z^4. Odd characteristics give exactly 0.
ThetaValue theta_constant(const std::array<int, 4>& m, const SiegelMatrix& tau, double tol);
ThetaValue theta_constant(chars::Characteristic m, const SiegelMatrix& tau, double tol);
// Same sum at a fixed radius (for truncation self-consistency checks).
cd theta_sum(const std::array<int, 4>& m, const SiegelMatrix& tau, int radius);

// Genus-1 theta constant with characteristic (a, b), Im t > 0.
ThetaValue theta1(int a, int b, cd t, double tol);

struct PsiValue {
  std::array<cd, 10> theta;  // Theta_m(tau) for the even m in index order
  std::array<cd, 10> x;      // Theta^4 divided by the coordinate of largest modulus
  std::array<cd, 10> raw;    // Theta^4, unnormalized
  double tail_total = 0;
};

PsiValue psi_numeric(const SiegelMatrix& tau, double tol);
// |values| of the five linear forms and the quartic at x.
std::array<double, 6> residual_magnitudes(const std::array<cd, 10>& x);

// Integral 4x4 matrix acting by (A tau + B)(C tau + D)^{-1}.
using IntMatrix = std::array<std::array<long, 4>, 4>;
bool is_integral_symplectic(const IntMatrix& m);  // tM J M = J, J = (0 I; -I 0)
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
sp::SymplecticMatrix reduce_mod2(const IntMatrix& m);

// DomainError if C tau + D is singular.
SiegelMatrix act(const IntMatrix& m, const SiegelMatrix& tau);
cd j_factor(const IntMatrix& m, const SiegelMatrix& tau);  // det(C tau + D)

struct ModularityReport {
  std::array<cd, 10> ratios;  // x_m(M tau) / (j^2 x_{m.M}(tau)) times the sign of m
  int zeta4 = 1;              // common value, rounded to +-1
  double spread = 0;          // max |ratio - zeta4|
};

ModularityReport verify_modularity(const IntMatrix& m, const SiegelMatrix& tau, double tol);

struct RosenhainReport {
  cd lambda1, lambda2, lambda3;  // from the squared-theta cross-ratios
  cd lambda1_rational;           // signed rational formula in the fourth powers
  int lambda1_sign = 1;
  double lambda1_squared_agreement = 0;  // relative |lambda1_rat^2 - lambda1^2|
  double min_weierstrass_separation = 0;  // among {0, 1, lambda1, lambda2, lambda3}
};

// theta_sq: Theta_m^2 in index order. DegeneratePointError when a denominator
// is below tol times the largest |Theta^2|^2.
RosenhainReport rosenhain(const std::array<cd, 10>& theta_sq, double tol);

struct PairCheck {
  int i = 0;
  int j = 0;
  bool equal_up_to_epsilon = false;  // x_i = eps(i,j) x_j
  bool fixed = false;                 // N^{-1} M N . P = P
};

struct FixedPointReport {
  std::vector<PairCheck> pairs;
  bool biconditional_holds = true;
};

// Exact check over the 45 pairs with M the exclusion involution and N_{ij}
// carrying (m_1, m_2) to (m_i, m_j).
FixedPointReport fixed_point_check(const variety::ProjectivePoint& p);

// Seeded sampling: Im tau = L tL + I/2 with L uniform in [-1,1], Re tau uniform in [-1,1].
SiegelMatrix random_tau(std::mt19937_64& rng);
cd random_upper_half(std::mt19937_64& rng);
// Product of 1..4 random generators (translations, J, diag(A, A^{-T})),
// resampled until Im(M tau) has smallest eigenvalue >= 0.1.
IntMatrix random_symplectic(std::mt19937_64& rng, const SiegelMatrix& tau);

}  // namespace a22::theta
