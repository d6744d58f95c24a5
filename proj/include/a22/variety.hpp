#pragma once

// The model of A_2(2)^S in P^9: five linear forms and one quartic in the
// coordinates x_1..x_10 (indexed by the even characteristics in binary order).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "a22/exact_matrix.hpp"
#include "a22/index_set.hpp"
#include "a22/scalar.hpp"
#include "a22/symplectic.hpp"

namespace a22::variety {

// Coefficients of the linear forms; row k is the k-th form, column i-1 is x_i.
inline constexpr std::array<std::array<int, 10>, 5> kLinearForms = {{
    {0, 0, 0, 0, 0, 0, 1, -1, -1, 1},   // x7 - x9 + x10 - x8
    {1, -1, 0, 0, 0, -1, 0, 0, -1, 0},  // x1 - x2 - x6 - x9
    {0, 0, -1, 1, 0, 1, 0, 0, 0, -1},   // x6 - x3 - x10 + x4
    {-1, 0, 0, 1, 1, 0, 0, 1, 0, 0},    // x5 - x1 + x8 + x4
    {0, 1, -1, 0, 1, 0, -1, 0, 0, 0},   // x5 - x7 + x2 - x3
}};

ExactMatrix linear_system(Domain domain);

// Point of P^9 in canonical form: over Q coprime integers with the first
// nonzero coordinate positive, over F_p the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  // Throws PreconditionError if every coordinate is zero, DomainError on mixed domains.
  explicit ProjectivePoint(std::array<Scalar, 10> coords);
  static ProjectivePoint from_integers(const std::array<long, 10>& values, Domain domain = Domain::rationals());

  // 1-based.
  const Scalar& operator[](int index) const { return coords_[index - 1]; }
  const std::array<Scalar, 10>& coords() const { return coords_; }
  Domain domain() const { return coords_[0].domain(); }

  IndexSet zero_set() const;
  // Canonical integer representatives: the coprime integers over Q,
  // residues in [0, p) over F_p.
  std::array<Integer, 10> integers() const;
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::array<Scalar, 10> coords_;
};

// Coordinatewise order on canonical representatives (numeric over Q, residues over F_p).
bool canonical_less(const ProjectivePoint& a, const ProjectivePoint& b);

// The five linear forms followed by the quartic (sum x^2)^2 - 4 sum x^4.
std::array<Scalar, 6> residuals(const std::array<Scalar, 10>& x);
std::array<Scalar, 6> residuals(const ProjectivePoint& p);
bool is_on_variety(const ProjectivePoint& p);

// All points with coordinates in {-1,0,1} over Q, or all F_p-points for
// p in {2,3,5,7}. Throws ConfigurationError for other primes.
std::vector<ProjectivePoint> enumerate_small_points(Domain domain);

// x_k = coefficient * x_l on the solution space, k < l.
struct BinaryRelation {
  int k = 0;
  int l = 0;
  int coefficient = 1;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;
};

struct VanishingClosure {
  IndexSet input;
  IndexSet forced;
  std::vector<BinaryRelation> relations;
  // Reduced rows with three or more surviving terms, integer-scaled, as printed text.
  std::vector<std::string> raw_relations;
};

// Consequences over Q of the linear forms after setting x_i = 0 for i in I.
VanishingClosure linear_closure(IndexSet vanishing);

// (M . x)_i = phi(m_i, M) x_{m_i (.) M}, renormalized.
ProjectivePoint apply_signed_map(const ProjectivePoint& p, const sp::SymplecticMatrix& M);
ProjectivePoint apply_signed_map(const ProjectivePoint& p, const sp::SignedCoordinateMap& map);

}  // namespace a22::variety
