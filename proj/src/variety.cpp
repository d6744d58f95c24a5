#include "a22/variety.hpp"

#include <algorithm>
#include <sstream>

#include "a22/errors.hpp"
#include "a22/kernels.hpp"

namespace a22::variety {

ExactMatrix linear_system(Domain domain) {
  ExactMatrix m(5, 10, domain);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 10; ++c) m(r, c) = Scalar(kLinearForms[r][c], domain);
  }
  return m;
}

namespace {

std::array<Scalar, 10> normalize(std::array<Scalar, 10> x) {
  const Domain d = x[0].domain();
  for (const auto& v : x) {
    if (v.domain() != d) throw DomainError("projective point mixes scalar domains");
  }
  const auto first = std::find_if(x.begin(), x.end(), [](const Scalar& v) { return !v.is_zero(); });
  if (first == x.end()) throw PreconditionError("all coordinates of a projective point are zero");

  if (!d.is_rational()) {
    const Scalar inv = first->inverse();
    for (auto& v : x) v *= inv;
    return x;
  }

  Integer den = 1;
  for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.rational().get_den_mpz_t());
  Integer g = 0;
  std::array<Integer, 10> num;
  for (std::size_t i = 0; i < 10; ++i) {
    num[i] = x[i].rational().get_num() * (den / x[i].rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
  }
  const bool flip = sgn(first->rational()) < 0;
  for (std::size_t i = 0; i < 10; ++i) {
    Integer v = num[i] / g;
    if (flip) v = -v;
    x[i] = Scalar(Rational(v));
  }
  return x;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::array<Scalar, 10> coords) : coords_(normalize(std::move(coords))) {}

ProjectivePoint ProjectivePoint::from_integers(const std::array<long, 10>& values, Domain domain) {
  std::array<Scalar, 10> x;
  for (std::size_t i = 0; i < 10; ++i) x[i] = Scalar(values[i], domain);
  return ProjectivePoint(x);
}

IndexSet ProjectivePoint::zero_set() const {
  IndexSet z;
  for (int i = 1; i <= 10; ++i) {
    if ((*this)[i].is_zero()) z.insert(i);
  }
  return z;
}

std::array<Integer, 10> ProjectivePoint::integers() const {
  std::array<Integer, 10> out;
  for (std::size_t i = 0; i < 10; ++i) {
    out[i] = domain().is_rational() ? Integer(coords_[i].rational().get_num())
                                    : Integer(static_cast<unsigned long>(coords_[i].residue()));
  }
  return out;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << "(";
  const auto v = integers();
  for (std::size_t i = 0; i < 10; ++i) os << (i ? ":" : "") << v[i];
  os << ")";
  return os.str();
}

bool canonical_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  const auto va = a.integers();
  const auto vb = b.integers();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::array<Scalar, 6> residuals(const std::array<Scalar, 10>& x) {
  const Domain d = x[0].domain();
  std::array<Scalar, 6> out;
  for (std::size_t r = 0; r < 5; ++r) {
    Scalar acc = Scalar::zero(d);
    for (std::size_t c = 0; c < 10; ++c) {
      if (kLinearForms[r][c] == 1) acc += x[c];
      if (kLinearForms[r][c] == -1) acc -= x[c];
    }
    out[r] = acc;
  }
  Scalar s2 = Scalar::zero(d);
  Scalar s4 = Scalar::zero(d);
  for (const auto& v : x) {
    const Scalar sq = v * v;
    s2 += sq;
    s4 += sq * sq;
  }
  out[5] = s2 * s2 - Scalar(4, d) * s4;
  return out;
}

std::array<Scalar, 6> residuals(const ProjectivePoint& p) { return residuals(p.coords()); }

bool is_on_variety(const ProjectivePoint& p) {
  const auto r = residuals(p);
  return std::all_of(r.begin(), r.end(), [](const Scalar& v) { return v.is_zero(); });
}

std::vector<ProjectivePoint> enumerate_small_points(Domain domain) {
  std::vector<ProjectivePoint> out;
  if (domain.is_rational()) {
    for (const auto& t : kernels::ternary_scan(kernels::Mode::parallel)) {
      std::array<long, 10> v{};
      std::copy(t.begin(), t.end(), v.begin());
      out.push_back(ProjectivePoint::from_integers(v));
    }
  } else {
    const auto p = domain.characteristic();
    if (p != 2 && p != 3 && p != 5 && p != 7) {
      throw ConfigurationError("point enumeration supports F_2, F_3, F_5, F_7 only, got F_" + std::to_string(p));
    }
    for (const auto& t : kernels::prime_field_scan(p, kernels::Mode::parallel)) {
      std::array<long, 10> v{};
      std::copy(t.begin(), t.end(), v.begin());
      out.push_back(ProjectivePoint::from_integers(v, domain));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// Text of a row sum_c coeff_c x_c = 0 after clearing denominators.
std::string format_row(const ExactVector& row) {
  Integer den = 1;
  for (const auto& v : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.rational().get_den_mpz_t());
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c].is_zero()) continue;
    const Integer k = row[c].rational().get_num() * (den / row[c].rational().get_den());
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    const Integer mag = abs(k);
    if (mag != 1) os << mag;
    os << "x" << (c + 1);
    first = false;
  }
  os << " = 0";
  return os.str();
}

}  // namespace

VanishingClosure linear_closure(IndexSet vanishing) {
  const Domain q = Domain::rationals();
  const auto zeros = vanishing.to_vector();
  ExactMatrix system(5 + zeros.size(), 10, q);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 10; ++c) system(r, c) = Scalar(kLinearForms[r][c], q);
  }
  for (std::size_t k = 0; k < zeros.size(); ++k) system(5 + k, zeros[k] - 1) = Scalar::one(q);

  const RrefResult rr = rref(system);
  const auto& basis = rr.kernel_basis;

  VanishingClosure out;
  out.input = vanishing;
  for (int j = 1; j <= 10; ++j) {
    if (std::all_of(basis.begin(), basis.end(), [&](const ExactVector& b) { return b[j - 1].is_zero(); })) {
      out.forced.insert(j);
    }
  }

  // Every x_k = c x_l holding on the whole solution space, read off the kernel basis.
  for (int k = 1; k <= 10; ++k) {
    if (out.forced.contains(k)) continue;
    for (int l = k + 1; l <= 10; ++l) {
      if (out.forced.contains(l)) continue;
      for (int c : {1, -1}) {
        const Scalar cs(c, q);
        const bool holds = std::all_of(basis.begin(), basis.end(),
                                       [&](const ExactVector& b) { return b[k - 1] == cs * b[l - 1]; });
        if (holds) out.relations.push_back({k, l, c});
      }
    }
  }

  for (std::size_t r = 0; r < rr.rank; ++r) {
    ExactVector row = rr.reduced.row(r);
    for (int j : out.forced.to_vector()) row[j - 1] = Scalar::zero(q);
    const auto terms = std::count_if(row.begin(), row.end(), [](const Scalar& v) { return !v.is_zero(); });
    if (terms >= 3) out.raw_relations.push_back(format_row(row));
  }
  return out;
}

ProjectivePoint apply_signed_map(const ProjectivePoint& p, const sp::SignedCoordinateMap& map) {
  std::array<Scalar, 10> x;
  for (int i = 0; i < 10; ++i) {
    x[i] = p[map.source[i]];
    if (map.sign[i] < 0) x[i] = -x[i];
  }
  return ProjectivePoint(x);
}

ProjectivePoint apply_signed_map(const ProjectivePoint& p, const sp::SymplecticMatrix& M) {
  return apply_signed_map(p, sp::signed_map(M));
}

}  // namespace a22::variety
