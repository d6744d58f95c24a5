#include "a22/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "a22/errors.hpp"

namespace a22::theta {

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0.0, 1.0);

using C2 = std::array<std::array<cd, 2>, 2>;

C2 mul(const C2& a, const C2& b) {
  C2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

cd det(const C2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

double min_eigen_sym(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return mean - rad;
}

// Sum over p in Z^dim, |p|_inf <= n, of exp(i pi q tau q + i pi q.b), q = p + a/2
// with a reduced mod 2 (the lattice coset depends only on a mod 2).
cd lattice_sum2(const std::array<int, 4>& m, const SiegelMatrix& tau, int n) {
  const double a1 = 0.5 * (((m[0] % 2) + 2) % 2);
  const double a2 = 0.5 * (((m[1] % 2) + 2) % 2);
  const double b1 = m[2], b2 = m[3];
  const cd t11 = tau(0, 0), t12 = tau(0, 1), t22 = tau(1, 1);
  cd sum = 0;
  for (int p1 = -n; p1 <= n; ++p1) {
    const double q1 = p1 + a1;
    for (int p2 = -n; p2 <= n; ++p2) {
      const double q2 = p2 + a2;
      const cd quad = q1 * q1 * t11 + 2.0 * q1 * q2 * t12 + q2 * q2 * t22;
      sum += std::exp(kI * kPi * (quad + q1 * b1 + q2 * b2));
    }
  }
  return sum;
}

}  // namespace

SiegelMatrix::SiegelMatrix(cd t11, cd t12, cd t22) : t11_(t11), t12_(t12), t22_(t22) {
  const double a = t11.imag(), b = t12.imag(), d = t22.imag();
  if (!(a > 0) || !(a * d - b * b > 0)) throw DomainError("Im(tau) is not positive definite");
}

double SiegelMatrix::lambda_min() const { return min_eigen_sym(t11_.imag(), t12_.imag(), t22_.imag()); }

double tail_bound(int dim, int n, double lambda) {
  if (!(lambda > 0)) return std::numeric_limits<double>::infinity();
  const double k = n + 1;
  const double first = (dim == 1 ? 2.0 : 8.0 * k) * std::exp(-kPi * lambda * (k - 0.5) * (k - 0.5));
  const double growth = dim == 1 ? 1.0 : (k + 1) / k;
  const double r = growth * std::exp(-2 * kPi * lambda * k);
  if (r >= 1) return std::numeric_limits<double>::infinity();
  return first / (1 - r);
}

int radius_for(int dim, double lambda, double tol) {
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  for (int n = 1; n < 100000; ++n) {
    if (tail_bound(dim, n, lambda) < tol) return n;
  }
  throw DomainError("Im(tau) too close to degenerate for the requested tolerance");
}

cd theta_sum(const std::array<int, 4>& m, const SiegelMatrix& tau, int radius) {
  return lattice_sum2(m, tau, radius);
}

ThetaValue theta_constant(const std::array<int, 4>& m, const SiegelMatrix& tau, double tol) {
  ThetaValue v;
  const int q2 = (m[0] * m[2] + m[1] * m[3]) % 2;
  if (q2 != 0) {
    v.value = 0;
    return v;
  }
  const double lambda = tau.lambda_min();
  v.radius = radius_for(2, lambda, tol);
  v.tail_bound = tail_bound(2, v.radius, lambda);
  v.value = lattice_sum2(m, tau, v.radius);
  return v;
}

ThetaValue theta_constant(chars::Characteristic m, const SiegelMatrix& tau, double tol) {
  return theta_constant({int(m.bit(0)), int(m.bit(1)), int(m.bit(2)), int(m.bit(3))}, tau, tol);
}

ThetaValue theta1(int a, int b, cd t, double tol) {
  if (!(t.imag() > 0)) throw DomainError("Im(t) must be positive");
  ThetaValue v;
  if ((a * b) % 2 != 0) {
    v.value = 0;
    return v;
  }
  v.radius = radius_for(1, t.imag(), tol);
  v.tail_bound = tail_bound(1, v.radius, t.imag());
  const double s = 0.5 * (((a % 2) + 2) % 2);
  for (int n = -v.radius; n <= v.radius; ++n) {
    const double q = n + s;
    v.value += std::exp(kI * kPi * (q * q * t + q * double(b)));
  }
  return v;
}

PsiValue psi_numeric(const SiegelMatrix& tau, double tol) {
  PsiValue out;
  double largest = 0;
  int at = 0;
  for (int i = 0; i < 10; ++i) {
    const auto v = theta_constant(chars::kEven[i], tau, tol);
    out.theta[i] = v.value;
    out.raw[i] = std::pow(v.value, 4);
    out.tail_total += v.tail_bound;
    if (std::abs(out.raw[i]) > largest) {
      largest = std::abs(out.raw[i]);
      at = i;
    }
  }
  const cd pivot = out.raw[at];
  for (int i = 0; i < 10; ++i) out.x[i] = out.raw[i] / pivot;
  return out;
}

std::array<double, 6> residual_magnitudes(const std::array<cd, 10>& x) {
  std::array<double, 6> r{};
  for (int f = 0; f < 5; ++f) {
    cd s = 0;
    for (int i = 0; i < 10; ++i) s += double(variety::kLinearForms[f][i]) * x[i];
    r[f] = std::abs(s);
  }
  cd s2 = 0, s4 = 0;
  for (const cd& v : x) {
    s2 += v * v;
    s4 += v * v * v * v;
  }
  r[5] = std::abs(s2 * s2 - 4.0 * s4);
  return r;
}

bool is_integral_symplectic(const IntMatrix& m) {
  // tM J M with J = (0 I; -I 0)
  static const IntMatrix J{{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
  IntMatrix t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
  return multiply(multiply(t, J), m) == J;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

sp::SymplecticMatrix reduce_mod2(const IntMatrix& m) {
  std::array<std::array<int, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e[i][j] = int(((m[i][j] % 2) + 2) % 2);
  return sp::SymplecticMatrix(sp::F2Matrix::from_entries(e));
}

namespace {

C2 block(const IntMatrix& m, int r0, int c0) {
  return {{{double(m[r0][c0]), double(m[r0][c0 + 1])}, {double(m[r0 + 1][c0]), double(m[r0 + 1][c0 + 1])}}};
}

C2 as_c2(const SiegelMatrix& t) { return {{{t(0, 0), t(0, 1)}, {t(1, 0), t(1, 1)}}}; }

C2 add(const C2& a, const C2& b) {
  return {{{a[0][0] + b[0][0], a[0][1] + b[0][1]}, {a[1][0] + b[1][0], a[1][1] + b[1][1]}}};
}

C2 ctd(const IntMatrix& m, const SiegelMatrix& tau) { return add(mul(block(m, 2, 0), as_c2(tau)), block(m, 2, 2)); }

}  // namespace

cd j_factor(const IntMatrix& m, const SiegelMatrix& tau) { return det(ctd(m, tau)); }

SiegelMatrix act(const IntMatrix& m, const SiegelMatrix& tau) {
  if (!is_integral_symplectic(m)) throw PreconditionError("matrix is not integral symplectic");
  const C2 den = ctd(m, tau);
  const cd dt = det(den);
  if (std::abs(dt) < 1e-300) throw DomainError("C tau + D is singular");
  const C2 inv{{{den[1][1] / dt, -den[0][1] / dt}, {-den[1][0] / dt, den[0][0] / dt}}};
  const C2 r = mul(add(mul(block(m, 0, 0), as_c2(tau)), block(m, 0, 2)), inv);
  // The result is symmetric in exact arithmetic; average away rounding.
  return SiegelMatrix(r[0][0], 0.5 * (r[0][1] + r[1][0]), r[1][1]);
}

ModularityReport verify_modularity(const IntMatrix& m, const SiegelMatrix& tau, double tol) {
  const auto M = reduce_mod2(m);
  const SiegelMatrix mt = act(m, tau);
  const cd j = j_factor(m, tau);
  const PsiValue at_tau = psi_numeric(tau, tol);
  const PsiValue at_mt = psi_numeric(mt, tol);
  ModularityReport rep;
  cd mean = 0;
  for (int i = 0; i < 10; ++i) {
    const auto target = dot_action(chars::kEven[i], M);
    const int k = *target.index() - 1;
    rep.ratios[i] = at_mt.raw[i] / (j * j * at_tau.raw[k]) * double(sp::coordinate_sign(chars::kEven[i], M));
    mean += rep.ratios[i];
  }
  rep.zeta4 = mean.real() >= 0 ? 1 : -1;
  for (const cd& r : rep.ratios) rep.spread = std::max(rep.spread, std::abs(r - double(rep.zeta4)));
  return rep;
}

RosenhainReport rosenhain(const std::array<cd, 10>& t, double tol) {
  double scale = 0;
  for (const cd& v : t) scale = std::max(scale, std::norm(v));
  auto guard = [&](cd den, const char* what) {
    if (!(std::abs(den) > tol * scale)) throw DegeneratePointError(std::string("vanishing denominator in ") + what);
  };
  // 0-based: Theta_1 .. Theta_10 -> t[0] .. t[9]
  const cd d1 = t[1] * t[3], d2 = t[1] * t[9], d3 = t[3] * t[9];
  guard(d1, "lambda1");
  guard(d2, "lambda2");
  guard(d3, "lambda3");
  RosenhainReport r;
  r.lambda1 = t[0] * t[2] / d1;
  r.lambda2 = t[2] * t[8] / d2;
  r.lambda3 = t[0] * t[8] / d3;

  std::array<cd, 10> x{};
  for (int i = 0; i < 10; ++i) x[i] = t[i] * t[i];
  const cd den = 2.0 * x[1] * x[3];
  guard(den, "the rational lambda1 formula");
  const cd rat = (x[6] * x[7] - x[0] * x[1] - x[2] * x[3]) / den;
  r.lambda1_sign = std::abs(rat - r.lambda1) <= std::abs(-rat - r.lambda1) ? 1 : -1;
  r.lambda1_rational = double(r.lambda1_sign) * rat;
  const cd sq = r.lambda1 * r.lambda1;
  r.lambda1_squared_agreement = std::abs(rat * rat - sq) / std::max(std::abs(sq), 1e-300);

  const std::array<cd, 5> pts{0.0, 1.0, r.lambda1, r.lambda2, r.lambda3};
  r.min_weierstrass_separation = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) r.min_weierstrass_separation = std::min(r.min_weierstrass_separation, std::abs(pts[a] - pts[b]));
  return r;
}

FixedPointReport fixed_point_check(const variety::ProjectivePoint& p) {
  const auto& group = sp::Group::instance();
  const auto M = sp::exclusion_involution();
  FixedPointReport rep;
  for (int i = 1; i <= 10; ++i) {
    for (int j = i + 1; j <= 10; ++j) {
      const std::array<int, 2> src{1, 2}, dst{i, j};
      const auto N = group.find_transporter(src, dst);
      if (!N) throw std::logic_error("no transporter for a pair of even characteristics");
      const auto G = N->inverse() * M * *N;
      PairCheck c;
      c.i = i;
      c.j = j;
      c.equal_up_to_epsilon = p[i] == p[j] * Scalar(sp::epsilon(i, j), p.domain());
      c.fixed = variety::apply_signed_map(p, G) == p;
      if (c.equal_up_to_epsilon != c.fixed) rep.biconditional_holds = false;
      rep.pairs.push_back(c);
    }
  }
  return rep;
}

cd random_upper_half(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double l = u(rng);
  return {u(rng), l * l + 0.5};
}

SiegelMatrix random_tau(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double L[2][2];
  for (auto& row : L)
    for (double& v : row) v = u(rng);
  // L tL + I/2
  const double i11 = L[0][0] * L[0][0] + L[0][1] * L[0][1] + 0.5;
  const double i12 = L[0][0] * L[1][0] + L[0][1] * L[1][1];
  const double i22 = L[1][0] * L[1][0] + L[1][1] * L[1][1] + 0.5;
  const double r11 = u(rng), r12 = u(rng), r22 = u(rng);
  return SiegelMatrix({r11, i11}, {r12, i12}, {r22, i22});
}

IntMatrix random_symplectic(std::mt19937_64& rng, const SiegelMatrix& tau) {
  std::uniform_int_distribution<int> count(1, 4), kind(0, 2), entry(-1, 1), which(0, 3);
  static const std::array<std::array<long, 4>, 4> small_a{{{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}}};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    IntMatrix m{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    const int n = count(rng);
    for (int g = 0; g < n; ++g) {
      IntMatrix gen{};
      switch (kind(rng)) {
        case 0: {  // (I S; 0 I)
          const long s11 = entry(rng), s12 = entry(rng), s22 = entry(rng);
          gen = {{{1, 0, s11, s12}, {0, 1, s12, s22}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
          break;
        }
        case 1:
          gen = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
          break;
        default: {  // diag(A, A^{-T}); every A listed has det +-1
          const auto& a = small_a[which(rng)];
          const long det = a[0] * a[3] - a[1] * a[2];
          // A^{-1} = adj(A) / det, so A^{-T} = adj(A)^T / det
          const long i00 = a[3] / det, i01 = -a[1] / det, i10 = -a[2] / det, i11 = a[0] / det;
          gen = {{{a[0], a[1], 0, 0}, {a[2], a[3], 0, 0}, {0, 0, i00, i10}, {0, 0, i01, i11}}};
        }
      }
      m = multiply(m, gen);
    }
    try {
      if (act(m, tau).lambda_min() >= 0.1) return m;
    } catch (const DomainError&) {
    }
  }
  throw std::logic_error("could not sample a symplectic matrix with well-conditioned image");
}

}  // namespace a22::theta
