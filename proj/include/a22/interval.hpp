#pragma once

// Closed intervals of doubles with outward rounding. Basic operations are
// widened by one ulp each way; libm results (log, exp, pow) by two.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace a22 {

class Interval {
 public:
  constexpr Interval() = default;
  constexpr explicit Interval(double v) : lo_(v), hi_(v) {}
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }

  static Interval pi() { return widen(std::numbers::pi, 1); }
  static Interval e() { return widen(std::numbers::e, 1); }

  friend Interval operator+(Interval a, Interval b) { return outward(a.lo_ + b.lo_, a.hi_ + b.hi_, 1); }
  friend Interval operator-(Interval a, Interval b) { return outward(a.lo_ - b.hi_, a.hi_ - b.lo_, 1); }
  friend Interval operator*(Interval a, Interval b) {
    const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return outward(*std::min_element(p, p + 4), *std::max_element(p, p + 4), 1);
  }
  friend Interval operator/(Interval a, Interval b) {
    if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
    const double q[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    return outward(*std::min_element(q, q + 4), *std::max_element(q, q + 4), 1);
  }

  // Monotone increasing functions on positive arguments.
  friend Interval log(Interval a) {
    if (a.lo_ <= 0) throw std::domain_error("log of a non-positive interval");
    return outward(std::log(a.lo_), std::log(a.hi_), 2);
  }
  friend Interval pow(Interval a, double k) {
    if (a.lo_ <= 0 || k < 0) throw std::domain_error("pow needs positive base and exponent");
    return outward(std::pow(a.lo_, k), std::pow(a.hi_, k), 2);
  }
  friend Interval max(Interval a, Interval b) { return Interval(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_)); }

 private:
  static Interval widen(double v, int ulps) { return outward(v, v, ulps); }
  static Interval outward(double lo, double hi, int ulps) {
    for (int k = 0; k < ulps; ++k) {
      lo = std::nextafter(lo, -INFINITY);
      hi = std::nextafter(hi, INFINITY);
    }
    return Interval(lo, hi);
  }

  double lo_ = 0;
  double hi_ = 0;
};

}  // namespace a22
