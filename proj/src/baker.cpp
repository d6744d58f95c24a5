#include "a22/baker.hpp"

#include <cmath>
#include <numbers>

#include "a22/errors.hpp"

namespace a22::baker {

std::string_view regime_name(Regime r) { return r == Regime::archimedean ? "archimedean" : "non_archimedean"; }
std::string_view variant_name(Variant v) { return v == Variant::theorem22 ? "theorem22" : "p77"; }

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

template <typename T>
T constant_pi() {
  if constexpr (std::is_same_v<T, Interval>) {
    return Interval::pi();
  } else {
    return std::numbers::pi;
  }
}

template <typename T>
T constant_e() {
  if constexpr (std::is_same_v<T, Interval>) {
    return Interval::e();
  } else {
    return std::numbers::e;
  }
}

// Named factors whose product is the constant; the last factor is a
// dividing one when `divide` is set.
template <typename T>
struct Product {
  std::vector<std::pair<std::string, T>> factors;
  std::vector<bool> divides;

  void mul(std::string name, T v) {
    factors.emplace_back(std::move(name), v);
    divides.push_back(false);
  }
  void div(std::string name, T v) {
    factors.emplace_back(std::move(name), v);
    divides.push_back(true);
  }
  T value() const {
    T acc(1.0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      acc = divides[i] ? acc / factors[i].second : acc * factors[i].second;
    }
    return acc;
  }
};

template <typename T>
std::pair<Product<T>, Product<T>> closed_forms(int d, int s, Regime regime, Variant variant) {
  using std::log;
  using std::pow;
  if (d < 1 || s < 1) throw PreconditionError("constants need d >= 1 and s >= 1");
  const T D(static_cast<double>(d));
  const T S(static_cast<double>(s));
  const T fact2(factorial(s - 1) * factorial(s - 1));
  const T e = constant_e<T>();

  Product<T> c1, c2;
  if (regime == Regime::non_archimedean) {
    c1.mul("12", T(12.0));
    c1.mul("(6(s+1)d)^(2s+2)", pow(T(6.0 * (s + 1) * d), 2.0 * s + 2));
    c1.mul("log(e^5 s d)", T(5.0) + log(S * D));
    c1.mul("((s-1)!)^2", fact2);
    c1.div("2^(s-2)", T(std::ldexp(1.0, s - 2)));
    c1.div("d^(s-1)", pow(D, static_cast<double>(s - 1)));
    c2.mul("53", T(53.0));
    c2.mul("((s-1)!)^2", fact2);
    c2.div("2^(s-3)", T(std::ldexp(1.0, s - 3)));
    c2.mul("d^2", D * D);
    c2.mul("log(6d)", log(T(6.0 * d)));
  } else if (variant == Variant::theorem22) {
    c1.mul("12 pi", T(12.0) * constant_pi<T>());
    c1.mul("30^(s+4)", pow(T(30.0), static_cast<double>(s + 4)));
    c1.mul("(s+1)^5.5", pow(T(s + 1.0), 5.5));
    c1.mul("d^2", D * D);
    c1.mul("log(e d)", T(1.0) + log(D));
    c1.mul("((s-1)!)^2", fact2);
    c1.div("2^s", T(std::ldexp(1.0, s)));
    c2.mul("53 e s", T(53.0) * e * S);
    c2.mul("((s-1)!)^2", fact2);
    c2.div("2^(s-3)", T(std::ldexp(1.0, s - 3)));
    c2.mul("d^2", D * D);
    c2.mul("log(6d)", log(T(6.0 * d)));
  } else {
    if (d == 1) throw PreconditionError("the p77 constant vanishes at d = 1 (log d = 0)");
    c1.mul("240000 d", T(240000.0 * d));
    c1.mul("log(d)^s", pow(log(D), static_cast<double>(s)));
    c1.mul("((s-1)!)^2", fact2);
    c1.mul("2000^s", pow(T(2000.0), static_cast<double>(s)));
    c1.mul("(s+1)^(3s+9)", pow(T(s + 1.0), 3.0 * s + 9));
    c2.mul("8 d", T(8.0 * d));
    c2.mul("((s-1)!)^2", fact2);
    c2.div("2^s", T(std::ldexp(1.0, s)));
  }
  return {c1, c2};
}

std::vector<Factor> itemize(const Product<double>& p) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    out.push_back({(p.divides[i] ? "1/" : "") + p.factors[i].first, p.factors[i].second});
  }
  return out;
}

}  // namespace

LinearFormsConstants constants(int d, int s, Regime regime, Variant variant) {
  const auto [c1, c2] = closed_forms<double>(d, s, regime, variant);
  LinearFormsConstants out;
  out.c1 = c1.value();
  out.c2 = c2.value();
  out.regime = regime;
  out.variant = regime == Regime::archimedean ? variant : Variant::theorem22;
  out.c1_factors = itemize(c1);
  out.c2_factors = itemize(c2);
  out.outside_headline_range = d > 18 || s > 9;
  return out;
}

ConstantsInterval constants_interval(int d, int s, Regime regime, Variant variant) {
  const auto [c1, c2] = closed_forms<Interval>(d, s, regime, variant);
  return {c1.value(), c2.value()};
}

UnitBasisBounds unit_basis_bounds(int d, int s, double regulator) {
  if (s < 2) throw PreconditionError("unit basis bounds need s >= 2");
  if (d < 1) throw PreconditionError("unit basis bounds need d >= 1");
  const double fact2 = factorial(s - 1) * factorial(s - 1);
  UnitBasisBounds b;
  b.product_height_bound = fact2 / (std::ldexp(1.0, s - 2) * std::pow(d, s - 1)) * regulator;
  b.b_coefficient = 53 * fact2 / std::ldexp(1.0, s - 3) * d * d * std::log(6.0 * d);
  return b;
}

double log_star(double x) { return std::max(std::log(x), 1.0); }
Interval log_star(Interval x) { return max(log(x), Interval(1.0)); }

Interval headline_coefficient(int d, int s, Regime regime, Variant variant) {
  const auto c = constants_interval(d, s, regime, variant);
  return Interval(400.0) * c.c1 * log(Interval(200.0) * c.c1 * c.c2);
}

FinalBound final_bound(const BoundInputs& in) {
  if (in.d < 1 || in.s < 1) throw PreconditionError("final bound needs d >= 1 and s >= 1");
  if (!(in.class_number >= 1) || !(in.regulator > 0) || !(in.largest_norm >= 1)) {
    throw PreconditionError("final bound needs h_K >= 1, R_S > 0, P_S >= 1");
  }
  FinalBound out;
  for (Regime regime : {Regime::archimedean, Regime::non_archimedean}) {
    RegimeBound rb;
    rb.regime = regime;
    rb.norm = regime == Regime::archimedean ? 1.0 : in.largest_norm;
    const auto k = constants(in.d, in.s, regime, in.archimedean_variant);
    const double x = in.regulator * in.class_number * rb.norm;
    const double lg = std::log(200 * k.c1 * k.c2);
    rb.value = 400 * k.c1 * x * log_star(x) * lg;
    rb.factors = {{"400", 400},     {"C1", k.c1},      {"C2", k.c2},           {"R_S", in.regulator},
                  {"h_K", in.class_number}, {"N_v", rb.norm}, {"log*(R_S h_K N_v)", log_star(x)},
                  {"log(200 C1 C2)", lg}};

    const auto ki = constants_interval(in.d, in.s, regime, in.archimedean_variant);
    const Interval xi = Interval(in.regulator) * Interval(in.class_number) * Interval(rb.norm);
    rb.audit = Interval(400.0) * ki.c1 * xi * log_star(xi) * log(Interval(200.0) * ki.c1 * ki.c2);

    if (rb.value > out.value) {
      out.value = rb.value;
      out.worst = regime;
    }
    out.regimes.push_back(std::move(rb));
  }
  return out;
}

HeightDropLedger height_drop_ledger(double h_p, Regime regime, double class_number) {
  HeightDropLedger l;
  if (!(h_p > 1000)) {
    l.in_regime = false;
    l.warning = "h(P) <= 1000 is outside the standing assumption h(P) > 1000";
  }
  l.steps.push_back({"places outside S contribute at most h/10", h_p / 10});
  l.steps.push_back({"pigeonhole pair local height floor h/10", h_p / 10});
  l.steps.push_back({"component local height floor h/20", h_p / 20});
  l.steps.push_back({"unit distance floor -log|phi-1|_v >= h/40", h_p / 40});
  l.steps.push_back({"Q-proximity branch floor h/40 (factor 2 absorbed)", h_p / 40});
  if (regime == Regime::archimedean) {
    l.steps.push_back({"archimedean correction h_K log 2", class_number * std::log(2.0)});
  }
  return l;
}

}  // namespace a22::baker
