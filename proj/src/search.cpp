#include "a22/search.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "a22/errors.hpp"
#include "a22/exact_matrix.hpp"

namespace a22::search {

int SearchConfig::exponent_range() const {
  if (alphabet == AlphabetKind::pm1) return 0;
  if (height_bound < 0) throw ConfigurationError("height bound must be nonnegative");
  // Guard against log 2 * k landing a hair above an integer multiple.
  const double ratio = height_bound / std::log(2.0);
  return static_cast<int>(std::floor(ratio + 1e-12));
}

Reduction candidate_form_reduction(const SearchConfig& cfg) {
  Reduction r;
  r.exponent_range = cfg.exponent_range();
  r.alphabet = kernels::alphabet(r.exponent_range, cfg.allow_zero_coordinates);
  r.search_space_ratio_vs_height_4 = std::exp(cfg.height_bound - 4.0);
  r.steps = {
      "points with good reduction outside 2 have coordinates in Z[1/2] after scaling",
      "scale to primitive integers: every odd prime has equal valuation on all coordinates",
      "primitivity forces that common valuation to be 0, so each coordinate is +-2^a (or 0)",
      "height of a primitive point is log max|x_i| <= bound, so a <= floor(bound / log 2) = " +
          std::to_string(r.exponent_range),
  };
  if (cfg.alphabet == AlphabetKind::pm1) r.steps.push_back("alphabet restricted to +-1 (cross-validation mode)");
  if (cfg.height_bound > 4.0 && cfg.alphabet == AlphabetKind::pm2) {
    r.steps.push_back("comparative mode only: powers of 2 alone do not cover S = {inf, p} for odd p");
  }
  return r;
}

namespace {

struct Solve {
  bool ok = false;
  std::array<kernels::SolvedCoordinate, 5> dependent{};
};

Solve solve_for(const std::array<int, 5>& free) {
  const Domain q = Domain::rationals();
  std::array<int, 5> dep{};
  int k = 0;
  for (int i = 1; i <= 10; ++i) {
    if (std::find(free.begin(), free.end(), i) == free.end()) {
      if (k == 5) return {};
      dep[k++] = i;
    }
  }
  if (k != 5) return {};
  // [L_dep | -L_free] reduced; an identity left block gives x_dep = R x_free.
  ExactMatrix aug(5, 10, q);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      aug(r, c) = Scalar(variety::kLinearForms[r][dep[c] - 1], q);
      aug(r, 5 + c) = Scalar(-variety::kLinearForms[r][free[c] - 1], q);
    }
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < 5 || rr.pivot_columns[4] != 4) return {};
  Solve s;
  s.ok = true;
  for (std::size_t r = 0; r < 5; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < 5; ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rr.reduced(r, 5 + c).rational().get_den_mpz_t());
    }
    auto& out = s.dependent[r];
    out.index = dep[r];
    out.den = den.get_si();
    for (std::size_t c = 0; c < 5; ++c) {
      const Rational& v = rr.reduced(r, 5 + c).rational();
      const Integer n = v.get_num() * (den / v.get_den());
      if (!n.fits_slong_p()) throw ConfigurationError("solved coefficients too large");
      out.num[c] = n.get_si();
    }
  }
  return s;
}

std::string join(const std::array<int, 5>& v) {
  std::string s;
  for (int i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

}  // namespace

std::array<int, 5> default_free_coordinates() {
  const RrefResult rr = rref(variety::linear_system(Domain::rationals()));
  std::array<int, 5> free{};
  std::size_t k = 0;
  for (std::size_t c = 0; c < 10; ++c) {
    if (std::find(rr.pivot_columns.begin(), rr.pivot_columns.end(), c) == rr.pivot_columns.end()) {
      free[k++] = static_cast<int>(c + 1);
    }
  }
  return free;
}

kernels::FreeTupleProblem make_problem(const SearchConfig& cfg) {
  std::array<int, 5> free = cfg.free_coordinates.value_or(default_free_coordinates());
  std::sort(free.begin(), free.end());
  for (int i : free) {
    if (i < 1 || i > 10) throw ConfigurationError("free coordinate out of range: " + std::to_string(i));
  }
  if (std::adjacent_find(free.begin(), free.end()) != free.end()) {
    throw ConfigurationError("free coordinates must be distinct");
  }
  const Solve s = solve_for(free);
  if (!s.ok) {
    std::string alternative = "none";
    // 5-subsets of {1..10} in lexicographic order.
    std::array<int, 5> cand{1, 2, 3, 4, 5};
    while (alternative == "none") {
      if (solve_for(cand).ok) {
        alternative = join(cand);
        break;
      }
      int k = 4;
      while (k >= 0 && cand[k] == 6 + k) --k;
      if (k < 0) break;
      ++cand[k];
      for (int j = k + 1; j < 5; ++j) cand[j] = cand[j - 1] + 1;
    }
    throw ConfigurationError("free coordinates {" + join(free) +
                             "} leave a singular system; a valid choice is {" + alternative + "}");
  }
  kernels::FreeTupleProblem p;
  p.free_indices = free;
  p.dependent = s.dependent;
  p.max_exponent = cfg.exponent_range();
  p.allow_zero = cfg.allow_zero_coordinates;

  std::int64_t worst = 0;
  for (const auto& d : p.dependent) {
    for (auto n : d.num) worst = std::max<std::int64_t>(worst, std::llabs(n));
  }
  if (p.max_exponent > 40 || worst > (std::int64_t{1} << 16)) {
    throw ConfigurationError("alphabet too large for 64-bit candidate arithmetic");
  }
  return p;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string canonical_record(const SearchConfig& cfg, const SearchResult& result) {
  const auto& c = result.certificate;
  std::ostringstream os;
  os << std::setprecision(17);
  os << "height_bound=" << cfg.height_bound << "\n"
     << "alphabet=" << (cfg.alphabet == AlphabetKind::pm2 ? "pm2" : "pm1") << "\n"
     << "allow_zero=" << cfg.allow_zero_coordinates << "\n"
     << "free=" << join(c.free_coordinates) << "\n"
     << "solved=" << join(c.solved_coordinates) << "\n"
     << "exponent_range=" << c.exponent_range << "\n"
     << "free_tuples=" << c.free_tuples << "\n"
     << "candidates=" << c.candidates << "\n"
     << "rejected=";
  for (auto r : c.rejected_per_solved_coordinate) os << r << ";";
  os << "\nquartic_tested=" << c.quartic_tested << "\n"
     << "accepted_tuples=" << c.accepted_tuples << "\n"
     << "points=";
  for (const auto& p : result.points) os << p.to_string() << ";";
  os << "\n";
  return os.str();
}

SearchResult run_search(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto problem = make_problem(cfg);
  const auto outcome = kernels::free_tuple_scan(problem, cfg.mode);

  std::set<std::array<long, 10>> seen;
  SearchResult result;
  for (const auto& raw : outcome.points) {
    std::array<long, 10> v{};
    std::copy(raw.begin(), raw.end(), v.begin());
    const auto point = variety::ProjectivePoint::from_integers(v);
    if (!variety::is_on_variety(point)) throw std::logic_error("search accepted a point off the model");
    std::array<long, 10> key{};
    const auto ints = point.integers();
    for (int i = 0; i < 10; ++i) key[i] = ints[i].get_si();
    if (seen.insert(key).second) result.points.push_back(point);
  }
  std::sort(result.points.begin(), result.points.end(), variety::canonical_less);

  auto& c = result.certificate;
  c.free_coordinates = problem.free_indices;
  for (int k = 0; k < 5; ++k) c.solved_coordinates[k] = problem.dependent[k].index;
  c.exponent_range = problem.max_exponent;
  c.alphabet_size = kernels::alphabet(problem.max_exponent, problem.allow_zero).size();
  c.free_tuples = 1;
  for (int k = 0; k < 5; ++k) c.free_tuples *= c.alphabet_size;
  c.candidates = outcome.candidates;
  c.rejected_per_solved_coordinate = outcome.rejected;
  c.quartic_tested = outcome.quartic_tested;
  c.accepted_tuples = outcome.accepted;
  c.distinct_points = result.points.size();
  c.config_hash = sha256_hex(canonical_record(cfg, result));
  c.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace a22::search
