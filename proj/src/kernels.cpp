#include "a22/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "a22/variety.hpp"

namespace a22::kernels {

namespace {

using variety::kLinearForms;

template <typename T>
bool linear_ok(const std::array<T, 10>& x) {
  for (const auto& form : kLinearForms) {
    long acc = 0;
    for (int c = 0; c < 10; ++c) acc += form[c] * static_cast<long>(x[c]);
    if (acc != 0) return false;
  }
  return true;
}

template <typename T>
__int128 quartic(const std::array<T, 10>& x) {
  __int128 s2 = 0, s4 = 0;
  for (auto v : x) {
    const __int128 sq = static_cast<__int128>(v) * v;
    s2 += sq;
    s4 += sq * sq;
  }
  return s2 * s2 - 4 * s4;
}

bool ternary_candidate(std::uint32_t code, Ternary& x) {
  bool seen_nonzero = false;
  for (int i = 0; i < 10; ++i) {
    x[i] = static_cast<std::int8_t>(static_cast<int>(code % 3) - 1);
    code /= 3;
    if (!seen_nonzero && x[i] != 0) {
      if (x[i] < 0) return false;
      seen_nonzero = true;
    }
  }
  return seen_nonzero && linear_ok(x) && quartic(x) == 0;
}

constexpr std::uint32_t kTernaryCount = 59049;  // 3^10

bool ternary_less(const Ternary& a, const Ternary& b) { return a < b; }

// Coordinate order for the F_p depth-first scan (0-based), so that the forms
// complete at depths 4, 7, 9, 10, 10.
constexpr std::array<int, 10> kScanOrder = {6, 7, 8, 9, 5, 0, 1, 2, 3, 4};

struct ScanPlan {
  // forms_at[d]: forms whose last variable is assigned at depth d (1-based count).
  std::array<std::vector<int>, 11> forms_at;
};

ScanPlan make_plan() {
  ScanPlan plan;
  for (int f = 0; f < 5; ++f) {
    int last = 0;
    for (int d = 0; d < 10; ++d) {
      if (kLinearForms[f][kScanOrder[d]] != 0) last = d + 1;
    }
    plan.forms_at[last].push_back(f);
  }
  return plan;
}

struct FieldScanner {
  unsigned p;
  const ScanPlan& plan;
  std::array<long, 10> x{};
  std::vector<Residues>* out;

  bool forms_vanish(int depth) const {
    for (int f : plan.forms_at[depth]) {
      long acc = 0;
      for (int c = 0; c < 10; ++c) acc += kLinearForms[f][c] * x[c];
      if (acc % static_cast<long>(p) != 0) return false;
    }
    return true;
  }

  void leaf() {
    const auto first = std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
    if (first == x.end() || *first != 1) return;
    long s2 = 0, s4 = 0;
    for (long v : x) {
      const long sq = v * v % p;
      s2 = (s2 + sq) % p;
      s4 = (s4 + sq * sq) % p;
    }
    if (((s2 * s2 - 4 * s4) % static_cast<long>(p)) != 0) return;
    Residues r;
    for (int i = 0; i < 10; ++i) r[i] = static_cast<std::uint8_t>(x[i]);
    out->push_back(r);
  }

  void descend(int depth) {
    if (depth == 10) {
      leaf();
      return;
    }
    const int c = kScanOrder[depth];
    for (unsigned v = 0; v < p; ++v) {
      x[c] = v;
      if (forms_vanish(depth + 1)) descend(depth + 1);
    }
    x[c] = 0;
  }
};

}  // namespace

std::vector<Ternary> ternary_scan(Mode mode) {
  std::vector<Ternary> out;
  if (mode == Mode::serial) {
    Ternary x;
    for (std::uint32_t code = 0; code < kTernaryCount; ++code) {
      if (ternary_candidate(code, x)) out.push_back(x);
    }
  } else {
#pragma omp parallel
    {
      std::vector<Ternary> local;
      Ternary x;
#pragma omp for schedule(static) nowait
      for (std::uint32_t code = 0; code < kTernaryCount; ++code) {
        if (ternary_candidate(code, x)) local.push_back(x);
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
  }
  std::sort(out.begin(), out.end(), ternary_less);
  return out;
}

std::vector<Residues> prime_field_scan(unsigned p, Mode mode) {
  static const ScanPlan plan = make_plan();
  std::vector<Residues> out;
  // Tasks fix the first two scanned coordinates; results are merged in task order.
  const int tasks = static_cast<int>(p * p);
  std::vector<std::vector<Residues>> per_task(tasks);
  auto run_task = [&](int t) {
    FieldScanner s{p, plan, {}, &per_task[t]};
    s.x[kScanOrder[0]] = t / static_cast<int>(p);
    s.x[kScanOrder[1]] = t % static_cast<int>(p);
    if (s.forms_vanish(1) && s.forms_vanish(2)) s.descend(2);
  };
  if (mode == Mode::serial) {
    for (int t = 0; t < tasks; ++t) run_task(t);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) run_task(t);
  }
  for (auto& v : per_task) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint16_t> closure_table(std::span<const std::uint16_t> witness_zero_masks, Mode mode) {
  constexpr std::uint16_t kFull = 0x3FF;
  std::vector<std::uint16_t> table(1024);
  auto close = [&](int mask) {
    std::uint16_t acc = kFull;
    for (std::uint16_t z : witness_zero_masks) {
      if ((mask & ~z) == 0) acc &= z;
    }
    table[mask] = acc;
  };
  if (mode == Mode::serial) {
    for (int mask = 0; mask < 1024; ++mask) close(mask);
  } else {
#pragma omp parallel for schedule(static)
    for (int mask = 0; mask < 1024; ++mask) close(mask);
  }
  return table;
}

std::vector<std::int64_t> alphabet(int max_exponent, bool allow_zero) {
  std::vector<std::int64_t> a;
  if (allow_zero) a.push_back(0);
  for (int e = max_exponent; e >= 0; --e) a.push_back(-(std::int64_t{1} << e));
  for (int e = 0; e <= max_exponent; ++e) a.push_back(std::int64_t{1} << e);
  return a;
}

namespace {

struct TupleScanner {
  const FreeTupleProblem& problem;
  const std::vector<std::int64_t>& letters;
  std::int64_t limit;

  bool in_alphabet(std::int64_t v) const {
    if (v == 0) return problem.allow_zero;
    const auto m = static_cast<std::uint64_t>(v < 0 ? -v : v);
    return std::has_single_bit(m) && static_cast<std::int64_t>(m) <= limit;
  }

  void visit(std::uint64_t code, FreeTupleOutcome& out) const {
    const std::uint64_t n = letters.size();
    std::array<std::int64_t, 5> f{};
    bool any = false;
    for (int j = 4; j >= 0; --j) {
      f[j] = letters[code % n];
      code /= n;
      any = any || f[j] != 0;
    }
    if (!any) return;
    ++out.candidates;
    std::array<std::int64_t, 10> x{};
    for (int j = 0; j < 5; ++j) x[problem.free_indices[j] - 1] = f[j];
    for (int k = 0; k < 5; ++k) {
      const auto& dep = problem.dependent[k];
      std::int64_t acc = 0;
      for (int j = 0; j < 5; ++j) acc += dep.num[j] * f[j];
      if (acc % dep.den != 0 || !in_alphabet(acc / dep.den)) {
        ++out.rejected[k];
        return;
      }
      x[dep.index - 1] = acc / dep.den;
    }
    ++out.quartic_tested;
    if (quartic(x) != 0) return;
    ++out.accepted;
    out.points.push_back(x);
  }
};

void merge(FreeTupleOutcome& into, FreeTupleOutcome&& part) {
  into.candidates += part.candidates;
  for (int k = 0; k < 5; ++k) into.rejected[k] += part.rejected[k];
  into.quartic_tested += part.quartic_tested;
  into.accepted += part.accepted;
  into.points.insert(into.points.end(), part.points.begin(), part.points.end());
}

}  // namespace

FreeTupleOutcome free_tuple_scan(const FreeTupleProblem& problem, Mode mode) {
  const auto letters = alphabet(problem.max_exponent, problem.allow_zero);
  const TupleScanner scanner{problem, letters, std::int64_t{1} << problem.max_exponent};
  std::uint64_t total = 1;
  for (int j = 0; j < 5; ++j) total *= letters.size();

  FreeTupleOutcome out;
  if (mode == Mode::serial) {
    for (std::uint64_t code = 0; code < total; ++code) scanner.visit(code, out);
    return out;
  }
  // Contiguous static blocks per thread, merged in thread order, equal scan order to serial.
  const int threads = omp_get_max_threads();
  std::vector<FreeTupleOutcome> parts(threads);
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::uint64_t lo = total * t / nt;
    const std::uint64_t hi = total * (t + 1) / nt;
    for (std::uint64_t code = lo; code < hi; ++code) scanner.visit(code, parts[t]);
  }
  for (auto& part : parts) merge(out, std::move(part));
  return out;
}

}  // namespace a22::kernels
