#pragma once

// Enumeration cores. Every kernel has a serial reference and an OpenMP
// version; both produce identical, canonically ordered output.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace a22::kernels {

enum class Mode { serial, parallel };

using Ternary = std::array<std::int8_t, 10>;
using Residues = std::array<std::uint8_t, 10>;

// Points of the model with coordinates in {-1,0,1}, first nonzero coordinate +1.
// Scans all 3^10 patterns.
std::vector<Ternary> ternary_scan(Mode mode);

// F_p-points with first nonzero coordinate 1, by depth-first assignment of
// coordinates ordered so each linear form is tested as soon as it is complete.
std::vector<Residues> prime_field_scan(unsigned p, Mode mode);

// Entry I (a mask over indices 1..10) is the intersection of the zero masks
// of all witnesses vanishing on I, or the full mask if none does.
std::vector<std::uint16_t> closure_table(std::span<const std::uint16_t> witness_zero_masks, Mode mode);

// Dependent coordinate dep = (sum_j num[j] * free_j) / den.
struct SolvedCoordinate {
  int index = 0;  // 1-based
  std::array<std::int64_t, 5> num{};
  std::int64_t den = 1;
};

struct FreeTupleProblem {
  std::array<int, 5> free_indices{};          // 1-based
  std::array<SolvedCoordinate, 5> dependent{};  // in solving order
  int max_exponent = 0;                        // alphabet {+-2^a : a <= max_exponent}
  bool allow_zero = false;
};

struct FreeTupleOutcome {
  std::uint64_t candidates = 0;
  // rejected[k]: dependent k was non-integral or outside the alphabet.
  std::array<std::uint64_t, 5> rejected{};
  std::uint64_t quartic_tested = 0;
  std::uint64_t accepted = 0;
  // Accepted full coordinate vectors (not yet projectively reduced), in scan order.
  std::vector<std::array<std::int64_t, 10>> points;
};

// The signed alphabet in scan order: zero first when allowed, then
// -2^E..-1, 1..2^E.
std::vector<std::int64_t> alphabet(int max_exponent, bool allow_zero);

FreeTupleOutcome free_tuple_scan(const FreeTupleProblem& problem, Mode mode);

}  // namespace a22::kernels
