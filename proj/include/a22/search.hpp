#pragma once

// Exhaustive search for rational points of the model whose primitive integer
// coordinates are all +-(powers of 2), up to a height bound.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a22/kernels.hpp"
#include "a22/variety.hpp"

namespace a22::search {

enum class AlphabetKind { pm2, pm1 };

struct SearchConfig {
  double height_bound = 4.0;  // log scale
  AlphabetKind alphabet = AlphabetKind::pm2;
  bool allow_zero_coordinates = false;
  // nullopt selects the non-pivot columns of the reduced linear system.
  std::optional<std::array<int, 5>> free_coordinates;
  kernels::Mode mode = kernels::Mode::parallel;

  // floor(height_bound / log 2) for pm2, 0 for pm1.
  int exponent_range() const;
};

struct Reduction {
  std::vector<std::string> steps;
  int exponent_range = 0;
  std::vector<std::int64_t> alphabet;
  double search_space_ratio_vs_height_4 = 1;  // e^(h - 4)
};

// The reduction from Z[1/2] points to the finite alphabet.
Reduction candidate_form_reduction(const SearchConfig& cfg);

std::array<int, 5> default_free_coordinates();
// Throws ConfigurationError when the complementary 5x5 block is singular,
// naming the first valid choice in lexicographic order.
kernels::FreeTupleProblem make_problem(const SearchConfig& cfg);

struct Certificate {
  std::array<int, 5> free_coordinates{};
  std::array<int, 5> solved_coordinates{};
  int exponent_range = 0;
  std::size_t alphabet_size = 0;
  std::uint64_t free_tuples = 0;  // alphabet_size^5
  std::uint64_t candidates = 0;   // free tuples other than all-zero
  std::array<std::uint64_t, 5> rejected_per_solved_coordinate{};
  std::uint64_t quartic_tested = 0;
  std::uint64_t accepted_tuples = 0;
  std::size_t distinct_points = 0;
  double wall_clock_seconds = 0;  // not hashed
  std::string config_hash;        // SHA-256 over config and results
};

struct SearchResult {
  std::vector<variety::ProjectivePoint> points;
  Certificate certificate;
};

SearchResult run_search(const SearchConfig& cfg);

// Canonical text hashed into the certificate (everything except wall-clock time).
std::string canonical_record(const SearchConfig& cfg, const SearchResult& result);
std::string sha256_hex(const std::string& data);

}  // namespace a22::search
