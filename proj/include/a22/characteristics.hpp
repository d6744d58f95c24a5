#pragma once

// Even theta characteristics of genus 2 and their syzygy combinatorics.
//
// A characteristic m = (m', m'') in F_2^4 is packed into four bits as
// m'_1 m'_2 m''_1 m''_2 (most significant first), so the string "0110"
// is m' = (0,1), m'' = (1,0). The ten even characteristics, in increasing
// binary order, are the coordinate indices 1..10 used everywhere else.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a22/index_set.hpp"

namespace a22::chars {

class Characteristic {
 public:
  constexpr Characteristic() = default;
  constexpr explicit Characteristic(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0xF)) {}
  // Accepts "0110", "(0110)" or "0 1 1 0".
  static Characteristic parse(std::string_view text);

  constexpr unsigned bits() const { return bits_; }
  // k in 0..3 addresses m'_1, m'_2, m''_1, m''_2.
  constexpr unsigned bit(int k) const { return (bits_ >> (3 - k)) & 1u; }

  // q_2(m) = m' . m'' mod 2
  constexpr unsigned q2() const { return (bit(0) & bit(2)) ^ (bit(1) & bit(3)); }
  constexpr bool is_even() const { return q2() == 0; }

  // 1-based coordinate index when even.
  std::optional<int> index() const;

  constexpr Characteristic operator+(Characteristic o) const { return Characteristic(bits_ ^ o.bits_); }
  friend constexpr bool operator==(Characteristic, Characteristic) = default;

  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr std::array<Characteristic, 10> kEven = {
    Characteristic(0b0000), Characteristic(0b0001), Characteristic(0b0010), Characteristic(0b0011),
    Characteristic(0b0100), Characteristic(0b0110), Characteristic(0b1000), Characteristic(0b1001),
    Characteristic(0b1100), Characteristic(0b1111)};

// Characteristic for coordinate index i in 1..10.
Characteristic at(int index);

// Symplectic pairing <x, y> = q2(x + y) + q2(x) + q2(y).
constexpr unsigned pairing(Characteristic x, Characteristic y) { return (x + y).q2() ^ x.q2() ^ y.q2(); }

// e(x,y,z) = q2(x) + q2(y) + q2(z) + q2(x+y+z). Requires three distinct even
// characteristics; throws PreconditionError otherwise.
unsigned e_triple(Characteristic x, Characteristic y, Characteristic z);

enum class TripleTag { syzygous, azygous };
enum class QuadrupleTag { goepel, azygous };

TripleTag classify_triple(IndexSet triple);
// nullopt for quadruples that mix syzygous and azygous sub-triples.
std::optional<QuadrupleTag> classify_quadruple(IndexSet quad);

enum class Kind { even_chars, syzygous_triples, azygous_triples, goepel_quads, azygous_quads };

std::optional<Kind> parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);

// Complete canonical listing; even_chars yields the ten singletons.
std::vector<IndexSet> enumerate(Kind kind);

struct Completions {
  // Pair input: indices z completing it to a syzygous / azygous triple.
  std::vector<int> syzygous;
  std::vector<int> azygous;
  // Triple input: the unique Goepel (syzygous case) or azygous quadruple.
  std::optional<IndexSet> quadruple;
};

// Input must be a pair or a triple of coordinate indices.
Completions completions(IndexSet subset);

// Number of Goepel quadruples disjoint from the given set.
int disjointness_profile(IndexSet set);

}  // namespace a22::chars
