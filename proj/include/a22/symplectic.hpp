#pragma once

// Sp_4(F_2) as explicit 4x4 matrices acting on the right of row-vector
// characteristics, and the induced signed permutation of the ten theta
// coordinates of P^9.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "a22/characteristics.hpp"
#include "a22/index_set.hpp"

namespace a22::sp {

using chars::Characteristic;

// 4x4 matrix over F_2; row r is a nibble whose most significant bit is column 0.
class F2Matrix {
 public:
  constexpr F2Matrix() = default;
  constexpr explicit F2Matrix(std::array<std::uint8_t, 4> rows) : rows_{} {
    for (int r = 0; r < 4; ++r) rows_[r] = rows[r] & 0xF;
  }
  static constexpr F2Matrix identity() { return F2Matrix({0b1000, 0b0100, 0b0010, 0b0001}); }
  static F2Matrix from_entries(const std::array<std::array<int, 4>, 4>& entries);
  static constexpr F2Matrix from_code(std::uint16_t code) {
    return F2Matrix({static_cast<std::uint8_t>(code >> 12), static_cast<std::uint8_t>(code >> 8),
                     static_cast<std::uint8_t>(code >> 4), static_cast<std::uint8_t>(code)});
  }

  constexpr unsigned at(int r, int c) const { return (rows_[r] >> (3 - c)) & 1u; }
  constexpr std::uint8_t row(int r) const { return rows_[r]; }
  // Rows concatenated, row 0 in the top nibble.
  constexpr std::uint16_t code() const {
    return static_cast<std::uint16_t>(rows_[0] << 12 | rows_[1] << 8 | rows_[2] << 4 | rows_[3]);
  }

  F2Matrix transpose() const;
  F2Matrix operator*(const F2Matrix& o) const;
  // Row vector times matrix.
  Characteristic apply_right(Characteristic m) const;

  friend constexpr bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::array<std::uint8_t, 4> rows_{};
};

// J = (0 I; I 0) over F_2.
inline constexpr F2Matrix kJ = F2Matrix({0b0010, 0b0001, 0b1000, 0b0100});

// True iff  tM J M = J.
bool is_symplectic(const F2Matrix& m);

// Element of Sp_4(F_2) in block form (A B; C D).
class SymplecticMatrix {
 public:
  // Throws PreconditionError if m is not symplectic.
  explicit SymplecticMatrix(const F2Matrix& m);
  static SymplecticMatrix identity() { return SymplecticMatrix(F2Matrix::identity()); }

  const F2Matrix& matrix() const { return m_; }
  unsigned a(int r, int c) const { return m_.at(r, c); }
  unsigned b(int r, int c) const { return m_.at(r, c + 2); }
  unsigned c(int r, int cc) const { return m_.at(r + 2, cc); }
  unsigned d(int r, int c) const { return m_.at(r + 2, c + 2); }

  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  SymplecticMatrix inverse() const;

  // ((tC A)_0, (tD B)_0): the affine shift of the dot action.
  Characteristic dot_shift() const;
  // ((B tA)_0, (C tD)_0): pairs with m to give the coordinate sign.
  Characteristic sign_vector() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  F2Matrix m_;
};

// m (.) M = m M + ((tC A)_0, (tD B)_0), a right action preserving q2.
Characteristic dot_action(Characteristic m, const SymplecticMatrix& M);
// (-1)^{m . ((B tA)_0, (C tD)_0)}
int coordinate_sign(Characteristic m, const SymplecticMatrix& M);

// The involution swapping coordinates (1,2), (6,9), (5,10) and fixing 3,4,7,8;
// its fixed locus on the model is the exclusion set {x_1 = x_2}.
SymplecticMatrix exclusion_involution();

// (M . x)_i = sign[i] * x_{source[i]}, indices 1-based, arrays 0-based.
struct SignedCoordinateMap {
  std::array<int, 10> source{};
  std::array<int, 10> sign{};

  friend bool operator==(const SignedCoordinateMap&, const SignedCoordinateMap&) = default;
};

SignedCoordinateMap signed_map(const SymplecticMatrix& M);

// The map of x -> outer . (inner . x). The point action is a left action
// up to a global sign: compose(signed_map(M), signed_map(N)) equals
// signed_map(M * N) times the returned factor in {+1, -1}.
SignedCoordinateMap compose(const SignedCoordinateMap& outer, const SignedCoordinateMap& inner);
// +1 or -1 if a and b differ by one global sign with equal permutations, else 0.
int global_sign_ratio(const SignedCoordinateMap& a, const SignedCoordinateMap& b);

// Image of an index set under the dot action.
IndexSet image(IndexSet set, const SymplecticMatrix& M);

// All 720 elements, generated by breadth-first closure from the fifteen
// symplectic transvections and sorted by matrix code. Built once.
class Group {
 public:
  static const Group& instance();

  std::span<const SymplecticMatrix> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const F2Matrix& m) const;

  // Full dot-action orbit of a subset of E, sorted lexicographically.
  std::vector<IndexSet> orbit(IndexSet seed) const;

  // First element (in canonical order) carrying src[k] to dst[k] for all k.
  // Tuples are 1-based coordinate indices of equal length at most 4.
  std::optional<SymplecticMatrix> find_transporter(std::span<const int> src, std::span<const int> dst) const;

 private:
  Group();
  std::vector<SymplecticMatrix> elements_;
};

// Transvection x -> x + <x, v> v as a matrix acting on row vectors.
F2Matrix transvection(Characteristic v);

// epsilon(i,j) = (-1)^{q2(m_i + m_j)} for distinct coordinate indices.
int epsilon(int i, int j);

}  // namespace a22::sp
