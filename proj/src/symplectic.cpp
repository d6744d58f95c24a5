#include "a22/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "a22/errors.hpp"

namespace a22::sp {

F2Matrix F2Matrix::from_entries(const std::array<std::array<int, 4>, 4>& entries) {
  std::array<std::uint8_t, 4> rows{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (entries[r][c] & 1) rows[r] |= static_cast<std::uint8_t>(1u << (3 - c));
    }
  }
  return F2Matrix(rows);
}

F2Matrix F2Matrix::transpose() const {
  std::array<std::uint8_t, 4> rows{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (at(c, r)) rows[r] |= static_cast<std::uint8_t>(1u << (3 - c));
    }
  }
  return F2Matrix(rows);
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  std::array<std::uint8_t, 4> rows{};
  for (int r = 0; r < 4; ++r) rows[r] = static_cast<std::uint8_t>(o.apply_right(Characteristic(rows_[r])).bits());
  return F2Matrix(rows);
}

Characteristic F2Matrix::apply_right(Characteristic m) const {
  unsigned out = 0;
  for (int r = 0; r < 4; ++r) {
    if (m.bit(r)) out ^= rows_[r];
  }
  return Characteristic(out);
}

bool is_symplectic(const F2Matrix& m) { return m.transpose() * kJ * m == kJ; }

SymplecticMatrix::SymplecticMatrix(const F2Matrix& m) : m_(m) {
  if (!is_symplectic(m)) throw PreconditionError("matrix is not symplectic over F2");
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const { return SymplecticMatrix(m_ * o.m_); }

// Over F_2 the inverse of a symplectic M is J tM J.
SymplecticMatrix SymplecticMatrix::inverse() const { return SymplecticMatrix(kJ * m_.transpose() * kJ); }

Characteristic SymplecticMatrix::dot_shift() const {
  unsigned bits[4] = {0, 0, 0, 0};
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) {
      bits[k] ^= c(r, k) & a(r, k);
      bits[k + 2] ^= d(r, k) & b(r, k);
    }
  }
  return Characteristic(bits[0] << 3 | bits[1] << 2 | bits[2] << 1 | bits[3]);
}

Characteristic SymplecticMatrix::sign_vector() const {
  unsigned bits[4] = {0, 0, 0, 0};
  for (int k = 0; k < 2; ++k) {
    for (int col = 0; col < 2; ++col) {
      bits[k] ^= b(k, col) & a(k, col);
      bits[k + 2] ^= c(k, col) & d(k, col);
    }
  }
  return Characteristic(bits[0] << 3 | bits[1] << 2 | bits[2] << 1 | bits[3]);
}

Characteristic dot_action(Characteristic m, const SymplecticMatrix& M) {
  return M.matrix().apply_right(m) + M.dot_shift();
}

int coordinate_sign(Characteristic m, const SymplecticMatrix& M) {
  const Characteristic v = M.sign_vector();
  unsigned dot = 0;
  for (int k = 0; k < 4; ++k) dot ^= m.bit(k) & v.bit(k);
  return dot ? -1 : 1;
}

SymplecticMatrix exclusion_involution() {
  return SymplecticMatrix(F2Matrix::from_entries({{{1, 0, 0, 1}, {1, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}}));
}

SignedCoordinateMap signed_map(const SymplecticMatrix& M) {
  SignedCoordinateMap out;
  for (int i = 0; i < 10; ++i) {
    const auto target = dot_action(chars::kEven[i], M).index();
    if (!target) throw std::logic_error("dot action left the even characteristics");
    out.source[i] = *target;
    out.sign[i] = coordinate_sign(chars::kEven[i], M);
  }
  return out;
}

SignedCoordinateMap compose(const SignedCoordinateMap& outer, const SignedCoordinateMap& inner) {
  SignedCoordinateMap out;
  for (int k = 0; k < 10; ++k) {
    const int mid = outer.source[k];
    out.source[k] = inner.source[mid - 1];
    out.sign[k] = outer.sign[k] * inner.sign[mid - 1];
  }
  return out;
}

int global_sign_ratio(const SignedCoordinateMap& a, const SignedCoordinateMap& b) {
  if (a.source != b.source) return 0;
  const int ratio = a.sign[0] * b.sign[0];
  for (int k = 1; k < 10; ++k) {
    if (a.sign[k] * b.sign[k] != ratio) return 0;
  }
  return ratio;
}

IndexSet image(IndexSet set, const SymplecticMatrix& M) {
  IndexSet out;
  for (int i : set.to_vector()) out.insert(*dot_action(chars::at(i), M).index());
  return out;
}

F2Matrix transvection(Characteristic v) {
  std::array<std::uint8_t, 4> rows{};
  for (int r = 0; r < 4; ++r) {
    const Characteristic e(1u << (3 - r));
    rows[r] = static_cast<std::uint8_t>((chars::pairing(e, v) ? e + v : e).bits());
  }
  return F2Matrix(rows);
}

Group::Group() {
  std::vector<F2Matrix> generators;
  for (unsigned v = 1; v < 16; ++v) generators.push_back(transvection(Characteristic(v)));

  std::unordered_set<std::uint16_t> seen{F2Matrix::identity().code()};
  std::deque<F2Matrix> queue{F2Matrix::identity()};
  std::vector<F2Matrix> all;
  while (!queue.empty()) {
    const F2Matrix g = queue.front();
    queue.pop_front();
    all.push_back(g);
    for (const auto& t : generators) {
      const F2Matrix h = g * t;
      if (seen.insert(h.code()).second) queue.push_back(h);
    }
  }
  std::sort(all.begin(), all.end(), [](const F2Matrix& x, const F2Matrix& y) { return x.code() < y.code(); });
  elements_.reserve(all.size());
  for (const auto& m : all) elements_.emplace_back(m);
}

const Group& Group::instance() {
  static const Group group;
  return group;
}

bool Group::contains(const F2Matrix& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m,
                            [](const auto& x, const auto& y) {
                              auto code = [](const auto& z) {
                                if constexpr (std::is_same_v<std::decay_t<decltype(z)>, SymplecticMatrix>) {
                                  return z.matrix().code();
                                } else {
                                  return z.code();
                                }
                              };
                              return code(x) < code(y);
                            });
}

std::vector<IndexSet> Group::orbit(IndexSet seed) const {
  std::vector<IndexSet> out;
  for (const auto& g : elements_) {
    const IndexSet img = image(seed, g);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<SymplecticMatrix> Group::find_transporter(std::span<const int> src, std::span<const int> dst) const {
  if (src.size() != dst.size() || src.size() > 4) {
    throw PreconditionError("transporter tuples must have equal length at most 4");
  }
  for (const auto& g : elements_) {
    bool ok = true;
    for (std::size_t k = 0; k < src.size() && ok; ++k) {
      ok = dot_action(chars::at(src[k]), g) == chars::at(dst[k]);
    }
    if (ok) return g;
  }
  return std::nullopt;
}

int epsilon(int i, int j) {
  if (i == j) throw PreconditionError("epsilon(i,j) needs distinct indices");
  return (chars::at(i) + chars::at(j)).q2() ? -1 : 1;
}

}  // namespace a22::sp
