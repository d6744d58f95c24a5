#include "a22/index_set.hpp"

#include <algorithm>

#include "a22/errors.hpp"

namespace a22 {

IndexSet IndexSet::from_vector(const std::vector<int>& indices) {
  IndexSet s;
  for (int i : indices) {
    if (i < 1 || i > kUniverse) throw PreconditionError("coordinate index out of range: " + std::to_string(i));
    s.insert(i);
  }
  return s;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (int i = 1; i <= kUniverse; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : to_vector()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace a22
