#include "a22/characteristics.hpp"

#include <algorithm>

#include "a22/errors.hpp"

namespace a22::chars {

Characteristic Characteristic::parse(std::string_view text) {
  unsigned bits = 0;
  int count = 0;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits = (bits << 1) | static_cast<unsigned>(c - '0');
      ++count;
    } else if (c != '(' && c != ')' && c != ' ' && c != ',') {
      throw PreconditionError("bad characteristic literal: " + std::string(text));
    }
  }
  if (count != 4) throw PreconditionError("characteristic needs four bits: " + std::string(text));
  return Characteristic(bits);
}

std::optional<int> Characteristic::index() const {
  for (int i = 0; i < 10; ++i) {
    if (kEven[i] == *this) return i + 1;
  }
  return std::nullopt;
}

std::string Characteristic::to_string() const {
  std::string s(4, '0');
  for (int k = 0; k < 4; ++k) s[k] = static_cast<char>('0' + bit(k));
  return s;
}

Characteristic at(int index) {
  if (index < 1 || index > 10) throw PreconditionError("coordinate index out of range: " + std::to_string(index));
  return kEven[index - 1];
}

unsigned e_triple(Characteristic x, Characteristic y, Characteristic z) {
  if (x == y || y == z || x == z) throw PreconditionError("e(x,y,z) needs distinct characteristics");
  if (!x.is_even() || !y.is_even() || !z.is_even()) throw PreconditionError("e(x,y,z) needs even characteristics");
  return x.q2() ^ y.q2() ^ z.q2() ^ (x + y + z).q2();
}

TripleTag classify_triple(IndexSet triple) {
  if (triple.size() != 3) throw PreconditionError("not a triple: " + triple.to_string());
  const auto v = triple.to_vector();
  return e_triple(at(v[0]), at(v[1]), at(v[2])) == 0 ? TripleTag::syzygous : TripleTag::azygous;
}

std::optional<QuadrupleTag> classify_quadruple(IndexSet quad) {
  if (quad.size() != 4) throw PreconditionError("not a quadruple: " + quad.to_string());
  int syzygous = 0;
  for (int drop : quad.to_vector()) {
    IndexSet t = quad;
    t.erase(drop);
    if (classify_triple(t) == TripleTag::syzygous) ++syzygous;
  }
  if (syzygous == 4) return QuadrupleTag::goepel;
  if (syzygous == 0) return QuadrupleTag::azygous;
  return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : {Kind::even_chars, Kind::syzygous_triples, Kind::azygous_triples, Kind::goepel_quads,
                 Kind::azygous_quads}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::even_chars: return "even_chars";
    case Kind::syzygous_triples: return "syzygous_triples";
    case Kind::azygous_triples: return "azygous_triples";
    case Kind::goepel_quads: return "goepel_quads";
    case Kind::azygous_quads: return "azygous_quads";
  }
  return "";
}

std::vector<IndexSet> enumerate(Kind kind) {
  const int size = kind == Kind::even_chars ? 1
                   : (kind == Kind::syzygous_triples || kind == Kind::azygous_triples) ? 3
                                                                                       : 4;
  std::vector<IndexSet> out;
  for (std::uint16_t mask = 1; mask <= IndexSet::kFullMask; ++mask) {
    const IndexSet s = IndexSet::from_mask(mask);
    if (s.size() != size) continue;
    bool keep = false;
    switch (kind) {
      case Kind::even_chars: keep = true; break;
      case Kind::syzygous_triples: keep = classify_triple(s) == TripleTag::syzygous; break;
      case Kind::azygous_triples: keep = classify_triple(s) == TripleTag::azygous; break;
      case Kind::goepel_quads: keep = classify_quadruple(s) == QuadrupleTag::goepel; break;
      case Kind::azygous_quads: keep = classify_quadruple(s) == QuadrupleTag::azygous; break;
    }
    if (keep) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Completions completions(IndexSet subset) {
  Completions out;
  if (subset.size() == 2) {
    for (int z = 1; z <= 10; ++z) {
      if (subset.contains(z)) continue;
      IndexSet t = subset;
      t.insert(z);
      (classify_triple(t) == TripleTag::syzygous ? out.syzygous : out.azygous).push_back(z);
    }
    return out;
  }
  if (subset.size() == 3) {
    const QuadrupleTag want =
        classify_triple(subset) == TripleTag::syzygous ? QuadrupleTag::goepel : QuadrupleTag::azygous;
    for (int w = 1; w <= 10; ++w) {
      if (subset.contains(w)) continue;
      IndexSet q = subset;
      q.insert(w);
      if (classify_quadruple(q) == want) {
        if (out.quadruple) throw PreconditionError("triple has no unique completion: " + subset.to_string());
        out.quadruple = q;
      }
    }
    if (!out.quadruple) throw PreconditionError("triple has no completion: " + subset.to_string());
    return out;
  }
  throw PreconditionError("completions need a pair or a triple, got " + subset.to_string());
}

int disjointness_profile(IndexSet set) {
  const auto goepel = enumerate(Kind::goepel_quads);
  return static_cast<int>(std::count_if(goepel.begin(), goepel.end(), [&](IndexSet g) { return g.disjoint(set); }));
}

}  // namespace a22::chars
