#include "a22/igraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "a22/characteristics.hpp"
#include "a22/errors.hpp"
#include "a22/kernels.hpp"

namespace a22::igraph {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::singleton: return "singleton";
    case Family::pair: return "pair";
    case Family::syzygous_triple: return "syzygous_triple";
    case Family::azygous_quadruple: return "azygous_quadruple";
    case Family::goepel_complement: return "goepel_complement";
    case Family::goepel_quadruple: return "goepel_quadruple";
    case Family::unclassified: return "unclassified";
  }
  return "";
}

Family classify(IndexSet set) {
  switch (set.size()) {
    case 1: return Family::singleton;
    case 2: return Family::pair;
    case 3:
      return chars::classify_triple(set) == chars::TripleTag::syzygous ? Family::syzygous_triple
                                                                       : Family::unclassified;
    case 4: {
      const auto tag = chars::classify_quadruple(set);
      if (tag == chars::QuadrupleTag::azygous) return Family::azygous_quadruple;
      if (tag == chars::QuadrupleTag::goepel) return Family::goepel_quadruple;
      return Family::unclassified;
    }
    case 6:
      return chars::classify_quadruple(set.complement()) == chars::QuadrupleTag::goepel ? Family::goepel_complement
                                                                                        : Family::unclassified;
    default: return Family::unclassified;
  }
}

std::optional<DimMetadata> recorded_metadata(Family f) {
  switch (f) {
    case Family::singleton: return DimMetadata{2, true};
    case Family::pair: return DimMetadata{1, false};
    case Family::syzygous_triple: return DimMetadata{0, false};
    case Family::azygous_quadruple: return DimMetadata{1, true};
    case Family::goepel_complement: return DimMetadata{0, true};
    default: return std::nullopt;
  }
}

std::vector<int> IntersectionGraph::depth_profile() const {
  std::vector<int> counts(10, 0);
  for (const auto& v : vertices) ++counts[v.depth - 1];
  return counts;
}

std::optional<std::size_t> IntersectionGraph::find(IndexSet s) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].indices == s) return i;
  }
  return std::nullopt;
}

IndexSet witness_closure(IndexSet vanishing, const std::vector<variety::ProjectivePoint>& witnesses) {
  if (witnesses.empty()) throw ConfigurationError("witness closure needs at least one witness point");
  IndexSet acc = IndexSet::full();
  for (const auto& w : witnesses) {
    const IndexSet z = w.zero_set();
    if (vanishing.is_subset_of(z)) acc = acc & z;
  }
  return acc | vanishing;
}

namespace {

bool vertex_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace

IntersectionGraph build_graph(Domain domain, const std::vector<variety::ProjectivePoint>& witnesses) {
  if (witnesses.empty()) throw ConfigurationError("graph construction needs at least one witness point");
  std::vector<std::uint16_t> masks;
  masks.reserve(witnesses.size());
  for (const auto& w : witnesses) masks.push_back(w.zero_set().mask());
  const auto table = kernels::closure_table(masks, kernels::Mode::parallel);

  std::set<std::uint16_t> closed;
  for (int mask = 1; mask < 1024; ++mask) {
    if (table[mask] != IndexSet::kFullMask) closed.insert(table[mask]);
  }
  std::vector<IndexSet> sets;
  for (auto m : closed) sets.push_back(IndexSet::from_mask(m));
  std::sort(sets.begin(), sets.end(), vertex_less);

  IntersectionGraph g;
  g.domain = domain.name();
  for (IndexSet s : sets) {
    Vertex v;
    v.indices = s;
    v.depth = s.size();
    v.family = classify(s);
    v.dim = recorded_metadata(v.family);
    g.vertices.push_back(v);
  }
  // Hasse diagram of strict inclusion.
  const std::size_t n = sets.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      if (u == w || !sets[u].is_subset_of(sets[w])) continue;
      bool covered = true;
      for (std::size_t v = 0; v < n && covered; ++v) {
        if (v == u || v == w) continue;
        if (sets[u].is_subset_of(sets[v]) && sets[v].is_subset_of(sets[w])) covered = false;
      }
      if (covered) {
        g.edges.emplace_back(u, w);
        g.vertices[u].children.push_back(w);
      }
    }
  }
  return g;
}

IntersectionGraph build_graph(Domain domain) { return build_graph(domain, variety::enumerate_small_points(domain)); }

GraphDiff compare_graphs(const IntersectionGraph& a, const IntersectionGraph& b) {
  auto vertex_set = [](const IntersectionGraph& g) {
    std::set<std::uint16_t> s;
    for (const auto& v : g.vertices) s.insert(v.indices.mask());
    return s;
  };
  auto edge_set = [](const IntersectionGraph& g) {
    std::set<std::pair<std::uint16_t, std::uint16_t>> s;
    for (auto [u, w] : g.edges) s.emplace(g.vertices[u].indices.mask(), g.vertices[w].indices.mask());
    return s;
  };
  GraphDiff d;
  const auto va = vertex_set(a), vb = vertex_set(b);
  for (auto m : va) {
    if (!vb.count(m)) d.only_first.push_back(IndexSet::from_mask(m));
  }
  for (auto m : vb) {
    if (!va.count(m)) d.only_second.push_back(IndexSet::from_mask(m));
  }
  const auto ea = edge_set(a), eb = edge_set(b);
  for (auto e : ea) {
    if (!eb.count(e)) d.edges_only_first.emplace_back(IndexSet::from_mask(e.first), IndexSet::from_mask(e.second));
  }
  for (auto e : eb) {
    if (!ea.count(e)) d.edges_only_second.emplace_back(IndexSet::from_mask(e.first), IndexSet::from_mask(e.second));
  }
  return d;
}

std::string to_dot(const IntersectionGraph& g) {
  std::ostringstream os;
  os << "digraph intersection {\n  rankdir=TB;\n";
  std::map<int, std::vector<std::size_t>> by_depth;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) by_depth[g.vertices[i].depth].push_back(i);
  for (const auto& [depth, ids] : by_depth) {
    os << "  { rank=same;";
    for (auto i : ids) os << " v" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.indices.to_string() << "\\n" << family_name(v.family) << "\"];\n";
  }
  for (auto [u, w] : g.edges) os << "  v" << u << " -> v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace a22::igraph
