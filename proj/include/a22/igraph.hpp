#pragma once

// Graph of intersection of the ten divisors D_i = {x_i = 0}: vertices are
// the optimal index sets, edges the inclusion-minimal containments.

#include <optional>
#include <string>
#include <vector>

#include "a22/index_set.hpp"
#include "a22/scalar.hpp"
#include "a22/variety.hpp"

namespace a22::igraph {

enum class Family {
  singleton,
  pair,
  syzygous_triple,
  azygous_quadruple,
  goepel_complement,
  // Only in characteristic 2 or 3.
  goepel_quadruple,
  unclassified,
};

std::string_view family_name(Family f);
Family classify(IndexSet set);

// Dimension and irreducibility of Z_I as annotated in the published figure.
// Not computed; present for the five characteristic-zero families only.
struct DimMetadata {
  int dimension = 0;
  bool irreducible = false;
  std::string_view provenance = "recorded from the published figure";
};
std::optional<DimMetadata> recorded_metadata(Family f);

struct Vertex {
  IndexSet indices;
  int depth = 0;
  Family family = Family::unclassified;
  std::vector<std::size_t> children;  // positions in IntersectionGraph::vertices
  std::optional<DimMetadata> dim;
};

struct IntersectionGraph {
  std::string domain;
  // Sorted by depth, then lexicographically.
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<int> depth_profile() const;  // counts per depth 1..10
  std::optional<std::size_t> find(IndexSet s) const;
};

// I together with every j at which all witnesses vanishing on I vanish.
// Throws ConfigurationError for an empty witness list.
IndexSet witness_closure(IndexSet vanishing, const std::vector<variety::ProjectivePoint>& witnesses);

// Witnesses: the {-1,0,1} points over Q, all F_p-points otherwise.
IntersectionGraph build_graph(Domain domain);
IntersectionGraph build_graph(Domain domain, const std::vector<variety::ProjectivePoint>& witnesses);

struct GraphDiff {
  std::vector<IndexSet> only_first;
  std::vector<IndexSet> only_second;
  std::vector<std::pair<IndexSet, IndexSet>> edges_only_first;
  std::vector<std::pair<IndexSet, IndexSet>> edges_only_second;

  bool empty() const {
    return only_first.empty() && only_second.empty() && edges_only_first.empty() && edges_only_second.empty();
  }
};

GraphDiff compare_graphs(const IntersectionGraph& a, const IntersectionGraph& b);

std::string to_dot(const IntersectionGraph& g);

}  // namespace a22::igraph
