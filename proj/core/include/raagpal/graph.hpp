#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagpal/vertex_set.hpp"

namespace raagpal {

enum class ClassKind { Free, Abelian };
enum class NeighborhoodKind { Link, Star };

/// Domination data of a graph, expressed in the graph's canonical vertex
/// indices. Classes are listed in the total order used for block
/// decompositions, and vertex indices are already sorted by that order, so
/// each class is a contiguous index range.
struct DominationData {
  /// dominators[u] = { v : u <= v }, i.e. lk(u) is contained in st(v).
  std::vector<VertexSet> dominators;
  std::vector<VertexSet> classes;
  std::vector<ClassKind> class_kind;
  std::vector<std::size_t> class_of;
  /// ~'-classes: same ~-class and adjacent (or equal).
  std::vector<VertexSet> adjacent_classes;
  std::vector<std::size_t> adjacent_class_of;
};

/// Finite simplicial graph defining a right-angled Artin group.
///
/// Vertices are re-indexed at construction so that index order is the
/// domination-compatible total order: classes ordered by the domination
/// partial order with ties broken by least vertex name, names sorted inside
/// each class. Every other component of the library relies on that
/// ordering for letter comparison and matrix bases.
class Graph {
 public:
  using EdgeList = std::vector<std::pair<std::string, std::string>>;

  static std::shared_ptr<const Graph> create(std::vector<std::string> vertices,
                                             const EdgeList& edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& declared_vertices() const { return declared_; }

  /// Index lookup; throws UnknownVertex.
  Vertex vertex(std::string_view name) const;
  std::optional<Vertex> find(std::string_view name) const;
  void check_vertex(Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  VertexSet link(Vertex v) const { return adjacency_[v]; }
  VertexSet star(Vertex v) const { return adjacency_[v] | VertexSet::single(v); }
  VertexSet all() const { return VertexSet::first_n(size()); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const DominationData& domination() const { return domination_; }
  /// u <= v in the domination relation.
  bool dominated_by(Vertex u, Vertex v) const { return domination_.dominators[u].contains(v); }

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
  }

 private:
  Graph() = default;

  std::vector<std::string> names_;
  std::vector<std::string> declared_;
  std::vector<VertexSet> adjacency_;
  DominationData domination_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Names without whitespace or any of ^ ( ) , : ; are accepted.
bool valid_vertex_name(std::string_view name);

VertexSet neighborhood(const Graph& g, Vertex v, NeighborhoodKind kind);
/// True iff lk(u) is contained in st(v).
bool dominates(const Graph& g, Vertex u, Vertex v);
const DominationData& domination_data(const Graph& g);
/// True iff some u != v are adjacent with u <= v.
bool has_adjacent_domination(const Graph& g);

/// Connected components of the subgraph induced on `s` (or of its complement
/// graph when `in_complement`), each as a vertex set, ordered by least member.
std::vector<VertexSet> induced_components(const Graph& g, VertexSet s, bool in_complement);
std::vector<VertexSet> components_excluding_star(const Graph& g, Vertex v);
std::vector<VertexSet> complement_components(const Graph& g, VertexSet s);

struct GammaVPartition {
  VertexSet gamma_v;
  VertexSet x_v;
  std::vector<VertexSet> factors;
};

/// Vertices dominating v but not adjacent to it, with the free part X_v and
/// the remaining factors.
GammaVPartition gamma_v_partition(const Graph& g, Vertex v);

inline constexpr std::size_t kDefaultAutomorphismBound = 8;

/// All edge-preserving vertex permutations (perm[v] = image of v), by brute
/// force. Throws SizeLimit above `bound` vertices.
std::vector<std::vector<Vertex>> graph_automorphisms(const Graph& g,
                                                     std::size_t bound = kDefaultAutomorphismBound);

}  // namespace raagpal
