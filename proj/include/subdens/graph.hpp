#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subdens/bigint.hpp"
#include "subdens/kernels.hpp"

namespace subdens {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free sequence of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> items);
  explicit VertexSet(std::vector<Vertex> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> items_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Besides the sorted edge list the graph keeps sorted adjacency lists and a
/// dense adjacency bitset (one row of `words()` 64-bit words per vertex) for
/// the counting kernels. Labels are optional provenance strings; they do not
/// take part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws DomainError on self-loops, duplicate edges, out-of-range
  /// endpoints, or a label vector whose size is neither 0 nor n.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const {
    return (row(a)[static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1U;
  }
  /// Position of edge {a, b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  std::size_t words() const { return words_; }
  std::span<const kernels::Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The provenance label of v, or its index when the graph is unlabelled.
  std::string label(Vertex v) const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// Same vertex count and edge set.
  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t words_ = 0;
  std::vector<kernels::Word> bits_;
  std::vector<std::string> labels_;
};

// Text format: first line "n m", then m lines "u v". Lines starting with '#'
// are ignored. Errors carry the 1-based line number.
Graph parse_graph(std::string_view text);
/// Canonical form: "n m" then edges sorted lexicographically, '\n' endings.
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

/// Re-indexes in S order; labels record the original labels (indices for an
/// unlabelled input).
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// G - S with the same labelling convention as induced_subgraph.
Graph remove_vertices(const Graph& g, const VertexSet& s);
/// Blocks ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Identifies the larger endpoint into the smaller one; the result has n-1
/// vertices with indices above the removed vertex shifted down by one.
Graph contract_edge_simple(const Graph& g, Edge e);
Graph add_clique(const Graph& g, const VertexSet& x);
Graph remove_internal_edges(const Graph& g, const VertexSet& x);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Complement of s in V(g).
VertexSet complement(const Graph& g, const VertexSet& s);

constexpr int kDefaultPlanaritySizeCap = 512;
/// Boyer-Myrvold planarity test. Throws CapExceeded above `size_cap` vertices.
bool is_planar(const Graph& g, int size_cap = kDefaultPlanaritySizeCap);
/// Neighbour orders of a plane embedding, or nullopt when g is not planar.
std::optional<std::vector<std::vector<Vertex>>> planar_rotation_system(const Graph& g,
                                                                        int size_cap = kDefaultPlanaritySizeCap);

/// Bijections V(H) -> V(G) preserving both edges and non-edges;
/// count_isomorphisms(H, H) = |Aut(H)|.
BigInt count_isomorphisms(const Graph& h, const Graph& g);
bool are_isomorphic(const Graph& h, const Graph& g);

// Named graphs.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
/// K_{2,2,2}.
Graph octahedron_graph();

}  // namespace subdens
