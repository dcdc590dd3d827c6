#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subdens/counting.hpp"
#include "subdens/graph.hpp"

namespace subdens {

/// A graph with a signed rotation system: a cyclic neighbour order at each
/// vertex and a sign per edge, -1 marking an orientation-reversing edge.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  /// rotations[v] lists the neighbours of v in cyclic order. Throws
  /// DomainError unless the rotations describe a simple graph (symmetric,
  /// no loops, no repeats) and every negative edge is an edge of it.
  EmbeddedGraph(std::vector<std::vector<Vertex>> rotations, const std::vector<Edge>& negative_edges,
                std::vector<std::string> labels = {});

  int order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  const Graph& graph() const { return graph_; }
  std::span<const Vertex> rotation(Vertex v) const { return rotations_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
  int sign(Vertex a, Vertex b) const;
  std::vector<Edge> negative_edges() const;

  /// Index of u in the rotation at v; throws DomainError when not adjacent.
  int position(Vertex v, Vertex u) const;
  Vertex succ(Vertex v, Vertex u) const;
  Vertex pred(Vertex v, Vertex u) const;

  /// Same rotations and signs (labels ignored).
  bool operator==(const EmbeddedGraph& other) const {
    return rotations_ == other.rotations_ && signs_ == other.signs_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotations_;
  std::vector<std::int8_t> signs_;  // indexed like graph_.edges()
};

// Text format: first line "n", then one line "v: u1 u2- u3" per vertex with
// the neighbours in rotation order; a '-' suffix marks a negative edge and
// must appear at both ends. Lines starting with '#' are ignored.
EmbeddedGraph parse_embedding(std::string_view text);
std::string serialize_embedding(const EmbeddedGraph& eg);
EmbeddedGraph read_embedding_file(const std::string& path);

/// vertices[i] -> vertices[i+1] along edges[i], cyclically.
struct FacialWalk {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Faces under the signed rule: leave v by the rotation successor of the
/// arrival edge while the accumulated sign is +, by the predecessor while it
/// is -; crossing a negative edge flips the sign. Each face is reported once,
/// starting from its first dart in (vertex, rotation position) order.
std::vector<FacialWalk> trace_faces(const EmbeddedGraph& eg);

/// 2 - n + m - f. Throws DomainError for a disconnected graph.
int euler_genus(const EmbeddedGraph& eg);

/// Every face has three distinct vertices and three distinct edges.
bool is_triangulation(const EmbeddedGraph& eg);

/// Triangular faces t of a connected embedding against 2m - 4n + 8 - 4g,
/// g = euler_genus(eg). Tight exactly when every other face has length 4.
InequalityCheck check_facial_triangle_bound(const EmbeddedGraph& eg);

/// Faces as sorted vertex lists, sorted; compares embeddings up to rotation
/// rewriting.
std::vector<std::vector<Vertex>> face_multiset(const EmbeddedGraph& eg);

/// Edges of the graph lying in exactly two triangles. Throws DomainError
/// unless eg is a triangulation.
std::vector<Edge> reducible_edges(const EmbeddedGraph& eg);

/// vw is reducible, both of its triangles are faces, and the contraction
/// keeps at least four vertices.
bool is_contractible(const EmbeddedGraph& eg, Vertex v, Vertex w);
/// No edge is contractible.
bool is_irreducible(const EmbeddedGraph& eg);

/// Deletes vw, wx, wy and identifies w into v. Vertices above w shift down
/// by one; labels follow their vertices.
EmbeddedGraph contract_reducible(const EmbeddedGraph& eg, Vertex v, Vertex w);

/// Adds vertex n adjacent to x, v, y and takes over the neighbours of v
/// strictly between x and y in rotation order. May switch x or y (reverse
/// the rotation and negate the incident signs), which leaves the faces
/// unchanged.
EmbeddedGraph split_path(const EmbeddedGraph& eg, Vertex x, Vertex v, Vertex y);
/// Adds vertex n inside the triangular face {a, b, c}.
EmbeddedGraph split_triangle(const EmbeddedGraph& eg, Vertex a, Vertex b, Vertex c);

/// Reverses the rotation at v and negates the signs of its edges.
EmbeddedGraph switch_vertex(const EmbeddedGraph& eg, Vertex v);

/// Rotation system of the closed surface glued from `triangles`. Throws
/// DomainError unless every edge lies in exactly two triangles and every
/// vertex link is a single cycle.
EmbeddedGraph from_triangles(int n, const std::vector<std::array<Vertex, 3>>& triangles);

/// K4 in the sphere.
EmbeddedGraph tetrahedron_embedding();
/// K6 in the projective plane (antipodal quotient of the icosahedron).
EmbeddedGraph projective_k6_embedding();

struct GenusSearchResult {
  int genus = 0;
  EmbeddedGraph witness;
};

constexpr int kGenusSearchVertexCap = 8;
constexpr int kGenusSearchEdgeCap = 18;

/// Minimum Euler genus over all signed rotation systems of a connected g,
/// by backtracking with a face-count bound.
GenusSearchResult min_genus_search(const Graph& g, int vertex_cap = kGenusSearchVertexCap,
                                   int edge_cap = kGenusSearchEdgeCap);

}  // namespace subdens
