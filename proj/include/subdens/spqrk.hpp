#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdens/graph.hpp"

namespace subdens {

enum class NodeKind { S, P, Q, R, K };

char node_kind_letter(NodeKind kind);

struct SpqrkEdge {
  Vertex u = 0;
  Vertex v = 0;
  bool real = true;
};

/// One node of the tree. Vertices are vertices of the input graph; the edge
/// list is a multigraph (P-nodes carry parallel virtual edges).
struct SpqrkNode {
  NodeKind kind = NodeKind::K;
  VertexSet vertices;
  std::vector<SpqrkEdge> edges;
};

/// Node 0 is the root. Nodes of each recursive subtree occupy a contiguous
/// index range in construction order.
struct SpqrkTree {
  std::vector<SpqrkNode> nodes;
  std::vector<std::pair<int, int>> links;  // (parent, child)
};

/// Recursive construction: K-node for K1/K2, S-node for a cycle, R-node when
/// 3-connected, Q-node at the smallest cut vertex, otherwise a P-node at the
/// lexicographically smallest 2-cut whose vertices both have degree >= 3.
/// Throws DomainError for a disconnected or null graph.
SpqrkTree spqrk_build(const Graph& g);

/// Checks that the links form a tree rooted at node 0, that every edge of g
/// is real in exactly one node, that real edges are edges of g, and that each
/// node's multigraph is a minor of g.
bool spqrk_validate(const SpqrkTree& t, const Graph& g);

/// Indented tree, one node per line: "P [1,4] 1-4:R 1-4:V 1-4:V".
std::string format_spqrk(const SpqrkTree& t);

}  // namespace subdens
