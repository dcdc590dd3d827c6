#pragma once
// Test-side generators and brute-force oracles. Nothing here calls into the
// library's flap, counting, or planarity code, so results can be compared.

#include <cstdint>
#include <random>
#include <vector>

#include "subdens/embedding.hpp"
#include "subdens/graph.hpp"

namespace subdens::oracle {

using Rng = std::mt19937_64;

Graph random_graph(Rng& rng, int n, double p);
Graph random_connected_graph(Rng& rng, int n, double p);
/// Uniform random labelled tree via a Prufer sequence.
Graph random_tree(Rng& rng, int n);

/// Every graph on n vertices up to isomorphism (n <= 7).
std::vector<Graph> all_graphs(int n);

/// Planarity by searching for a K5 or K3,3 minor.
bool planar_by_minors(const Graph& g);

/// Flap-number computed from the definition: all (<=2)-separations, A+
/// planarity via planar_by_minors, and an exact search over disjoint,
/// non-adjacent interiors. n <= 10.
int flap_number_oracle(const Graph& h);
/// Non-planar and every side of every (<=2)-separation has non-planar A+.
bool strongly_non_planar_oracle(const Graph& h);

/// Enumerates all maps V(H) -> V(G).
std::uint64_t hom_oracle(const Graph& h, const Graph& g, bool injective);
/// All vertex subsets of size s that are cliques.
std::uint64_t clique_oracle(const Graph& g, int s);
/// All permutations preserving adjacency.
std::uint64_t automorphism_oracle(const Graph& h);

/// Split uniformly random facial triangles until n vertices.
EmbeddedGraph random_growth(Rng& rng, const EmbeddedGraph& seed, int n);

/// Relabels vertices by `perm` (old -> new) and compares face multisets.
std::vector<std::vector<Vertex>> relabelled_faces(const EmbeddedGraph& eg, const std::vector<Vertex>& perm);

}  // namespace subdens::oracle
