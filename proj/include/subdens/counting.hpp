#pragma once

#include <cstdint>
#include <vector>

#include "subdens/bigint.hpp"
#include "subdens/graph.hpp"

namespace subdens {

constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000;

struct CountOptions {
  std::uint64_t work_cap = kDefaultWorkCap;  // backtracking nodes, summed over workers
  int threads = 1;
};

// Backtracking over the non-isolated vertices of H, each step intersecting
// the adjacency rows of already placed neighbours. Isolated vertices of H are
// accounted for in closed form. Exceeding the work cap throws CapExceeded
// whose message reports the nodes visited and the partial count.
BigInt count_hom(const Graph& h, const Graph& g, const CountOptions& options = {});
BigInt count_injective_hom(const Graph& h, const Graph& g, const CountOptions& options = {});
/// Subgraphs of g isomorphic to h: injective homomorphisms / |Aut(h)|.
BigInt count_copies(const Graph& h, const Graph& g, const CountOptions& options = {});

BigInt count_cliques(const Graph& g, int s);
/// Entry s is the number of s-cliques, for s = 0 up to the clique number.
std::vector<BigInt> clique_profile(const Graph& g);
BigInt total_cliques(const Graph& g);

struct InequalityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// hom(K1,G) hom(K3,G) >= hom(K2,G) (2 hom(K2,G) - hom(K1,G)^2).
InequalityCheck check_goodman(const Graph& g);

struct GenusTriangleCheck {
  InequalityCheck triangles;  // t >= 2m - 4n + 4 + 4c - 4g, c = number of components
  InequalityCheck homs;       // the same inequality multiplied by 6
};

/// `genus` is the Euler genus of a surface g embeds in, supplied by the caller.
GenusTriangleCheck check_genus_triangle_bound(const Graph& g, int genus);

}  // namespace subdens
