#pragma once

#include <string_view>
#include <vector>

#include "subdens/bigint.hpp"
#include "subdens/counting.hpp"
#include "subdens/embedding.hpp"
#include "subdens/graph.hpp"

namespace subdens {

/// Pastes q = floor(n/h) - 1 copies of each flap's A+ side onto its cut set
/// (the sides of 2-separation flaps are first replaced by the edge across
/// the cut). Each flap's cut set is shrunk to the neighbourhood of its
/// interior first. When f(H) = 1 comes from H being planar with no
/// separation the result is q + 1 disjoint copies of H. At most n vertices.
/// Throws DomainError for disconnected H, n < 4h, or f(H) = 0.
Graph lower_bound_graph(const Graph& h, int n);

/// Replaces every vertex of a maximum stable set among the degree <= 2
/// vertices of T by floor((n - |T|) / beta) twins. Requires n >= 2|T|.
Graph tree_blowup(const Graph& t, int n);

/// Splits the first facial triangle (faces ordered by sorted vertex triple)
/// until the triangulation has n vertices.
EmbeddedGraph split_growth(const EmbeddedGraph& seed, int n);

enum class HostGenerator { lower_bound, tree_blowup, split_growth, padding };

/// "lower-bound", "tree-blowup", "split-growth", "padding".
HostGenerator parse_generator(std::string_view name);
std::string_view generator_name(HostGenerator generator);

/// An n-vertex (at most) host for H: split_growth ignores H and grows the
/// sphere from K4; padding adds isolated vertices to H.
Graph generate_host(const Graph& h, int n, HostGenerator generator);

struct ScalingPoint {
  int n = 0;
  int host_order = 0;
  BigInt copies;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  double slope = 0;  // least-squares slope of log(copies) against log(n)
};

/// Throws DomainError unless sizes are strictly increasing with at least
/// three points, or when a host has no copy of H (the size is named).
ScalingReport scaling_exponent(const Graph& h, const std::vector<int>& sizes, HostGenerator generator,
                               const CountOptions& options = {});

}  // namespace subdens
