#pragma once

#include <string>
#include <vector>

#include "subdens/bigint.hpp"
#include "subdens/embedding.hpp"

namespace subdens {

struct ExcessResult {
  long long phi = 0;
  std::vector<std::size_t> argmax;  // indices into the input list
  int threshold = 0;                // fewest vertices among the argmax triangulations
};

/// Maximum of C(K3,G) - 3n (s = 3) or C(K4,G) - n (s = 4) over the list.
/// Throws DomainError for an empty list, mixed genera, or s outside {3,4}.
ExcessResult max_excess(const std::vector<EmbeddedGraph>& triangulations, int s);

/// Either a*n + b or a constant (a = 0).
struct CensusEntry {
  long long a = 0;
  BigInt b = 0;
  int threshold = 0;  // smallest n at which the entry is attained
};

/// One row of the clique table for a surface.
struct SurfaceCensus {
  std::string surface;
  int genus = 0;
  bool complete = false;             // caller asserts the list is every irreducible triangulation
  std::vector<CensusEntry> entries;  // index s = 0, 1, ..., last nonzero constant
  CensusEntry total;
  long long phi3 = 0;
  long long phi4 = 0;
  std::size_t triangulations = 0;
};

/// Validates every input (triangulation, common genus, irreducible) and
/// builds the row. Entries s >= 5 are maxima over the list.
SurfaceCensus surface_table(const std::string& surface, const std::vector<EmbeddedGraph>& irreducible,
                            bool complete);

/// The table entry at s evaluated at n. Throws DomainError below the
/// entry's attainment threshold, naming the threshold.
BigInt extremal_count(const SurfaceCensus& census, int s, long long n);

/// "3n-8", "n", "6", "8n+16".
std::string format_entry(const CensusEntry& entry);
/// Aligned text table, one header line and one row.
std::string format_census(const SurfaceCensus& census);

/// Built-in irreducible lists: {K4} for the sphere, {K6} for the projective
/// plane (partial: the second irreducible triangulation is user supplied).
std::vector<EmbeddedGraph> builtin_irreducible(const std::string& surface);

struct Bounds {
  double lower = 0;
  double upper = 0;
  bool lower_applies = false;
  std::string lower_condition;
};

/// Explicit lower and upper expressions for C(K_s, surface of Euler genus g, n),
/// s >= 3. The upper expression always applies; the lower one only under its
/// side conditions, reported in `lower_applies` and `lower_condition`.
Bounds bounds(int genus, int s, double n);

}  // namespace subdens
