#pragma once

#include <string>
#include <vector>

#include "subdens/graph.hpp"

namespace subdens {

/// A (<=2)-separation in canonical form. X is the cut set and S the private
/// vertices of the A side, a union of components of H - X. The assignment of
/// edges inside X is not stored: A+ adds them all and A- removes them all.
struct Separation {
  VertexSet x;
  VertexSet s;

  auto operator<=>(const Separation&) const = default;
};

/// "X=[a,b] S=[c,d,e]"
std::string format_separation(const Separation& sep);

/// Throws DomainError unless |X| <= 2, S is nonempty and disjoint from X,
/// no edge leaves S except into X, and some vertex lies outside X and S.
void validate_separation(const Graph& h, const Separation& sep);

/// add_clique(H[X u S], X).
Graph a_plus(const Graph& h, const Separation& sep);

/// Every canonical separation whose S is a single component of H - X, in
/// order of X (lexicographic) then S's smallest member. No planarity filter.
std::vector<Separation> enumerate_separations(const Graph& h);

/// The subsequence of enumerate_separations(h) whose A+ is planar.
std::vector<Separation> enumerate_candidate_flaps(const Graph& h);

bool is_flap(const Graph& h, const Separation& sep);

/// Disjoint interiors and no edge between them.
bool are_independent(const Graph& h, const Separation& a, const Separation& b);

constexpr int kDefaultFlapSizeCap = 16;
constexpr int kDefaultReductionSizeCap = 12;

struct FlapFamily {
  int number = 0;                  // f(H)
  std::vector<Separation> family;  // a maximum independent family; empty when f(H) is 0 or
                                   // comes from the planar-without-separation clause
};

/// Maximum independent flap family by branch and bound. Throws DomainError
/// for the null graph and CapExceeded above `size_cap` vertices.
FlapFamily max_flap_family(const Graph& h, int size_cap = kDefaultFlapSizeCap);
int flap_number(const Graph& h, int size_cap = kDefaultFlapSizeCap);
/// Non-planar and no separation has a planar A+ side, in either orientation.
bool is_strongly_non_planar(const Graph& h);

struct TreeBeta {
  int beta = 0;
  VertexSet stable;  // a maximum stable set among the vertices of degree <= 2
};

/// Throws DomainError when t is not a tree.
TreeBeta tree_beta(const Graph& t);

/// A maximum independent flap family whose first member has an inclusion-
/// maximal A side among flaps (S any union of components) that extend to a
/// maximum family. Equal A sides are ordered by their interiors. Empty when
/// f(H) = 0 or H has no separation.
std::vector<Separation> maximal_first_family(const Graph& h, int size_cap = kDefaultReductionSizeCap);

/// B1+ = add_clique(H - S1, X1) after checking that `family` is a maximum
/// independent flap family with a maximal first member.
Graph flap_reduction(const Graph& h, const std::vector<Separation>& family,
                     int size_cap = kDefaultReductionSizeCap);

}  // namespace subdens
