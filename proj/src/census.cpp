#include "subdens/census.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "subdens/counting.hpp"
#include "subdens/errors.hpp"

namespace subdens {

namespace {

int common_genus(const std::vector<EmbeddedGraph>& list) {
  if (list.empty()) throw DomainError("empty triangulation list");
  const int genus = euler_genus(list.front());
  for (std::size_t i = 1; i < list.size(); ++i) {
    const int other = euler_genus(list[i]);
    if (other != genus) {
      throw DomainError("mixed genera: triangulation 0 has Euler genus " + std::to_string(genus) + ", triangulation " +
                        std::to_string(i) + " has " + std::to_string(other));
    }
  }
  return genus;
}

}  // namespace

ExcessResult max_excess(const std::vector<EmbeddedGraph>& triangulations, int s) {
  if (s != 3 && s != 4) throw DomainError("excess is defined for s = 3 and s = 4");
  common_genus(triangulations);
  ExcessResult out;
  bool first = true;
  for (std::size_t i = 0; i < triangulations.size(); ++i) {
    const Graph& g = triangulations[i].graph();
    const BigInt weight = s == 3 ? 3 : 1;
    const auto excess = static_cast<long long>(count_cliques(g, s) - weight * g.order());
    if (first || excess > out.phi) {
      out.phi = excess;
      out.argmax.clear();
      out.threshold = g.order();
      first = false;
    }
    if (excess == out.phi) {
      out.argmax.push_back(i);
      out.threshold = std::min(out.threshold, g.order());
    }
  }
  return out;
}

SurfaceCensus surface_table(const std::string& surface, const std::vector<EmbeddedGraph>& irreducible, bool complete) {
  const int genus = common_genus(irreducible);
  for (std::size_t i = 0; i < irreducible.size(); ++i) {
    if (!is_triangulation(irreducible[i])) throw DomainError("input " + std::to_string(i) + " is not a triangulation");
    if (!is_irreducible(irreducible[i])) throw DomainError("input " + std::to_string(i) + " is not irreducible");
  }
  SurfaceCensus out;
  out.surface = surface;
  out.genus = genus;
  out.complete = complete;
  out.triangulations = irreducible.size();

  int smallest = irreducible.front().order();
  for (const EmbeddedGraph& eg : irreducible) smallest = std::min(smallest, eg.order());

  const ExcessResult e3 = max_excess(irreducible, 3);
  const ExcessResult e4 = max_excess(irreducible, 4);
  out.phi3 = e3.phi;
  out.phi4 = e4.phi;
  out.entries.push_back({0, 1, 0});
  out.entries.push_back({1, 0, 1});
  out.entries.push_back({3, 3 * BigInt(genus - 2), smallest});
  out.entries.push_back({3, e3.phi, e3.threshold});
  out.entries.push_back({1, e4.phi, e4.threshold});

  std::vector<std::vector<BigInt>> profiles;
  for (const EmbeddedGraph& eg : irreducible) profiles.push_back(clique_profile(eg.graph()));
  for (std::size_t s = 5;; ++s) {
    BigInt best = 0;
    int threshold = 0;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const BigInt c = s < profiles[i].size() ? profiles[i][s] : BigInt(0);
      if (c > best || (c == best && c > 0 && irreducible[i].order() < threshold)) {
        best = c;
        threshold = irreducible[i].order();
      }
    }
    if (best == 0) break;
    out.entries.push_back({0, best, threshold});
  }

  for (const CensusEntry& entry : out.entries) {
    out.total.a += entry.a;
    out.total.b += entry.b;
    out.total.threshold = std::max(out.total.threshold, entry.threshold);
  }
  return out;
}

BigInt extremal_count(const SurfaceCensus& census, int s, long long n) {
  if (s < 0) throw DomainError("clique size must be non-negative");
  if (n < 0) throw DomainError("vertex count must be non-negative");
  if (static_cast<std::size_t>(s) >= census.entries.size()) return 0;
  const CensusEntry& entry = census.entries[static_cast<std::size_t>(s)];
  if (n < entry.threshold) {
    throw DomainError("n = " + std::to_string(n) + " is below the attainment threshold " +
                      std::to_string(entry.threshold) + " for s = " + std::to_string(s));
  }
  return BigInt(entry.a) * n + entry.b;
}

std::string format_entry(const CensusEntry& entry) {
  std::ostringstream out;
  if (entry.a == 0) {
    out << entry.b;
    return out.str();
  }
  if (entry.a != 1) out << entry.a;
  out << 'n';
  if (entry.b > 0) out << '+' << entry.b;
  if (entry.b < 0) out << entry.b;
  return out.str();
}

std::string format_census(const SurfaceCensus& census) {
  std::vector<std::string> head{"surface", "g"};
  std::vector<std::string> row{census.surface, std::to_string(census.genus)};
  for (std::size_t s = 0; s < census.entries.size(); ++s) {
    head.push_back("s=" + std::to_string(s));
    row.push_back(format_entry(census.entries[s]));
  }
  head.push_back("total");
  row.push_back(format_entry(census.total));
  std::ostringstream out;
  for (int line = 0; line < 2; ++line) {
    const auto& cells = line == 0 ? head : row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t width = std::max(head[i].size(), row[i].size());
      out << std::left << std::setw(static_cast<int>(width)) << cells[i];
      if (i + 1 < cells.size()) out << "  ";
    }
    out << '\n';
  }
  return out.str();
}

std::vector<EmbeddedGraph> builtin_irreducible(const std::string& surface) {
  if (surface == "sphere") return {tetrahedron_embedding()};
  if (surface == "N1") return {projective_k6_embedding()};
  throw DomainError("no built-in irreducible triangulations for surface '" + surface + "'");
}

Bounds bounds(int genus, int s, double n) {
  if (genus < 0) throw DomainError("Euler genus must be non-negative");
  if (s < 3) throw DomainError("bounds are given for s >= 3");
  if (n < 0) throw DomainError("vertex count must be non-negative");
  const double g = genus;
  const double root = std::sqrt(6 * g);
  const double log_term = genus > 0 ? std::log(13 * g) : 0.0;
  Bounds out;
  if (s == 3) {
    out.lower = 3 * n + std::sqrt(6.0) * std::pow(g, 1.5);
    out.upper = 3 * n + 10.5 * std::pow(g, 1.5) + 270 * g + 36 * g * log_term;
    out.lower_applies = genus >= 4 && n >= root;
    out.lower_condition = "g >= 4 and n >= sqrt(6g)";
  } else if (s == 4) {
    out.lower = n + 1.5 * g * g;
    out.upper = n + 283.0 / 24.0 * g * g + 27 * std::pow(g, 1.5) + 108 * g * (log_term + (genus > 0 ? 1 : 0)) + 468 * g;
    out.lower_applies = genus >= 1 && n >= root;
    out.lower_condition = "g >= 1 and n >= sqrt(6g)";
  } else {
    out.lower = std::pow(root / s, s);
    out.upper = std::pow(300 * std::sqrt(g) / s, s);
    out.lower_applies = n >= root && root >= s;
    out.lower_condition = "n >= sqrt(6g) >= s";
  }
  return out;
}

}  // namespace subdens
