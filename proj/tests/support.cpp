#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace subdens::oracle {

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  const Graph tree = random_tree(rng, n);
  std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
  const Graph extra = random_graph(rng, n, p);
  for (const Edge& e : extra.edges()) edges.insert(e);
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph random_tree(Rng& rng, int n) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph(2, {Edge(0, 1)});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, c);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return Graph(n, std::move(edges));
}

namespace {

std::vector<int> invariant(const Graph& g) {
  std::vector<int> out;
  std::vector<int> degrees;
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::vector<std::vector<int>> profile;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> p{g.degree(v)};
    int triangles = 0;
    for (Vertex a : g.neighbors(v)) {
      p.push_back(g.degree(a));
      for (Vertex b : g.neighbors(v)) triangles += a < b && g.adjacent(a, b);
    }
    std::sort(p.begin() + 1, p.end());
    p.push_back(triangles);
    profile.push_back(std::move(p));
  }
  std::sort(profile.begin(), profile.end());
  for (const auto& p : profile) {
    out.insert(out.end(), p.begin(), p.end());
    out.push_back(-1);
  }
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> level{Graph(n)};
  std::vector<Graph> out = level;
  const int max_edges = n * (n - 1) / 2;
  for (int m = 1; m <= max_edges; ++m) {
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          std::vector<Edge> edges = g.edges();
          edges.emplace_back(a, b);
          Graph candidate(n, std::move(edges));
          auto& bucket = buckets[invariant(candidate)];
          const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                        [&](const Graph& other) { return are_isomorphic(candidate, other); });
          if (!seen) {
            bucket.push_back(candidate);
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

namespace {

// Adjacency masks, vertex count implicit in the vector size.
using Masks = std::vector<std::uint32_t>;

Masks to_masks(const Graph& g) {
  Masks out(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    out[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    out[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  return out;
}

Masks drop_vertex(const Masks& g, int v) {
  Masks out;
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    if (u == v) continue;
    std::uint32_t row = g[static_cast<std::size_t>(u)];
    const std::uint32_t low = row & ((1U << v) - 1);
    const std::uint32_t high = (row >> (v + 1)) << v;
    out.push_back(low | high);
  }
  return out;
}

void add_edge(Masks& g, int a, int b) {
  g[static_cast<std::size_t>(a)] |= 1U << b;
  g[static_cast<std::size_t>(b)] |= 1U << a;
}

// Deletes vertices of degree <= 1 and suppresses degree-2 vertices; both keep
// planarity in either direction.
Masks reduce(Masks g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      const std::uint32_t row = g[static_cast<std::size_t>(v)];
      const int degree = std::popcount(row);
      if (degree > 2) continue;
      if (degree == 2) {
        const int a = std::countr_zero(row);
        const int b = 31 - std::countl_zero(row);
        add_edge(g, a, b);
      }
      g = drop_vertex(g, v);
      changed = true;
      break;
    }
  }
  return g;
}

int edge_count(const Masks& g) {
  int total = 0;
  for (std::uint32_t row : g) total += std::popcount(row);
  return total / 2;
}

bool is_k33(const Masks& g) {
  if (g.size() != 6 || edge_count(g) != 9) return false;
  for (std::uint32_t side = 1; side < 64; ++side) {
    if (std::popcount(side) != 3) continue;
    bool ok = true;
    for (int v = 0; v < 6 && ok; ++v) {
      const std::uint32_t other = (side >> v) & 1 ? (~side & 63U) : side;
      ok = g[static_cast<std::size_t>(v)] == other;
    }
    if (ok) return true;
  }
  return false;
}

bool non_planar(const Masks& input, std::set<Masks>& planar_seen) {
  const Masks g = reduce(input);
  const int n = static_cast<int>(g.size());
  const int m = edge_count(g);
  if (n <= 4) return false;
  if (m > 3 * n - 6) return true;
  if (n == 5 && m == 10) return true;
  if (is_k33(g)) return true;
  if (planar_seen.count(g)) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!((g[static_cast<std::size_t>(a)] >> b) & 1U)) continue;
      Masks deleted = g;
      deleted[static_cast<std::size_t>(a)] &= ~(1U << b);
      deleted[static_cast<std::size_t>(b)] &= ~(1U << a);
      if (non_planar(deleted, planar_seen)) return true;
      Masks contracted = g;
      contracted[static_cast<std::size_t>(a)] |= g[static_cast<std::size_t>(b)];
      for (int u = 0; u < n; ++u) {
        if ((g[static_cast<std::size_t>(b)] >> u) & 1U) contracted[static_cast<std::size_t>(u)] |= 1U << a;
      }
      contracted[static_cast<std::size_t>(a)] &= ~((1U << a) | (1U << b));
      contracted = drop_vertex(contracted, b);
      if (non_planar(contracted, planar_seen)) return true;
    }
  }
  planar_seen.insert(g);
  return false;
}

bool planar_masks(const Masks& g) {
  static std::map<Masks, bool> cache;
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  std::set<Masks> planar_seen;
  const bool planar = !non_planar(g, planar_seen);
  cache.emplace(g, planar);
  return planar;
}

// A+ for interior S and cut X: H[X u S] with X made a clique.
Masks a_plus_masks(const Masks& h, std::uint32_t x, std::uint32_t s) {
  const std::uint32_t keep = x | s;
  Masks out;
  std::vector<int> index(h.size(), -1);
  int next = 0;
  for (int v = 0; v < static_cast<int>(h.size()); ++v) {
    if ((keep >> v) & 1U) index[static_cast<std::size_t>(v)] = next++;
  }
  out.assign(static_cast<std::size_t>(next), 0);
  for (int v = 0; v < static_cast<int>(h.size()); ++v) {
    if (!((keep >> v) & 1U)) continue;
    std::uint32_t row = h[static_cast<std::size_t>(v)] & keep;
    if ((x >> v) & 1U) row |= x & ~(1U << v);
    for (int u = 0; u < static_cast<int>(h.size()); ++u) {
      if ((row >> u) & 1U) out[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] |= 1U << index[static_cast<std::size_t>(u)];
    }
  }
  return out;
}

struct SeparationScan {
  std::vector<std::uint32_t> usable;  // interiors S that admit a flap for some cut X
  bool any_separation = false;
};

SeparationScan scan(const Masks& h) {
  const int n = static_cast<int>(h.size());
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  SeparationScan out;
  for (std::uint32_t s = 1; s < all; ++s) {
    std::uint32_t boundary = 0;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) boundary |= h[static_cast<std::size_t>(v)];
    }
    boundary &= ~s;
    if (std::popcount(boundary) > 2) continue;
    bool flap = false;
    // Cuts X containing the boundary, |X| <= 2, leaving something outside.
    const std::uint32_t free = all & ~s & ~boundary;
    std::vector<std::uint32_t> cuts{boundary};
    if (std::popcount(boundary) < 2) {
      for (int v = 0; v < n; ++v) {
        if ((free >> v) & 1U) cuts.push_back(boundary | (1U << v));
      }
      if (boundary == 0) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (((free >> a) & 1U) && ((free >> b) & 1U)) cuts.push_back((1U << a) | (1U << b));
          }
        }
      }
    }
    for (std::uint32_t x : cuts) {
      if ((all & ~s & ~x) == 0) continue;
      out.any_separation = true;
      if (!flap && planar_masks(a_plus_masks(h, x, s))) flap = true;
    }
    if (flap) out.usable.push_back(s);
  }
  return out;
}

}  // namespace

bool planar_by_minors(const Graph& g) { return planar_masks(to_masks(g)); }

int flap_number_oracle(const Graph& h) {
  const Masks masks = to_masks(h);
  const int n = h.order();
  const SeparationScan sc = scan(masks);
  // Interiors are pairwise disjoint with no edges between them, so a family
  // is a packing; search it by the lowest undecided vertex.
  std::vector<std::vector<std::uint32_t>> by_low(static_cast<std::size_t>(n));
  for (std::uint32_t s : sc.usable) by_low[static_cast<std::size_t>(std::countr_zero(s))].push_back(s);
  std::unordered_map<std::uint32_t, int> memo;
  auto closed = [&](std::uint32_t s) {
    std::uint32_t out = s;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) out |= masks[static_cast<std::size_t>(v)];
    }
    return out;
  };
  auto best = [&](auto&& self, std::uint32_t avail) -> int {
    if (avail == 0) return 0;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    const int v = std::countr_zero(avail);
    int result = self(self, avail & ~(1U << v));
    for (std::uint32_t s : by_low[static_cast<std::size_t>(v)]) {
      if ((s & ~avail) == 0) result = std::max(result, 1 + self(self, avail & ~closed(s)));
    }
    memo.emplace(avail, result);
    return result;
  };
  const int packing = best(best, n == 32 ? ~0U : (1U << n) - 1);
  if (packing == 0 && !sc.any_separation && planar_masks(masks)) return 1;
  return packing;
}

bool strongly_non_planar_oracle(const Graph& h) {
  const Masks masks = to_masks(h);
  return !planar_masks(masks) && scan(masks).usable.empty();
}

std::uint64_t hom_oracle(const Graph& h, const Graph& g, bool injective) {
  const int k = h.order();
  const int n = g.order();
  if (k == 0) return 1;
  if (n == 0) return 0;
  std::vector<int> map(static_cast<std::size_t>(k), 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : h.edges()) {
      if (!g.adjacent(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    if (ok && injective) {
      std::vector<int> sorted = map;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    total += ok;
    int i = 0;
    while (i < k && ++map[static_cast<std::size_t>(i)] == n) map[static_cast<std::size_t>(i++)] = 0;
    if (i == k) break;
  }
  return total;
}

std::uint64_t clique_oracle(const Graph& g, int s) {
  const int n = g.order();
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != s) continue;
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      for (int b = a + 1; b < n && clique; ++b) {
        if (((mask >> a) & 1U) && ((mask >> b) & 1U)) clique = g.adjacent(a, b);
      }
    }
    total += clique;
  }
  return total;
}

std::uint64_t automorphism_oracle(const Graph& h) {
  std::vector<int> perm(static_cast<std::size_t>(h.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    bool ok = true;
    for (const Edge& e : h.edges()) {
      if (!h.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    total += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

EmbeddedGraph random_growth(Rng& rng, const EmbeddedGraph& seed, int n) {
  EmbeddedGraph current = seed;
  while (current.order() < n) {
    const auto faces = trace_faces(current);
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const auto& f = faces[pick(rng)].vertices;
    current = split_triangle(current, f[0], f[1], f[2]);
  }
  return current;
}

std::vector<std::vector<Vertex>> relabelled_faces(const EmbeddedGraph& eg, const std::vector<Vertex>& perm) {
  auto faces = face_multiset(eg);
  for (auto& f : faces) {
    for (Vertex& v : f) v = perm[static_cast<std::size_t>(v)];
    std::sort(f.begin(), f.end());
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace subdens::oracle
