#include "subdens/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "subdens/errors.hpp"
#include "subdens/flaps.hpp"

namespace subdens {

namespace {

VertexSet neighbourhood(const Graph& h, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    for (Vertex w : h.neighbors(v)) {
      if (!s.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

// Appends a copy of the interior s with its edges to the cut set, numbering
// the new vertices from `next`. `index` maps surviving H vertices to output
// vertices; cut vertices of independent flaps always survive.
void paste_interior(const Graph& h, const VertexSet& s, const std::vector<Vertex>& index, int& next,
                    std::vector<Edge>& edges) {
  std::vector<Vertex> image(static_cast<std::size_t>(h.order()), -1);
  for (Vertex v : s) image[static_cast<std::size_t>(v)] = next++;
  auto target = [&](Vertex v) {
    return s.contains(v) ? image[static_cast<std::size_t>(v)] : index[static_cast<std::size_t>(v)];
  };
  for (const Edge& e : h.edges()) {
    if (s.contains(e.u) || s.contains(e.v)) edges.emplace_back(target(e.u), target(e.v));
  }
}

}  // namespace

Graph lower_bound_graph(const Graph& h, int n) {
  if (h.order() == 0 || !is_connected(h)) throw DomainError("lower-bound construction needs a connected graph");
  if (n < 4 * h.order()) {
    throw DomainError("n = " + std::to_string(n) + " is below 4|V(H)| = " + std::to_string(4 * h.order()));
  }
  const FlapFamily family = max_flap_family(h);
  if (family.number == 0) throw DomainError("H is strongly non-planar: no flap to paste");
  const int q = n / h.order() - 1;
  if (family.family.empty()) {
    Graph out = h;
    for (int i = 0; i < q; ++i) out = disjoint_union(out, h);
    return Graph(out.order(), out.edges());
  }

  std::vector<Separation> flaps;
  for (const Separation& sep : family.family) flaps.push_back({neighbourhood(h, sep.s), sep.s});

  // H' keeps the interiors of 1-separation flaps; 2-separation interiors go
  // and the cut pair becomes an edge.
  std::vector<char> removed(static_cast<std::size_t>(h.order()), 0);
  std::vector<Edge> base;
  for (const Separation& sep : flaps) {
    if (sep.x.size() == 2) {
      for (Vertex v : sep.s) removed[static_cast<std::size_t>(v)] = 1;
      base.emplace_back(sep.x[0], sep.x[1]);
    }
  }
  for (const Edge& e : h.edges()) {
    if (!removed[static_cast<std::size_t>(e.u)] && !removed[static_cast<std::size_t>(e.v)]) base.push_back(e);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  // Renumber the survivors of H' to 0..h'-1, then paste.
  std::vector<Vertex> index(static_cast<std::size_t>(h.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : base) edges.emplace_back(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);

  for (const Separation& sep : flaps) {
    for (int copy = 0; copy < q; ++copy) paste_interior(h, sep.s, index, next, edges);
  }
  return Graph(next, std::move(edges));
}

Graph tree_blowup(const Graph& t, int n) {
  const TreeBeta beta = tree_beta(t);
  if (n < 2 * t.order()) {
    throw DomainError("n = " + std::to_string(n) + " is below 2|V(T)| = " + std::to_string(2 * t.order()));
  }
  const int twins = (n - t.order()) / beta.beta;
  std::vector<std::vector<Vertex>> images(static_cast<std::size_t>(t.order()));
  int next = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    const int count = beta.stable.contains(v) ? twins : 1;
    for (int i = 0; i < count; ++i) images[static_cast<std::size_t>(v)].push_back(next++);
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    for (Vertex a : images[static_cast<std::size_t>(e.u)]) {
      for (Vertex b : images[static_cast<std::size_t>(e.v)]) edges.emplace_back(a, b);
    }
  }
  return Graph(next, std::move(edges));
}

EmbeddedGraph split_growth(const EmbeddedGraph& seed, int n) {
  if (!is_triangulation(seed)) throw DomainError("seed is not a triangulation");
  if (n < seed.order()) {
    throw DomainError("n = " + std::to_string(n) + " is below the seed's " + std::to_string(seed.order()) + " vertices");
  }
  EmbeddedGraph current = seed;
  while (current.order() < n) {
    const auto faces = face_multiset(current);
    const auto& f = faces.front();
    current = split_triangle(current, f[0], f[1], f[2]);
  }
  return current;
}

HostGenerator parse_generator(std::string_view name) {
  if (name == "lower-bound") return HostGenerator::lower_bound;
  if (name == "tree-blowup") return HostGenerator::tree_blowup;
  if (name == "split-growth") return HostGenerator::split_growth;
  if (name == "padding") return HostGenerator::padding;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

std::string_view generator_name(HostGenerator generator) {
  switch (generator) {
    case HostGenerator::lower_bound: return "lower-bound";
    case HostGenerator::tree_blowup: return "tree-blowup";
    case HostGenerator::split_growth: return "split-growth";
    case HostGenerator::padding: return "padding";
  }
  return "?";
}

Graph generate_host(const Graph& h, int n, HostGenerator generator) {
  switch (generator) {
    case HostGenerator::lower_bound: return lower_bound_graph(h, n);
    case HostGenerator::tree_blowup: return tree_blowup(h, n);
    case HostGenerator::split_growth: return split_growth(tetrahedron_embedding(), n).graph();
    case HostGenerator::padding:
      if (n < h.order()) throw DomainError("n = " + std::to_string(n) + " is below |V(H)|");
      return Graph(n, h.edges());
  }
  throw DomainError("unknown generator");
}

ScalingReport scaling_exponent(const Graph& h, const std::vector<int>& sizes, HostGenerator generator,
                               const CountOptions& options) {
  if (sizes.size() < 3) throw DomainError("scaling needs at least three sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw DomainError("sizes must be strictly increasing");
  }
  ScalingReport report;
  std::vector<std::string> empty;
  for (int n : sizes) {
    const Graph host = generate_host(h, n, generator);
    BigInt copies = count_copies(h, host, options);
    if (copies == 0) empty.push_back(std::to_string(n));
    report.points.push_back({n, host.order(), std::move(copies)});
  }
  if (!empty.empty()) {
    std::string list;
    for (const auto& s : empty) list += (list.empty() ? "" : ",") + s;
    throw DomainError("no copies at n = " + list + "; log undefined");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(report.points.size());
  for (const ScalingPoint& p : report.points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.copies.convert_to<double>());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return report;
}

}  // namespace subdens
