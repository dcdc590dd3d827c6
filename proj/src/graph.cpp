#include "subdens/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "subdens/errors.hpp"

namespace subdens {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> items) : VertexSet(std::vector<Vertex>(items)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n < 0) throw DomainError("negative vertex count");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n)) {
    throw DomainError("label count does not match vertex count");
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw DomainError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    bits_[static_cast<std::size_t>(e.u) * words_ + (static_cast<std::size_t>(e.v) >> 6)] |= kernels::Word{1} << (e.v & 63);
    bits_[static_cast<std::size_t>(e.v) * words_ + (static_cast<std::size_t>(e.u) >> 6)] |= kernels::Word{1} << (e.u & 63);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

// ------------------------------------------------------------ serialization

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view field, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected two integers");
    const long long a = parse_int(fields[0], line_no);
    const long long b = parse_int(fields[1], line_no);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative header value");
      if (a > 1'000'000) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more edge lines than declared");
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError(line_no, "vertex index out of range");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    seen.emplace_back(edges.back(), line_no);
  }
  if (!have_header) throw ParseError(0, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::stable_sort(seen.begin(), seen.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) throw ParseError(seen[i].second, "duplicate edge");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

// ------------------------------------------------------------- operations

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    index[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    labels.push_back(g.label(s[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(s.size()), std::move(edges), std::move(labels));
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  return induced_subgraph(g, complement(g, s));
}

VertexSet complement(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  return VertexSet(std::move(rest));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    comp[static_cast<std::size_t>(start)] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Graph contract_edge_simple(const Graph& g, Edge e) {
  if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) {
    throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
  }
  const Vertex keep = e.u;
  const Vertex gone = e.v;
  auto relabel = [&](Vertex x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    const Vertex a = relabel(f.u);
    const Vertex b = relabel(f.v);
    if (a != b) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != gone) labels.push_back(g.label(v));
  }
  return Graph(g.order() - 1, std::move(edges), std::move(labels));
}

Graph add_clique(const Graph& g, const VertexSet& x) {
  check_members(g, x);
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!g.adjacent(x[i], x[j])) edges.emplace_back(x[i], x[j]);
    }
  }
  return Graph(g.order(), std::move(edges), g.labels());
}

Graph remove_internal_edges(const Graph& g, const VertexSet& x) {
  check_members(g, x);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!(x.contains(e.u) && x.contains(e.v))) edges.push_back(e);
  }
  return Graph(g.order(), std::move(edges), g.labels());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.order(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.order(); ++v) labels.push_back(b.label(v));
  }
  return Graph(a.order() + b.order(), std::move(edges), std::move(labels));
}

// ------------------------------------------------------------ isomorphism

namespace {

struct IsoSearch {
  const Graph& h;
  const Graph& g;
  std::vector<Vertex> order;
  std::vector<Vertex> image;  // per H vertex, -1 when unassigned
  std::vector<char> used;
  BigInt count = 0;
  bool stop_at_first = false;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const Vertex hv = order[depth];
    for (Vertex gv = 0; gv < g.order(); ++gv) {
      if (used[static_cast<std::size_t>(gv)] || g.degree(gv) != h.degree(hv)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex hu = order[k];
        ok = h.adjacent(hv, hu) == g.adjacent(gv, image[static_cast<std::size_t>(hu)]);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(hv)] = gv;
      used[static_cast<std::size_t>(gv)] = 1;
      run(depth + 1);
      used[static_cast<std::size_t>(gv)] = 0;
      image[static_cast<std::size_t>(hv)] = -1;
      if (stop_at_first && count > 0) return;
    }
  }
};

std::vector<Vertex> connectivity_order(const Graph& h) {
  // Highest degree first, then repeatedly the vertex with the most already
  // placed neighbours, so adjacency checks prune early.
  const auto n = static_cast<std::size_t>(h.order());
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<int> placed_nbrs(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (best < 0) { best = v; continue; }
      const auto pv = placed_nbrs[static_cast<std::size_t>(v)];
      const auto pb = placed_nbrs[static_cast<std::size_t>(best)];
      if (pv > pb || (pv == pb && h.degree(v) > h.degree(best))) best = v;
    }
    placed[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (Vertex w : h.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(w)];
  }
  return order;
}

bool same_degree_sequence(const Graph& h, const Graph& g) {
  std::vector<int> a, b;
  for (Vertex v = 0; v < h.order(); ++v) a.push_back(h.degree(v));
  for (Vertex v = 0; v < g.order(); ++v) b.push_back(g.degree(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

BigInt count_isomorphisms(const Graph& h, const Graph& g) {
  if (h.order() != g.order() || h.size() != g.size() || !same_degree_sequence(h, g)) return 0;
  IsoSearch search{h, g, connectivity_order(h), std::vector<Vertex>(static_cast<std::size_t>(h.order()), -1),
                   std::vector<char>(static_cast<std::size_t>(g.order()), 0)};
  search.run(0);
  return search.count;
}

bool are_isomorphic(const Graph& h, const Graph& g) {
  if (h.order() != g.order() || h.size() != g.size() || !same_degree_sequence(h, g)) return false;
  IsoSearch search{h, g, connectivity_order(h), std::vector<Vertex>(static_cast<std::size_t>(h.order()), -1),
                   std::vector<char>(static_cast<std::size_t>(g.order()), 0)};
  search.stop_at_first = true;
  search.run(0);
  return search.count > 0;
}

// ------------------------------------------------------------ named graphs

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, a + y);
  }
  return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph octahedron_graph() {
  // Antipodal pairs {0,1}, {2,3}, {4,5} are the non-edges.
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      if (a / 2 != b / 2) edges.emplace_back(a, b);
    }
  }
  return Graph(6, std::move(edges));
}

}  // namespace subdens
