#include "subdens/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <optional>
#include <sstream>
#include <tuple>

#include "subdens/errors.hpp"

namespace subdens {

namespace {

std::vector<Edge> edges_of(const std::vector<std::vector<Vertex>>& rotations) {
  const auto n = static_cast<Vertex>(rotations.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> seen = rotations[static_cast<std::size_t>(v)];
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw DomainError("vertex " + std::to_string(v) + " lists a neighbour twice");
    }
    for (Vertex u : seen) {
      if (u == v) throw DomainError("self-loop at vertex " + std::to_string(v));
      if (u < 0 || u >= n) throw DomainError("vertex " + std::to_string(v) + " lists out-of-range neighbour " + std::to_string(u));
      const auto& back = rotations[static_cast<std::size_t>(u)];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw DomainError("vertex " + std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");
      }
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return edges;
}

// Mutable working copy for surgery.
struct Draft {
  std::vector<std::vector<Vertex>> rot;
  std::map<Edge, int> sign;
  std::vector<std::string> labels;

  explicit Draft(const EmbeddedGraph& eg) : rot(eg.rotations()), labels(eg.graph().labels()) {
    for (const Edge& e : eg.graph().edges()) sign[e] = eg.sign(e.u, e.v);
  }

  std::size_t pos(Vertex v, Vertex u) const {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
  }
  Vertex succ(Vertex v, Vertex u) const {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return r[(pos(v, u) + 1) % r.size()];
  }
  Vertex pred(Vertex v, Vertex u) const {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return r[(pos(v, u) + r.size() - 1) % r.size()];
  }
  void flip(Vertex v) {
    auto& r = rot[static_cast<std::size_t>(v)];
    std::reverse(r.begin(), r.end());
    for (Vertex u : r) sign[Edge(u, v)] = -sign[Edge(u, v)];
  }
  // Neighbours of v strictly after `from` and strictly before `to` in successor order.
  std::vector<Vertex> arc(Vertex v, Vertex from, Vertex to) const {
    std::vector<Vertex> out;
    for (Vertex u = succ(v, from); u != to; u = succ(v, u)) out.push_back(u);
    return out;
  }

  EmbeddedGraph finish() const {
    std::vector<Edge> negative;
    for (const auto& [e, s] : sign) {
      if (s < 0) negative.push_back(e);
    }
    return EmbeddedGraph(rot, negative, labels);
  }
};

std::vector<Vertex> common_neighbours(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(), g.neighbors(b).end(),
                        std::back_inserter(out));
  return out;
}

void require_vertex(const EmbeddedGraph& eg, Vertex v) {
  if (!eg.graph().contains(v)) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

// ------------------------------------------------------------ EmbeddedGraph

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotations, const std::vector<Edge>& negative_edges,
                             std::vector<std::string> labels)
    : graph_(static_cast<int>(rotations.size()), edges_of(rotations), std::move(labels)),
      rotations_(std::move(rotations)),
      signs_(graph_.size(), 1) {
  for (const Edge& e : negative_edges) {
    const auto index = graph_.contains(e.u) && graph_.contains(e.v) ? graph_.edge_index(e.u, e.v) : std::nullopt;
    if (!index) throw DomainError("negative edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    signs_[*index] = -1;
  }
}

int EmbeddedGraph::sign(Vertex a, Vertex b) const {
  const auto index = graph_.edge_index(a, b);
  if (!index) throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
  return signs_[*index];
}

std::vector<Edge> EmbeddedGraph::negative_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] < 0) out.push_back(graph_.edges()[i]);
  }
  return out;
}

int EmbeddedGraph::position(Vertex v, Vertex u) const {
  const auto& r = rotations_[static_cast<std::size_t>(v)];
  const auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw DomainError(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
  return static_cast<int>(it - r.begin());
}

Vertex EmbeddedGraph::succ(Vertex v, Vertex u) const {
  const auto& r = rotations_[static_cast<std::size_t>(v)];
  return r[(static_cast<std::size_t>(position(v, u)) + 1) % r.size()];
}

Vertex EmbeddedGraph::pred(Vertex v, Vertex u) const {
  const auto& r = rotations_[static_cast<std::size_t>(v)];
  return r[(static_cast<std::size_t>(position(v, u)) + r.size() - 1) % r.size()];
}

// ------------------------------------------------------------ text format

EmbeddedGraph parse_embedding(std::string_view text) {
  int line_no = 0;
  long long n = -1;
  std::vector<std::vector<Vertex>> rotations;
  std::vector<char> listed;
  std::map<std::pair<Vertex, Vertex>, std::pair<bool, int>> marks;  // directed (v,u) -> (negative, line)

  auto parse_int = [&](std::string_view field) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError(line_no, "expected an integer, got '" + std::string(field) + "'");
    }
    return value;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream fields{std::string(line)};
    std::string head;
    if (!(fields >> head)) continue;
    if (n < 0) {
      n = parse_int(head);
      if (n < 0 || n > 1'000'000) throw ParseError(line_no, "invalid vertex count");
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "expected a single vertex count");
      rotations.assign(static_cast<std::size_t>(n), {});
      listed.assign(static_cast<std::size_t>(n), 0);
      continue;
    }
    if (head.size() < 2 || head.back() != ':') throw ParseError(line_no, "expected 'v:' at line start");
    const long long v = parse_int(std::string_view(head).substr(0, head.size() - 1));
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (listed[static_cast<std::size_t>(v)]) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
    listed[static_cast<std::size_t>(v)] = 1;
    std::string token;
    while (fields >> token) {
      const bool negative = token.back() == '-';
      if (negative) token.pop_back();
      const long long u = parse_int(token);
      if (u < 0 || u >= n) throw ParseError(line_no, "neighbour index out of range");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(v));
      auto& rot = rotations[static_cast<std::size_t>(v)];
      if (std::find(rot.begin(), rot.end(), static_cast<Vertex>(u)) != rot.end()) {
        throw ParseError(line_no, "duplicate neighbour " + std::to_string(u));
      }
      rot.push_back(static_cast<Vertex>(u));
      marks[{static_cast<Vertex>(v), static_cast<Vertex>(u)}] = {negative, line_no};
    }
  }
  if (n < 0) throw ParseError(0, "missing vertex count");
  for (long long v = 0; v < n; ++v) {
    if (!listed[static_cast<std::size_t>(v)]) throw ParseError(line_no, "no rotation line for vertex " + std::to_string(v));
  }
  std::vector<Edge> negative;
  for (const auto& [key, mark] : marks) {
    const auto back = marks.find({key.second, key.first});
    if (back == marks.end()) {
      throw ParseError(mark.second, "vertex " + std::to_string(key.first) + " lists " + std::to_string(key.second) +
                                        " but not conversely");
    }
    if (back->second.first != mark.first) {
      throw ParseError(std::max(mark.second, back->second.second),
                       "sign of edge " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                           " differs between its ends");
    }
    if (mark.first && key.first < key.second) negative.emplace_back(key.first, key.second);
  }
  return EmbeddedGraph(std::move(rotations), negative);
}

std::string serialize_embedding(const EmbeddedGraph& eg) {
  std::ostringstream out;
  out << eg.order() << '\n';
  for (Vertex v = 0; v < eg.order(); ++v) {
    out << v << ':';
    for (Vertex u : eg.rotation(v)) out << ' ' << u << (eg.sign(v, u) < 0 ? "-" : "");
    out << '\n';
  }
  return out.str();
}

EmbeddedGraph read_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_embedding(buffer.str());
}

// ------------------------------------------------------------ faces

std::vector<FacialWalk> trace_faces(const EmbeddedGraph& eg) {
  const auto n = static_cast<std::size_t>(eg.order());
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + eg.rotation(static_cast<Vertex>(v)).size();
  // State (v, pos, eps) leaves v along rotation(v)[pos] with accumulated sign eps.
  auto state = [&](Vertex v, std::size_t p, int eps) { return 2 * (offset[static_cast<std::size_t>(v)] + p) + (eps > 0 ? 1 : 0); };
  std::vector<char> done(2 * offset[n], 0);
  std::vector<FacialWalk> faces;
  for (Vertex start = 0; start < eg.order(); ++start) {
    const std::size_t deg = eg.rotation(start).size();
    for (std::size_t p0 = 0; p0 < deg; ++p0) {
      if (done[state(start, p0, 1)]) continue;
      FacialWalk walk;
      Vertex v = start;
      std::size_t p = p0;
      int eps = 1;
      while (!done[state(v, p, eps)]) {
        const Vertex u = eg.rotation(v)[p];
        const int s = eg.sign(v, u);
        const int next_eps = eps * s;
        const std::size_t back = static_cast<std::size_t>(eg.position(u, v));
        done[state(v, p, eps)] = 1;
        done[state(u, back, -next_eps)] = 1;
        walk.vertices.push_back(v);
        walk.edges.emplace_back(v, u);
        const std::size_t du = eg.rotation(u).size();
        p = next_eps > 0 ? (back + 1) % du : (back + du - 1) % du;
        v = u;
        eps = next_eps;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

int euler_genus(const EmbeddedGraph& eg) {
  if (eg.order() == 0) throw DomainError("the null graph has no Euler genus");
  if (!is_connected(eg.graph())) throw DomainError("Euler genus needs a connected graph");
  const long long f = eg.order() == 1 ? 1 : static_cast<long long>(trace_faces(eg).size());
  return static_cast<int>(2 - eg.order() + static_cast<long long>(eg.size()) - f);
}

InequalityCheck check_facial_triangle_bound(const EmbeddedGraph& eg) {
  const int genus = euler_genus(eg);
  InequalityCheck out;
  for (const FacialWalk& face : trace_faces(eg)) {
    if (face.vertices.size() == 3) out.lhs += 1;
  }
  out.rhs = 2 * BigInt(eg.size()) - 4 * BigInt(eg.order()) + 8 - 4 * BigInt(genus);
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool is_triangulation(const EmbeddedGraph& eg) {
  const auto faces = trace_faces(eg);
  if (faces.empty()) return false;
  for (const FacialWalk& face : faces) {
    if (face.vertices.size() != 3) return false;
    std::vector<Vertex> vs = face.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    std::vector<Edge> es = face.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> face_multiset(const EmbeddedGraph& eg) {
  std::vector<std::vector<Vertex>> out;
  for (const FacialWalk& face : trace_faces(eg)) {
    std::vector<Vertex> vs = face.vertices;
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ surgery

std::vector<Edge> reducible_edges(const EmbeddedGraph& eg) {
  if (!is_triangulation(eg)) throw DomainError("embedding is not a triangulation");
  std::vector<Edge> out;
  for (const Edge& e : eg.graph().edges()) {
    if (common_neighbours(eg.graph(), e.u, e.v).size() == 2) out.push_back(e);
  }
  return out;
}

namespace {

// The two third vertices (x, y) of the faces at vw, after w has been
// switched so that vw is positive. Empty when vw is not contractible.
struct ContractionSite {
  Draft draft;
  Vertex x = -1;
  Vertex y = -1;
};

std::optional<ContractionSite> contraction_site(const EmbeddedGraph& eg, Vertex v, Vertex w, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return std::nullopt;
  };
  if (!eg.graph().contains(v) || !eg.graph().contains(w) || v == w || !eg.graph().adjacent(v, w)) {
    return fail(std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
  }
  const auto common = common_neighbours(eg.graph(), v, w);
  if (common.size() != 2) {
    return fail("edge " + std::to_string(v) + "-" + std::to_string(w) + " lies in " + std::to_string(common.size()) +
                " triangles, not 2");
  }
  if (eg.order() <= 4) return fail("contraction would leave fewer than 4 vertices");
  ContractionSite site{Draft(eg)};
  if (site.draft.sign[Edge(v, w)] < 0) site.draft.flip(w);
  site.x = site.draft.pred(v, w);
  site.y = site.draft.succ(v, w);
  const std::vector<Vertex> faces_at{std::min(site.x, site.y), std::max(site.x, site.y)};
  if (faces_at != common || site.draft.succ(w, v) != site.x || site.draft.pred(w, v) != site.y) {
    return fail("the triangles through " + std::to_string(v) + "-" + std::to_string(w) + " are not both faces");
  }
  return site;
}

}  // namespace

bool is_contractible(const EmbeddedGraph& eg, Vertex v, Vertex w) {
  return contraction_site(eg, v, w, nullptr).has_value();
}

bool is_irreducible(const EmbeddedGraph& eg) {
  for (const Edge& e : reducible_edges(eg)) {
    if (is_contractible(eg, e.u, e.v)) return false;
  }
  return true;
}

EmbeddedGraph contract_reducible(const EmbeddedGraph& eg, Vertex v, Vertex w) {
  if (!is_triangulation(eg)) throw DomainError("embedding is not a triangulation");
  std::string why;
  auto site = contraction_site(eg, v, w, &why);
  if (!site) throw DomainError("cannot contract: " + why);
  Draft& d = site->draft;
  const Vertex x = site->x;
  const Vertex y = site->y;

  std::vector<Vertex> merged;
  for (Vertex u = y;; u = d.succ(v, u)) {
    merged.push_back(u);
    if (u == x) break;
  }
  const std::vector<Vertex> moved = d.arc(w, x, y);
  merged.insert(merged.end(), moved.begin(), moved.end());
  for (Vertex b : moved) {
    auto& rb = d.rot[static_cast<std::size_t>(b)];
    *std::find(rb.begin(), rb.end(), w) = v;
    d.sign[Edge(v, b)] = d.sign[Edge(w, b)];
  }
  for (Vertex t : {x, y}) {
    auto& rt = d.rot[static_cast<std::size_t>(t)];
    rt.erase(std::find(rt.begin(), rt.end(), w));
  }
  d.rot[static_cast<std::size_t>(v)] = std::move(merged);

  auto shift = [w](Vertex u) { return u > w ? u - 1 : u; };
  std::vector<std::vector<Vertex>> rot;
  std::vector<std::string> labels;
  for (Vertex u = 0; u < eg.order(); ++u) {
    if (u == w) continue;
    std::vector<Vertex> r;
    for (Vertex t : d.rot[static_cast<std::size_t>(u)]) r.push_back(shift(t));
    rot.push_back(std::move(r));
    if (!d.labels.empty()) labels.push_back(d.labels[static_cast<std::size_t>(u)]);
  }
  std::vector<Edge> negative;
  for (const auto& [e, s] : d.sign) {
    if (s < 0 && e.u != w && e.v != w) negative.emplace_back(shift(e.u), shift(e.v));
  }
  return EmbeddedGraph(std::move(rot), negative, std::move(labels));
}

EmbeddedGraph split_path(const EmbeddedGraph& eg, Vertex x, Vertex v, Vertex y) {
  for (Vertex t : {x, v, y}) require_vertex(eg, t);
  if (x == y || x == v || y == v || !eg.graph().adjacent(v, x) || !eg.graph().adjacent(v, y)) {
    throw DomainError(std::to_string(x) + "," + std::to_string(v) + "," + std::to_string(y) +
                      " is not a split site: x and y must be distinct neighbours of v");
  }
  Draft d(eg);
  if (d.sign[Edge(v, x)] < 0) d.flip(x);
  if (d.sign[Edge(v, y)] < 0) d.flip(y);
  const auto w = static_cast<Vertex>(eg.order());
  const std::vector<Vertex> moved = d.arc(v, x, y);
  const std::vector<Vertex> kept = d.arc(v, y, x);

  std::vector<Vertex> rot_v{x, w, y};
  rot_v.insert(rot_v.end(), kept.begin(), kept.end());
  std::vector<Vertex> rot_w{v, x};
  rot_w.insert(rot_w.end(), moved.begin(), moved.end());
  rot_w.push_back(y);

  for (Vertex b : moved) {
    auto& rb = d.rot[static_cast<std::size_t>(b)];
    *std::find(rb.begin(), rb.end(), v) = w;
    d.sign[Edge(w, b)] = d.sign[Edge(v, b)];
    d.sign.erase(Edge(v, b));
  }
  auto& rx = d.rot[static_cast<std::size_t>(x)];
  rx.insert(std::find(rx.begin(), rx.end(), v), w);
  auto& ry = d.rot[static_cast<std::size_t>(y)];
  ry.insert(std::find(ry.begin(), ry.end(), v) + 1, w);
  d.rot[static_cast<std::size_t>(v)] = std::move(rot_v);
  d.rot.push_back(std::move(rot_w));
  d.sign[Edge(v, w)] = 1;
  d.sign[Edge(x, w)] = 1;
  d.sign[Edge(y, w)] = 1;
  if (!d.labels.empty()) d.labels.push_back(std::to_string(w));
  return d.finish();
}

EmbeddedGraph split_triangle(const EmbeddedGraph& eg, Vertex a, Vertex b, Vertex c) {
  for (Vertex t : {a, b, c}) require_vertex(eg, t);
  std::vector<Vertex> wanted{a, b, c};
  std::sort(wanted.begin(), wanted.end());
  const auto faces = face_multiset(eg);
  if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end() ||
      !std::binary_search(faces.begin(), faces.end(), wanted)) {
    throw DomainError("{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      "} is not a triangular face");
  }
  // Pick the orientation in which the other two corners are consecutive at b.
  if (eg.succ(b, a) == c) return split_path(eg, a, b, c);
  if (eg.succ(b, c) == a) return split_path(eg, c, b, a);
  throw DomainError("face corners at " + std::to_string(b) + " are not consecutive");
}

EmbeddedGraph switch_vertex(const EmbeddedGraph& eg, Vertex v) {
  require_vertex(eg, v);
  Draft d(eg);
  d.flip(v);
  return d.finish();
}

// ------------------------------------------------------------ construction

EmbeddedGraph from_triangles(int n, const std::vector<std::array<Vertex, 3>>& triangles) {
  if (n <= 0) throw DomainError("vertex count must be positive");
  std::map<Edge, std::vector<Vertex>> thirds;
  std::vector<std::map<Vertex, std::vector<Vertex>>> link(static_cast<std::size_t>(n));
  for (const auto& t : triangles) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = t[static_cast<std::size_t>(i)];
      const Vertex b = t[static_cast<std::size_t>((i + 1) % 3)];
      const Vertex c = t[static_cast<std::size_t>((i + 2) % 3)];
      if (a < 0 || a >= n || a == b || a == c || b == c) throw DomainError("invalid triangle");
      thirds[Edge(a, b)].push_back(c);
      link[static_cast<std::size_t>(a)][b].push_back(c);
      link[static_cast<std::size_t>(a)][c].push_back(b);
    }
  }
  for (const auto& [e, list] : thirds) {
    if (list.size() != 2) throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in exactly two triangles");
  }
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& lk = link[static_cast<std::size_t>(v)];
    if (lk.empty()) throw DomainError("vertex " + std::to_string(v) + " is in no triangle");
    auto& r = rot[static_cast<std::size_t>(v)];
    Vertex prev = -1;
    Vertex cur = lk.begin()->first;
    do {
      r.push_back(cur);
      const auto& nb = lk.at(cur);
      const Vertex next = prev < 0 ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
      prev = cur;
      cur = next;
    } while (cur != lk.begin()->first && r.size() <= lk.size());
    if (r.size() != lk.size()) throw DomainError("link of vertex " + std::to_string(v) + " is not a single cycle");
  }
  auto at = [&](Vertex v, Vertex u, int step) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    const auto size = static_cast<long>(r.size());
    const long p = std::find(r.begin(), r.end(), u) - r.begin();
    return r[static_cast<std::size_t>(((p + step) % size + size) % size)];
  };
  std::vector<Edge> negative;
  for (const auto& [e, list] : thirds) {
    // Positive when the face leaving u towards v continues consistently.
    if (at(e.v, e.u, 1) != at(e.u, e.v, -1)) negative.push_back(e);
  }
  return EmbeddedGraph(std::move(rot), negative);
}

EmbeddedGraph tetrahedron_embedding() {
  return from_triangles(4, {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}});
}

EmbeddedGraph projective_k6_embedding() {
  // Icosahedron faces modulo the antipodal map; see data/k6_projective.emb.
  return from_triangles(6, {{{0, 1, 2}}, {{0, 1, 4}}, {{0, 2, 3}}, {{0, 3, 5}}, {{0, 4, 5}},
                            {{1, 2, 5}}, {{1, 3, 4}}, {{1, 3, 5}}, {{2, 3, 4}}, {{2, 4, 5}}});
}

// ------------------------------------------------------------ genus search

namespace {

// Traces faces one at a time, choosing rotation successors and edge signs
// only when a walk needs them. States are (v, u, eps): leaving v towards u
// with local orientation eps.
class GenusSearch {
 public:
  GenusSearch(const Graph& g, long long target) : g_(g), n_(g.order()), twice_m_(2 * static_cast<long long>(g.size())), target_(target) {
    const auto nn = static_cast<std::size_t>(n_);
    eidx_.assign(nn * nn, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Edge& e = g.edges()[i];
      eidx_[static_cast<std::size_t>(e.u) * nn + static_cast<std::size_t>(e.v)] = i;
      eidx_[static_cast<std::size_t>(e.v) * nn + static_cast<std::size_t>(e.u)] = i;
    }
    // Switching at vertices makes a spanning tree's signs free.
    sign_.assign(g.size(), 0);
    std::vector<char> seen(nn, 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex u : g.neighbors(queue[i])) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        seen[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
        sign_[edge(queue[i], u)] = 1;
      }
    }
    succ_.assign(nn * nn, -1);
    pred_.assign(nn * nn, -1);
    used_.assign(2 * nn * nn, 0);
  }

  GenusSearchResult run() {
    // Demand target faces first and lower the demand until it is met.
    const std::size_t start = state(0, g_.neighbors(0).front(), 1);
    for (; !found_; --target_) trace(start, start, 0, 0, 0);
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n_));
    std::vector<Edge> negative;
    for (Vertex v = 0; v < n_; ++v) {
      Vertex u = g_.neighbors(v).front();
      for (int k = 0; k < g_.degree(v); ++k) {
        rot[static_cast<std::size_t>(v)].push_back(u);
        u = best_succ_[at(v, u)];
      }
    }
    for (std::size_t i = 0; i < best_sign_.size(); ++i) {
      if (best_sign_[i] < 0) negative.push_back(g_.edges()[i]);
    }
    EmbeddedGraph witness(std::move(rot), negative);
    return {euler_genus(witness), std::move(witness)};
  }

 private:
  std::size_t at(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }
  std::size_t edge(Vertex a, Vertex b) const { return eidx_[at(a, b)]; }
  std::size_t state(Vertex v, Vertex u, int eps) const { return 2 * at(v, u) + (eps > 0 ? 1 : 0); }

  // Whether succ_u(a) = b keeps u's partial rotation a set of paths, or
  // closes it into one cycle through every neighbour.
  bool can_link(Vertex u, Vertex a, Vertex b) const {
    if (succ_[at(u, a)] >= 0 || pred_[at(u, b)] >= 0) return false;
    int length = 1;
    for (Vertex w = b; w != a; w = succ_[at(u, w)]) {
      if (succ_[at(u, w)] < 0) return true;
      ++length;
    }
    return length == g_.degree(u);
  }

  // Traverses state st of the face that began at start. closed faces use
  // `sides` edge sides; the open face has taken `length` steps.
  void trace(std::size_t st, std::size_t start, long long closed, long long sides, long long length) {
    if (found_) return;
    if (closed + 1 + (twice_m_ - sides - std::max<long long>(length, 3)) / 3 < target_) return;
    const auto v = static_cast<Vertex>(st / 2 / static_cast<std::size_t>(n_));
    const auto u = static_cast<Vertex>(st / 2 % static_cast<std::size_t>(n_));
    const int eps = (st & 1U) ? 1 : -1;
    const std::size_t e = edge(v, u);
    if (sign_[e] != 0) {
      step(v, u, eps, start, closed, sides, length);
      return;
    }
    for (int sg : {1, -1}) {
      sign_[e] = sg;
      step(v, u, eps, start, closed, sides, length);
      if (found_) return;
    }
    sign_[e] = 0;
  }

  void step(Vertex v, Vertex u, int eps, std::size_t start, long long closed, long long sides, long long length) {
    const int arrive = eps * sign_[edge(v, u)];
    const std::size_t here = state(v, u, eps);
    const std::size_t back = state(u, v, -arrive);
    if (used_[here] || used_[back]) return;
    used_[here] = used_[back] = 1;
    const Vertex known = arrive > 0 ? succ_[at(u, v)] : pred_[at(u, v)];
    if (known >= 0) {
      advance(state(u, known, arrive), start, closed, sides, length + 1);
    } else {
      for (Vertex w : g_.neighbors(u)) {
        const Vertex a = arrive > 0 ? v : w;
        const Vertex b = arrive > 0 ? w : v;
        if (!can_link(u, a, b)) continue;
        succ_[at(u, a)] = b;
        pred_[at(u, b)] = a;
        advance(state(u, w, arrive), start, closed, sides, length + 1);
        succ_[at(u, a)] = -1;
        pred_[at(u, b)] = -1;
        if (found_) break;
      }
    }
    if (!found_) used_[here] = used_[back] = 0;
  }

  void advance(std::size_t next, std::size_t start, long long closed, long long sides, long long length) {
    if (next != start) {
      if (!used_[next]) trace(next, start, closed, sides, length);
      return;
    }
    ++closed;
    sides += length;
    if (sides == twice_m_) {
      if (closed >= target_) {
        found_ = true;
        best_succ_ = succ_;
        best_sign_ = sign_;
      }
      return;
    }
    std::size_t fresh = 0;
    while (used_[fresh] || !g_.adjacent(static_cast<Vertex>(fresh / 2 / static_cast<std::size_t>(n_)),
                                        static_cast<Vertex>(fresh / 2 % static_cast<std::size_t>(n_)))) {
      ++fresh;
    }
    trace(fresh, fresh, closed, sides, 0);
  }

  const Graph& g_;
  int n_;
  long long twice_m_;
  long long target_;
  std::vector<std::size_t> eidx_;
  std::vector<int> sign_;
  std::vector<Vertex> succ_;
  std::vector<Vertex> pred_;
  std::vector<char> used_;
  bool found_ = false;
  std::vector<Vertex> best_succ_;
  std::vector<int> best_sign_;
};

}  // namespace

GenusSearchResult min_genus_search(const Graph& g, int vertex_cap, int edge_cap) {
  if (g.order() > vertex_cap) {
    throw CapExceeded("genus search vertex cap", std::to_string(g.order()) + " vertices > " + std::to_string(vertex_cap));
  }
  if (static_cast<int>(g.size()) > edge_cap) {
    throw CapExceeded("genus search edge cap", std::to_string(g.size()) + " edges > " + std::to_string(edge_cap));
  }
  if (g.order() == 0 || !is_connected(g)) throw DomainError("genus search needs a connected non-null graph");
  if (is_tree(g)) {
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) rot[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return {0, EmbeddedGraph(std::move(rot), {})};
  }
  if (auto rot = planar_rotation_system(g)) return {0, EmbeddedGraph(std::move(*rot), {})};
  // Non-planar, so Euler genus >= 1 caps the face count at m - n + 1.
  const auto m = static_cast<long long>(g.size());
  return GenusSearch(g, std::min<long long>(1 - g.order() + m, (2 * m) / 3)).run();
}

}  // namespace subdens
