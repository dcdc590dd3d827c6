#include "subdens/spqrk.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "subdens/errors.hpp"

namespace subdens {

namespace {

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

bool disconnected_without(const Graph& g, const VertexSet& cut) {
  return connected_components(remove_vertices(g, cut)).size() > 1;
}

std::optional<Vertex> smallest_cut_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (disconnected_without(g, VertexSet{v})) return v;
  }
  return std::nullopt;
}

bool three_connected(const Graph& g) {
  if (g.order() < 4) return false;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (disconnected_without(g, VertexSet{a})) return false;
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (disconnected_without(g, VertexSet{a, b})) return false;
    }
  }
  return true;
}

// Components of g - cut in the original indexing of g.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& cut) {
  const VertexSet rest = complement(g, cut);
  std::vector<VertexSet> out;
  for (const VertexSet& local : connected_components(induced_subgraph(g, rest))) {
    std::vector<Vertex> members;
    for (Vertex v : local) members.push_back(rest[static_cast<std::size_t>(v)]);
    out.emplace_back(std::move(members));
  }
  return out;
}

class Builder {
 public:
  SpqrkTree tree;

  // `g` uses local indices; orig[i] is the input-graph vertex of local i.
  void build(const Graph& g, const std::vector<Vertex>& orig) {
    if (g.order() <= 2) {
      whole(g, orig, NodeKind::K);
    } else if (is_cycle(g)) {
      whole(g, orig, NodeKind::S);
    } else if (three_connected(g)) {
      whole(g, orig, NodeKind::R);
    } else if (auto x = smallest_cut_vertex(g)) {
      cut_vertex(g, orig, *x);
    } else {
      two_cut(g, orig);
    }
  }

 private:
  void whole(const Graph& g, const std::vector<Vertex>& orig, NodeKind kind) {
    SpqrkNode node{kind, VertexSet(orig), {}};
    for (const Edge& e : g.edges()) {
      node.edges.push_back({orig[static_cast<std::size_t>(e.u)], orig[static_cast<std::size_t>(e.v)], true});
    }
    tree.nodes.push_back(std::move(node));
  }

  static std::vector<Vertex> compose(const std::vector<Vertex>& orig, const VertexSet& local) {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(orig[static_cast<std::size_t>(v)]);
    return out;
  }

  void cut_vertex(const Graph& g, const std::vector<Vertex>& orig, Vertex x) {
    const Vertex ox = orig[static_cast<std::size_t>(x)];
    const int q = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({NodeKind::Q, VertexSet{ox}, {}});
    for (const VertexSet& comp : components_without(g, VertexSet{x})) {
      std::vector<Vertex> part = comp.items();
      part.push_back(x);
      const VertexSet side(std::move(part));
      const int start = static_cast<int>(tree.nodes.size());
      build(induced_subgraph(g, side), compose(orig, side));
      const int end = static_cast<int>(tree.nodes.size());
      std::vector<int> holders;
      for (int i = start; i < end; ++i) {
        if (tree.nodes[static_cast<std::size_t>(i)].vertices.contains(ox)) holders.push_back(i);
      }
      int attach = -1;
      if (holders.size() == 1) {
        attach = holders.front();
      } else {
        for (int i : holders) {
          if (tree.nodes[static_cast<std::size_t>(i)].kind == NodeKind::P) {
            attach = i;
            break;
          }
        }
      }
      if (attach < 0) throw std::logic_error("no node of the block subtree can host the cut vertex");
      reroot(start, attach);
      tree.links.emplace_back(q, attach);
    }
  }

  // Makes `node` the root of the subtree currently rooted at `root` by
  // reversing the links on the path between them.
  void reroot(int root, int node) {
    std::vector<std::size_t> path;
    for (int at = node; at != root;) {
      const auto link = std::find_if(tree.links.begin(), tree.links.end(), [&](const auto& l) { return l.second == at; });
      path.push_back(static_cast<std::size_t>(link - tree.links.begin()));
      at = link->first;
    }
    for (std::size_t i : path) std::swap(tree.links[i].first, tree.links[i].second);
  }

  void two_cut(const Graph& g, const std::vector<Vertex>& orig) {
    for (Vertex x = 0; x < g.order(); ++x) {
      if (g.degree(x) < 3) continue;
      for (Vertex y = x + 1; y < g.order(); ++y) {
        if (g.degree(y) < 3 || !disconnected_without(g, VertexSet{x, y})) continue;
        split(g, orig, x, y);
        return;
      }
    }
    throw std::logic_error("2-connected graph without a usable 2-cut");
  }

  void split(const Graph& g, const std::vector<Vertex>& orig, Vertex x, Vertex y) {
    const Vertex ox = orig[static_cast<std::size_t>(x)];
    const Vertex oy = orig[static_cast<std::size_t>(y)];
    const auto comps = components_without(g, VertexSet{x, y});
    const int p = static_cast<int>(tree.nodes.size());
    SpqrkNode node{NodeKind::P, VertexSet{ox, oy}, {}};
    for (std::size_t i = 0; i < comps.size(); ++i) node.edges.push_back({ox, oy, false});
    if (g.adjacent(x, y)) node.edges.push_back({ox, oy, true});
    tree.nodes.push_back(std::move(node));

    for (const VertexSet& comp : comps) {
      std::vector<Vertex> part = comp.items();
      part.push_back(x);
      part.push_back(y);
      const VertexSet side(std::move(part));
      const Graph sub = induced_subgraph(g, side);
      const auto lx = static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), x) - side.begin());
      const auto ly = static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), y) - side.begin());
      std::vector<Edge> edges = sub.edges();
      if (!sub.adjacent(lx, ly)) edges.emplace_back(lx, ly);
      const int start = static_cast<int>(tree.nodes.size());
      build(Graph(sub.order(), std::move(edges)), compose(orig, side));
      const int end = static_cast<int>(tree.nodes.size());
      int holder = -1;
      for (int i = start; i < end && holder < 0; ++i) {
        for (SpqrkEdge& e : tree.nodes[static_cast<std::size_t>(i)].edges) {
          if (e.real && Edge(e.u, e.v) == Edge(ox, oy)) {
            e.real = false;
            holder = i;
            break;
          }
        }
      }
      if (holder < 0) throw std::logic_error("split edge missing from the component subtree");
      reroot(start, holder);
      tree.links.emplace_back(p, holder);
    }
  }
};

// Bipartite matching of virtual edges to distinct connectors: components of
// g - V(H_a) adjacent to both ends, or the g-edge itself when no real edge
// of the node uses it.
bool virtual_edges_realisable(const SpqrkNode& node, const Graph& g) {
  const auto comps = components_without(g, node.vertices);
  std::vector<std::pair<Vertex, Vertex>> virtuals;
  for (const SpqrkEdge& e : node.edges) {
    if (!e.real) virtuals.emplace_back(e.u, e.v);
  }
  auto attaches = [&](const VertexSet& comp, Vertex v) {
    for (Vertex w : comp) {
      if (g.adjacent(v, w)) return true;
    }
    return false;
  };
  auto real_uses = [&](Vertex a, Vertex b) {
    return std::any_of(node.edges.begin(), node.edges.end(),
                       [&](const SpqrkEdge& e) { return e.real && Edge(e.u, e.v) == Edge(a, b); });
  };
  // Connector ids: components first, then g-edges by edge index.
  const std::size_t nc = comps.size();
  std::vector<std::vector<std::size_t>> options(virtuals.size());
  for (std::size_t i = 0; i < virtuals.size(); ++i) {
    const auto [a, b] = virtuals[i];
    for (std::size_t c = 0; c < nc; ++c) {
      if (attaches(comps[c], a) && attaches(comps[c], b)) options[i].push_back(c);
    }
    if (g.adjacent(a, b) && !real_uses(a, b)) options[i].push_back(nc + *g.edge_index(a, b));
  }
  std::vector<long long> owner;
  std::vector<std::size_t> ids;
  for (const auto& list : options) ids.insert(ids.end(), list.begin(), list.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  owner.assign(ids.size(), -1);
  auto slot = [&](std::size_t id) { return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin()); };
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t id : options[i]) {
      const std::size_t s = slot(id);
      if (seen[s]) continue;
      seen[s] = 1;
      if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]), seen)) {
        owner[s] = static_cast<long long>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < virtuals.size(); ++i) {
    std::vector<char> seen(ids.size(), 0);
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace

char node_kind_letter(NodeKind kind) {
  switch (kind) {
    case NodeKind::S: return 'S';
    case NodeKind::P: return 'P';
    case NodeKind::Q: return 'Q';
    case NodeKind::R: return 'R';
    case NodeKind::K: return 'K';
  }
  return '?';
}

SpqrkTree spqrk_build(const Graph& g) {
  if (g.order() == 0) throw DomainError("the null graph has no SPQRK tree");
  if (!is_connected(g)) throw DomainError("SPQRK tree needs a connected graph");
  std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;
  Builder builder;
  builder.build(Graph(g.order(), g.edges()), identity);
  return std::move(builder.tree);
}

bool spqrk_validate(const SpqrkTree& t, const Graph& g) {
  const std::size_t count = t.nodes.size();
  if (count == 0 || t.links.size() != count - 1) return false;
  std::vector<int> parent(count, -1);
  for (const auto& [a, b] : t.links) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= count || static_cast<std::size_t>(b) >= count) return false;
    if (b == 0 || parent[static_cast<std::size_t>(b)] >= 0) return false;
    parent[static_cast<std::size_t>(b)] = a;
  }
  for (std::size_t v = 1; v < count; ++v) {
    // Walk to the root; a cycle would exceed `count` steps.
    std::size_t steps = 0;
    for (int cur = static_cast<int>(v); cur != 0; cur = parent[static_cast<std::size_t>(cur)]) {
      if (cur < 0 || ++steps > count) return false;
    }
  }

  std::vector<int> real_count(g.size(), 0);
  for (const SpqrkNode& node : t.nodes) {
    if (node.vertices.empty()) return false;
    for (Vertex v : node.vertices) {
      if (!g.contains(v)) return false;
    }
    for (const SpqrkEdge& e : node.edges) {
      if (e.u == e.v || !node.vertices.contains(e.u) || !node.vertices.contains(e.v)) return false;
      if (!e.real) continue;
      const auto index = g.edge_index(e.u, e.v);
      if (!index) return false;
      ++real_count[*index];
    }
    if (!virtual_edges_realisable(node, g)) return false;
  }
  return std::all_of(real_count.begin(), real_count.end(), [](int c) { return c == 1; });
}

std::string format_spqrk(const SpqrkTree& t) {
  std::vector<std::vector<int>> children(t.nodes.size());
  for (const auto& [a, b] : t.links) children[static_cast<std::size_t>(a)].push_back(b);
  for (auto& list : children) std::sort(list.begin(), list.end());
  std::ostringstream out;
  std::function<void(int, int)> emit = [&](int index, int depth) {
    const SpqrkNode& node = t.nodes[static_cast<std::size_t>(index)];
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << node_kind_letter(node.kind) << " [";
    for (std::size_t i = 0; i < node.vertices.size(); ++i) out << (i ? "," : "") << node.vertices[i];
    out << ']';
    for (const SpqrkEdge& e : node.edges) {
      const Edge n(e.u, e.v);
      out << ' ' << n.u << '-' << n.v << ':' << (e.real ? 'R' : 'V');
    }
    out << '\n';
    for (int child : children[static_cast<std::size_t>(index)]) emit(child, depth + 1);
  };
  if (!t.nodes.empty()) emit(0, 0);
  return out.str();
}

}  // namespace subdens
