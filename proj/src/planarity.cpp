#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "subdens/errors.hpp"
#include "subdens/graph.hpp"

namespace subdens {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  int index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, index++);
  return bg;
}

}  // namespace

bool is_planar(const Graph& g, int size_cap) {
  if (g.order() > size_cap) {
    throw CapExceeded("planarity size cap",
                      std::to_string(g.order()) + " vertices > " + std::to_string(size_cap));
  }
  // Euler bound settles dense inputs without building the boost graph.
  if (g.order() >= 3 && g.size() > 3 * static_cast<std::size_t>(g.order()) - 6) return false;
  if (g.order() <= 4) return true;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::vector<std::vector<Vertex>>> planar_rotation_system(const Graph& g, int size_cap) {
  if (g.order() > size_cap) {
    throw CapExceeded("planarity size cap",
                      std::to_string(g.order()) + " vertices > " + std::to_string(size_cap));
  }
  BoostGraph bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(g.order()));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding)) {
    return std::nullopt;
  }
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const EdgeDesc& e : storage[static_cast<std::size_t>(v)]) {
      const auto a = static_cast<Vertex>(boost::source(e, bg));
      const auto b = static_cast<Vertex>(boost::target(e, bg));
      rot[static_cast<std::size_t>(v)].push_back(a == v ? b : a);
    }
  }
  return rot;
}

}  // namespace subdens
