#include "subdens/flaps.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "subdens/errors.hpp"
#include "subdens/kernels.hpp"

namespace subdens {

namespace {

using kernels::Word;

std::vector<VertexSet> components_avoiding(const Graph& h, const VertexSet& x) {
  std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
  for (Vertex v : x) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < h.order(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> members;
    seen[static_cast<std::size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : h.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::vector<VertexSet> cut_sets(const Graph& h) {
  std::vector<VertexSet> out{VertexSet{}};
  for (Vertex a = 0; a < h.order(); ++a) {
    out.push_back(VertexSet{a});
    for (Vertex b = a + 1; b < h.order(); ++b) out.push_back(VertexSet{a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool touches(const Graph& h, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    for (Vertex w : h.neighbors(v)) {
      if (b.contains(w)) return true;
    }
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> items = a.items();
  items.insert(items.end(), b.begin(), b.end());
  return VertexSet(std::move(items));
}

// Edges with at least one endpoint in s, i.e. E(A-).
std::vector<Edge> minus_edges(const Graph& h, const VertexSet& s) {
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    if (s.contains(e.u) || s.contains(e.v)) out.push_back(e);
  }
  return out;
}

// A_a is a proper subgraph of A_c, or the same subgraph with a larger
// interior (a cut vertex of a that is isolated in B_a moves into S_c).
bool strictly_inside(const Graph& h, const Separation& a, const Separation& c) {
  const VertexSet va = set_union(a.x, a.s);
  const VertexSet vc = set_union(c.x, c.s);
  if (!va.is_subset_of(vc)) return false;
  const auto ea = minus_edges(h, a.s);
  const auto ec = minus_edges(h, c.s);
  if (!std::includes(ec.begin(), ec.end(), ea.begin(), ea.end())) return false;
  return va != vc || ea != ec || (a.s != c.s && a.s.is_subset_of(c.s));
}

// Maximum independent set in a compatibility graph given as bitset rows:
// branch and bound, include-first in index order, greedy colouring bound.
// The first maximum found in that order is kept, so results are stable.
class MaxCompatibleSet {
 public:
  explicit MaxCompatibleSet(std::vector<std::vector<Word>> compat, std::size_t count)
      : compat_(std::move(compat)), count_(count), words_((count + 63) / 64) {}

  std::vector<int> solve() {
    std::vector<Word> all(words_, 0);
    for (std::size_t i = 0; i < count_; ++i) all[i >> 6] |= Word{1} << (i & 63);
    expand(all);
    return best_;
  }

 private:
  std::size_t colour_bound(const std::vector<Word>& cand) const {
    std::vector<Word> uncoloured = cand;
    std::vector<Word> pool(words_);
    std::size_t classes = 0;
    while (kernels::popcount(uncoloured) > 0) {
      ++classes;
      pool = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (pool[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(pool[w]));
          uncoloured[w] &= ~(Word{1} << (v & 63));
          kernels::andnot_into(pool, pool, compat_[v]);
          pool[w] &= ~(Word{1} << (v & 63));
        }
      }
    }
    return classes;
  }

  void expand(std::vector<Word> cand) {
    if (kernels::popcount(cand) == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    std::vector<Word> next(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w]) {
        if (current_.size() + colour_bound(cand) <= best_.size()) return;
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
        cand[w] &= ~(Word{1} << (v & 63));
        kernels::and_into(next, cand, compat_[v]);
        current_.push_back(static_cast<int>(v));
        expand(next);
        current_.pop_back();
      }
    }
    if (current_.size() > best_.size()) best_ = current_;
  }

  std::vector<std::vector<Word>> compat_;
  std::size_t count_;
  std::size_t words_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// Largest independent subfamily of `pool`. Members whose interior contains another member's
// interior are dropped first: their conflicts are a superset.
std::vector<Separation> max_independent(const Graph& h, const std::vector<Separation>& pool) {
  std::vector<Separation> kept;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pool.size() && !dominated; ++j) {
      if (i == j || !pool[j].s.is_subset_of(pool[i].s)) continue;
      dominated = pool[j].s != pool[i].s || j < i;
    }
    if (!dominated) kept.push_back(pool[i]);
  }
  const std::size_t count = kept.size();
  const std::size_t words = (count + 63) / 64;
  std::vector<std::vector<Word>> compat(count, std::vector<Word>(words, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (are_independent(h, kept[i], kept[j])) {
        compat[i][j >> 6] |= Word{1} << (j & 63);
        compat[j][i >> 6] |= Word{1} << (i & 63);
      }
    }
  }
  std::vector<Separation> out;
  for (int index : MaxCompatibleSet(std::move(compat), count).solve()) {
    out.push_back(kept[static_cast<std::size_t>(index)]);
  }
  return out;
}

std::vector<Separation> compatible_with(const Graph& h, const std::vector<Separation>& pool,
                                        const Separation& sep) {
  std::vector<Separation> out;
  for (const Separation& other : pool) {
    if (are_independent(h, sep, other)) out.push_back(other);
  }
  return out;
}

// Flaps whose S is any union of components of H - X.
std::vector<Separation> union_flaps(const Graph& h) {
  std::vector<Separation> out;
  for (const VertexSet& x : cut_sets(h)) {
    const auto comps = components_avoiding(h, x);
    if (comps.size() < 2) continue;
    if (comps.size() > 20) throw CapExceeded("component cap", "more than 20 components after removing a cut set");
    const std::uint32_t full = (std::uint32_t{1} << comps.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<Vertex> s;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (mask >> c & 1U) s.insert(s.end(), comps[c].begin(), comps[c].end());
      }
      Separation sep{x, VertexSet(std::move(s))};
      if (is_planar(a_plus(h, sep))) out.push_back(std::move(sep));
    }
  }
  return out;
}

// The first union flap strictly containing A_a that starts a family of size k.
const Separation* larger_first_member(const Graph& h, const std::vector<Separation>& unions,
                                      const std::vector<Separation>& singles, const Separation& a,
                                      int k) {
  for (const Separation& c : unions) {
    if (!strictly_inside(h, a, c)) continue;
    if (1 + static_cast<int>(max_independent(h, compatible_with(h, singles, c)).size()) >= k) return &c;
  }
  return nullptr;
}

void check_cap(const Graph& h, int size_cap) {
  if (h.order() == 0) throw DomainError("the null graph has no flap-number");
  if (h.order() > size_cap) {
    throw CapExceeded("flap size cap", std::to_string(h.order()) + " vertices > " + std::to_string(size_cap));
  }
}

}  // namespace

std::string format_separation(const Separation& sep) {
  std::ostringstream out;
  auto list = [&](const VertexSet& s) {
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << ']';
  };
  out << "X=";
  list(sep.x);
  out << " S=";
  list(sep.s);
  return out.str();
}

void validate_separation(const Graph& h, const Separation& sep) {
  for (const VertexSet* set : {&sep.x, &sep.s}) {
    for (Vertex v : *set) {
      if (!h.contains(v)) throw DomainError("separation vertex " + std::to_string(v) + " out of range");
    }
  }
  if (sep.x.size() > 2) throw DomainError("separation cut set has more than two vertices");
  if (sep.s.empty()) throw DomainError("separation interior is empty");
  if (sep.x.intersects(sep.s)) throw DomainError("separation cut set meets its interior");
  if (sep.x.size() + sep.s.size() >= static_cast<std::size_t>(h.order())) {
    throw DomainError("separation leaves no vertex on the B side");
  }
  for (Vertex v : sep.s) {
    for (Vertex w : h.neighbors(v)) {
      if (!sep.s.contains(w) && !sep.x.contains(w)) {
        throw DomainError("edge " + std::to_string(v) + "-" + std::to_string(w) + " leaves the separation interior");
      }
    }
  }
}

Graph a_plus(const Graph& h, const Separation& sep) {
  const VertexSet side = set_union(sep.x, sep.s);
  std::vector<Vertex> local;
  for (Vertex v : sep.x) {
    local.push_back(static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), v) - side.begin()));
  }
  return add_clique(induced_subgraph(h, side), VertexSet(std::move(local)));
}

std::vector<Separation> enumerate_separations(const Graph& h) {
  std::vector<Separation> out;
  if (h.order() < 2) return out;
  for (const VertexSet& x : cut_sets(h)) {
    const auto comps = components_avoiding(h, x);
    if (comps.size() < 2) continue;
    for (const VertexSet& c : comps) out.push_back({x, c});
  }
  return out;
}

std::vector<Separation> enumerate_candidate_flaps(const Graph& h) {
  std::vector<Separation> out;
  for (Separation& sep : enumerate_separations(h)) {
    if (is_planar(a_plus(h, sep))) out.push_back(std::move(sep));
  }
  return out;
}

bool is_flap(const Graph& h, const Separation& sep) {
  validate_separation(h, sep);
  return is_planar(a_plus(h, sep));
}

bool are_independent(const Graph& h, const Separation& a, const Separation& b) {
  return !a.s.intersects(b.s) && !touches(h, a.s, b.s);
}

FlapFamily max_flap_family(const Graph& h, int size_cap) {
  check_cap(h, size_cap);
  const auto candidates = enumerate_candidate_flaps(h);
  if (candidates.empty()) return {is_planar(h) ? 1 : 0, {}};
  auto family = max_independent(h, candidates);
  return {static_cast<int>(family.size()), std::move(family)};
}

int flap_number(const Graph& h, int size_cap) { return max_flap_family(h, size_cap).number; }

bool is_strongly_non_planar(const Graph& h) {
  // A flap on a union of components restricts to a flap on each component,
  // so single-component candidates cover both orientations.
  return !is_planar(h) && enumerate_candidate_flaps(h).empty();
}

TreeBeta tree_beta(const Graph& t) {
  if (!is_tree(t)) throw DomainError("input is not a tree");
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<char> in_forest(n);
  for (Vertex v = 0; v < t.order(); ++v) in_forest[static_cast<std::size_t>(v)] = t.degree(v) <= 2;

  std::vector<int> take(n, 0), skip(n, 0), parent(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> roots;
  std::vector<Vertex> order;
  for (Vertex root = 0; root < t.order(); ++root) {
    if (!in_forest[static_cast<std::size_t>(root)] || visited[static_cast<std::size_t>(root)]) continue;
    roots.push_back(root);
    std::vector<Vertex> stack{root};
    visited[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex w : t.neighbors(v)) {
        if (in_forest[static_cast<std::size_t>(w)] && !visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = v;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    take[v] += 1;
    if (parent[v] >= 0) {
      const auto p = static_cast<std::size_t>(parent[v]);
      take[p] += skip[v];
      skip[p] += std::max(take[v], skip[v]);
    }
  }
  std::vector<char> chosen(n, 0);
  std::vector<Vertex> stable;
  int beta = 0;
  for (Vertex root : roots) beta += std::max(take[static_cast<std::size_t>(root)], skip[static_cast<std::size_t>(root)]);
  for (Vertex v : order) {
    const auto i = static_cast<std::size_t>(v);
    const bool parent_chosen = parent[i] >= 0 && chosen[static_cast<std::size_t>(parent[i])];
    if (!parent_chosen && take[i] >= skip[i]) {
      chosen[i] = 1;
      stable.push_back(v);
    }
  }
  return {beta, VertexSet(std::move(stable))};
}

std::vector<Separation> maximal_first_family(const Graph& h, int size_cap) {
  check_cap(h, size_cap);
  const auto singles = enumerate_candidate_flaps(h);
  if (singles.empty()) return {};
  const auto best = max_independent(h, singles);
  const int k = static_cast<int>(best.size());
  const auto unions = union_flaps(h);
  Separation first = best.front();
  while (const Separation* larger = larger_first_member(h, unions, singles, first, k)) first = *larger;
  std::vector<Separation> family{first};
  for (Separation& rest : max_independent(h, compatible_with(h, singles, first))) family.push_back(std::move(rest));
  return family;
}

Graph flap_reduction(const Graph& h, const std::vector<Separation>& family, int size_cap) {
  check_cap(h, size_cap);
  if (family.empty()) throw DomainError("flap family is empty");
  for (const Separation& sep : family) {
    if (!is_flap(h, sep)) throw DomainError(format_separation(sep) + " is not a flap");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!are_independent(h, family[i], family[j])) {
        throw DomainError("flaps " + format_separation(family[i]) + " and " + format_separation(family[j]) +
                          " are not independent");
      }
    }
  }
  const int k = flap_number(h, size_cap);
  if (static_cast<int>(family.size()) != k) {
    throw DomainError("family has " + std::to_string(family.size()) + " flaps but the flap-number is " +
                      std::to_string(k));
  }
  const Separation& first = family.front();
  if (larger_first_member(h, union_flaps(h), enumerate_candidate_flaps(h), first, k) != nullptr) {
    throw DomainError("first flap " + format_separation(first) + " is not maximal");
  }
  const VertexSet rest = complement(h, first.s);
  std::vector<Vertex> local;
  for (Vertex v : first.x) {
    local.push_back(static_cast<Vertex>(std::lower_bound(rest.begin(), rest.end(), v) - rest.begin()));
  }
  return add_clique(induced_subgraph(h, rest), VertexSet(std::move(local)));
}

}  // namespace subdens
