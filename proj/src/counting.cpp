#include "subdens/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

#include "subdens/errors.hpp"
#include "subdens/kernels.hpp"

namespace subdens {

namespace {

using kernels::Word;
using Wide = unsigned __int128;

BigInt to_big(Wide value) {
  BigInt out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

struct Plan {
  std::vector<Vertex> order;                // non-isolated vertices of H
  std::vector<std::vector<int>> earlier;    // per depth: depths of placed neighbours
  int isolated = 0;
};

Plan make_plan(const Graph& h) {
  Plan plan;
  const auto n = static_cast<std::size_t>(h.order());
  std::vector<char> placed(n, 0);
  std::vector<int> placed_nbrs(n, 0);
  std::vector<int> depth_of(n, -1);
  int active = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) ++plan.isolated; else ++active;
  }
  for (int step = 0; step < active; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < h.order(); ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (placed[i] || h.degree(v) == 0) continue;
      if (best < 0) { best = v; continue; }
      const auto b = static_cast<std::size_t>(best);
      if (placed_nbrs[i] > placed_nbrs[b] || (placed_nbrs[i] == placed_nbrs[b] && h.degree(v) > h.degree(best))) {
        best = v;
      }
    }
    const auto b = static_cast<std::size_t>(best);
    placed[b] = 1;
    depth_of[b] = step;
    plan.order.push_back(best);
    std::vector<int> nbrs;
    for (Vertex w : h.neighbors(best)) {
      const auto wi = static_cast<std::size_t>(w);
      if (placed[wi] && w != best) nbrs.push_back(depth_of[wi]);
      ++placed_nbrs[wi];
    }
    plan.earlier.push_back(std::move(nbrs));
  }
  return plan;
}

class Engine {
 public:
  Engine(const Plan& plan, const Graph& g, bool injective, std::uint64_t cap, std::atomic<std::uint64_t>& work)
      : plan_(plan), g_(g), injective_(injective), cap_(cap), batch_(std::clamp<std::uint64_t>(cap / 64, 1, 4096)),
        work_(work), words_(g.words()),
        image_(plan.order.size(), -1), used_(words_, 0), scratch_(plan.order.size(), std::vector<Word>(words_)) {
    all_.assign(words_, 0);
    for (Vertex v = 0; v < g.order(); ++v) all_[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63);
  }

  // Maps of H whose first vertex goes to `root`.
  Wide count_from(Vertex root) {
    place(0, root);
    const Wide out = plan_.order.size() == 1 ? 1 : descend(1);
    unplace(0, root);
    return out;
  }

  std::uint64_t local_work() const { return local_; }

 private:
  void place(std::size_t depth, Vertex v) {
    image_[depth] = v;
    if (injective_) used_[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63);
  }
  void unplace(std::size_t depth, Vertex v) {
    image_[depth] = -1;
    if (injective_) used_[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63));
  }

  void tick() {
    if (++local_ % batch_ == 0) {
      if (work_.fetch_add(batch_) + batch_ > cap_) throw Stop{};
    }
  }

  // Candidate images for `depth`, left in scratch_[depth].
  void candidates(std::size_t depth) {
    std::vector<Word>& out = scratch_[depth];
    const auto& nbrs = plan_.earlier[depth];
    if (nbrs.empty()) {
      out = all_;
    } else {
      const auto first = g_.row(image_[static_cast<std::size_t>(nbrs[0])]);
      std::copy(first.begin(), first.end(), out.begin());
      for (std::size_t k = 1; k < nbrs.size(); ++k) {
        kernels::and_into(out, out, g_.row(image_[static_cast<std::size_t>(nbrs[k])]));
      }
    }
    if (injective_) kernels::andnot_into(out, out, used_);
  }

  Wide descend(std::size_t depth) {
    const auto& nbrs = plan_.earlier[depth];
    const bool last = depth + 1 == plan_.order.size();
    if (last && nbrs.size() == 1) {
      tick();
      const auto row = g_.row(image_[static_cast<std::size_t>(nbrs[0])]);
      return injective_ ? kernels::popcount(row) - kernels::and_popcount(row, used_) : kernels::popcount(row);
    }
    if (last && nbrs.size() == 2 && !injective_) {
      tick();
      return kernels::and_popcount(g_.row(image_[static_cast<std::size_t>(nbrs[0])]),
                                   g_.row(image_[static_cast<std::size_t>(nbrs[1])]));
    }
    if (last && nbrs.size() == 2) {
      tick();
      return kernels::and_andnot_popcount(g_.row(image_[static_cast<std::size_t>(nbrs[0])]),
                                          g_.row(image_[static_cast<std::size_t>(nbrs[1])]), used_);
    }
    candidates(depth);
    if (last) {
      tick();
      return kernels::popcount(scratch_[depth]);
    }
    Wide total = 0;
    const std::vector<Word>& cand = scratch_[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = cand[w];
      while (bits) {
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        tick();
        place(depth, v);
        total += descend(depth + 1);
        unplace(depth, v);
      }
    }
    return total;
  }

 public:
  struct Stop {};

 private:
  const Plan& plan_;
  const Graph& g_;
  bool injective_;
  std::uint64_t cap_;
  std::uint64_t batch_;  // nodes between updates of the shared counter
  std::atomic<std::uint64_t>& work_;
  std::size_t words_;
  std::vector<Vertex> image_;
  std::vector<Word> used_;
  std::vector<Word> all_;
  std::vector<std::vector<Word>> scratch_;
  std::uint64_t local_ = 0;
};

BigInt count_maps(const Graph& h, const Graph& g, bool injective, const CountOptions& options) {
  const Plan plan = make_plan(h);
  BigInt core = 1;
  if (!plan.order.empty()) {
    const int threads = std::max(1, std::min(options.threads, std::max(1, g.order())));
    std::atomic<std::uint64_t> work{0};
    std::vector<Wide> partial(static_cast<std::size_t>(threads), 0);
    std::vector<char> stopped(static_cast<std::size_t>(threads), 0);
    auto worker = [&](int id) {
      Engine engine(plan, g, injective, options.work_cap, work);
      try {
        for (Vertex root = id; root < g.order(); root += threads) {
          partial[static_cast<std::size_t>(id)] += engine.count_from(root);
        }
      } catch (const Engine::Stop&) {
        stopped[static_cast<std::size_t>(id)] = 1;
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
      for (auto& t : pool) t.join();
    }
    Wide sum = 0;
    for (Wide p : partial) sum += p;
    if (std::any_of(stopped.begin(), stopped.end(), [](char s) { return s != 0; })) {
      std::ostringstream msg;
      msg << "work cap " << options.work_cap << " reached after " << work.load() << " nodes; partial count "
          << to_big(sum);
      throw CapExceeded("work cap", msg.str());
    }
    core = to_big(sum);
  }
  const int iso = plan.isolated;
  if (!injective) {
    BigInt factor = 1;
    for (int i = 0; i < iso; ++i) factor *= g.order();
    return core * factor;
  }
  long long free_vertices = static_cast<long long>(g.order()) - static_cast<long long>(plan.order.size());
  for (int i = 0; i < iso; ++i) {
    if (free_vertices <= 0) return 0;
    core *= free_vertices--;
  }
  return core;
}

// Rows restricted to larger neighbours: each clique is found once, from its
// smallest vertex.
std::vector<Word> forward_rows(const Graph& g) {
  const std::size_t words = g.words();
  std::vector<Word> out(words * static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    out[static_cast<std::size_t>(e.u) * words + (static_cast<std::size_t>(e.v) >> 6)] |= Word{1} << (e.v & 63);
  }
  return out;
}

void grow_cliques(const std::vector<Word>& fwd, std::size_t words, const std::vector<Word>& cand, std::size_t size,
                  std::vector<Wide>& counts) {
  std::vector<Word> next(words);
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = cand[w];
    while (bits) {
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::span<const Word> row(fwd.data() + v * words, words);
      kernels::and_into(next, cand, row);
      const std::uint64_t extensions = kernels::popcount(next);
      if (extensions == 0) continue;
      if (counts.size() <= size + 2) counts.resize(size + 3, 0);
      counts[size + 2] += extensions;
      grow_cliques(fwd, words, next, size + 1, counts);
    }
  }
}

// Cliques with `more` further vertices drawn from cand.
Wide extend_cliques(const std::vector<Word>& fwd, std::size_t words, const std::vector<Word>& cand, int more) {
  if (more == 1) return kernels::popcount(cand);
  Wide total = 0;
  std::vector<Word> next(words);
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = cand[w];
    while (bits) {
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      kernels::and_into(next, cand, std::span<const Word>(fwd.data() + v * words, words));
      if (kernels::popcount(next) >= static_cast<std::uint64_t>(more - 1)) total += extend_cliques(fwd, words, next, more - 1);
    }
  }
  return total;
}

}  // namespace

BigInt count_hom(const Graph& h, const Graph& g, const CountOptions& options) {
  return count_maps(h, g, false, options);
}

BigInt count_injective_hom(const Graph& h, const Graph& g, const CountOptions& options) {
  if (h.order() > g.order()) return 0;
  return count_maps(h, g, true, options);
}

BigInt count_copies(const Graph& h, const Graph& g, const CountOptions& options) {
  const BigInt injective = count_injective_hom(h, g, options);
  if (injective == 0) return 0;
  return injective / count_isomorphisms(h, h);
}

std::vector<BigInt> clique_profile(const Graph& g) {
  std::vector<Wide> counts{1};
  if (g.order() > 0) counts.push_back(static_cast<Wide>(g.order()));
  if (g.size() > 0) {
    counts.push_back(g.size());
    const std::size_t words = g.words();
    const auto fwd = forward_rows(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::vector<Word> row(fwd.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * words),
                                  fwd.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(v) + 1) * words));
      // Cliques of size >= 3 through v and a larger neighbour.
      std::vector<Word> next(words);
      for (std::size_t w = 0; w < words; ++w) {
        Word bits = row[w];
        while (bits) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          kernels::and_into(next, row, std::span<const Word>(fwd.data() + u * words, words));
          const std::uint64_t c = kernels::popcount(next);
          if (c == 0) continue;
          if (counts.size() < 4) counts.resize(4, 0);
          counts[3] += c;
          grow_cliques(fwd, words, next, 2, counts);
        }
      }
    }
  }
  std::vector<BigInt> out;
  for (Wide c : counts) out.push_back(to_big(c));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

BigInt count_cliques(const Graph& g, int s) {
  if (s < 0) throw DomainError("clique size must be non-negative");
  if (s == 0) return 1;
  if (s == 1) return g.order();
  if (s == 2) return g.size();
  const std::size_t words = g.words();
  const auto fwd = forward_rows(g);
  Wide total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::vector<Word> row(fwd.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * words),
                                fwd.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(v) + 1) * words));
    if (kernels::popcount(row) >= static_cast<std::uint64_t>(s - 1)) total += extend_cliques(fwd, words, row, s - 1);
  }
  return to_big(total);
}

BigInt total_cliques(const Graph& g) {
  BigInt sum = 0;
  for (const BigInt& c : clique_profile(g)) sum += c;
  return sum;
}

InequalityCheck check_goodman(const Graph& g) {
  const BigInt h1 = count_hom(complete_graph(1), g);
  const BigInt h2 = count_hom(complete_graph(2), g);
  const BigInt h3 = count_hom(complete_graph(3), g);
  InequalityCheck out{h1 * h3, h2 * (2 * h2 - h1 * h1)};
  out.holds = out.lhs >= out.rhs;
  return out;
}

GenusTriangleCheck check_genus_triangle_bound(const Graph& g, int genus) {
  if (genus < 0) throw DomainError("Euler genus must be non-negative");
  const BigInt n = g.order();
  const BigInt m = g.size();
  const BigInt c = connected_components(g).size();
  GenusTriangleCheck out;
  out.triangles.lhs = count_cliques(g, 3);
  out.triangles.rhs = 2 * m - 4 * n + 4 + 4 * c - 4 * BigInt(genus);
  out.triangles.holds = out.triangles.lhs >= out.triangles.rhs;
  out.homs.lhs = count_hom(complete_graph(3), g);
  out.homs.rhs = 6 * out.triangles.rhs;
  out.homs.holds = out.homs.lhs >= out.homs.rhs;
  return out;
}

}  // namespace subdens
