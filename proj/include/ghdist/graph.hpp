#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/error.hpp"

namespace ghdist {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices 0..n-1, stored as a dense adjacency
/// matrix. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Duplicate edges (in either orientation) collapse; loops and
  /// out-of-range endpoints throw.
  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(Errc::vertex_out_of_range,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                        std::to_string(n == 0 ? 0 : n - 1),
                    {u, v});
      if (u == v) throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u), {u});
      g.set(u, v);
    }
    return g;
  }

  static SimpleGraph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds the graph whose edges are the pairs u<v with adjacent(u, v).
  template <typename Pred>
  static SimpleGraph from_predicate(std::size_t n, Pred&& adjacent) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (adjacent(u, v)) g.set(u, v);
    return g;
  }

  std::size_t size() const noexcept { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
    return d;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  std::size_t edge_count() const { return edge_count_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return edge_count_ == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }
  bool is_edgeless() const { return edge_count_ == 0; }

  /// Upper-triangle adjacency bits as a string; a cheap exact key for caches.
  std::string key() const {
    std::string k = std::to_string(n_) + ":";
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) k.push_back(adjacent(u, v) ? '1' : '0');
    return k;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  void set(std::size_t u, std::size_t v) {
    if (adj_[u * n_ + v]) return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    ++edge_count_;
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;
};

inline SimpleGraph complement(const SimpleGraph& g) {
  return SimpleGraph::from_predicate(g.size(), [&](std::size_t u, std::size_t v) { return !g.adjacent(u, v); });
}

struct Components {
  std::size_t count = 0;
  /// Component id per vertex; ids are numbered by smallest member.
  std::vector<std::size_t> label;
};

inline Components connected_components(const SimpleGraph& g) {
  const std::size_t n = g.size();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  Components c{0, std::vector<std::size_t>(n, unset)};
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (c.label[s] != unset) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (g.adjacent(v, u) && c.label[u] == unset) {
          c.label[u] = c.count;
          stack.push_back(u);
        }
      }
    }
    ++c.count;
  }
  return c;
}

/// True iff every pair of vertices in `s` is adjacent. Singletons are cliques.
inline bool is_clique(const SimpleGraph& g, std::span<const std::size_t> s) {
  if (s.empty()) throw Error(Errc::empty_subset, "clique test on an empty vertex set");
  for (auto v : s)
    if (v >= g.size()) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range", {v});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
  return true;
}

/// A disjoint union of cliques: every component induces a complete subgraph.
inline bool is_cluster_graph(const SimpleGraph& g) {
  const auto comp = connected_components(g);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (comp.label[u] == comp.label[v] && !g.adjacent(u, v)) return false;
  return true;
}

struct Coloring {
  std::size_t colors = 0;
  std::vector<std::size_t> color;
};

/// Vertex-disjoint cliques covering every vertex. Blocks are sorted and
/// ordered by smallest member.
struct CliqueCover {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t size() const { return blocks.size(); }
};

inline bool is_proper_coloring(const SimpleGraph& g, const Coloring& c) {
  if (c.color.size() != g.size()) return false;
  for (auto col : c.color)
    if (col >= c.colors) return false;
  for (const auto& [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

inline bool is_clique_cover(const SimpleGraph& g, const CliqueCover& cover) {
  std::vector<int> seen(g.size(), 0);
  for (const auto& b : cover.blocks) {
    if (b.empty() || !is_clique(g, b)) return false;
    for (auto v : b)
      if (seen[v]++) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

struct SolverOptions {
  /// Abort with SearchLimitExceeded after this many search nodes.
  std::optional<std::uint64_t> node_limit;
};

namespace detail {

inline void normalize_coloring(Coloring& c) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel(c.color.size() + 1, unset);
  std::size_t next = 0;
  for (auto& col : c.color) {
    if (relabel[col] == unset) relabel[col] = next++;
    col = relabel[col];
  }
  c.colors = next;
}

inline std::vector<std::size_t> greedy_max_clique(const SimpleGraph& g) {
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<std::size_t> clique{s};
    std::vector<std::size_t> cand = g.neighbors(s);
    while (!cand.empty()) {
      // pick the candidate with most neighbours among the remaining candidates
      std::size_t pick = cand.front(), pick_deg = 0;
      bool first = true;
      for (auto v : cand) {
        std::size_t d = 0;
        for (auto u : cand) d += g.adjacent(u, v);
        if (first || d > pick_deg) {
          pick = v;
          pick_deg = d;
          first = false;
        }
      }
      clique.push_back(pick);
      std::erase_if(cand, [&](std::size_t u) { return u == pick || !g.adjacent(u, pick); });
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

/// DSATUR-ordered branch and bound. Vertex choice: max saturation, then max
/// degree into the uncoloured part, then lowest index.
class DsaturSearch {
 public:
  DsaturSearch(const SimpleGraph& g, const SolverOptions& opts)
      : g_(g),
        n_(g.size()),
        limit_(opts.node_limit),
        color_(n_, -1),
        count_(n_ * (n_ + 1), 0),
        saturation_(n_, 0),
        free_degree_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) free_degree_[v] = static_cast<int>(g.degree(v));
  }

  Coloring solve() {
    if (n_ == 0) return {};
    Coloring greedy = greedy_dsatur();
    best_ = greedy;
    const auto clique = greedy_max_clique(g_);
    lower_bound_ = clique.size();
    if (best_.colors > lower_bound_) {
      int used = 0;
      for (auto v : clique) assign(v, used++);
      search(clique.size(), clique.size());
    }
    normalize_coloring(best_);
    return best_;
  }

 private:
  std::size_t select() const {
    std::size_t pick = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && free_degree_[v] > free_degree_[pick]))
        pick = v;
    }
    return pick;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::size_t u = 0; u < n_; ++u) {
      if (!g_.adjacent(u, v)) continue;
      if (count_[u * (n_ + 1) + c]++ == 0) ++saturation_[u];
      --free_degree_[u];
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    for (std::size_t u = 0; u < n_; ++u) {
      if (!g_.adjacent(u, v)) continue;
      if (--count_[u * (n_ + 1) + c] == 0) --saturation_[u];
      ++free_degree_[u];
    }
  }

  bool available(std::size_t v, int c) const { return count_[v * (n_ + 1) + c] == 0; }

  Coloring greedy_dsatur() {
    int used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      auto v = select();
      int c = 0;
      while (!available(v, c)) ++c;
      used = std::max(used, c + 1);
      assign(v, c);
    }
    Coloring out{static_cast<std::size_t>(used), {}};
    for (auto c : color_) out.color.push_back(static_cast<std::size_t>(c));
    for (std::size_t v = 0; v < n_; ++v) unassign(v);
    return out;
  }

  void search(std::size_t colored, std::size_t used) {
    if (limit_ && ++nodes_ > *limit_)
      throw Error(Errc::search_limit_exceeded, "coloring search exceeded node limit of " + std::to_string(*limit_));
    if (used >= best_.colors) return;
    if (colored == n_) {
      best_.colors = used;
      best_.color.assign(color_.begin(), color_.end());
      return;
    }
    const auto v = select();
    for (std::size_t c = 0; c < used; ++c) {
      if (!available(v, static_cast<int>(c))) continue;
      assign(v, static_cast<int>(c));
      search(colored + 1, used);
      unassign(v);
      if (best_.colors == lower_bound_) return;
    }
    if (used + 1 < best_.colors) {
      assign(v, static_cast<int>(used));
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> count_;  // count_[v*(n+1)+c]: neighbours of v coloured c
  std::vector<int> saturation_;
  std::vector<int> free_degree_;
  Coloring best_;
  std::size_t lower_bound_ = 1;
};

inline CliqueCover classes_to_cover(const Coloring& c) {
  CliqueCover cover;
  cover.blocks.resize(c.colors);
  for (std::size_t v = 0; v < c.color.size(); ++v) cover.blocks[c.color[v]].push_back(v);
  std::sort(cover.blocks.begin(), cover.blocks.end());
  return cover;
}

}  // namespace detail

/// Exact chromatic number with a proper colouring using exactly that many
/// colours. Colours are numbered in order of first appearance by vertex index.
inline Coloring chromatic_number(const SimpleGraph& g, const SolverOptions& opts = {}) {
  return detail::DsaturSearch(g, opts).solve();
}

/// Minimum clique partition, computed as the colour classes of an optimal
/// colouring of the complement.
inline CliqueCover clique_cover_number(const SimpleGraph& g, const SolverOptions& opts = {}) {
  return detail::classes_to_cover(chromatic_number(complement(g), opts));
}

/// Minimum clique partition by direct branch and bound over clique
/// partitions of g itself. Shares no code with the colouring route.
inline CliqueCover clique_cover_number_direct(const SimpleGraph& g, const SolverOptions& opts = {}) {
  const std::size_t n = g.size();
  if (n == 0) return {};

  // Greedy start: place each vertex into the first block it fits.
  std::vector<std::vector<std::size_t>> best;
  for (std::size_t v = 0; v < n; ++v) {
    auto it = std::find_if(best.begin(), best.end(), [&](const auto& b) {
      return std::all_of(b.begin(), b.end(), [&](std::size_t u) { return g.adjacent(u, v); });
    });
    if (it == best.end())
      best.push_back({v});
    else
      it->push_back(v);
  }

  // Pairwise non-adjacent vertices need distinct cliques.
  std::size_t lower = 0;
  {
    std::vector<std::size_t> indep;
    for (std::size_t v = 0; v < n; ++v)
      if (std::none_of(indep.begin(), indep.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
        indep.push_back(v);
    lower = indep.size();
  }

  std::vector<std::vector<std::size_t>> blocks;
  std::uint64_t nodes = 0;
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (opts.node_limit && ++nodes > *opts.node_limit)
      throw Error(Errc::search_limit_exceeded,
                  "clique partition search exceeded node limit of " + std::to_string(*opts.node_limit));
    if (best.size() == lower || blocks.size() >= best.size()) return;
    if (v == n) {
      best = blocks;
      return;
    }
    // Indices, not references: deeper levels may grow `blocks`.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (!std::all_of(blocks[i].begin(), blocks[i].end(), [&](std::size_t u) { return g.adjacent(u, v); })) continue;
      blocks[i].push_back(v);
      self(self, v + 1);
      blocks[i].pop_back();
    }
    if (blocks.size() + 1 < best.size()) {
      blocks.push_back({v});
      self(self, v + 1);
      blocks.pop_back();
    }
  };
  if (best.size() > lower) recurse(recurse, 0);

  CliqueCover cover{std::move(best)};
  for (auto& b : cover.blocks) std::sort(b.begin(), b.end());
  std::sort(cover.blocks.begin(), cover.blocks.end());
  return cover;
}

/// Named graph families used by tests, samples and the CLI.
namespace families {

inline SimpleGraph edgeless(std::size_t n) {
  return SimpleGraph::from_predicate(n, [](std::size_t, std::size_t) { return false; });
}

inline SimpleGraph complete(std::size_t n) {
  return SimpleGraph::from_predicate(n, [](std::size_t, std::size_t) { return true; });
}

inline SimpleGraph cycle(std::size_t n) {
  return SimpleGraph::from_predicate(n, [n](std::size_t u, std::size_t v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

inline SimpleGraph path(std::size_t n) {
  return SimpleGraph::from_predicate(n, [](std::size_t u, std::size_t v) { return v == u + 1; });
}

inline SimpleGraph complete_bipartite(std::size_t p, std::size_t q) {
  return SimpleGraph::from_predicate(p + q, [p](std::size_t u, std::size_t v) { return (u < p) != (v < p); });
}

inline SimpleGraph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return SimpleGraph::from_edges(10, e);
}

}  // namespace families

}  // namespace ghdist
