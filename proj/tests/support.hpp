#pragma once

// Random instance generators and brute-force reference computations shared
// by the unit and acceptance suites. Nothing here calls the library's
// solvers or enumerators.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ghdist/ghdist.hpp"

namespace ghdist::testing {

using Rng = std::mt19937_64;

inline SimpleGraph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, edges);
}

/// Random graph on n >= 3 vertices that is neither complete nor edgeless.
inline SimpleGraph random_proper_graph(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (;;) {
    auto g = random_graph(rng, n, density(rng));
    if (!g.is_complete() && !g.is_edgeless()) return g;
  }
}

/// Random pair a < b <= 2a of small rationals.
inline std::pair<Rational, Rational> random_ab(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  const Rational a(num(rng), den(rng));
  const int q = den(rng);
  std::uniform_int_distribution<int> t(1, q);
  const Rational b = a + a * Rational(t(rng), q);
  return {a, b};
}

struct RandomTwoDistance {
  SimpleGraph graph;
  Rational a, b;
  FiniteMetricSpace space;
  TwoDistanceSpace tds;
};

inline RandomTwoDistance random_two_distance(Rng& rng, std::size_t n_min, std::size_t n_max) {
  std::uniform_int_distribution<std::size_t> size(n_min, n_max);
  auto g = random_proper_graph(rng, size(rng));
  auto [a, b] = random_ab(rng);
  auto space = graph_metric(g, a, b);
  auto tds = as_two_distance(space);
  return {std::move(g), a, b, std::move(space), std::move(tds)};
}

/// Every set partition of {0..n-1}, built by choosing the block of the
/// smallest remaining element among subsets of the rest.
inline std::vector<std::vector<std::vector<std::size_t>>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> rest) {
    if (rest.empty()) {
      out.push_back(cur);
      return;
    }
    const std::size_t head = rest.front();
    const std::size_t tail = rest.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tail); ++mask) {
      std::vector<std::size_t> block{head}, remaining;
      for (std::size_t i = 0; i < tail; ++i)
        ((mask >> i) & 1 ? block : remaining).push_back(rest[i + 1]);
      cur.push_back(block);
      rec(remaining);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  rec(all);
  return out;
}

/// S(n, m) by the recurrence S(n, m) = m S(n-1, m) + S(n-1, m-1).
inline std::uint64_t stirling2(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  return m <= n ? s[n][m] : 0;
}

/// Plain backtracking k-colourability in vertex-index order.
inline bool colorable(const SimpleGraph& g, std::size_t k) {
  std::vector<std::size_t> color(g.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v == g.size()) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v) && color[u] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

inline std::size_t brute_chromatic(const SimpleGraph& g) {
  std::size_t k = 1;
  while (!colorable(g, k)) ++k;
  return k;
}

/// Smallest number of cliques partitioning V(g), by scanning every set
/// partition. Only for small n.
inline std::size_t brute_clique_cover(const SimpleGraph& g) {
  std::size_t best = g.size();
  for (const auto& p : all_set_partitions(g.size())) {
    bool ok = true;
    for (const auto& b : p)
      for (std::size_t i = 0; i < b.size() && ok; ++i)
        for (std::size_t j = i + 1; j < b.size() && ok; ++j)
          if (!g.adjacent(b[i], b[j])) ok = false;
    if (ok) best = std::min(best, p.size());
  }
  return best;
}

/// 2 d_GH(lambda Simplex_m, X) straight from the definitions over all set
/// partitions: min over (alpha, diam) pairs of max{d, lambda - alpha},
/// combined with diam X - lambda. Uses Rational only.
inline Rational brute_gh(const FiniteMetricSpace& space, std::size_t m, const Rational& lambda) {
  Rational diam;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) diam = max(diam, space.distance(i, j));
  if (m > space.size()) return max(diam - lambda, lambda);
  std::optional<Rational> best;
  for (const auto& p : all_set_partitions(space.size())) {
    if (p.size() != m) continue;
    Rational d;
    std::optional<Rational> alpha;
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t t = 0; t < p.size(); ++t)
        for (auto x : p[s])
          for (auto y : p[t]) {
            if (s == t)
              d = max(d, space.distance(x, y));
            else if (!alpha || space.distance(x, y) < *alpha)
              alpha = space.distance(x, y);
          }
    Rational h = alpha ? max(d, lambda - *alpha) : d;
    if (!best || h < *best) best = h;
  }
  return max(diam - lambda, *best);
}

/// Random metric on n points with distances in [1, 2] (any such matrix
/// satisfies the triangle inequality). Few distinct values when `levels` is
/// small, to exercise ties.
inline FiniteMetricSpace random_metric(Rng& rng, std::size_t n, int levels = 6) {
  std::uniform_int_distribution<int> pick(0, levels);
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = Rational(levels + pick(rng), levels);
  return validate_metric(m);
}


}  // namespace ghdist::testing
