#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ghdist/error.hpp"
#include "ghdist/graph.hpp"
#include "ghdist/metric.hpp"
#include "ghdist/oracle.hpp"
#include "ghdist/partition.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

/// Which branch of the simplex / 2-distance distance formula applies, in
/// terms of m (simplex size), n (space size), k (components of the
/// minimal-distance graph) and theta (its clique covering number).
enum class CaseTag {
  m_eq_1,                // m = 1
  m_lt_k,                // 1 < m < k = theta
  m_eq_k_eq_theta,       // m = k = theta
  k_eq_theta_lt_m_lt_n,  // k = theta < m < n
  m_le_k_lt_theta,       // 1 < m <= k < theta
  k_lt_m_lt_theta,       // k < m < theta
  theta_le_m_lt_n,       // k < theta <= m < n
  m_eq_n,                // m = n
  m_gt_n,                // m > n
};

inline constexpr CaseTag all_case_tags[] = {
    CaseTag::m_eq_1,          CaseTag::m_lt_k,          CaseTag::m_eq_k_eq_theta,
    CaseTag::k_eq_theta_lt_m_lt_n, CaseTag::m_le_k_lt_theta, CaseTag::k_lt_m_lt_theta,
    CaseTag::theta_le_m_lt_n, CaseTag::m_eq_n,          CaseTag::m_gt_n,
};

inline std::string_view to_string(CaseTag t) {
  switch (t) {
    case CaseTag::m_eq_1: return "M_EQ_1";
    case CaseTag::m_lt_k: return "M_LT_K";
    case CaseTag::m_eq_k_eq_theta: return "M_EQ_K_EQ_THETA";
    case CaseTag::k_eq_theta_lt_m_lt_n: return "K_EQ_THETA_LT_M_LT_N";
    case CaseTag::m_le_k_lt_theta: return "M_LE_K_LT_THETA";
    case CaseTag::k_lt_m_lt_theta: return "K_LT_M_LT_THETA";
    case CaseTag::theta_le_m_lt_n: return "THETA_LE_M_LT_N";
    case CaseTag::m_eq_n: return "M_EQ_N";
    case CaseTag::m_gt_n: return "M_GT_N";
  }
  return "UNKNOWN";
}

struct GHCase {
  CaseTag tag;
  std::size_t k = 0;
  std::size_t theta = 0;
  std::size_t n = 0;
  std::size_t m = 0;

  friend bool operator==(const GHCase&, const GHCase&) = default;
};

/// Requires 1 <= k <= theta <= n - 1 and m >= 1.
inline GHCase classify_case(std::size_t m, std::size_t n, std::size_t k, std::size_t theta) {
  if (m < 1) throw Error(Errc::invalid_m, "m must be at least 1", {m});
  if (k < 1 || k > theta || theta + 1 > n)
    throw Error(Errc::bad_parameters, "need 1 <= k <= theta <= n-1", {k, theta, n});
  GHCase c{CaseTag::m_eq_1, k, theta, n, m};
  if (m == 1)
    c.tag = CaseTag::m_eq_1;
  else if (m > n)
    c.tag = CaseTag::m_gt_n;
  else if (m == n)
    c.tag = CaseTag::m_eq_n;
  else if (k == theta)
    c.tag = m < k ? CaseTag::m_lt_k : m == k ? CaseTag::m_eq_k_eq_theta : CaseTag::k_eq_theta_lt_m_lt_n;
  else
    c.tag = m <= k ? CaseTag::m_le_k_lt_theta : m < theta ? CaseTag::k_lt_m_lt_theta : CaseTag::theta_le_m_lt_n;
  return c;
}

struct GraphInvariants {
  std::size_t components = 0;
  std::size_t clique_cover = 0;
};

/// k and theta of a graph, memoized process-wide. Concurrent readers share
/// the cache; racing writers compute the same values and the first insert
/// stays.
inline GraphInvariants graph_invariants(const SimpleGraph& g) {
  static std::shared_mutex mutex;
  static std::map<std::string, GraphInvariants> cache;
  const auto key = g.key();
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GraphInvariants inv{connected_components(g).count, clique_cover_number(g).size()};
  std::unique_lock lock(mutex);
  return cache.emplace(key, inv).first->second;
}

inline GHCase classify_case(const TwoDistanceSpace& tds, std::size_t m) {
  const auto inv = graph_invariants(min_distance_graph(tds));
  return classify_case(m, tds.size(), inv.components, inv.clique_cover);
}

struct GHValue {
  /// Twice the Gromov-Hausdorff distance.
  Rational value;
  GHCase gh_case;
};

inline GHValue gh_two_distance(const TwoDistanceSpace& tds, std::size_t m, const Rational& lambda) {
  if (lambda.sign() <= 0) throw Error(Errc::non_positive_lambda, "lambda must be positive, got " + lambda.str());
  const auto c = classify_case(tds, m);
  const Rational& a = tds.a();
  const Rational& b = tds.b();
  Rational v;
  switch (c.tag) {
    case CaseTag::m_eq_1: v = b; break;
    case CaseTag::m_lt_k:
    case CaseTag::m_le_k_lt_theta: v = max(b, lambda - b); break;
    case CaseTag::m_eq_k_eq_theta: v = max(max(b - lambda, a), lambda - b); break;
    case CaseTag::k_lt_m_lt_theta: v = max(b, lambda - a); break;
    case CaseTag::k_eq_theta_lt_m_lt_n:
    case CaseTag::theta_le_m_lt_n: v = max(max(b - lambda, a), lambda - a); break;
    case CaseTag::m_eq_n: v = max(b - lambda, lambda - a); break;
    case CaseTag::m_gt_n: v = max(b - lambda, lambda); break;
  }
  return {std::move(v), c};
}

/// slope * lambda + intercept on [from, to]; `to` absent means unbounded.
struct CurveSegment {
  Rational from;
  std::optional<Rational> to;
  int slope = 0;
  Rational intercept;

  Rational at(const Rational& lambda) const { return Rational(slope) * lambda + intercept; }
  friend bool operator==(const CurveSegment&, const CurveSegment&) = default;
};

/// Continuous piecewise-linear function on (0, inf).
struct PiecewiseLinearCurve {
  std::vector<CurveSegment> segments;

  Rational operator()(const Rational& lambda) const {
    for (const auto& s : segments)
      if (!s.to || lambda <= *s.to) return s.at(lambda);
    return segments.back().at(lambda);
  }
};

struct AffineTerm {
  int slope;
  Rational intercept;
};

/// The affine functions of lambda whose maximum is the case formula.
inline std::vector<AffineTerm> case_terms(CaseTag tag, const Rational& a, const Rational& b) {
  switch (tag) {
    case CaseTag::m_eq_1: return {{0, b}};
    case CaseTag::m_lt_k:
    case CaseTag::m_le_k_lt_theta: return {{0, b}, {1, -b}};
    case CaseTag::m_eq_k_eq_theta: return {{-1, b}, {0, a}, {1, -b}};
    case CaseTag::k_lt_m_lt_theta: return {{0, b}, {1, -a}};
    case CaseTag::k_eq_theta_lt_m_lt_n:
    case CaseTag::theta_le_m_lt_n: return {{-1, b}, {0, a}, {1, -a}};
    case CaseTag::m_eq_n: return {{-1, b}, {1, -a}};
    case CaseTag::m_gt_n: return {{-1, b}, {1, Rational{}}};
  }
  return {};
}

/// Upper envelope of affine functions over (0, inf) with exact breakpoints.
inline PiecewiseLinearCurve upper_envelope(const std::vector<AffineTerm>& terms) {
  if (terms.empty()) throw Error(Errc::empty_input, "upper envelope of no functions");
  // Just right of 0: largest intercept, then largest slope.
  std::size_t cur = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].intercept > terms[cur].intercept ||
        (terms[i].intercept == terms[cur].intercept && terms[i].slope > terms[cur].slope))
      cur = i;

  PiecewiseLinearCurve curve;
  Rational x;
  for (;;) {
    std::optional<std::size_t> next;
    Rational cross;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].slope <= terms[cur].slope) continue;
      Rational at = (terms[cur].intercept - terms[i].intercept) / Rational(terms[i].slope - terms[cur].slope);
      if (at < x) at = x;
      if (!next || at < cross || (at == cross && terms[i].slope > terms[*next].slope)) {
        next = i;
        cross = at;
      }
    }
    if (!next) {
      curve.segments.push_back({x, std::nullopt, terms[cur].slope, terms[cur].intercept});
      return curve;
    }
    if (cross > x) curve.segments.push_back({x, cross, terms[cur].slope, terms[cur].intercept});
    x = cross;
    cur = *next;
  }
}

/// lambda -> 2 d_GH(lambda Simplex_m, X) as exact segments.
inline PiecewiseLinearCurve gh_curve(const TwoDistanceSpace& tds, std::size_t m) {
  const auto c = classify_case(tds, m);
  return upper_envelope(case_terms(c.tag, tds.a(), tds.b()));
}

struct BorsukResult {
  bool feasible = false;
  /// Partition into m blocks of diameter below diam X, when feasible.
  std::optional<Partition> witness;
  /// Clique covering number of the minimal-distance graph (2-distance input).
  std::optional<std::size_t> theta;
  Rational lambda;
  /// 2 d_GH(lambda Simplex_m, X) at the lambda above.
  Rational gh_value;
};

/// First partition into m blocks (in enumeration order) whose blocks all
/// have diameter strictly below diam X.
inline std::optional<Partition> borsuk_search(const FiniteMetricSpace& space, std::size_t m) {
  detail::check_block_count(space, m);
  detail::RankedSpace rs(space);
  const auto top = static_cast<std::uint32_t>(rs.values.size() - 1);
  for (PartitionEnumerator e(space.size(), m); !e.done(); e.advance()) {
    const auto label = e.rgs();
    bool ok = true;
    for (std::size_t i = 0; i < rs.n && ok; ++i)
      for (std::size_t j = i + 1; j < rs.n && ok; ++j)
        if (label[i] == label[j] && rs.rank[i * rs.n + j] == top) ok = false;
    if (ok) return Partition::from_rgs(label);
  }
  return std::nullopt;
}

/// Can X be split into m parts of strictly smaller diameter?
///
/// A 2-distance space is decided by m >= theta(G), with a witness made of
/// cliques of G. Any other space is decided by partition search. Either way
/// the answer is checked against 2 d_GH(lambda Simplex_m, X) < diam X at
/// lambda = diam X / 2, and a disagreement throws PropertyViolation.
inline BorsukResult borsuk_feasible(const FiniteMetricSpace& space, std::size_t m) {
  if (space.size() < 2) throw Error(Errc::single_point, "Borsuk partition needs at least two points");
  detail::check_block_count(space, m);
  const Rational diam = diameter(space);
  BorsukResult out;
  out.lambda = diam / Rational(2);

  if (distinct_distances(space).size() == 2) {
    const auto tds = as_two_distance(space);
    const auto cover = clique_cover_number(min_distance_graph(tds));
    out.theta = cover.size();
    out.feasible = m >= cover.size();
    if (out.feasible) {
      auto blocks = cover.blocks;
      while (blocks.size() < m) {
        auto it = std::find_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() > 1; });
        const auto v = it->back();
        it->pop_back();
        blocks.push_back({v});
      }
      out.witness = Partition::from_blocks(space.size(), std::move(blocks));
    }
    out.gh_value = gh_two_distance(tds, m, out.lambda).value;
  } else {
    out.witness = borsuk_search(space, m);
    out.feasible = out.witness.has_value();
    out.gh_value = gh_oracle(space, m, out.lambda);
  }
  if (out.feasible != (out.gh_value < diam))
    throw Error(Errc::property_violation, "partition search and distance criterion disagree for m=" + std::to_string(m),
                {m});
  return out;
}

namespace detail {

inline void check_reduction_inputs(const SimpleGraph& g, const Rational& a, const Rational& b) {
  if (!(a < b) || b > a + a)
    throw Error(Errc::bad_parameters, "need a < b <= 2a, got a=" + a.str() + " b=" + b.str());
  if (g.is_complete() || g.is_edgeless())
    throw Error(Errc::degenerate_graph, "graph is complete or edgeless; the reduction yields a one-distance space");
}

// Greatest m with 2 d_GH(a Simplex_m, X) = b, plus one.
inline std::size_t sweep_to_first_drop(const TwoDistanceSpace& tds) {
  std::size_t greatest = 0;
  for (std::size_t m = 1; m <= tds.size(); ++m) {
    if (gh_two_distance(tds, m, tds.a()).value != tds.b()) break;
    greatest = m;
  }
  return greatest + 1;
}

}  // namespace detail

/// theta(g) recovered from distances: a on edges, b on non-edges.
inline std::size_t clique_cover_via_gh(const SimpleGraph& g, const Rational& a, const Rational& b) {
  detail::check_reduction_inputs(g, a, b);
  return detail::sweep_to_first_drop(as_two_distance(graph_metric(g, a, b)));
}

/// gamma(g) recovered from distances: b on edges, a on non-edges.
inline std::size_t chromatic_via_gh(const SimpleGraph& g, const Rational& a, const Rational& b) {
  detail::check_reduction_inputs(g, a, b);
  return detail::sweep_to_first_drop(as_two_distance(graph_metric(g, b, a)));
}

}  // namespace ghdist
