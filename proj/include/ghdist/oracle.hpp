#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <optional>
#include <thread>
#include <vector>

#include "ghdist/error.hpp"
#include "ghdist/metric.hpp"
#include "ghdist/partition.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

/// Largest block diameter; zero when every block is a singleton.
inline Rational partition_diameter(const FiniteMetricSpace& space, const Partition& p) {
  Rational d;
  for (const auto& block : p.blocks())
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) d = max(d, space.distance(block[i], block[j]));
  return d;
}

/// Smallest distance between points of distinct blocks; infinite for a
/// single block.
inline ExtendedRational partition_alpha(const FiniteMetricSpace& space, const Partition& p) {
  ExtendedRational alpha = ExtendedRational::infinity();
  const auto& blocks = p.blocks();
  for (std::size_t s = 0; s < blocks.size(); ++s)
    for (std::size_t t = s + 1; t < blocks.size(); ++t)
      for (auto x : blocks[s])
        for (auto y : blocks[t]) alpha = std::min(alpha, ExtendedRational(space.distance(x, y)));
  return alpha;
}

/// A point (alpha(D), diam D) of the plane.
struct ADPoint {
  ExtendedRational alpha;
  Rational d;

  friend bool operator==(const ADPoint&, const ADPoint&) = default;
  friend std::strong_ordering operator<=>(const ADPoint& l, const ADPoint& r) {
    if (auto c = l.alpha <=> r.alpha; c != 0) return c;
    return l.d <=> r.d;
  }
};

/// Non-dominated subset of an (alpha, d) set, sorted.
struct ExtremeSet {
  std::vector<ADPoint> points;
};

/// max{d, lambda - alpha}; an infinite alpha leaves d.
inline Rational h_value(const ADPoint& p, const Rational& lambda) {
  if (p.alpha.is_infinite()) return p.d;
  return max(p.d, lambda - p.alpha.finite());
}

/// Keeps (alpha, d) iff no other point has alpha' >= alpha and d' <= d.
inline ExtremeSet extreme_points(std::span<const ADPoint> ad) {
  if (ad.empty()) throw Error(Errc::empty_input, "extreme points of an empty set");
  ExtremeSet ext;
  for (const auto& p : ad) {
    const bool dominated = std::any_of(ad.begin(), ad.end(), [&](const ADPoint& q) {
      return q != p && q.alpha >= p.alpha && q.d <= p.d;
    });
    if (!dominated) ext.points.push_back(p);
  }
  std::sort(ext.points.begin(), ext.points.end());
  ext.points.erase(std::unique(ext.points.begin(), ext.points.end()), ext.points.end());
  return ext;
}

namespace detail {

/// Distances replaced by their rank among the distinct values, with rank 0
/// reserved for zero. All scans compare ranks, which preserves order exactly.
struct RankedSpace {
  explicit RankedSpace(const FiniteMetricSpace& space) : n(space.size()), rank(n * n, 0) {
    values.push_back(Rational{});
    for (auto& v : distinct_distances(space)) values.push_back(v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          auto it = std::lower_bound(values.begin(), values.end(), space.distance(i, j));
          rank[i * n + j] = static_cast<std::uint32_t>(it - values.begin());
        }
  }

  std::uint32_t infinite_rank() const { return static_cast<std::uint32_t>(values.size()); }

  std::size_t n;
  std::vector<Rational> values;
  std::vector<std::uint32_t> rank;
};

/// Set of (alpha rank, diameter rank) pairs as a dense bitmap.
class RankPairSet {
 public:
  explicit RankPairSet(std::size_t value_count) : v_(value_count), bits_((v_ + 1) * v_, 0) {}

  bool insert(std::uint32_t alpha, std::uint32_t d) {
    auto& b = bits_[alpha * v_ + d];
    if (b) return false;
    b = 1;
    return true;
  }

  void merge(const RankPairSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  }

  std::vector<ADPoint> points(const RankedSpace& rs) const {
    std::vector<ADPoint> out;
    for (std::size_t alpha = 0; alpha <= v_; ++alpha)
      for (std::size_t d = 0; d < v_; ++d)
        if (bits_[alpha * v_ + d])
          out.push_back({alpha == v_ ? ExtendedRational::infinity() : ExtendedRational(rs.values[alpha]), rs.values[d]});
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const RankPairSet&, const RankPairSet&) = default;

 private:
  std::size_t v_;
  std::vector<std::uint8_t> bits_;
};

/// Visits (alpha rank, diameter rank) of every partition in the stream with
/// the given prefix; stops early when visit returns false.
template <typename Visit>
std::uint64_t scan_partitions(const RankedSpace& rs, std::size_t m, std::span<const std::uint32_t> prefix,
                              Visit&& visit) {
  const std::size_t n = rs.n;
  std::uint64_t scanned = 0;
  for (PartitionEnumerator e(n, m, prefix); !e.done(); e.advance()) {
    const auto label = e.rgs();
    std::uint32_t d = 0;
    std::uint32_t alpha = rs.infinite_rank();
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t* row = rs.rank.data() + i * n;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (label[i] == label[j])
          d = std::max(d, row[j]);
        else
          alpha = std::min(alpha, row[j]);
      }
    }
    ++scanned;
    if (!visit(alpha, d)) break;
  }
  return scanned;
}

inline void check_block_count(const FiniteMetricSpace& space, std::size_t m) {
  if (m < 1 || m > space.size())
    throw Error(Errc::invalid_m, "m=" + std::to_string(m) + " outside 1.." + std::to_string(space.size()),
                {m, space.size()});
}

inline RankPairSet ad_ranks(const RankedSpace& rs, std::size_t m, unsigned threads) {
  RankPairSet all(rs.values.size());
  if (threads <= 1) {
    scan_partitions(rs, m, {}, [&](std::uint32_t alpha, std::uint32_t d) {
      all.insert(alpha, d);
      return true;
    });
    return all;
  }

  // Split the stream by fixing the labels of a short prefix.
  std::size_t length = 1;
  auto prefixes = completable_prefixes(rs.n, m, length);
  while (prefixes.size() < 4 * static_cast<std::size_t>(threads) && length < rs.n)
    prefixes = completable_prefixes(rs.n, m, ++length);

  std::vector<RankPairSet> partial(threads, RankPairSet(rs.values.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t p = t; p < prefixes.size(); p += threads)
        scan_partitions(rs, m, prefixes[p], [&](std::uint32_t alpha, std::uint32_t d) {
          partial[t].insert(alpha, d);
          return true;
        });
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : partial) all.merge(p);
  return all;
}

}  // namespace detail

/// The deduplicated set {(alpha(D), diam D)} over all partitions into m
/// blocks, sorted. `threads` > 1 splits the scan; the result is identical.
inline std::vector<ADPoint> ad_set(const FiniteMetricSpace& space, std::size_t m, unsigned threads = 1) {
  detail::check_block_count(space, m);
  detail::RankedSpace rs(space);
  return detail::ad_ranks(rs, m, threads).points(rs);
}

enum class ScanMode {
  early_exit,  // stop once the running value meets its lower bound
  full,        // enumerate every partition, then minimize over extreme points
};

struct OracleResult {
  /// Twice the Gromov-Hausdorff distance to the m-point simplex of side lambda.
  Rational value;
  std::uint64_t partitions_scanned = 0;
};

/// Brute-force evaluation of 2*d_GH(lambda*Simplex_m, X) for any finite X:
/// for m <= n, max{diam X - lambda, min over extreme (alpha, d) of
/// max{d, lambda - alpha}}; for m > n, max{diam X - lambda, lambda}.
inline OracleResult gh_oracle_report(const FiniteMetricSpace& space, std::size_t m, const Rational& lambda,
                                     ScanMode mode = ScanMode::early_exit) {
  if (lambda.sign() <= 0) throw Error(Errc::non_positive_lambda, "lambda must be positive, got " + lambda.str());
  if (m < 1) throw Error(Errc::invalid_m, "m must be at least 1", {m});
  const Rational diam = diameter(space);
  const Rational spread = diam - lambda;
  if (m > space.size()) return {max(spread, lambda), 0};

  detail::RankedSpace rs(space);
  if (mode == ScanMode::full) {
    OracleResult out;
    detail::RankPairSet ranks(rs.values.size());
    out.partitions_scanned = detail::scan_partitions(rs, m, {}, [&](std::uint32_t alpha, std::uint32_t d) {
      ranks.insert(alpha, d);
      return true;
    });
    const auto ext = extreme_points(ranks.points(rs));
    Rational best = h_value(ext.points.front(), lambda);
    for (const auto& p : ext.points) best = min(best, h_value(p, lambda));
    out.value = max(spread, best);
    return out;
  }

  // Every h is at least the smallest possible block diameter, and for m > 1
  // at least lambda - diam X because alpha never exceeds diam X.
  Rational floor = m < space.size() ? rs.values[1] : Rational{};
  if (m > 1) floor = max(floor, lambda - diam);
  const Rational target = max(spread, floor);

  detail::RankPairSet seen(rs.values.size());
  std::optional<Rational> best;
  OracleResult out;
  out.partitions_scanned = detail::scan_partitions(rs, m, {}, [&](std::uint32_t alpha, std::uint32_t d) {
    if (!seen.insert(alpha, d)) return true;
    ADPoint p{alpha == rs.infinite_rank() ? ExtendedRational::infinity() : ExtendedRational(rs.values[alpha]),
              rs.values[d]};
    Rational h = h_value(p, lambda);
    if (!best || h < *best) best = std::move(h);
    return max(spread, *best) > target;
  });
  out.value = max(spread, *best);
  return out;
}

inline Rational gh_oracle(const FiniteMetricSpace& space, std::size_t m, const Rational& lambda,
                          ScanMode mode = ScanMode::early_exit) {
  return gh_oracle_report(space, m, lambda, mode).value;
}

}  // namespace ghdist
