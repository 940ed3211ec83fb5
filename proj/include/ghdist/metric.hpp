#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/error.hpp"
#include "ghdist/graph.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

using Matrix = std::vector<std::vector<Rational>>;

/// Finite metric space with exact distances and opaque point labels.
/// Only obtainable through validate_metric, so every instance satisfies the
/// metric axioms.
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }

  Matrix matrix() const {
    Matrix m(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m[i][j] = distance(i, j);
    return m;
  }

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  friend FiniteMetricSpace validate_metric(std::vector<std::string>, const Matrix&);
  FiniteMetricSpace() = default;

  std::vector<std::string> ids_;
  std::vector<Rational> dist_;
};

/// Checks the metric axioms in order: shape, zero diagonal, symmetry,
/// positivity, triangle inequality. The first violation found is thrown with
/// its indices; a triangle violation reports (i, k, j) for
/// d(i,k) > d(i,j) + d(j,k).
inline FiniteMetricSpace validate_metric(std::vector<std::string> points, const Matrix& matrix) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::dimension_mismatch, "a metric space needs at least one point");
  if (matrix.size() != n)
    throw Error(Errc::dimension_mismatch,
                "matrix has " + std::to_string(matrix.size()) + " rows for " + std::to_string(n) + " points",
                {matrix.size(), n});
  for (std::size_t i = 0; i < n; ++i)
    if (matrix[i].size() != n)
      throw Error(Errc::dimension_mismatch,
                  "matrix row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) + " entries",
                  {i, matrix[i].size()});

  for (std::size_t i = 0; i < n; ++i)
    if (!matrix[i][i].is_zero())
      throw Error(Errc::non_zero_diagonal, "d(" + std::to_string(i) + "," + std::to_string(i) + ") is not 0", {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix[i][j] != matrix[j][i])
        throw Error(Errc::asymmetric,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ")=" + matrix[i][j].str() + " but d(" +
                        std::to_string(j) + "," + std::to_string(i) + ")=" + matrix[j][i].str(),
                    {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix[i][j].sign() <= 0)
        throw Error(Errc::non_positive_off_diagonal,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ") must be positive", {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (matrix[i][j] + matrix[j][k] < matrix[i][k])
          throw Error(Errc::triangle_violation,
                      "d(" + std::to_string(i) + "," + std::to_string(k) + ") exceeds d(" + std::to_string(i) + "," +
                          std::to_string(j) + ")+d(" + std::to_string(j) + "," + std::to_string(k) + ")",
                      {i, k, j});
      }

  FiniteMetricSpace s;
  s.ids_ = std::move(points);
  s.dist_.reserve(n * n);
  for (const auto& row : matrix) s.dist_.insert(s.dist_.end(), row.begin(), row.end());
  return s;
}

/// Same as above with generated labels x1..xn.
inline FiniteMetricSpace validate_metric(const Matrix& matrix) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < matrix.size(); ++i) ids.push_back("x" + std::to_string(i + 1));
  return validate_metric(std::move(ids), matrix);
}

/// Sorted distinct off-diagonal distances.
inline std::vector<Rational> distinct_distances(const FiniteMetricSpace& space) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space.distance(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

inline Rational diameter(const FiniteMetricSpace& space) {
  Rational d;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) d = max(d, space.distance(i, j));
  return d;
}

/// max{ max_{a in A} d(a, B), max_{b in B} d(A, b) } for non-empty index sets.
inline Rational hausdorff_distance(const FiniteMetricSpace& space, std::span<const std::size_t> lhs,
                                   std::span<const std::size_t> rhs) {
  if (lhs.empty() || rhs.empty()) throw Error(Errc::empty_subset, "Hausdorff distance needs non-empty subsets");
  for (auto s : {lhs, rhs})
    for (auto i : s)
      if (i >= space.size())
        throw Error(Errc::index_out_of_range, "point index " + std::to_string(i) + " out of range", {i});

  auto directed = [&](std::span<const std::size_t> from, std::span<const std::size_t> to) {
    Rational worst;
    for (auto x : from) {
      Rational nearest = space.distance(x, to.front());
      for (auto y : to) nearest = min(nearest, space.distance(x, y));
      worst = max(worst, nearest);
    }
    return worst;
  };
  return max(directed(lhs, rhs), directed(rhs, lhs));
}

/// Finite metric space whose off-diagonal distances take exactly two values
/// a < b. Both values occur, so n >= 3 and the minimal-distance graph is
/// neither empty nor complete.
class TwoDistanceSpace {
 public:
  const FiniteMetricSpace& base() const noexcept { return base_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return base_.size(); }

 private:
  friend TwoDistanceSpace as_two_distance(FiniteMetricSpace);
  TwoDistanceSpace(FiniteMetricSpace base, Rational a, Rational b)
      : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {}

  FiniteMetricSpace base_;
  Rational a_;
  Rational b_;
};

inline TwoDistanceSpace as_two_distance(FiniteMetricSpace space) {
  auto values = distinct_distances(space);
  if (values.size() != 2)
    throw Error(Errc::not_two_distance,
                "space has " + std::to_string(values.size()) + " distinct non-zero distances, expected 2",
                {values.size()});
  return TwoDistanceSpace(std::move(space), values[0], values[1]);
}

/// Graph on the points joining pairs at the smaller distance a.
inline SimpleGraph min_distance_graph(const TwoDistanceSpace& tds) {
  const auto& s = tds.base();
  return SimpleGraph::from_predicate(s.size(), [&](std::size_t u, std::size_t v) { return s.distance(u, v) == tds.a(); });
}

/// The space on g's vertices with distance `adjacent` on edges and
/// `non_adjacent` elsewhere. Throws if the result is not a metric.
inline FiniteMetricSpace graph_metric(const SimpleGraph& g, const Rational& adjacent, const Rational& non_adjacent) {
  const std::size_t n = g.size();
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = g.adjacent(i, j) ? adjacent : non_adjacent;
  return validate_metric(m);
}

}  // namespace ghdist
