#include <gtest/gtest.h>

#include <random>

#include "ghdist/metric.hpp"
#include "support.hpp"

using namespace ghdist;
namespace gt = ghdist::testing;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  Matrix m;
  for (auto row : r) {
    m.emplace_back();
    for (int v : row) m.back().push_back(Rational(v));
  }
  return m;
}

// Two disjoint a-edges {x1,x2}, {x3,x4} with a=1, b=2.
FiniteMetricSpace e1() { return graph_metric(SimpleGraph::from_edges(4, {{0, 1}, {2, 3}}), 1, 2); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::property_violation;
}

}  // namespace

TEST(ValidateMetric, AcceptsEquilateralTriangle) {
  auto s = validate_metric({"p", "q", "r"}, rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.id(2), "r");
  EXPECT_EQ(s.distance(0, 2), Rational(1));
}

TEST(ValidateMetric, ReportsAsymmetryWithIndices) {
  try {
    validate_metric(rows({{0, 1}, {2, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::asymmetric);
    EXPECT_EQ(e.details(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(ValidateMetric, ReportsTriangleViolation) {
  try {
    validate_metric(rows({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::triangle_violation);
    EXPECT_EQ(e.details(), (std::vector<std::size_t>{0, 2, 1}));
  }
}

TEST(ValidateMetric, OtherAxioms) {
  EXPECT_EQ(code_of([] { validate_metric(rows({{1, 1}, {1, 0}})); }), Errc::non_zero_diagonal);
  EXPECT_EQ(code_of([] { validate_metric(rows({{0, 0}, {0, 0}})); }), Errc::non_positive_off_diagonal);
  EXPECT_EQ(code_of([] { validate_metric(rows({{0, 1}, {1, 0}, {1, 1}})); }), Errc::dimension_mismatch);
  EXPECT_EQ(code_of([] { validate_metric({"a", "b"}, rows({{0}})); }), Errc::dimension_mismatch);
  EXPECT_EQ(code_of([] { validate_metric(Matrix{}); }), Errc::dimension_mismatch);
}

TEST(TwoDistance, DetectsValues) {
  auto tds = as_two_distance(e1());
  EXPECT_EQ(tds.a(), Rational(1));
  EXPECT_EQ(tds.b(), Rational(2));
  EXPECT_EQ(diameter(tds.base()), tds.b());
}

TEST(TwoDistance, RejectsOtherValueCounts) {
  auto equilateral = validate_metric(rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  try {
    as_two_distance(equilateral);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_two_distance);
    EXPECT_EQ(e.details(), std::vector<std::size_t>{1});
  }
  Matrix m = rows({{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}});
  m[0][2] = m[2][0] = Rational(3, 2);
  try {
    as_two_distance(validate_metric(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.details(), std::vector<std::size_t>{3});
  }
}

TEST(Diameter, Basics) {
  EXPECT_EQ(diameter(validate_metric(rows({{0}}))), Rational(0));
  EXPECT_EQ(diameter(e1()), Rational(2));
  EXPECT_EQ(diameter(graph_metric(families::cycle(5), 1, Rational(3, 2))), Rational(3, 2));
}

namespace {

// inf{ r : every point of A is within r of B and vice versa }, searched over
// the candidate radii 0 and the distinct distances.
Rational hausdorff_threshold(const FiniteMetricSpace& s, const std::vector<std::size_t>& A,
                             const std::vector<std::size_t>& B) {
  std::vector<Rational> radii{Rational{}};
  for (auto r : distinct_distances(s)) radii.push_back(r);
  auto covered = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, const Rational& r) {
    for (auto x : from) {
      bool near = false;
      for (auto y : to) near = near || s.distance(x, y) <= r;
      if (!near) return false;
    }
    return true;
  };
  for (const auto& r : radii)
    if (covered(A, B, r) && covered(B, A, r)) return r;
  return radii.back();
}

std::vector<std::size_t> random_subset(gt::Rng& rng, std::size_t n) {
  std::vector<std::size_t> out;
  while (out.empty())
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1) out.push_back(i);
  return out;
}

}  // namespace

TEST(Hausdorff, SpotValues) {
  const auto s = e1();
  const std::vector<std::size_t> a{0, 1};
  EXPECT_EQ(hausdorff_distance(s, a, a), Rational(0));
  const std::vector<std::size_t> x1{0}, x34{2, 3};
  EXPECT_EQ(hausdorff_distance(s, x1, x34), Rational(2));
  EXPECT_EQ(hausdorff_threshold(s, {0}, {2, 3}), Rational(2));
  // x3 is at distance 2 from both x1 and x2.
  const std::vector<std::size_t> x12{0, 1}, x13{0, 2};
  EXPECT_EQ(hausdorff_threshold(s, x12, x13), Rational(2));
  EXPECT_EQ(hausdorff_distance(s, x12, x13), Rational(2));
}

TEST(Hausdorff, Errors) {
  const auto s = e1();
  const std::vector<std::size_t> empty, one{0}, bad{9};
  EXPECT_EQ(code_of([&] { hausdorff_distance(s, empty, one); }), Errc::empty_subset);
  EXPECT_EQ(code_of([&] { hausdorff_distance(s, bad, one); }), Errc::index_out_of_range);
}

TEST(Hausdorff, MetricPropertiesOnRandomSubsets) {
  gt::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = gt::random_two_distance(rng, 3, 8);
    const auto& s = inst.space;
    auto A = random_subset(rng, s.size()), B = random_subset(rng, s.size()), C = random_subset(rng, s.size());
    const auto ab = hausdorff_distance(s, A, B);
    EXPECT_EQ(ab, hausdorff_distance(s, B, A));
    EXPECT_EQ(ab, hausdorff_threshold(s, A, B));
    EXPECT_EQ(ab.is_zero(), A == B);
    EXPECT_LE(hausdorff_distance(s, A, C), ab + hausdorff_distance(s, B, C));
  }
}

TEST(MinDistanceGraph, Examples) {
  const auto g = min_distance_graph(as_two_distance(e1()));
  EXPECT_EQ(g, SimpleGraph::from_edges(4, {{0, 1}, {2, 3}}));
  const auto c5 = min_distance_graph(as_two_distance(graph_metric(families::cycle(5), 1, Rational(3, 2))));
  EXPECT_EQ(c5, families::cycle(5));
}

TEST(MinDistanceGraph, NeitherEmptyNorCompleteAndDiameterIsB) {
  gt::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = gt::random_two_distance(rng, 3, 9);
    const auto g = min_distance_graph(inst.tds);
    EXPECT_GT(g.edge_count(), 0u);
    EXPECT_LT(g.edge_count(), g.size() * (g.size() - 1) / 2);
    EXPECT_EQ(g, inst.graph);
    EXPECT_EQ(diameter(inst.tds.base()), inst.tds.b());
  }
}

// A symmetric {a,b}-valued matrix is a metric iff b <= 2a or its a-graph is
// a disjoint union of cliques.
TEST(MetricRealizability, ExhaustiveUpToSixPoints) {
  const std::vector<std::pair<Rational, Rational>> params{
      {Rational(1), Rational(2)}, {Rational(1), Rational(3, 2)}, {Rational(1), Rational(5, 2)}, {Rational(2), Rational(7)}};
  for (std::size_t n = 3; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Edge> edges;
      std::size_t bit = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) edges.emplace_back(u, v);
      const auto g = SimpleGraph::from_edges(n, edges);
      const bool cluster = is_cluster_graph(g);
      for (const auto& [a, b] : params) {
        bool valid = true;
        try {
          graph_metric(g, a, b);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::triangle_violation);
          valid = false;
        }
        ASSERT_EQ(valid, b <= a + a || cluster) << "n=" << n << " mask=" << mask;
      }
    }
  }
}
