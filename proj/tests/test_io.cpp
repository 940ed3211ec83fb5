#include <gtest/gtest.h>

#include "ghdist/io.hpp"
#include "support.hpp"

using namespace ghdist;
namespace gt = ghdist::testing;

namespace {

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

TEST(SpaceIo, ParsesDocument) {
  const auto s = parse_space(R"({"points": ["p", "q", "r"],
    "matrix": [["0", "1/3", "0.5"], ["1/3", "0", "1/2"], ["1/2", "1/2", 0]]})");
  EXPECT_EQ(s.ids(), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_EQ(s.distance(0, 1), Rational(1, 3));
  EXPECT_EQ(s.distance(0, 2), Rational(1, 2));
  EXPECT_EQ(serialize_space(s).find("0.5"), std::string::npos);
  EXPECT_NE(serialize_space(s).find("\"1/3\""), std::string::npos);
}

TEST(SpaceIo, Errors) {
  EXPECT_EQ(code_of([] { parse_space(R"({"points": ["a", "b"], "matrix": [["0", "1"]]})"); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space(R"({"points": ["a", "b"], "matrix": [["0", "1"], ["1"]]})"); }),
            Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space(R"({"points": ["a", "b"], "matrix": [["0", "x"], ["1", "0"]]})"); }),
            Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space(R"({"points": ["a", "b"], "matrix": [["0", 1.5], ["1", "0"]]})"); }),
            Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space("{\"points\": "); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space("[]"); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_space(R"({"points": ["a", "b"], "matrix": [["0", "1"], ["2", "0"]]})"); }),
            Errc::asymmetric);
  EXPECT_EQ(code_of([] { parse_space(R"({"points": [], "matrix": []})"); }), Errc::dimension_mismatch);
}

TEST(SpaceIo, RoundTrip) {
  gt::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto s = gt::random_metric(rng, 1 + rng() % 7, 1 + rng() % 9);
    EXPECT_EQ(parse_space(serialize_space(s)), s);
  }
}

TEST(GraphIo, DimacsCycle) {
  const auto g = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g, families::cycle(5));
}

TEST(GraphIo, DimacsErrors) {
  try {
    parse_dimacs("p edge 3 1\ne 1 1\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::self_loop);
  }
  EXPECT_EQ(code_of([] { parse_dimacs("p edge 3 1\ne 1 4\n"); }), Errc::vertex_out_of_range);
  EXPECT_EQ(code_of([] { parse_dimacs("p edge 3 1\ne 0 1\n"); }), Errc::vertex_out_of_range);
  EXPECT_EQ(code_of([] { parse_dimacs("e 1 2\n"); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_dimacs("c nothing\n"); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_dimacs("p edge 3 1\nx 1 2\n"); }), Errc::syntax_error);
  try {
    parse_dimacs("p edge 3 1\ne 1 2\ne 2\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::syntax_error);
    EXPECT_EQ(e.details(), (std::vector<std::size_t>{3}));
  }
}

TEST(GraphIo, JsonEdges) {
  const auto g = parse_graph(R"({"n": 2, "edges": [[0, 1], [1, 0]]})", GraphFormat::json);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(code_of([] { parse_graph(R"({"n": 2, "edges": [[0, 0]]})", GraphFormat::json); }), Errc::self_loop);
  EXPECT_EQ(code_of([] { parse_graph(R"({"n": 2, "edges": [[0, 2]]})", GraphFormat::json); }),
            Errc::vertex_out_of_range);
  EXPECT_EQ(code_of([] { parse_graph(R"({"n": 2, "edges": [[0, -1]]})", GraphFormat::json); }),
            Errc::vertex_out_of_range);
  EXPECT_EQ(code_of([] { parse_graph(R"({"edges": []})", GraphFormat::json); }), Errc::syntax_error);
}

TEST(GraphIo, RoundTrip) {
  gt::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto g = gt::random_graph(rng, rng() % 12, 0.4);
    EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::json), GraphFormat::json), g);
    EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::dimacs), GraphFormat::dimacs), g);
  }
}
