#pragma once

#include <cctype>
#include <optional>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghdist/error.hpp"
#include "ghdist/graph.hpp"
#include "ghdist/metric.hpp"
#include "ghdist/rational.hpp"

namespace ghdist {

using json = nlohmann::json;

// Metric-space documents:
//   {"points": ["p1", ...], "matrix": [["0", "1", ...], ...]}
// Entries are decimal or "p/q" strings (plain JSON integers are accepted
// too). Serialization always writes canonical rational strings.

namespace detail {

inline json parse_json(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax_error, std::string("malformed JSON: ") + e.what(), {e.byte});
  }
}

inline Rational parse_entry(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const Error& e) {
    throw Error(Errc::syntax_error, where + ": " + e.what());
  }
  throw Error(Errc::syntax_error, where + ": expected a rational string such as \"3/2\"");
}

}  // namespace detail

inline FiniteMetricSpace space_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::syntax_error, "metric space document must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw Error(Errc::syntax_error, "\"points\": expected an array of point ids");
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw Error(Errc::syntax_error, "\"matrix\": expected an array of rows");

  std::vector<std::string> ids;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const auto& p = doc["points"][i];
    if (!p.is_string()) throw Error(Errc::syntax_error, "points[" + std::to_string(i) + "]: expected a string", {i});
    ids.push_back(p.get<std::string>());
  }
  const std::size_t n = ids.size();
  const auto& rows = doc["matrix"];
  if (rows.size() != n)
    throw Error(Errc::syntax_error,
                "matrix: " + std::to_string(rows.size()) + " rows for " + std::to_string(n) + " points", {rows.size(), n});
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw Error(Errc::syntax_error, "matrix[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries",
                  {i});
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(detail::parse_entry(row[j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  try {
    return validate_metric(std::move(ids), m);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("matrix: ") + e.what(), e.details());
  }
}

inline FiniteMetricSpace parse_space(std::string_view document) {
  return space_from_json(detail::parse_json(document));
}

inline json space_to_json(const FiniteMetricSpace& space) {
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.distance(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"points", space.ids()}, {"matrix", std::move(rows)}};
}

inline std::string serialize_space(const FiniteMetricSpace& space) { return space_to_json(space).dump(2) + "\n"; }

enum class GraphFormat { dimacs, json };

inline SimpleGraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned())
    throw Error(Errc::syntax_error, "graph document needs a non-negative integer \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(Errc::syntax_error, "\"edges\": expected an array of [u, v] pairs");
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(Errc::syntax_error, "edges[" + std::to_string(i) + "]: expected [u, v]", {i});
    const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0)
      throw Error(Errc::vertex_out_of_range, "edges[" + std::to_string(i) + "]: negative vertex", {i});
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return SimpleGraph::from_edges(n, edges);
}

/// DIMACS: "c" comments, one "p edge <n> <m>" header, "e <u> <v>" lines
/// with 1-based vertices. The declared edge count is not enforced because
/// duplicate edges collapse.
inline SimpleGraph parse_dimacs(std::string_view document) {
  std::istringstream in{std::string(document)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    return Error(Errc::syntax_error, "line " + std::to_string(line_no) + ": " + what, {line_no});
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nv = -1, ne = -1;
      if (n) throw fail("duplicate problem line");
      if (!(ls >> kind >> nv >> ne) || (kind != "edge" && kind != "col") || nv < 0 || ne < 0)
        throw fail("expected 'p edge <n> <m>'");
      n = static_cast<std::size_t>(nv);
    } else if (tag == "e") {
      if (!n) throw fail("edge before the problem line");
      long long u = 0, v = 0;
      std::string rest;
      if (!(ls >> u >> v) || (ls >> rest)) throw fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n)
        throw Error(Errc::vertex_out_of_range, "line " + std::to_string(line_no) + ": vertex outside 1.." +
                                                   std::to_string(*n), {line_no});
      if (u == v)
        throw Error(Errc::self_loop, "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u),
                    {static_cast<std::size_t>(u)});
      edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else {
      throw fail("unknown line type '" + tag + "'");
    }
  }
  if (!n) throw Error(Errc::syntax_error, "missing 'p edge <n> <m>' line");
  return SimpleGraph::from_edges(*n, edges);
}

inline SimpleGraph parse_graph(std::string_view document, GraphFormat format) {
  if (format == GraphFormat::json) return graph_from_json(detail::parse_json(document));
  return parse_dimacs(document);
}

inline json graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.size()}, {"edges", std::move(edges)}};
}

inline std::string serialize_graph(const SimpleGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) return graph_to_json(g).dump() + "\n";
  std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace ghdist
