#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghdist/closed_form.hpp"
#include "ghdist/error.hpp"
#include "ghdist/graph.hpp"
#include "ghdist/io.hpp"
#include "ghdist/metric.hpp"
#include "ghdist/oracle.hpp"

namespace ghdist::cli {

enum ExitCode : int { ok = 0, usage = 1, input_error = 2, property_violation = 3 };

/// One JSON document per invocation. `timing_ms` is the only field that
/// varies between identical runs.
struct RunReport {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::optional<std::string> case_tag;
  double timing_ms = 0;

  json to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"result", result}, {"timing_ms", timing_ms}};
    if (case_tag) j["case"] = *case_tag;
    return j;
  }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::syntax_error, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GraphFormat graph_format_for(const std::string& path, const std::string& requested, const std::string& text) {
  if (requested == "dimacs") return GraphFormat::dimacs;
  if (requested == "json") return GraphFormat::json;
  if (path.ends_with(".json")) return GraphFormat::json;
  if (path.ends_with(".col") || path.ends_with(".dimacs")) return GraphFormat::dimacs;
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{' ? GraphFormat::json : GraphFormat::dimacs;
}

inline json blocks_to_ids(const FiniteMetricSpace& space, const Partition& p) {
  json out = json::array();
  for (const auto& block : p.blocks()) {
    json b = json::array();
    for (auto v : block) b.push_back(space.id(v));
    out.push_back(std::move(b));
  }
  return out;
}

inline json curve_to_json(const PiecewiseLinearCurve& curve) {
  json segs = json::array();
  for (const auto& s : curve.segments)
    segs.push_back({{"from", s.from.str()},
                    {"to", s.to ? json(s.to->str()) : json("inf")},
                    {"slope", s.slope},
                    {"intercept", s.intercept.str()}});
  return segs;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw Error(Errc::syntax_error, "empty lambda list");
  return out;
}

inline int exit_code_for(Errc code) {
  return code == Errc::property_violation ? property_violation : input_error;
}

inline json error_json(const std::string& command, std::string_view kind, const std::string& message,
                       const std::vector<std::size_t>& details = {}) {
  return json{{"command", command}, {"error", {{"kind", kind}, {"message", message}, {"details", details}}}};
}

}  // namespace detail

/// Parses argv (without the program name) and runs one subcommand, writing
/// a RunReport or an error object as JSON to `out`. Returns the exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Gromov-Hausdorff distances between simplexes and finite metric spaces", "ghdist"};
  app.require_subcommand(1);

  std::string space_path, graph_path, graph_fmt = "auto", method = "closed", via = "direct";
  std::string lambda_text, a_text, b_text, lambdas_text;
  std::size_t m = 0, max_m = 0;
  std::optional<std::uint64_t> node_limit;

  auto* validate = app.add_subcommand("validate", "Validate a metric-space document");
  validate->add_option("space", space_path, "Metric-space JSON file")->required();

  auto* ghdist = app.add_subcommand("ghdist", "2 d_GH(lambda Simplex_m, X)");
  ghdist->add_option("--space", space_path)->required();
  ghdist->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  ghdist->add_option("--lambda", lambda_text)->required();
  ghdist->add_option("--method", method)->check(CLI::IsMember({"closed", "oracle", "both"}));

  auto* ghcurve = app.add_subcommand("ghcurve", "Exact breakpoints of lambda -> 2 d_GH(lambda Simplex_m, X)");
  ghcurve->add_option("--space", space_path)->required();
  ghcurve->add_option("--m", m)->required()->check(CLI::PositiveNumber);

  auto* borsuk = app.add_subcommand("borsuk", "Partition into m parts of smaller diameter");
  borsuk->add_option("--space", space_path)->required();
  borsuk->add_option("--m", m)->required()->check(CLI::PositiveNumber);

  auto add_graph_command = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--graph", graph_path)->required();
    sub->add_option("--format", graph_fmt)->check(CLI::IsMember({"auto", "dimacs", "json"}));
    sub->add_option("--via", via)->check(CLI::IsMember({"direct", "gh"}));
    sub->add_option("--a", a_text);
    sub->add_option("--b", b_text);
    sub->add_option("--node-limit", node_limit);
    return sub;
  };
  auto* theta = add_graph_command("theta", "Clique covering number");
  auto* chroma = add_graph_command("chroma", "Chromatic number");

  auto* check = app.add_subcommand("oracle-check", "Closed form against the partition oracle");
  check->add_option("--space", space_path)->required();
  check->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
  check->add_option("--lambdas", lambdas_text)->required();

  std::vector<const char*> argv{"ghdist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    out << detail::error_json("", "UsageError", e.what()).dump(2) << "\n";
    return usage;
  }

  const auto* sub = app.get_subcommands().front();
  RunReport report;
  report.command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = ok;

  try {
    auto load_space = [&] {
      auto space = parse_space(detail::read_file(space_path));
      report.inputs["space"] = space_to_json(space);
      return space;
    };

    if (sub == validate) {
      auto space = load_space();
      const auto values = distinct_distances(space);
      report.result["n"] = space.size();
      report.result["diameter"] = diameter(space).str();
      json vs = json::array();
      for (const auto& v : values) vs.push_back(v.str());
      report.result["distinct_distances"] = vs;
      if (values.size() == 2) {
        const auto tds = as_two_distance(space);
        const auto inv = graph_invariants(min_distance_graph(tds));
        report.result["two_distance"] = {{"a", tds.a().str()},
                                         {"b", tds.b().str()},
                                         {"k", inv.components},
                                         {"theta", inv.clique_cover}};
      } else {
        report.result["two_distance"] = nullptr;
      }
    } else if (sub == ghdist) {
      auto space = load_space();
      const auto lambda = Rational::parse(lambda_text);
      report.inputs["m"] = m;
      report.inputs["lambda"] = lambda.str();
      report.inputs["method"] = method;
      std::optional<Rational> closed, oracle;
      if (method != "oracle") {
        auto v = gh_two_distance(as_two_distance(space), m, lambda);
        report.case_tag = std::string(to_string(v.gh_case.tag));
        report.result["k"] = v.gh_case.k;
        report.result["theta"] = v.gh_case.theta;
        closed = v.value;
      }
      if (method != "closed") {
        auto r = gh_oracle_report(space, m, lambda);
        report.result["partitions_scanned"] = r.partitions_scanned;
        oracle = r.value;
      }
      if (closed) report.result["closed"] = closed->str();
      if (oracle) report.result["oracle"] = oracle->str();
      const Rational& value = closed ? *closed : *oracle;
      report.result["value"] = value.str();
      report.result["d_gh"] = (value / Rational(2)).str();
      if (closed && oracle && *closed != *oracle) {
        report.result["mismatch"] = true;
        code = property_violation;
      }
    } else if (sub == ghcurve) {
      auto space = load_space();
      report.inputs["m"] = m;
      const auto tds = as_two_distance(space);
      report.case_tag = std::string(to_string(classify_case(tds, m).tag));
      report.result["segments"] = detail::curve_to_json(gh_curve(tds, m));
    } else if (sub == borsuk) {
      auto space = load_space();
      report.inputs["m"] = m;
      const auto r = borsuk_feasible(space, m);
      report.result["feasible"] = r.feasible;
      report.result["witness"] = r.witness ? detail::blocks_to_ids(space, *r.witness) : json(nullptr);
      report.result["theta"] = r.theta ? json(*r.theta) : json(nullptr);
      report.result["lambda"] = r.lambda.str();
      report.result["gh_value"] = r.gh_value.str();
      report.result["diameter"] = diameter(space).str();
    } else if (sub == theta || sub == chroma) {
      const auto text = detail::read_file(graph_path);
      const auto g = parse_graph(text, detail::graph_format_for(graph_path, graph_fmt, text));
      report.inputs["graph"] = graph_to_json(g);
      report.inputs["via"] = via;
      const bool is_theta = sub == theta;
      const char* key = is_theta ? "theta" : "gamma";
      if (via == "gh") {
        if (a_text.empty() || b_text.empty())
          throw Error(Errc::bad_parameters, "--via gh needs --a and --b");
        const auto a = Rational::parse(a_text), b = Rational::parse(b_text);
        report.inputs["a"] = a.str();
        report.inputs["b"] = b.str();
        report.result[key] = is_theta ? clique_cover_via_gh(g, a, b) : chromatic_via_gh(g, a, b);
      } else {
        SolverOptions opts{node_limit};
        if (is_theta) {
          const auto cover = clique_cover_number(g, opts);
          report.result[key] = cover.size();
          report.result["cover"] = cover.blocks;
        } else {
          const auto col = chromatic_number(g, opts);
          report.result[key] = col.colors;
          report.result["coloring"] = col.color;
        }
      }
    } else if (sub == check) {
      auto space = load_space();
      const auto tds = as_two_distance(space);
      const auto lambdas = detail::parse_rational_list(lambdas_text);
      report.inputs["max_m"] = max_m;
      json ls = json::array();
      for (const auto& l : lambdas) ls.push_back(l.str());
      report.inputs["lambdas"] = ls;
      json mismatches = json::array();
      std::size_t checked = 0;
      for (std::size_t mm = 1; mm <= max_m; ++mm)
        for (const auto& l : lambdas) {
          const auto closed = gh_two_distance(tds, mm, l);
          const auto oracle = gh_oracle(space, mm, l);
          ++checked;
          if (closed.value != oracle)
            mismatches.push_back({{"m", mm},
                                  {"lambda", l.str()},
                                  {"closed", closed.value.str()},
                                  {"oracle", oracle.str()},
                                  {"case", to_string(closed.gh_case.tag)}});
        }
      report.result["checked"] = checked;
      report.result["mismatches"] = mismatches;
      if (!mismatches.empty()) code = property_violation;
    }
  } catch (const Error& e) {
    out << detail::error_json(report.command, to_string(e.code()), e.what(), e.details()).dump(2) << "\n";
    return detail::exit_code_for(e.code());
  }

  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.to_json().dump(2) << "\n";
  return code;
}

}  // namespace ghdist::cli
