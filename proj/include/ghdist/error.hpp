#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghdist {

enum class Errc {
  dimension_mismatch,
  non_zero_diagonal,
  asymmetric,
  non_positive_off_diagonal,
  triangle_violation,
  not_two_distance,
  empty_subset,
  index_out_of_range,
  invalid_m,
  non_positive_lambda,
  empty_input,
  bad_parameters,
  degenerate_graph,
  single_point,
  syntax_error,
  self_loop,
  vertex_out_of_range,
  search_limit_exceeded,
  property_violation,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_zero_diagonal: return "NonZeroDiagonal";
    case Errc::asymmetric: return "Asymmetric";
    case Errc::non_positive_off_diagonal: return "NonPositiveOffDiagonal";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::not_two_distance: return "NotTwoDistance";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_m: return "InvalidM";
    case Errc::non_positive_lambda: return "NonPositiveLambda";
    case Errc::empty_input: return "EmptyInput";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::degenerate_graph: return "DegenerateGraph";
    case Errc::single_point: return "SinglePoint";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::self_loop: return "SelfLoop";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::search_limit_exceeded: return "SearchLimitExceeded";
    case Errc::property_violation: return "PropertyViolation";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code plus the offending indices
/// (matrix positions, vertex numbers, counts) when the code has any.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<std::size_t> details = {})
      : std::runtime_error(std::move(message)), code_(code), details_(std::move(details)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& details() const noexcept { return details_; }

 private:
  Errc code_;
  std::vector<std::size_t> details_;
};

}  // namespace ghdist
