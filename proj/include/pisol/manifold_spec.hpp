#pragma once

#include "pisol/pi_structure.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pisol {

/// Input problem with line/column information. Line and column are
/// 1-based; 0 means "not tied to a position".
class SpecError : public std::runtime_error {
public:
  SpecError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct BracketEntry {
  std::size_t i = 0, j = 0;
  /// (k, coefficient of e_k) in canonical expression form, k ascending.
  std::vector<std::pair<std::size_t, std::string>> coeffs;
};

/// Declarative description of a Lie frame with a Pi-structure.
///
/// Text format, one item per line, '#' starts a comment:
///
///   name: <text>
///   dim: <odd integer>
///   params: <identifier>...
///   bracket e<i> e<j>: <expression linear in e0..e<dim-1>>
///   metric:            followed by dim indented rows of rationals
///   phi:               followed by dim indented rows; column j is phi e_j
///   xi: <dim rationals>
///   eta: <dim rationals>
///
/// Bracket coefficients are polynomials in the params, e.g.
/// "p*e2 - e3 + q*e4". Brackets not listed are zero; i < j is required.
struct ManifoldSpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<BracketEntry> brackets;
  std::vector<std::vector<std::string>> metric;
  std::vector<std::vector<std::string>> phi;
  std::vector<std::string> xi;
  std::vector<std::string> eta;
};

/// Parses and validates spec text. Throws SpecError.
ManifoldSpec parse_spec(std::string_view text);
/// Reads and parses a file. Throws SpecError (including for I/O failures).
ManifoldSpec load_spec(const std::filesystem::path& path);

/// Builds the structure, optionally fixing some parameters to rationals.
/// Substituted parameters are removed from the parameter set. Throws
/// SpecError for unknown names and GeometryError/TensorError for data the
/// geometry layer rejects (e.g. an indefinite metric).
PiStructure build_structure(const ManifoldSpec& spec, const std::map<std::string, Rational>& substitutions = {});

/// Text of the compiled-in five-dimensional example.
std::string_view builtin_example_text();
ManifoldSpec builtin_example();

}  // namespace pisol
