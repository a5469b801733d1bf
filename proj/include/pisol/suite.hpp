#pragma once

#include "pisol/manifold_spec.hpp"
#include "pisol/soliton.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pisol {

/// Check sections in the order the suite runs them.
enum class Section {
  jacobi,
  axioms,
  connection,
  curvature,
  para_sasaki,
  identities,
  einstein_like,
  soliton,
  correspondence,
  nabla_rho,
  recurrence,
  classification,
  parallel_tensor,
};

const std::vector<Section>& all_sections();
std::string to_string(Section s);
std::optional<Section> section_from_string(std::string_view name);

enum class Outcome { pass, fail, fit, no_fit, excluded, skipped, indeterminate };
std::string to_string(Outcome o);

struct CheckEntry {
  Section section;
  std::string name;
  Outcome outcome;
  std::optional<MultiIndex> witness;
  std::string detail;
};

struct SuiteOptions {
  /// Sections to report; empty runs nothing.
  std::set<Section> sections{all_sections().begin(), all_sections().end()};
  /// Parameters fixed to rationals before running.
  std::map<std::string, Rational> substitutions;
  /// Constants for h = 1/2 L_xi g + rho + mu g~ + nu eta (x) eta; when unset
  /// the Reeb soliton constants are used if they exist.
  std::optional<std::string> h_mu, h_nu;
  /// Collinear potential factor; unset means k is solved for.
  std::optional<std::string> k;
};

struct RunReport {
  std::string spec_name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::map<std::string, Rational> substitutions;
  std::vector<Section> sections;
  std::vector<CheckEntry> checks;
  /// Dotted keys to values; Scalars are expression strings.
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  /// 0 when every check passed or fitted, 1 otherwise.
  int exit_code() const;
};

/// Runs the selected sections. Throws SpecError for invalid options
/// (unknown parameter, unparsable constant).
RunReport run_suite(const ManifoldSpec& spec, const SuiteOptions& options = {});

enum class Format { text, json };

/// Text for humans, or the "pisol.report" JSON document (version 1).
std::string emit(const RunReport& report, Format format);

}  // namespace pisol
