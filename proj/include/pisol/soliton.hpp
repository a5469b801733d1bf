#pragma once

#include "pisol/linear_system.hpp"
#include "pisol/pi_structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pisol {

enum class FitStatus { exact_fit, no_fit, indeterminate };
std::string to_string(FitStatus s);

// ------------------------------------------------------------ Einstein-like

enum class EinsteinKind { einstein, eta_einstein, para_einstein_like };
std::string to_string(EinsteinKind k);

/// rho = a g + b g~ + c eta (x) eta.
struct EinsteinLikeSolution {
  FitStatus status = FitStatus::no_fit;
  Scalar a, b, c;
  EinsteinKind kind = EinsteinKind::para_einstein_like;
  /// Directions left undetermined because g, g~, eta (x) eta are linearly
  /// dependent (only for n = 0); the reported constants set them to zero.
  std::size_t free_directions = 0;
  std::optional<MultiIndex> witness;
};

EinsteinLikeSolution solve_einstein_like(const PiStructure& s, const CurvatureData& curv);

/// a + b + c = -2n and tau = 2n(a - 1), meaningful on para-Sasaki-like inputs.
std::vector<NamedCheck> einstein_like_trace_checks(const PiStructure& s, const CurvatureData& curv,
                                                   const EinsteinLikeSolution& sol);

// ---------------------------------------------------------------- solitons

/// Potential of a soliton: the Reeb field xi, or v = k xi with k given (a
/// rational or polynomial constant) or left free.
struct Potential {
  enum class Kind { reeb, collinear_given, collinear_free };
  Kind kind = Kind::reeb;
  Scalar k = Scalar(1);

  static Potential reeb() { return {}; }
  static Potential collinear(Scalar k) { return {Kind::collinear_given, std::move(k)}; }
  static Potential collinear_free() { return {Kind::collinear_free, Scalar(1)}; }
};

/// rho = -1/2 L_v g - lambda g - mu g~ - nu eta (x) eta.
struct SolitonSolution {
  FitStatus status = FitStatus::no_fit;
  Potential::Kind potential = Potential::Kind::reeb;
  Scalar k;
  Scalar lambda, mu, nu;
  std::size_t free_directions = 0;
  std::optional<MultiIndex> witness;

  /// For a free k: the solution family as polynomials in the symbol
  /// `k_symbol` over `family_params`. lambda/mu/nu/k above hold the member
  /// k = 1, i.e. v = xi.
  std::string k_symbol;
  ParamSet family_params;
  Scalar family_lambda, family_mu, family_nu;

  /// Constant relations checked on para-Sasaki-like inputs.
  std::vector<NamedCheck> checks;
};

SolitonSolution solve_soliton(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                              const Potential& potential);

struct CorrespondenceReport {
  bool precondition_met = false;
  std::string reason;
  EinsteinLikeSolution einstein_like;
  SolitonSolution soliton;
  std::vector<NamedCheck> checks;
};

/// Pairs the Einstein-like and Reeb-soliton solves: both fit or neither, and
/// a + lambda = 0, b + mu + 1 = 0, c + nu - 1 = 0, plus the four special
/// cases as implications.
CorrespondenceReport check_soliton_einstein_correspondence(const PiStructure& s, const Connection& conn,
                                                           const CurvatureData& curv);

// ------------------------------------------------------------ nabla rho

/// (mu+1){g(phi x,phi y)eta(z) + g(phi x,phi z)eta(y)}
///   - (mu+nu){g(x,phi y)eta(z) + g(x,phi z)eta(y)}  as (x,y,z).
FrameTensor nabla_rho_reeb_closed_form(const PiStructure& s, const Scalar& mu, const Scalar& nu);
/// (lambda - 2n){g(x,phi y)eta(z) + g(x,phi z)eta(y)}  as (x,y,z).
FrameTensor nabla_rho_collinear_closed_form(const PiStructure& s, const Scalar& lambda);

struct NablaRhoReport {
  FrameTensor nabla_rho;  ///< (i,j,k) = (nabla_{e_i} rho)(e_j, e_k)
  std::vector<NamedCheck> checks;
};

/// Leibniz-rule nabla rho, compared with the closed forms when the
/// corresponding solitons fit.
NablaRhoReport nabla_rho(const PiStructure& s, const Connection& conn, const CurvatureData& curv);

enum class RecurrenceStatus { verified, excluded_case, failed, precondition_unmet };
std::string to_string(RecurrenceStatus s);

struct RecurrenceResult {
  RecurrenceStatus status = RecurrenceStatus::precondition_unmet;
  std::string reason;
  std::optional<MultiIndex> witness;
};

/// Recurrence formula for nabla rho with coefficients
/// (lambda(lambda-2n) - (mu+1)^2) / ((mu+1)^2 - lambda^2) and
/// 2n(mu+1) / ((mu+1)^2 - lambda^2); (lambda, mu) = (0, -1) is excluded.
RecurrenceResult check_recurrence(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                                  const SolitonSolution& sol);

// ---------------------------------------------------------- classification

struct Verdict {
  bool holds = false;
  std::optional<MultiIndex> witness;
  std::string note;
};

/// Result of solving for constant 1-forms in a recurrence-type definition.
struct FormSolve {
  bool holds = false;
  LinearSystem::Status status = LinearSystem::Status::inconsistent;
  /// Solution (alpha and, for the almost pseudo case, beta) with a
  /// non-vanishing alpha when one exists.
  std::vector<Scalar> alpha, beta;
  std::size_t free_directions = 0;
  std::optional<MultiIndex> witness;
  std::string note;
};

struct ClassificationReport {
  Verdict locally_ricci_symmetric;
  Verdict ricci_eta_parallel;
  Verdict ricci_parallel_along_xi;
  RecurrenceResult recurrence;
  Verdict ricci_semi_symmetric;
  Verdict globally_phi_symmetric;
  Verdict locally_phi_symmetric;
  Verdict cyclic_parallel;
  Verdict codazzi;
  FormSolve almost_pseudo_ricci_symmetric;
  FormSolve special_weakly_ricci_symmetric;
  Verdict einstein;
  std::optional<Scalar> einstein_constant;
  std::vector<std::string> notes;
};

ClassificationReport classify(const PiStructure& s, const Connection& conn, const CurvatureData& curv);

/// Solves (nabla_x rho)(y,z) = {alpha(x)+beta(x)} rho(y,z) + alpha(y) rho(x,z)
/// + alpha(z) rho(x,y) for constant 1-forms.
FormSolve solve_almost_pseudo_ricci_symmetric(const FrameTensor& ricci, const FrameTensor& nabla_ricci);
/// Solves (nabla_x rho)(y,z) = 2 alpha(x) rho(y,z) + alpha(y) rho(x,z)
/// + alpha(z) rho(x,y).
FormSolve solve_special_weakly_ricci_symmetric(const FrameTensor& ricci, const FrameTensor& nabla_ricci);

// --------------------------------------------------------- parallel tensors

struct ParallelTensorReport {
  bool precondition_met = true;
  std::string reason;
  FrameTensor nabla_h;
  bool parallel = false;
  std::optional<MultiIndex> witness;
  Scalar h_xi_xi;
  /// h = h(xi,xi) g, checked only when parallel.
  std::optional<NamedCheck> multiple_of_metric;
  NamedCheck h_curvature_xi_xi;  ///< h(R(x,y)xi, xi) = 0
  NamedCheck h_x_xi;             ///< h(x, xi) = h(xi,xi) eta(x)
};

/// Throws TensorError when h is not a symmetric (0,2)-tensor.
ParallelTensorReport check_parallel_tensor(const PiStructure& s, const Connection& conn, const FrameTensor& h);

struct HTensorReport {
  FrameTensor h;
  ParallelTensorReport parallel;
  std::optional<Scalar> lambda;  ///< -h(xi,xi), when h is parallel
  std::vector<NamedCheck> checks;
};

/// h = 1/2 L_xi g + rho + mu g~ + nu eta (x) eta.
HTensorReport build_h_and_check(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                                const Scalar& mu, const Scalar& nu);

}  // namespace pisol
