#pragma once

#include "pisol/tensor.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace pisol {

class GeometryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Left-invariant frame e_0..e_{d-1} of a Lie group: structure constants
/// plus a constant Riemannian metric.
///
/// Antisymmetry of the structure constants and symmetry, positivity and
/// rationality of the metric are enforced on construction. The Jacobi
/// identity is not; see check_jacobi().
class LieFrame {
public:
  /// `structure` has signature {upper, lower, lower}: structure(k,i,j) = C^k_{ij}.
  LieFrame(ParamSet params, FrameTensor structure, FrameTensor metric);

  /// Brackets keyed by (i, j) with i < j; each value lists the e_k
  /// coefficients of [e_i, e_j]. Missing pairs are zero.
  static LieFrame from_brackets(std::size_t dim, ParamSet params,
                                const std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>>& brackets,
                                FrameTensor metric);

  std::size_t dim() const { return structure_.dim(); }
  const ParamSet& params() const { return params_; }
  const FrameTensor& structure() const { return structure_; }
  const FrameTensor& metric() const { return metric_; }
  const FrameTensor& metric_inverse() const { return metric_inverse_; }

  /// Coefficient of e_k in [e_i, e_j].
  const Scalar& bracket(std::size_t i, std::size_t j, std::size_t k) const { return structure_({k, i, j}); }

  /// Copy with parameters replaced by rationals.
  LieFrame substituted(const std::map<std::string, Rational>& values) const;
  /// Copy whose Scalars are expressed over a larger parameter set.
  LieFrame lifted(const ParamSet& superset) const;

private:
  ParamSet params_;
  FrameTensor structure_;
  FrameTensor metric_;
  FrameTensor metric_inverse_;
};

struct JacobiResult {
  bool holds = true;
  /// First (i<j<k) whose cyclic bracket sum is nonzero.
  std::optional<std::array<std::size_t, 3>> violation;
};

JacobiResult check_jacobi(const LieFrame& frame);

struct Connection {
  /// gamma(k,i,j) = Gamma^k_{ij}, nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k.
  FrameTensor gamma;
};

/// Levi-Civita connection from the Koszul formula. Throws GeometryError when
/// the structure constants fail the Jacobi identity.
Connection levi_civita(const LieFrame& frame);

struct CurvatureData {
  FrameTensor riemann;          ///< (l,i,j,k): R^l_{ijk}
  FrameTensor riemann_lowered;  ///< (i,j,k,l): g(R(e_i,e_j)e_k, e_l)
  FrameTensor ricci;            ///< (j,k): rho_{jk} = sum_i R^i_{ijk}
  FrameTensor ricci_operator;   ///< (l,k): Q^l_k = g^{lj} rho_{jk}
  Scalar tau;
};

CurvatureData curvature(const LieFrame& frame, const Connection& conn);

/// nabla t with the differentiation direction as new slot 0 (lower).
FrameTensor covariant_derivative(const Connection& conn, const FrameTensor& t);

/// nabla_{e_i} v for a constant-component vector v, as (i, l) = (nabla_i v)^l.
FrameTensor nabla_vector(const Connection& conn, const FrameTensor& v);

/// (L_v g)_{ij} = g(nabla_i v, e_j) + g(e_i, nabla_j v).
FrameTensor lie_derivative_metric(const LieFrame& frame, const Connection& conn, const FrameTensor& v);

struct CheckOutcome {
  bool holds = true;
  std::optional<MultiIndex> witness;
};

/// g^{ij} (nabla_i rho)(e_j, e_k) = 0 for every k. Scalar curvature is
/// constant on left-invariant data, so this is the contracted second Bianchi
/// identity.
CheckOutcome second_bianchi_contracted_check(const LieFrame& frame, const Connection& conn, const CurvatureData& curv);

/// Structural identities every Levi-Civita curvature must satisfy.
CheckOutcome check_torsion_free(const LieFrame& frame, const Connection& conn);
CheckOutcome check_metric_compatible(const LieFrame& frame, const Connection& conn);
CheckOutcome check_first_bianchi(const CurvatureData& curv);
CheckOutcome check_curvature_symmetries(const CurvatureData& curv);
CheckOutcome check_ricci_symmetric(const CurvatureData& curv);

/// Witness-bearing equality of two tensors: first differing index.
CheckOutcome compare(const FrameTensor& lhs, const FrameTensor& rhs);

}  // namespace pisol
