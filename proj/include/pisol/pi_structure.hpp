#pragma once

#include "pisol/frame_geometry.hpp"

#include <string>
#include <vector>

namespace pisol {

/// Almost paracontact almost paracomplex structure (phi, xi, eta) on a
/// left-invariant frame of dimension 2n+1.
struct PiStructure {
  LieFrame frame;
  FrameTensor phi;  ///< (1,1): phi(l, j) = e_l component of phi e_j
  FrameTensor xi;   ///< vector
  FrameTensor eta;  ///< covector
  std::size_t n = 0;

  /// Validates shapes and rationality; axioms are checked separately.
  PiStructure(LieFrame frame, FrameTensor phi, FrameTensor xi, FrameTensor eta);

  std::size_t dim() const { return frame.dim(); }
  PiStructure substituted(const std::map<std::string, Rational>& values) const;
  PiStructure lifted(const ParamSet& superset) const;
};

/// One named identity with its verdict and first violating index tuple.
struct NamedCheck {
  std::string name;
  bool passed = true;
  std::optional<MultiIndex> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<NamedCheck> checks;
  bool all_passed() const;
};

/// Structure identities: phi xi = 0, phi^2 = I - eta (x) xi, eta o phi = 0,
/// eta(xi) = 1, tr phi = 0, g(phi x, phi y) = g(x,y) - eta(x)eta(y),
/// g(phi x, y) = g(x, phi y), g(x, xi) = eta(x), g(xi, xi) = 1 and, when
/// the frame satisfies Jacobi, eta(nabla_x xi) = 0.
AxiomReport check_axioms(const PiStructure& s);

/// g~(x,y) = g(x, phi y) + eta(x) eta(y).
FrameTensor associated_metric(const PiStructure& s);

/// (nabla_{e_i} phi) e_j as a tensor (i, l, j).
FrameTensor nabla_phi(const PiStructure& s, const Connection& conn);

/// -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi as a tensor (i, l, j).
FrameTensor para_sasaki_rhs(const PiStructure& s);

/// Compares nabla phi with para_sasaki_rhs; the witness is (i, j).
CheckOutcome is_para_sasaki(const PiStructure& s, const Connection& conn);

/// The six curvature identities of a para-Sasaki-like structure, each as
/// an exact componentwise comparison.
std::vector<NamedCheck> check_para_sasaki_identities(const PiStructure& s, const Connection& conn,
                                                     const CurvatureData& curv);

/// Scalar curvature associated with g~, taken as the contraction
/// g^{ij} rho(e_i, phi e_j) + rho(xi, xi).
Scalar tau_tilde(const PiStructure& s, const CurvatureData& curv);

/// Evaluates a rank-2 covariant tensor on two vectors.
Scalar evaluate(const FrameTensor& form, const FrameTensor& x, const FrameTensor& y);
/// Frame basis vector e_i.
FrameTensor basis_vector(std::size_t dim, std::size_t i);
/// phi x for a vector x.
FrameTensor apply(const FrameTensor& endomorphism, const FrameTensor& x);

}  // namespace pisol
