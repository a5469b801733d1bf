#include "pisol/frame_geometry.hpp"

#include "pisol/kernels.hpp"

namespace pisol {

namespace {
constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;
}  // namespace

LieFrame::LieFrame(ParamSet params, FrameTensor structure, FrameTensor metric)
    : params_(std::move(params)), structure_(std::move(structure)), metric_(std::move(metric)) {
  const std::size_t d = structure_.dim();
  if (structure_.signature() != Signature{U, L, L}) throw GeometryError("structure constants need signature (upper, lower, lower)");
  if (metric_.dim() != d || metric_.signature() != Signature{L, L}) throw GeometryError("metric must be a (0,2)-tensor of the frame dimension");
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (structure_({k, i, j}) != -structure_({k, j, i}))
          throw GeometryError("structure constants are not antisymmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  if (!metric_.is_constant()) throw GeometryError("metric entries must be rational constants");
  if (!is_symmetric(metric_, 0, 1)) throw GeometryError("metric is not symmetric");
  auto inv = inverse_rational(metric_);
  if (!inv) throw GeometryError("metric is singular");
  if (inertia(metric_).positive != d) throw GeometryError("metric is not positive definite");
  metric_inverse_ = std::move(*inv);
}

LieFrame LieFrame::from_brackets(std::size_t dim, ParamSet params,
                                 const std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>>& brackets,
                                 FrameTensor metric) {
  FrameTensor c(dim, {U, L, L});
  for (const auto& [ij, coeffs] : brackets) {
    auto [i, j] = ij;
    if (i >= dim || j >= dim) throw GeometryError("bracket index out of range");
    if (i >= j) throw GeometryError("bracket entries need i < j");
    if (coeffs.size() != dim) throw GeometryError("bracket coefficient list has wrong length");
    for (std::size_t k = 0; k < dim; ++k) {
      c({k, i, j}) = coeffs[k];
      c({k, j, i}) = -coeffs[k];
    }
  }
  return LieFrame(std::move(params), std::move(c), std::move(metric));
}

LieFrame LieFrame::substituted(const std::map<std::string, Rational>& values) const {
  return LieFrame(params_, structure_.map([&](const Scalar& s) { return s.substitute(values); }), metric_);
}

LieFrame LieFrame::lifted(const ParamSet& superset) const {
  return LieFrame(superset, structure_.map([&](const Scalar& s) { return s.lift(superset); }), metric_);
}

JacobiResult check_jacobi(const LieFrame& frame) {
  const FrameTensor j = kernels::omp::jacobiator(frame.structure());
  const std::size_t d = frame.dim();
  JacobiResult r;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        for (std::size_t m = 0; m < d; ++m)
          if (!j({m, a, b, c}).is_zero()) {
            r.holds = false;
            r.violation = std::array<std::size_t, 3>{a, b, c};
            return r;
          }
  return r;
}

Connection levi_civita(const LieFrame& frame) {
  auto jac = check_jacobi(frame);
  if (!jac.holds) {
    const auto& v = *jac.violation;
    throw GeometryError("structure constants violate the Jacobi identity at (" + std::to_string(v[0]) + "," +
                        std::to_string(v[1]) + "," + std::to_string(v[2]) + ")");
  }
  return Connection{kernels::omp::koszul(frame.structure(), frame.metric(), frame.metric_inverse())};
}

CurvatureData curvature(const LieFrame& frame, const Connection& conn) {
  CurvatureData cd;
  cd.riemann = kernels::omp::riemann(frame.structure(), conn.gamma);
  cd.riemann_lowered = permute(lower(cd.riemann, 0, frame.metric()), {1, 2, 3, 0});
  cd.ricci = contract(cd.riemann, 0, 1);
  cd.ricci_operator = raise(cd.ricci, 0, frame.metric_inverse());
  cd.tau = contract(cd.ricci_operator, 0, 1).flat(0);
  return cd;
}

FrameTensor covariant_derivative(const Connection& conn, const FrameTensor& t) {
  if (t.rank() == 0) return FrameTensor(conn.gamma.dim(), {L});
  if (t.dim() != conn.gamma.dim()) throw TensorError("dimension mismatch");
  return kernels::omp::covariant_derivative(conn.gamma, t);
}

FrameTensor nabla_vector(const Connection& conn, const FrameTensor& v) {
  if (v.signature() != Signature{U}) throw TensorError("expected a vector");
  return covariant_derivative(conn, v);
}

FrameTensor lie_derivative_metric(const LieFrame& frame, const Connection& conn, const FrameTensor& v) {
  const FrameTensor nv = nabla_vector(conn, v);  // (i, l)
  const FrameTensor half = lower(nv, 1, frame.metric());  // g(nabla_i v, e_j)
  return half + permute(half, {1, 0});
}

CheckOutcome compare(const FrameTensor& lhs, const FrameTensor& rhs) {
  if (lhs.dim() != rhs.dim() || lhs.rank() != rhs.rank()) throw TensorError("compare: shape mismatch");
  for (std::size_t f = 0; f < lhs.size(); ++f)
    if (lhs.flat(f) != rhs.flat(f)) return {false, lhs.unflatten(f)};
  return {};
}

namespace {
CheckOutcome zero_check(const FrameTensor& t) {
  auto nz = t.first_nonzero();
  if (nz) return {false, *nz};
  return {};
}
}  // namespace

CheckOutcome second_bianchi_contracted_check(const LieFrame& frame, const Connection& conn, const CurvatureData& curv) {
  const FrameTensor nabla_rho = covariant_derivative(conn, curv.ricci);  // (i, j, k)
  // g^{ij} contraction: raise slot 0 then trace slots 0,1
  return zero_check(contract(raise(nabla_rho, 0, frame.metric_inverse()), 0, 1));
}

CheckOutcome check_torsion_free(const LieFrame& frame, const Connection& conn) {
  const FrameTensor swapped = permute(conn.gamma, {0, 2, 1});
  return compare(conn.gamma - swapped, frame.structure());
}

CheckOutcome check_metric_compatible(const LieFrame& frame, const Connection& conn) {
  return zero_check(covariant_derivative(conn, frame.metric()));
}

CheckOutcome check_first_bianchi(const CurvatureData& curv) {
  // R^l_{ijk} + R^l_{jki} + R^l_{kij}
  const FrameTensor& r = curv.riemann;
  return zero_check(r + permute(r, {0, 3, 1, 2}) + permute(r, {0, 2, 3, 1}));
}

CheckOutcome check_curvature_symmetries(const CurvatureData& curv) {
  const FrameTensor& r = curv.riemann_lowered;
  if (auto c = zero_check(r + permute(r, {1, 0, 2, 3})); !c.holds) return c;
  if (auto c = zero_check(r + permute(r, {0, 1, 3, 2})); !c.holds) return c;
  return compare(r, permute(r, {2, 3, 0, 1}));
}

CheckOutcome check_ricci_symmetric(const CurvatureData& curv) {
  return compare(curv.ricci, permute(curv.ricci, {1, 0}));
}

}  // namespace pisol
