#include "pisol/pi_structure.hpp"

#include <algorithm>

namespace pisol {

namespace {

constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;

NamedCheck named(std::string name, const CheckOutcome& o) {
  NamedCheck c;
  c.name = std::move(name);
  c.passed = o.holds;
  c.witness = o.witness;
  return c;
}

NamedCheck scalar_check(std::string name, const Scalar& lhs, const Scalar& rhs) {
  NamedCheck c;
  c.name = std::move(name);
  c.passed = lhs == rhs;
  if (!c.passed) c.detail = lhs.to_string() + " != " + rhs.to_string();
  return c;
}

// (l, j) -> xi^l eta_j
FrameTensor xi_eta(const PiStructure& s) { return tensor_product(s.xi, s.eta); }

// a(i,j) = sum_b g_{ib} phi(b,j) = g(e_i, phi e_j)
FrameTensor g_phi(const PiStructure& s) { return lower(s.phi, 0, s.frame.metric()); }

}  // namespace

PiStructure::PiStructure(LieFrame frame_in, FrameTensor phi_in, FrameTensor xi_in, FrameTensor eta_in)
    : frame(std::move(frame_in)), phi(std::move(phi_in)), xi(std::move(xi_in)), eta(std::move(eta_in)) {
  const std::size_t d = frame.dim();
  if (d % 2 == 0) throw GeometryError("frame dimension must be odd (2n+1)");
  n = (d - 1) / 2;
  if (phi.dim() != d || phi.signature() != Signature{U, L}) throw GeometryError("phi must be a (1,1)-tensor of the frame dimension");
  if (xi.dim() != d || xi.signature() != Signature{U}) throw GeometryError("xi must be a vector of the frame dimension");
  if (eta.dim() != d || eta.signature() != Signature{L}) throw GeometryError("eta must be a covector of the frame dimension");
  if (!phi.is_constant() || !xi.is_constant() || !eta.is_constant())
    throw GeometryError("phi, xi and eta must have rational constant components");
}

PiStructure PiStructure::substituted(const std::map<std::string, Rational>& values) const {
  return PiStructure(frame.substituted(values), phi, xi, eta);
}

PiStructure PiStructure::lifted(const ParamSet& superset) const {
  return PiStructure(frame.lifted(superset), phi, xi, eta);
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

AxiomReport check_axioms(const PiStructure& s) {
  const std::size_t d = s.dim();
  const FrameTensor& g = s.frame.metric();
  AxiomReport rep;

  rep.checks.push_back(named("phi_xi_zero", compare(contract(tensor_product(s.phi, s.xi), 1, 2), FrameTensor(d, {U}))));
  rep.checks.push_back(named("phi_squared", compare(compose(s.phi, s.phi), FrameTensor::identity(d) - xi_eta(s))));
  rep.checks.push_back(named("eta_phi_zero", compare(contract(tensor_product(s.eta, s.phi), 0, 1), FrameTensor(d, {L}))));
  rep.checks.push_back(scalar_check("eta_xi_one", contract(tensor_product(s.eta, s.xi), 0, 1).flat(0), Scalar(1)));
  rep.checks.push_back(scalar_check("trace_phi_zero", contract(s.phi, 0, 1).flat(0), Scalar(0)));

  // g(phi x, phi y): phi(a,i) phi(b,j) g_ab
  const FrameTensor gp = g_phi(s);  // (a, j) = g(e_a, phi e_j)
  const FrameTensor phi_g_phi = contract(tensor_product(s.phi, gp), 0, 2);  // (i, j)
  rep.checks.push_back(named("compatibility", compare(phi_g_phi, g - tensor_product(s.eta, s.eta))));
  rep.checks.push_back(named("phi_self_adjoint", compare(permute(gp, {1, 0}), gp)));
  rep.checks.push_back(named("g_xi_eta", compare(lower(s.xi, 0, g), s.eta)));

  const FrameTensor xi_low = lower(s.xi, 0, g);
  rep.checks.push_back(scalar_check("g_xi_xi_one", contract(tensor_product(xi_low, s.xi), 0, 1).flat(0), Scalar(1)));

  NamedCheck eta_nabla{"eta_nabla_xi_zero", true, std::nullopt, ""};
  auto jac = check_jacobi(s.frame);
  if (!jac.holds) {
    eta_nabla.passed = false;
    eta_nabla.detail = "connection undefined: Jacobi identity fails";
  } else {
    const Connection conn = levi_civita(s.frame);
    const FrameTensor nxi = nabla_vector(conn, s.xi);  // (i, l)
    eta_nabla = named("eta_nabla_xi_zero", compare(contract(tensor_product(nxi, s.eta), 1, 2), FrameTensor(d, {L})));
  }
  rep.checks.push_back(std::move(eta_nabla));
  return rep;
}

FrameTensor associated_metric(const PiStructure& s) { return g_phi(s) + tensor_product(s.eta, s.eta); }

FrameTensor nabla_phi(const PiStructure& s, const Connection& conn) { return covariant_derivative(conn, s.phi); }

FrameTensor para_sasaki_rhs(const PiStructure& s) {
  const std::size_t d = s.dim();
  const FrameTensor& g = s.frame.metric();
  FrameTensor rhs(d, {L, U, L});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar v = -(g({i, j}) * s.xi({l}));
        if (l == i) v -= s.eta({j});
        v += Scalar(2) * s.eta({i}) * s.eta({j}) * s.xi({l});
        rhs({i, l, j}) = std::move(v);
      }
  return rhs;
}

CheckOutcome is_para_sasaki(const PiStructure& s, const Connection& conn) {
  CheckOutcome o = compare(nabla_phi(s, conn), para_sasaki_rhs(s));
  if (!o.holds) o.witness = MultiIndex{(*o.witness)[0], (*o.witness)[2]};
  return o;
}

std::vector<NamedCheck> check_para_sasaki_identities(const PiStructure& s, const Connection& conn,
                                                     const CurvatureData& curv) {
  const std::size_t d = s.dim();
  const Scalar two_n(static_cast<long>(2 * s.n));
  std::vector<NamedCheck> out;

  // nabla_x xi = phi x: (i, l) against phi(l, i)
  out.push_back(named("nabla_xi_eq_phi", compare(nabla_vector(conn, s.xi), permute(s.phi, {1, 0}))));
  // (nabla_x eta)(y) = g(x, phi y)
  out.push_back(named("nabla_eta_eq_g_phi", compare(covariant_derivative(conn, s.eta), g_phi(s))));

  // R(e_i,e_j) xi as (l, i, j)
  const FrameTensor r_xi = contract(tensor_product(curv.riemann, s.xi), 3, 4);
  FrameTensor r_xi_rhs(d, {U, L, L});
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar v;
        if (l == i) v -= s.eta({j});
        if (l == j) v += s.eta({i});
        r_xi_rhs({l, i, j}) = std::move(v);
      }
  out.push_back(named("curvature_xy_xi", compare(r_xi, r_xi_rhs)));

  // R(xi, e_j) xi as (l, j)
  const FrameTensor r_xi_y_xi = contract(tensor_product(r_xi, s.xi), 1, 3);
  out.push_back(named("curvature_xi_y_xi", compare(r_xi_y_xi, compose(s.phi, s.phi))));

  const FrameTensor rho_xi = contract(tensor_product(curv.ricci, s.xi), 1, 2);  // (i)
  out.push_back(named("ricci_x_xi", compare(rho_xi, scale(-two_n, s.eta))));
  const Scalar rho_xi_xi = contract(tensor_product(rho_xi, s.xi), 0, 1).flat(0);
  out.push_back(scalar_check("ricci_xi_xi", rho_xi_xi, -two_n));
  return out;
}

Scalar tau_tilde(const PiStructure& s, const CurvatureData& curv) {
  // rho(e_i, phi e_j) = sum_b rho_{ib} phi(b, j)
  const FrameTensor rho_phi = contract(tensor_product(curv.ricci, s.phi), 1, 2);  // (i, j)
  const FrameTensor traced = contract(contract(tensor_product(s.frame.metric_inverse(), rho_phi), 0, 2), 0, 1);
  return traced.flat(0) + evaluate(curv.ricci, s.xi, s.xi);
}

Scalar evaluate(const FrameTensor& form, const FrameTensor& x, const FrameTensor& y) {
  if (form.rank() != 2) throw TensorError("evaluate needs a rank-2 form");
  Scalar sum;
  for (std::size_t i = 0; i < form.dim(); ++i)
    for (std::size_t j = 0; j < form.dim(); ++j) {
      if (x({i}).is_zero() || y({j}).is_zero()) continue;
      sum += form({i, j}) * x({i}) * y({j});
    }
  return sum;
}

FrameTensor basis_vector(std::size_t dim, std::size_t i) {
  FrameTensor v(dim, {U});
  v({i}) = Scalar(1);
  return v;
}

FrameTensor apply(const FrameTensor& endomorphism, const FrameTensor& x) {
  return contract(tensor_product(endomorphism, x), 1, 2);
}

}  // namespace pisol
