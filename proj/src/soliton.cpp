#include "pisol/soliton.hpp"

#include <algorithm>

namespace pisol {

namespace {

constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;

NamedCheck make_check(std::string name, bool passed, std::string detail = {},
                      std::optional<MultiIndex> witness = std::nullopt) {
  NamedCheck c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  return c;
}

NamedCheck equality_check(std::string name, const Scalar& lhs, const Scalar& rhs) {
  bool ok = lhs == rhs;
  return make_check(std::move(name), ok, ok ? std::string{} : lhs.to_string() + " != " + rhs.to_string());
}

NamedCheck tensor_check(std::string name, const FrameTensor& lhs, const FrameTensor& rhs) {
  CheckOutcome o = compare(lhs, rhs);
  return make_check(std::move(name), o.holds, {}, o.witness);
}

Scalar two_n(const PiStructure& s) { return Scalar(static_cast<long>(2 * s.n)); }

FrameTensor eta_eta(const PiStructure& s) { return tensor_product(s.eta, s.eta); }

// (x, y) -> g(x, phi y)
FrameTensor g_phi(const PiStructure& s) { return lower(s.phi, 0, s.frame.metric()); }

// (x, y) -> T(phi x, phi y) for a (0,2)-tensor T
FrameTensor phi_phi(const PiStructure& s, const FrameTensor& t) {
  FrameTensor left = contract(tensor_product(s.phi, t), 0, 2);        // (x, b) = sum_a phi(a,x) t(a,b)
  return contract(tensor_product(left, s.phi), 1, 2);                 // (x, y)
}

// (x, y) -> T(x, phi y)
FrameTensor right_phi(const PiStructure& s, const FrameTensor& t) {
  return contract(tensor_product(t, s.phi), 1, 2);
}

// (x,y,z) -> A(x,y) eta(z) + A(x,z) eta(y)
FrameTensor symmetric_eta_extension(const PiStructure& s, const FrameTensor& a) {
  FrameTensor first = tensor_product(a, s.eta);  // (x,y,z) = A(x,y) eta(z)
  return first + permute(first, {0, 2, 1});
}

bool para_sasaki_like(const PiStructure& s, const Connection& conn) { return is_para_sasaki(s, conn).holds; }

std::string unused_symbol(const ParamSet& params) {
  std::string name = "k";
  while (params.index_of(name)) name += "_";
  return name;
}

}  // namespace

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::exact_fit: return "exact_fit";
    case FitStatus::no_fit: return "no_fit";
    case FitStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(EinsteinKind k) {
  switch (k) {
    case EinsteinKind::einstein: return "einstein";
    case EinsteinKind::eta_einstein: return "eta_einstein";
    case EinsteinKind::para_einstein_like: return "para_einstein_like";
  }
  return "?";
}

std::string to_string(RecurrenceStatus s) {
  switch (s) {
    case RecurrenceStatus::verified: return "verified";
    case RecurrenceStatus::excluded_case: return "excluded_case";
    case RecurrenceStatus::failed: return "failed";
    case RecurrenceStatus::precondition_unmet: return "precondition_unmet";
  }
  return "?";
}

namespace {

FitStatus fit_status(LinearSystem::Status st) {
  switch (st) {
    case LinearSystem::Status::unique:
    case LinearSystem::Status::family: return FitStatus::exact_fit;
    case LinearSystem::Status::inconsistent: return FitStatus::no_fit;
    case LinearSystem::Status::indeterminate: return FitStatus::indeterminate;
  }
  return FitStatus::no_fit;
}

// Solves x0 g + x1 g~ + x2 eta(x)eta = target componentwise.
LinearSystem::Solution solve_in_structure_span(const PiStructure& s, const FrameTensor& target) {
  const FrameTensor& g = s.frame.metric();
  const FrameTensor gt = associated_metric(s);
  const FrameTensor ee = eta_eta(s);
  LinearSystem sys(3);
  for (std::size_t f = 0; f < target.size(); ++f)
    sys.add({g.flat(f), gt.flat(f), ee.flat(f)}, target.flat(f), target.unflatten(f));
  return sys.solve();
}

}  // namespace

// ------------------------------------------------------------ Einstein-like

EinsteinLikeSolution solve_einstein_like(const PiStructure& s, const CurvatureData& curv) {
  auto sol = solve_in_structure_span(s, curv.ricci);
  EinsteinLikeSolution out;
  out.status = fit_status(sol.status);
  out.witness = sol.witness;
  if (out.status != FitStatus::exact_fit) return out;
  out.a = sol.particular[0];
  out.b = sol.particular[1];
  out.c = sol.particular[2];
  out.free_directions = sol.nullspace.size();
  if (out.b.is_zero() && out.c.is_zero())
    out.kind = EinsteinKind::einstein;
  else if (out.b.is_zero())
    out.kind = EinsteinKind::eta_einstein;
  else
    out.kind = EinsteinKind::para_einstein_like;
  return out;
}

std::vector<NamedCheck> einstein_like_trace_checks(const PiStructure& s, const CurvatureData& curv,
                                                   const EinsteinLikeSolution& sol) {
  std::vector<NamedCheck> out;
  if (sol.status != FitStatus::exact_fit) return out;
  out.push_back(equality_check("a_plus_b_plus_c_eq_minus_2n", sol.a + sol.b + sol.c, -two_n(s)));
  out.push_back(equality_check("tau_eq_2n_a_minus_1", curv.tau, two_n(s) * (sol.a - Scalar(1))));
  out.push_back(equality_check("tau_tilde_eq_2n_b_minus_1", tau_tilde(s, curv), two_n(s) * (sol.b - Scalar(1))));
  return out;
}

// ---------------------------------------------------------------- solitons

namespace {

SolitonSolution solve_soliton_with_k(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                                     const Scalar& k, Potential::Kind kind) {
  const FrameTensor v = scale(k, s.xi);
  const FrameTensor lie = lie_derivative_metric(s.frame, conn, v);
  // lambda g + mu g~ + nu eta(x)eta = -rho - 1/2 L_v g
  const FrameTensor target = -(curv.ricci + lie.map([](const Scalar& x) { return x.div_rational(2); }));
  auto sol = solve_in_structure_span(s, target);
  SolitonSolution out;
  out.potential = kind;
  out.k = k;
  out.status = fit_status(sol.status);
  out.witness = sol.witness;
  if (out.status != FitStatus::exact_fit) return out;
  out.lambda = sol.particular[0];
  out.mu = sol.particular[1];
  out.nu = sol.particular[2];
  out.free_directions = sol.nullspace.size();
  return out;
}

void add_collinear_checks(const PiStructure& s, const CurvatureData& curv, SolitonSolution& out, const Scalar& k,
                          const Scalar& lambda, const Scalar& mu, const Scalar& nu) {
  out.checks.push_back(equality_check("k_eq_minus_mu", k, -mu));
  out.checks.push_back(equality_check("lambda_plus_nu_eq_k_plus_2n", lambda + nu, k + two_n(s)));
  auto el = solve_einstein_like(s, curv);
  if (el.status != FitStatus::exact_fit) {
    out.checks.push_back(make_check("eta_einstein_constants", false, "not Einstein-like"));
    return;
  }
  bool ok = el.a == -lambda && el.b.is_zero() && el.c == lambda - two_n(s);
  out.checks.push_back(make_check("eta_einstein_constants", ok,
                                  "(a,b,c) = (" + el.a.to_string() + ", " + el.b.to_string() + ", " +
                                      el.c.to_string() + ")"));
}

}  // namespace

SolitonSolution solve_soliton(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                              const Potential& potential) {
  const bool sasaki = para_sasaki_like(s, conn);

  if (potential.kind != Potential::Kind::collinear_free) {
    const Scalar k = potential.kind == Potential::Kind::reeb ? Scalar(1) : potential.k;
    SolitonSolution out = solve_soliton_with_k(s, conn, curv, k, potential.kind);
    if (out.status == FitStatus::exact_fit && sasaki) {
      if (potential.kind == Potential::Kind::reeb)
        out.checks.push_back(equality_check("lambda_plus_mu_plus_nu_eq_2n", out.lambda + out.mu + out.nu, two_n(s)));
      else
        add_collinear_checks(s, curv, out, out.k, out.lambda, out.mu, out.nu);
    }
    return out;
  }

  // k free: solve over the parameters extended by a symbol for k
  const ParamSet base = s.frame.params();
  const std::string sym = unused_symbol(base);
  const ParamSet extended = base.extended({sym});
  const PiStructure lifted = s.lifted(extended);
  const Connection lconn{conn.gamma.map([&](const Scalar& x) { return x.lift(extended); })};
  CurvatureData lcurv = curv;
  lcurv.ricci = curv.ricci.map([&](const Scalar& x) { return x.lift(extended); });
  const Scalar k_sym = Scalar::variable(extended, sym);

  SolitonSolution fam = solve_soliton_with_k(lifted, lconn, lcurv, k_sym, Potential::Kind::collinear_free);
  SolitonSolution out;
  out.potential = Potential::Kind::collinear_free;
  out.status = fam.status;
  out.witness = fam.witness;
  out.k_symbol = sym;
  out.family_params = extended;
  if (out.status != FitStatus::exact_fit) return out;
  out.family_lambda = fam.lambda;
  out.family_mu = fam.mu;
  out.family_nu = fam.nu;
  out.free_directions = fam.free_directions;

  // representative member k = 1 (v = xi)
  const std::size_t k_index = *extended.index_of(sym);
  auto at_one = [&](const Scalar& x) { return x.substitute(k_index, Scalar(1)).restrict_to(base); };
  out.k = Scalar::constant(base, 1);
  out.lambda = at_one(fam.lambda);
  out.mu = at_one(fam.mu);
  out.nu = at_one(fam.nu);

  if (sasaki) {
    // relations hold identically in k over the whole family
    SolitonSolution tmp;
    add_collinear_checks(lifted, lcurv, tmp, k_sym, fam.lambda, fam.mu, fam.nu);
    out.checks = std::move(tmp.checks);
  }
  return out;
}

CorrespondenceReport check_soliton_einstein_correspondence(const PiStructure& s, const Connection& conn,
                                                           const CurvatureData& curv) {
  CorrespondenceReport rep;
  if (!para_sasaki_like(s, conn)) {
    rep.reason = "structure is not para-Sasaki-like";
    return rep;
  }
  rep.precondition_met = true;
  rep.einstein_like = solve_einstein_like(s, curv);
  rep.soliton = solve_soliton(s, conn, curv, Potential::reeb());
  const bool el_fit = rep.einstein_like.status == FitStatus::exact_fit;
  const bool so_fit = rep.soliton.status == FitStatus::exact_fit;
  rep.checks.push_back(make_check("fit_together", el_fit == so_fit,
                                  std::string("einstein_like ") + (el_fit ? "fits" : "does not fit") + ", soliton " +
                                      (so_fit ? "fits" : "does not fit")));
  if (!el_fit || !so_fit) return rep;

  const auto& e = rep.einstein_like;
  const auto& sl = rep.soliton;
  const Scalar one(1), tn = two_n(s);
  rep.checks.push_back(equality_check("a_plus_lambda_zero", e.a + sl.lambda, Scalar(0)));
  rep.checks.push_back(equality_check("b_plus_mu_plus_1_zero", e.b + sl.mu + one, Scalar(0)));
  rep.checks.push_back(equality_check("c_plus_nu_minus_1_zero", e.c + sl.nu - one, Scalar(0)));

  auto implication = [&](std::string name, bool premise, bool conclusion, const std::string& what) {
    rep.checks.push_back(make_check(std::move(name), !premise || conclusion, premise ? what : "premise not met"));
  };
  implication("case_eta_ricci_soliton", sl.mu.is_zero(),
              e.a == -sl.lambda && e.b == -one && e.c == sl.lambda - tn + one,
              "mu = 0 implies (a,b,c) = (-lambda, -1, lambda - 2n + 1)");
  implication("case_shrinking_ricci_soliton", sl.lambda == tn && sl.mu.is_zero() && sl.nu.is_zero(),
              e.a == -tn && e.b == -one && e.c == one, "(lambda,mu,nu) = (2n,0,0) implies (a,b,c) = (-2n,-1,1)");
  implication("case_eta_einstein", e.b.is_zero(),
              sl.lambda == -e.a && sl.mu == -one && sl.nu == e.a + tn + one,
              "b = 0 implies (lambda,mu,nu) = (-a, -1, a + 2n + 1)");
  implication("case_einstein", e.b.is_zero() && e.c.is_zero(),
              e.a == -tn && sl.lambda == tn && sl.mu == -one && sl.nu == one,
              "b = c = 0 implies a = -2n and (lambda,mu,nu) = (2n,-1,1)");
  return rep;
}

// ------------------------------------------------------------ nabla rho

FrameTensor nabla_rho_reeb_closed_form(const PiStructure& s, const Scalar& mu, const Scalar& nu) {
  const FrameTensor a = phi_phi(s, s.frame.metric());
  const FrameTensor b = g_phi(s);
  return scale(mu + Scalar(1), symmetric_eta_extension(s, a)) - scale(mu + nu, symmetric_eta_extension(s, b));
}

FrameTensor nabla_rho_collinear_closed_form(const PiStructure& s, const Scalar& lambda) {
  return scale(lambda - two_n(s), symmetric_eta_extension(s, g_phi(s)));
}

NablaRhoReport nabla_rho(const PiStructure& s, const Connection& conn, const CurvatureData& curv) {
  NablaRhoReport rep;
  rep.nabla_rho = covariant_derivative(conn, curv.ricci);
  if (!para_sasaki_like(s, conn)) return rep;

  auto reeb = solve_soliton(s, conn, curv, Potential::reeb());
  if (reeb.status == FitStatus::exact_fit)
    rep.checks.push_back(tensor_check("reeb_closed_form", rep.nabla_rho, nabla_rho_reeb_closed_form(s, reeb.mu, reeb.nu)));
  auto collinear = solve_soliton(s, conn, curv, Potential::collinear_free());
  if (collinear.status == FitStatus::exact_fit)
    rep.checks.push_back(
        tensor_check("collinear_closed_form", rep.nabla_rho, nabla_rho_collinear_closed_form(s, collinear.lambda)));
  return rep;
}

RecurrenceResult check_recurrence(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                                  const SolitonSolution& sol) {
  RecurrenceResult r;
  if (sol.status != FitStatus::exact_fit || sol.potential != Potential::Kind::reeb) {
    r.reason = "requires a soliton with potential xi";
    return r;
  }
  const Scalar one(1);
  const Scalar mu1 = sol.mu + one;
  if (sol.lambda.is_zero() && mu1.is_zero()) {
    r.status = RecurrenceStatus::excluded_case;
    r.reason = "(lambda, mu) = (0, -1)";
    return r;
  }
  const Scalar denom = mu1 * mu1 - sol.lambda * sol.lambda;
  if (denom.is_zero()) {
    r.status = RecurrenceStatus::excluded_case;
    r.reason = "(mu+1)^2 - lambda^2 vanishes";
    return r;
  }
  const Scalar num_a = sol.lambda * (sol.lambda - two_n(s)) - mu1 * mu1;
  const Scalar num_b = two_n(s) * mu1;

  const FrameTensor& rho = curv.ricci;
  const FrameTensor lhs = scale(denom, covariant_derivative(conn, rho));
  const FrameTensor rhs = scale(num_a, symmetric_eta_extension(s, right_phi(s, rho))) -
                          scale(num_b, symmetric_eta_extension(s, phi_phi(s, rho)));
  CheckOutcome o = compare(lhs, rhs);
  r.status = o.holds ? RecurrenceStatus::verified : RecurrenceStatus::failed;
  r.witness = o.witness;
  if (!o.holds) r.reason = "formula disagrees with nabla rho";
  return r;
}

// ---------------------------------------------------------- classification

namespace {

Verdict zero_verdict(const FrameTensor& t) {
  Verdict v;
  auto nz = t.first_nonzero();
  v.holds = !nz.has_value();
  v.witness = nz;
  return v;
}

Verdict requires_nonzero_ricci(Verdict v, const FrameTensor& rho) {
  if (v.holds && rho.is_zero()) {
    v.holds = false;
    v.note = "Ricci tensor vanishes";
  }
  return v;
}

// generic constant-1-form solver; alpha_weight_x is the coefficient of
// alpha(x) rho(y,z) and with_beta adds beta(x) rho(y,z)
FormSolve solve_forms(const FrameTensor& rho, const FrameTensor& nrho, const Scalar& alpha_weight_x, bool with_beta) {
  const std::size_t d = rho.dim();
  const std::size_t unknowns = with_beta ? 2 * d : d;
  LinearSystem sys(unknowns);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        std::vector<Scalar> coeffs(unknowns);
        coeffs[x] += alpha_weight_x * rho({y, z});
        coeffs[y] += rho({x, z});
        coeffs[z] += rho({x, y});
        if (with_beta) coeffs[d + x] += rho({y, z});
        sys.add(std::move(coeffs), nrho({x, y, z}), MultiIndex{x, y, z});
      }
  auto sol = sys.solve();
  FormSolve out;
  out.status = sol.status;
  out.witness = sol.witness;
  if (!sol.consistent()) {
    out.note = sol.status == LinearSystem::Status::inconsistent ? "no constant 1-forms satisfy the equation"
                                                                 : "undecidable without fixing parameters";
    return out;
  }
  out.free_directions = sol.nullspace.size();

  auto alpha_nonzero = [&](const std::vector<Scalar>& v) {
    return std::any_of(v.begin(), v.begin() + static_cast<long>(d), [](const Scalar& c) { return !c.is_zero(); });
  };
  std::vector<Scalar> chosen = sol.particular;
  bool found = alpha_nonzero(chosen);
  for (std::size_t i = 0; !found && i < sol.nullspace.size(); ++i) {
    if (!alpha_nonzero(sol.nullspace[i])) continue;
    for (std::size_t c = 0; c < unknowns; ++c) chosen[c] += sol.nullspace[i][c];
    found = true;
  }
  out.alpha.assign(chosen.begin(), chosen.begin() + static_cast<long>(d));
  if (with_beta) out.beta.assign(chosen.begin() + static_cast<long>(d), chosen.end());
  if (!found) {
    out.note = "only a vanishing alpha satisfies the equation";
    return out;
  }
  if (rho.is_zero()) {
    out.note = "Ricci tensor vanishes";
    return out;
  }
  out.holds = true;
  return out;
}

}  // namespace

FormSolve solve_almost_pseudo_ricci_symmetric(const FrameTensor& ricci, const FrameTensor& nabla_ricci) {
  return solve_forms(ricci, nabla_ricci, Scalar(1), true);
}

FormSolve solve_special_weakly_ricci_symmetric(const FrameTensor& ricci, const FrameTensor& nabla_ricci) {
  return solve_forms(ricci, nabla_ricci, Scalar(2), false);
}

ClassificationReport classify(const PiStructure& s, const Connection& conn, const CurvatureData& curv) {
  ClassificationReport rep;
  const FrameTensor& rho = curv.ricci;
  const FrameTensor nrho = covariant_derivative(conn, rho);  // (x,y,z)

  rep.locally_ricci_symmetric = zero_verdict(nrho);

  // (nabla_x rho)(phi y, phi z): phi maps onto ker eta
  {
    FrameTensor t = contract(tensor_product(nrho, s.phi), 1, 3);  // (x, z, q): sum_a phi(a,q) nrho(x,a,z)
    t = contract(tensor_product(t, s.phi), 1, 3);                 // (x, q, r)
    rep.ricci_eta_parallel = zero_verdict(t);
    if (!rep.ricci_eta_parallel.holds) rep.ricci_eta_parallel.note = "witness (x, q, r) evaluates at (e_x, phi e_q, phi e_r)";
  }
  rep.ricci_parallel_along_xi = zero_verdict(contract(tensor_product(s.xi, nrho), 0, 1));

  auto reeb = solve_soliton(s, conn, curv, Potential::reeb());
  rep.recurrence = check_recurrence(s, conn, curv, reeb);

  // rho(R(x,y)z, w) + rho(z, R(x,y)w)
  {
    const FrameTensor rz = contract(tensor_product(curv.riemann, rho), 0, 4);  // (i,j,k,w)
    rep.ricci_semi_symmetric = zero_verdict(rz + permute(rz, {0, 1, 3, 2}));
  }

  // phi^2 (nabla_x Q) y
  {
    const FrameTensor nq = covariant_derivative(conn, curv.ricci_operator);  // (x, l, y)
    const FrameTensor phi2 = compose(s.phi, s.phi);
    const FrameTensor projected = contract(tensor_product(phi2, nq), 1, 3);  // (a, x, y)
    const FrameTensor by_args = permute(projected, {1, 0, 2});              // (x, a, y)
    rep.globally_phi_symmetric = requires_nonzero_ricci(zero_verdict(by_args), rho);
    // restrict x and y to ker eta through x = phi e_p, y = phi e_q
    FrameTensor local = contract(tensor_product(s.phi, by_args), 0, 2);  // (p, a, y)
    local = contract(tensor_product(local, s.phi), 2, 3);                 // (p, a, q)
    rep.locally_phi_symmetric = requires_nonzero_ricci(zero_verdict(local), rho);
    if (!rep.locally_phi_symmetric.holds && rep.locally_phi_symmetric.witness)
      rep.locally_phi_symmetric.note = "witness (p, a, q): e_a component at x = phi e_p, y = phi e_q";
  }

  rep.cyclic_parallel =
      requires_nonzero_ricci(zero_verdict(nrho + permute(nrho, {2, 0, 1}) + permute(nrho, {1, 2, 0})), rho);
  rep.codazzi = requires_nonzero_ricci(zero_verdict(nrho - permute(nrho, {1, 0, 2})), rho);

  rep.almost_pseudo_ricci_symmetric = solve_almost_pseudo_ricci_symmetric(rho, nrho);
  rep.special_weakly_ricci_symmetric = solve_special_weakly_ricci_symmetric(rho, nrho);

  {
    LinearSystem sys(1);
    for (std::size_t f = 0; f < rho.size(); ++f)
      sys.add({s.frame.metric().flat(f)}, rho.flat(f), rho.unflatten(f));
    auto sol = sys.solve();
    rep.einstein.holds = sol.consistent();
    rep.einstein.witness = sol.witness;
    if (sol.consistent()) rep.einstein_constant = sol.particular[0];
  }

  rep.notes.push_back(
      "almost pseudo / special weakly Ricci symmetric: last term read as alpha(z) rho(x,y); a 1-form counts as "
      "non-vanishing when one of its constant frame components is nonzero");
  rep.notes.push_back("cyclic parallel, Codazzi, phi-symmetric and the 1-form definitions require a non-vanishing Ricci tensor");
  return rep;
}

// --------------------------------------------------------- parallel tensors

ParallelTensorReport check_parallel_tensor(const PiStructure& s, const Connection& conn, const FrameTensor& h) {
  if (h.rank() != 2 || h.signature() != Signature{L, L} || h.dim() != s.dim())
    throw TensorError("h must be a (0,2)-tensor of the frame dimension");
  if (!is_symmetric(h, 0, 1)) throw TensorError("h is not symmetric");

  ParallelTensorReport rep;
  if (!para_sasaki_like(s, conn)) {
    rep.precondition_met = false;
    rep.reason = "structure is not para-Sasaki-like";
  }
  rep.nabla_h = covariant_derivative(conn, h);
  auto nz = rep.nabla_h.first_nonzero();
  rep.parallel = !nz.has_value();
  rep.witness = nz;
  rep.h_xi_xi = evaluate(h, s.xi, s.xi);
  if (rep.parallel)
    rep.multiple_of_metric = tensor_check("h_eq_h_xi_xi_g", h, scale(rep.h_xi_xi, s.frame.metric()));

  const CurvatureData curv = curvature(s.frame, conn);
  const FrameTensor h_xi = contract(tensor_product(h, s.xi), 1, 2);                        // (l)
  const FrameTensor r_xi = contract(tensor_product(curv.riemann, s.xi), 3, 4);             // (l, i, j)
  const FrameTensor h_r = contract(tensor_product(h_xi, r_xi), 0, 1);                      // (i, j)
  rep.h_curvature_xi_xi = tensor_check("h_R_xi_xi_zero", h_r, FrameTensor(s.dim(), {L, L}));
  rep.h_x_xi = tensor_check("h_x_xi_eq_h_xi_xi_eta", h_xi, scale(rep.h_xi_xi, s.eta));
  return rep;
}

HTensorReport build_h_and_check(const PiStructure& s, const Connection& conn, const CurvatureData& curv,
                                const Scalar& mu, const Scalar& nu) {
  HTensorReport rep;
  const FrameTensor lie = lie_derivative_metric(s.frame, conn, s.xi);
  rep.h = lie.map([](const Scalar& x) { return x.div_rational(2); }) + curv.ricci + scale(mu, associated_metric(s)) +
          scale(nu, eta_eta(s));
  rep.parallel = check_parallel_tensor(s, conn, rep.h);

  auto soliton = solve_soliton(s, conn, curv, Potential::reeb());
  const bool soliton_matches =
      soliton.status == FitStatus::exact_fit && soliton.mu == mu && soliton.nu == nu;

  if (rep.parallel.parallel) {
    rep.lambda = -rep.parallel.h_xi_xi;
    rep.checks.push_back(equality_check("lambda_eq_2n_minus_mu_minus_nu", *rep.lambda, two_n(s) - mu - nu));
    bool ok = soliton_matches && soliton.lambda == *rep.lambda;
    rep.checks.push_back(make_check("soliton_with_constants", ok,
                                    soliton.status == FitStatus::exact_fit
                                        ? "(lambda,mu,nu) = (" + soliton.lambda.to_string() + ", " +
                                              soliton.mu.to_string() + ", " + soliton.nu.to_string() + ")"
                                        : "no soliton with potential xi"));
  }
  if (soliton_matches) {
    const bool h_is = rep.h == scale(-soliton.lambda, s.frame.metric());
    rep.checks.push_back(make_check("soliton_implies_parallel", h_is && rep.parallel.parallel,
                                    "h = -lambda g with lambda = " + soliton.lambda.to_string()));
  }
  rep.checks.push_back(make_check("parallel_iff_soliton", rep.parallel.parallel == soliton_matches));
  return rep;
}

}  // namespace pisol
