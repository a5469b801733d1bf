#include "pisol/suite.hpp"

#include <algorithm>
#include <sstream>

namespace pisol {

using json = nlohmann::ordered_json;

const std::vector<Section>& all_sections() {
  static const std::vector<Section> all = {
      Section::jacobi,         Section::axioms,    Section::connection,     Section::curvature,
      Section::para_sasaki,    Section::identities, Section::einstein_like, Section::soliton,
      Section::correspondence, Section::nabla_rho, Section::recurrence,     Section::classification,
      Section::parallel_tensor,
  };
  return all;
}

std::string to_string(Section s) {
  switch (s) {
    case Section::jacobi: return "jacobi";
    case Section::axioms: return "axioms";
    case Section::connection: return "connection";
    case Section::curvature: return "curvature";
    case Section::para_sasaki: return "para_sasaki";
    case Section::identities: return "identities";
    case Section::einstein_like: return "einstein_like";
    case Section::soliton: return "soliton";
    case Section::correspondence: return "correspondence";
    case Section::nabla_rho: return "nabla_rho";
    case Section::recurrence: return "recurrence";
    case Section::classification: return "classification";
    case Section::parallel_tensor: return "parallel_tensor";
  }
  return "?";
}

std::optional<Section> section_from_string(std::string_view name) {
  for (Section s : all_sections())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::fit: return "fit";
    case Outcome::no_fit: return "no_fit";
    case Outcome::excluded: return "excluded";
    case Outcome::skipped: return "skipped";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "?";
}

int RunReport::exit_code() const {
  for (const auto& c : checks)
    if (c.outcome != Outcome::pass && c.outcome != Outcome::fit && c.outcome != Outcome::excluded) return 1;
  return 0;
}

namespace {

json scalar_json(const Scalar& s) { return s.to_string(); }

json nonzero_json(const FrameTensor& t) {
  json arr = json::array();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.flat(f).is_zero()) continue;
    json entry = json::array();
    for (std::size_t i : t.unflatten(f)) entry.push_back(std::to_string(i));
    entry.push_back(t.flat(f).to_string());
    arr.push_back(std::move(entry));
  }
  return arr;
}

json witness_json(const std::optional<MultiIndex>& w) {
  if (!w) return nullptr;
  return json(*w);
}

Outcome fit_outcome(FitStatus s) {
  switch (s) {
    case FitStatus::exact_fit: return Outcome::fit;
    case FitStatus::no_fit: return Outcome::no_fit;
    case FitStatus::indeterminate: return Outcome::indeterminate;
  }
  return Outcome::no_fit;
}

Outcome pass_fail(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

Scalar parse_option(const std::string& what, const std::string& text, const ParamSet& params) {
  try {
    return parse(text, params);
  } catch (const ParseError& e) {
    throw SpecError("--" + what + ": " + e.what());
  }
}

class Builder {
public:
  Builder(RunReport& rep, const SuiteOptions& opt) : rep_(rep), opt_(opt) {}

  bool on(Section s) const { return opt_.sections.count(s) != 0; }

  void check(Section s, std::string name, Outcome o, std::optional<MultiIndex> witness = std::nullopt,
             std::string detail = {}) {
    if (on(s)) rep_.checks.push_back({s, std::move(name), o, std::move(witness), std::move(detail)});
  }
  void check(Section s, const NamedCheck& c, const std::string& prefix = {}) {
    check(s, prefix + c.name, pass_fail(c.passed), c.witness, c.detail);
  }
  void check(Section s, const std::string& name, const CheckOutcome& c) {
    check(s, name, pass_fail(c.holds), c.witness);
  }

  void value(Section s, const std::string& key, json v) {
    if (on(s)) rep_.values[key] = std::move(v);
  }
  void note(Section s, std::string text) {
    if (on(s) && std::find(rep_.notes.begin(), rep_.notes.end(), text) == rep_.notes.end())
      rep_.notes.push_back(std::move(text));
  }

  /// Marks every requested section from `first` on as skipped.
  void skip_from(Section first, const std::string& reason) {
    for (Section s : all_sections())
      if (s >= first) check(s, to_string(s), Outcome::skipped, std::nullopt, reason);
  }

private:
  RunReport& rep_;
  const SuiteOptions& opt_;
};

void report_verdict(Builder& b, const std::string& name, const Verdict& v) {
  const std::string key = "classification." + name;
  b.value(Section::classification, key, v.holds);
  if (v.witness) b.value(Section::classification, key + ".witness", *v.witness);
  if (!v.note.empty()) b.value(Section::classification, key + ".note", v.note);
}

void report_forms(Builder& b, const std::string& name, const FormSolve& f) {
  const std::string key = "classification." + name;
  b.value(Section::classification, key, f.holds);
  if (!f.alpha.empty()) {
    json a = json::array();
    for (const auto& x : f.alpha) a.push_back(x.to_string());
    b.value(Section::classification, key + ".alpha", a);
  }
  if (!f.beta.empty()) {
    json a = json::array();
    for (const auto& x : f.beta) a.push_back(x.to_string());
    b.value(Section::classification, key + ".beta", a);
  }
  if (f.witness) b.value(Section::classification, key + ".witness", *f.witness);
  if (!f.note.empty()) b.value(Section::classification, key + ".note", f.note);
}

}  // namespace

RunReport run_suite(const ManifoldSpec& spec, const SuiteOptions& opt) {
  RunReport rep;
  rep.spec_name = spec.name;
  rep.dim = spec.dim;
  rep.substitutions = opt.substitutions;
  for (Section s : all_sections())
    if (opt.sections.count(s)) rep.sections.push_back(s);

  const PiStructure s = build_structure(spec, opt.substitutions);
  const ParamSet params = s.frame.params();
  rep.params = params.names();

  std::optional<Scalar> h_mu, h_nu, k_given;
  if (opt.h_mu.has_value() != opt.h_nu.has_value()) throw SpecError("--mu and --nu must be given together");
  if (opt.h_mu) {
    h_mu = parse_option("mu", *opt.h_mu, params);
    h_nu = parse_option("nu", *opt.h_nu, params);
  }
  if (opt.k) k_given = parse_option("k", *opt.k, params);

  Builder b(rep, opt);

  // Jacobi
  const JacobiResult jac = check_jacobi(s.frame);
  std::optional<MultiIndex> jw;
  if (jac.violation) jw = MultiIndex{(*jac.violation)[0], (*jac.violation)[1], (*jac.violation)[2]};
  b.check(Section::jacobi, "jacobi", pass_fail(jac.holds), jw);
  b.value(Section::jacobi, "structure.nonzero", nonzero_json(s.frame.structure()));

  // Axioms (the last one needs the connection and reports its own failure)
  const AxiomReport ax = check_axioms(s);
  for (const auto& c : ax.checks) b.check(Section::axioms, c);
  {
    const FrameTensor gt = associated_metric(s);
    b.value(Section::axioms, "associated_metric.nonzero", nonzero_json(gt));
    if (gt.is_constant() && is_symmetric(gt, 0, 1)) {
      const Inertia in = inertia(gt);
      b.value(Section::axioms, "associated_metric.signature", json::array({in.positive, in.negative}));
    }
  }
  if (!jac.holds) {
    b.skip_from(Section::connection, "Jacobi identity fails");
    return rep;
  }

  // Connection and curvature
  const Connection conn = levi_civita(s.frame);
  b.check(Section::connection, "torsion_free", check_torsion_free(s.frame, conn));
  b.check(Section::connection, "metric_compatible", check_metric_compatible(s.frame, conn));
  b.value(Section::connection, "connection.nonzero", nonzero_json(conn.gamma));

  const CurvatureData curv = curvature(s.frame, conn);
  b.check(Section::curvature, "first_bianchi", check_first_bianchi(curv));
  b.check(Section::curvature, "curvature_symmetries", check_curvature_symmetries(curv));
  b.check(Section::curvature, "ricci_symmetric", check_ricci_symmetric(curv));
  b.check(Section::curvature, "contracted_second_bianchi", second_bianchi_contracted_check(s.frame, conn, curv));
  b.value(Section::curvature, "riemann.nonzero", nonzero_json(curv.riemann));
  b.value(Section::curvature, "ricci.nonzero", nonzero_json(curv.ricci));
  b.value(Section::curvature, "tau", scalar_json(curv.tau));
  b.value(Section::curvature, "tau_tilde", scalar_json(tau_tilde(s, curv)));
  b.note(Section::curvature, "curvature convention: R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_[x,y], "
                             "rho(y,z) = trace of x -> R(x,y)z");
  b.note(Section::curvature, "tau_tilde is the contraction g^{ij} rho(e_i, phi e_j) + rho(xi, xi)");

  if (!ax.all_passed()) {
    b.skip_from(Section::para_sasaki, "structure axioms fail");
    return rep;
  }

  const CheckOutcome ps = is_para_sasaki(s, conn);
  b.check(Section::para_sasaki, "para_sasaki_like", pass_fail(ps.holds), ps.witness);
  b.value(Section::para_sasaki, "para_sasaki_like", ps.holds);
  if (!ps.holds) {
    b.skip_from(Section::identities, "structure is not para-Sasaki-like");
    return rep;
  }

  for (const auto& c : check_para_sasaki_identities(s, conn, curv)) b.check(Section::identities, c);

  // Einstein-like
  const EinsteinLikeSolution el = solve_einstein_like(s, curv);
  b.check(Section::einstein_like, "einstein_like", fit_outcome(el.status), el.witness);
  b.value(Section::einstein_like, "einstein_like.status", to_string(el.status));
  if (el.status == FitStatus::exact_fit) {
    b.value(Section::einstein_like, "einstein_like.a", scalar_json(el.a));
    b.value(Section::einstein_like, "einstein_like.b", scalar_json(el.b));
    b.value(Section::einstein_like, "einstein_like.c", scalar_json(el.c));
    b.value(Section::einstein_like, "einstein_like.kind", to_string(el.kind));
    for (const auto& c : einstein_like_trace_checks(s, curv, el)) b.check(Section::einstein_like, c);
  }

  // Solitons
  const SolitonSolution reeb = solve_soliton(s, conn, curv, Potential::reeb());
  b.check(Section::soliton, "reeb", fit_outcome(reeb.status), reeb.witness);
  b.value(Section::soliton, "soliton.reeb.status", to_string(reeb.status));
  if (reeb.status == FitStatus::exact_fit) {
    b.value(Section::soliton, "soliton.reeb.lambda", scalar_json(reeb.lambda));
    b.value(Section::soliton, "soliton.reeb.mu", scalar_json(reeb.mu));
    b.value(Section::soliton, "soliton.reeb.nu", scalar_json(reeb.nu));
  }
  for (const auto& c : reeb.checks) b.check(Section::soliton, c, "reeb.");

  const SolitonSolution col = solve_soliton(s, conn, curv, k_given ? Potential::collinear(*k_given) : Potential::collinear_free());
  b.check(Section::soliton, "collinear", fit_outcome(col.status), col.witness);
  b.value(Section::soliton, "soliton.collinear.status", to_string(col.status));
  b.value(Section::soliton, "soliton.collinear.k_given", k_given.has_value());
  if (col.status == FitStatus::exact_fit) {
    b.value(Section::soliton, "soliton.collinear.k", scalar_json(col.k));
    b.value(Section::soliton, "soliton.collinear.lambda", scalar_json(col.lambda));
    b.value(Section::soliton, "soliton.collinear.mu", scalar_json(col.mu));
    b.value(Section::soliton, "soliton.collinear.nu", scalar_json(col.nu));
    if (!k_given) {
      b.value(Section::soliton, "soliton.collinear.family.symbol", col.k_symbol);
      b.value(Section::soliton, "soliton.collinear.family.params", col.family_params.names());
      b.value(Section::soliton, "soliton.collinear.family.lambda", scalar_json(col.family_lambda));
      b.value(Section::soliton, "soliton.collinear.family.mu", scalar_json(col.family_mu));
      b.value(Section::soliton, "soliton.collinear.family.nu", scalar_json(col.family_nu));
      b.note(Section::soliton, "collinear potential v = k xi: k is solved as a free constant; the family is reported "
                               "in the symbol " + col.k_symbol + " and the member k = 1 (v = xi) is listed");
    }
  }
  for (const auto& c : col.checks) b.check(Section::soliton, c, "collinear.");

  // Correspondence
  {
    const CorrespondenceReport cr = check_soliton_einstein_correspondence(s, conn, curv);
    for (const auto& c : cr.checks) b.check(Section::correspondence, c);
  }

  // nabla rho
  const NablaRhoReport nr = nabla_rho(s, conn, curv);
  b.value(Section::nabla_rho, "nabla_rho.nonzero", nonzero_json(nr.nabla_rho));
  for (const auto& c : nr.checks) b.check(Section::nabla_rho, c);
  b.note(Section::nabla_rho,
         "nabla rho sign: components are computed by the Leibniz rule from the Levi-Civita connection and reported "
         "with their computed sign; closed forms are checked against them. On the built-in example the nonzero "
         "components are -4 (magnitude 4); a quoted value of +4 for these components differs in sign only.");

  // Recurrence
  {
    const RecurrenceResult rr = check_recurrence(s, conn, curv, reeb);
    Outcome o = Outcome::skipped;
    switch (rr.status) {
      case RecurrenceStatus::verified: o = Outcome::pass; break;
      case RecurrenceStatus::excluded_case: o = Outcome::excluded; break;
      case RecurrenceStatus::failed: o = Outcome::fail; break;
      case RecurrenceStatus::precondition_unmet: o = Outcome::skipped; break;
    }
    b.check(Section::recurrence, "recurrence", o, rr.witness, rr.reason);
    b.value(Section::recurrence, "recurrence.status", to_string(rr.status));
  }

  // Classification
  {
    const ClassificationReport cl = classify(s, conn, curv);
    report_verdict(b, "locally_ricci_symmetric", cl.locally_ricci_symmetric);
    report_verdict(b, "ricci_eta_parallel", cl.ricci_eta_parallel);
    report_verdict(b, "ricci_parallel_along_xi", cl.ricci_parallel_along_xi);
    b.value(Section::classification, "classification.recurrence", to_string(cl.recurrence.status));
    report_verdict(b, "ricci_semi_symmetric", cl.ricci_semi_symmetric);
    report_verdict(b, "globally_phi_symmetric", cl.globally_phi_symmetric);
    report_verdict(b, "locally_phi_symmetric", cl.locally_phi_symmetric);
    report_verdict(b, "cyclic_parallel", cl.cyclic_parallel);
    report_verdict(b, "codazzi", cl.codazzi);
    report_forms(b, "almost_pseudo_ricci_symmetric", cl.almost_pseudo_ricci_symmetric);
    report_forms(b, "special_weakly_ricci_symmetric", cl.special_weakly_ricci_symmetric);
    report_verdict(b, "einstein", cl.einstein);
    if (cl.einstein_constant) b.value(Section::classification, "classification.einstein.constant", scalar_json(*cl.einstein_constant));
    for (const auto& n : cl.notes) b.note(Section::classification, n);

    if (reeb.status == FitStatus::exact_fit) {
      const bool e = cl.einstein.holds;
      std::string bad;
      for (const auto& [name, v] : {std::pair{"ricci_semi_symmetric", cl.ricci_semi_symmetric.holds},
                                    std::pair{"globally_phi_symmetric", cl.globally_phi_symmetric.holds},
                                    std::pair{"cyclic_parallel", cl.cyclic_parallel.holds},
                                    std::pair{"codazzi", cl.codazzi.holds},
                                    std::pair{"locally_ricci_symmetric", cl.locally_ricci_symmetric.holds}})
        if (v != e) bad += std::string(bad.empty() ? "" : ", ") + name;
      b.check(Section::classification, "verdicts_match_einstein", pass_fail(bad.empty()), std::nullopt,
              bad.empty() ? std::string{} : "disagree with einstein: " + bad);
    } else {
      b.check(Section::classification, "verdicts_match_einstein", Outcome::skipped, std::nullopt,
              "no soliton with potential xi");
    }
  }

  // Parallel tensor h
  if (b.on(Section::parallel_tensor)) {
    if (!h_mu && reeb.status == FitStatus::exact_fit) {
      h_mu = reeb.mu;
      h_nu = reeb.nu;
    }
    if (!h_mu) {
      b.check(Section::parallel_tensor, "parallel_tensor", Outcome::skipped, std::nullopt,
              "no (mu, nu) given and no soliton with potential xi");
    } else {
      const HTensorReport hr = build_h_and_check(s, conn, curv, *h_mu, *h_nu);
      b.value(Section::parallel_tensor, "h.mu", scalar_json(*h_mu));
      b.value(Section::parallel_tensor, "h.nu", scalar_json(*h_nu));
      b.value(Section::parallel_tensor, "h.nonzero", nonzero_json(hr.h));
      b.value(Section::parallel_tensor, "h.parallel", hr.parallel.parallel);
      if (hr.parallel.witness) b.value(Section::parallel_tensor, "h.nabla_witness", *hr.parallel.witness);
      b.value(Section::parallel_tensor, "h.h_xi_xi", scalar_json(hr.parallel.h_xi_xi));
      if (hr.lambda) b.value(Section::parallel_tensor, "h.lambda", scalar_json(*hr.lambda));
      if (hr.parallel.parallel) {
        if (hr.parallel.multiple_of_metric) b.check(Section::parallel_tensor, *hr.parallel.multiple_of_metric);
        b.check(Section::parallel_tensor, hr.parallel.h_curvature_xi_xi);
        b.check(Section::parallel_tensor, hr.parallel.h_x_xi);
      } else {
        b.value(Section::parallel_tensor, "h.h_R_xi_xi_zero", hr.parallel.h_curvature_xi_xi.passed);
        b.value(Section::parallel_tensor, "h.h_x_xi_eq_h_xi_xi_eta", hr.parallel.h_x_xi.passed);
      }
      for (const auto& c : hr.checks) b.check(Section::parallel_tensor, c);
    }
  }
  return rep;
}

// ------------------------------------------------------------------ output

namespace {

std::string witness_text(const std::optional<MultiIndex>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w->size(); ++i) out += (i ? ", " : "") + std::to_string((*w)[i]);
  return out + ")";
}

std::string json_text(const RunReport& r) {
  json doc;
  doc["schema"] = "pisol.report";
  doc["version"] = 1;
  doc["spec"] = {{"name", r.spec_name}, {"dim", r.dim}, {"params", r.params}};
  json subs = json::object();
  for (const auto& [k, v] : r.substitutions) subs[k] = to_string(v);
  doc["spec"]["substitutions"] = subs;
  json sections = json::array();
  for (Section s : r.sections) sections.push_back(to_string(s));
  doc["sections"] = sections;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"section", to_string(c.section)},
                      {"name", c.name},
                      {"outcome", to_string(c.outcome)},
                      {"witness", witness_json(c.witness)},
                      {"detail", c.detail}});
  doc["checks"] = checks;
  doc["values"] = r.values;
  doc["notes"] = r.notes;
  doc["exit_code"] = r.exit_code();
  return doc.dump(2) + "\n";
}

std::string plain_text(const RunReport& r) {
  std::ostringstream out;
  out << "pisol report (schema pisol.report, version 1)\n";
  out << "spec: " << r.spec_name << "\n";
  out << "dim: " << r.dim << "\n";
  out << "params:";
  for (const auto& p : r.params) out << ' ' << p;
  out << "\n";
  if (!r.substitutions.empty()) {
    out << "substitutions:";
    for (const auto& [k, v] : r.substitutions) out << ' ' << k << '=' << to_string(v);
    out << "\n";
  }
  out << "sections:";
  for (Section s : r.sections) out << ' ' << to_string(s);
  out << "\n";

  std::optional<Section> current;
  for (const auto& c : r.checks) {
    if (current != c.section) {
      out << "\n[" << to_string(c.section) << "]\n";
      current = c.section;
    }
    std::string tag = to_string(c.outcome);
    tag.resize(std::max<std::size_t>(tag.size(), 13), ' ');
    out << "  " << tag << ' ' << c.name;
    if (c.witness) out << "  witness " << witness_text(c.witness);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (!r.values.empty()) {
    out << "\nvalues:\n";
    for (const auto& [key, v] : r.values.items()) out << "  " << key << " = " << v.dump() << "\n";
  }
  if (!r.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& n : r.notes) out << "  - " << n << "\n";
  }
  out << "\nexit code: " << r.exit_code() << "\n";
  return out.str();
}

}  // namespace

std::string emit(const RunReport& report, Format format) {
  return format == Format::json ? json_text(report) : plain_text(report);
}

}  // namespace pisol
