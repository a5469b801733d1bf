#include "pisol/pi_structure.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace pisol;

namespace {
constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;

const NamedCheck& find(const AxiomReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

// [e0,e1] = -e2, [e0,e2] = -e1 with phi e1 = e2, phi e2 = e1
PiStructure three_dim() {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> br;
  br[{0, 1}] = {0, 0, -1};
  br[{0, 2}] = {0, -1, 0};
  LieFrame f = LieFrame::from_brackets(3, ParamSet(), br, fixtures::euclidean_metric(3));
  FrameTensor phi(3, {U, L});
  phi({2, 1}) = 1;
  phi({1, 2}) = 1;
  return PiStructure(f, phi, FrameTensor::vector(U, {1, 0, 0}), FrameTensor::vector(L, {1, 0, 0}));
}
}  // namespace

TEST_CASE("construction checks shapes") {
  LieFrame f4(ParamSet(), FrameTensor(4, {U, L, L}), fixtures::euclidean_metric(4));
  CHECK_THROWS_AS(PiStructure(f4, FrameTensor(4, {U, L}), FrameTensor(4, {U}), FrameTensor(4, {L})), GeometryError);
  LieFrame f3(ParamSet(), FrameTensor(3, {U, L, L}), fixtures::euclidean_metric(3));
  CHECK_THROWS(PiStructure(f3, FrameTensor(3, {L, L}), FrameTensor(3, {U}), FrameTensor(3, {L})));
  const ParamSet p({"p"});
  FrameTensor phi(3, {U, L});
  phi({1, 2}) = parse("p", p);
  CHECK_THROWS(PiStructure(f3, phi, FrameTensor(3, {U}), FrameTensor(3, {L})));
  CHECK(fixtures::example().n == 2);
}

TEST_CASE("axioms on the five-dimensional example") {
  AxiomReport r = check_axioms(fixtures::example());
  CHECK(r.checks.size() == 10);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(r.all_passed());
}

TEST_CASE("degenerate one-dimensional structure") {
  LieFrame f(ParamSet(), FrameTensor(1, {U, L, L}), fixtures::euclidean_metric(1));
  PiStructure s(f, FrameTensor(1, {U, L}), FrameTensor::vector(U, {1}), FrameTensor::vector(L, {1}));
  CHECK(s.n == 0);
  AxiomReport r = check_axioms(s);
  CHECK(find(r, "phi_squared").passed);
  CHECK(find(r, "trace_phi_zero").passed);
  CHECK(r.all_passed());
}

TEST_CASE("a stretched metric breaks compatibility at (1,1)") {
  FrameTensor g = fixtures::euclidean_metric(5);
  g({1, 1}) = 2;
  AxiomReport r = check_axioms(fixtures::example(g));
  const NamedCheck& c = find(r, "compatibility");
  CHECK_FALSE(c.passed);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == MultiIndex{1, 1});
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("eta(nabla xi) needs a Jacobi frame") {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> br;
  br[{0, 1}] = {0, 0, 1};
  br[{1, 2}] = {1, 0, 0};
  br[{0, 2}] = {1, 0, 0};
  LieFrame f = LieFrame::from_brackets(3, ParamSet(), br, fixtures::euclidean_metric(3));
  PiStructure s(f, three_dim().phi, FrameTensor::vector(U, {1, 0, 0}), FrameTensor::vector(L, {1, 0, 0}));
  const NamedCheck& c = find(check_axioms(s), "eta_nabla_xi_zero");
  CHECK_FALSE(c.passed);
  CHECK(c.detail.find("Jacobi") != std::string::npos);
}

TEST_CASE("associated metric") {
  PiStructure s = fixtures::example();
  FrameTensor gt = associated_metric(s);
  FrameTensor expected(5, {L, L});
  expected({0, 0}) = 1;
  for (auto [i, j] : {std::pair{1, 3}, {3, 1}, {2, 4}, {4, 2}}) expected({std::size_t(i), std::size_t(j)}) = 1;
  CHECK(gt == expected);
  CHECK(evaluate(gt, s.xi, s.xi) == Scalar(1));
  Inertia in = inertia(gt);
  CHECK(in.positive == 3);
  CHECK(in.negative == 2);

  // g~(phi x, phi y) = g~(x, y) - eta(x) eta(y)
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      FrameTensor x = basis_vector(5, i), y = basis_vector(5, j);
      CHECK(evaluate(gt, apply(s.phi, x), apply(s.phi, y)) ==
            evaluate(gt, x, y) - evaluate(tensor_product(s.eta, s.eta), x, y));
    }
}

TEST_CASE("para-Sasaki-like test") {
  PiStructure s = fixtures::example();
  Connection c = levi_civita(s.frame);
  CHECK(is_para_sasaki(s, c).holds);

  PiStructure ab = fixtures::abelian_example();
  CheckOutcome o = is_para_sasaki(ab, levi_civita(ab.frame));
  CHECK_FALSE(o.holds);
  REQUIRE(o.witness.has_value());
  CHECK(*o.witness == MultiIndex{1, 1});
  // left side vanishes, right side is -xi
  FrameTensor rhs = para_sasaki_rhs(ab);
  CHECK(rhs({1, 0, 1}) == Scalar(-1));

  PiStructure t = three_dim();
  CHECK(check_axioms(t).all_passed());
  CHECK(is_para_sasaki(t, levi_civita(t.frame)).holds);
}

TEST_CASE("curvature identities of para-Sasaki-like structures") {
  for (const PiStructure& s : {fixtures::example(), three_dim()}) {
    Connection c = levi_civita(s.frame);
    CurvatureData cd = curvature(s.frame, c);
    auto checks = check_para_sasaki_identities(s, c, cd);
    CHECK(checks.size() == 6);
    for (const auto& k : checks) CHECK_MESSAGE(k.passed, k.name);
  }
}

TEST_CASE("tau tilde") {
  PiStructure s = fixtures::example();
  CurvatureData cd = curvature(s.frame, levi_civita(s.frame));
  CHECK(tau_tilde(s, cd) == Scalar(-4));

  PiStructure ab = fixtures::abelian_example();
  CHECK(tau_tilde(ab, curvature(ab.frame, levi_civita(ab.frame))) == Scalar(0));
}

TEST_CASE("substitution and lifting of structures") {
  PiStructure s = fixtures::example();
  PiStructure at = s.substituted({{"p", Rational(1)}});
  CHECK(at.frame.bracket(0, 1, 2) == Scalar(1));
  PiStructure up = s.lifted(ParamSet({"p", "q", "k"}));
  CHECK(up.frame.params().size() == 3);
  CHECK(is_para_sasaki(up, levi_civita(up.frame)).holds);
}
