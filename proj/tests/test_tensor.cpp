#include "pisol/tensor.hpp"
#include "random_data.hpp"

#include <doctest.h>

using namespace pisol;

namespace {
constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;

FrameTensor mat(Signature sig, std::vector<std::vector<Scalar>> rows) { return FrameTensor::matrix(std::move(sig), rows); }
}  // namespace

TEST_CASE("storage is row-major with slot 0 slowest") {
  FrameTensor t(3, {U, L, L});
  t({1, 2, 0}) = 7;
  CHECK(t.flat(1 * 9 + 2 * 3 + 0) == Scalar(7));
  CHECK(t.unflatten(15) == MultiIndex{1, 2, 0});
  CHECK(*t.first_nonzero() == MultiIndex{1, 2, 0});
  CHECK_FALSE(FrameTensor(3, {L}).first_nonzero().has_value());
}

TEST_CASE("trace of the identity is the dimension") {
  for (std::size_t d : {1u, 3u, 5u}) {
    FrameTensor tr = contract(FrameTensor::identity(d), 0, 1);
    CHECK(tr.rank() == 0);
    CHECK(tr.flat(0) == Scalar(static_cast<long>(d)));
  }
}

TEST_CASE("contraction needs one upper and one lower slot") {
  FrameTensor g(3, {L, L});
  CHECK_THROWS_AS(contract(g, 0, 1), TensorError);
  CHECK_THROWS_AS(contract(FrameTensor::identity(3), 0, 0), TensorError);
  CHECK_THROWS_AS((void)(FrameTensor(3, {L}) + FrameTensor(2, {L})), TensorError);
  CHECK_THROWS_AS((void)(FrameTensor(3, {L}) + FrameTensor(3, {U})), TensorError);
}

TEST_CASE("tensor product, permutation and symmetry") {
  FrameTensor a = FrameTensor::vector(L, {1, 2, 0});
  FrameTensor b = FrameTensor::vector(L, {0, 1, 3});
  FrameTensor ab = tensor_product(a, b);
  CHECK(ab({1, 2}) == Scalar(6));
  FrameTensor ba = permute(ab, {1, 0});
  CHECK(ba({2, 1}) == Scalar(6));
  CHECK(ba == tensor_product(b, a));
  CHECK_FALSE(is_symmetric(ab, 0, 1));
  FrameTensor s = symmetrize(ab, 0, 1);
  CHECK(is_symmetric(s, 0, 1));
  CHECK(s({1, 2}) == Scalar(3));
  CHECK(s + s == ab + ba);
}

TEST_CASE("compose and inverse") {
  FrameTensor m = mat({U, L}, {{1, 2, 0}, {0, 1, 0}, {3, 0, 1}});
  auto inv = inverse_rational(m);
  REQUIRE(inv.has_value());
  CHECK(inv->signature() == Signature{L, U});
  FrameTensor mixed(3, {U, L}, inv->components());
  CHECK(compose(m, mixed) == FrameTensor::identity(3));
  CHECK(compose(mixed, m) == FrameTensor::identity(3));

  FrameTensor singular = mat({L, L}, {{1, 2}, {2, 4}});
  CHECK_FALSE(inverse_rational(singular).has_value());
}

TEST_CASE("inertia by congruence") {
  Inertia a = inertia(mat({L, L}, {{1, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
  CHECK(a.positive == 1);
  CHECK(a.negative == 1);
  CHECK(a.zero == 1);
  Inertia b = inertia(mat({L, L}, {{0, 1}, {1, 0}}));
  CHECK(b.positive == 1);
  CHECK(b.negative == 1);
  // associated metric of the five-dimensional example: signature (3, 2)
  Inertia c = inertia(mat({L, L}, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  CHECK(c.positive == 3);
  CHECK(c.negative == 2);
  CHECK(c.zero == 0);
}

TEST_CASE("raise and lower round-trip on random tensors") {
  rnd::Gen g(77);
  const ParamSet pq({"p", "q"});
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 4));
    FrameTensor metric = g.metric(d);
    FrameTensor inv_raw = *inverse_rational(metric);
    FrameTensor ginv(d, {U, U}, inv_raw.components());
    FrameTensor t(d, {L, U, L});
    for (std::size_t f = 0; f < t.size(); ++f) t.flat(f) = g.scalar(pq, 2, 2);
    FrameTensor up = raise(t, 0, ginv);
    CHECK(up.signature() == Signature{U, U, L});
    CHECK(lower(up, 0, metric) == t);
    FrameTensor down = lower(t, 1, metric);
    CHECK(raise(down, 1, ginv) == t);
  }
}
