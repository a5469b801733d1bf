#include "pisol/linear_system.hpp"

#include <doctest.h>

using namespace pisol;

using Status = LinearSystem::Status;

TEST_CASE("unique solution") {
  LinearSystem s(2);
  s.add({1, 1}, 3, {0});
  s.add({1, -1}, 1, {1});
  auto sol = s.solve();
  CHECK(sol.status == Status::unique);
  CHECK(sol.particular[0] == Scalar(2));
  CHECK(sol.particular[1] == Scalar(1));
  CHECK(sol.nullspace.empty());
}

TEST_CASE("redundant equations are absorbed") {
  LinearSystem s(2);
  s.add({1, 2}, 4, {0});
  s.add({2, 4}, 8, {1});
  s.add({0, 0}, 0, {2});
  auto sol = s.solve();
  CHECK(sol.status == Status::family);
  CHECK(sol.particular == std::vector<Scalar>{4, 0});
  REQUIRE(sol.nullspace.size() == 1);
  CHECK(sol.nullspace[0] == std::vector<Scalar>{-2, 1});
}

TEST_CASE("first inconsistent equation is the witness") {
  LinearSystem s(1);
  s.add({1}, 2, {0, 0});
  s.add({0}, 0, {0, 1});
  s.add({0}, 5, {1, 2});
  s.add({0}, 7, {2, 2});
  auto sol = s.solve();
  CHECK(sol.status == Status::inconsistent);
  CHECK(*sol.witness == MultiIndex{1, 2});
  CHECK(s.equations() == 4);
}

TEST_CASE("polynomial right-hand sides") {
  const ParamSet pq({"p", "q"});
  LinearSystem s(3);
  s.add({1, 0, 1}, parse("p + q", pq), {0});
  s.add({0, 1, 0}, parse("p^2", pq), {1});
  s.add({1, 0, -1}, parse("p - q", pq), {2});
  auto sol = s.solve();
  CHECK(sol.status == Status::unique);
  CHECK(sol.particular[0] == parse("p", pq));
  CHECK(sol.particular[1] == parse("p^2", pq));
  CHECK(sol.particular[2] == parse("q", pq));
}

TEST_CASE("polynomial coefficients without a constant pivot are indeterminate") {
  const ParamSet pq({"p", "q"});
  LinearSystem s(1);
  s.add({parse("p", pq)}, 1, {3});
  auto sol = s.solve();
  CHECK(sol.status == Status::indeterminate);
  CHECK(*sol.witness == MultiIndex{3});
  CHECK_FALSE(sol.consistent());
}

TEST_CASE("polynomial coefficients that reduce to constants are fine") {
  const ParamSet pq({"p", "q"});
  LinearSystem s(2);
  s.add({1, parse("p", pq)}, parse("p", pq), {0});
  s.add({1, parse("p + 1", pq)}, parse("p + 2", pq), {1});
  auto sol = s.solve();
  CHECK(sol.status == Status::unique);
  CHECK(sol.particular[1] == Scalar(2));
  CHECK(sol.particular[0] == parse("-p", pq));
}

TEST_CASE("wrong arity throws") {
  LinearSystem s(2);
  CHECK_THROWS(s.add({1}, 0));
}
