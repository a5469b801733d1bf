#pragma once

#include "pisol/pi_structure.hpp"

#include <map>
#include <utility>
#include <vector>

namespace fixtures {

using namespace pisol;

inline FrameTensor euclidean_metric(std::size_t d) {
  return FrameTensor(d, {IndexKind::lower, IndexKind::lower}, FrameTensor::identity(d).components());
}

// phi e1 = e3, phi e2 = e4, phi e3 = e1, phi e4 = e2
inline FrameTensor example_phi() {
  FrameTensor phi(5, {IndexKind::upper, IndexKind::lower});
  phi({3, 1}) = 1;
  phi({4, 2}) = 1;
  phi({1, 3}) = 1;
  phi({2, 4}) = 1;
  return phi;
}

inline LieFrame example_frame(FrameTensor metric = euclidean_metric(5)) {
  ParamSet ps({"p", "q"});
  auto P = [&](const char* s) { return parse(s, ps); };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> br;
  br[{0, 1}] = {0, 0, P("p"), -1, P("q")};
  br[{0, 2}] = {0, P("-p"), 0, P("-q"), -1};
  br[{0, 3}] = {0, -1, P("q"), 0, P("p")};
  br[{0, 4}] = {0, P("-q"), -1, P("-p"), 0};
  return LieFrame::from_brackets(5, ps, br, std::move(metric));
}

inline PiStructure example(FrameTensor metric = euclidean_metric(5)) {
  return PiStructure(example_frame(std::move(metric)), example_phi(),
                     FrameTensor::vector(IndexKind::upper, {1, 0, 0, 0, 0}),
                     FrameTensor::vector(IndexKind::lower, {1, 0, 0, 0, 0}));
}

// Same (phi, xi, eta, g) on the abelian algebra.
inline PiStructure abelian_example() {
  LieFrame f(ParamSet(), FrameTensor(5, {IndexKind::upper, IndexKind::lower, IndexKind::lower}), euclidean_metric(5));
  return PiStructure(f, example_phi(), FrameTensor::vector(IndexKind::upper, {1, 0, 0, 0, 0}),
                     FrameTensor::vector(IndexKind::lower, {1, 0, 0, 0, 0}));
}

}  // namespace fixtures
