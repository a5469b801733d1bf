// Serial reference kernels against their OpenMP counterparts.
//
// Inputs: the symbolic five-dimensional example and rational frames of a
// semidirect algebra [e0, ei] = A ei in dimensions 5, 7 and 9.

#include "pisol/frame_geometry.hpp"
#include "pisol/kernels.hpp"
#include "fixtures.hpp"
#include "random_data.hpp"

#include <benchmark/benchmark.h>

using namespace pisol;
namespace ks = pisol::kernels::serial;
namespace ko = pisol::kernels::omp;

namespace {

struct Input {
  LieFrame frame;
  FrameTensor gamma;
  FrameTensor riemann;
};

Input make_input(std::int64_t dim) {
  if (dim == 0) {
    LieFrame f = fixtures::example_frame();
    FrameTensor g = ks::koszul(f.structure(), f.metric(), f.metric_inverse());
    FrameTensor r = ks::riemann(f.structure(), g);
    return {f, g, r};
  }
  const auto d = static_cast<std::size_t>(dim);
  rnd::Gen gen(static_cast<std::uint64_t>(dim));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> br;
  for (std::size_t i = 1; i < d; ++i) {
    std::vector<Scalar> v(d);
    for (std::size_t j = 1; j < d; ++j) v[j] = gen.rational(3, 3);
    br[{0, i}] = v;
  }
  LieFrame f(ParamSet(), rnd::structure_from(d, br), gen.metric(d));
  FrameTensor g = ks::koszul(f.structure(), f.metric(), f.metric_inverse());
  FrameTensor r = ks::riemann(f.structure(), g);
  return {f, g, r};
}

const Input& input(std::int64_t dim) {
  static std::map<std::int64_t, Input> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, make_input(dim)).first;
  return it->second;
}

template <auto Fn>
void bm_koszul(benchmark::State& state) {
  const Input& in = input(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(in.frame.structure(), in.frame.metric(), in.frame.metric_inverse()));
}

template <auto Fn>
void bm_riemann(benchmark::State& state) {
  const Input& in = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(in.frame.structure(), in.gamma));
}

template <auto Fn>
void bm_nabla_riemann(benchmark::State& state) {
  const Input& in = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(in.gamma, in.riemann));
}

// range 0 is the symbolic example
void dims(benchmark::internal::Benchmark* b) {
  for (std::int64_t d : {0, 5, 7, 9}) b->Arg(d);
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(bm_koszul<ks::koszul>)->Name("koszul/serial")->Apply(dims);
BENCHMARK(bm_koszul<ko::koszul>)->Name("koszul/omp")->Apply(dims);
BENCHMARK(bm_riemann<ks::riemann>)->Name("riemann/serial")->Apply(dims);
BENCHMARK(bm_riemann<ko::riemann>)->Name("riemann/omp")->Apply(dims);
BENCHMARK(bm_nabla_riemann<ks::covariant_derivative>)->Name("nabla_riemann/serial")->Apply(dims);
BENCHMARK(bm_nabla_riemann<ko::covariant_derivative>)->Name("nabla_riemann/omp")->Apply(dims);

BENCHMARK_MAIN();
