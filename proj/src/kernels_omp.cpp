#include "pisol/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdint>

namespace pisol::kernels::omp {

namespace {

constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;

// Flat accessors for rank-2/3 tensors of dimension d; a zero-test before
// multiplying skips most work on sparse frames.
struct View3 {
  const FrameTensor& t;
  std::size_t d;
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return t.flat((a * d + b) * d + c); }
};

void fma_into(Scalar& acc, const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return;
  acc += x * y;
}

void fms_into(Scalar& acc, const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return;
  acc -= x * y;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FrameTensor jacobiator(const FrameTensor& c) {
  const std::size_t d = c.dim();
  FrameTensor out(d, {U, L, L, L});
  const View3 C{c, d};
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t f = 0; f < total; ++f) {
    auto rem = static_cast<std::size_t>(f);
    const std::size_t e = rem % d;
    rem /= d;
    const std::size_t b = rem % d;
    rem /= d;
    const std::size_t a = rem % d;
    const std::size_t m = rem / d;
    Scalar sum;
    for (std::size_t l = 0; l < d; ++l) {
      fma_into(sum, C(l, b, e), C(m, a, l));
      fma_into(sum, C(l, e, a), C(m, b, l));
      fma_into(sum, C(l, a, b), C(m, e, l));
    }
    out.flat(static_cast<std::size_t>(f)) = std::move(sum);
  }
  return out;
}

FrameTensor koszul(const FrameTensor& c, const FrameTensor& g, const FrameTensor& ginv) {
  const std::size_t d = c.dim();
  const View3 C{c, d};
  const auto n3 = static_cast<std::int64_t>(d * d * d);

  FrameTensor bracket_metric(d, {L, L, L});
#pragma omp parallel for schedule(static)
  for (std::int64_t f = 0; f < n3; ++f) {
    const auto uf = static_cast<std::size_t>(f);
    const std::size_t k = uf % d, j = (uf / d) % d, i = uf / (d * d);
    Scalar sum;
    for (std::size_t m = 0; m < d; ++m) fma_into(sum, C(m, i, j), g.flat(m * d + k));
    bracket_metric.flat(uf) = std::move(sum);
  }

  const View3 B{bracket_metric, d};
  FrameTensor lowered(d, {L, L, L});
#pragma omp parallel for schedule(static)
  for (std::int64_t f = 0; f < n3; ++f) {
    const auto uf = static_cast<std::size_t>(f);
    const std::size_t k = uf % d, j = (uf / d) % d, i = uf / (d * d);
    lowered.flat(uf) = (B(i, j, k) - B(j, k, i) + B(k, i, j)).div_rational(2);
  }

  const View3 Low{lowered, d};
  FrameTensor gamma(d, {U, L, L});
#pragma omp parallel for schedule(static)
  for (std::int64_t f = 0; f < n3; ++f) {
    const auto uf = static_cast<std::size_t>(f);
    const std::size_t j = uf % d, i = (uf / d) % d, m = uf / (d * d);
    Scalar sum;
    for (std::size_t k = 0; k < d; ++k) fma_into(sum, ginv.flat(m * d + k), Low(i, j, k));
    gamma.flat(uf) = std::move(sum);
  }
  return gamma;
}

FrameTensor riemann(const FrameTensor& c, const FrameTensor& gamma) {
  const std::size_t d = c.dim();
  const View3 C{c, d};
  const View3 G{gamma, d};
  FrameTensor out(d, {U, L, L, L});
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t f = 0; f < total; ++f) {
    auto rem = static_cast<std::size_t>(f);
    const std::size_t k = rem % d;
    rem /= d;
    const std::size_t j = rem % d;
    rem /= d;
    const std::size_t i = rem % d;
    const std::size_t l = rem / d;
    Scalar sum;
    for (std::size_t m = 0; m < d; ++m) {
      fma_into(sum, G(m, j, k), G(l, i, m));
      fms_into(sum, G(m, i, k), G(l, j, m));
      fms_into(sum, C(m, i, j), G(l, m, k));
    }
    out.flat(static_cast<std::size_t>(f)) = std::move(sum);
  }
  return out;
}

FrameTensor covariant_derivative(const FrameTensor& gamma, const FrameTensor& t) {
  const std::size_t d = t.dim();
  const std::size_t r = t.rank();
  const View3 G{gamma, d};
  Signature sig{L};
  sig.insert(sig.end(), t.signature().begin(), t.signature().end());
  FrameTensor out(d, sig);

  // stride of slot s in the flat layout of t
  std::vector<std::size_t> stride(r, 1);
  for (std::size_t s = r; s-- > 1;) stride[s - 1] = stride[s] * d;

  const std::size_t inner = t.size();
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t f = 0; f < total; ++f) {
    const auto uf = static_cast<std::size_t>(f);
    const std::size_t i = uf / inner;
    const std::size_t tf = uf % inner;
    Scalar sum;
    for (std::size_t s = 0; s < r; ++s) {
      const std::size_t a = (tf / stride[s]) % d;
      const std::size_t base = tf - a * stride[s];
      const bool lower_slot = t.signature()[s] == L;
      for (std::size_t m = 0; m < d; ++m) {
        const Scalar& tm = t.flat(base + m * stride[s]);
        if (lower_slot)
          fms_into(sum, G(m, i, a), tm);
        else
          fma_into(sum, G(a, i, m), tm);
      }
    }
    out.flat(uf) = std::move(sum);
  }
  return out;
}

}  // namespace pisol::kernels::omp
