#include "pisol/kernels.hpp"

namespace pisol::kernels::serial {

namespace {
constexpr auto U = IndexKind::upper;
constexpr auto L = IndexKind::lower;
}  // namespace

FrameTensor jacobiator(const FrameTensor& c) {
  const std::size_t d = c.dim();
  FrameTensor j(d, {U, L, L, L});
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t e = 0; e < d; ++e) {
          Scalar sum;
          for (std::size_t l = 0; l < d; ++l) {
            sum += c({l, b, e}) * c({m, a, l});
            sum += c({l, e, a}) * c({m, b, l});
            sum += c({l, a, b}) * c({m, e, l});
          }
          j({m, a, b, e}) = std::move(sum);
        }
  return j;
}

FrameTensor koszul(const FrameTensor& c, const FrameTensor& g, const FrameTensor& ginv) {
  const std::size_t d = c.dim();
  // b(i,j,k) = g([e_i,e_j], e_k)
  FrameTensor b(d, {L, L, L});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar sum;
        for (std::size_t m = 0; m < d; ++m) sum += c({m, i, j}) * g({m, k});
        b({i, j, k}) = std::move(sum);
      }
  // lowered(i,j,k) = g(nabla_i e_j, e_k)
  FrameTensor lowered(d, {L, L, L});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        lowered({i, j, k}) = (b({i, j, k}) - b({j, k, i}) + b({k, i, j})).div_rational(2);
  FrameTensor gamma(d, {U, L, L});
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar sum;
        for (std::size_t k = 0; k < d; ++k) sum += ginv({m, k}) * lowered({i, j, k});
        gamma({m, i, j}) = std::move(sum);
      }
  return gamma;
}

FrameTensor riemann(const FrameTensor& c, const FrameTensor& gamma) {
  const std::size_t d = c.dim();
  FrameTensor r(d, {U, L, L, L});
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Scalar sum;
          for (std::size_t m = 0; m < d; ++m) {
            sum += gamma({m, j, k}) * gamma({l, i, m});
            sum -= gamma({m, i, k}) * gamma({l, j, m});
            sum -= c({m, i, j}) * gamma({l, m, k});
          }
          r({l, i, j, k}) = std::move(sum);
        }
  return r;
}

FrameTensor covariant_derivative(const FrameTensor& gamma, const FrameTensor& t) {
  const std::size_t d = t.dim();
  const std::size_t r = t.rank();
  Signature sig{L};
  sig.insert(sig.end(), t.signature().begin(), t.signature().end());
  FrameTensor out(d, sig);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t f = 0; f < t.size(); ++f) {
      MultiIndex idx = t.unflatten(f);
      Scalar sum;
      for (std::size_t s = 0; s < r; ++s) {
        const std::size_t a = idx[s];
        MultiIndex moved = idx;
        for (std::size_t m = 0; m < d; ++m) {
          moved[s] = m;
          if (t.signature()[s] == L)
            sum -= gamma({m, i, a}) * t.at(moved);
          else
            sum += gamma({a, i, m}) * t.at(moved);
        }
      }
      out.flat(i * t.size() + f) = std::move(sum);
    }
  }
  return out;
}

}  // namespace pisol::kernels::serial
