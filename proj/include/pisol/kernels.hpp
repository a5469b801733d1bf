#pragma once

// Component kernels for frame geometry. Each kernel exists twice: a plain
// serial loop kept as the reference, and an OpenMP version that splits the
// output components across threads. Both produce identical tensors.
//
// Storage conventions (see FrameTensor):
//   structure constants  C(k,i,j) = C^k_{ij},   [e_i,e_j] = sum_k C^k_{ij} e_k
//   connection           G(k,i,j) = Gamma^k_{ij}, nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k
//   curvature            R(l,i,j,k) = R^l_{ijk}, R(e_i,e_j)e_k = sum_l R^l_{ijk} e_l

#include "pisol/tensor.hpp"

namespace pisol::kernels {

namespace serial {

/// J(m,i,j,k): e_m component of the cyclic sum [e_i,[e_j,e_k]] + ...
FrameTensor jacobiator(const FrameTensor& structure);
/// Levi-Civita coefficients of a left-invariant metric (Koszul formula).
FrameTensor koszul(const FrameTensor& structure, const FrameTensor& metric, const FrameTensor& metric_inverse);
/// R = nabla_i nabla_j - nabla_j nabla_i - nabla_[e_i,e_j] on frame vectors.
FrameTensor riemann(const FrameTensor& structure, const FrameTensor& connection);
/// Leibniz rule with vanishing frame derivatives; new slot 0 is the
/// differentiation direction.
FrameTensor covariant_derivative(const FrameTensor& connection, const FrameTensor& t);

}  // namespace serial

namespace omp {

FrameTensor jacobiator(const FrameTensor& structure);
FrameTensor koszul(const FrameTensor& structure, const FrameTensor& metric, const FrameTensor& metric_inverse);
FrameTensor riemann(const FrameTensor& structure, const FrameTensor& connection);
FrameTensor covariant_derivative(const FrameTensor& connection, const FrameTensor& t);

/// Threads OpenMP would use for the next parallel region (1 without OpenMP).
int max_threads();

}  // namespace omp

}  // namespace pisol::kernels
