#pragma once

#include "pisol/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pisol {

enum class IndexKind { lower, upper };

class TensorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Signature = std::vector<IndexKind>;
using MultiIndex = std::vector<std::size_t>;

/// Dense array of Scalars over a frame of dimension `dim`, stored row-major
/// in slot order. Slot 0 varies slowest.
///
/// Conventions used across the library: a (1,1)-tensor A has signature
/// {upper, lower} and A(l, j) is the e_l component of A e_j, so contracting
/// slots 0 and 1 is the trace.
class FrameTensor {
public:
  FrameTensor() : FrameTensor(1, {}) {}
  FrameTensor(std::size_t dim, Signature signature);
  FrameTensor(std::size_t dim, Signature signature, std::vector<Scalar> components);

  static FrameTensor scalar(const Scalar& s);
  /// Kronecker delta as a {upper, lower} tensor.
  static FrameTensor identity(std::size_t dim);
  /// Rank-2 tensor with the given matrix rows.
  static FrameTensor matrix(Signature signature, const std::vector<std::vector<Scalar>>& rows);
  /// Rank-1 tensor.
  static FrameTensor vector(IndexKind kind, const std::vector<Scalar>& entries);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return signature_.size(); }
  const Signature& signature() const { return signature_; }
  std::size_t size() const { return components_.size(); }

  const std::vector<Scalar>& components() const { return components_; }
  const Scalar& flat(std::size_t i) const { return components_[i]; }
  Scalar& flat(std::size_t i) { return components_[i]; }

  const Scalar& at(std::span<const std::size_t> idx) const { return components_[offset(idx)]; }
  Scalar& at(std::span<const std::size_t> idx) { return components_[offset(idx)]; }
  const Scalar& operator()(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  Scalar& operator()(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::size_t offset(std::span<const std::size_t> idx) const;
  MultiIndex unflatten(std::size_t flat) const;

  bool is_zero() const;
  /// Every component is a rational constant.
  bool is_constant() const;
  /// First nonzero component in lexicographic index order.
  std::optional<MultiIndex> first_nonzero() const;

  FrameTensor& operator+=(const FrameTensor& o);
  FrameTensor& operator-=(const FrameTensor& o);
  friend FrameTensor operator+(FrameTensor a, const FrameTensor& b) { return a += b; }
  friend FrameTensor operator-(FrameTensor a, const FrameTensor& b) { return a -= b; }
  FrameTensor operator-() const;
  friend bool operator==(const FrameTensor& a, const FrameTensor& b);

  /// Applies `fn` to every component.
  template <class Fn>
  FrameTensor map(Fn&& fn) const {
    FrameTensor r(dim_, signature_);
    for (std::size_t i = 0; i < components_.size(); ++i) r.components_[i] = fn(components_[i]);
    return r;
  }

private:
  std::size_t dim_;
  Signature signature_;
  std::vector<Scalar> components_;
};

FrameTensor scale(const Scalar& s, const FrameTensor& t);
FrameTensor tensor_product(const FrameTensor& a, const FrameTensor& b);

/// Trace over one upper and one lower slot. Rank drops by two.
FrameTensor contract(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b);

/// Raises a lower slot with the inverse metric (upper, upper).
FrameTensor raise(const FrameTensor& t, std::size_t slot, const FrameTensor& metric_inverse);
/// Lowers an upper slot with the metric (lower, lower).
FrameTensor lower(const FrameTensor& t, std::size_t slot, const FrameTensor& metric);

/// Reorders slots: result slot s is input slot `order[s]`.
FrameTensor permute(const FrameTensor& t, const std::vector<std::size_t>& order);
/// Symmetric part in two slots of the same kind: (T + T^swap) / 2.
FrameTensor symmetrize(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b);
bool is_symmetric(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b);

/// Matrix product of two (1,1)-tensors: (a∘b)(l,j) = sum_m a(l,m) b(m,j).
FrameTensor compose(const FrameTensor& a, const FrameTensor& b);

/// Inverse of a rank-2 rational-constant matrix by Gauss-Jordan elimination.
/// Returns nullopt when singular. Result signature is the flipped input.
std::optional<FrameTensor> inverse_rational(const FrameTensor& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
/// Sylvester inertia of a symmetric rational matrix by congruence
/// diagonalization.
Inertia inertia(const FrameTensor& symmetric);

}  // namespace pisol
