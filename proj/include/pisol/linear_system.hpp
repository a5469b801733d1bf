#pragma once

#include "pisol/tensor.hpp"

#include <optional>
#include <vector>

namespace pisol {

/// Exact linear system sum_c coeff[c] * x_c = rhs over Scalars, solved by
/// incremental Gaussian elimination.
///
/// Pivots must be nonzero rational constants. Coefficients and right-hand
/// sides may be polynomials in the parameters; a reduced row whose nonzero
/// coefficients are all non-constant cannot be decided without a fraction
/// field and makes the system indeterminate.
class LinearSystem {
public:
  enum class Status { unique, family, inconsistent, indeterminate };

  struct Solution {
    Status status = Status::unique;
    /// Free unknowns set to zero. Empty unless the system is consistent.
    std::vector<Scalar> particular;
    /// One vector per free unknown.
    std::vector<std::vector<Scalar>> nullspace;
    /// Label of the first equation that made the system inconsistent or
    /// indeterminate.
    std::optional<MultiIndex> witness;

    bool consistent() const { return status == Status::unique || status == Status::family; }
  };

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return added_; }

  /// Adds one equation; `label` is reported as the witness if this equation
  /// breaks consistency. Equations after a failure are ignored.
  void add(std::vector<Scalar> coeffs, Scalar rhs, MultiIndex label = {});

  Solution solve() const;

private:
  struct Row {
    std::size_t pivot;
    std::vector<Scalar> coeffs;
    Scalar rhs;
  };

  std::vector<Scalar> back_substitute(const std::vector<Scalar>& free_values, bool homogeneous) const;

  std::size_t unknowns_;
  std::size_t added_ = 0;
  std::vector<Row> rows_;
  Status failure_ = Status::unique;
  std::optional<MultiIndex> witness_;
};

}  // namespace pisol
