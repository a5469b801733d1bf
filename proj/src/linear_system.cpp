#include "pisol/linear_system.hpp"

#include <algorithm>

namespace pisol {

void LinearSystem::add(std::vector<Scalar> coeffs, Scalar rhs, MultiIndex label) {
  if (coeffs.size() != unknowns_) throw std::invalid_argument("equation has wrong number of coefficients");
  ++added_;
  if (failure_ != Status::unique) return;

  for (const Row& r : rows_) {
    const Scalar f = coeffs[r.pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (!r.coeffs[c].is_zero()) coeffs[c] -= f * r.coeffs[c];
    rhs -= f * r.rhs;
  }

  std::optional<std::size_t> pivot;
  bool any_nonzero = false;
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (coeffs[c].is_zero()) continue;
    any_nonzero = true;
    if (coeffs[c].is_constant()) {
      pivot = c;
      break;
    }
  }

  if (!any_nonzero) {
    if (!rhs.is_zero()) {
      failure_ = Status::inconsistent;
      witness_ = std::move(label);
    }
    return;
  }
  if (!pivot) {
    failure_ = Status::indeterminate;
    witness_ = std::move(label);
    return;
  }

  const Rational p = *coeffs[*pivot].constant_value();
  for (auto& c : coeffs) c = c.div_rational(p);
  rhs = rhs.div_rational(p);
  rows_.push_back(Row{*pivot, std::move(coeffs), std::move(rhs)});
}

std::vector<Scalar> LinearSystem::back_substitute(const std::vector<Scalar>& free_values, bool homogeneous) const {
  std::vector<Scalar> x = free_values;
  // rows_[k] has zeros in the pivot columns of rows_[0..k-1]; solve from the last row up
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Scalar v = homogeneous ? Scalar() : it->rhs;
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (c == it->pivot || it->coeffs[c].is_zero() || x[c].is_zero()) continue;
      v -= it->coeffs[c] * x[c];
    }
    x[it->pivot] = std::move(v);
  }
  return x;
}

LinearSystem::Solution LinearSystem::solve() const {
  Solution sol;
  if (failure_ != Status::unique) {
    sol.status = failure_;
    sol.witness = witness_;
    return sol;
  }
  std::vector<bool> is_pivot(unknowns_, false);
  for (const Row& r : rows_) is_pivot[r.pivot] = true;

  sol.particular = back_substitute(std::vector<Scalar>(unknowns_), false);
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> seed(unknowns_);
    seed[c] = Scalar(1);
    sol.nullspace.push_back(back_substitute(seed, true));
  }
  sol.status = sol.nullspace.empty() ? Status::unique : Status::family;
  return sol;
}

}  // namespace pisol
