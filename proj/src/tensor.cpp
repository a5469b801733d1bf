#include "pisol/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace pisol {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require_same_shape(const FrameTensor& a, const FrameTensor& b) {
  if (a.dim() != b.dim()) throw TensorError("dimension mismatch");
  if (a.signature() != b.signature()) throw TensorError("signature mismatch");
}

void require_metric(const FrameTensor& m, std::size_t dim, IndexKind kind) {
  if (m.rank() != 2 || m.dim() != dim) throw TensorError("metric dimension mismatch");
  if (m.signature()[0] != kind || m.signature()[1] != kind) throw TensorError("metric has wrong index kinds");
}

std::vector<std::vector<Rational>> rational_rows(const FrameTensor& m) {
  if (m.rank() != 2) throw TensorError("expected a rank-2 tensor");
  const std::size_t d = m.dim();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = m({i, j}).constant_value();
      if (!c) throw TensorError("matrix entries must be rational constants");
      a[i][j] = *c;
    }
  return a;
}

}  // namespace

FrameTensor::FrameTensor(std::size_t dim, Signature signature)
    : dim_(dim), signature_(std::move(signature)), components_(ipow(dim, signature_.size())) {
  if (dim == 0) throw TensorError("frame dimension must be positive");
}

FrameTensor::FrameTensor(std::size_t dim, Signature signature, std::vector<Scalar> components)
    : dim_(dim), signature_(std::move(signature)), components_(std::move(components)) {
  if (dim == 0) throw TensorError("frame dimension must be positive");
  if (components_.size() != ipow(dim, signature_.size()))
    throw TensorError("component count does not match dim^rank");
}

FrameTensor FrameTensor::scalar(const Scalar& s) {
  FrameTensor t(1, {});
  t.components_[0] = s;
  return t;
}

FrameTensor FrameTensor::identity(std::size_t dim) {
  FrameTensor t(dim, {IndexKind::upper, IndexKind::lower});
  for (std::size_t i = 0; i < dim; ++i) t({i, i}) = Scalar(1);
  return t;
}

FrameTensor FrameTensor::matrix(Signature signature, const std::vector<std::vector<Scalar>>& rows) {
  if (signature.size() != 2) throw TensorError("matrix() needs a rank-2 signature");
  const std::size_t d = rows.size();
  FrameTensor t(d, std::move(signature));
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw TensorError("matrix rows must be square");
    for (std::size_t j = 0; j < d; ++j) t({i, j}) = rows[i][j];
  }
  return t;
}

FrameTensor FrameTensor::vector(IndexKind kind, const std::vector<Scalar>& entries) {
  FrameTensor t(entries.size(), {kind});
  for (std::size_t i = 0; i < entries.size(); ++i) t({i}) = entries[i];
  return t;
}

std::size_t FrameTensor::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != signature_.size()) throw TensorError("wrong number of indices");
  std::size_t off = 0;
  for (auto i : idx) {
    if (i >= dim_) throw TensorError("index out of range");
    off = off * dim_ + i;
  }
  return off;
}

MultiIndex FrameTensor::unflatten(std::size_t flat) const {
  MultiIndex idx(signature_.size());
  for (std::size_t s = signature_.size(); s-- > 0;) {
    idx[s] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

bool FrameTensor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool FrameTensor::is_constant() const {
  return std::all_of(components_.begin(), components_.end(), [](const Scalar& s) { return s.is_constant(); });
}

std::optional<MultiIndex> FrameTensor::first_nonzero() const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) return unflatten(i);
  return std::nullopt;
}

FrameTensor& FrameTensor::operator+=(const FrameTensor& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

FrameTensor& FrameTensor::operator-=(const FrameTensor& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

FrameTensor FrameTensor::operator-() const {
  return map([](const Scalar& s) { return -s; });
}

bool operator==(const FrameTensor& a, const FrameTensor& b) {
  return a.dim_ == b.dim_ && a.signature_ == b.signature_ && a.components_ == b.components_;
}

FrameTensor scale(const Scalar& s, const FrameTensor& t) {
  return t.map([&](const Scalar& c) { return s * c; });
}

FrameTensor tensor_product(const FrameTensor& a, const FrameTensor& b) {
  if (a.rank() == 0) return scale(a.flat(0), b);
  if (b.rank() == 0) return scale(b.flat(0), a);
  if (a.dim() != b.dim()) throw TensorError("dimension mismatch");
  Signature sig = a.signature();
  sig.insert(sig.end(), b.signature().begin(), b.signature().end());
  FrameTensor r(a.dim(), std::move(sig));
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) r.flat(i * nb + j) = a.flat(i) * b.flat(j);
  return r;
}

FrameTensor contract(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b) {
  const std::size_t r = t.rank();
  if (slot_a >= r || slot_b >= r) throw TensorError("contraction slot out of range");
  if (slot_a == slot_b) throw TensorError("cannot contract a slot with itself");
  if (t.signature()[slot_a] == t.signature()[slot_b])
    throw TensorError("contraction needs one upper and one lower slot");

  Signature sig;
  for (std::size_t s = 0; s < r; ++s)
    if (s != slot_a && s != slot_b) sig.push_back(t.signature()[s]);
  FrameTensor out(t.dim(), sig);
  MultiIndex full(r);
  for (std::size_t f = 0; f < out.size(); ++f) {
    MultiIndex rest = out.unflatten(f);
    for (std::size_t s = 0, k = 0; s < r; ++s)
      if (s != slot_a && s != slot_b) full[s] = rest[k++];
    Scalar sum;
    for (std::size_t m = 0; m < t.dim(); ++m) {
      full[slot_a] = full[slot_b] = m;
      sum += t.at(full);
    }
    out.flat(f) = std::move(sum);
  }
  return out;
}

namespace {

FrameTensor apply_metric(const FrameTensor& t, std::size_t slot, const FrameTensor& metric, IndexKind to) {
  if (slot >= t.rank()) throw TensorError("slot out of range");
  require_metric(metric, t.dim(), to);
  Signature sig = t.signature();
  sig[slot] = to;
  FrameTensor out(t.dim(), sig);
  for (std::size_t f = 0; f < out.size(); ++f) {
    MultiIndex idx = out.unflatten(f);
    const std::size_t a = idx[slot];
    Scalar sum;
    for (std::size_t m = 0; m < t.dim(); ++m) {
      const Scalar& gm = metric({a, m});
      if (gm.is_zero()) continue;
      idx[slot] = m;
      sum += gm * t.at(idx);
    }
    out.flat(f) = std::move(sum);
  }
  return out;
}

}  // namespace

FrameTensor raise(const FrameTensor& t, std::size_t slot, const FrameTensor& metric_inverse) {
  if (slot >= t.rank() || t.signature()[slot] != IndexKind::lower) throw TensorError("raise needs a lower slot");
  return apply_metric(t, slot, metric_inverse, IndexKind::upper);
}

FrameTensor lower(const FrameTensor& t, std::size_t slot, const FrameTensor& metric) {
  if (slot >= t.rank() || t.signature()[slot] != IndexKind::upper) throw TensorError("lower needs an upper slot");
  return apply_metric(t, slot, metric, IndexKind::lower);
}

FrameTensor permute(const FrameTensor& t, const std::vector<std::size_t>& order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw TensorError("permutation length mismatch");
  std::vector<bool> seen(r, false);
  for (auto o : order) {
    if (o >= r || seen[o]) throw TensorError("not a permutation");
    seen[o] = true;
  }
  Signature sig(r);
  for (std::size_t s = 0; s < r; ++s) sig[s] = t.signature()[order[s]];
  FrameTensor out(t.dim(), sig);
  MultiIndex src(r);
  for (std::size_t f = 0; f < out.size(); ++f) {
    MultiIndex idx = out.unflatten(f);
    for (std::size_t s = 0; s < r; ++s) src[order[s]] = idx[s];
    out.flat(f) = t.at(src);
  }
  return out;
}

namespace {
std::vector<std::size_t> swap_order(std::size_t rank, std::size_t a, std::size_t b) {
  std::vector<std::size_t> order(rank);
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[a], order[b]);
  return order;
}
}  // namespace

FrameTensor symmetrize(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b) {
  if (slot_a >= t.rank() || slot_b >= t.rank()) throw TensorError("slot out of range");
  if (t.signature()[slot_a] != t.signature()[slot_b]) throw TensorError("symmetrize needs slots of equal kind");
  FrameTensor sum = t + permute(t, swap_order(t.rank(), slot_a, slot_b));
  return sum.map([](const Scalar& s) { return s.div_rational(2); });
}

bool is_symmetric(const FrameTensor& t, std::size_t slot_a, std::size_t slot_b) {
  if (slot_a >= t.rank() || slot_b >= t.rank()) throw TensorError("slot out of range");
  return t == permute(t, swap_order(t.rank(), slot_a, slot_b));
}

FrameTensor compose(const FrameTensor& a, const FrameTensor& b) {
  const Signature mixed{IndexKind::upper, IndexKind::lower};
  if (a.signature() != mixed || b.signature() != mixed) throw TensorError("compose needs (1,1)-tensors");
  if (a.dim() != b.dim()) throw TensorError("dimension mismatch");
  return contract(tensor_product(a, b), 1, 2);
}

std::optional<FrameTensor> inverse_rational(const FrameTensor& m) {
  auto a = rational_rows(m);
  const std::size_t d = m.dim();
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < d; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < d; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  auto flip = [](IndexKind k) { return k == IndexKind::lower ? IndexKind::upper : IndexKind::lower; };
  FrameTensor out(d, {flip(m.signature()[0]), flip(m.signature()[1])});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out({i, j}) = Scalar(inv[i][j]);
  return out;
}

Inertia inertia(const FrameTensor& symmetric) {
  auto a = rational_rows(symmetric);
  const std::size_t d = symmetric.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (a[i][j] != a[j][i]) throw TensorError("inertia needs a symmetric matrix");

  Inertia result;
  // congruence steps keep the matrix symmetric: row op followed by the same column op
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t j = 0; j < d; ++j) a[target][j] += f * a[source][j];
    for (std::size_t j = 0; j < d; ++j) a[j][target] += f * a[j][source];
  };
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t piv = k;
    while (piv < d && a[piv][piv] == 0) ++piv;
    if (piv == d) {
      // zero diagonal block: create a pivot from an off-diagonal entry
      bool made = false;
      for (std::size_t i = k; i < d && !made; ++i)
        for (std::size_t j = i + 1; j < d && !made; ++j)
          if (a[i][j] != 0) {
            add_multiple(i, j, 1);
            piv = i;
            made = true;
          }
      if (!made) {
        result.zero += d - k;
        break;
      }
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const Rational p = a[k][k];
    for (std::size_t i = k + 1; i < d; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = -a[i][k] / p;
      add_multiple(i, k, f);
    }
    if (p > 0)
      ++result.positive;
    else
      ++result.negative;
  }
  return result;
}

}  // namespace pisol
