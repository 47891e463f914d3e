#include "canonr/tensor.hpp"

#include <algorithm>

namespace canonr {

namespace {

std::size_t checked_power(std::size_t n, std::size_t m) {
  std::size_t out = 1;
  for (std::size_t t = 0; t < m; ++t) {
    if (out > (std::size_t{1} << 40) / std::max<std::size_t>(n, 1)) {
      throw Error(ErrorKind::UnsupportedSize, "tensor power too large to store densely");
    }
    out *= n;
  }
  return out;
}

void require_same_algebra(const TensorElement& s, const TensorElement& t) {
  if (!same_algebra(s.algebra(), t.algebra())) {
    throw Error(ErrorKind::AlgebraMismatch, "tensors over different algebras");
  }
  if (s.arity() != t.arity()) {
    throw Error(ErrorKind::ArityMismatch, "tensors of arity " + std::to_string(s.arity()) + " and " +
                                              std::to_string(t.arity()));
  }
}

}  // namespace

void detail::expand_legs(const std::vector<const SparseVector*>& legs, std::size_t n,
                         const FieldElement& coef, Vector& out) {
  const std::size_t m = legs.size();
  for (const SparseVector* leg : legs) {
    if (leg->empty()) return;
  }
  std::vector<std::size_t> pos(m, 0);
  while (true) {
    FieldElement c = coef;
    std::size_t idx = 0;
    for (std::size_t t = 0; t < m; ++t) {
      const SparseEntry& e = (*legs[t])[pos[t]];
      c *= e.value;
      idx = idx * n + e.index;
    }
    out[idx] += c;
    std::size_t t = m;
    while (t > 0) {
      --t;
      if (++pos[t] < legs[t]->size()) break;
      pos[t] = 0;
      if (t == 0) return;
    }
  }
}

using detail::expand_legs;

TensorElement::TensorElement(const Algebra& a, std::size_t arity)
    : algebra_(a), arity_(arity), coeffs_(checked_power(a.dim(), arity), FieldElement::zero(a.field())) {
  if (arity == 0) throw Error(ErrorKind::ArityMismatch, "tensor arity must be at least 1");
}

TensorElement::TensorElement(const Algebra& a, std::size_t arity, Vector coeffs)
    : algebra_(a), arity_(arity), coeffs_(std::move(coeffs)) {
  if (arity == 0) throw Error(ErrorKind::ArityMismatch, "tensor arity must be at least 1");
  if (coeffs_.size() != checked_power(a.dim(), arity)) {
    throw Error(ErrorKind::ShapeMismatch, "coefficient vector length must be dim^arity");
  }
}

TensorElement TensorElement::monomial(const Algebra& a, const std::vector<std::size_t>& monomial,
                                      const FieldElement& coef) {
  TensorElement t(a, monomial.size());
  t.coeffs_[t.index_of(monomial)] = coef;
  return t;
}

TensorElement TensorElement::pure(const std::vector<AlgebraElement>& factors) {
  if (factors.empty()) throw Error(ErrorKind::ArityMismatch, "pure tensor needs at least one factor");
  const Algebra& a = factors.front().algebra;
  TensorElement t(a, factors.size());
  std::vector<SparseVector> legs;
  std::vector<const SparseVector*> ptrs;
  for (const auto& f : factors) {
    if (!same_algebra(f.algebra, a)) throw Error(ErrorKind::AlgebraMismatch, "factors over different algebras");
    legs.push_back(to_sparse(f.coords));
  }
  for (const auto& l : legs) ptrs.push_back(&l);
  expand_legs(ptrs, a.dim(), FieldElement::one(a.field()), t.coeffs_);
  return t;
}

std::size_t TensorElement::index_of(const std::vector<std::size_t>& monomial) const {
  if (monomial.size() != arity_) throw Error(ErrorKind::ArityMismatch, "monomial length differs from arity");
  std::size_t idx = 0;
  for (std::size_t i : monomial) {
    if (i >= algebra_.dim()) throw Error(ErrorKind::ShapeMismatch, "basis index out of range");
    idx = idx * algebra_.dim() + i;
  }
  return idx;
}

std::vector<std::size_t> TensorElement::monomial_of(std::size_t index) const {
  std::vector<std::size_t> out(arity_);
  for (std::size_t t = arity_; t > 0; --t) {
    out[t - 1] = index % algebra_.dim();
    index /= algebra_.dim();
  }
  return out;
}

std::size_t TensorElement::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const FieldElement& x) { return !x.is_zero(); }));
}

TensorElement& TensorElement::operator+=(const TensorElement& t) {
  require_same_algebra(*this, t);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += t.coeffs_[i];
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& t) {
  require_same_algebra(*this, t);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= t.coeffs_[i];
  return *this;
}

TensorElement operator*(const FieldElement& c, TensorElement t) {
  for (auto& x : t.coeffs_) x *= c;
  return t;
}

bool operator==(const TensorElement& s, const TensorElement& t) {
  return s.arity_ == t.arity_ && same_algebra(s.algebra_, t.algebra_) && s.coeffs_ == t.coeffs_;
}

TensorElement unit_tensor(const Algebra& a, std::size_t arity) {
  return TensorElement::pure(std::vector<AlgebraElement>(arity, AlgebraElement::one(a)));
}

TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
  require_same_algebra(s, t);
  const Algebra& a = s.algebra();
  const std::size_t m = s.arity();
  TensorElement out(a, m);
  Vector coeffs = zero_vector(out.size(), a.field());
  const SparseVector sn = s.nonzeros();
  const SparseVector tn = t.nonzeros();
  std::vector<std::vector<std::size_t>> tmon;
  tmon.reserve(tn.size());
  for (const auto& y : tn) tmon.push_back(t.monomial_of(y.index));
  std::vector<const SparseVector*> legs(m);
  for (const auto& x : sn) {
    const auto mx = s.monomial_of(x.index);
    for (std::size_t yi = 0; yi < tn.size(); ++yi) {
      const auto& y = tn[yi];
      const auto& my = tmon[yi];
      for (std::size_t l = 0; l < m; ++l) legs[l] = &a.product(mx[l], my[l]);
      expand_legs(legs, a.dim(), x.value * y.value, coeffs);
    }
  }
  return TensorElement(a, m, std::move(coeffs));
}

TensorElement contract_legs(const TensorElement& t, std::size_t leg) {
  if (leg < 1 || leg >= t.arity()) {
    throw Error(ErrorKind::LegOutOfRange, "contraction leg " + std::to_string(leg) + " out of range for arity " +
                                              std::to_string(t.arity()));
  }
  const Algebra& a = t.algebra();
  const std::size_t m = t.arity() - 1;
  TensorElement out(a, m);
  Vector coeffs = zero_vector(out.size(), a.field());
  std::vector<SparseVector> singles(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) singles[i] = {{i, FieldElement::one(a.field())}};
  std::vector<const SparseVector*> legs(m);
  for (const auto& x : t.nonzeros()) {
    const auto mon = t.monomial_of(x.index);
    for (std::size_t l = 0, src = 0; l < m; ++l, ++src) {
      if (l == leg - 1) {
        legs[l] = &a.product(mon[src], mon[src + 1]);
        ++src;
      } else {
        legs[l] = &singles[mon[src]];
      }
    }
    expand_legs(legs, a.dim(), x.value, coeffs);
  }
  return TensorElement(a, m, std::move(coeffs));
}

TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& perm) {
  const std::size_t m = t.arity();
  std::vector<bool> seen(m + 1, false);
  if (perm.size() != m) throw Error(ErrorKind::BadPermutation, "permutation length differs from arity");
  for (std::size_t p : perm) {
    if (p < 1 || p > m || seen[p]) throw Error(ErrorKind::BadPermutation, "not a permutation of the legs");
    seen[p] = true;
  }
  TensorElement out(t.algebra(), m);
  Vector coeffs = zero_vector(out.size(), t.algebra().field());
  std::vector<std::size_t> dest(m);
  for (const auto& x : t.nonzeros()) {
    const auto mon = t.monomial_of(x.index);
    for (std::size_t l = 0; l < m; ++l) dest[perm[l] - 1] = mon[l];
    coeffs[out.index_of(dest)] = x.value;
  }
  return TensorElement(t.algebra(), m, std::move(coeffs));
}

TensorElement embed_legs(const TensorElement& t, std::size_t arity, const std::vector<std::size_t>& slots) {
  if (slots.size() != t.arity()) throw Error(ErrorKind::BadSlots, "slot count differs from tensor arity");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] < 1 || slots[i] > arity || (i > 0 && slots[i] <= slots[i - 1])) {
      throw Error(ErrorKind::BadSlots, "slots must be strictly increasing within 1..arity");
    }
  }
  const Algebra& a = t.algebra();
  TensorElement out(a, arity);
  Vector coeffs = zero_vector(out.size(), a.field());
  std::vector<SparseVector> singles(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) singles[i] = {{i, FieldElement::one(a.field())}};
  std::vector<const SparseVector*> legs(arity, &a.sparse_unit());
  for (const auto& x : t.nonzeros()) {
    const auto mon = t.monomial_of(x.index);
    for (std::size_t i = 0; i < slots.size(); ++i) legs[slots[i] - 1] = &singles[mon[i]];
    expand_legs(legs, a.dim(), x.value, coeffs);
  }
  return TensorElement(a, arity, std::move(coeffs));
}

TensorElement act_leg(const TensorElement& t, std::size_t leg, const AlgebraElement& a, Side side) {
  if (leg < 1 || leg > t.arity()) throw Error(ErrorKind::LegOutOfRange, "leg out of range");
  const Algebra& alg = t.algebra();
  if (!same_algebra(alg, a.algebra)) throw Error(ErrorKind::AlgebraMismatch, "acting element from another algebra");
  const std::size_t n = alg.dim();
  // Column x of the action matrix: a e_x (left) or e_x a (right).
  std::vector<SparseVector> action(n);
  {
    Accumulator acc(n, alg.field());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i].is_zero()) continue;
        acc.axpy(a.coords[i], side == Side::Left ? alg.product(i, x) : alg.product(x, i));
      }
      action[x] = acc.take();
    }
  }
  TensorElement out(alg, t.arity());
  Vector coeffs = zero_vector(out.size(), alg.field());
  std::size_t stride = 1;
  for (std::size_t l = leg; l < t.arity(); ++l) stride *= n;
  for (const auto& x : t.nonzeros()) {
    const std::size_t digit = (x.index / stride) % n;
    const std::size_t base = x.index - digit * stride;
    for (const auto& e : action[digit]) coeffs[base + e.index * stride].add_product(x.value, e.value);
  }
  return TensorElement(alg, t.arity(), std::move(coeffs));
}

}  // namespace canonr
