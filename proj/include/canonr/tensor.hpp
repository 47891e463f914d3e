#pragma once

#include <cstddef>
#include <vector>

#include "canonr/algebra.hpp"

namespace canonr {

enum class Side { Left, Right };

/// An element of the m-fold tensor power of A, stored densely. The monomial
/// e_{i_1} (x) ... (x) e_{i_m} lives at index sum_t i_t n^{m-t} (leg 1 major).
///
/// Legs are numbered from 1, matching the usual superscript notation
/// (R^{124} places the three legs of R in slots 1, 2 and 4).
class TensorElement {
 public:
  TensorElement() = default;
  /// Zero tensor.
  TensorElement(const Algebra& a, std::size_t arity);
  /// Throws ShapeMismatch when coeffs.size() != dim^arity.
  TensorElement(const Algebra& a, std::size_t arity, Vector coeffs);

  /// coef * e_{monomial[0]} (x) ... (x) e_{monomial[m-1]}
  static TensorElement monomial(const Algebra& a, const std::vector<std::size_t>& monomial,
                                const FieldElement& coef);
  /// x_1 (x) ... (x) x_m
  static TensorElement pure(const std::vector<AlgebraElement>& factors);

  const Algebra& algebra() const { return algebra_; }
  std::size_t arity() const { return arity_; }
  const Vector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  const FieldElement& coeff(const std::vector<std::size_t>& monomial) const {
    return coeffs_[index_of(monomial)];
  }
  std::size_t index_of(const std::vector<std::size_t>& monomial) const;
  std::vector<std::size_t> monomial_of(std::size_t index) const;

  /// Nonzero entries in index order.
  SparseVector nonzeros() const { return to_sparse(coeffs_); }
  std::size_t term_count() const;

  TensorElement& operator+=(const TensorElement& t);
  TensorElement& operator-=(const TensorElement& t);
  friend TensorElement operator+(TensorElement s, const TensorElement& t) { return s += t; }
  friend TensorElement operator-(TensorElement s, const TensorElement& t) { return s -= t; }
  friend TensorElement operator*(const FieldElement& c, TensorElement t);
  friend bool operator==(const TensorElement& s, const TensorElement& t);

 private:
  Algebra algebra_;
  std::size_t arity_ = 0;
  Vector coeffs_;
};

/// Multiplicative identity 1 (x) ... (x) 1 of the m-fold tensor power.
TensorElement unit_tensor(const Algebra& a, std::size_t arity);

/// Legwise product. Throws AlgebraMismatch / ArityMismatch.
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t);

/// Replaces legs `leg` and `leg + 1` by their product. Throws LegOutOfRange.
TensorElement contract_legs(const TensorElement& t, std::size_t leg);

/// Leg t of the input lands in slot perm[t-1] of the output (1-based values).
/// Throws BadPermutation.
TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& perm);

/// Places the legs of t at `slots` (strictly increasing, 1-based) of an
/// arity-m tensor, with 1 in every other slot. Throws BadSlots.
TensorElement embed_legs(const TensorElement& t, std::size_t arity, const std::vector<std::size_t>& slots);

/// Multiplies leg `leg` by a on the given side. Throws LegOutOfRange.
TensorElement act_leg(const TensorElement& t, std::size_t leg, const AlgebraElement& a, Side side);

namespace detail {

/// out[idx] += coef * prod_t legs[t][i_t] over every choice of entries, where
/// idx is the leg-1-major index of (i_1, ..., i_m) in base n.
void expand_legs(const std::vector<const SparseVector*>& legs, std::size_t n, const FieldElement& coef,
                 Vector& out);

}  // namespace detail

}  // namespace canonr
