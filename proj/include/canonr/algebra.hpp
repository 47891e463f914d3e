#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canonr/linsolve.hpp"
#include "canonr/scalars.hpp"

namespace canonr {

/// A finite-dimensional unital algebra over a field, given on a basis
/// e_0..e_{n-1} by structure constants: e_i e_j = sum_k c[i][j][k] e_k.
///
/// Algebra is a cheap handle to immutable shared data. Constructing one from
/// raw tables does not validate it; `validated()` checks associativity and the
/// unit laws and returns a handle that the solvers accept.
class Algebra {
 public:
  Algebra() = default;
  /// `table` is flattened as table[(i * n + j) * n + k]. Throws ShapeMismatch.
  Algebra(const FieldDescriptor& field, std::size_t dim, std::vector<FieldElement> table,
          std::vector<FieldElement> unit, std::string label);

  const FieldDescriptor& field() const { return data_->field; }
  std::size_t dim() const { return data_->dim; }
  const std::string& label() const { return data_->label; }
  bool is_validated() const { return data_->validated; }
  bool is_commutative() const;

  const FieldElement& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->table[(i * data_->dim + j) * data_->dim + k];
  }
  /// e_i e_j as a sparse coordinate vector.
  const SparseVector& product(std::size_t i, std::size_t j) const {
    return data_->products[i * data_->dim + j];
  }
  const Vector& unit() const { return data_->unit; }
  const SparseVector& sparse_unit() const { return data_->sparse_unit; }
  const std::vector<FieldElement>& table() const { return data_->table; }

  /// Validated copy (same data, flag set). Throws InvalidAlgebra with the
  /// failing witness in the message.
  Algebra validated() const;
  Algebra relabeled(std::string label) const;

  /// Same field, dimension, structure constants and unit.
  friend bool same_algebra(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    FieldDescriptor field;
    std::size_t dim = 0;
    std::vector<FieldElement> table;
    Vector unit;
    SparseVector sparse_unit;
    std::vector<SparseVector> products;
    std::string label;
    bool validated = false;
  };
  std::shared_ptr<const Data> data_;
};

struct AlgebraElement {
  Algebra algebra;
  Vector coords;

  static AlgebraElement basis(const Algebra& a, std::size_t i);
  static AlgebraElement one(const Algebra& a);
  static AlgebraElement zero(const Algebra& a);

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const FieldElement& s, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);
};

/// coords_k = sum_{i,j} x_i y_j c_{ij}^k. Throws AlgebraMismatch.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }

struct ValidationReport {
  enum class Failure { None, Associativity, LeftUnit, RightUnit };
  Failure failure = Failure::None;
  /// Basis indices of the failing triple (associativity) or element (unit laws).
  std::size_t i = 0, j = 0, k = 0;
  Vector lhs, rhs;

  bool pass() const { return failure == Failure::None; }
  std::string describe() const;
};

/// Checks (e_i e_j) e_k = e_i (e_j e_k) and u e_i = e_i u = e_i, reporting the
/// first failure in lexicographic order.
ValidationReport validate_algebra(const Algebra& a);

/// M_n(k) on the row-major matrix units e_11, e_12, ..., e_nn.
Algebra build_matrix_algebra(std::size_t n, const FieldDescriptor& field);

/// Generalized quaternions on (1, i, j, k): i^2 = a, j^2 = b, ij = -ji = k.
/// Throws CharacteristicTwo or NonInvertibleParameter.
Algebra build_quaternion(const FieldElement& a, const FieldElement& b);

/// k[x]/(f) on 1, x, ..., x^{d-1}; `modulus` lists f's coefficients from the
/// constant term up, and must end in 1. Throws NonMonicModulus.
Algebra build_poly_quotient(const std::vector<FieldElement>& modulus, const FieldDescriptor& field);

/// Basis e_i (x) f_j at index i * dim B + j. Throws FieldMismatch.
Algebra build_tensor_product(const Algebra& a, const Algebra& b);

Algebra opposite(const Algebra& a);

/// A x B with A's basis first. Throws FieldMismatch.
Algebra build_direct_sum(const Algebra& a, const Algebra& b);

/// Basis of Z(A) as the nullspace of the stacked commutator maps z -> z e_i - e_i z.
std::vector<Vector> center(const Algebra& a);

/// Left and right multiplication operators x -> e_i x and x -> x e_i.
SparseMatrix left_multiplication(const Algebra& a, std::size_t i);
SparseMatrix right_multiplication(const Algebra& a, std::size_t i);

}  // namespace canonr
