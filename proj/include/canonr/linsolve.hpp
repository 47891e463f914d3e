#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "canonr/scalars.hpp"

namespace canonr {

using Vector = std::vector<FieldElement>;

struct SparseEntry {
  std::size_t index;
  FieldElement value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

Vector zero_vector(std::size_t n, const FieldDescriptor& field);
bool is_zero(const Vector& v);
SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n, const FieldDescriptor& field);

/// Scatter-gather accumulator for building sparse vectors of a fixed length.
/// Slots are constructed lazily; hot loops should borrow() pooled instances.
class Accumulator {
 public:
  Accumulator(std::size_t length, const FieldDescriptor& field);

  void add(std::size_t index, const FieldElement& value);
  void add_product(std::size_t index, const FieldElement& x, const FieldElement& y);
  /// this += coef * v
  void axpy(const FieldElement& coef, const SparseVector& v);
  /// Returns the accumulated vector (sorted, zeros dropped) and resets.
  SparseVector take();
  std::size_t length() const { return slots_.size(); }

  /// Borrows a cleared accumulator from a per-thread pool; returned on destruction.
  class Lease {
   public:
    explicit Lease(std::unique_ptr<Accumulator> acc) : acc_(std::move(acc)) {}
    Lease(Lease&&) = default;
    Lease& operator=(Lease&&) = delete;
    ~Lease();
    Accumulator& operator*() { return *acc_; }
    Accumulator* operator->() { return acc_.get(); }

   private:
    std::unique_ptr<Accumulator> acc_;
  };
  static Lease borrow(std::size_t length, const FieldDescriptor& field);

 private:
  FieldElement& slot(std::size_t index);

  FieldDescriptor field_;
  std::vector<std::optional<FieldElement>> slots_;
  std::vector<std::size_t> touched_;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field);

  static ExactMatrix identity(std::size_t n, const FieldDescriptor& field);
  static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols,
                               const FieldDescriptor& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector apply(const Vector& x) const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldDescriptor field_;
  std::vector<FieldElement> data_;
};

/// Column-compressed matrix; the workhorse for large, structured operators.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field);

  static SparseMatrix identity(std::size_t n, const FieldDescriptor& field);
  static SparseMatrix from_dense(const ExactMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const FieldDescriptor& field() const { return field_; }

  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  void set_column(std::size_t c, SparseVector v) { columns_[c] = std::move(v); }
  std::size_t nonzeros() const;

  SparseVector apply(const SparseVector& x) const;
  FieldElement entry(std::size_t r, std::size_t c) const;
  ExactMatrix to_dense() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  FieldDescriptor field_;
  std::vector<SparseVector> columns_;
};

/// First (column, row) position where two equally shaped matrices differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMatrix& a,
                                                                     const SparseMatrix& b);

/// Incrementally maintained reduced row echelon form of a row space.
/// Rows are fed one at a time (so huge constraint systems can be streamed);
/// at every point the stored rows are the RREF of everything added so far.
class RowReducer {
 public:
  RowReducer(std::size_t cols, const FieldDescriptor& field);

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(const SparseVector& row);

  std::size_t cols() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const FieldDescriptor& field() const { return field_; }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> free_columns() const;
  /// The RREF row whose leading entry (equal to one) sits in `col`.
  const SparseVector& pivot_row(std::size_t col) const;

  /// Normal form modulo the row space: the result has no pivot-column entries.
  SparseVector reduce(const SparseVector& v) const;

  /// Canonical free-variable basis of {x : row . x = 0 for all rows}.
  std::vector<SparseVector> nullspace() const;

 private:
  FieldDescriptor field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::int64_t> pivot_row_;
  // Rows that may contain a given column; may hold stale ids.
  std::vector<std::vector<std::uint32_t>> col_users_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Dense Gauss-Jordan elimination; pivots are taken column by column,
/// choosing the first nonzero entry from the top.
RrefResult rref(const ExactMatrix& m);

/// Basis of the kernel in the free-variable parametrization induced by rref.
std::vector<Vector> nullspace(const ExactMatrix& m);

struct AffineSolutionSet {
  enum class Status { Empty, Affine };
  Status status = Status::Empty;
  Vector particular;
  std::vector<Vector> nullspace_basis;

  bool empty() const { return status == Status::Empty; }
  std::size_t dimension() const { return nullspace_basis.size(); }
};

AffineSolutionSet solve_affine(const ExactMatrix& m, const Vector& b);

/// Same contract, for systems streamed as sparse rows.
AffineSolutionSet solve_affine_sparse(const std::vector<SparseVector>& rows,
                                      const std::vector<FieldElement>& rhs, std::size_t cols,
                                      const FieldDescriptor& field);

std::size_t rank(const ExactMatrix& m);
std::size_t rank(const SparseMatrix& m);
bool is_bijective(const ExactMatrix& m);

}  // namespace canonr
