#include "canonr/linsolve.hpp"

#include <algorithm>
#include <cassert>

namespace canonr {

Vector zero_vector(std::size_t n, const FieldDescriptor& field) {
  return Vector(n, FieldElement::zero(field));
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n, const FieldDescriptor& field) {
  Vector out = zero_vector(n, field);
  for (const auto& e : v) out[e.index] = e.value;
  return out;
}

// ---------------------------------------------------------------------------
// Accumulator

Accumulator::Accumulator(std::size_t length, const FieldDescriptor& field)
    : field_(field), slots_(length) {}

FieldElement& Accumulator::slot(std::size_t index) {
  auto& s = slots_[index];
  if (!s) {
    s.emplace(FieldElement::zero(field_));
    touched_.push_back(index);
  }
  return *s;
}

void Accumulator::add(std::size_t index, const FieldElement& value) {
  if (value.is_zero()) return;
  slot(index) += value;
}

void Accumulator::add_product(std::size_t index, const FieldElement& x, const FieldElement& y) {
  if (x.is_zero() || y.is_zero()) return;
  slot(index).add_product(x, y);
}

void Accumulator::axpy(const FieldElement& coef, const SparseVector& v) {
  if (coef.is_zero()) return;
  for (const auto& e : v) slot(e.index).add_product(coef, e.value);
}

namespace {

std::vector<std::unique_ptr<Accumulator>>& accumulator_pool() {
  thread_local std::vector<std::unique_ptr<Accumulator>> pool;
  return pool;
}

}  // namespace

Accumulator::Lease Accumulator::borrow(std::size_t length, const FieldDescriptor& field) {
  auto& pool = accumulator_pool();
  for (auto it = pool.begin(); it != pool.end(); ++it) {
    if ((*it)->length() == length) {
      std::unique_ptr<Accumulator> acc = std::move(*it);
      pool.erase(it);
      acc->field_ = field;
      return Lease(std::move(acc));
    }
  }
  return Lease(std::make_unique<Accumulator>(length, field));
}

Accumulator::Lease::~Lease() {
  if (!acc_) return;
  acc_->take();
  auto& pool = accumulator_pool();
  if (pool.size() >= 16) pool.erase(pool.begin());
  pool.push_back(std::move(acc_));
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  out.reserve(touched_.size());
  for (std::size_t idx : touched_) {
    auto& s = slots_[idx];
    if (!s->is_zero()) out.push_back({idx, std::move(*s)});
    s.reset();
  }
  touched_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldElement::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldDescriptor& field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols,
                                   const FieldDescriptor& field) {
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector ExactMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].add_product(at(r, c), x[c]);
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, c).add_product(x, b.at(k, c));
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
    : rows_(rows), field_(field), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n, const FieldDescriptor& field) {
  SparseMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = {{i, FieldElement::one(field)}};
  return m;
}

SparseMatrix SparseMatrix::from_dense(const ExactMatrix& d) {
  SparseMatrix m(d.rows(), d.cols(), d.field());
  for (std::size_t c = 0; c < d.cols(); ++c) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (!d.at(r, c).is_zero()) m.columns_[c].push_back({r, d.at(r, c)});
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  auto acc = Accumulator::borrow(rows_, field_);
  for (const auto& e : x) {
    if (e.index >= columns_.size()) throw Error(ErrorKind::ShapeMismatch, "vector longer than matrix width");
    acc->axpy(e.value, columns_[e.index]);
  }
  return acc->take();
}

FieldElement SparseMatrix::entry(std::size_t r, std::size_t c) const {
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t idx) { return e.index < idx; });
  if (it != col.end() && it->index == r) return it->value;
  return FieldElement::zero(field_);
}

ExactMatrix SparseMatrix::to_dense() const {
  ExactMatrix d(rows_, cols(), field_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) d.at(e.index, c) = e.value;
  }
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows_) throw Error(ErrorKind::ShapeMismatch, "sparse product shape mismatch");
  SparseMatrix out(a.rows_, b.cols(), a.field_);
  Accumulator acc(a.rows_, a.field_);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& e : b.columns_[c]) acc.axpy(e.value, a.columns_[e.index]);
    out.columns_[c] = acc.take();
  }
  return out;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "sparse sum shape mismatch");
  }
  SparseMatrix out(a.rows(), a.cols(), a.field());
  Accumulator acc(a.rows(), a.field());
  const FieldElement one = FieldElement::one(a.field());
  const FieldElement sign = subtract ? -one : one;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    acc.axpy(one, a.column(c));
    acc.axpy(sign, b.column(c));
    out.set_column(c, acc.take());
  }
  return out;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
  return !first_difference(a, b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMatrix& a,
                                                                     const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "comparing matrices of different shapes");
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.column(c);
    const auto& y = b.column(c);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) return std::pair{c, x[i].index};
      if (i == x.size() || y[j].index < x[i].index) return std::pair{c, y[j].index};
      if (!(x[i].value == y[j].value)) return std::pair{c, x[i].index};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(std::size_t cols, const FieldDescriptor& field)
    : field_(field), pivot_row_(cols, -1), col_users_(cols) {}

SparseVector RowReducer::reduce(const SparseVector& v) const {
  auto lease = Accumulator::borrow(cols(), field_);
  Accumulator& acc = *lease;
  for (const auto& e : v) {
    if (e.index >= cols()) throw Error(ErrorKind::ShapeMismatch, "row longer than reducer width");
    acc.add(e.index, e.value);
  }
  // Stored rows carry no pivot columns besides their own, so each pivot
  // entry of v is cleared by exactly one subtraction.
  for (const auto& e : v) {
    std::int64_t r = pivot_row_[e.index];
    if (r >= 0) acc.axpy(-e.value, rows_[static_cast<std::size_t>(r)]);
  }
  return acc.take();
}

bool RowReducer::add_row(const SparseVector& row) {
  SparseVector v = reduce(row);
  if (v.empty()) return false;

  const std::size_t pivot = v.front().index;
  const FieldElement scale = v.front().value.inverse();
  for (auto& e : v) e.value *= scale;

  const auto new_id = static_cast<std::uint32_t>(rows_.size());
  // Clear the new pivot column from every stored row.
  auto lease = Accumulator::borrow(cols(), field_);
  Accumulator& acc = *lease;
  const FieldElement one = FieldElement::one(field_);
  for (std::uint32_t id : col_users_[pivot]) {
    SparseVector& existing = rows_[id];
    auto it = std::lower_bound(existing.begin(), existing.end(), pivot,
                               [](const SparseEntry& e, std::size_t idx) { return e.index < idx; });
    if (it == existing.end() || it->index != pivot) continue;
    FieldElement coef = -it->value;
    acc.axpy(one, existing);
    acc.axpy(coef, v);
    existing = acc.take();
    for (const auto& e : v) {
      if (e.index != pivot) col_users_[e.index].push_back(id);
    }
  }
  col_users_[pivot].clear();

  for (const auto& e : v) {
    if (e.index != pivot) col_users_[e.index].push_back(new_id);
  }
  rows_.push_back(std::move(v));
  row_pivot_.push_back(pivot);
  pivot_row_[pivot] = new_id;
  return true;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (pivot_row_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> RowReducer::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

const SparseVector& RowReducer::pivot_row(std::size_t col) const {
  assert(pivot_row_[col] >= 0);
  return rows_[static_cast<std::size_t>(pivot_row_[col])];
}

std::vector<SparseVector> RowReducer::nullspace() const {
  std::vector<std::size_t> free = free_columns();
  std::vector<std::size_t> position(cols(), 0);
  for (std::size_t i = 0; i < free.size(); ++i) position[free[i]] = i;

  std::vector<std::vector<SparseEntry>> basis(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) basis[i].push_back({free[i], FieldElement::one(field_)});
  for (std::size_t id = 0; id < rows_.size(); ++id) {
    for (const auto& e : rows_[id]) {
      if (e.index == row_pivot_[id]) continue;
      basis[position[e.index]].push_back({row_pivot_[id], -e.value});
    }
  }
  for (auto& v : basis) {
    std::sort(v.begin(), v.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Dense routines

RrefResult rref(const ExactMatrix& m) {
  RrefResult res{m, 0, {}};
  ExactMatrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(row, c));
    }
    const FieldElement inv = a.at(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const FieldElement factor = -a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c).add_product(factor, a.at(row, c));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::vector<Vector> nullspace(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols(), m.field());
    v[f] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    basis.push_back(std::move(v));
  }
  assert(basis.size() + r.rank == m.cols());
  return basis;
}

AffineSolutionSet solve_affine(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult r = rref(aug);
  AffineSolutionSet out;
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return out;
  out.status = AffineSolutionSet::Status::Affine;
  out.particular = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < r.rank; ++i) out.particular[r.pivots[i]] = r.reduced.at(i, m.cols());
  out.nullspace_basis = nullspace(m);
  return out;
}

AffineSolutionSet solve_affine_sparse(const std::vector<SparseVector>& rows,
                                      const std::vector<FieldElement>& rhs, std::size_t cols,
                                      const FieldDescriptor& field) {
  if (rows.size() != rhs.size()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  RowReducer red(cols + 1, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector row = rows[i];
    if (!rhs[i].is_zero()) row.push_back({cols, rhs[i]});
    red.add_row(row);
  }
  AffineSolutionSet out;
  if (red.is_pivot(cols)) return out;
  out.status = AffineSolutionSet::Status::Affine;
  out.particular = zero_vector(cols, field);
  for (std::size_t p : red.pivot_columns()) {
    const SparseVector& row = red.pivot_row(p);
    if (!row.empty() && row.back().index == cols) out.particular[p] = row.back().value;
  }
  const std::vector<std::size_t> free = red.free_columns();
  const std::vector<SparseVector> kernel = red.nullspace();
  for (std::size_t i = 0; i < free.size(); ++i) {
    // The augmented column is free whenever the system is consistent.
    if (free[i] == cols) continue;
    out.nullspace_basis.push_back(to_dense(kernel[i], cols, field));
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  RowReducer red(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) row.push_back({c, m.at(r, c)});
    }
    red.add_row(row);
  }
  return red.rank();
}

std::size_t rank(const SparseMatrix& m) {
  // Column rank equals row rank.
  RowReducer red(m.rows(), m.field());
  for (std::size_t c = 0; c < m.cols(); ++c) red.add_row(m.column(c));
  return red.rank();
}

bool is_bijective(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "bijectivity needs a square matrix");
  return rank(m) == m.cols();
}

}  // namespace canonr
