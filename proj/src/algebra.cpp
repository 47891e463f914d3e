#include "canonr/algebra.hpp"

#include <sstream>

namespace canonr {

Algebra::Algebra(const FieldDescriptor& field, std::size_t dim, std::vector<FieldElement> table,
                 std::vector<FieldElement> unit, std::string label) {
  if (dim == 0) throw Error(ErrorKind::ShapeMismatch, "algebra dimension must be at least 1");
  if (table.size() != dim * dim * dim) {
    throw Error(ErrorKind::ShapeMismatch, "structure constant table needs dim^3 = " +
                                              std::to_string(dim * dim * dim) + " entries, got " +
                                              std::to_string(table.size()));
  }
  if (unit.size() != dim) throw Error(ErrorKind::ShapeMismatch, "unit vector length differs from dimension");
  for (const auto& x : table) {
    if (!(x.field() == field)) throw Error(ErrorKind::DescriptorMismatch, "structure constant over a different field");
  }
  for (const auto& x : unit) {
    if (!(x.field() == field)) throw Error(ErrorKind::DescriptorMismatch, "unit coordinate over a different field");
  }
  auto d = std::make_shared<Data>();
  d->field = field;
  d->dim = dim;
  d->table = std::move(table);
  d->unit = std::move(unit);
  d->sparse_unit = to_sparse(d->unit);
  d->label = std::move(label);
  d->products.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const FieldElement& c = d->table[(i * dim + j) * dim + k];
        if (!c.is_zero()) d->products[i * dim + j].push_back({k, c});
      }
    }
  }
  data_ = std::move(d);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!(constant(i, j, k) == constant(j, i, k))) return false;
      }
    }
  }
  return true;
}

Algebra Algebra::validated() const {
  if (data_->validated) return *this;
  ValidationReport report = validate_algebra(*this);
  if (!report.pass()) {
    throw Error(ErrorKind::InvalidAlgebra, "algebra \"" + label() + "\" is invalid: " + report.describe());
  }
  auto d = std::make_shared<Data>(*data_);
  d->validated = true;
  Algebra out;
  out.data_ = std::move(d);
  return out;
}

Algebra Algebra::relabeled(std::string label) const {
  auto d = std::make_shared<Data>(*data_);
  d->label = std::move(label);
  Algebra out;
  out.data_ = std::move(d);
  return out;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.field() == b.field() && a.dim() == b.dim() && a.table() == b.table() && a.unit() == b.unit();
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::basis(const Algebra& a, std::size_t i) {
  AlgebraElement x = zero(a);
  x.coords.at(i) = FieldElement::one(a.field());
  return x;
}

AlgebraElement AlgebraElement::one(const Algebra& a) { return {a, a.unit()}; }

AlgebraElement AlgebraElement::zero(const Algebra& a) { return {a, zero_vector(a.dim(), a.field())}; }

namespace {

void require_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (!same_algebra(x.algebra, y.algebra)) {
    throw Error(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
  }
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  AlgebraElement out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  AlgebraElement out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= y.coords[i];
  return out;
}

AlgebraElement operator*(const FieldElement& s, const AlgebraElement& x) {
  AlgebraElement out = x;
  for (auto& c : out.coords) c *= s;
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return same_algebra(x.algebra, y.algebra) && x.coords == y.coords;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  const Algebra& a = x.algebra;
  AlgebraElement out = AlgebraElement::zero(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y.coords[j].is_zero()) continue;
      FieldElement xy = x.coords[i] * y.coords[j];
      for (const auto& e : a.product(i, j)) out.coords[e.index].add_product(xy, e.value);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::describe() const {
  auto vec = [](const Vector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  switch (failure) {
    case Failure::None: return "valid";
    case Failure::Associativity:
      os << "(e_" << i << " e_" << j << ") e_" << k << " = " << vec(lhs) << " but e_" << i << " (e_" << j
         << " e_" << k << ") = " << vec(rhs);
      break;
    case Failure::LeftUnit: os << "u e_" << i << " = " << vec(lhs) << " differs from e_" << i; break;
    case Failure::RightUnit: os << "e_" << i << " u = " << vec(lhs) << " differs from e_" << i; break;
  }
  return os.str();
}

ValidationReport validate_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(n, a.field());
        Vector rhs = zero_vector(n, a.field());
        for (const auto& e : a.product(i, j)) {
          for (const auto& f : a.product(e.index, k)) lhs[f.index].add_product(e.value, f.value);
        }
        for (const auto& e : a.product(j, k)) {
          for (const auto& f : a.product(i, e.index)) rhs[f.index].add_product(e.value, f.value);
        }
        if (lhs != rhs) {
          report.failure = ValidationReport::Failure::Associativity;
          report.i = i;
          report.j = j;
          report.k = k;
          report.lhs = std::move(lhs);
          report.rhs = std::move(rhs);
          return report;
        }
      }
    }
  }
  const AlgebraElement u = AlgebraElement::one(a);
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement e = AlgebraElement::basis(a, i);
    AlgebraElement left = mul(u, e);
    if (!(left == e)) {
      report.failure = ValidationReport::Failure::LeftUnit;
      report.i = i;
      report.lhs = left.coords;
      report.rhs = e.coords;
      return report;
    }
    AlgebraElement right = mul(e, u);
    if (!(right == e)) {
      report.failure = ValidationReport::Failure::RightUnit;
      report.i = i;
      report.lhs = right.coords;
      report.rhs = e.coords;
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Builders

Algebra build_matrix_algebra(std::size_t n, const FieldDescriptor& field) {
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "matrix size must be at least 1");
  const std::size_t dim = n * n;
  std::vector<FieldElement> table(dim * dim * dim, FieldElement::zero(field));
  Vector unit = zero_vector(dim, field);
  const FieldElement one = FieldElement::one(field);
  // e_{ij} e_{kl} = delta_{jk} e_{il}
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        table[((i * n + j) * dim + (j * n + l)) * dim + (i * n + l)] = one;
      }
    }
    unit[i * n + i] = one;
  }
  return Algebra(field, dim, std::move(table), std::move(unit), "M_" + std::to_string(n) + "(" + field.name() + ")")
      .validated();
}

Algebra build_quaternion(const FieldElement& a, const FieldElement& b) {
  const FieldDescriptor& field = a.field();
  if (!(b.field() == field)) throw Error(ErrorKind::DescriptorMismatch, "quaternion parameters over different fields");
  if (field.characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo, "quaternion algebras need 2 to be invertible");
  if (!is_invertible(a) || !is_invertible(b)) {
    throw Error(ErrorKind::NonInvertibleParameter, "quaternion parameters must be invertible");
  }
  // Basis element t = (alpha, beta) stands for i^alpha j^beta, so (1, i, j, k)
  // are t = 0, 1, 2, 3 with k = ij. Moving j^beta1 past i^alpha2 costs
  // (-1)^(beta1 alpha2); i^2 = a and j^2 = b collapse the exponents.
  const std::size_t dim = 4;
  std::vector<FieldElement> table(dim * dim * dim, FieldElement::zero(field));
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      const std::size_t a1 = s & 1, b1 = s >> 1, a2 = t & 1, b2 = t >> 1;
      FieldElement c = FieldElement::one(field);
      if (b1 & a2) c = -c;
      if (a1 + a2 == 2) c *= a;
      if (b1 + b2 == 2) c *= b;
      const std::size_t target = ((a1 + a2) & 1) | (((b1 + b2) & 1) << 1);
      table[(s * dim + t) * dim + target] = c;
    }
  }
  Vector unit = zero_vector(dim, field);
  unit[0] = FieldElement::one(field);
  return Algebra(field, dim, std::move(table), std::move(unit),
                 "quaternion(" + a.to_string() + "," + b.to_string() + ")/" + field.name())
      .validated();
}

Algebra build_poly_quotient(const std::vector<FieldElement>& modulus, const FieldDescriptor& field) {
  if (modulus.size() < 2 || !modulus.back().is_one()) {
    throw Error(ErrorKind::NonMonicModulus, "modulus must be monic of degree at least 1");
  }
  for (const auto& c : modulus) {
    if (!(c.field() == field)) throw Error(ErrorKind::DescriptorMismatch, "modulus coefficient over a different field");
  }
  const std::size_t d = modulus.size() - 1;
  // reduced[m] = coordinates of x^m mod f for m < 2d - 1.
  std::vector<Vector> reduced;
  for (std::size_t m = 0; m + 1 < 2 * d; ++m) {
    Vector v = zero_vector(d, field);
    if (m < d) {
      v[m] = FieldElement::one(field);
    } else {
      // x^m = x * x^{m-1}; shift and fold x^d = -sum_{t<d} f_t x^t.
      const Vector& prev = reduced[m - 1];
      FieldElement top = prev[d - 1];
      for (std::size_t t = d - 1; t > 0; --t) v[t] = prev[t - 1];
      v[0] = FieldElement::zero(field);
      for (std::size_t t = 0; t < d; ++t) v[t].add_product(-top, modulus[t]);
    }
    reduced.push_back(std::move(v));
  }
  std::vector<FieldElement> table(d * d * d, FieldElement::zero(field));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = reduced[i + j][k];
    }
  }
  Vector unit = zero_vector(d, field);
  unit[0] = FieldElement::one(field);
  std::string label = "k[x]/(";
  for (std::size_t t = 0; t < modulus.size(); ++t) label += (t ? "," : "") + modulus[t].to_string();
  label += ")/" + field.name();
  return Algebra(field, d, std::move(table), std::move(unit), std::move(label)).validated();
}

Algebra build_tensor_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor factors over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<FieldElement> table(n * n * n, FieldElement::zero(a.field()));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < na; ++k) {
      for (const auto& x : a.product(i, k)) {
        for (std::size_t j = 0; j < nb; ++j) {
          for (std::size_t l = 0; l < nb; ++l) {
            for (const auto& y : b.product(j, l)) {
              table[((i * nb + j) * n + (k * nb + l)) * n + (x.index * nb + y.index)] = x.value * y.value;
            }
          }
        }
      }
    }
  }
  Vector unit = zero_vector(n, a.field());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  }
  Algebra out(a.field(), n, std::move(table), std::move(unit), "(" + a.label() + ")x(" + b.label() + ")");
  return (a.is_validated() && b.is_validated()) ? out.validated() : out;
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<FieldElement> table(n * n * n, FieldElement::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = a.constant(j, i, k);
    }
  }
  Algebra out(a.field(), n, std::move(table), a.unit(), "op(" + a.label() + ")");
  return a.is_validated() ? out.validated() : out;
}

Algebra build_direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct summands over different fields");
  const std::size_t na = a.dim(), n = na + b.dim();
  std::vector<FieldElement> table(n * n * n, FieldElement::zero(a.field()));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (const auto& e : a.product(i, j)) table[(i * n + j) * n + e.index] = e.value;
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (const auto& e : b.product(i, j)) table[((na + i) * n + na + j) * n + na + e.index] = e.value;
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  Algebra out(a.field(), n, std::move(table), std::move(unit), "(" + a.label() + ")+(" + b.label() + ")");
  return (a.is_validated() && b.is_validated()) ? out.validated() : out;
}

std::vector<Vector> center(const Algebra& a) {
  const std::size_t n = a.dim();
  RowReducer red(n, a.field());
  // Row (i, k): sum_j z_j (c_{ji}^k - c_{ij}^k) = 0.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> rows(n, zero_vector(n, a.field()));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& e : a.product(j, i)) rows[e.index][j] += e.value;
      for (const auto& e : a.product(i, j)) rows[e.index][j] -= e.value;
    }
    for (const auto& r : rows) red.add_row(to_sparse(r));
  }
  std::vector<Vector> basis;
  for (const auto& v : red.nullspace()) basis.push_back(to_dense(v, n, a.field()));
  return basis;
}

SparseMatrix left_multiplication(const Algebra& a, std::size_t i) {
  SparseMatrix m(a.dim(), a.dim(), a.field());
  for (std::size_t x = 0; x < a.dim(); ++x) m.set_column(x, a.product(i, x));
  return m;
}

SparseMatrix right_multiplication(const Algebra& a, std::size_t i) {
  SparseMatrix m(a.dim(), a.dim(), a.field());
  for (std::size_t x = 0; x < a.dim(); ++x) m.set_column(x, a.product(x, i));
  return m;
}

}  // namespace canonr
