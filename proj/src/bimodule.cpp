#include "canonr/bimodule.hpp"

#include <algorithm>
#include <random>

namespace canonr {

namespace {

SparseMatrix combination(const std::vector<SparseMatrix>& ops, const Vector& a, std::size_t dim,
                         const FieldDescriptor& f) {
  SparseMatrix out(dim, dim, f);
  auto acc = Accumulator::borrow(dim, f);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (!a[i].is_zero()) acc->axpy(a[i], ops[i].column(c));
    }
    out.set_column(c, acc->take());
  }
  return out;
}

// Rows of a column-compressed matrix, each sorted by column.
std::vector<SparseVector> rows_of(const SparseMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) rows[e.index].push_back({c, e.value});
  }
  return rows;
}

SparseVector difference(const SparseVector& x, const SparseVector& y, std::size_t n, const FieldDescriptor& f) {
  auto acc = Accumulator::borrow(n, f);
  const FieldElement minus_one = -FieldElement::one(f);
  acc->axpy(FieldElement::one(f), x);
  acc->axpy(minus_one, y);
  return acc->take();
}

// x (x) y at index i * ny + j.
void add_outer(Accumulator& acc, const FieldElement& c, const SparseVector& x, const SparseVector& y,
               std::size_t ny) {
  for (const auto& ex : x) {
    const FieldElement cx = c * ex.value;
    for (const auto& ey : y) acc.add_product(ex.index * ny + ey.index, cx, ey.value);
  }
}

// A subspace in the canonical free-variable basis of a nullspace.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<SparseVector> basis;
  std::vector<std::size_t> free;

  static Subspace kernel_of(const RowReducer& red) {
    return {red.cols(), red.nullspace(), red.free_columns()};
  }

  // Coordinates of v in the basis; throws NotInvariant when v is outside.
  SparseVector coordinates(const SparseVector& v, const FieldDescriptor& f, const char* what) const {
    SparseVector coords;
    auto acc = Accumulator::borrow(ambient, f);
    std::size_t pos = 0;
    for (std::size_t t = 0; t < free.size(); ++t) {
      while (pos < v.size() && v[pos].index < free[t]) ++pos;
      if (pos < v.size() && v[pos].index == free[t]) {
        coords.push_back({t, v[pos].value});
        acc->axpy(v[pos].value, basis[t]);
      }
    }
    if (!(acc->take() == v)) throw Error(ErrorKind::NotInvariant, what);
    return coords;
  }
};

Subspace invariant_subspace(const Bimodule& m) {
  RowReducer red(m.dim, m.algebra.field());
  for (std::size_t i = 0; i < m.left.size(); ++i) {
    for (const auto& row : rows_of(m.left[i] - m.right[i])) {
      if (!row.empty()) red.add_row(row);
    }
  }
  return Subspace::kernel_of(red);
}

// Per-term action data of R on bimodules: U_t(y) = R^1_t y R^2_t and V_t(x) = x R^3_t.
struct RTerm {
  std::size_t i, j, k;
  FieldElement c;
};

std::vector<RTerm> terms_of(const TensorElement& r) {
  std::vector<RTerm> out;
  for (const auto& e : r.nonzeros()) {
    const auto m = r.monomial_of(e.index);
    out.push_back({m[0], m[1], m[2], e.value});
  }
  return out;
}

// Column y: R^1 e_y R^2 for one term.
SparseVector sandwich(const Bimodule& y, const RTerm& t, std::size_t col) {
  return y.left[t.i].apply(y.right[t.j].column(col));
}

// Ambient map of c_{X,Y}: column x * dY + y holds R^1 y R^2 (x) x R^3 at y' * dX + x'.
SparseMatrix braid_ambient(const TensorElement& r, const Bimodule& x, const Bimodule& y) {
  const auto terms = terms_of(r);
  const FieldDescriptor& f = r.algebra().field();
  const std::size_t dx = x.dim, dy = y.dim;
  std::vector<std::vector<SparseVector>> u(terms.size(), std::vector<SparseVector>(dy));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (std::size_t b = 0; b < dy; ++b) u[t][b] = sandwich(y, terms[t], b);
  }
  SparseMatrix out(dx * dy, dx * dy, f);
  auto acc = Accumulator::borrow(dx * dy, f);
  for (std::size_t a = 0; a < dx; ++a) {
    for (std::size_t b = 0; b < dy; ++b) {
      for (std::size_t t = 0; t < terms.size(); ++t) {
        add_outer(*acc, terms[t].c, u[t][b], x.right[terms[t].k].column(a), dx);
      }
      out.set_column(a * dy + b, acc->take());
    }
  }
  return out;
}

// Applies a map on two neighbouring factors of a triple, identity on the third.
// `first` selects factors (1,2) rather than (2,3). T maps d_a * d_b -> d_a * d_b.
SparseMatrix lift_pair(const SparseMatrix& t, std::size_t d0, std::size_t d1, std::size_t d2, bool first) {
  const std::size_t n = d0 * d1 * d2;
  SparseMatrix out(n, n, t.field());
  for (std::size_t a = 0; a < d0; ++a) {
    for (std::size_t b = 0; b < d1; ++b) {
      for (std::size_t c = 0; c < d2; ++c) {
        SparseVector col;
        if (first) {
          for (const auto& e : t.column(a * d1 + b)) col.push_back({e.index * d2 + c, e.value});
        } else {
          for (const auto& e : t.column(b * d2 + c)) col.push_back({a * d1 * d2 + e.index, e.value});
        }
        out.set_column((a * d1 + b) * d2 + c, std::move(col));
      }
    }
  }
  return out;
}

// Acts with op on factor t of a mixed-radix ambient space.
SparseMatrix on_factor(const std::vector<std::size_t>& dims, std::size_t t, const SparseMatrix& op) {
  std::size_t n = 1, stride = 1;
  for (std::size_t d : dims) n *= d;
  for (std::size_t s = t + 1; s < dims.size(); ++s) stride *= dims[s];
  SparseMatrix out(n, n, op.field());
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t digit = (v / stride) % dims[t];
    const std::size_t base = v - digit * stride;
    SparseVector col;
    for (const auto& e : op.column(digit)) col.push_back({base + e.index * stride, e.value});
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    out.set_column(v, std::move(col));
  }
  return out;
}

void record_difference(AuditCheck& check, const SparseMatrix& lhs, const SparseMatrix& rhs, const std::string& what) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    check.pass = false;
    check.detail = what + ": shapes differ";
    return;
  }
  if (auto d = first_difference(lhs, rhs)) {
    check.pass = false;
    check.detail = what + ": column " + std::to_string(d->first) + " row " + std::to_string(d->second);
    check.witness = difference(lhs.column(d->first), rhs.column(d->first), lhs.rows(), lhs.field());
  }
}

void require_same(const Algebra& a, const Algebra& b) {
  if (!same_algebra(a, b)) throw Error(ErrorKind::AlgebraMismatch, "bimodules over different algebras");
}

}  // namespace

SparseMatrix Bimodule::left_action(const Vector& a) const {
  return combination(left, a, dim, algebra.field());
}

SparseMatrix Bimodule::right_action(const Vector& a) const {
  return combination(right, a, dim, algebra.field());
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m{a, a.dim(), {}, {}, "A"};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m.left.push_back(left_multiplication(a, i));
    m.right.push_back(right_multiplication(a, i));
  }
  return m;
}

Bimodule square_bimodule(const Algebra& a) {
  const std::size_t n = a.dim();
  Bimodule m{a, n * n, {}, {}, "A(2)"};
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix l(n * n, n * n, a.field()), r(n * n, n * n, a.field());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        SparseVector lc, rc;
        for (const auto& e : a.product(i, x)) lc.push_back({e.index * n + y, e.value});
        for (const auto& e : a.product(y, i)) rc.push_back({x * n + e.index, e.value});
        l.set_column(x * n + y, std::move(lc));
        r.set_column(x * n + y, std::move(rc));
      }
    }
    m.left.push_back(std::move(l));
    m.right.push_back(std::move(r));
  }
  return m;
}

Bimodule free_bimodule(const Algebra& a, std::size_t d) {
  if (d == 0) throw Error(ErrorKind::ShapeMismatch, "free bimodule rank must be at least 1");
  const std::size_t n = a.dim();
  Bimodule m{a, n * d, {}, {}, "A(x)k^" + std::to_string(d)};
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix l(n * d, n * d, a.field()), r(n * d, n * d, a.field());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < d; ++s) {
        SparseVector lc, rc;
        for (const auto& e : a.product(i, x)) lc.push_back({e.index * d + s, e.value});
        for (const auto& e : a.product(x, i)) rc.push_back({e.index * d + s, e.value});
        l.set_column(x * d + s, std::move(lc));
        r.set_column(x * d + s, std::move(rc));
      }
    }
    m.left.push_back(std::move(l));
    m.right.push_back(std::move(r));
  }
  return m;
}

BimoduleReport validate_bimodule(const Bimodule& m) {
  const Algebra& a = m.algebra;
  const std::size_t n = a.dim();
  const FieldDescriptor& f = a.field();
  auto fail = [](std::string why) { return BimoduleReport{false, std::move(why)}; };
  if (m.left.size() != n || m.right.size() != n) return fail("need one action matrix per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    for (const SparseMatrix* op : {&m.left[i], &m.right[i]}) {
      if (op->rows() != m.dim || op->cols() != m.dim) return fail("action matrix has the wrong shape");
    }
  }
  const SparseMatrix id = SparseMatrix::identity(m.dim, f);
  if (!(m.left_action(a.unit()) == id)) return fail("unit does not act as identity on the left");
  if (!(m.right_action(a.unit()) == id)) return fail("unit does not act as identity on the right");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector eij = to_dense(a.product(i, j), n, f);
      const std::string at = " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (!(m.left[i] * m.left[j] == m.left_action(eij))) return fail("left action not multiplicative" + at);
      if (!(m.right[j] * m.right[i] == m.right_action(eij))) return fail("right action not multiplicative" + at);
      if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i])) return fail("actions do not commute" + at);
    }
  }
  return {};
}

std::vector<SparseVector> invariants(const Bimodule& m) { return invariant_subspace(m).basis; }

QuotientSpace::QuotientSpace(std::vector<Bimodule> factors) {
  if (factors.empty()) throw Error(ErrorKind::ShapeMismatch, "a tensor product needs at least one factor");
  for (const auto& m : factors) require_same(factors.front().algebra, m.algebra);
  auto data = std::make_shared<Data>();
  const FieldDescriptor& f = factors.front().algebra.field();
  const std::size_t n = factors.front().algebra.dim();
  const std::size_t k = factors.size();
  std::vector<std::size_t> dims, strides(k, 1);
  data->ambient = 1;
  for (const auto& m : factors) {
    dims.push_back(m.dim);
    data->ambient *= m.dim;
  }
  for (std::size_t t = k - 1; t > 0; --t) strides[t - 1] = strides[t] * dims[t];
  data->relations = std::make_unique<RowReducer>(data->ambient, f);

  const FieldElement minus_one = -FieldElement::one(f);
  auto acc = Accumulator::borrow(data->ambient, f);
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const std::size_t s0 = strides[t], s1 = strides[t + 1];
    for (std::size_t a = 0; a < n; ++a) {
      const SparseMatrix& rho = factors[t].right[a];
      const SparseMatrix& lam = factors[t + 1].left[a];
      for (std::size_t v = 0; v < data->ambient; ++v) {
        const std::size_t d0 = (v / s0) % dims[t];
        const std::size_t d1 = (v / s1) % dims[t + 1];
        const std::size_t base = v - d0 * s0 - d1 * s1;
        for (const auto& e : rho.column(d0)) acc->add(base + e.index * s0 + d1 * s1, e.value);
        for (const auto& e : lam.column(d1)) acc->add(base + d0 * s0 + e.index * s1, minus_one * e.value);
        SparseVector row = acc->take();
        if (!row.empty()) data->relations->add_row(row);
      }
    }
  }
  data->free = data->relations->free_columns();
  data->coordinate.assign(data->ambient, -1);
  for (std::size_t j = 0; j < data->free.size(); ++j) data->coordinate[data->free[j]] = static_cast<std::int64_t>(j);
  data->factors = std::move(factors);
  data_ = std::move(data);
}

SparseVector QuotientSpace::project(const SparseVector& ambient) const {
  SparseVector out;
  for (auto& e : data_->relations->reduce(ambient)) {
    out.push_back({static_cast<std::size_t>(data_->coordinate[e.index]), std::move(e.value)});
  }
  return out;
}

SparseVector QuotientSpace::section(std::size_t j) const {
  return {{data_->free[j], FieldElement::one(algebra().field())}};
}

std::vector<SparseVector> QuotientSpace::relations() const {
  std::vector<SparseVector> out;
  for (std::size_t c : data_->relations->pivot_columns()) out.push_back(data_->relations->pivot_row(c));
  return out;
}

Bimodule QuotientSpace::as_bimodule() const {
  const auto& fs = data_->factors;
  std::vector<std::size_t> dims;
  for (const auto& m : fs) dims.push_back(m.dim);
  std::string label;
  for (const auto& m : fs) label += (label.empty() ? "" : " (x)_A ") + m.label;
  Bimodule out{algebra(), dim(), {}, {}, label};
  for (std::size_t i = 0; i < algebra().dim(); ++i) {
    out.left.push_back(induce(*this, *this, on_factor(dims, 0, fs.front().left[i]), "left").matrix);
    out.right.push_back(induce(*this, *this, on_factor(dims, dims.size() - 1, fs.back().right[i]), "right").matrix);
  }
  return out;
}

QuotientMap induce(const QuotientSpace& source, const QuotientSpace& target, const SparseMatrix& ambient,
                   std::string label) {
  if (ambient.cols() != source.ambient_dim() || ambient.rows() != target.ambient_dim()) {
    throw Error(ErrorKind::ShapeMismatch, "ambient map does not fit the spaces");
  }
  for (const auto& rel : source.relations()) {
    const SparseVector image = target.project(ambient.apply(rel));
    if (!image.empty()) {
      throw Error(ErrorKind::NotWellDefined,
                  label + ": relation with leading column " + std::to_string(rel.front().index) +
                      " maps to a nonzero class");
    }
  }
  QuotientMap out{source.dim(), target.dim(), SparseMatrix(target.dim(), source.dim(), target.algebra().field()),
                  std::move(label)};
  for (std::size_t j = 0; j < source.dim(); ++j) {
    out.matrix.set_column(j, target.project(ambient.column(source.representative(j))));
  }
  return out;
}

QuotientMap braiding_map(const RMatrixCertificate& r, const QuotientSpace& mn, const QuotientSpace& nm) {
  const Bimodule& m = mn.factors().at(0);
  const Bimodule& n = mn.factors().at(1);
  require_same(r.algebra, m.algebra);
  return induce(mn, nm, braid_ambient(r.r, m, n), "c_{" + m.label + "," + n.label + "}");
}

QuotientMap braiding_map(const RMatrixCertificate& r, const Bimodule& m, const Bimodule& n) {
  require_same(r.algebra, m.algebra);
  require_same(r.algebra, n.algebra);
  return braiding_map(r, QuotientSpace({m, n}), QuotientSpace({n, m}));
}

QuotientMap canonical_morphism(const Bimodule& m, const Vector& element) {
  const std::size_t n = m.algebra.dim();
  if (element.size() != m.dim) throw Error(ErrorKind::ShapeMismatch, "element length differs from module dimension");
  const SparseVector x = to_sparse(element);
  QuotientMap out{n * n, m.dim, SparseMatrix(m.dim, n * n, m.algebra.field()), "f_m"};
  for (std::size_t b = 0; b < n; ++b) {
    const SparseVector xb = m.right[b].apply(x);
    for (std::size_t a = 0; a < n; ++a) out.matrix.set_column(a * n + b, m.left[a].apply(xb));
  }
  return out;
}

QuotientMap epsilon_map(const Bimodule& m) {
  const Subspace inv = invariant_subspace(m);
  const std::size_t n = m.algebra.dim(), w = inv.basis.size();
  QuotientMap out{n * w, m.dim, SparseMatrix(m.dim, n * w, m.algebra.field()), "epsilon_" + m.label};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < w; ++t) out.matrix.set_column(i * w + t, m.left[i].apply(inv.basis[t]));
  }
  return out;
}

QuotientMap zeta_map(const RMatrixCertificate& r, const Bimodule& m) {
  require_same(r.algebra, m.algebra);
  const Subspace inv = invariant_subspace(m);
  const std::size_t n = m.algebra.dim(), w = inv.basis.size();
  const FieldDescriptor& f = m.algebra.field();
  const auto terms = terms_of(r.r);
  QuotientMap out{m.dim, n * w, SparseMatrix(n * w, m.dim, f), "zeta_" + m.label};
  std::vector<Accumulator> parts;
  for (std::size_t i = 0; i < n; ++i) parts.emplace_back(m.dim, f);
  for (std::size_t x = 0; x < m.dim; ++x) {
    for (const auto& t : terms) parts[t.i].axpy(t.c, m.left[t.j].apply(m.right[t.k].column(x)));
    SparseVector col;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& e : inv.coordinates(parts[i].take(), f, "R^2 m R^3 is not invariant")) {
        col.push_back({i * w + e.index, std::move(e.value)});
      }
    }
    out.matrix.set_column(x, std::move(col));
  }
  return out;
}

QuotientMap alpha_map(const Bimodule& m) {
  const Subspace inv = invariant_subspace(m);
  const std::size_t n = m.algebra.dim(), w = inv.basis.size(), d = m.dim;
  const FieldDescriptor& f = m.algebra.field();
  // (A (x) M)^{k (x) A}: a_i (x) m_i with sum a_i (x) b m_i = sum a_i (x) m_i b.
  RowReducer red(n * d, f);
  for (std::size_t s = 0; s < n; ++s) {
    const auto rows = rows_of(m.left[s] - m.right[s]);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& row : rows) {
        if (row.empty()) continue;
        SparseVector shifted;
        for (const auto& e : row) shifted.push_back({i * d + e.index, e.value});
        red.add_row(shifted);
      }
    }
  }
  const Subspace target = Subspace::kernel_of(red);
  QuotientMap out{n * w, target.basis.size(), SparseMatrix(target.basis.size(), n * w, f), "alpha_" + m.label};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < w; ++t) {
      SparseVector v;
      for (const auto& e : inv.basis[t]) v.push_back({i * d + e.index, e.value});
      out.matrix.set_column(i * w + t, target.coordinates(v, f, "a (x) m is not invariant"));
    }
  }
  return out;
}

QuotientMap adjunction_unit(const Algebra& a, std::size_t d) {
  const Bimodule fm = free_bimodule(a, d);
  const Subspace inv = invariant_subspace(fm);
  const FieldDescriptor& f = a.field();
  QuotientMap out{d, inv.basis.size(), SparseMatrix(inv.basis.size(), d, f), "eta_" + std::to_string(d)};
  for (std::size_t s = 0; s < d; ++s) {
    SparseVector v;
    for (const auto& e : a.sparse_unit()) v.push_back({e.index * d + s, e.value});
    out.matrix.set_column(s, inv.coordinates(v, f, "1 (x) n is not invariant"));
  }
  return out;
}

bool AuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.pass; });
}

AuditReport audit_braiding(const RMatrixCertificate& r, const Bimodule& m, const Bimodule& n, const Bimodule& p,
                           std::uint64_t seed) {
  require_same(r.algebra, m.algebra);
  require_same(r.algebra, n.algebra);
  require_same(r.algebra, p.algebra);
  const Algebra& a = r.algebra;
  const FieldDescriptor& f = a.field();
  const std::size_t dm = m.dim, dn = n.dim, dp = p.dim;
  AuditReport report;
  AuditCheck& wd = report.checks["well_defined"];
  try {
    const QuotientSpace qmn({m, n}), qnm({n, m});
    const QuotientMap cmn = braiding_map(r, qmn, qnm);
    const QuotientMap cnm = braiding_map(r, qnm, qmn);

    AuditCheck& sym = report.checks["symmetry"];
    record_difference(sym, cnm.matrix * cmn.matrix, SparseMatrix::identity(qmn.dim(), f), "c_NM c_MN != id");

    AuditCheck& inv = report.checks["invertible"];
    if (qmn.dim() != qnm.dim() || rank(cmn.matrix) != qmn.dim()) {
      inv.pass = false;
      inv.detail = "rank " + std::to_string(rank(cmn.matrix)) + " on a space of dimension " +
                   std::to_string(qmn.dim());
    }

    AuditCheck& bim = report.checks["bimodule_map"];
    const Bimodule bmn = qmn.as_bimodule(), bnm = qnm.as_bimodule();
    for (std::size_t i = 0; i < a.dim() && bim.pass; ++i) {
      record_difference(bim, cmn.matrix * bmn.left[i], bnm.left[i] * cmn.matrix,
                        "left action of e_" + std::to_string(i));
      if (bim.pass) {
        record_difference(bim, cmn.matrix * bmn.right[i], bnm.right[i] * cmn.matrix,
                          "right action of e_" + std::to_string(i));
      }
    }

    // Triple spaces, named by the order of their factors.
    const QuotientSpace mnp({m, n, p}), mpn({m, p, n}), pmn({p, m, n}), nmp({n, m, p}), npm({n, p, m});
    const SparseMatrix cmp = braid_ambient(r.r, m, p);
    const SparseMatrix cnp = braid_ambient(r.r, n, p);
    const SparseMatrix cmn_amb = braid_ambient(r.r, m, n);
    const auto terms = terms_of(r.r);

    // c_{M (x) N, P}: m (x) n (x) p -> R^1 p R^2 (x) m (x) n R^3
    SparseMatrix big1(dp * dm * dn, dm * dn * dp, f);
    // c_{M, N (x) P}: m (x) n (x) p -> R^1 n (x) p R^2 (x) m R^3
    SparseMatrix big2(dn * dp * dm, dm * dn * dp, f);
    {
      auto acc = Accumulator::borrow(dm * dn * dp, f);
      for (std::size_t x = 0; x < dm; ++x) {
        for (std::size_t y = 0; y < dn; ++y) {
          for (std::size_t z = 0; z < dp; ++z) {
            const std::size_t col = (x * dn + y) * dp + z;
            for (const auto& t : terms) {
              const SparseVector pz = sandwich(p, t, z);
              for (const auto& e1 : pz) {
                for (const auto& e3 : n.right[t.k].column(y)) {
                  acc->add_product((e1.index * dm + x) * dn + e3.index, t.c * e1.value, e3.value);
                }
              }
            }
            big1.set_column(col, acc->take());
            for (const auto& t : terms) {
              for (const auto& e1 : n.left[t.i].column(y)) {
                for (const auto& e2 : p.right[t.j].column(z)) {
                  const FieldElement c12 = t.c * e1.value * e2.value;
                  for (const auto& e3 : m.right[t.k].column(x)) {
                    acc->add_product((e1.index * dp + e2.index) * dm + e3.index, c12, e3.value);
                  }
                }
              }
            }
            big2.set_column(col, acc->take());
          }
        }
      }
    }
    const QuotientMap lhs1 = induce(mnp, pmn, big1, "c_{MN,P}");
    const QuotientMap step1 = induce(mnp, mpn, lift_pair(cnp, dm, dn, dp, false), "M c_{N,P}");
    const QuotientMap step2 = induce(mpn, pmn, lift_pair(cmp, dm, dp, dn, true), "c_{M,P} N");
    record_difference(report.checks["hexagon_first"], lhs1.matrix, step2.matrix * step1.matrix,
                      "c_{MN,P} != (c_{M,P} N)(M c_{N,P})");

    const QuotientMap lhs2 = induce(mnp, npm, big2, "c_{M,NP}");
    const QuotientMap step3 = induce(mnp, nmp, lift_pair(cmn_amb, dm, dn, dp, true), "c_{M,N} P");
    const QuotientMap step4 = induce(nmp, npm, lift_pair(cmp, dn, dm, dp, false), "N c_{M,P}");
    record_difference(report.checks["hexagon_second"], lhs2.matrix, step4.matrix * step3.matrix,
                      "c_{M,NP} != (N c_{M,P})(c_{M,N} P)");

    // Naturality against f_m (x) g_n for sampled m in M, n in N.
    AuditCheck& nat = report.checks["naturality"];
    const Bimodule a2 = square_bimodule(a);
    const std::size_t d2 = a2.dim;
    const QuotientSpace q22({a2, a2});
    const QuotientMap c22 = braiding_map(r, q22, q22);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto samples = [&](std::size_t dim) {
      std::vector<Vector> out;
      for (std::size_t i : {std::size_t{0}, dim - 1}) {
        Vector v = zero_vector(dim, f);
        v[i] = FieldElement::one(f);
        out.push_back(std::move(v));
      }
      Vector v = zero_vector(dim, f);
      for (auto& x : v) x = FieldElement(f, coef(rng));
      out.push_back(std::move(v));
      return out;
    };
    const auto ms = samples(dm), ns = samples(dn);
    for (std::size_t si = 0; si < ms.size() && nat.pass; ++si) {
      for (std::size_t sj = 0; sj < ns.size() && nat.pass; ++sj) {
        const SparseMatrix fm = canonical_morphism(m, ms[si]).matrix;
        const SparseMatrix gn = canonical_morphism(n, ns[sj]).matrix;
        SparseMatrix fg(dm * dn, d2 * d2, f), gf(dn * dm, d2 * d2, f);
        auto acc = Accumulator::borrow(dm * dn, f);
        const FieldElement one = FieldElement::one(f);
        for (std::size_t x = 0; x < d2; ++x) {
          for (std::size_t y = 0; y < d2; ++y) {
            add_outer(*acc, one, fm.column(x), gn.column(y), dn);
            fg.set_column(x * d2 + y, acc->take());
            add_outer(*acc, one, gn.column(x), fm.column(y), dm);
            gf.set_column(x * d2 + y, acc->take());
          }
        }
        const QuotientMap fgq = induce(q22, qmn, fg, "f_m (x) g_n");
        const QuotientMap gfq = induce(q22, qnm, gf, "g_n (x) f_m");
        record_difference(nat, gfq.matrix * c22.matrix, cmn.matrix * fgq.matrix,
                          "sample (" + std::to_string(si) + ", " + std::to_string(sj) + ")");
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotWellDefined) throw;
    wd.pass = false;
    wd.detail = e.what();
  }
  return report;
}

AuditReport monoidal_F_audit(const RMatrixCertificate& r, std::size_t d1, std::size_t d2) {
  const Algebra& a = r.algebra;
  const FieldDescriptor& f = a.field();
  const std::size_t n = a.dim(), d = d1 * d2;
  const Bimodule fn = free_bimodule(a, d1), fn2 = free_bimodule(a, d2), target = free_bimodule(a, d);
  AuditReport report;
  AuditCheck& wd = report.checks["well_defined"];
  try {
    const QuotientSpace q12({fn, fn2}), q21({fn2, fn}), tq({target});
    // phi: (a (x) s) (x) (b (x) s') -> ab (x) s (x) s'
    auto phi = [&](std::size_t e1, std::size_t e2) {
      const std::size_t w1 = n * e1, w2 = n * e2;
      SparseMatrix out(n * e1 * e2, w1 * w2, f);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t s = 0; s < e1; ++s) {
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t t = 0; t < e2; ++t) {
              SparseVector col;
              for (const auto& e : a.product(x, y)) col.push_back({(e.index * e1 + s) * e2 + t, e.value});
              out.set_column((x * e1 + s) * w2 + y * e2 + t, std::move(col));
            }
          }
        }
      }
      return out;
    };
    const QuotientMap phi12 = induce(q12, tq, phi(d1, d2), "phi_{N,N'}");
    const QuotientMap phi21 = induce(q21, tq, phi(d2, d1), "phi_{N',N}");
    const QuotientMap c = braiding_map(r, q12, q21);

    SparseMatrix tau(n * d, n * d, f);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < d1; ++s) {
        for (std::size_t t = 0; t < d2; ++t) {
          tau.set_column((x * d1 + s) * d2 + t, {{(x * d2 + t) * d1 + s, FieldElement::one(f)}});
        }
      }
    }
    record_difference(report.checks["symmetry_preserved"], tau * phi12.matrix, phi21.matrix * c.matrix,
                      "(A tau) phi != phi c");
    AuditCheck& bij = report.checks["phi_bijective"];
    if (q12.dim() != tq.dim() || rank(phi12.matrix) != tq.dim()) {
      bij.pass = false;
      bij.detail = "phi_{N,N'} has rank " + std::to_string(rank(phi12.matrix)) + ", expected " +
                   std::to_string(tq.dim());
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotWellDefined) throw;
    wd.pass = false;
    wd.detail = e.what();
  }
  return report;
}

}  // namespace canonr
