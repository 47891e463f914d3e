#include "canonr/yangbaxter.hpp"

#include <algorithm>

namespace canonr {

namespace {

YBCheck compare(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  YBCheck out;
  if (auto d = first_difference(lhs, rhs)) {
    out.pass = false;
    out.witness = d;
  }
  return out;
}

}  // namespace

YBOperator build_omega(const RMatrixCertificate& r, const Bimodule& v, std::size_t max_dim) {
  if (!r.valid()) throw Error(ErrorKind::UnverifiedCertificate, "Omega needs a certificate whose checks all pass");
  if (!same_algebra(r.algebra, v.algebra)) throw Error(ErrorKind::AlgebraMismatch, "bimodule over another algebra");
  if (v.dim > max_dim) {
    throw Error(ErrorKind::UnsupportedSize,
                "bimodule dimension " + std::to_string(v.dim) + " exceeds the cap of " + std::to_string(max_dim));
  }
  const std::size_t m = v.dim;
  const FieldDescriptor& f = v.algebra.field();
  struct Term {
    std::size_t i, j, k;
    FieldElement c;
  };
  std::vector<Term> terms;
  for (const auto& e : r.r.nonzeros()) {
    const auto mon = r.r.monomial_of(e.index);
    terms.push_back({mon[0], mon[1], mon[2], e.value});
  }
  YBOperator out{m, SparseMatrix(m * m, m * m, f), "Omega on " + v.label};
  auto acc = Accumulator::borrow(m * m, f);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (const auto& t : terms) {
        const SparseVector left = v.left[t.i].apply(v.right[t.j].column(b));
        for (const auto& e1 : left) {
          const FieldElement c1 = t.c * e1.value;
          for (const auto& e2 : v.left[t.k].column(a)) acc->add_product(e1.index * m + e2.index, c1, e2.value);
        }
      }
      out.omega.set_column(a * m + b, acc->take());
    }
  }
  return out;
}

YBOperator yb_operator(std::size_t dim, SparseMatrix omega, std::string label) {
  if (omega.rows() != dim * dim || omega.cols() != dim * dim) {
    throw Error(ErrorKind::ShapeMismatch, "operator must act on V (x) V");
  }
  return {dim, std::move(omega), std::move(label)};
}

SparseMatrix leg_embedding(const YBOperator& w, LegPair legs) {
  const std::size_t m = w.dim;
  SparseMatrix out(m * m * m, m * m * m, w.omega.field());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        SparseVector col;
        switch (legs) {
          case LegPair::L12:
            for (const auto& e : w.omega.column(a * m + b)) col.push_back({e.index * m + c, e.value});
            break;
          case LegPair::L23:
            for (const auto& e : w.omega.column(b * m + c)) col.push_back({a * m * m + e.index, e.value});
            break;
          case LegPair::L13:
            for (const auto& e : w.omega.column(a * m + c)) {
              col.push_back({(e.index / m) * m * m + b * m + e.index % m, e.value});
            }
            std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
            break;
        }
        out.set_column((a * m + b) * m + c, std::move(col));
      }
    }
  }
  return out;
}

YBCheck check_qybe(const YBOperator& w) {
  const SparseMatrix o12 = leg_embedding(w, LegPair::L12);
  const SparseMatrix o13 = leg_embedding(w, LegPair::L13);
  const SparseMatrix o23 = leg_embedding(w, LegPair::L23);
  return compare(o12 * (o13 * o23), o23 * (o13 * o12));
}

YBCheck check_braid(const YBOperator& w) {
  const SparseMatrix o12 = leg_embedding(w, LegPair::L12);
  const SparseMatrix o23 = leg_embedding(w, LegPair::L23);
  return compare(o12 * (o23 * o12), o23 * (o12 * o23));
}

YBCheck check_omega_cubed(const YBOperator& w) {
  return compare(w.omega * (w.omega * w.omega), w.omega);
}

std::pair<std::size_t, std::size_t> omega_rank_profile(const YBOperator& w) {
  return {rank(w.omega), rank(w.omega * w.omega)};
}

}  // namespace canonr
