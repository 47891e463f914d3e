#include "canonr/rmatrix.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>

namespace canonr {

namespace {

SparseVector single(std::size_t i, const FieldDescriptor& f) { return {{i, FieldElement::one(f)}}; }

// Compares two tensors and fills in the first differing monomial.
bool compare_into(const TensorElement& lhs, const TensorElement& rhs, CheckResult& out) {
  const Vector& l = lhs.coeffs();
  const Vector& r = rhs.coeffs();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == r[i]) continue;
    out.pass = false;
    if (out.monomial.empty()) {
      out.monomial = lhs.monomial_of(i);
      out.lhs = l[i].to_string();
      out.rhs = r[i].to_string();
    }
    return false;
  }
  return true;
}

CheckResult compare(const TensorElement& lhs, const TensorElement& rhs) {
  CheckResult out;
  compare_into(lhs, rhs, out);
  return out;
}

// Runs an a-dependent identity for every basis element a.
CheckResult for_each_basis(const Algebra& a,
                           const std::function<std::pair<TensorElement, TensorElement>(const AlgebraElement&)>& sides) {
  CheckResult out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto [lhs, rhs] = sides(AlgebraElement::basis(a, i));
    if (!compare_into(lhs, rhs, out)) out.failing_elements.push_back(i);
  }
  return out;
}

struct Term {
  std::array<std::size_t, 3> mon;
  FieldElement value;
};

std::vector<Term> terms_of(const TensorElement& r) {
  std::vector<Term> out;
  for (const auto& e : r.nonzeros()) {
    const auto m = r.monomial_of(e.index);
    out.push_back({{m[0], m[1], m[2]}, e.value});
  }
  return out;
}

// r^1 R^1 (x) r^2 (x) r^3 R^2 (x) R^3, summed over two copies of R.
TensorElement hexagon_first_rhs(const Algebra& a, const TensorElement& r) {
  const auto terms = terms_of(r);
  const std::size_t n = a.dim();
  std::vector<SparseVector> singles(n);
  for (std::size_t i = 0; i < n; ++i) singles[i] = single(i, a.field());
  Vector coeffs = zero_vector(n * n * n * n, a.field());
  std::vector<const SparseVector*> legs(4);
  for (const auto& big : terms) {
    for (const auto& small : terms) {
      legs[0] = &a.product(small.mon[0], big.mon[0]);
      legs[1] = &singles[small.mon[1]];
      legs[2] = &a.product(small.mon[2], big.mon[1]);
      legs[3] = &singles[big.mon[2]];
      detail::expand_legs(legs, n, big.value * small.value, coeffs);
    }
  }
  return TensorElement(a, 4, std::move(coeffs));
}

// R^1 (x) R^2 r^1 (x) r^2 (x) R^3 r^3
TensorElement hexagon_second_rhs(const Algebra& a, const TensorElement& r) {
  const auto terms = terms_of(r);
  const std::size_t n = a.dim();
  std::vector<SparseVector> singles(n);
  for (std::size_t i = 0; i < n; ++i) singles[i] = single(i, a.field());
  Vector coeffs = zero_vector(n * n * n * n, a.field());
  std::vector<const SparseVector*> legs(4);
  for (const auto& big : terms) {
    for (const auto& small : terms) {
      legs[0] = &singles[big.mon[0]];
      legs[1] = &a.product(big.mon[1], small.mon[0]);
      legs[2] = &singles[small.mon[1]];
      legs[3] = &a.product(big.mon[2], small.mon[2]);
      detail::expand_legs(legs, n, big.value * small.value, coeffs);
    }
  }
  return TensorElement(a, 4, std::move(coeffs));
}

void require_quaternion_parameters(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::DescriptorMismatch, "quaternion parameters over different fields");
  if (a.field().characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo, "2 is not invertible");
  if (!is_invertible(a) || !is_invertible(b)) {
    throw Error(ErrorKind::NonInvertibleParameter, "quaternion parameters must be invertible");
  }
}

// Sorts (row, col, value) triples and sums duplicates into sparse rows.
std::vector<SparseVector> assemble_rows(std::vector<std::tuple<std::size_t, std::size_t, FieldElement>>& triples,
                                        std::size_t rows) {
  std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::vector<SparseVector> out(rows);
  for (std::size_t i = 0; i < triples.size();) {
    auto [r, c, v] = triples[i];
    std::size_t j = i + 1;
    for (; j < triples.size() && std::get<0>(triples[j]) == r && std::get<1>(triples[j]) == c; ++j) {
      v += std::get<2>(triples[j]);
    }
    if (!v.is_zero()) out[r].push_back({c, v});
    i = j;
  }
  return out;
}

}  // namespace

bool all_pass(const CheckReport& report) {
  return std::all_of(report.begin(), report.end(), [](const auto& kv) { return kv.second.pass; });
}

CheckReport verify_rmatrix(const Algebra& a, const TensorElement& r) {
  if (r.arity() != 3) throw Error(ErrorKind::ArityMismatch, "an R-matrix has arity 3");
  if (!same_algebra(a, r.algebra())) throw Error(ErrorKind::AlgebraMismatch, "R lives over another algebra");

  CheckReport report;
  report["centralize_outer"] = for_each_basis(a, [&](const AlgebraElement& x) {
    return std::pair{act_leg(r, 3, x, Side::Left), act_leg(r, 1, x, Side::Right)};
  });
  report["centralize_first"] = for_each_basis(a, [&](const AlgebraElement& x) {
    return std::pair{act_leg(r, 1, x, Side::Left), act_leg(r, 2, x, Side::Right)};
  });
  report["centralize_middle"] = for_each_basis(a, [&](const AlgebraElement& x) {
    return std::pair{act_leg(r, 2, x, Side::Left), act_leg(r, 3, x, Side::Right)};
  });

  const TensorElement r124 = embed_legs(r, 4, {1, 2, 4});
  const TensorElement r134 = embed_legs(r, 4, {1, 3, 4});
  report["hexagon_first"] = compare(r124, hexagon_first_rhs(a, r));
  report["hexagon_second"] = compare(r134, hexagon_second_rhs(a, r));

  const TensorElement s = permute_legs(r, {2, 1, 3});
  const TensorElement one3 = unit_tensor(a, 3);
  report["inverse_left"] = compare(tensor_mul(s, r), one3);
  report["inverse_right"] = compare(tensor_mul(r, s), one3);

  const TensorElement one2 = unit_tensor(a, 2);
  report["normalize_12"] = compare(contract_legs(r, 1), one2);
  // R^2 (x) R^3 R^1: move R^1 behind R^3, then multiply the last two legs.
  report["normalize_31"] = compare(contract_legs(permute_legs(r, {3, 1, 2}), 2), one2);
  report["normalize_23"] = compare(contract_legs(r, 2), one2);

  // R^2 (x) R^3 (x) R^1 and R^3 (x) R^1 (x) R^2
  report["cyclic_once"] = compare(permute_legs(r, {3, 1, 2}), r);
  report["cyclic_twice"] = compare(permute_legs(r, {2, 3, 1}), r);

  const TensorElement r123 = embed_legs(r, 4, {1, 2, 3});
  const TensorElement r234 = embed_legs(r, 4, {2, 3, 4});
  report["legs_124"] = compare(r124, tensor_mul(r123, r134));
  report["legs_134"] = compare(r134, tensor_mul(r124, r234));
  return report;
}

RMatrixCertificate certify(const Algebra& a, const TensorElement& r) {
  RMatrixCertificate cert{a, r, permute_legs(r, {2, 1, 3}), verify_rmatrix(a, r), std::nullopt};
  return cert;
}

SolveResult solve_rmatrix(const Algebra& a, const SolveOptions& options) {
  if (!a.is_validated()) throw Error(ErrorKind::UnvalidatedAlgebra, "validate the algebra before solving");
  const std::size_t n = a.dim();
  if (!options.force && n > options.max_dim) {
    throw Error(ErrorKind::UnsupportedSize, "dimension " + std::to_string(n) + " exceeds the cap of " +
                                                std::to_string(options.max_dim) + " (use --force)");
  }
  const FieldDescriptor& f = a.field();
  SolveResult result;
  result.metadata.algebra_dim = n;

  // Step 1: W = {w : (e_s (x) 1) w = w (1 (x) e_s) for all s}, coordinates x*n + y.
  RowReducer w_rows(n * n, f);
  {
    auto acc = Accumulator::borrow(n * n, f);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          // coefficient of e_p (x) e_q in e_s w_1 (x) w_2 - w_1 (x) w_2 e_s
          for (std::size_t x = 0; x < n; ++x) {
            const FieldElement& c = a.constant(s, x, p);
            if (!c.is_zero()) acc->add(x * n + q, c);
          }
          for (std::size_t y = 0; y < n; ++y) {
            const FieldElement& c = a.constant(y, s, q);
            if (!c.is_zero()) acc->add(p * n + y, -c);
          }
          w_rows.add_row(acc->take());
        }
      }
    }
  }
  const std::vector<SparseVector> w = w_rows.nullspace();
  const std::size_t wd = w.size();
  result.metadata.w_dim = wd;
  result.metadata.unknowns = n * wd;
  result.metadata.equations = 2 * n * n;

  // Step 2/3: R = sum_j e_j (x) sum_t y_{j,t} W_t. Row (p, y) carries the
  // coefficient of e_p (x) e_y in R^1R^2 (x) R^3; row n^2 + (x, q) that of
  // e_x (x) e_q in R^2 (x) R^3R^1.
  std::vector<std::tuple<std::size_t, std::size_t, FieldElement>> triples;
  for (std::size_t t = 0; t < wd; ++t) {
    for (const auto& e : w[t]) {
      const std::size_t x = e.index / n;
      const std::size_t y = e.index % n;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t col = j * wd + t;
        for (const auto& c : a.product(j, x)) triples.emplace_back(c.index * n + y, col, e.value * c.value);
        for (const auto& c : a.product(y, j)) triples.emplace_back(n * n + x * n + c.index, col, e.value * c.value);
      }
    }
  }
  const std::vector<SparseVector> rows = assemble_rows(triples, 2 * n * n);
  std::vector<FieldElement> rhs(2 * n * n, FieldElement::zero(f));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      rhs[p * n + q] = a.unit()[p] * a.unit()[q];
      rhs[n * n + p * n + q] = rhs[p * n + q];
    }
  }

  // Step 4
  const AffineSolutionSet sol = solve_affine_sparse(rows, rhs, n * wd, f);
  if (sol.empty()) return result;
  result.metadata.feasible = true;
  result.metadata.affine_dim = sol.dimension();
  if (sol.dimension() != 0) {
    throw Error(ErrorKind::NonUniqueSolution, "normalization system has a " + std::to_string(sol.dimension()) +
                                                  "-dimensional solution set over a field");
  }

  Vector coeffs = zero_vector(n * n * n, f);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < wd; ++t) {
      const FieldElement& yjt = sol.particular[j * wd + t];
      if (yjt.is_zero()) continue;
      for (const auto& e : w[t]) coeffs[j * n * n + e.index].add_product(yjt, e.value);
    }
  }
  RMatrixCertificate cert = certify(a, TensorElement(a, 3, std::move(coeffs)));
  cert.solver = result.metadata;
  result.certificate = std::move(cert);
  return result;
}

TensorElement closed_form_matrix_R(const Algebra& m, std::size_t n) {
  if (m.dim() != n * n) throw Error(ErrorKind::ShapeMismatch, "algebra dimension is not n^2");
  TensorElement r(m, 3);
  Vector coeffs = r.coeffs();
  const FieldElement one = FieldElement::one(m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) coeffs[r.index_of({i * n + j, k * n + i, j * n + k})] += one;
    }
  }
  return TensorElement(m, 3, std::move(coeffs));
}

TensorElement closed_form_matrix_R(std::size_t n, const FieldDescriptor& field) {
  return closed_form_matrix_R(build_matrix_algebra(n, field), n);
}

TensorElement closed_form_quaternion_R(const Algebra& h, const FieldElement& a, const FieldElement& b) {
  require_quaternion_parameters(a, b);
  if (h.dim() != 4 || !(h.field() == a.field())) {
    throw Error(ErrorKind::ShapeMismatch, "expected a quaternion algebra over the parameters' field");
  }
  const FieldDescriptor& f = a.field();
  const FieldElement four(f, 4);
  const FieldElement c1 = FieldElement::one(f) / four;
  const FieldElement ca = c1 / a;
  const FieldElement cb = c1 / b;
  const FieldElement cab = c1 / (a * b);
  constexpr std::size_t O = 0, I = 1, J = 2, K = 3;

  TensorElement r(h, 3);
  Vector coeffs = r.coeffs();
  auto add = [&](std::size_t x, std::size_t y, std::size_t z, const FieldElement& c) {
    coeffs[r.index_of({x, y, z})] += c;
  };
  add(O, O, O, c1);
  for (auto [g, c] : {std::pair{I, ca}, std::pair{J, cb}, std::pair{K, -cab}}) {
    add(O, g, g, c);
    add(g, O, g, c);
    add(g, g, O, c);
  }
  add(I, J, K, cab);
  add(J, K, I, cab);
  add(K, I, J, cab);
  add(J, I, K, -cab);
  add(K, J, I, -cab);
  add(I, K, J, -cab);
  return TensorElement(h, 3, std::move(coeffs));
}

TensorElement closed_form_quaternion_R(const FieldElement& a, const FieldElement& b) {
  return closed_form_quaternion_R(build_quaternion(a, b), a, b);
}

RMatrixCertificate tensor_rmatrix(const RMatrixCertificate& ra, const RMatrixCertificate& rb) {
  const Algebra& a = ra.algebra;
  const Algebra& b = rb.algebra;
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "certificates over different fields");
  const Algebra ab = build_tensor_product(a, b).validated();
  const std::size_t nb = b.dim();
  TensorElement t(ab, 3);
  Vector coeffs = t.coeffs();
  const auto sb = rb.r.nonzeros();
  std::vector<std::vector<std::size_t>> mb;
  for (const auto& e : sb) mb.push_back(rb.r.monomial_of(e.index));
  for (const auto& x : ra.r.nonzeros()) {
    const auto m = ra.r.monomial_of(x.index);
    for (std::size_t k = 0; k < sb.size(); ++k) {
      const auto& mm = mb[k];
      coeffs[t.index_of({m[0] * nb + mm[0], m[1] * nb + mm[1], m[2] * nb + mm[2]})] = x.value * sb[k].value;
    }
  }
  return certify(ab, TensorElement(ab, 3, std::move(coeffs)));
}

}  // namespace canonr
