#include <gtest/gtest.h>

#include "support.hpp"

using namespace canonr;
using namespace canonr::testing;

namespace {

ExactMatrix invert(const ExactMatrix& p) {
  const std::size_t n = p.rows();
  ExactMatrix out(n, n, p.field());
  for (std::size_t k = 0; k < n; ++k) {
    Vector e = zero_vector(n, p.field());
    e[k] = FieldElement::one(p.field());
    const auto s = solve_affine(p, e);
    for (std::size_t r = 0; r < n; ++r) out.at(r, k) = s.particular[r];
  }
  return out;
}

// L * U with unit diagonals and entries in {-1, 0, 1}: dense but with small coefficients.
ExactMatrix random_invertible(Gen& g, const FieldDescriptor& f, std::size_t n) {
  ExactMatrix l = ExactMatrix::identity(n, f), u = ExactMatrix::identity(n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      l.at(r, c) = FieldElement(f, g.integer(-1, 1));
      u.at(c, r) = FieldElement(f, g.integer(-1, 1));
    }
  return l * u;
}

// The algebra A written on the basis e'_i = sum_a P[a][i] e_a.
Algebra change_basis(const Algebra& a, const ExactMatrix& p, const ExactMatrix& pinv) {
  const std::size_t n = a.dim();
  std::vector<FieldElement> table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = zero_vector(n, a.field()), y = zero_vector(n, a.field());
      for (std::size_t r = 0; r < n; ++r) {
        x[r] = p.at(r, i);
        y[r] = p.at(r, j);
      }
      const Vector xy = pinv.apply(naive_mul(a, x, y));
      table.insert(table.end(), xy.begin(), xy.end());
    }
  }
  return Algebra(a.field(), n, std::move(table), pinv.apply(a.unit()), a.label() + "'").validated();
}

// Coordinates of a 3-tensor after the change of basis: (P^-1)^{(x)3} t.
TensorElement transport(const Algebra& target, const TensorElement& t, const ExactMatrix& pinv) {
  const std::size_t n = target.dim();
  Vector out = zero_vector(n * n * n, target.field());
  for (const auto& e : t.nonzeros()) {
    const auto d = t.monomial_of(e.index);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          out[(x * n + y) * n + z] += e.value * pinv.at(x, d[0]) * pinv.at(y, d[1]) * pinv.at(z, d[2]);
        }
  }
  return TensorElement(target, 3, std::move(out));
}

// R^1 R^2 (x) R^3 by explicit loops over the structure constants.
TensorElement naive_contract12(const TensorElement& r) {
  const Algebra& a = r.algebra();
  const std::size_t n = a.dim();
  Vector out = zero_vector(n * n, a.field());
  for (const auto& e : r.nonzeros()) {
    const auto d = r.monomial_of(e.index);
    for (std::size_t k = 0; k < n; ++k) out[k * n + d[2]] += e.value * a.constant(d[0], d[1], k);
  }
  return TensorElement(a, 2, std::move(out));
}

}  // namespace

TEST(RMatrix, MatrixAlgebrasMatchClosedForm) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra m = build_matrix_algebra(n, Q);
    const SolveResult res = solve_rmatrix(m);
    ASSERT_TRUE(res.feasible());
    EXPECT_EQ(res.certificate->r, matrix_r_oracle(m, n));
    EXPECT_EQ(res.certificate->r, closed_form_matrix_R(m, n));
    EXPECT_EQ(res.metadata.affine_dim, 0u);
    EXPECT_TRUE(res.certificate->valid());
  }
}

TEST(RMatrix, QuaternionsMatchClosedForm) {
  for (auto [a, b] : {std::pair{q(-1), q(-1)}, {q(2), q(3)}, {q(-1), q(5)}, {q(1), q(1)}}) {
    const Algebra h = build_quaternion(a, b);
    const SolveResult res = solve_rmatrix(h);
    ASSERT_TRUE(res.feasible());
    EXPECT_EQ(res.certificate->r, quaternion_r_oracle(h, a, b));
    EXPECT_EQ(res.certificate->r, closed_form_quaternion_R(h, a, b));
    EXPECT_EQ(res.certificate->r.term_count(), 16u);
  }
}

TEST(RMatrix, PrimeFieldsAgreeWithClosedForms) {
  const Algebra m = build_matrix_algebra(2, GF(5));
  EXPECT_EQ(solve_rmatrix(m).certificate->r, matrix_r_oracle(m, 2));
  const FieldDescriptor f = GF(7);
  const Algebra h = build_quaternion(s(f, 3), s(f, 5));
  EXPECT_EQ(solve_rmatrix(h).certificate->r, quaternion_r_oracle(h, s(f, 3), s(f, 5)));
}

TEST(RMatrix, NegativeAlgebrasAreInfeasible) {
  for (const char* name : {"dual_numbers_q", "k_sum_k_q", "m2_sum_k_q", "upper_triangular_q", "upper_triangular_gf5",
                           "x2_minus_1_q", "x2_plus_1_q", "m2_tensor_dual_q"}) {
    SCOPED_TRACE(name);
    const SolveResult res = solve_rmatrix(corpus(name));
    EXPECT_FALSE(res.feasible());
    EXPECT_FALSE(res.metadata.feasible);
  }
}

TEST(RMatrix, SolverRefusesUnvalidatedOrLargeInput) {
  const Algebra raw(Q, 1, {q(1)}, {q(1)}, "raw");
  try {
    solve_rmatrix(raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnvalidatedAlgebra);
  }
  SolveOptions small;
  small.max_dim = 3;
  try {
    solve_rmatrix(build_matrix_algebra(2, Q), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedSize);
  }
  small.force = true;
  EXPECT_TRUE(solve_rmatrix(build_matrix_algebra(2, Q), small).feasible());
}

TEST(RMatrix, TrivialRMatrixFailsOnM2WithWitness) {
  const Algebra m = build_matrix_algebra(2, Q);
  const CheckReport rep = verify_rmatrix(m, unit_tensor(m, 3));
  EXPECT_FALSE(all_pass(rep));
  for (const char* id : {"centralize_outer", "centralize_first", "centralize_middle"}) {
    const CheckResult& c = rep.at(id);
    EXPECT_FALSE(c.pass) << id;
    // e12 = index 1 is a failing element.
    EXPECT_NE(std::find(c.failing_elements.begin(), c.failing_elements.end(), 1u), c.failing_elements.end()) << id;
    EXPECT_EQ(c.monomial.size(), 3u);
    EXPECT_NE(c.lhs, c.rhs);
  }
}

TEST(RMatrix, TrivialRMatrixPassesOnBaseField) {
  for (const char* name : {"k_q", "x_minus_1_q"}) {
    const Algebra a = corpus(name);
    EXPECT_TRUE(all_pass(verify_rmatrix(a, unit_tensor(a, 3)))) << name;
  }
}

TEST(RMatrix, VerifierReportsEveryCheck) {
  const Algebra m = build_matrix_algebra(2, Q);
  const CheckReport rep = verify_rmatrix(m, closed_form_matrix_R(m, 2));
  const std::vector<std::string> ids = {"centralize_outer", "centralize_first", "centralize_middle", "hexagon_first",
                                        "hexagon_second",   "inverse_left",     "inverse_right",     "normalize_12",
                                        "normalize_31",     "normalize_23",     "cyclic_once",       "cyclic_twice",
                                        "legs_124",         "legs_134"};
  EXPECT_EQ(rep.size(), ids.size());
  for (const auto& id : ids) EXPECT_TRUE(rep.at(id).pass) << id;
  EXPECT_THROW(verify_rmatrix(m, unit_tensor(m, 2)), Error);
  EXPECT_THROW(verify_rmatrix(build_matrix_algebra(3, Q), closed_form_matrix_R(m, 2)), Error);
}

TEST(RMatrixProperty, PerturbedRMatricesFail) {
  const Algebra h = corpus("quat_2_3_q");
  const TensorElement r = closed_form_quaternion_R(h, q(2), q(3));
  for_seeds(15, [&](Gen& g) {
    const TensorElement noise = g.tensor(h, 3, 0.05);
    if (noise.term_count() == 0) return;
    EXPECT_FALSE(all_pass(verify_rmatrix(h, r + noise)));
  });
}

TEST(RMatrixProperty, SolvedRIsCyclicAndNormalized) {
  for (const char* name : {"m2_q", "quat_m1_5_q", "op_quat_2_3_q", "quat_m1_m1_gf3", "k_q"}) {
    SCOPED_TRACE(name);
    const Algebra a = corpus(name);
    const TensorElement r = solve_rmatrix(a).certificate->r;
    EXPECT_EQ(permute_legs(r, {2, 3, 1}), r);
    EXPECT_EQ(naive_contract12(r), unit_tensor(a, 2));
    EXPECT_EQ(naive_tensor_mul(r, permute_legs(r, {2, 1, 3})), unit_tensor(a, 3));
  }
}

TEST(RMatrixProperty, SolverIsEquivariantUnderChangeOfBasis) {
  for (const char* name : {"m2_q", "quat_m1_m1_q"}) {
    SCOPED_TRACE(name);
    const Algebra a = corpus(name);
    const TensorElement r = solve_rmatrix(a).certificate->r;
    for_seeds(3, [&](Gen& g) {
      const ExactMatrix p = random_invertible(g, Q, a.dim());
      const ExactMatrix pinv = invert(p);
      const Algebra b = change_basis(a, p, pinv);
      const SolveResult res = solve_rmatrix(b);
      ASSERT_TRUE(res.feasible());
      EXPECT_EQ(res.certificate->r, transport(b, r, pinv));
    });
  }
}

TEST(RMatrixProperty, SingleMonomialSolutionsAreTrivial) {
  for (const auto& name : corpus_names()) {
    const Algebra a = corpus(name);
    if (a.dim() > 9) continue;
    const SolveResult res = solve_rmatrix(a);
    if (!res.feasible() || res.certificate->r.term_count() != 1) continue;
    EXPECT_EQ(res.certificate->r, unit_tensor(a, 3)) << name;
  }
}

TEST(RMatrix, TensorOfCertificates) {
  const Algebra m = build_matrix_algebra(2, Q), h = build_quaternion(q(-1), q(-1));
  const RMatrixCertificate rm = *solve_rmatrix(m).certificate, rh = *solve_rmatrix(h).certificate;
  const RMatrixCertificate mh = tensor_rmatrix(rm, rh);
  EXPECT_TRUE(mh.valid());
  EXPECT_EQ(mh.algebra.dim(), 16u);
  EXPECT_EQ(mh.r.term_count(), rm.r.term_count() * rh.r.term_count());
  const RMatrixCertificate r5 = *solve_rmatrix(build_matrix_algebra(2, GF(5))).certificate;
  EXPECT_THROW(tensor_rmatrix(rm, r5), Error);
}
