#include <gtest/gtest.h>

#include "support.hpp"

using namespace canonr;
using namespace canonr::testing;

TEST(Algebra, MatrixUnitsMultiplyAsExpected) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra m = build_matrix_algebra(n, Q);
    ASSERT_EQ(m.dim(), n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            Vector expect = zero_vector(n * n, Q);
            if (j == k) expect[unit_index(n, i, l)] = q(1);
            EXPECT_EQ(to_dense(m.product(unit_index(n, i, j), unit_index(n, k, l)), n * n, Q), expect);
          }
  }
}

TEST(Algebra, QuaternionTableAgreesWithHandDerivation) {
  for (auto [a, b] : {std::pair{q(-1), q(-1)}, {q(2), q(3)}, {q(-1), q(5)}, {q(1, 2), q(-7, 3)}}) {
    const Algebra h = build_quaternion(a, b);
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(to_dense(h.product(x, y), 4, Q), quaternion_oracle(a, b, x, y));
  }
  const FieldDescriptor f = GF(7);
  const Algebra h = build_quaternion(s(f, 3), s(f, 5));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      EXPECT_EQ(to_dense(h.product(x, y), 4, f), quaternion_oracle(s(f, 3), s(f, 5), x, y));
}

TEST(Algebra, QuaternionRejectsBadParameters) {
  try {
    build_quaternion(s(GF(2), 1), s(GF(2), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicTwo);
  }
  try {
    build_quaternion(q(0), q(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonInvertibleParameter);
  }
}

TEST(Algebra, PolynomialQuotient) {
  // k[x]/(x^3 - 2): x * x^2 = 2.
  const Algebra a = build_poly_quotient({q(-2), q(0), q(0), q(1)}, Q);
  ASSERT_EQ(a.dim(), 3u);
  EXPECT_EQ(to_dense(a.product(1, 2), 3, Q), (Vector{q(2), q(0), q(0)}));
  EXPECT_EQ(to_dense(a.product(2, 2), 3, Q), (Vector{q(0), q(2), q(0)}));
  EXPECT_TRUE(a.is_commutative());
  try {
    build_poly_quotient({q(1), q(2)}, Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonMonicModulus);
  }
}

TEST(Algebra, ValidationReportsTheFirstFailure) {
  // Two-dimensional table with e1 e1 = e0 + e1 but a non-associative twist.
  std::vector<FieldElement> t(8, q(0));
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> FieldElement& { return t[(i * 2 + j) * 2 + k]; };
  c(0, 0, 0) = q(1);
  c(0, 1, 1) = q(1);
  c(1, 0, 1) = q(1);
  c(1, 1, 0) = q(1);
  c(1, 1, 1) = q(1);
  const Algebra ok(Q, 2, t, {q(1), q(0)}, "ok");
  EXPECT_TRUE(validate_algebra(ok).pass());
  const Algebra wrong_unit(Q, 2, t, {q(0), q(1)}, "wrong unit");
  EXPECT_EQ(validate_algebra(wrong_unit).failure, ValidationReport::Failure::LeftUnit);
  c(0, 1, 1) = q(2);
  const Algebra broken(Q, 2, t, {q(1), q(0)}, "broken");
  const ValidationReport rep = validate_algebra(broken);
  EXPECT_FALSE(rep.pass());
  EXPECT_THROW(broken.validated(), Error);
  EXPECT_THROW(Algebra(Q, 2, std::vector<FieldElement>(7, q(0)), {q(1), q(0)}, "short"), Error);
}

TEST(Algebra, Dimensions) {
  const Algebra m2 = build_matrix_algebra(2, Q), h = build_quaternion(q(-1), q(-1));
  EXPECT_EQ(build_tensor_product(m2, h).dim(), 16u);
  EXPECT_EQ(build_direct_sum(m2, build_matrix_algebra(1, Q)).dim(), 5u);
  EXPECT_EQ(center(m2).size(), 1u);
  EXPECT_EQ(center(build_tensor_product(m2, h)).size(), 1u);
  EXPECT_EQ(center(build_direct_sum(m2, m2)).size(), 2u);
  EXPECT_EQ(center(build_poly_quotient({q(0), q(0), q(1)}, Q)).size(), 2u);
  EXPECT_THROW(build_tensor_product(m2, build_matrix_algebra(2, GF(3))), Error);
}

TEST(Algebra, OppositeIsAnInvolution) {
  const Algebra h = build_quaternion(q(2), q(3));
  const Algebra op = opposite(h);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(op.product(x, y), h.product(y, x));
  EXPECT_TRUE(same_algebra(opposite(op), h));
}

TEST(AlgebraProperty, ProductMatchesStructureConstants) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    const Algebra a = corpus(name);
    for_seeds(5, [&](Gen& g) {
      const AlgebraElement x = g.element(a), y = g.element(a), z = g.element(a);
      EXPECT_EQ((x * y).coords, naive_mul(a, x.coords, y.coords));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(AlgebraElement::one(a) * x, x);
      EXPECT_EQ(x * AlgebraElement::one(a), x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
    });
  }
}

TEST(AlgebraProperty, CenterElementsCommute) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    const Algebra a = corpus(name);
    for (const auto& zc : center(a)) {
      const AlgebraElement z{a, zc};
      for (std::size_t i = 0; i < a.dim(); ++i) {
        EXPECT_EQ(z * AlgebraElement::basis(a, i), AlgebraElement::basis(a, i) * z);
      }
    }
  }
}

TEST(AlgebraProperty, TensorProductMultipliesFactorwise) {
  const Algebra a = build_quaternion(q(2), q(3)), b = build_poly_quotient({q(-1), q(0), q(1)}, Q);
  const Algebra ab = build_tensor_product(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          Vector expect = zero_vector(8, Q);
          for (const auto& x : a.product(i, k))
            for (const auto& y : b.product(j, l)) expect[x.index * 2 + y.index] += x.value * y.value;
          EXPECT_EQ(to_dense(ab.product(i * 2 + j, k * 2 + l), 8, Q), expect);
        }
}

TEST(AlgebraProperty, MultiplicationOperators) {
  const Algebra a = corpus("quat_2_3_q");
  for_seeds(5, [&](Gen& g) {
    const AlgebraElement x = g.element(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector left = to_dense(left_multiplication(a, i).apply(to_sparse(x.coords)), 4, Q);
      const Vector right = to_dense(right_multiplication(a, i).apply(to_sparse(x.coords)), 4, Q);
      EXPECT_EQ(left, (AlgebraElement::basis(a, i) * x).coords);
      EXPECT_EQ(right, (x * AlgebraElement::basis(a, i)).coords);
    }
  });
}
