#pragma once

// Shared helpers for the test suites: seeded generators, the algebra corpus,
// and small brute-force oracles that do not go through the library's own
// fast paths.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "canonr/io.hpp"

namespace canonr::testing {

inline const FieldDescriptor Q = FieldDescriptor::rationals();
inline FieldDescriptor GF(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
inline FieldElement q(long n, long d = 1) { return FieldElement(Q, n) / FieldElement(Q, d); }
inline FieldElement s(const FieldDescriptor& f, long n) { return FieldElement(f, n); }

inline std::string data_path(const std::string& name) { return std::string(CANONR_TEST_DATA) + "/" + name + ".json"; }
inline Algebra corpus(const std::string& name) { return load_algebra_file(data_path(name)); }

/// Deterministic generator; every property runs over a fixed list of seeds.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  FieldElement scalar(const FieldDescriptor& f) {
    if (f.kind == FieldKind::PrimeField) return FieldElement(f, integer(0, static_cast<long>(f.p) - 1));
    const long num = integer(-40, 40);
    const long den = integer(1, 12);
    return FieldElement(f, num) / FieldElement(f, den);
  }
  FieldElement nonzero(const FieldDescriptor& f) {
    for (;;) {
      FieldElement x = scalar(f);
      if (!x.is_zero()) return x;
    }
  }
  Vector vector(const FieldDescriptor& f, std::size_t n, double density = 1.0) {
    Vector v = zero_vector(n, f);
    for (auto& x : v) {
      if (coin(density)) x = scalar(f);
    }
    return v;
  }
  AlgebraElement element(const Algebra& a) { return {a, vector(a.field(), a.dim())}; }
  TensorElement tensor(const Algebra& a, std::size_t arity, double density = 0.5) {
    std::size_t size = 1;
    for (std::size_t t = 0; t < arity; ++t) size *= a.dim();
    return TensorElement(a, arity, vector(a.field(), size, density));
  }
  ExactMatrix matrix(const FieldDescriptor& f, std::size_t rows, std::size_t cols, double density = 0.6) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (coin(density)) m.at(r, c) = scalar(f);
      }
    }
    return m;
  }
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body` once per seed with the seed in the failure trace.
inline void for_seeds(std::uint64_t count, const std::function<void(Gen&)>& body, std::uint64_t base = 20261016) {
  for (std::uint64_t i = 0; i < count; ++i) {
    SCOPED_TRACE("seed " + std::to_string(base + i));
    Gen g(base + i);
    body(g);
  }
}

/// Brute-force product in A straight from the structure constants.
inline Vector naive_mul(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  Vector out = zero_vector(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.constant(i, j, k);
    }
  }
  return out;
}

/// Multi-index helpers for dense tensors (leg 1 most significant).
inline std::vector<std::size_t> digits(std::size_t index, std::size_t n, std::size_t arity) {
  std::vector<std::size_t> d(arity);
  for (std::size_t t = arity; t > 0; --t) {
    d[t - 1] = index % n;
    index /= n;
  }
  return d;
}
inline std::size_t undigits(const std::vector<std::size_t>& d, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t x : d) idx = idx * n + x;
  return idx;
}

/// Legwise product of two tensors by looping over every pair of monomials
/// and every output monomial.
inline TensorElement naive_tensor_mul(const TensorElement& s, const TensorElement& t) {
  const Algebra& a = s.algebra();
  const std::size_t n = a.dim(), m = s.arity();
  Vector out = zero_vector(s.size(), a.field());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.coeffs()[x].is_zero()) continue;
    const auto dx = digits(x, n, m);
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.coeffs()[y].is_zero()) continue;
      const auto dy = digits(y, n, m);
      for (std::size_t z = 0; z < out.size(); ++z) {
        const auto dz = digits(z, n, m);
        FieldElement c = s.coeffs()[x] * t.coeffs()[y];
        for (std::size_t l = 0; l < m && !c.is_zero(); ++l) c *= a.constant(dx[l], dy[l], dz[l]);
        out[z] += c;
      }
    }
  }
  return TensorElement(a, m, std::move(out));
}

/// Index of the matrix unit e_{ij} (0-based) in M_n.
inline std::size_t unit_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

/// sum_{i,j,k} e_ij (x) e_ki (x) e_jk written out coordinate by coordinate.
inline TensorElement matrix_r_oracle(const Algebra& m, std::size_t n) {
  Vector c = zero_vector(m.dim() * m.dim() * m.dim(), m.field());
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        c[(unit_index(n, i, j) * d + unit_index(n, k, i)) * d + unit_index(n, j, k)] += FieldElement::one(m.field());
      }
    }
  }
  return TensorElement(m, 3, std::move(c));
}

/// Hand-derived quaternion table on (1, i, j, k): i^2 = a, j^2 = b, k^2 = -ab,
/// ij = k, ji = -k, ik = aj, ki = -aj, jk = -bi, kj = bi.
inline Vector quaternion_oracle(const FieldElement& a, const FieldElement& b, std::size_t x, std::size_t y) {
  const FieldDescriptor& f = a.field();
  Vector out = zero_vector(4, f);
  const FieldElement one = FieldElement::one(f);
  if (x == 0) {
    out[y] = one;
    return out;
  }
  if (y == 0) {
    out[x] = one;
    return out;
  }
  switch (x * 4 + y) {
    case 1 * 4 + 1: out[0] = a; break;
    case 2 * 4 + 2: out[0] = b; break;
    case 3 * 4 + 3: out[0] = -(a * b); break;
    case 1 * 4 + 2: out[3] = one; break;
    case 2 * 4 + 1: out[3] = -one; break;
    case 1 * 4 + 3: out[2] = a; break;
    case 3 * 4 + 1: out[2] = -a; break;
    case 2 * 4 + 3: out[1] = -b; break;
    case 3 * 4 + 2: out[1] = b; break;
  }
  return out;
}

/// The sixteen terms of the quaternion R-matrix, typed in directly.
inline TensorElement quaternion_r_oracle(const Algebra& h, const FieldElement& a, const FieldElement& b) {
  const FieldDescriptor& f = a.field();
  const FieldElement quarter = FieldElement::one(f) / FieldElement(f, 4);
  Vector c = zero_vector(64, f);
  auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> FieldElement& { return c[x * 16 + y * 4 + z]; };
  at(0, 0, 0) = quarter;
  for (auto [g, coef] : {std::pair<std::size_t, FieldElement>{1, quarter / a}, {2, quarter / b},
                         {3, -(quarter / (a * b))}}) {
    at(0, g, g) = coef;
    at(g, 0, g) = coef;
    at(g, g, 0) = coef;
  }
  const FieldElement cab = quarter / (a * b);
  at(1, 2, 3) = cab;
  at(2, 3, 1) = cab;
  at(3, 1, 2) = cab;
  at(2, 1, 3) = -cab;
  at(3, 2, 1) = -cab;
  at(1, 3, 2) = -cab;
  return TensorElement(h, 3, std::move(c));
}

/// Every algebra file in tests/data that describes a valid algebra.
inline std::vector<std::string> corpus_names() {
  return {"k_q",           "m2_q",           "m3_q",           "m4_q",           "m2_gf5",
          "quat_m1_m1_q",  "quat_2_3_q",     "quat_m1_5_q",    "quat_1_1_q",     "quat_1_1_gf7",
          "quat_m1_m1_gf3", "m2_tensor_m2_q", "m2_tensor_quat_q", "op_quat_2_3_q", "dual_numbers_q",
          "x2_minus_1_q",  "x2_plus_1_q",    "x2_plus_1_gf3",  "x_minus_1_q",    "k_sum_k_q",
          "m2_sum_k_q",    "m2_tensor_dual_q", "upper_triangular_q", "upper_triangular_gf5"};
}

}  // namespace canonr::testing
