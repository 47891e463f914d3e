#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "canonr/error.hpp"

namespace canonr {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// The base field: either Q or GF(p).
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // zero unless kind == PrimeField

  static FieldDescriptor rationals() { return {}; }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);

  std::uint64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }
  std::string name() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime(std::uint64_t n);

/// Exact scalar in canonical form: reduced fraction with positive
/// denominator over Q, residue in [0, p) over GF(p).
class FieldElement {
 public:
  FieldElement() = default;  // rational zero
  FieldElement(const FieldDescriptor& field, long value);
  FieldElement(const FieldDescriptor& field, const mpz_class& numerator,
               const mpz_class& denominator);

  static FieldElement zero(const FieldDescriptor& field) { return {field, 0}; }
  static FieldElement one(const FieldDescriptor& field) { return {field, 1}; }

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over Q.
  const mpq_class& rational() const { return q_; }
  /// Valid only over GF(p).
  std::uint64_t residue() const { return r_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);
  FieldElement inverse() const;

  /// this += x * y without an intermediate FieldElement.
  void add_product(const FieldElement& x, const FieldElement& y);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  /// "p/q", or "p" when the denominator is one; residues print as integers.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& y) const;

  FieldDescriptor field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatching form of the field operations; `y` is required for the binary ops.
FieldElement field_arith(ArithOp op, const FieldElement& x,
                         const std::optional<FieldElement>& y = std::nullopt);

/// Grammar: [+-]?digits("/"digits)?. Over GF(p), "a/b" is a * b^-1 mod p.
FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field);
inline std::string format_scalar(const FieldElement& x) { return x.to_string(); }

inline bool is_invertible(const FieldElement& x) { return !x.is_zero(); }

FieldElement power(FieldElement x, std::uint64_t exponent);

}  // namespace canonr
