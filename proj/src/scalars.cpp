#include "canonr/scalars.hpp"

#include <cctype>

namespace canonr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::UnvalidatedAlgebra: return "UnvalidatedAlgebra";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::NonInvertibleParameter: return "NonInvertibleParameter";
    case ErrorKind::NonMonicModulus: return "NonMonicModulus";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::LegOutOfRange: return "LegOutOfRange";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::BadSlots: return "BadSlots";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::UnverifiedCertificate: return "UnverifiedCertificate";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidField, "GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  }
  return {FieldKind::PrimeField, p};
}

std::string FieldDescriptor::name() const {
  return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

FieldElement::FieldElement(const FieldDescriptor& field, long value) : field_(field) {
  if (field.kind == FieldKind::Rationals) {
    q_ = value;
  } else {
    long m = value % static_cast<long>(field.p);
    r_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(field.p) : m);
  }
}

FieldElement::FieldElement(const FieldDescriptor& field, const mpz_class& numerator,
                           const mpz_class& denominator)
    : field_(field) {
  if (field.kind == FieldKind::Rationals) {
    if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
  } else {
    std::uint64_t den = reduce_mpz(denominator, field.p);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(field.p));
    r_ = reduce_mpz(numerator, field.p) * mod_pow(den, field.p - 2, field.p) % field.p;
  }
}

bool FieldElement::is_zero() const {
  return field_.kind == FieldKind::Rationals ? sgn(q_) == 0 : r_ == 0;
}

bool FieldElement::is_one() const {
  return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void FieldElement::check_same_field(const FieldElement& y) const {
  if (!(field_ == y.field_)) {
    throw Error(ErrorKind::DescriptorMismatch,
                "scalars over " + field_.name() + " and " + y.field_.name() + " cannot be combined");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  check_same_field(y);
  if (field_.kind == FieldKind::Rationals) {
    q_ += y.q_;
  } else {
    r_ += y.r_;
    if (r_ >= field_.p) r_ -= field_.p;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  check_same_field(y);
  if (field_.kind == FieldKind::Rationals) {
    q_ -= y.q_;
  } else {
    r_ = r_ >= y.r_ ? r_ - y.r_ : r_ + field_.p - y.r_;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  check_same_field(y);
  if (field_.kind == FieldKind::Rationals) {
    q_ *= y.q_;
  } else {
    r_ = r_ * y.r_ % field_.p;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& y) {
  check_same_field(y);
  return *this *= y.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElement out = *this;
  if (field_.kind == FieldKind::Rationals) {
    mpq_inv(out.q_.get_mpq_t(), q_.get_mpq_t());
  } else {
    out.r_ = mod_pow(r_, field_.p - 2, field_.p);
  }
  return out;
}

void FieldElement::add_product(const FieldElement& x, const FieldElement& y) {
  check_same_field(x);
  check_same_field(y);
  if (field_.kind == FieldKind::Rationals) {
    if (sgn(x.q_) == 0 || sgn(y.q_) == 0) return;
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    q_ += scratch;
  } else {
    r_ = (r_ + x.r_ * y.r_) % field_.p;
  }
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (!(x.field_ == y.field_)) return false;
  return x.field_.kind == FieldKind::Rationals ? x.q_ == y.q_ : x.r_ == y.r_;
}

std::string FieldElement::to_string() const {
  if (field_.kind == FieldKind::PrimeField) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement field_arith(ArithOp op, const FieldElement& x, const std::optional<FieldElement>& y) {
  auto rhs = [&]() -> const FieldElement& {
    if (!y) throw Error(ErrorKind::ShapeMismatch, "binary field operation needs two operands");
    return *y;
  };
  switch (op) {
    case ArithOp::Add: return x + rhs();
    case ArithOp::Sub: return x - rhs();
    case ArithOp::Mul: return x * rhs();
    case ArithOp::Div: return x / rhs();
    case ArithOp::Neg: return -x;
    case ArithOp::Inv: return x.inverse();
  }
  return x;
}

FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field) {
  const std::string original(text);
  auto fail = [&]() -> FieldElement {
    throw Error(ErrorKind::ParseError, "malformed scalar \"" + original + "\"");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    out.assign(text.substr(start, pos - start));
    return pos > start;
  };
  std::string num_digits;
  std::string den_digits = "1";
  if (!read_digits(num_digits)) return fail();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den_digits)) return fail();
  }
  if (pos != text.size()) return fail();

  mpz_class num(num_digits, 10);
  mpz_class den(den_digits, 10);
  if (negative) num = -num;
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in \"" + original + "\"");
  return FieldElement(field, num, den);
}

FieldElement power(FieldElement x, std::uint64_t exponent) {
  FieldElement result = FieldElement::one(x.field());
  while (exponent > 0) {
    if (exponent & 1) result *= x;
    x *= x;
    exponent >>= 1;
  }
  return result;
}

}  // namespace canonr
