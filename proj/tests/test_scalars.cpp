#include <gtest/gtest.h>

#include "support.hpp"

using namespace canonr;
using namespace canonr::testing;

namespace {

const std::vector<std::uint64_t> kPrimes = {2, 3, 5, 7, 97, 2147483647};

std::vector<FieldDescriptor> fields() {
  std::vector<FieldDescriptor> out{Q};
  for (auto p : kPrimes) out.push_back(GF(p));
  return out;
}

}  // namespace

TEST(Scalars, RationalsAreReducedWithPositiveDenominator) {
  const FieldElement x = parse_scalar("-6/4", Q);
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(parse_scalar("-10/5", Q).to_string(), "-2");
  EXPECT_EQ(parse_scalar("0/7", Q).to_string(), "0");
}

TEST(Scalars, ResiduesAreCanonical) {
  EXPECT_EQ(FieldElement(GF(7), -1).residue(), 6u);
  EXPECT_EQ(FieldElement(GF(7), 15).residue(), 1u);
  EXPECT_EQ(parse_scalar("1/3", GF(7)).residue(), 5u);
}

TEST(Scalars, ParseRejectsGarbage) {
  for (const char* bad : {"", "6/-4", "1/", "/2", "1.5", "x", "1/0", "--1", "1 /2"}) {
    EXPECT_THROW(parse_scalar(bad, Q), Error) << bad;
  }
  EXPECT_THROW(parse_scalar("1/7", GF(7)), Error);
}

TEST(Scalars, DivisionByZeroThrows) {
  for (const auto& f : fields()) {
    try {
      (void)(FieldElement::one(f) / FieldElement::zero(f));
      FAIL() << f.name();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
  }
}

TEST(Scalars, MixingFieldsThrows) {
  try {
    (void)(FieldElement::one(Q) + FieldElement::one(GF(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DescriptorMismatch);
  }
  try {
    (void)(FieldElement::one(GF(3)) * FieldElement::one(GF(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DescriptorMismatch);
  }
}

TEST(Scalars, PrimeFieldRequiresSmallPrime) {
  for (std::uint64_t bad : {0ULL, 1ULL, 4ULL, 91ULL, 4294967291ULL}) {
    EXPECT_THROW(FieldDescriptor::prime_field(bad), Error) << bad;
  }
  EXPECT_NO_THROW(FieldDescriptor::prime_field(2147483647));
}

TEST(Scalars, PrimalityAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
}

TEST(ScalarsProperty, FieldAxioms) {
  for (const auto& f : fields()) {
    SCOPED_TRACE(f.name());
    for_seeds(60, [&](Gen& g) {
      const FieldElement x = g.scalar(f), y = g.scalar(f), z = g.scalar(f);
      const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + zero, x);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(x + (-x), zero);
      EXPECT_EQ(x - y, x + (-y));
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.inverse(), one);
        EXPECT_EQ(y / x * x, y);
      }
      FieldElement acc = z;
      acc.add_product(x, y);
      EXPECT_EQ(acc, z + x * y);
    });
  }
}

TEST(ScalarsProperty, FormatParseRoundTrip) {
  for (const auto& f : fields()) {
    for_seeds(40, [&](Gen& g) {
      const FieldElement x = g.scalar(f);
      EXPECT_EQ(parse_scalar(format_scalar(x), f), x);
    });
  }
}

TEST(ScalarsProperty, FermatInSmallFields) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 97}) {
    const FieldDescriptor f = GF(p);
    for (std::uint64_t v = 0; v < p; ++v) {
      const FieldElement x(f, static_cast<long>(v));
      EXPECT_EQ(power(x, p), x);
    }
  }
}

TEST(ScalarsProperty, ArithDispatchMatchesOperators) {
  for (const auto& f : fields()) {
    for_seeds(20, [&](Gen& g) {
      const FieldElement x = g.scalar(f), y = g.nonzero(f);
      EXPECT_EQ(field_arith(ArithOp::Add, x, y), x + y);
      EXPECT_EQ(field_arith(ArithOp::Sub, x, y), x - y);
      EXPECT_EQ(field_arith(ArithOp::Mul, x, y), x * y);
      EXPECT_EQ(field_arith(ArithOp::Div, x, y), x / y);
      EXPECT_EQ(field_arith(ArithOp::Neg, x), -x);
      EXPECT_EQ(field_arith(ArithOp::Inv, y), y.inverse());
    });
  }
}

TEST(Scalars, LargePrimeProductsDoNotOverflow) {
  const FieldDescriptor f = GF(2147483647);
  const FieldElement x(f, 2147483646);  // -1
  EXPECT_EQ(x * x, FieldElement::one(f));
  EXPECT_EQ(power(FieldElement(f, 7), 2147483646), FieldElement::one(f));
}

TEST(Scalars, RationalsAreArbitraryPrecision) {
  FieldElement x = FieldElement::one(Q);
  const FieldElement ten(Q, 10);
  for (int i = 0; i < 40; ++i) x *= ten;
  EXPECT_EQ(x.to_string(), "1" + std::string(40, '0'));
  EXPECT_EQ((x + FieldElement::one(Q)) / x - FieldElement::one(Q), FieldElement::one(Q) / x);
}
