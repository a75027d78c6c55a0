#include <gtest/gtest.h>

#include "generators.hpp"
#include "toledo/error.hpp"
#include "toledo/matrix.hpp"
#include "toledo/scalar.hpp"

namespace toledo {
namespace {

using testing::Gen;

const FieldScalar kI = FieldScalar::i();
const FieldScalar kR2 = FieldScalar::sqrt2();

TEST(FieldScalar, DefiningRelations) {
  EXPECT_EQ(kR2 * kR2, FieldScalar(2));
  EXPECT_EQ(kI * kI, FieldScalar(-1));
  EXPECT_EQ((kI * kR2) * (kI * kR2), FieldScalar(-2));
}

TEST(FieldScalar, InverseOfOnePlusSqrt2) {
  // (1 + r2)(-1 + r2) = 2 - 1 = 1
  const FieldScalar x = FieldScalar(1) + kR2;
  const FieldScalar expected = FieldScalar(-1) + kR2;
  EXPECT_EQ(x.inv(), expected);
  EXPECT_EQ(x * expected, FieldScalar(1));
}

TEST(FieldScalar, InverseOfGaussian) {
  // 1/(1+i) = (1-i)/2
  const FieldScalar x = FieldScalar::gaussian(1, 1);
  EXPECT_EQ(x.inv(), FieldScalar::gaussian(Rational(1, 2), Rational(-1, 2)));
}

TEST(FieldScalar, DivisionByZeroCarriesOperand) {
  try {
    (void)(FieldScalar(1) / FieldScalar(0));
    FAIL() << "expected DivisionByZero";
  } catch (const DivisionByZero& e) {
    EXPECT_EQ(e.operand(), FieldScalar(0).to_string());
  }
  EXPECT_THROW((void)FieldScalar(0).inv(), DivisionByZero);
}

TEST(FieldScalar, CanonicalLowestTerms) {
  const FieldScalar x(Rational(2, 4), Rational(-6, 3), Rational(0), Rational(3, -9));
  EXPECT_EQ(x.a(), Rational(1, 2));
  EXPECT_EQ(x.a().get_den(), 2);
  EXPECT_EQ(x.b(), Rational(-2));
  EXPECT_EQ(x.d().get_den(), 3);
  EXPECT_LT(x.d(), 0);
}

TEST(FieldScalar, TextForm) {
  const FieldScalar x(Rational(1, 2), Rational(-3), Rational(0), Rational(2, 7));
  EXPECT_EQ(x.to_string(), "1/2 + -3/1*r2 + (0/1 + 2/7*r2)*i");
  EXPECT_EQ(FieldScalar::parse(x.to_string()), x);
  EXPECT_EQ(FieldScalar(0).to_string(), "0/1 + 0/1*r2 + (0/1 + 0/1*r2)*i");
  EXPECT_THROW(FieldScalar::parse("1 + i"), ParseError);
}

TEST(FieldScalar, ParseRational) {
  EXPECT_EQ(parse_rational("628/100"), Rational(157, 25));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("+3/6"), Rational(1, 2));
  EXPECT_THROW(parse_rational("6.28"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(rational_to_string(Rational(-2)), "-2/1");
  EXPECT_EQ(rational_to_short_string(Rational(-2)), "-2");
}

TEST(FieldScalar, SignOfQuadratic) {
  EXPECT_EQ(sign_of_quadratic(Rational(-1), Rational(1)), 1);  // r2 - 1
  EXPECT_EQ(sign_of_quadratic(Rational(3), Rational(-2)), 1);  // 3 - 2 r2 = 3 - 2.828
  EXPECT_EQ(sign_of_quadratic(Rational(-3), Rational(2)), -1);
  EXPECT_EQ(sign_of_quadratic(Rational(0), Rational(0)), 0);
  EXPECT_EQ(sign_of_quadratic(Rational(-7), Rational(5)), 1);  // 5 r2 = 7.07
  EXPECT_EQ(sign_of_quadratic(Rational(7), Rational(-5)), -1);
}

TEST(FieldScalar, SqrtInField) {
  EXPECT_EQ(sqrt_in_field(Rational(9, 4)), FieldScalar(Rational(3, 2)));
  EXPECT_EQ(sqrt_in_field(Rational(2)), kR2);
  EXPECT_EQ(sqrt_in_field(Rational(1, 2)), FieldScalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
  EXPECT_FALSE(sqrt_in_field(Rational(3)).has_value());
}

TEST(FieldScalar, RandomFieldAxioms) {
  Gen gen(20261016);
  for (int k = 0; k < 1000; ++k) {
    const FieldScalar x = gen.scalar();
    const FieldScalar y = gen.scalar();
    const FieldScalar z = gen.scalar();
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    if (!x.is_zero()) {
      ASSERT_EQ(x * x.inv(), FieldScalar(1));
      ASSERT_EQ((y / x) * x, y);
    }
  }
}

TEST(FieldScalar, RandomAutomorphisms) {
  Gen gen(7);
  for (int k = 0; k < 500; ++k) {
    const FieldScalar x = gen.scalar();
    const FieldScalar y = gen.scalar();
    ASSERT_EQ(x.conj().conj(), x);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
    ASSERT_EQ((x * y).sqrt2_conj(), x.sqrt2_conj() * y.sqrt2_conj());
    ASSERT_EQ((x + y).sqrt2_conj(), x.sqrt2_conj() + y.sqrt2_conj());
    ASSERT_EQ(x.real_part() + kI * x.imag_part(), x);
    ASSERT_TRUE((x * x.conj()).is_real());
  }
}

TEST(MatrixF, Examples) {
  const MatrixF id = MatrixF::identity(2);
  EXPECT_TRUE(commutator(id, id).is_zero());
  const MatrixF swap{{0, 1}, {1, 0}};
  EXPECT_EQ((swap * swap).trace(), FieldScalar(2));
  EXPECT_EQ(trace_of_product(swap, swap), FieldScalar(2));
  const MatrixF h{{0, kI}, {-kI, 0}};
  EXPECT_EQ(h.dagger(), h);
}

TEST(MatrixF, DimensionMismatchNamesShapes) {
  const MatrixF a(2, 3);
  const MatrixF b(2, 3);
  try {
    (void)(a * b);
    FAIL() << "expected DimensionMismatch";
  } catch (const DimensionMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("2x3 vs 2x3"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)(a + MatrixF(3, 2)), DimensionMismatch);
  EXPECT_THROW((void)a.trace(), DimensionMismatch);
}

TEST(MatrixF, BlocksAndUnits) {
  MatrixF m(3, 3);
  m.set_block(1, 1, MatrixF{{1, 2}, {3, 4}});
  EXPECT_EQ(m.block(1, 1, 2, 2), (MatrixF{{1, 2}, {3, 4}}));
  EXPECT_EQ(m(2, 1), FieldScalar(3));
  EXPECT_EQ(MatrixF::unit(3, 0, 2)(0, 2), FieldScalar(1));
  EXPECT_TRUE(MatrixF::unit(3, 0, 2).transpose() == MatrixF::unit(3, 2, 0));
  const FieldScalar diag[] = {1, 2, 3};
  EXPECT_TRUE(MatrixF::diagonal(diag).is_diagonal());
  EXPECT_FALSE(m.is_diagonal());
}

TEST(MatrixF, RandomTraceAndAdjointLaws) {
  Gen gen(99);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(gen.range(1, 4));
    const MatrixF x = gen.matrix(n, n);
    const MatrixF y = gen.matrix(n, n);
    const MatrixF z = gen.matrix(n, n);
    ASSERT_TRUE(commutator(x, y).trace().is_zero());
    ASSERT_EQ((x * y).trace(), (y * x).trace());
    ASSERT_EQ(trace_of_product(x, y), (x * y).trace());
    ASSERT_EQ((x * y).dagger(), y.dagger() * x.dagger());
    ASSERT_EQ(x.dagger().dagger(), x);
    ASSERT_EQ(commutator(x, y), -commutator(y, x));
    const FieldScalar s = gen.scalar();
    ASSERT_EQ(commutator(s * x + z, y), s * commutator(x, y) + commutator(z, y));
  }
}

}  // namespace
}  // namespace toledo
