#include <gtest/gtest.h>

#include "gen.hpp"
#include "thetacorr/charlattice.hpp"

using namespace thetacorr;

namespace {

struct CharLattice : ::testing::Test {
  std::shared_ptr<CharContext> ctx = testgen::stock_context();
  Character sym(const char* n) { return Character::symbol(ctx, n); }
};

}  // namespace

TEST_F(CharLattice, OrderTwoSquaresToTrivial) {
  EXPECT_TRUE(is_trivial(mul(sym("o2a"), sym("o2a"))));
  EXPECT_FALSE(is_trivial(mul(sym("o3"), sym("o3"))));
}

TEST_F(CharLattice, OppositeNormsCancel) {
  EXPECT_TRUE(is_trivial(Character::nu(Rational(1, 2), ctx) * Character::nu(Rational(-1, 2), ctx)));
}

TEST_F(CharLattice, AbsExponentOfTwistedCharacter) {
  Character c = sym("fa") * Character::nu(-2, ctx);
  EXPECT_EQ(abs_exponent(c), Rational(-2));
}

TEST_F(CharLattice, QuadraticDetection) {
  EXPECT_TRUE(is_quadratic(sym("o2a")));
  EXPECT_TRUE(is_quadratic(sym("o2a") * sym("o2b")));
  EXPECT_FALSE(is_quadratic(sym("o3")));
  EXPECT_FALSE(is_quadratic(Character::nu(Rational(1, 3), ctx)));
  EXPECT_TRUE(is_quadratic(Character::trivial(ctx)));
}

TEST_F(CharLattice, RatioOfSameUnitaryPart) {
  Rational s1(1, 3), s2(-5, 4);
  Character u = sym("fb");
  Character c1 = u * Character::nu(-s1, ctx);
  Character c2 = u * Character::nu(-s2, ctx);
  EXPECT_EQ(abs_exponent(c1 / c2), s2 - s1);
  EXPECT_TRUE(is_unitary(unitary_part(c1 / c2)));
}

TEST_F(CharLattice, ExponentsReducedModOrder) {
  Character c(ctx, {{"o3", 7}, {"o2a", -1}, {"fa", 0}}, 0);
  Character::Exponents want{{"o2a", 1}, {"o3", 1}};
  EXPECT_EQ(c.unitary_exponents(), want);
}

TEST_F(CharLattice, FormatAndParse) {
  Character c = sym("o2a") * pow(sym("fa"), -2) * Character::nu(Rational(-1, 2), ctx);
  EXPECT_EQ(format(c), "fa^-2*o2a*nu^(-1/2)");
  EXPECT_EQ(parse_character("o2a/fa^2*nu^(-1/2)", ctx), c);
  EXPECT_EQ(format(Character::trivial(ctx)), "1");
  EXPECT_EQ(parse_character("(fa*nu)^2", ctx), sym("fa") * sym("fa") * Character::nu(2, ctx));
}

TEST_F(CharLattice, DeclarationErrors) {
  EXPECT_THROW(ctx->declare("nu"), ValidationError);
  EXPECT_THROW(ctx->declare("fa"), ValidationError);
  EXPECT_THROW(ctx->declare("z", 0), ValidationError);
  EXPECT_THROW(parse_character("undeclared", ctx), ParseError);
}

TEST_F(CharLattice, MixedContextsRejected) {
  auto other = testgen::stock_context();
  EXPECT_THROW(mul(sym("fa"), Character::symbol(other, "fa")), ContextError);
}

TEST_F(CharLattice, FractionalPowerOfUnitaryRejected) {
  EXPECT_THROW(parse_character("fa^(1/2)", ctx), ParseError);
  EXPECT_EQ(parse_character("nu^(1/2)", ctx), Character::nu(Rational(1, 2), ctx));
}

TEST_F(CharLattice, PropertyGroupLaws) {
  testgen::Gen g(11);
  Character one = Character::trivial(ctx);
  for (int i = 0; i < 400; ++i) {
    Character a = g.character(ctx), b = g.character(ctx), c = g.character(ctx);
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(mul(a, b), mul(b, a));
    ASSERT_TRUE(is_trivial(mul(inv(a), a)));
    ASSERT_EQ(pow(a, 0), one);
    ASSERT_EQ(pow(a, 3), a * a * a);
    ASSERT_EQ(pow(a, -2), inv(a * a));
    ASSERT_EQ(abs_exponent(mul(a, b)), abs_exponent(a) + abs_exponent(b));
    ASSERT_EQ(abs_exponent(unitary_part(a)), Rational(0));
    ASSERT_EQ(is_quadratic(a), is_trivial(a * a));
  }
}

TEST_F(CharLattice, PropertyFormatRoundTrip) {
  testgen::Gen g(12);
  for (int i = 0; i < 400; ++i) {
    Character a = g.character(ctx);
    std::string s = format(a);
    Character back = parse_character(s, ctx);
    ASSERT_EQ(back, a) << s;
    ASSERT_EQ(format(back), s);
  }
}

TEST_F(CharLattice, PropertyTotalOrder) {
  testgen::Gen g(13);
  for (int i = 0; i < 300; ++i) {
    Character a = g.character(ctx), b = g.character(ctx);
    auto ab = a <=> b, ba = b <=> a;
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(ab < 0, ba > 0);
  }
}
