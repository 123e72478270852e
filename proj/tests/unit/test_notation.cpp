#include <gtest/gtest.h>

#include "hermlie/notation.hpp"
#include "hermlie/random.hpp"

using namespace hermlie;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_notation(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return std::size_t(-1);
}

}  // namespace

TEST(Notation, SignConvention) {
  // de^4 = e^12 means [e1,e2] = -e4
  const auto L = parse_notation("(0,0,0,12)");
  EXPECT_EQ(L.dim(), 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Rational expect(0);
        if (i == 0 && j == 1 && k == 3) expect = -1;
        if (i == 1 && j == 0 && k == 3) expect = 1;
        EXPECT_EQ(L.c(i, j, k), expect);
      }
}

TEST(Notation, AbelianAndComplexHeisenberg) {
  EXPECT_TRUE(is_abelian(parse_notation("(0,0,0,0)")));
  const auto H = parse_notation("(0,0,0,0,13-24,14+23)");
  EXPECT_EQ(nilpotency_step(H), 2);
  EXPECT_EQ(H.c(1, 3, 4), 1);  // -24 in slot 5: [e2,e4] = +e5
}

TEST(Notation, CoefficientsAreGluedToTheIndexPair) {
  const auto L = parse_notation("(0,0,0,213-1/212+3/423)");
  EXPECT_EQ(L.c(0, 2, 3), -2);
  EXPECT_EQ(L.c(0, 1, 3), Rational(1, 2));
  EXPECT_EQ(L.c(1, 2, 3), Rational(-3, 4));
}

TEST(Notation, BracketedIndicesInHighDimension) {
  const std::string text = "(0,0,0,0,0,0,0,0,0,[1,2]-3[4,5])";
  const auto L = parse_notation(text);
  EXPECT_EQ(L.dim(), 10);
  EXPECT_EQ(L.c(0, 1, 9), -1);
  EXPECT_EQ(L.c(3, 4, 9), 3);
  EXPECT_EQ(serialize_notation(L), text);
}

TEST(Notation, SerializeCanonicalForm) {
  EXPECT_EQ(serialize_notation(LieAlgebra<Rational>::abelian(4)), "(0,0,0,0)");
  EXPECT_EQ(serialize_notation(parse_notation("(0,0,0,12)")), "(0,0,0,12)");
  // terms are reordered and merged
  EXPECT_EQ(serialize_notation(parse_notation("(0,0,0,23+12+12)")), "(0,0,0,212+23)");
  EXPECT_EQ(serialize_notation(parse_notation("(0,0,0,12-12)")), "(0,0,0,0)");
}

TEST(Notation, RoundTripOnGeneratedAlgebras) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    for (const auto& L : {random_two_step(6, s), random_three_step(6, s), random_two_step(8, s)}) {
      const auto text = serialize_notation(L);
      const auto back = parse_notation(text);
      EXPECT_EQ(back, L) << text;
      EXPECT_EQ(serialize_notation(back), text);
    }
  }
}

TEST(Notation, ErrorPositions) {
  EXPECT_EQ(error_position("(0,0,0"), 6u);
  EXPECT_EQ(error_position("0,0)"), 0u);
  EXPECT_EQ(error_position("(0,0,0,12)x"), 10u);
  EXPECT_EQ(error_position("(0,0,0,15)"), 7u);   // index out of range
  EXPECT_EQ(error_position("(0,0,0,21)"), 7u);   // i < j violated
  EXPECT_EQ(error_position("(0,0,0,1)"), 7u);    // single digit
  EXPECT_EQ(error_position("(0,0,0,1/012)"), 9u);  // zero denominator
  EXPECT_EQ(error_position("(0,0,0,12 )"), 9u);  // whitespace is not allowed
  EXPECT_EQ(error_position("(0,0,0,[1,2])"), 7u);  // brackets only for n >= 10
  EXPECT_EQ(error_position("(0,0,0,0,0,0,0,0,0,12)"), 19u);  // digit pairs only for n <= 9
  EXPECT_EQ(error_position("(0,0,,12)"), 5u);
  EXPECT_EQ(error_position("(0,0,0,12+)"), 10u);
}

TEST(Notation, ParseErrorMessageCarriesPosition) {
  try {
    parse_notation("(0,0,0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos);
  }
}

TEST(Notation, JacobiFailureIsNotAParseError) {
  // [e1,e2] = -e3, [e1,e3] = -e1 ... fails Jacobi
  EXPECT_THROW(parse_notation("(13,0,12)"), JacobiError);
  // 2-dim non-abelian algebra passes Jacobi
  EXPECT_NO_THROW(parse_notation("(0,12)"));
}
