#include <gtest/gtest.h>

#include "support.hpp"

using namespace pnh;
using testing_support::random_word;

TEST(Parse, Presentation) {
  Presentation p = parse_presentation("< a b | a^4, b^4, a b a' b' >");
  EXPECT_EQ(p.generator_count(), 2u);
  EXPECT_EQ(p.relator_count(), 3u);
}

TEST(Parse, CommentsAndLayout) {
  Presentation p = parse_presentation("# header\n<\n  a b   # generators\n|\n  a^2,\n  b^3 = 1\n>\n");
  EXPECT_EQ(p.str(), "< a b | a^2, b^3 >");
}

TEST(Parse, RelationsBecomeRelators) {
  auto a = Alphabet::make({GenSym("a"), GenSym("b")});
  EXPECT_EQ(parse_relator("a b = b a", a).str(), "a b a' b'");
  EXPECT_EQ(parse_relator("(a b)^-2", a).str(), "b' a' b' a'");
  EXPECT_TRUE(parse_relator("a = a", a).is_identity());
  EXPECT_TRUE(parse_word("1", a).is_identity());
  EXPECT_EQ(parse_word("a''", a).str(), "a");
  EXPECT_EQ(parse_word("(a^2 b)'", a).str(), "b' a^-2");
}

TEST(Parse, GreedyTokenSplitting) {
  auto fib = Alphabet::indexed("d", 1, 5);
  EXPECT_EQ(parse_word("d4d5", fib).str(), "d4 d5");
  EXPECT_THROW(parse_word("d6", fib), ParseError);
}

TEST(Parse, BraidWords) {
  Braid b = parse_braid("s1' s2 s3 s1 s2' s1", 5);
  EXPECT_EQ(b, monodromy_braids().at("beta1"));
  EXPECT_EQ(parse_braid("s4^12 s2^2", 5), monodromy_braids().at("beta0"));
  EXPECT_THROW(parse_braid("s5", 5), ParseError);
}

TEST(Parse, BetaPlusRelationWord) {
  Word w = parse_word("d2' d1' d2 d1 d2", fiber_alphabet());
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(parse_relator("d5 = d2' d1' d2 d1 d2", fiber_alphabet()),
            Word::generator(fiber_alphabet(), 4) * w.inverse());
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_presentation("< a b |\n a^4, b^ >");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
  EXPECT_THROW(parse_presentation("< a a | a >"), ParseError);
  EXPECT_THROW(parse_presentation("< a | a^2"), ParseError);
  EXPECT_THROW(parse_presentation("< a | a^2 > extra"), ParseError);
  EXPECT_THROW(parse_presentation("< a | a^9999999 >"), ParseError);
  EXPECT_THROW(parse_presentation("< a | b >"), ParseError);
}

TEST(Parse, WordRoundTrip) {
  std::mt19937 rng(31);
  auto a = Alphabet::make({GenSym("d", 1u), GenSym("A2", 0u), GenSym("G"), GenSym("x_y")});
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, a, 20);
    EXPECT_EQ(parse_word(w.str(), a), w) << w.str();
  }
}

TEST(Parse, PresentationRoundTrip) {
  for (const auto& p : {pi_prime(), z2_cover_presentation().presentation, orbifold_presentation(2)}) {
    Presentation q = parse_presentation(p.str());
    EXPECT_EQ(q.str(), p.str());
    EXPECT_EQ(q.relator_count(), p.relator_count());
  }
}
