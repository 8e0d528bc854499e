#include <gtest/gtest.h>

#include "support.hpp"

using namespace pnh;

TEST(Presentation, NormalizesRelators) {
  auto a = Alphabet::make({GenSym("a"), GenSym("b")});
  Presentation p(a);
  EXPECT_TRUE(p.add(parse_word("a b a'", a)));         // cyclically b
  EXPECT_FALSE(p.add(parse_word("b'", a)));            // inverse of b
  EXPECT_TRUE(p.add(parse_word("a b a' b'", a)));
  EXPECT_FALSE(p.add(parse_word("b a b' a'", a)));     // inverse of a rotation
  EXPECT_FALSE(p.add(parse_word("a a'", a)));
  EXPECT_EQ(p.relator_count(), 2u);
  EXPECT_EQ(p.str(), "< a b | b, a b a' b' >");
  EXPECT_EQ(p.total_length(), 5u);
}

TEST(Presentation, ForeignRelatorThrows) {
  auto a = Alphabet::make({GenSym("a")});
  auto b = Alphabet::make({GenSym("b")});
  Presentation p(a);
  EXPECT_THROW(p.add(Word(b, {1})), AlphabetMismatch);
  EXPECT_THROW(add_relators(p, {Word(b, {1})}), UnknownSymbol);
}

TEST(Presentation, MonodromyRelators) {
  auto fib = Alphabet::indexed("d", 1, 3);
  Presentation p = monodromy_relators(fib, {{GenSym("g"), Braid::sigma(3, 1)}});
  EXPECT_EQ(p.generator_count(), 4u);
  // d3 is fixed, so g^-1 d3 g d3^-1 stays; the others pair up.
  EXPECT_EQ(p.relator_count(), 3u);
  EXPECT_THROW(monodromy_relators(fib, {{GenSym("g"), Braid::sigma(4, 1)}}), StrandMismatch);
}

TEST(Presentation, StabilizerRelators) {
  auto fib = Alphabet::indexed("d", 1, 3);
  auto rels = stabilizer_relators(fib, {Braid::sigma(3, 1, 2)});
  // sigma_1^2 fixes d3; the relators for d1 and d2 are both the commutator.
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].str(), "d1' d2' d1 d2");
  for (const auto& r : rels) EXPECT_EQ(r.exponent_sum(2), 0);
}

TEST(Presentation, PiPrimeShape) {
  EXPECT_EQ(pi_prime_raw_relators().size(), 35u);
  Presentation p = pi_prime();
  EXPECT_EQ(p.generator_count(), 6u);
  EXPECT_EQ(p.relator_count(), 31u);
  EXPECT_EQ(pi_prime_braids().size(), 6u);
}
