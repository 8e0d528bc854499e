#include <gtest/gtest.h>

#include "support.hpp"

using namespace pnh;
using testing_support::random_braid;
using testing_support::random_word;

namespace {

const AlphabetPtr& fib() {
  static const AlphabetPtr a = Alphabet::indexed("d", 1, 5);
  return a;
}

Braid s(unsigned i, int e = 1) { return Braid::sigma(5, i, e); }

}  // namespace

TEST(Braid, GeneratorImages) {
  auto im = s(2).images(fib());
  EXPECT_EQ(im[1].str(), "d3");
  EXPECT_EQ(im[2].str(), "d3' d2 d3");
  EXPECT_EQ(im[0].str(), "d1");
  auto inv = s(2, -1).images(fib());
  EXPECT_EQ(inv[1].str(), "d2 d3 d2'");
  EXPECT_EQ(inv[2].str(), "d2");
}

TEST(Braid, ArtinRelationsAsActions) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, fib(), 10);
    for (unsigned k = 1; k + 1 < 5; ++k)
      EXPECT_EQ(act(s(k) * s(k + 1) * s(k), w, fib()), act(s(k + 1) * s(k) * s(k + 1), w, fib()));
    for (unsigned k = 1; k < 5; ++k)
      for (unsigned j = k + 2; j < 5; ++j) EXPECT_EQ(act(s(k) * s(j), w, fib()), act(s(j) * s(k), w, fib()));
    for (unsigned k = 1; k < 5; ++k) EXPECT_EQ(act(s(k) * s(k, -1), w, fib()), w);
  }
}

TEST(Braid, ActionIsAnAutomorphism) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    Braid b = random_braid(rng, 5, 8), c = random_braid(rng, 5, 8);
    Word u = random_word(rng, fib(), 8), v = random_word(rng, fib(), 8);
    EXPECT_EQ(act(b, u * v, fib()), act(b, u, fib()) * act(b, v, fib()));
    EXPECT_EQ(act(b * c, u, fib()), act(c, act(b, u, fib()), fib()));
    EXPECT_EQ(act(b.inverse(), act(b, u, fib()), fib()), u);
  }
}

TEST(Braid, FixesTheProductOfGenerators) {
  std::mt19937 rng(3);
  Word prod(fib(), {1, 2, 3, 4, 5});
  for (int i = 0; i < 50; ++i) EXPECT_EQ(act(random_braid(rng, 5, 12), prod, fib()), prod);
}

TEST(Braid, PowAndInverse) {
  Braid b = s(1) * s(3, -1);
  EXPECT_EQ(b.pow(2), b * b);
  EXPECT_EQ(b.pow(-1), b.inverse());
  EXPECT_EQ(b.pow(0), Braid::identity(5));
  EXPECT_EQ(b.str(), "s1 s3'");
}

TEST(Braid, Errors) {
  EXPECT_THROW(Braid::sigma(5, 5), IndexOutOfRange);
  EXPECT_THROW(Braid(1), Error);
  EXPECT_THROW(act(s(1), Word(fib(), {1}), Alphabet::indexed("d", 1, 4)), StrandMismatch);
  EXPECT_THROW(s(1) * Braid::sigma(4, 1), StrandMismatch);
}

TEST(Braid, PrintedInverseImagesOfBeta1) {
  const Braid inv = monodromy_braids().at("beta1").inverse();
  const char* expected[] = {"d1 d2 d3 d2' d1' d2' d1 d2 d4 d2' d1' d2 d1 d2 d3' d2' d1'",
                            "d1 d2 d3 d2' d1'",
                            "d2' d1 d2 d4' d2' d1' d2 d1 d2 d4 d2' d1' d2",
                            "d2' d1 d2",
                            "d5"};
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(act(inv, Word::generator(fiber_alphabet(), i), fiber_alphabet()),
              parse_word(expected[i], fiber_alphabet()))
        << "d" << i + 1;
}

TEST(Braid, ConjugatedBraids) {
  auto b = monodromy_braids();
  const Braid c = s(4, -6) * s(2, -1);
  EXPECT_EQ(b.at("beta-1"), c * b.at("beta1") * c.inverse());
  EXPECT_EQ(b.at("beta-"), c * b.at("beta+") * c.inverse());
  EXPECT_EQ(b.at("beta0").size(), 14u);
}
