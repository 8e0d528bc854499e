#include <gtest/gtest.h>

#include "support.hpp"

using namespace pnh;
using testing_support::random_word;

namespace {

AlphabetPtr abc() { return Alphabet::make({GenSym("a"), GenSym("b"), GenSym("c")}); }

detail::Letters brute_least_rotation(const detail::Letters& w) {
  detail::Letters best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    detail::Letters r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, r);
  }
  return best;
}

}  // namespace

TEST(GenSym, Tokens) {
  EXPECT_EQ(GenSym("d", 1u).token(), "d1");
  EXPECT_EQ(GenSym("A2", 3u).token(), "A2_3");
  EXPECT_EQ(GenSym("G").token(), "G");
  EXPECT_THROW(GenSym(""), Error);
}

TEST(Alphabet, RejectsDuplicateTokens) {
  EXPECT_THROW(Alphabet::make({GenSym("a"), GenSym("a")}), Error);
  auto a = Alphabet::indexed("d", 1, 5);
  EXPECT_EQ(a->size(), 5u);
  EXPECT_EQ(a->index_of(GenSym("d", 3u)), 2u);
  EXPECT_THROW(a->index_of(GenSym("x")), UnknownSymbol);
}

TEST(Word, FreeReductionIsEager) {
  auto a = abc();
  Word w(a, {1, 2, -2, -1, 3});
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(w.str(), "c");
  EXPECT_TRUE((w * w.inverse()).is_identity());
}

TEST(Word, GroupLaws) {
  std::mt19937 rng(7);
  auto a = abc();
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, a, 12), v = random_word(rng, a, 12), w = random_word(rng, a, 12);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_EQ((u * v).inverse(), v.inverse() * u.inverse());
    EXPECT_TRUE((u * u.inverse()).is_identity());
    for (std::size_t j = 1; j < u.size(); ++j) EXPECT_NE(u.letters()[j], -u.letters()[j - 1]);
  }
}

TEST(Word, PowersAndExponentSums) {
  auto a = abc();
  Word ab(a, {1, 2});
  EXPECT_EQ(ab.pow(3).str(), "a b a b a b");
  EXPECT_EQ(ab.pow(-2), ab.inverse().pow(2));
  EXPECT_TRUE(ab.pow(0).is_identity());
  EXPECT_EQ(ab.pow(5).exponent_sum(0), 5);
}

TEST(Word, BoothMatchesBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 14);
  for (int i = 0; i < 2000; ++i) {
    detail::Letters w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = letter(rng) * (rng() % 2 ? 1 : -1);
    EXPECT_EQ(detail::least_rotation(w), brute_least_rotation(w));
  }
}

TEST(Word, CyclicKeyIsClassInvariant) {
  std::mt19937 rng(5);
  auto a = abc();
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, a, 10);
    detail::Letters w(u.letters().begin(), u.letters().end());
    detail::cyclic_reduce(w);
    if (w.empty()) continue;
    auto key = detail::cyclic_key(w);
    detail::Letters rot(w.begin() + 1, w.end());
    rot.push_back(w.front());
    EXPECT_EQ(detail::cyclic_key(rot), key);
    EXPECT_EQ(detail::cyclic_key(detail::inverse_letters(w)), key);
  }
}

TEST(Word, RebindByToken) {
  auto a = abc();
  auto b = Alphabet::make({GenSym("c"), GenSym("a")});
  Word w(a, {1, -3});
  EXPECT_EQ(w.rebind(b).str(), "a c'");
  EXPECT_THROW(Word(a, {2}).rebind(b), UnknownSymbol);
}

TEST(Word, MixingAlphabetsThrows) {
  auto a = abc();
  auto b = Alphabet::make({GenSym("x")});
  EXPECT_THROW(Word(a, {1}) * Word(b, {1}), AlphabetMismatch);
}

TEST(Substitution, AppliesAndComposes) {
  auto a = abc();
  Substitution s(a, a, {Word(a, {2}), Word(a, {3}), Word(a, {1})});
  Word w(a, {1, -2});
  EXPECT_EQ(s(w).str(), "b c'");
  EXPECT_EQ(s.then(s).then(s)(w), w);
  EXPECT_EQ(substitute(w, {{GenSym("a"), Word(a, {2, 2})}, {GenSym("b"), Word(a, {2})}, {GenSym("c"), Word(a)}}).str(),
            "b");
  EXPECT_THROW(substitute(w, {{GenSym("a"), Word(a, {2})}}), MissingImage);
}
