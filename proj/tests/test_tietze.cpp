#include <gtest/gtest.h>

#include "support.hpp"

using namespace pnh;
namespace ts = testing_support;

TEST(Tietze, PreservesTheGroup) {
  for (const auto& c : ts::finite_group_corpus()) {
    Presentation p = parse_presentation(c.presentation);
    TietzeResult r = simplify(p);
    EXPECT_LE(r.presentation.total_length(), p.total_length()) << c.name;
    EXPECT_EQ(group_order(r.presentation), c.order) << c.name;
    EXPECT_EQ(abelian_invariants(r.presentation), abelian_invariants(p)) << c.name;
  }
}

TEST(Tietze, EliminatesRedundantGenerators) {
  Presentation p = parse_presentation("< a b c d | c = a b, d = c a, a^3, b^4, a b = b a >");
  TietzeResult r = simplify(p, {100000, {GenSym("a"), GenSym("b")}});
  EXPECT_EQ(r.presentation.generator_count(), 2u);
  EXPECT_EQ(group_order(r.presentation), 12u);
}

TEST(Tietze, ForwardMapSendsRelatorsToRelations) {
  for (const auto& c : ts::finite_group_corpus()) {
    Presentation p = parse_presentation(c.presentation);
    TietzeResult r = simplify(p);
    auto t = std::get<CosetTable>(todd_coxeter(r.presentation));
    for (const auto& rel : p.relators()) EXPECT_TRUE(holds_in(t, r.forward(rel))) << c.name;
  }
}

TEST(Tietze, ReplayReproducesResult) {
  for (const char* s : {"< a b c | c = a b, a^3, b^4, a b = b a >", "< r s t | t = r s, r^4, s^2, (s r)^2 >",
                        "< x y z w | z = x y x, w = z y, x^2, y^3, (x y)^5 >"}) {
    Presentation p = parse_presentation(s);
    auto [q, log] = tietze_simplify(p, 1000);
    EXPECT_EQ(replay(p, log).str(), q.str()) << s;
    EXPECT_FALSE(log.moves.empty());
  }
}

TEST(Tietze, KeepIsRespected) {
  Presentation p = parse_presentation("< a b | b = a^2, a^6 >");
  TietzeResult r = simplify(p, {100000, {GenSym("a"), GenSym("b")}});
  EXPECT_EQ(r.presentation.generator_count(), 2u);
  TietzeResult free = simplify(p);
  EXPECT_EQ(free.presentation.generator_count(), 1u);
}

TEST(Tietze, ZeroBudgetIsAnError) {
  EXPECT_THROW(tietze_simplify(parse_presentation("< a | a^2 >"), 0), Error);
}

TEST(Tietze, ShortensLongRelators) {
  // The second relator is a long consequence of the first.
  Presentation p = parse_presentation("< a b | a b a b' a' b', (a b a)^3 (b a b)^-3 a^5 >");
  TietzeResult r = simplify(p, {100000, {GenSym("a"), GenSym("b")}});
  EXPECT_LT(r.presentation.total_length(), p.total_length());
  EXPECT_EQ(abelian_invariants(r.presentation), abelian_invariants(p));
}
