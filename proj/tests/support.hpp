#pragma once

// Helpers shared by the test programs: random words and braids, and a
// brute-force permutation-group oracle.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pnh/pnh.hpp"

namespace testing_support {

inline pnh::Word random_word(std::mt19937& rng, const pnh::AlphabetPtr& a, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, a->size() - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<pnh::Letter> ls;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) ls.push_back(pnh::make_letter(gen(rng), inv(rng)));
  return pnh::Word(a, std::move(ls));
}

inline pnh::Braid random_braid(std::mt19937& rng, unsigned strands, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<unsigned> gen(1, strands - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<pnh::BraidLetter> ls;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) ls.push_back({gen(rng), inv(rng) ? -1 : 1});
  return pnh::Braid(strands, std::move(ls));
}

using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {  // first p, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline Perm cycle(std::size_t n, std::vector<int> c) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

// Evaluates w on permutation images of the generators.
inline Perm evaluate(const pnh::Word& w, const std::vector<Perm>& gens) {
  Perm r(gens.at(0).size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
  for (pnh::Letter l : w.letters()) {
    const Perm& g = gens.at(pnh::gen_of(l));
    r = compose(r, pnh::is_inverse(l) ? invert(g) : g);
  }
  return r;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Size of the group generated, by breadth-first closure.
inline std::size_t closure_size(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens.at(0).size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Perm q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

struct FiniteGroupCase {
  std::string name;
  std::string presentation;
  std::vector<Perm> perms;  // faithful images of the generators
  std::size_t order;
};

// Left multiplication by i and j on the quaternion group, elements
// 1, i, j, k, -1, -i, -j, -k numbered 0..7.
inline std::vector<Perm> quaternion_perms() {
  // Unit products: table[a][b] for a, b in {1,i,j,k}, sign then unit.
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left = [&](int u) {
    Perm p(8);
    for (int e = 0; e < 8; ++e) {
      int eu = e % 4, es = e < 4 ? 1 : -1;
      int s = es * sign[u][eu];
      p[static_cast<std::size_t>(e)] = unit[u][eu] + (s > 0 ? 0 : 4);
    }
    return p;
  };
  return {left(1), left(2)};
}

inline Perm dihedral_reflection(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>((n - i) % n);
  return p;
}

inline std::vector<FiniteGroupCase> finite_group_corpus() {
  std::vector<int> c5{0, 1, 2, 3, 4}, c6{0, 1, 2, 3, 4, 5};
  return {
      {"trivial", "< a | a >", {cycle(1, {})}, 1},
      {"Z5", "< a | a^5 >", {cycle(5, c5)}, 5},
      {"Z6 on two generators", "< a b | a^2, b^3, a b = b a >", {cycle(5, {0, 1}), cycle(5, {2, 3, 4})}, 6},
      {"Klein four", "< a b | a^2, b^2, (a b)^2 >", {cycle(4, {0, 1}), cycle(4, {2, 3})}, 4},
      {"Z2 x Z4", "< a b | a^2, b^4, a b a' b' >", {cycle(6, {0, 1}), cycle(6, {2, 3, 4, 5})}, 8},
      {"Z3 x Z3", "< a b | a^3, b^3, a b = b a >", {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}, 9},
      {"S3", "< a b | a^2, b^3, (a b)^2 >", {cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, 6},
      {"D4", "< r s | r^4, s^2, (s r)^2 >", {cycle(4, {0, 1, 2, 3}), dihedral_reflection(4)}, 8},
      {"D5", "< r s | r^5, s^2, s r s = r' >", {cycle(5, c5), dihedral_reflection(5)}, 10},
      {"D6", "< r s | r^6, s^2, (r s)^2 >", {cycle(6, c6), dihedral_reflection(6)}, 12},
      {"Q8", "< i j | i^4, i^2 = j^2, j' i j = i' >", quaternion_perms(), 8},
      {"A4", "< a b | a^2, b^3, (a b)^3 >", {compose(cycle(4, {0, 1}), cycle(4, {2, 3})), cycle(4, {0, 1, 2})}, 12},
      {"S4", "< a b | a^2, b^3, (a b)^4 >", {cycle(4, {0, 1}), cycle(4, {1, 2, 3})}, 24},
      {"Z12 via redundant generators", "< a b c | a^3, b^4, c = a b, a b = b a >",
       {cycle(7, {0, 1, 2}), cycle(7, {3, 4, 5, 6}), compose(cycle(7, {0, 1, 2}), cycle(7, {3, 4, 5, 6}))}, 12},
  };
}

}  // namespace testing_support
