#pragma once

// The orbifold fundamental group computation for the Persson-Noether-Horikawa
// surfaces, as data plus a driver:
//
//   pi'       <d1..d5, G | d_i = (d_i)beta, G d_i G^-1 = (d_i)beta1^2>
//   Z         kernel of pi' + {d_i^2, (d1..d5)^2} -> Z/2 (d_i -> 1, G -> 0),
//             transversal {1, d1}
//   X         kernel of Z + {G^m, s^m} -> Z/m (G, s -> 1), transversal {G^i}
//
// with m = k + 1. Consequences printed along the way form a regression corpus
// checked in the finite quotient P_k = pi' + {d_i^2, (d1..d5)^2, G^m, s^m}.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnh/coset_table.hpp"
#include "pnh/io/parse.hpp"
#include "pnh/schreier.hpp"
#include "pnh/smith.hpp"
#include "pnh/tietze.hpp"

namespace pnh {

inline AlphabetPtr fiber_alphabet() {
  static const AlphabetPtr a = Alphabet::indexed("d", 1, 5);
  return a;
}

inline AlphabetPtr pi_prime_alphabet() {
  static const AlphabetPtr a = extend_alphabet(*fiber_alphabet(), {GenSym("G")});
  return a;
}

// Keys: beta0, beta1, beta-1, beta+, beta-.
inline std::map<std::string, Braid> monodromy_braids() {
  auto s = [](unsigned i, int e) { return Braid::sigma(5, i, e); };
  const Braid b0 = s(4, 12) * s(2, 2);
  const Braid b1 = s(1, -1) * s(2, 1) * s(3, 1) * s(1, 1) * s(2, -1) * s(1, 1);
  const Braid bp = s(1, -2) * s(2, 1) * s(3, 1) * s(4, 1) * s(3, -1) * s(2, -1) * s(1, 2);
  const Braid c = s(4, -6) * s(2, -1);
  return {{"beta0", b0},
          {"beta1", b1},
          {"beta-1", c * b1 * c.inverse()},
          {"beta+", bp},
          {"beta-", c * bp * c.inverse()}};
}

// The six braids whose stabilizer relations enter pi', in order
// beta0, beta-, beta+, and their conjugates by beta1.
inline std::vector<Braid> pi_prime_braids() {
  auto b = monodromy_braids();
  const Braid& b1 = b.at("beta1");
  std::vector<Braid> out;
  for (const char* key : {"beta0", "beta-", "beta+"}) out.push_back(b.at(key));
  for (const char* key : {"beta0", "beta-", "beta+"}) out.push_back(b1 * b.at(key) * b1.inverse());
  return out;
}

// The 35 relators before normalization: d_i^-1 (d_i)beta for the six braids,
// then G d_i G^-1 ((d_i)beta1^2)^-1.
inline std::vector<Word> pi_prime_raw_relators() {
  const AlphabetPtr fib = fiber_alphabet(), all = pi_prime_alphabet();
  std::vector<Word> out;
  for (const auto& beta : pi_prime_braids()) {
    auto im = beta.images(fib);
    for (std::size_t i = 0; i < 5; ++i)
      out.push_back((Word::generator(fib, i).inverse() * im[i]).rebind(all));
  }
  auto sq = monodromy_braids().at("beta1").pow(2).images(fib);
  const Word g = Word::generator(all, GenSym("G"));
  for (std::size_t i = 0; i < 5; ++i)
    out.push_back(g * Word::generator(all, i) * g.inverse() * sq[i].rebind(all).inverse());
  return out;
}

inline Presentation pi_prime() { return Presentation(pi_prime_alphabet(), pi_prime_raw_relators()); }

// pi' + {d_i^2, (d1 d2 d3 d4 d5)^2}.
inline Presentation z2_parent() {
  const AlphabetPtr a = pi_prime_alphabet();
  std::vector<Word> extra;
  Word prod(a);
  for (std::size_t i = 0; i < 5; ++i) {
    extra.push_back(Word::generator(a, i).pow(2));
    prod *= Word::generator(a, i);
  }
  extra.push_back(prod.pow(2));
  return add_relators(pi_prime(), extra);
}

// Schreier generators for the transversal {1, d1}: (1,d1) -> D,
// (0,d_i) -> B_i, (1,d_i) -> A_i, (0,G) -> G, (1,G) -> s.
inline GenSym z2_name(std::size_t coset, const GenSym& g) {
  if (g.name == "G") return coset == 0 ? GenSym("G") : GenSym("s");
  if (coset == 1 && g.index == 1u) return GenSym("D");
  return GenSym(coset == 0 ? "B" : "A", g.index);
}

inline SubgroupPresentation z2_cover_presentation() {
  Presentation parent = z2_parent();
  const AlphabetPtr a = parent.alphabet();
  std::map<GenSym, long> images;
  for (std::size_t i = 0; i < a->size(); ++i) images[(*a)[i]] = (*a)[i].name == "d" ? 1 : 0;
  CyclicMap q(parent, 2, images);
  Transversal t{{Word(a), Word::generator(a, GenSym("d", 1u))}};
  return subgroup_presentation(parent, q, t, z2_name);
}

// Step-5 names: A2_i, A4_i, s_i, and H for G^m; anything else keeps the
// default (parent token indexed by coset).
inline SchreierNaming orbifold_naming(unsigned m) {
  return [m](std::size_t coset, const GenSym& g) {
    const auto i = static_cast<unsigned>(coset);
    if (g.name == "A" && (g.index == 2u || g.index == 4u)) return GenSym(g.token(), i);
    if (g.name == "s" && !g.index) return GenSym("s", i);
    if (g.name == "G" && !g.index && i + 1 == m) return GenSym("H");
    return default_schreier_name(coset, g);
  };
}

// Z/m map G, s -> 1, everything else -> 0, with transversal {G^i}.
inline std::pair<CyclicMap, Transversal> orbifold_map(const Presentation& z, unsigned m) {
  const AlphabetPtr a = z.alphabet();
  std::map<GenSym, long> images;
  for (const auto& g : a->symbols()) images[g] = (g == GenSym("G") || g == GenSym("s")) ? 1 : 0;
  CyclicMap q(z, m, images);
  Transversal t;
  const Word g = Word::generator(a, GenSym("G"));
  for (unsigned i = 0; i < m; ++i) t.reps.push_back(g.pow(i));
  return {q, t};
}

// The symbols A2_i, A4_i, s_i (0 <= i < m) and H.
inline AlphabetPtr orbifold_symbols(unsigned m) {
  std::vector<GenSym> s;
  for (unsigned i = 0; i < m; ++i) s.emplace_back("A2", i);
  for (unsigned i = 0; i < m; ++i) s.emplace_back("A4", i);
  for (unsigned i = 0; i < m; ++i) s.emplace_back("s", i);
  s.emplace_back("H");
  return Alphabet::make(std::move(s));
}

// All intermediate objects for one k.
struct PipelineStages {
  unsigned k = 1, m = 2;
  Presentation pi_prime;
  std::size_t pi_prime_raw = 0;
  SubgroupPresentation z;        // raw Step-4 kernel
  TietzeResult z_simple;         // keeps G, s, A2, A4
  Presentation x_parent;         // z_simple + {G^m, s^m}
  SubgroupPresentation x;        // raw Step-5 kernel
  TietzeResult x_simple;         // keeps A2_0, A4_0
  Presentation quotient;         // P_k over d1..d5, G
};

inline Presentation finite_quotient(unsigned m) {
  const AlphabetPtr a = pi_prime_alphabet();
  const Word g = Word::generator(a, GenSym("G"));
  const Word d1 = Word::generator(a, GenSym("d", 1u));
  Presentation raw = add_relators(z2_parent(), {g.pow(m), (d1 * g * d1.inverse()).pow(m)});
  // Shortening only: the generators stay, so words over d1..d5, G trace as is.
  return simplify(raw, {100000, a->symbols()}).presentation;
}

inline PipelineStages build_stages(unsigned k, std::size_t tietze_budget = 100000) {
  if (k < 1) throw Error("k must be at least 1");
  PipelineStages st;
  st.k = k;
  st.m = k + 1;
  st.pi_prime = pi_prime();
  st.pi_prime_raw = pi_prime_raw_relators().size();
  st.z = z2_cover_presentation();
  st.z_simple = simplify(st.z.presentation,
                         {tietze_budget, {GenSym("G"), GenSym("s"), GenSym("A", 2u), GenSym("A", 4u)}});
  const AlphabetPtr za = st.z_simple.presentation.alphabet();
  st.x_parent = add_relators(st.z_simple.presentation,
                             {Word::generator(za, GenSym("G")).pow(st.m),
                              Word::generator(za, GenSym("s")).pow(st.m)});
  auto [q, t] = orbifold_map(st.x_parent, st.m);
  st.x = subgroup_presentation(st.x_parent, q, t, orbifold_naming(st.m));
  st.x_simple = simplify(st.x.presentation, {tietze_budget, {GenSym("A2", 0u), GenSym("A4", 0u)}});
  st.quotient = finite_quotient(st.m);
  return st;
}

inline Presentation orbifold_presentation(unsigned k) { return build_stages(k).x_simple.presentation; }

// Step 5 with G^m and s^m imposed after rewriting: the kernel of Z -> Z/m
// plus H and s_0 s_1 ... s_{m-1}.
inline Presentation orbifold_presentation_after(const Presentation& z, unsigned m) {
  auto [q, t] = orbifold_map(z, m);
  SubgroupPresentation x = subgroup_presentation(z, q, t, orbifold_naming(m));
  const AlphabetPtr za = z.alphabet();
  const Word gm = Word::generator(za, GenSym("G")).pow(m);
  const Word sm = Word::generator(za, GenSym("s")).pow(m);
  return add_relators(x.presentation, {x.rewrite(gm), x.rewrite(sm)});
}

enum class Stage { PiPrime, Z2Cover, Orbifold };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::PiPrime: return "pi-prime";
    case Stage::Z2Cover: return "z2-cover";
    case Stage::Orbifold: return "orbifold";
  }
  return "?";
}

struct RegressionEntry {
  std::string id;
  Stage stage;
  std::string text;
  Word word;             // over the stage's symbol alphabet
  bool suspect = false;  // reported, never asserted
};

// Z/2-cover alphabet: B2..B5, G, D, A2..A5, s.
inline AlphabetPtr z2_alphabet() {
  static const AlphabetPtr a = z2_cover_presentation().generators.alphabet;
  return a;
}

namespace detail {

inline AlphabetPtr stage_alphabet(Stage s, unsigned m) {
  switch (s) {
    case Stage::PiPrime: return pi_prime_alphabet();
    case Stage::Z2Cover: return z2_alphabet();
    case Stage::Orbifold: return orbifold_symbols(m);
  }
  return {};
}

}  // namespace detail

// The relations displayed along the computation, for m = k + 1. Orbifold
// entries with an index i are expanded for i = 0..m-1 (indices mod m).
inline std::vector<RegressionEntry> regression_corpus(unsigned k) {
  if (k < 1) throw Error("k must be at least 1");
  const unsigned m = k + 1;
  std::vector<RegressionEntry> out;
  auto add = [&](Stage st, std::string id, const std::string& text, bool suspect = false) {
    Word w = parse_relator(text, detail::stage_alphabet(st, m));
    out.push_back({std::move(id), st, text, std::move(w), suspect});
  };

  const char* pi[] = {
      "(d4 d5)^6 = (d5 d4)^6",
      "d2 d3 = d3 d2",
      "d5 = d2' d1' d2 d1 d2",
      "d3' d1' d3 d1 d3 = (d4 d5)^-3 d5 (d4 d5)^3",
      "(d1 d2)^6 = (d2 d1)^6",
      "d5 d3 d5' d4' d5 d4 = d4' d5 d4 d5 d3 d5'",
      "d5 = d2' d1 d2 d4' d5 d3 d5' d4 d2' d1' d2",
      "d3' d1 d2 d1' d3 = (d4 d5)^-2 d5 (d4 d5)^2",
      "d3 (d4 d5)^-2 d5 (d4 d5)^2 d3' = (d1 d2)^-5 d2 (d1 d2)^5",
      "(d1 d2)^-5 d2 (d1 d2)^5 = d1 d2 d1'",
      "G d1 G' = G d2 G' d4' d2' d1 d2 d4 G d2' G'",
      "G d2 G' = d2' d1 d2 d3' d5 d3 d2' d1' d2",
      "G d3 G' = d4' d2' d1' d2 d4 d2' d1 d2 d3' d5' d3 d5 d3 d2' d1' d2 d4' d2' d1 d2 d4",
      "G d4 G' = d4' d2' d1' d2 d4 d2' d1 d2 d4",
      "G d5 G' = d5",
  };
  int n = 0;
  auto num = [&](const char* pre) {
    ++n;
    return std::string(pre) + (n < 10 ? "0" : "") + std::to_string(n);
  };
  for (const char* t : pi) add(Stage::PiPrime, num("pi-"), t);

  // Images under beta1^-1 that the computation relies on.
  {
    const AlphabetPtr fib = fiber_alphabet();
    const Braid inv = monodromy_braids().at("beta1").inverse();
    auto rel = [&](const std::string& arg, const std::string& rhs) {
      Word img = act(inv, parse_word(arg, fib), fib).rebind(pi_prime_alphabet());
      Word w = img * parse_word(rhs, pi_prime_alphabet()).inverse();
      out.push_back({num("pi-"), Stage::PiPrime, "(" + arg + ")beta1^-1 = " + rhs, w, false});
    };
    rel("d4 d5", "d1 d2");
    rel("d1 d3", "d1 d2 d3 d4 d5 d3' d2' d1'");
  }

  n = 0;
  const char* z2[] = {
      "D = 1",
      "B2 A2 = 1",
      "B3 A3 = 1",
      "B4 A4 = 1",
      "B5 A5 = 1",
      "A2 B3 A4 B5 B2 A3 B4 A5 = 1",
      "A2 A3' A4 A5' A2' A3 A4' A5 = 1",
      "B3 A2 = B2 A3",
      "B5 = B2^3",
      "B3^3 = (B5 A4)^6 B5",
      "A2^12 = 1",
      "B5 A3 B5 A4 B5 A4 = B4 A5 B4 A5 B3 A5",
      "B5 = B2^2 A4 B5 A3 B5 A4 B2^2",
      "B3 B2 B3 = (B5 A4)^4 B5",
      "s A2^2 G' = A4 B2^2 A4",
      "G B2 s' = B2^2 A3 B5 A3 B2^2",
      "G B3 s' = B4 A2^2 B4 A2^2 B3 A5 B3 A5 B3 A2^2 B4 A2^2 B4",
      "G B4 s' = B4 A2^2 B4 A2^2 B4",
      "G B5 s' = B5",
      "B4 A2 B4 = B5 A3 B5",
      "B2^4 = 1",
      "B5 = A2",
      "(A2 A4)^2 = A3 A2 B3^2",
      "B3 B2 = A2 A3",
      "B3 = B4 A2 B4",
      "A2 A4 = A4 A2",
      "A4^4 = 1",
      "A5 = A2'",
      "A3 = A2' A4^2",
      "A2^4 = 1",
      "s A2^2 G' = A2^2 A4^2",
      "G A2' = A2' s",
      "G A2 A4^2 = A2 A4^2 s",
      "G A4' = A4 s",
      "G A2 = A2 s",
  };
  for (const char* t : z2) add(Stage::Z2Cover, num("z2-"), t);
  add(Stage::Z2Cover, "z2-typo-printed", "(B4 A5)^6 = (B5 A4)^3", true);
  add(Stage::Z2Cover, "z2-typo-variant", "(B4 A5)^6 = (B5 A4)^6", true);

  n = 0;
  auto ix = [m](unsigned i) { return std::to_string(i % m); };
  for (unsigned i = 0; i < m; ++i) {
    const std::string a2 = "A2_" + ix(i), a4 = "A4_" + ix(i), s = "s" + ix(i);
    const std::string b2 = "A2_" + ix(i + 1), b4 = "A4_" + ix(i + 1);
    const std::string suffix = "-i" + std::to_string(i);
    auto addi = [&](const std::string& t) { add(Stage::Orbifold, num("x-") + suffix, t); };
    n = 0;
    addi(a2 + "^4 = 1");
    addi(a4 + "^4 = 1");
    addi(a2 + " " + a4 + " = " + a4 + " " + a2);
    addi(s + " " + b2 + "^2 = " + a2 + "^2 " + a4 + "^2");
    addi(b2 + "' = " + a2 + "' " + s);
    addi(b2 + " " + b4 + "^2 = " + a2 + " " + a4 + "^2 " + s);
    addi(b4 + "' = " + a4 + " " + s);
    addi(b2 + " = " + a2 + " " + s);
    addi(s + " = " + a2 + "^2 " + a4 + "^2 " + b2 + "^2");
    addi(s + " = " + a2 + " " + b2 + "'");
    addi(s + " = " + a4 + "^2 " + a2 + "' " + b2 + " " + b4 + "^2");
    addi(s + " = " + a2 + "' " + a4 + "^2 " + b4 + "^2 " + b2);
    addi(s + " = " + a4 + "' " + b4 + "'");
    addi(s + " = " + a2 + "' " + b2);
    addi(a2 + "^2 = A2_0^2");
    addi(s + " = " + a4 + "^2");
    addi(a4 + " = A4_0");
    addi("A4_0^2 = " + a2 + "' " + b2);
    addi("A4_0^2 = " + a2 + " " + b2 + "'");
    addi(a2 + (i % 2 == 0 ? " = A2_0" : " = A2_0 A4_0^2"));
  }
  n = 0;
  {
    std::string prod;
    for (unsigned i = 0; i < m; ++i) prod += "s" + std::to_string(i) + " ";
    add(Stage::Orbifold, num("x-"), prod + "= 1");
    add(Stage::Orbifold, num("x-"), "A4_0^" + std::to_string(2 * m) + " = 1");
    if (m % 2 == 1) add(Stage::Orbifold, num("x-"), "A4_0^2 = 1");
    add(Stage::Orbifold, num("x-"), "H = 1");
  }
  return out;
}

struct RegressionResult {
  std::string id;
  Stage stage;
  std::string text;
  bool suspect = false;
  bool holds = false;
  // Orbifold entries only: the verdict obtained by rewriting into the
  // simplified presentation and tracing in its table.
  std::optional<bool> holds_final;
};

// Word of the finite quotient P_k representing w.
inline Word lift_to_quotient(const PipelineStages& st, const RegressionEntry& e) {
  switch (e.stage) {
    case Stage::PiPrime:
      return e.word.rebind(st.quotient.alphabet());
    case Stage::Z2Cover:
      return st.z.generators.backmap_substitution(st.z.parent_alphabet)(
          e.word.rebind(st.z.generators.alphabet));
    case Stage::Orbifold: {
      Word zw = st.x.generators.backmap_substitution(st.x.parent_alphabet)(
          e.word.rebind(st.x.generators.alphabet));
      Word v = zw.is_identity() ? Word(st.z.generators.alphabet) : zw.rebind(st.z.generators.alphabet);
      return st.z.generators.backmap_substitution(st.z.parent_alphabet)(v);
    }
  }
  return {};
}

inline std::vector<RegressionResult> check_regressions(const PipelineStages& st,
                                                       const CosetTable& quotient_table,
                                                       const CosetTable& final_table) {
  std::vector<RegressionResult> out;
  for (const auto& e : regression_corpus(st.k)) {
    RegressionResult r{e.id, e.stage, e.text, e.suspect, false, std::nullopt};
    Word w = lift_to_quotient(st, e);
    r.holds = holds_in(quotient_table, w.is_identity() ? Word(st.quotient.alphabet()) : w.rebind(st.quotient.alphabet()));
    if (e.stage == Stage::Orbifold) {
      Word raw = e.word.rebind(st.x.generators.alphabet);
      r.holds_final = holds_in(final_table, st.x_simple.forward(raw));
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct StageSummary {
  std::string stage;
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t total_length = 0;
};

inline StageSummary summarize(std::string name, const Presentation& p) {
  return {std::move(name), p.generator_count(), p.relator_count(), p.total_length()};
}

struct PipelineReport {
  unsigned k = 1, m = 2;
  std::vector<StageSummary> stages;
  Presentation final_presentation;
  std::optional<std::size_t> order;           // nullopt on coset overflow
  std::optional<std::size_t> quotient_order;  // order of P_k
  AbelianInvariants invariants;
  bool abelian = false;
  std::vector<RegressionResult> regressions;
  double seconds = 0;

  bool regressions_hold() const {
    for (const auto& r : regressions)
      if (!r.suspect && (!r.holds || r.holds_final.value_or(true) == false)) return false;
    return true;
  }

  // Final group abelian, finite, of order equal to the invariant product,
  // |P_k| = 2m |X|, and every non-suspect regression holds.
  bool ok() const {
    if (!order || !abelian) return false;
    auto inv = invariants.order();
    if (!inv || *inv != *order) return false;
    if (!quotient_order || *quotient_order != 2 * m * *order) return false;
    return regressions_hold();
  }
};

inline PipelineReport run(unsigned k, std::size_t max_cosets = kDefaultMaxCosets) {
  const auto t0 = std::chrono::steady_clock::now();
  PipelineStages st = build_stages(k);
  PipelineReport rep;
  rep.k = st.k;
  rep.m = st.m;
  rep.stages = {summarize("pi-prime", st.pi_prime),
                summarize("z2-parent", z2_parent()),
                summarize("z2-cover-raw", st.z.presentation),
                summarize("z2-cover", st.z_simple.presentation),
                summarize("orbifold-parent", st.x_parent),
                summarize("orbifold-raw", st.x.presentation),
                summarize("orbifold", st.x_simple.presentation)};
  rep.final_presentation = st.x_simple.presentation;
  rep.invariants = abelian_invariants(rep.final_presentation);

  auto fin = todd_coxeter(rep.final_presentation, max_cosets);
  auto quo = todd_coxeter(st.quotient, max_cosets);
  if (auto* t = std::get_if<CosetTable>(&fin)) {
    rep.order = t->size();
    rep.abelian = is_abelian(*t);
  }
  if (auto* t = std::get_if<CosetTable>(&quo)) rep.quotient_order = t->size();
  if (rep.order && rep.quotient_order)
    rep.regressions = check_regressions(st, std::get<CosetTable>(quo), std::get<CosetTable>(fin));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pnh
