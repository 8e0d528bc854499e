#pragma once

// Reidemeister-Schreier presentations for kernels of maps onto Z/n.
//
// For a transversal {t_0 = 1, ..., t_{n-1}} with t_r mapping to r, the
// Schreier generator for (r, x) is t_r x t_{r'}^-1 with r' = r + q(x). It is
// trivial exactly when that word freely reduces to the identity.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnh/presentation.hpp"

namespace pnh {

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class CyclicMap {
 public:
  CyclicMap() = default;

  // Throws InvalidMap unless every relator of p maps to 0 mod `modulus`.
  CyclicMap(const Presentation& p, unsigned modulus, const std::map<GenSym, long>& images)
      : alphabet_(p.alphabet()), modulus_(modulus), images_(p.generator_count(), 0) {
    if (modulus_ < 1) throw InvalidMap("modulus must be at least 1");
    for (const auto& [g, v] : images) {
      auto i = alphabet_->find(g);
      if (!i) throw UnknownSymbol("map image for unknown generator '" + g.token() + "'");
      images_[*i] = residue(v);
    }
    if (images.size() != alphabet_->size())
      for (std::size_t i = 0; i < alphabet_->size(); ++i)
        if (!images.count((*alphabet_)[i]))
          throw MissingImage("no image for generator '" + (*alphabet_)[i].token() + "'");
    for (const auto& r : p.relators())
      if (value(r) != 0) throw InvalidMap("relator " + r.str() + " does not map to 0");
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  unsigned modulus() const { return modulus_; }
  unsigned image(std::size_t gen) const { return images_.at(gen); }

  unsigned value(const Word& w) const {
    long s = 0;
    for (Letter l : w.letters()) s += is_inverse(l) ? -static_cast<long>(images_[gen_of(l)])
                                                    : static_cast<long>(images_[gen_of(l)]);
    return residue(s);
  }

  unsigned residue(long v) const {
    long m = static_cast<long>(modulus_);
    return static_cast<unsigned>(((v % m) + m) % m);
  }

 private:
  AlphabetPtr alphabet_;
  unsigned modulus_ = 1;
  std::vector<unsigned> images_;
};

struct Transversal {
  std::vector<Word> reps;  // reps[r] maps to r; reps[0] is the identity

  void validate(const CyclicMap& q) const {
    if (reps.size() != q.modulus())
      throw InvalidMap("transversal size differs from the modulus");
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (!reps[r].is_identity() && !same_alphabet(reps[r].alphabet(), q.alphabet()))
        throw AlphabetMismatch("transversal word over a foreign alphabet");
      if (q.value(reps[r]) != r)
        throw InvalidMap("transversal element " + std::to_string(r) + " maps to the wrong residue");
    }
    if (!reps.empty() && !reps[0].is_identity())
      throw InvalidMap("transversal must start with the identity");
  }

  // Prefix-closed transversal found breadth-first in alphabet order.
  static Transversal schreier(const CyclicMap& q) {
    const unsigned n = q.modulus();
    std::vector<std::optional<Word>> found(n);
    found[0] = Word(q.alphabet());
    std::vector<unsigned> frontier{0};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      unsigned r = frontier[i];
      for (std::size_t g = 0; g < q.alphabet()->size(); ++g)
        for (bool inv : {false, true}) {
          unsigned s = q.residue(static_cast<long>(r) + (inv ? -1L : 1L) * q.image(g));
          if (found[s]) continue;
          found[s] = *found[r] * Word::generator(q.alphabet(), g, inv);
          frontier.push_back(s);
        }
    }
    Transversal t;
    for (unsigned r = 0; r < n; ++r) {
      if (!found[r]) throw InvalidMap("cyclic map is not surjective");
      t.reps.push_back(*found[r]);
    }
    return t;
  }
};

struct SchreierGenSet {
  // gens[r][x]: index into `alphabet`, or nullopt for a trivial generator.
  std::vector<std::vector<std::optional<std::size_t>>> gens;
  AlphabetPtr alphabet;
  std::vector<Word> backmap;  // backmap[j] is over the parent alphabet

  Substitution backmap_substitution(const AlphabetPtr& parent) const {
    return Substitution(alphabet, parent, backmap);
  }
  const Word& backmap_of(const GenSym& g) const { return backmap.at(alphabet->index_of(g)); }
};

using SchreierNaming = std::function<GenSym(std::size_t coset, const GenSym& parent_gen)>;

// Default naming: the parent token indexed by the coset ("a" at 2 -> "a2").
inline GenSym default_schreier_name(std::size_t coset, const GenSym& g) {
  return GenSym(g.token(), static_cast<unsigned>(coset));
}

class SubgroupPresentation {
 public:
  Presentation presentation;
  SchreierGenSet generators;
  CyclicMap map;
  Transversal transversal;
  AlphabetPtr parent_alphabet;
  std::size_t raw_relator_count = 0;

  // Reidemeister rewriting of w, read from coset `start`.
  detail::Letters rewrite_letters(std::span<const Letter> w, unsigned start = 0) const {
    detail::Letters out;
    unsigned r = start;
    for (Letter l : w) {
      const std::size_t x = gen_of(l);
      if (!is_inverse(l)) {
        if (auto s = generators.gens[r][x]) out.push_back(make_letter(*s));
        r = map.residue(static_cast<long>(r) + map.image(x));
      } else {
        r = map.residue(static_cast<long>(r) - map.image(x));
        if (auto s = generators.gens[r][x]) out.push_back(make_letter(*s, true));
      }
    }
    detail::free_reduce(out);
    return out;
  }

  // Expresses a parent word lying in the kernel in the Schreier generators.
  Word rewrite(const Word& w) const {
    Word v = w.is_identity() ? Word(parent_alphabet) : w.rebind(parent_alphabet);
    if (map.value(v) != 0) throw InvalidMap("word " + w.str() + " is not in the kernel");
    return Word(generators.alphabet, rewrite_letters(v.letters(), 0));
  }
};

// Relators: the rewrites of t rho t^-1 for every relator rho and every
// transversal element t, plus the rewrites of the transversal words (trivial
// for a prefix-closed transversal).
inline SubgroupPresentation subgroup_presentation(const Presentation& p, const CyclicMap& q,
                                                  std::optional<Transversal> t = std::nullopt,
                                                  const SchreierNaming& naming = {}) {
  if (!same_alphabet(p.alphabet(), q.alphabet()))
    throw AlphabetMismatch("cyclic map is defined on a different alphabet");
  for (const auto& r : p.relators())
    if (q.value(r) != 0) throw InvalidMap("relator " + r.str() + " does not map to 0");
  if (!t) t = Transversal::schreier(q);
  t->validate(q);

  const unsigned n = q.modulus();
  const std::size_t g = p.generator_count();
  SubgroupPresentation out;
  out.map = q;
  out.transversal = *t;
  out.parent_alphabet = p.alphabet();
  out.generators.gens.assign(n, std::vector<std::optional<std::size_t>>(g));

  std::vector<GenSym> names;
  for (unsigned r = 0; r < n; ++r) {
    for (std::size_t x = 0; x < g; ++x) {
      unsigned s = q.residue(static_cast<long>(r) + q.image(x));
      Word w = t->reps[r] * Word::generator(p.alphabet(), x) * t->reps[s].inverse();
      if (w.is_identity()) continue;
      out.generators.gens[r][x] = names.size();
      names.push_back(naming ? naming(r, (*p.alphabet())[x]) : default_schreier_name(r, (*p.alphabet())[x]));
      out.generators.backmap.push_back(w);
    }
  }
  out.generators.alphabet = Alphabet::make(names);
  for (auto& w : out.generators.backmap) w = w.rebind(p.alphabet());

  Presentation sub(out.generators.alphabet);
  for (const auto& rep : t->reps) {
    sub.add(Word(out.generators.alphabet, out.rewrite_letters(rep.letters(), 0)));
    ++out.raw_relator_count;
  }
  for (unsigned r = 0; r < n; ++r)
    for (const auto& rel : p.relators()) {
      sub.add(Word(out.generators.alphabet, out.rewrite_letters(rel.letters(), r)));
      ++out.raw_relator_count;
    }
  out.presentation = std::move(sub);
  return out;
}

}  // namespace pnh
