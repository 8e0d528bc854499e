#pragma once

// Finitely presented groups.

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pnh/braid.hpp"
#include "pnh/word.hpp"

namespace pnh {

// Relators are kept freely and cyclically reduced; the identity is dropped and
// relators equal up to rotation or inversion are stored once (first kept).
class Presentation {
 public:
  Presentation() : alphabet_(Alphabet::make({})) {}

  explicit Presentation(AlphabetPtr alphabet, const std::vector<Word>& relators = {})
      : alphabet_(std::move(alphabet)) {
    for (const auto& r : relators) add(r);
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return alphabet_->size(); }
  std::size_t relator_count() const { return relators_.size(); }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators_) n += r.size();
    return n;
  }

  Word generator(std::size_t i) const { return Word::generator(alphabet_, i); }
  Word generator(const GenSym& g) const { return Word::generator(alphabet_, g); }
  Word identity() const { return Word(alphabet_); }

  // Returns false when w normalizes to the identity or duplicates a relator.
  bool add(const Word& w) {
    if (!w.is_identity() && !same_alphabet(w.alphabet(), alphabet_))
      throw AlphabetMismatch("relator over a foreign alphabet");
    detail::Letters ls = w.letter_vector();
    detail::cyclic_reduce(ls);
    if (ls.empty()) return false;
    if (!keys_.insert(detail::cyclic_key(ls)).second) return false;
    relators_.emplace_back(alphabet_, std::move(ls));
    return true;
  }

  // "< a b | a^4, b^4, a b a' b' >"
  std::string str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < alphabet_->size(); ++i) out += " " + (*alphabet_)[i].token();
    out += " |";
    for (std::size_t i = 0; i < relators_.size(); ++i)
      out += (i ? ", " : " ") + relators_[i].str();
    out += " >";
    return out;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
  std::unordered_set<detail::Letters, detail::LettersHash> keys_;
};

// Relator order is kept; normalization as in the constructor.
inline Presentation add_relators(const Presentation& p, const std::vector<Word>& ws) {
  Presentation out(p.alphabet(), p.relators());
  for (const auto& w : ws) {
    if (!w.is_identity() && !same_alphabet(w.alphabet(), p.alphabet()))
      throw UnknownSymbol("added relator uses symbols outside the presentation");
    out.add(w);
  }
  return out;
}

// Semidirect-product relators g^-1 d_i g ((d_i)beta)^-1 for every pair
// (g, beta) and every fiber generator d_i. The alphabet is the fiber followed
// by the base generators.
inline Presentation monodromy_relators(const AlphabetPtr& fiber,
                                       const std::vector<std::pair<GenSym, Braid>>& pairs) {
  std::vector<GenSym> base;
  for (const auto& [g, b] : pairs) {
    if (b.strands() != fiber->size())
      throw StrandMismatch("braid strand count differs from fiber size");
    base.push_back(g);
  }
  AlphabetPtr all = extend_alphabet(*fiber, base);
  Presentation p(all);
  for (const auto& [g, b] : pairs) {
    Word gw = Word::generator(all, g);
    auto images = b.images(fiber);
    for (std::size_t i = 0; i < fiber->size(); ++i) {
      Word d = Word::generator(all, i);
      p.add(gw.inverse() * d * gw * images[i].rebind(all).inverse());
    }
  }
  return p;
}

// The relators d_i^-1 (d_i)beta left when the base generators are killed.
inline std::vector<Word> stabilizer_relators(const AlphabetPtr& fiber,
                                             const std::vector<Braid>& braids) {
  Presentation collect(fiber);
  for (const auto& b : braids) {
    if (b.strands() != fiber->size())
      throw StrandMismatch("braid strand count differs from fiber size");
    auto images = b.images(fiber);
    for (std::size_t i = 0; i < fiber->size(); ++i)
      collect.add(Word::generator(fiber, i).inverse() * images[i]);
  }
  return collect.relators();
}

}  // namespace pnh
