#pragma once

// Artin braid groups and their right action on free groups.
//
// sigma_k acts on the free group <d_1, ..., d_n> by
//   (d_h)sigma_k     = d_h                        h != k, k+1
//   (d_k)sigma_k     = d_{k+1}
//   (d_{k+1})sigma_k = d_{k+1}^-1 d_k d_{k+1}
// and sigma_k^-1 by the inverse substitution
//   (d_k)sigma_k^-1     = d_k d_{k+1} d_k^-1
//   (d_{k+1})sigma_k^-1 = d_k.
// Braid words act letter by letter from the left: (w)(b1 b2) = ((w)b1)b2.

#include <cstdlib>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "pnh/word.hpp"

namespace pnh {

class StrandMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

struct BraidLetter {
  unsigned gen;  // 1 .. strands-1
  int sign;      // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class Braid {
 public:
  explicit Braid(unsigned strands, std::vector<BraidLetter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2) throw Error("a braid needs at least two strands");
    for (const auto& l : letters_) {
      if (l.gen < 1 || l.gen >= strands_)
        throw IndexOutOfRange("braid generator s" + std::to_string(l.gen) +
                              " out of range for " + std::to_string(strands_) + " strands");
      if (l.sign != 1 && l.sign != -1) throw Error("braid letter sign must be +1 or -1");
    }
  }

  static Braid identity(unsigned strands) { return Braid(strands); }

  // sigma_i^e, written out as |e| letters.
  static Braid sigma(unsigned strands, unsigned i, int e = 1) {
    std::vector<BraidLetter> ls(static_cast<std::size_t>(std::abs(e)), BraidLetter{i, e < 0 ? -1 : 1});
    return Braid(strands, std::move(ls));
  }

  unsigned strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  Braid inverse() const {
    std::vector<BraidLetter> r(letters_.rbegin(), letters_.rend());
    for (auto& l : r) l.sign = -l.sign;
    return Braid(strands_, std::move(r));
  }

  Braid pow(int n) const {
    Braid base = n < 0 ? inverse() : *this;
    std::vector<BraidLetter> r;
    for (int i = 0; i < std::abs(n); ++i)
      r.insert(r.end(), base.letters_.begin(), base.letters_.end());
    return Braid(strands_, std::move(r));
  }

  friend Braid operator*(const Braid& a, const Braid& b) {
    if (a.strands_ != b.strands_) throw StrandMismatch("braids have different strand counts");
    std::vector<BraidLetter> r = a.letters_;
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return Braid(a.strands_, std::move(r));
  }

  // Images (d_i)b of the fiber generators, in fiber order.
  std::vector<Word> images(const AlphabetPtr& fiber) const {
    check_fiber(fiber);
    std::vector<detail::Letters> im(strands_);
    for (unsigned i = 0; i < strands_; ++i) im[i] = {make_letter(i)};
    for (const auto& l : letters_)
      for (auto& w : im) w = apply_letter(w, l);
    std::vector<Word> out;
    out.reserve(strands_);
    for (auto& w : im) out.emplace_back(fiber, std::move(w));
    return out;
  }

  Substitution automorphism(const AlphabetPtr& fiber) const {
    return Substitution(fiber, fiber, images(fiber));
  }

  // "s1' s2 s4^12"; "1" for the empty braid.
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      std::size_t run = j - i;
      if (!out.empty()) out += ' ';
      out += "s" + std::to_string(letters_[i].gen);
      if (letters_[i].sign < 0)
        out += run == 1 ? std::string("'") : "^-" + std::to_string(run);
      else if (run > 1)
        out += "^" + std::to_string(run);
      i = j;
    }
    return out;
  }

  friend bool operator==(const Braid&, const Braid&) = default;

 private:
  void check_fiber(const AlphabetPtr& fiber) const {
    if (!fiber || fiber->size() != strands_)
      throw StrandMismatch("fiber alphabet size " + std::to_string(fiber ? fiber->size() : 0) +
                           " does not match " + std::to_string(strands_) + " strands");
  }

  // Substitutes the images of one generator letter into w.
  static detail::Letters apply_letter(const detail::Letters& w, BraidLetter bl) {
    const std::size_t k = bl.gen - 1;  // d_k is fiber index k (0-based)
    const Letter dk = make_letter(k), dk1 = make_letter(k + 1);
    detail::Letters out;
    out.reserve(w.size() + 4);
    auto emit = [&](std::initializer_list<Letter> ls, bool inv) {
      if (!inv) {
        out.insert(out.end(), ls.begin(), ls.end());
      } else {
        for (auto it = std::rbegin(ls); it != std::rend(ls); ++it) out.push_back(-*it);
      }
    };
    for (Letter l : w) {
      const std::size_t g = gen_of(l);
      const bool inv = is_inverse(l);
      if (g == k) {
        if (bl.sign > 0)
          emit({dk1}, inv);
        else
          emit({dk, dk1, -dk}, inv);
      } else if (g == k + 1) {
        if (bl.sign > 0)
          emit({-dk1, dk, dk1}, inv);
        else
          emit({dk}, inv);
      } else {
        out.push_back(l);
      }
    }
    detail::free_reduce(out);
    return out;
  }

  unsigned strands_;
  std::vector<BraidLetter> letters_;
};

inline Braid compose(const Braid& b1, const Braid& b2) { return b1 * b2; }
inline Braid braid_invert(const Braid& b) { return b.inverse(); }

inline Word act(const Braid& b, const Word& w, const AlphabetPtr& fiber) {
  if (!fiber || fiber->size() != b.strands())
    throw StrandMismatch("fiber alphabet size does not match strand count");
  if (!w.is_identity() && !same_alphabet(w.alphabet(), fiber))
    throw AlphabetMismatch("word is not over the fiber alphabet");
  return b.automorphism(fiber)(w.is_identity() ? Word(fiber) : w);
}

}  // namespace pnh
