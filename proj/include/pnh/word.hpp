#pragma once

// Free-group words over a named, ordered alphabet.
//
// A word is stored as a sequence of signed letters: generator i (0-based)
// is the letter i + 1 and its inverse is -(i + 1). Every Word is kept
// freely reduced.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pnh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class MissingImage : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

struct GenSym {
  std::string name;
  std::optional<unsigned> index;

  GenSym() = default;
  GenSym(std::string n, std::optional<unsigned> i = std::nullopt)
      : name(std::move(n)), index(i) {
    if (name.empty()) throw Error("generator name must be non-empty");
  }
  GenSym(const char* n, std::optional<unsigned> i = std::nullopt)
      : GenSym(std::string(n), i) {}

  // ("d", 1) -> "d1"; a name ending in a digit gets an underscore:
  // ("A2", 3) -> "A2_3".
  std::string token() const {
    if (!index) return name;
    if (std::isdigit(static_cast<unsigned char>(name.back())))
      return name + "_" + std::to_string(*index);
    return name + std::to_string(*index);
  }

  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<GenSym> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto [it, fresh] = by_token_.emplace(symbols_[i].token(), i);
      if (!fresh)
        throw Error("duplicate generator '" + symbols_[i].token() + "' in alphabet");
    }
  }

  static AlphabetPtr make(std::vector<GenSym> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
  }

  // name_first .. name_last, e.g. indexed("d", 1, 5) = d1 d2 d3 d4 d5.
  static AlphabetPtr indexed(const std::string& name, unsigned first, unsigned last) {
    std::vector<GenSym> s;
    for (unsigned i = first; i <= last; ++i) s.emplace_back(name, i);
    return make(std::move(s));
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const GenSym& operator[](std::size_t i) const { return symbols_.at(i); }
  const std::vector<GenSym>& symbols() const { return symbols_; }

  std::optional<std::size_t> find(const GenSym& g) const { return find_token(g.token()); }

  std::optional<std::size_t> find_token(std::string_view token) const {
    auto it = by_token_.find(std::string(token));
    if (it == by_token_.end()) return std::nullopt;
    // Tokens are unique, but a token match must also be a symbol match.
    return it->second;
  }

  std::size_t index_of(const GenSym& g) const {
    auto i = find(g);
    if (!i || symbols_[*i] != g)
      throw UnknownSymbol("generator '" + g.token() + "' is not in the alphabet");
    return *i;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<GenSym> symbols_;
  std::unordered_map<std::string, std::size_t> by_token_;
};

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Appends the symbols of `extra` not already present in `base`.
inline AlphabetPtr extend_alphabet(const Alphabet& base, const std::vector<GenSym>& extra) {
  std::vector<GenSym> s = base.symbols();
  for (const auto& g : extra)
    if (std::find(s.begin(), s.end(), g) == s.end()) s.push_back(g);
  return Alphabet::make(std::move(s));
}

using Letter = std::int32_t;

constexpr Letter make_letter(std::size_t gen, bool inverse = false) {
  auto l = static_cast<Letter>(gen + 1);
  return inverse ? -l : l;
}
constexpr std::size_t gen_of(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }
constexpr bool is_inverse(Letter l) { return l < 0; }

namespace detail {

using Letters = std::vector<Letter>;

// Stack-based free reduction, in place.
inline void free_reduce(Letters& w) {
  std::size_t top = 0;
  for (Letter l : w) {
    if (top > 0 && w[top - 1] == -l)
      --top;
    else
      w[top++] = l;
  }
  w.resize(top);
}

inline Letters inverse_letters(std::span<const Letter> w) {
  Letters r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline Letters concat(std::span<const Letter> u, std::span<const Letter> v) {
  Letters r;
  r.reserve(u.size() + v.size());
  r.insert(r.end(), u.begin(), u.end());
  r.insert(r.end(), v.begin(), v.end());
  free_reduce(r);
  return r;
}

// Assumes w freely reduced. Strips matching ends.
inline void cyclic_reduce(Letters& w) {
  std::size_t b = 0, e = w.size();
  while (e - b >= 2 && w[b] == -w[e - 1]) {
    ++b;
    --e;
  }
  if (b > 0) w = Letters(w.begin() + static_cast<std::ptrdiff_t>(b),
                         w.begin() + static_cast<std::ptrdiff_t>(e));
}

// Lexicographically least rotation (Booth's algorithm).
inline Letters least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = at(j);
    long i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  Letters r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = at(k + i);
  return r;
}

// Canonical representative of the cyclic word class of w up to inversion.
// w must be cyclically reduced.
inline Letters cyclic_key(std::span<const Letter> w) {
  Letters a = least_rotation(w);
  Letters b = least_rotation(inverse_letters(w));
  return std::min(a, b);
}

inline Letters power_letters(std::span<const Letter> w, long n) {
  Letters base = n < 0 ? inverse_letters(w) : Letters(w.begin(), w.end());
  Letters r;
  for (long i = 0; i < std::labs(n); ++i) r.insert(r.end(), base.begin(), base.end());
  free_reduce(r);
  return r;
}

struct LettersHash {
  std::size_t operator()(const Letters& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

class Word {
 public:
  // The identity with no alphabet attached; it combines with any word.
  Word() = default;

  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  Word(AlphabetPtr alphabet, detail::Letters raw)
      : alphabet_(std::move(alphabet)), letters_(std::move(raw)) {
    for (Letter l : letters_) {
      if (l == 0 || !alphabet_ || gen_of(l) >= alphabet_->size())
        throw Error("letter out of range for alphabet");
    }
    detail::free_reduce(letters_);
  }

  static Word generator(AlphabetPtr a, std::size_t i, bool inverse = false) {
    return Word(std::move(a), {make_letter(i, inverse)});
  }
  static Word generator(AlphabetPtr a, const GenSym& g, bool inverse = false) {
    auto i = a->index_of(g);
    return generator(std::move(a), i, inverse);
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  const detail::Letters& letter_vector() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const { return Word(alphabet_, detail::inverse_letters(letters_), Reduced{}); }

  Word pow(long n) const { return Word(alphabet_, detail::power_letters(letters_, n), Reduced{}); }

  long exponent_sum(std::size_t gen) const {
    long s = 0;
    for (Letter l : letters_)
      if (gen_of(l) == gen) s += is_inverse(l) ? -1 : 1;
    return s;
  }

  // Rebinds to another alphabet containing every symbol used here.
  Word rebind(const AlphabetPtr& target) const {
    if (same_alphabet(alphabet_, target)) return Word(target, letters_, Reduced{});
    detail::Letters out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
      auto j = target->index_of((*alphabet_)[gen_of(l)]);
      out.push_back(make_letter(j, is_inverse(l)));
    }
    return Word(target, std::move(out), Reduced{});
  }

  friend Word operator*(const Word& u, const Word& v) {
    AlphabetPtr a = common(u, v);
    return Word(std::move(a), detail::concat(u.letters_, v.letters_), Reduced{});
  }

  Word& operator*=(const Word& v) { return *this = *this * v; }

  friend bool operator==(const Word& u, const Word& v) {
    if (u.letters_ != v.letters_) return false;
    if (u.letters_.empty()) return true;
    return same_alphabet(u.alphabet_, v.alphabet_);
  }

  // Juxtaposition with runs compressed: "d2' d1' d2 d1 d2", "s4^12", "1".
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      std::size_t run = j - i;
      if (!out.empty()) out += ' ';
      out += (*alphabet_)[gen_of(letters_[i])].token();
      if (is_inverse(letters_[i]))
        out += run == 1 ? std::string("'") : "^-" + std::to_string(run);
      else if (run > 1)
        out += "^" + std::to_string(run);
      i = j;
    }
    return out;
  }

 private:
  struct Reduced {};
  Word(AlphabetPtr a, detail::Letters reduced, Reduced)
      : alphabet_(std::move(a)), letters_(std::move(reduced)) {}

  static AlphabetPtr common(const Word& u, const Word& v) {
    if (!u.alphabet_) return v.alphabet_;
    if (!v.alphabet_) return u.alphabet_;
    if (!same_alphabet(u.alphabet_, v.alphabet_))
      throw AlphabetMismatch("words are over different alphabets");
    return u.alphabet_;
  }

  AlphabetPtr alphabet_;
  detail::Letters letters_;
};

// Free reduction of a raw (symbol, sign) sequence.
inline Word reduce(const AlphabetPtr& alphabet,
                   const std::vector<std::pair<GenSym, int>>& raw) {
  detail::Letters ls;
  ls.reserve(raw.size());
  for (const auto& [g, sign] : raw) {
    if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
    ls.push_back(make_letter(alphabet->index_of(g), sign < 0));
  }
  return Word(alphabet, std::move(ls));
}

inline Word multiply(const Word& u, const Word& v) { return u * v; }
inline Word invert(const Word& w) { return w.inverse(); }

// A homomorphism from the free group on `source` to the free group on
// `target`, given by the images of the source generators.
class Substitution {
 public:
  Substitution() = default;
  Substitution(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size())
      throw MissingImage("substitution needs one image per source generator");
    for (auto& w : images_) {
      if (!w.is_identity() && !same_alphabet(w.alphabet(), target_))
        throw AlphabetMismatch("substitution image over a foreign alphabet");
      w = w.rebind(target_);
    }
  }

  static Substitution identity(const AlphabetPtr& a) {
    std::vector<Word> im;
    for (std::size_t i = 0; i < a->size(); ++i) im.push_back(Word::generator(a, i));
    return Substitution(a, a, std::move(im));
  }

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Word& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Word>& images() const { return images_; }

  detail::Letters apply_letters(std::span<const Letter> w) const {
    detail::Letters out;
    for (Letter l : w) {
      const auto& im = images_[gen_of(l)].letter_vector();
      if (is_inverse(l))
        for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
      else
        out.insert(out.end(), im.begin(), im.end());
    }
    detail::free_reduce(out);
    return out;
  }

  Word operator()(const Word& w) const {
    if (!w.is_identity() && !same_alphabet(w.alphabet(), source_))
      throw AlphabetMismatch("word is not over the substitution's source alphabet");
    return Word(target_, apply_letters(w.letters()));
  }

  // (this then next): w -> next(this(w)).
  Substitution then(const Substitution& next) const {
    if (!same_alphabet(target_, next.source_))
      throw AlphabetMismatch("cannot compose substitutions");
    std::vector<Word> im;
    for (const auto& w : images_) im.push_back(next(w));
    return Substitution(source_, next.target_, std::move(im));
  }

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
};

// Applies the homomorphism g -> images[g] to w. Every generator occurring in
// w needs an image; all images must share one alphabet.
inline Word substitute(const Word& w, const std::map<GenSym, Word>& images) {
  AlphabetPtr target;
  for (const auto& [g, im] : images) {
    if (!im.alphabet()) continue;
    if (!target)
      target = im.alphabet();
    else if (!same_alphabet(target, im.alphabet()))
      throw AlphabetMismatch("substitution images use different alphabets");
  }
  detail::Letters out;
  for (Letter l : w.letters()) {
    const GenSym& g = (*w.alphabet())[gen_of(l)];
    auto it = images.find(g);
    if (it == images.end()) throw MissingImage("no image for generator '" + g.token() + "'");
    const auto& im = it->second.letter_vector();
    if (is_inverse(l))
      for (auto r = im.rbegin(); r != im.rend(); ++r) out.push_back(-*r);
    else
      out.insert(out.end(), im.begin(), im.end());
  }
  if (out.empty()) return Word(target);
  return Word(target, std::move(out));
}

}  // namespace pnh
