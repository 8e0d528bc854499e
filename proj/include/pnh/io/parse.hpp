#pragma once

// Text syntax for words, braids and presentations (see docs/grammar.md).
//
//   d2' d1' d2 d1 d2        juxtaposition, ' for inverse
//   (d4 d5)^-3 d5 s4^12     parentheses and integer powers
//   u = v                   the relator u v^-1
//   < a b | a^4, b^4, a b = b a >
//
// An identifier that is not a generator token is split greedily into the
// longest known tokens, so "d4d5" reads as d4 d5.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pnh/braid.hpp"
#include "pnh/presentation.hpp"

namespace pnh {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void set_alphabet(AlphabetPtr a) { alphabet_ = std::move(a); }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_space() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected an identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  long integer() {
    skip_space();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return neg ? -v : v;
  }

  Letters lookup(const std::string& id, std::size_t at) {
    if (auto i = alphabet_->find_token(id)) return {make_letter(*i)};
    Letters out;
    std::size_t p = 0;
    while (p < id.size()) {
      std::size_t len = id.size() - p;
      for (; len > 0; --len)
        if (auto i = alphabet_->find_token(std::string_view(id).substr(p, len))) {
          out.push_back(make_letter(*i));
          break;
        }
      if (len == 0) {
        pos_ = at;
        fail("unknown generator '" + id + "'");
      }
      p += len;
    }
    return out;
  }

  bool word_start() {
    char c = peek();
    return ident_start(c) || c == '(' || c == '1';
  }

  Letters atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Letters w = word();
      expect(')');
      return w;
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < s_.size() && ident_char(s_[pos_])) fail("unexpected digits");
      return {};
    }
    std::size_t at = pos_;
    return lookup(identifier(), at);
  }

  Letters factor() {
    Letters base = atom();
    for (;;) {
      if (pos_ < s_.size() && s_[pos_] == '\'') {
        ++pos_;
        base = inverse_letters(base);
      } else if (peek() == '^') {
        ++pos_;
        base = power_letters(base, integer());
      } else {
        return base;
      }
    }
  }

  Letters word() {
    Letters w;
    if (!word_start()) fail("expected a word");
    while (word_start()) {
      Letters f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    free_reduce(w);
    return w;
  }

  // u or u = v (as u v^-1).
  Letters relator() {
    Letters u = word();
    if (peek() == '=') {
      ++pos_;
      Letters v = word();
      Letters vi = inverse_letters(v);
      u.insert(u.end(), vi.begin(), vi.end());
      free_reduce(u);
    }
    return u;
  }

  Presentation presentation() {
    expect('<');
    std::vector<GenSym> gens;
    while (ident_start(peek())) gens.emplace_back(identifier());
    try {
      alphabet_ = Alphabet::make(gens);
    } catch (const Error& e) {
      fail(e.what());
    }
    expect('|');
    Presentation p(alphabet_);
    if (peek() != '>') {
      p.add(Word(alphabet_, relator()));
      while (peek() == ',') {
        ++pos_;
        p.add(Word(alphabet_, relator()));
      }
    }
    expect('>');
    return p;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  AlphabetPtr alphabet_;
};

}  // namespace detail

inline Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  detail::Parser p(text);
  p.set_alphabet(alphabet);
  auto w = p.at_end() ? detail::Letters{} : p.word();
  p.finish();
  return Word(alphabet, std::move(w));
}

// "u = v" gives u v^-1; a bare word is returned as is.
inline Word parse_relator(std::string_view text, const AlphabetPtr& alphabet) {
  detail::Parser p(text);
  p.set_alphabet(alphabet);
  auto w = p.relator();
  p.finish();
  return Word(alphabet, std::move(w));
}

inline Presentation parse_presentation(std::string_view text) {
  detail::Parser p(text);
  Presentation pres = p.presentation();
  p.finish();
  return pres;
}

// Braid words over s1 .. s(n-1).
inline Braid parse_braid(std::string_view text, unsigned strands) {
  if (strands < 2) throw Error("a braid needs at least two strands");
  AlphabetPtr sig = Alphabet::indexed("s", 1, strands - 1);
  Word w = parse_word(text, sig);
  std::vector<BraidLetter> ls;
  for (Letter l : w.letters())
    ls.push_back(BraidLetter{static_cast<unsigned>(gen_of(l) + 1), is_inverse(l) ? -1 : 1});
  return Braid(strands, std::move(ls));
}

}  // namespace pnh
