#pragma once

// Tietze simplification of presentations.
//
// Moves, repeated until none applies or the budget is spent:
//  1. shorten a relator r by a relator s with |s| <= |r| when r contains a
//     cyclic subword of s or s^-1 longer than |s|/2, until none applies;
//  2. eliminate a generator occurring exactly once in some relator (shortest
//     relator first, ties by alphabet order) provided the total relator
//     length stays within that of the input;
//  3. drop identity relators and duplicates up to rotation and inversion.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pnh/presentation.hpp"

namespace pnh {

enum class TietzeMoveKind { AddRelator, RemoveRelator, AddGenerator, EliminateGenerator };

inline const char* to_string(TietzeMoveKind k) {
  switch (k) {
    case TietzeMoveKind::AddRelator: return "add-relator";
    case TietzeMoveKind::RemoveRelator: return "remove-relator";
    case TietzeMoveKind::AddGenerator: return "add-generator";
    case TietzeMoveKind::EliminateGenerator: return "eliminate-generator";
  }
  return "?";
}

// Payload words are over the source alphabet (extended by any added
// generators). For generator moves `word` is the generator's value.
struct TietzeMove {
  TietzeMoveKind kind;
  std::optional<GenSym> generator;
  Word word;
};

struct TietzeLog {
  std::vector<TietzeMove> moves;
};

struct SimplifyOptions {
  std::size_t budget = 100000;
  std::vector<GenSym> keep;  // never eliminated
};

struct TietzeResult {
  Presentation presentation;
  TietzeLog log;
  Substitution forward;  // source generators -> words in the result
};

namespace detail {

class TietzeSimplifier {
 public:
  TietzeSimplifier(const Presentation& p, const SimplifyOptions& opt)
      : alphabet_(p.alphabet()), budget_(opt.budget), eliminated_(p.generator_count(), false),
        keep_(p.generator_count(), false), length_cap_(p.total_length()) {
    for (const auto& r : p.relators()) rels_.push_back(r.letter_vector());
    for (const auto& g : opt.keep)
      if (auto i = alphabet_->find(g)) keep_[*i] = true;
    for (std::size_t g = 0; g < p.generator_count(); ++g) image_.push_back({make_letter(g)});
  }

  TietzeResult run() {
    normalize();
    while (budget_ > 0) {
      if (shorten_pass()) {
        normalize();
        continue;
      }
      if (eliminate_one()) {
        --budget_;
        normalize();
        continue;
      }
      break;
    }
    return finish();
  }

 private:
  // Rotations of a relator and its inverse, indexed by the hash of their
  // first h = |s|/2 + 1 letters.
  struct RotationIndex {
    std::array<Letters, 2> forms;
    std::size_t h = 0;
    std::unordered_multimap<std::uint64_t, std::pair<int, std::size_t>> starts;
  };

  static constexpr std::uint64_t kBase = 1000003ull;
  static std::uint64_t code(Letter l) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(l) + (1ll << 31));
  }
  static std::uint64_t power(std::size_t e) {
    std::uint64_t p = 1;
    for (std::size_t k = 0; k < e; ++k) p *= kBase;
    return p;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& r : rels_) t += r.size();
    return t;
  }

  void normalize() {
    std::unordered_set<Letters, LettersHash> seen;
    std::vector<Letters> out;
    for (auto& r : rels_) {
      free_reduce(r);
      cyclic_reduce(r);
      if (r.empty()) continue;
      if (!seen.insert(cyclic_key(r)).second) continue;
      out.push_back(std::move(r));
    }
    rels_ = std::move(out);
    index_.assign(rels_.size(), std::nullopt);
  }

  static Letters substitute(const Letters& w, std::size_t g, const Letters& value) {
    Letters out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (gen_of(l) != g) {
        out.push_back(l);
      } else if (!is_inverse(l)) {
        out.insert(out.end(), value.begin(), value.end());
      } else {
        for (auto it = value.rbegin(); it != value.rend(); ++it) out.push_back(-*it);
      }
    }
    free_reduce(out);
    return out;
  }

  // Eliminations may lengthen relators, but the total never exceeds that of
  // the input presentation.
  bool eliminate_one() {
    std::vector<std::size_t> order(rels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rels_[a].size() < rels_[b].size(); });
    const std::size_t cap = std::max(total(), length_cap_);
    for (std::size_t ri : order) {
      const Letters& r = rels_[ri];
      std::vector<std::size_t> count(alphabet_->size(), 0);
      for (Letter l : r) ++count[gen_of(l)];
      for (std::size_t g = 0; g < alphabet_->size(); ++g) {
        if (count[g] != 1 || keep_[g]) continue;
        // Rotate so that g^e leads: g^e rest = 1.
        std::size_t pos = 0;
        while (gen_of(r[pos]) != g) ++pos;
        Letters rest;
        for (std::size_t k = 1; k < r.size(); ++k) rest.push_back(r[(pos + k) % r.size()]);
        Letters value = is_inverse(r[pos]) ? rest : inverse_letters(rest);

        std::vector<Letters> next;
        std::size_t after = 0;
        for (std::size_t k = 0; k < rels_.size() && after <= cap; ++k) {
          if (k == ri) continue;
          next.push_back(substitute(rels_[k], g, value));
          cyclic_reduce(next.back());
          after += next.back().size();
        }
        if (after > cap) continue;
        log_.moves.push_back({TietzeMoveKind::EliminateGenerator, (*alphabet_)[g],
                              Word(alphabet_, value)});
        for (auto& im : image_) im = substitute(im, g, value);
        eliminated_[g] = true;
        rels_ = std::move(next);
        return true;
      }
    }
    return false;
  }

  const RotationIndex& index_of(std::size_t si) {
    auto& slot = index_[si];
    if (slot) return *slot;
    const Letters& s = rels_[si];
    RotationIndex ix;
    const std::size_t n = s.size();
    ix.h = n / 2 + 1;
    ix.forms = {s, inverse_letters(s)};
    const std::uint64_t top = power(ix.h - 1);
    for (int f = 0; f < 2; ++f) {
      const Letters& w = ix.forms[static_cast<std::size_t>(f)];
      std::uint64_t hv = 0;
      for (std::size_t k = 0; k < ix.h; ++k) hv = hv * kBase + code(w[k % n]);
      for (std::size_t i = 0; i < n; ++i) {
        ix.starts.emplace(hv, std::make_pair(f, i));
        hv = (hv - code(w[i]) * top) * kBase + code(w[(i + ix.h) % n]);
      }
    }
    slot = std::move(ix);
    return *slot;
  }

  // One sweep over all relators, longest first; each is shortened until no
  // shorter relator applies. Returns whether anything changed.
  bool shorten_pass() {
    std::vector<std::size_t> order(rels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rels_[a].size() > rels_[b].size(); });
    bool changed = false;
    for (std::size_t ri : order) {
      for (bool progress = true; progress && budget_ > 0;) {
        progress = false;
        for (std::size_t si = 0; si < rels_.size(); ++si) {
          if (si == ri || rels_[si].empty() || rels_[ri].empty()) continue;
          if (rels_[si].size() > rels_[ri].size()) continue;
          if (try_shorten(ri, si)) {
            --budget_;
            changed = progress = true;
            break;
          }
        }
      }
    }
    return changed;
  }

  // Longest match at r[i..], reading r cyclically up to `limit` letters.
  static void best_match(const RotationIndex& ix, std::uint64_t hv, const Letters& r, std::size_t i,
                         std::size_t limit, std::size_t& len_out, std::size_t& start_out, int& form_out) {
    const std::size_t n = ix.forms[0].size(), L = r.size();
    len_out = 0;
    auto range = ix.starts.equal_range(hv);
    for (auto it = range.first; it != range.second; ++it) {
      const auto [f, st] = it->second;
      const Letters& w = ix.forms[static_cast<std::size_t>(f)];
      std::size_t len = 0;
      const std::size_t cap = std::min(n, limit);
      while (len < cap && r[(i + len) % L] == w[(st + len) % n]) ++len;
      if (len >= ix.h && len > len_out) {
        len_out = len;
        start_out = st;
        form_out = f;
      }
    }
  }

  // q^-1 where p q is the matched rotation and |p| = len.
  static void emit_complement(const RotationIndex& ix, int form, std::size_t start, std::size_t len,
                              Letters& out) {
    const Letters& w = ix.forms[static_cast<std::size_t>(form)];
    const std::size_t n = w.size();
    for (std::size_t k = n; k > len; --k) out.push_back(-w[(start + k - 1) % n]);
  }

  void replace(std::size_t ri, Letters replaced) {
    free_reduce(replaced);
    cyclic_reduce(replaced);
    Word old_word(alphabet_, rels_[ri]);
    if (!replaced.empty())
      log_.moves.push_back({TietzeMoveKind::AddRelator, std::nullopt, Word(alphabet_, replaced)});
    log_.moves.push_back({TietzeMoveKind::RemoveRelator, std::nullopt, old_word});
    rels_[ri] = std::move(replaced);
    index_[ri].reset();
  }

  // Replaces every non-overlapping occurrence (left to right) of a piece of
  // s longer than |s|/2; if none lies inside r, tries the best piece that
  // wraps around the end of r.
  bool try_shorten(std::size_t ri, std::size_t si) {
    const RotationIndex& ix = index_of(si);
    const Letters& r = rels_[ri];
    const std::size_t L = r.size(), h = ix.h;
    if (h > L) return false;
    const std::uint64_t top = power(h);

    std::vector<std::uint64_t> prefix(L + 1, 0);
    for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = prefix[i] * kBase + code(r[i]);

    Letters out;
    bool any = false;
    std::size_t len = 0, start = 0;
    int form = 0;
    for (std::size_t i = 0; i < L;) {
      if (i + h <= L) {
        best_match(ix, prefix[i + h] - prefix[i] * top, r, i, L - i, len, start, form);
        if (len) {
          emit_complement(ix, form, start, len, out);
          i += len;
          any = true;
          continue;
        }
      }
      out.push_back(r[i++]);
    }
    if (any) {
      replace(ri, std::move(out));
      return true;
    }

    // Windows starting in the last h - 1 positions wrap around.
    std::size_t best_len = 0, best_at = 0, best_start = 0;
    int best_form = 0;
    for (std::size_t i = L - h + 1; i < L; ++i) {
      std::uint64_t hv = 0;
      for (std::size_t k = 0; k < h; ++k) hv = hv * kBase + code(r[(i + k) % L]);
      best_match(ix, hv, r, i, L, len, start, form);
      if (len > best_len) {
        best_len = len;
        best_at = i;
        best_start = start;
        best_form = form;
      }
    }
    if (best_len == 0) return false;
    Letters replaced;
    emit_complement(ix, best_form, best_start, best_len, replaced);
    for (std::size_t k = best_len; k < L; ++k) replaced.push_back(r[(best_at + k) % L]);
    replace(ri, std::move(replaced));
    return true;
  }

  TietzeResult finish() {
    std::vector<GenSym> survivors;
    for (std::size_t g = 0; g < alphabet_->size(); ++g)
      if (!eliminated_[g]) survivors.push_back((*alphabet_)[g]);
    AlphabetPtr out = Alphabet::make(survivors);
    // Source index -> result index for survivors.
    std::vector<std::size_t> remap(alphabet_->size(), 0);
    for (std::size_t g = 0, j = 0; g < alphabet_->size(); ++g)
      if (!eliminated_[g]) remap[g] = j++;
    auto move = [&](const Letters& w) {
      Letters o;
      o.reserve(w.size());
      for (Letter l : w) o.push_back(make_letter(remap[gen_of(l)], is_inverse(l)));
      return Word(out, std::move(o));
    };
    Presentation p(out);
    for (const auto& r : rels_) p.add(move(r));
    std::vector<Word> images;
    for (const auto& im : image_) images.push_back(move(im));
    return TietzeResult{std::move(p), std::move(log_), Substitution(alphabet_, out, std::move(images))};
  }

  AlphabetPtr alphabet_;
  std::size_t budget_;
  std::vector<bool> eliminated_;
  std::vector<bool> keep_;
  std::size_t length_cap_;
  std::vector<Letters> rels_;
  std::vector<std::optional<RotationIndex>> index_;
  std::vector<Letters> image_;
  TietzeLog log_;
};

}  // namespace detail

inline TietzeResult simplify(const Presentation& p, const SimplifyOptions& opt = {}) {
  return detail::TietzeSimplifier(p, opt).run();
}

inline std::pair<Presentation, TietzeLog> tietze_simplify(const Presentation& p, std::size_t budget) {
  if (budget == 0) throw Error("Tietze budget must be positive");
  auto r = simplify(p, SimplifyOptions{budget, {}});
  return {std::move(r.presentation), std::move(r.log)};
}

// Applies a log to its source presentation.
inline Presentation replay(const Presentation& source, const TietzeLog& log) {
  AlphabetPtr alpha = source.alphabet();
  std::vector<Word> rels = source.relators();
  std::vector<GenSym> gone;
  for (const auto& m : log.moves) {
    switch (m.kind) {
      case TietzeMoveKind::AddRelator:
        rels.push_back(m.word.rebind(alpha));
        break;
      case TietzeMoveKind::RemoveRelator: {
        detail::Letters key = detail::cyclic_key(m.word.rebind(alpha).letter_vector());
        auto it = std::find_if(rels.begin(), rels.end(), [&](const Word& w) {
          detail::Letters c = w.letter_vector();
          detail::cyclic_reduce(c);
          return detail::cyclic_key(c) == key;
        });
        if (it == rels.end()) throw Error("replay: relator to remove is absent");
        rels.erase(it);
        break;
      }
      case TietzeMoveKind::AddGenerator: {
        alpha = extend_alphabet(*alpha, {*m.generator});
        for (auto& w : rels) w = w.rebind(alpha);
        rels.push_back(Word::generator(alpha, *m.generator).inverse() * m.word.rebind(alpha));
        break;
      }
      case TietzeMoveKind::EliminateGenerator: {
        std::map<GenSym, Word> images;
        for (const auto& g : alpha->symbols()) images[g] = Word::generator(alpha, g);
        images[*m.generator] = m.word.rebind(alpha);
        for (auto& w : rels) w = substitute(w, images).rebind(alpha);
        gone.push_back(*m.generator);
        break;
      }
    }
  }
  std::vector<GenSym> survivors;
  for (const auto& g : alpha->symbols())
    if (std::find(gone.begin(), gone.end(), g) == gone.end()) survivors.push_back(g);
  AlphabetPtr out = Alphabet::make(survivors);
  Presentation p(out);
  for (const auto& w : rels) p.add(w.is_identity() ? Word(out) : w.rebind(out));
  return p;
}

}  // namespace pnh
