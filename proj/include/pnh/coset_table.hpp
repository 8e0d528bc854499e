#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT or Felsch
// strategy, union-find coincidence processing) and queries on the finished
// table.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pnh/presentation.hpp"

namespace pnh {

// A complete coset table. Cosets are numbered 0..size()-1, coset 0 being the
// subgroup; column 2g is generator g and column 2g+1 its inverse. Numbering is
// standardized (breadth-first from coset 0 in column order).
class CosetTable {
 public:
  CosetTable(AlphabetPtr alphabet, std::size_t cosets, std::vector<std::uint32_t> entries)
      : alphabet_(std::move(alphabet)), cosets_(cosets), entries_(std::move(entries)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return cosets_; }
  std::size_t columns() const { return 2 * alphabet_->size(); }
  bool complete() const { return true; }

  static std::size_t column(Letter l) { return 2 * gen_of(l) + (is_inverse(l) ? 1 : 0); }

  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return entries_[coset * columns() + column(l)];
  }

  std::uint32_t trace(std::uint32_t coset, std::span<const Letter> w) const {
    for (Letter l : w) coset = act(coset, l);
    return coset;
  }

  const std::vector<std::uint32_t>& entries() const { return entries_; }

 private:
  AlphabetPtr alphabet_;
  std::size_t cosets_;
  std::vector<std::uint32_t> entries_;
};

struct Overflow {
  std::size_t cosets_defined;
  std::size_t limit;
};

using Enumeration = std::variant<CosetTable, Overflow>;

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Hlt: scan every relator from each coset in turn, defining as needed.
// Felsch: define cosets in order and close every deduction against all
// cyclic conjugates of the relators; slower per coset, far fewer cosets.
enum class Strategy { Hlt, Felsch };

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t limit)
      : ncols_(2 * p.generator_count()), limit_(limit), conj_(2 * p.generator_count()) {
    for (const auto& r : p.relators()) {
      std::vector<std::uint32_t> cols;
      for (Letter l : r.letters()) cols.push_back(static_cast<std::uint32_t>(CosetTable::column(l)));
      rels_.push_back(std::move(cols));
    }
  }

  bool run_felsch() {
    if (limit_ < 1) return overflow();
    // Cyclic conjugates of relators and their inverses, by leading column.
    for (const auto& r : rels_) {
      std::vector<std::uint32_t> inv(r.rbegin(), r.rend());
      for (auto& c : inv) c ^= 1;
      for (const std::vector<std::uint32_t>* w : {&r, static_cast<const std::vector<std::uint32_t>*>(&inv)})
        for (std::size_t i = 0; i < w->size(); ++i) {
          std::vector<std::uint32_t> rot(w->begin() + static_cast<std::ptrdiff_t>(i), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(i));
          auto& bucket = conj_[rot[0]];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
        }
    }
    felsch_ = true;
    new_coset();
    // A relator-free presentation is still closed coset by coset.
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t c = 0; c < ncols_; ++c) {
        if (!alive(a)) break;
        if (at(a, c) >= 0) continue;
        if (!define(static_cast<std::int32_t>(a), c)) return false;
        deductions_.push_back({static_cast<std::int32_t>(a), c});
        process_deductions();
      }
    }
    return true;
  }

  // Returns false on overflow.
  bool run() {
    if (limit_ < 1) return overflow();
    new_coset();
    for (std::size_t a = 0; a < n_; ++a) {
      if (!alive(a)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(static_cast<std::int32_t>(a), r);
        if (overflow_) return false;
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      for (std::size_t c = 0; c < ncols_; ++c) {
        if (at(a, c) < 0 && !define(static_cast<std::int32_t>(a), c)) return false;
      }
    }
    return true;
  }

  std::size_t defined() const { return n_; }

  CosetTable table(const AlphabetPtr& alphabet) const {
    std::vector<std::int64_t> renum(n_, -1);
    std::vector<std::uint32_t> order;
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t c = 0; c < ncols_; ++c) {
        auto d = static_cast<std::size_t>(rep(at(order[i], c)));
        if (renum[d] < 0) {
          renum[d] = static_cast<std::int64_t>(order.size());
          order.push_back(static_cast<std::uint32_t>(d));
        }
      }
    }
    std::vector<std::uint32_t> out(order.size() * ncols_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t c = 0; c < ncols_; ++c)
        out[i * ncols_ + c] =
            static_cast<std::uint32_t>(renum[static_cast<std::size_t>(rep(at(order[i], c)))]);
    return CosetTable(alphabet, order.size(), std::move(out));
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * ncols_ + col]; }
  std::int32_t at(std::size_t c, std::size_t col) const { return table_[c * ncols_ + col]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  bool overflow() {
    overflow_ = true;
    return false;
  }

  std::int32_t new_coset() {
    auto d = static_cast<std::int32_t>(n_++);
    table_.resize(n_ * ncols_, -1);
    parent_.push_back(d);
    return d;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(a))) continue;
      std::int32_t b = at(static_cast<std::size_t>(a), x);
      if (b < 0) continue;
      for (const auto& w : conj_[x]) {
        scan(a, w);
        if (!alive(static_cast<std::size_t>(a))) break;
      }
      b = rep_compress(b);
      if (!alive(static_cast<std::size_t>(b))) continue;
      for (const auto& w : conj_[x ^ 1]) {
        scan(b, w);
        if (!alive(static_cast<std::size_t>(b))) break;
      }
    }
  }

  // Scan without defining; a gap of one yields a deduction.
  void scan(std::int32_t a, const std::vector<std::uint32_t>& w) {
    std::int32_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) >= 0) {
      f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
      ++i;
    }
    if (i > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j >= i && at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
      b = at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1);
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) = b;
      at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(i)] ^ 1) = f;
      deductions_.push_back({f, w[static_cast<std::size_t>(i)]});
    }
  }

  bool define(std::int32_t c, std::size_t col) {
    if (n_ >= limit_) return overflow();
    std::int32_t d = new_coset();
    at(static_cast<std::size_t>(c), col) = d;
    at(static_cast<std::size_t>(d), col ^ 1) = c;
    return true;
  }

  std::int32_t rep(std::int32_t c) const {
    while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
    return c;
  }

  std::int32_t rep_compress(std::int32_t c) {
    std::int32_t r = rep(c);
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep_compress(a);
    b = rep_compress(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto g = static_cast<std::size_t>(queue[i]);
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int32_t d = at(g, x);
        if (d < 0) continue;
        at(static_cast<std::size_t>(d), x ^ 1) = -1;
        auto mu = static_cast<std::size_t>(rep_compress(static_cast<std::int32_t>(g)));
        auto nu = static_cast<std::size_t>(rep_compress(d));
        if (at(mu, x) >= 0)
          merge(static_cast<std::int32_t>(nu), at(mu, x), queue);
        else if (at(nu, x ^ 1) >= 0)
          merge(static_cast<std::int32_t>(mu), at(nu, x ^ 1), queue);
        else {
          at(mu, x) = static_cast<std::int32_t>(nu);
          at(nu, x ^ 1) = static_cast<std::int32_t>(mu);
          if (felsch_) deductions_.push_back({static_cast<std::int32_t>(mu), x});
        }
      }
    }
  }

  void scan_and_fill(std::int32_t a, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::int32_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) >= 0) {
        f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j >= i && at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
        b = at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) = b;
        at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return;
    }
  }

  std::size_t ncols_;
  std::size_t limit_;
  std::vector<std::vector<std::uint32_t>> rels_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::size_t n_ = 0;
  bool overflow_ = false;
  bool felsch_ = false;
  std::vector<std::vector<std::vector<std::uint32_t>>> conj_;
  std::vector<std::pair<std::int32_t, std::size_t>> deductions_;
};

}  // namespace detail

inline Enumeration todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                               Strategy strategy = Strategy::Hlt) {
  detail::CosetEnumerator e(p, max_cosets);
  if (!(strategy == Strategy::Hlt ? e.run() : e.run_felsch())) return Overflow{e.defined(), max_cosets};
  return e.table(p.alphabet());
}

// The order of the presented group, or nullopt on overflow.
inline std::optional<std::size_t> group_order(const Presentation& p,
                                              std::size_t max_cosets = kDefaultMaxCosets,
                                              Strategy strategy = Strategy::Hlt) {
  auto e = todd_coxeter(p, max_cosets, strategy);
  if (auto* t = std::get_if<CosetTable>(&e)) return t->size();
  return std::nullopt;
}

inline bool holds_in(const CosetTable& t, const Word& w) {
  if (w.is_identity()) return true;
  Word v = w.rebind(t.alphabet());
  for (std::uint32_t c = 0; c < t.size(); ++c)
    if (t.trace(c, v.letters()) != c) return false;
  return true;
}

inline bool is_abelian(const CosetTable& t) {
  const std::size_t g = t.alphabet()->size();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a + 1; b < g; ++b)
      for (std::uint32_t c = 0; c < t.size(); ++c) {
        auto ab = t.act(t.act(c, make_letter(a)), make_letter(b));
        auto ba = t.act(t.act(c, make_letter(b)), make_letter(a));
        if (ab != ba) return false;
      }
  return true;
}

}  // namespace pnh
