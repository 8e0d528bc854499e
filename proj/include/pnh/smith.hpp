#pragma once

// Integer matrices, Smith normal form, and abelianization.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pnh/presentation.hpp"

namespace pnh {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Fraction-free (Bareiss) elimination.
  BigInt determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && m(r, k) == 0) ++r;
        if (r == n) return 0;
        m.swap_rows(k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// U * M * V = D, U and V unimodular, D diagonal with d1 | d2 | ... and di >= 0.
struct SmithForm {
  IntMatrix D, U, V;
  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  const std::size_t r = m.rows(), c = m.cols();

  // Smallest nonzero |entry| in the lower-right block starting at t.
  auto smallest = [&](std::size_t t, bool line_only) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (d(i, j) == 0) return;
      BigInt a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    };
    if (line_only) {
      for (std::size_t i = t; i < r; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < c; ++j) consider(t, j);
    } else {
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) consider(i, j);
    }
    return best;
  };
  auto move_to = [&](std::size_t t, std::pair<std::size_t, std::size_t> at) {
    d.swap_rows(t, at.first);
    s.U.swap_rows(t, at.first);
    d.swap_cols(t, at.second);
    s.V.swap_cols(t, at.second);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    auto piv = smallest(t, false);
    if (!piv) break;
    move_to(t, *piv);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_to(t, *smallest(t, true));
        continue;
      }
      // The pivot must divide the remaining block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r && !bad_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row(t, *bad_row, 1);
      s.U.add_row(t, *bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2
  std::size_t free_rank = 0;

  // Order of the group, or nullopt when infinite.
  std::optional<BigInt> order() const {
    if (free_rank) return std::nullopt;
    BigInt o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
  }

  std::vector<long> torsion_values() const {
    std::vector<long> v;
    for (const auto& t : torsion) v.push_back(t.convert_to<long>());
    return v;
  }

  // "Z4 x Z4", "Z^2 x Z6", "1".
  std::string str() const {
    std::string out;
    auto sep = [&] { if (!out.empty()) out += " x "; };
    if (free_rank) {
      sep();
      out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    for (const auto& t : torsion) {
      sep();
      out += "Z" + t.str();
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Rows are relators, columns generators, entries exponent sums.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (Letter l : p.relators()[i].letters()) m(i, gen_of(l)) += is_inverse(l) ? -1 : 1;
  return m;
}

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  auto snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const auto& x : snf.diagonal()) {
    if (x != 0) ++rank;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.free_rank = p.generator_count() - rank;
  return inv;
}

}  // namespace pnh
