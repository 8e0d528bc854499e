#pragma once

// Sylvester resultants and the discriminant of a cubic.
//
// Sign convention: the Sylvester matrix has deg g shifted rows of f's
// coefficients on top, then deg f rows of g's coefficients.

#include <unordered_map>
#include <vector>

#include "pnh/curves/poly.hpp"

namespace pnh {

// a0 t^3 + a1 t^2 + a2 t + a3.
template <class R>
R cubic_discriminant(const R& a0, const R& a1, const R& a2, const R& a3) {
  R c4(4), c27(27), c18(18);
  return a1 * a1 * a2 * a2 - c4 * a0 * a2 * a2 * a2 - c4 * a1 * a1 * a1 * a3 - c27 * a0 * a0 * a3 * a3 +
         c18 * a0 * a1 * a2 * a3;
}

namespace detail {

template <class R>
class LaplaceDeterminant {
 public:
  explicit LaplaceDeterminant(const std::vector<std::vector<R>>& m) : m_(m), n_(m.size()) {
    if (n_ > 24) throw Error("matrix too large for cofactor expansion");
  }

  R run() { return minor(0, (1u << n_) - 1); }

 private:
  // Rows row.. against the columns in mask.
  R minor(std::size_t row, unsigned mask) {
    if (row == n_) return R(1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    R sum(0);
    int sign = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!(mask & (1u << c))) continue;
      const R& e = m_[row][c];
      if (!(e == R(0))) {
        R t = e * minor(row + 1, mask & ~(1u << c));
        sum = sign > 0 ? sum + t : sum - t;
      }
      sign = -sign;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

  const std::vector<std::vector<R>>& m_;
  std::size_t n_;
  std::unordered_map<unsigned, R> memo_;
};

}  // namespace detail

template <class R>
R determinant(const std::vector<std::vector<R>>& m) {
  if (m.empty()) return R(1);
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("determinant of a non-square matrix");
  return detail::LaplaceDeterminant<R>(m).run();
}

// f and g as coefficient lists, leading coefficient first.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g) {
  if (f.size() < 2 || g.size() < 2) throw Error("resultant needs positive degrees");
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[j];
  return s;
}

template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g) {
  if (!f.empty() && !g.empty() && f.front() == R(0) && g.front() == R(0))
    throw Error("both leading coefficients vanish");
  return determinant(sylvester_matrix(f, g));
}

// Resultant of f and g with respect to variable v.
inline Poly resultant(const Poly& f, const Poly& g, int v) {
  return sylvester_resultant(f.coefficients_in(v), g.coefficients_in(v));
}

template <class F>
F resultant(const UPoly<F>& f, const UPoly<F>& g) {
  std::vector<F> a(f.coefficients().rbegin(), f.coefficients().rend());
  std::vector<F> b(g.coefficients().rbegin(), g.coefficients().rend());
  return sylvester_resultant(a, b);
}

inline HomogPoly hessian(const HomogPoly& f) {
  if (f.degree() < 2) throw Error("hessian needs degree at least 2");
  std::vector<std::vector<Poly>> h(3, std::vector<Poly>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.poly().partial(i).partial(j);
  Poly d = determinant(h);
  if (d.is_zero()) throw Error("hessian vanishes identically");
  return HomogPoly(d);
}

// True iff the restriction of curve to line vanishes to order >= 2 at p.
inline bool is_tangent_at(const HomogPoly& curve, const HomogPoly& line, const ProjPoint& p) {
  if (line.degree() != 1) throw Error("expected a line");
  if (!evaluate(line, p).is_zero()) throw Error("point " + p.str() + " is not on the line " + line.str());
  if (!evaluate(curve, p).is_zero()) throw Error("point " + p.str() + " is not on the curve");
  const QuadScalar l0 = line.poly().coefficient({1, 0, 0}), l1 = line.poly().coefficient({0, 1, 0}),
                   l2 = line.poly().coefficient({0, 0, 1});
  // A second point q on the line, so the line is p + t q.
  const std::array<std::array<QuadScalar, 3>, 3> cand{{{l1, -l0, QuadScalar(0)},
                                                       {l2, QuadScalar(0), -l0},
                                                       {QuadScalar(0), l2, -l1}}};
  for (const auto& c : cand) {
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    ProjPoint q(c[0], c[1], c[2]);
    if (q == p) continue;
    auto grad = gradient(curve, p);
    return (grad[0] * c[0] + grad[1] * c[1] + grad[2] * c[2]).is_zero();
  }
  throw Error("degenerate line");
}

}  // namespace pnh
