#pragma once

// Polynomials over QuadScalar in x, y, z; homogeneous forms and projective
// points on top of them; dense univariate polynomials over a field.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "pnh/curves/quad_scalar.hpp"

namespace pnh {

using Monomial = std::array<int, 3>;  // exponents of x, y, z

class Poly {
 public:
  Poly() = default;
  Poly(const QuadScalar& c) {
    if (!c.is_zero()) terms_[{0, 0, 0}] = c;
  }
  Poly(long c) : Poly(QuadScalar(c)) {}

  static Poly var(int i) {
    if (i < 0 || i > 2) throw Error("variable index out of range");
    Poly p;
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(i)] = 1;
    p.terms_[m] = QuadScalar(1);
    return p;
  }
  static Poly x() { return var(0); }
  static Poly y() { return var(1); }
  static Poly z() { return var(2); }
  static Poly term(const QuadScalar& c, Monomial m) {
    Poly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  const std::map<Monomial, QuadScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QuadScalar coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QuadScalar(0) : it->second;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
  }

  int degree_in(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(v)]);
    return d;
  }

  bool is_homogeneous() const {
    const int d = degree();
    for (const auto& [m, c] : terms_)
      if (m[0] + m[1] + m[2] != d) return false;
    return true;
  }

  // Coefficient of v^k, as a polynomial free of v.
  Poly coeff_in(int v, int k) const {
    Poly out;
    for (const auto& [m, c] : terms_)
      if (m[static_cast<std::size_t>(v)] == k) {
        Monomial n = m;
        n[static_cast<std::size_t>(v)] = 0;
        out.terms_[n] = c;
      }
    return out;
  }

  // Coefficients in v, leading first.
  std::vector<Poly> coefficients_in(int v) const {
    std::vector<Poly> out;
    for (int k = degree_in(v); k >= 0; --k) out.push_back(coeff_in(v, k));
    return out;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_)
        r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    return r;
  }
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  Poly pow(unsigned n) const {
    Poly r(1), base = *this;
    for (; n; n >>= 1) {
      if (n & 1) r *= base;
      base *= base;
    }
    return r;
  }

  friend bool operator==(const Poly& p, const Poly& q) { return (p - q).terms_.empty(); }

  Poly partial(int v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      const int e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      Monomial n = m;
      --n[static_cast<std::size_t>(v)];
      r.add_term(n, c * QuadScalar(static_cast<long>(e)));
    }
    return r;
  }

  QuadScalar evaluate(const std::array<QuadScalar, 3>& at) const {
    QuadScalar s(0);
    for (const auto& [m, c] : terms_)
      s += c * at[0].pow(static_cast<unsigned>(m[0])) * at[1].pow(static_cast<unsigned>(m[1])) *
           at[2].pow(static_cast<unsigned>(m[2]));
    return s;
  }

  // Substitutes x, y, z by the given polynomials.
  Poly compose(const std::array<Poly, 3>& images) const {
    Poly r;
    for (const auto& [m, c] : terms_)
      r += Poly(c) * images[0].pow(static_cast<unsigned>(m[0])) * images[1].pow(static_cast<unsigned>(m[1])) *
           images[2].pow(static_cast<unsigned>(m[2]));
    return r;
  }

  // Substitutes variable v by a constant.
  Poly specialize(int v, const QuadScalar& value) const {
    std::array<Poly, 3> im{x(), y(), z()};
    im[static_cast<std::size_t>(v)] = Poly(value);
    return compose(im);
  }

  // Terms in decreasing degree, then lexicographically in (x, y, z).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, QuadScalar>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::string out;
    static const char* names[] = {"x", "y", "z"};
    for (const auto& [m, c] : ts) {
      std::string mono;
      for (std::size_t i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string coef = c.str();
      const bool compound = !c.is_rational() && !c.a().is_zero();
      if (compound) coef = "(" + coef + ")";
      bool neg = !compound && !coef.empty() && coef[0] == '-';
      if (neg) coef = coef.substr(1);
      std::string t = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
      if (out.empty())
        out = (neg ? "-" : "") + t;
      else
        out += (neg ? " - " : " + ") + t;
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const QuadScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Monomial, QuadScalar> terms_;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

// A nonzero homogeneous polynomial of fixed degree.
class HomogPoly {
 public:
  HomogPoly() = default;
  explicit HomogPoly(Poly p) : p_(std::move(p)) {
    if (p_.is_zero()) throw NotHomogeneous("the zero polynomial has no degree");
    if (!p_.is_homogeneous()) throw NotHomogeneous("polynomial " + p_.str() + " is not homogeneous");
    degree_ = p_.degree();
  }

  const Poly& poly() const { return p_; }
  int degree() const { return degree_; }
  std::string str() const { return p_.str(); }

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  Poly p_;
  int degree_ = 0;
};

class ProjPoint {
 public:
  ProjPoint(QuadScalar x, QuadScalar y, QuadScalar z) : c_{std::move(x), std::move(y), std::move(z)} {
    if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
      throw Error("(0, 0, 0) is not a projective point");
  }

  const std::array<QuadScalar, 3>& coords() const { return c_; }
  const QuadScalar& operator[](std::size_t i) const { return c_.at(i); }

  // Equal up to scale: all 2x2 minors vanish.
  friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (!(p.c_[i] * q.c_[j] - p.c_[j] * q.c_[i]).is_zero()) return false;
    return true;
  }

  std::string str() const { return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ")"; }

 private:
  std::array<QuadScalar, 3> c_;
};

inline QuadScalar evaluate(const HomogPoly& f, const ProjPoint& p) { return f.poly().evaluate(p.coords()); }

inline HomogPoly partial(const HomogPoly& f, int v) {
  Poly d = f.poly().partial(v);
  if (d.is_zero()) throw Error("derivative vanishes identically");
  return HomogPoly(d);
}

inline std::array<QuadScalar, 3> gradient(const HomogPoly& f, const ProjPoint& p) {
  return {f.poly().partial(0).evaluate(p.coords()), f.poly().partial(1).evaluate(p.coords()),
          f.poly().partial(2).evaluate(p.coords())};
}

inline bool is_singular_at(const HomogPoly& f, const ProjPoint& p) {
  if (!evaluate(f, p).is_zero()) return false;
  for (const auto& g : gradient(f, p))
    if (!g.is_zero()) return false;
  return true;
}

// x_i -> sum_j m[i][j] x_j.
inline Poly linear_change(const Poly& f, const std::array<std::array<QuadScalar, 3>, 3>& m) {
  std::array<Poly, 3> im;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) im[i] += Poly(m[i][j]) * Poly::var(static_cast<int>(j));
  return f.compose(im);
}

// Dense univariate polynomial over a field F, lowest coefficient first.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  UPoly(const F& c) : c_{c} { trim(); }

  static UPoly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  F lead() const { return c_.empty() ? F(0) : c_.back(); }

  friend UPoly operator+(const UPoly& p, const UPoly& q) {
    std::vector<F> r(std::max(p.c_.size(), q.c_.size()), F(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = r[i] + p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] = r[i] + q.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<F> r = c_;
    for (auto& v : r) v = F(0) - v;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }
  friend UPoly operator*(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> r(p.c_.size() + q.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.c_ == q.c_; }

  UPoly pow(unsigned n) const {
    UPoly r(F(1)), base = *this;
    for (; n; n >>= 1) {
      if (n & 1) r = r * base;
      base = base * base;
    }
    return r;
  }

  // Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UPoly r = *this;
    std::vector<F> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, F(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
      F t = r.lead() / d.lead();
      q[k] = t;
      r = r - monomial(t, k) * d;
    }
    return {UPoly(std::move(q)), r};
  }

  UPoly derivative() const {
    std::vector<F> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  F operator()(const F& x) const {
    F s(0);
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<F> r = c_;
    F l = lead();
    for (auto& v : r) v = v / l;
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace pnh
