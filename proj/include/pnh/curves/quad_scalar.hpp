#pragma once

// Exact arithmetic in Q(sqrt d) for a squarefree integer d.
//
// A value a + b sqrt(d) carries its field tag d; d = 1 means Q and then
// b = 0. Rationals (d = 1) combine with any field; two different irrational
// fields do not.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "pnh/word.hpp"

namespace pnh {

using Rational = boost::multiprecision::cpp_rational;
using BigInteger = boost::multiprecision::cpp_int;

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline bool squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// n = s^2 * f with f squarefree; returns {s, f}. n > 0.
inline std::pair<BigInteger, BigInteger> split_square(BigInteger n) {
  BigInteger s = 1, f = 1;
  for (BigInteger p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      f *= p;
    }
  }
  return {s, f * n};
}

}  // namespace detail

class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}
  QuadScalar(Rational v) : a_(std::move(v)) {}
  QuadScalar(Rational a, Rational b, long d) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (!detail::squarefree(d_)) throw Error("field tag " + std::to_string(d_) + " is not squarefree");
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }

  // b sqrt(d) for squarefree d.
  static QuadScalar sqrt_of(long d, Rational b = 1) { return QuadScalar(0, std::move(b), d); }

  // sqrt(q) for a rational q, normalized: sqrt(p/r) = sqrt(p r)/r with the
  // square part extracted, so sqrt(2/3) = sqrt(6)/3. Negative q gives a
  // value in an imaginary quadratic field.
  static QuadScalar sqrt_rational(const Rational& q) {
    if (q == 0) return QuadScalar(0);
    BigInteger num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    const bool neg = num < 0;
    if (neg) num = -num;
    auto [s, f] = detail::split_square(num * den);
    Rational coeff = Rational(s) / Rational(den);
    long d = f.convert_to<long>();
    if (neg) d = -d;
    if (d == 1) return QuadScalar(coeff);
    return QuadScalar(0, coeff, d);
  }

  long d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadScalar conj() const { return QuadScalar(d_, a_, -b_, Raw{}); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadScalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational n = norm();
    return QuadScalar(d_, a_ / n, -b_ / n, Raw{});
  }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    long d = common(x, y);
    return QuadScalar(d, x.a_ + y.a_, x.b_ + y.b_, Raw{});
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    long d = common(x, y);
    return QuadScalar(d, x.a_ - y.a_, x.b_ - y.b_, Raw{});
  }
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    long d = common(x, y);
    return QuadScalar(d, x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, Raw{});
  }
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }
  QuadScalar operator-() const { return QuadScalar(d_, -a_, -b_, Raw{}); }

  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
  QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

  QuadScalar pow(unsigned n) const {
    QuadScalar r(1), base = *this;
    for (; n; n >>= 1) {
      if (n & 1) r *= base;
      base *= base;
    }
    return r;
  }

  // Values compare equal across tags when both are rational.
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "3", "-1/2", "8*sqrt(10)/25", "1 - sqrt(10)".
  std::string str() const {
    if (b_ == 0) return a_.str();
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    Rational b = b_ < 0 ? Rational(-b_) : b_;
    BigInteger bn = boost::multiprecision::numerator(b), bd = boost::multiprecision::denominator(b);
    std::string irr = (bn == 1 ? rad : bn.str() + "*" + rad) + (bd == 1 ? "" : "/" + bd.str());
    if (a_ == 0) return (b_ < 0 ? "-" : "") + irr;
    return a_.str() + (b_ < 0 ? " - " : " + ") + irr;
  }

 private:
  struct Raw {};
  QuadScalar(long d, Rational a, Rational b, Raw) : d_(d), a_(std::move(a)), b_(std::move(b)) {}

  static long common(const QuadScalar& x, const QuadScalar& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.d_ == 1 ? y.d_ : x.d_;
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
      throw FieldMismatch("cannot combine values of Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                          std::to_string(y.d_) + ")");
    return x.d_;
  }

  long d_ = 1;
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace pnh
