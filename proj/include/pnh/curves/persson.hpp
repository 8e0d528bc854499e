#pragma once

// The conic Q, the nodal cubic C, the family C_lambda and the exact checks
// of their configuration: tangent lines, node, flexes.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "pnh/curves/resultant.hpp"

namespace pnh {

inline HomogPoly conic_Q() {
  const Poly x = Poly::x(), y = Poly::y(), z = Poly::z();
  return HomogPoly(x * x + Poly(2) * y * z + z * z);
}

inline HomogPoly cubic_C() {
  const Poly y = Poly::y(), z = Poly::z();
  return HomogPoly(z.pow(3) + Poly(16) * conic_Q().poly() * (Poly(8) * y + Poly(5) * z));
}

// z^3 + Q (2 l^3 y + (2 l^3 - 3 l^2) z).
inline HomogPoly family_cubic(const QuadScalar& l) {
  const Poly y = Poly::y(), z = Poly::z();
  const QuadScalar l2 = l * l, l3 = l2 * l;
  return HomogPoly(z.pow(3) + conic_Q().poly() * (Poly(QuadScalar(2) * l3) * y + Poly(QuadScalar(2) * l3 - QuadScalar(3) * l2) * z));
}

inline HomogPoly line(const QuadScalar& a, const QuadScalar& b, const QuadScalar& c) {
  return HomogPoly(Poly(a) * Poly::x() + Poly(b) * Poly::y() + Poly(c) * Poly::z());
}

// x <- x, y <- (u - 9z)/16, z <- z: C in the coordinates (x, u, z).
inline Poly to_xuz(const Poly& f) {
  const QuadScalar o(0), one(1);
  return linear_change(f, {{{one, o, o}, {o, QuadScalar(Rational(1, 16)), QuadScalar(Rational(-9, 16))}, {o, o, one}}});
}

struct ConfigCheck {
  int item = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConfigReport {
  std::vector<ConfigCheck> checks;
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

namespace detail {

inline ProjPoint pt(long x, long y, long z) { return ProjPoint(QuadScalar(x), QuadScalar(y), QuadScalar(z)); }

// Nonzero c with f == c g, if any.
inline std::optional<QuadScalar> proportional(const Poly& f, const Poly& g) {
  if (g.is_zero() || f.is_zero()) return std::nullopt;
  const auto& [m, gc] = *g.terms().begin();
  QuadScalar c = f.coefficient(m) / gc;
  if (c.is_zero() || !(f == Poly(c) * g)) return std::nullopt;
  return c;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline ConfigCheck conic_tangents() {
  ConfigCheck r{1, "Q and C tangent to x-y and x+y", true, ""};
  const HomogPoly Q = conic_Q(), C = cubic_C();
  const HomogPoly l1 = line(1, -1, 0), lm1 = line(1, 1, 0);
  const ProjPoint q1 = pt(1, 1, -1), qm1 = pt(1, -1, 1), c1 = pt(-3, -3, 4), cm1 = pt(3, -3, 4);
  const bool a = is_tangent_at(Q, l1, q1), b = is_tangent_at(Q, lm1, qm1);
  const bool c = is_tangent_at(C, l1, c1), d = is_tangent_at(C, lm1, cm1);
  const bool distinct = !(q1 == c1) && !(qm1 == cm1);
  r.pass = a && b && c && d && distinct;
  r.detail = "Q at (1,1,-1): " + yes_no(a) + "; Q at (1,-1,1): " + yes_no(b) + "; C at (-3,-3,4): " + yes_no(c) +
             "; C at (3,-3,4): " + yes_no(d) + "; points differ: " + yes_no(distinct);
  return r;
}

inline ConfigCheck conic_at_infinity() {
  ConfigCheck r{2, "Q tangent to z=0 at P=(0,1,0)", false, ""};
  const ProjPoint P = pt(0, 1, 0);
  const bool on_c = evaluate(cubic_C(), P).is_zero();
  const bool t = is_tangent_at(conic_Q(), line(0, 0, 1), P);
  r.pass = t && on_c;
  r.detail = "tangent: " + yes_no(t) + "; P on C: " + yes_no(on_c);
  return r;
}

inline ConfigCheck single_intersection() {
  ConfigCheck r{3, "C.Q = 6P", false, ""};
  const Poly c = cubic_C().poly().specialize(1, 1), q = conic_Q().poly().specialize(1, 1);
  const Poly res = resultant(c, q, 2);
  const Poly x6 = Poly::x().pow(6);
  auto k = proportional(res, x6);
  r.pass = k.has_value();
  r.detail = "Res_z(C(x,1,z), Q(x,1,z)) = " + res.str();
  return r;
}

inline ConfigCheck node() {
  ConfigCheck r{4, "node of C at (0,9,-16)", false, ""};
  const HomogPoly C = cubic_C();
  const ProjPoint n = pt(0, 9, -16);
  const bool sing = is_singular_at(C, n);
  const std::vector<ProjPoint> tangency{pt(-3, -3, 4), pt(3, -3, 4), pt(0, 1, 0), pt(1, 0, 0),
                                        ProjPoint(QuadScalar::sqrt_of(10, -24), QuadScalar(-75), QuadScalar(80)),
                                        ProjPoint(QuadScalar::sqrt_of(10, 24), QuadScalar(-75), QuadScalar(80))};
  bool apart = true;
  for (const auto& p : tangency) apart = apart && !(p == n);
  const bool off_q = !evaluate(conic_Q(), n).is_zero();
  r.pass = sing && apart && off_q;
  r.detail = "gradient vanishes: " + yes_no(sing) + "; distinct from tangency points: " + yes_no(apart) +
             "; off Q: " + yes_no(off_q);
  return r;
}

inline ConfigCheck tangent_cone() {
  ConfigCheck r{5, "tangent cone at the node is 8x^2+u^2", false, ""};
  const Poly x = Poly::x(), u = Poly::y(), z = Poly::z();
  const Poly cu = to_xuz(cubic_C().poly());
  const bool form = cu == z * u * u + Poly(8) * x * x * (u + z);
  // Affine chart z = 1 around (0,0,1); keep the degree 2 part.
  const Poly affine = cu.specialize(2, 1);
  Poly quad;
  for (const auto& [m, c] : affine.terms())
    if (m[0] + m[1] == 2) quad += Poly::term(c, m);
  const bool lower_vanish = affine.coefficient({0, 0, 0}).is_zero() && affine.coefficient({1, 0, 0}).is_zero() &&
                            affine.coefficient({0, 1, 0}).is_zero();
  const bool cone = quad == Poly(8) * x * x + u * u;
  const QuadScalar a = quad.coefficient({2, 0, 0}), b = quad.coefficient({1, 1, 0}), c = quad.coefficient({0, 2, 0});
  const QuadScalar disc = b * b - QuadScalar(4) * a * c;
  const bool complex = disc.is_rational() && disc.a() < 0;
  r.pass = form && lower_vanish && cone && complex;
  r.detail = "C = z u^2 + 8x^2(u+z): " + yes_no(form) + "; cone = " + quad.str() + "; discriminant " + disc.str();
  return r;
}

// z = l w in C_l, divided by l^3: coefficients of w^3, w^2, w, 1.
inline std::vector<Poly> w_cubic(const QuadScalar& l) {
  const Poly f = family_cubic(l).poly().compose({Poly::x(), Poly::y(), Poly(l) * Poly::z()});
  const Poly g = Poly(l.pow(3).inverse()) * f;
  return g.coefficients_in(2);
}

inline ConfigCheck tangents_from_origin() {
  ConfigCheck r{6, "tangent lines through (0,0,1)", false, ""};
  const Poly x = Poly::x(), y = Poly::y();
  const bool member = family_cubic(QuadScalar(4)).poly() == cubic_C().poly();
  const auto a = w_cubic(QuadScalar(4));
  const bool coeffs = a.size() == 4 && a[0] == Poly(81) && a[1] == Poly(72) * y &&
                      a[2] == Poly(16) * y * y + Poly(5) * x * x && a[3] == Poly(2) * x * x * y;
  const Poly delta = cubic_discriminant(a[0], a[1], a[2], a[3]);
  const Poly printed = y * y * Poly(5184) * a[2].pow(2) - Poly(324) * a[2].pow(3) - Poly(2985984) * x * x * y.pow(4) -
                       Poly(708588) * x.pow(4) * y * y + Poly(209952) * a[2] * x * x * y * y;
  const bool expansion = coeffs && delta == printed;
  const Poly shape = x * x * (x * x - y * y) * (Poly(128) * y * y - Poly(125) * x * x);
  auto c = detail::proportional(delta, shape);
  // Res_w(f, f') = -a0 * disc for a cubic.
  const Poly f = Poly::z().pow(3) * a[0] + Poly::z().pow(2) * a[1] + Poly::z() * a[2] + a[3];
  const bool dual = resultant(f, f.partial(2), 2) == -(a[0] * delta);
  r.pass = member && expansion && c.has_value() && *c == QuadScalar(324) && dual;
  r.detail = "C_4 = C: " + yes_no(member) + "; expansion matches: " + yes_no(expansion) +
             "; discriminant = " + (c ? c->str() : std::string("?")) + " * x^2 (x^2-y^2) (128y^2-125x^2)" +
             "; resultant route agrees: " + yes_no(dual);
  return r;
}

inline ConfigCheck tangents_pm() {
  ConfigCheck r{7, "tangency points on L+ and L-", false, ""};
  const HomogPoly C = cubic_C();
  const QuadScalar s = QuadScalar::sqrt_of(10, 8);
  // x = sqrt(128/125) y, normalized to 8 sqrt(10)/25.
  const bool slope = QuadScalar::sqrt_rational(Rational(128, 125)) == QuadScalar::sqrt_of(10, Rational(8, 25));
  const HomogPoly lp = line(25, -s, 0), lm = line(25, s, 0);
  const ProjPoint tp(QuadScalar::sqrt_of(10, -24), QuadScalar(-75), QuadScalar(80));
  const ProjPoint tm(QuadScalar::sqrt_of(10, 24), QuadScalar(-75), QuadScalar(80));
  const bool a = is_tangent_at(C, lp, tp), b = is_tangent_at(C, lm, tm);
  r.pass = slope && a && b;
  r.detail = "L+: 25x - 8 sqrt(10) y at (-24 sqrt(10),-75,80): " + yes_no(a) +
             "; L-: 25x + 8 sqrt(10) y at (24 sqrt(10),-75,80): " + yes_no(b);
  for (long k : {33L, 27L}) {
    const ProjPoint cand(QuadScalar::sqrt_of(10, -8 * k), QuadScalar(-25 * k), QuadScalar(880));
    const bool on = evaluate(C, cand).is_zero();
    const bool tan = on && is_tangent_at(C, lp, cand);
    r.detail += "; candidate k=" + std::to_string(k) + ": on C " + yes_no(on) + ", tangent " + yes_no(tan) +
                ", equals chosen point " + yes_no(cand == tp);
  }
  return r;
}

inline ConfigCheck parameter_roots() {
  ConfigCheck r{8, "A^3-6A^2+9A-4 = (A-1)^2 (A-4)", false, ""};
  using U = UPoly<QuadScalar>;
  const U A({QuadScalar(0), QuadScalar(1)});
  const U cubic({QuadScalar(-4), QuadScalar(9), QuadScalar(-6), QuadScalar(1)});
  const U sq = (A - U(QuadScalar(1))).pow(2);
  auto [q, rem] = cubic.divmod(sq);
  const bool exact = rem.is_zero() && q == A - U(QuadScalar(4));
  // Discriminant of the quadratic in (z, y) cut out on x = 0.
  const U k2 = U(QuadScalar(1)) + U(QuadScalar(2)) * A.pow(3) - U(QuadScalar(3)) * A.pow(2);
  const U k1 = U(QuadScalar(6)) * A.pow(2) * (A - U(QuadScalar(1)));
  const U k0 = U(QuadScalar(4)) * A.pow(3);
  const bool disc = k1 * k1 - U(QuadScalar(4)) * k2 * k0 == U(QuadScalar(4)) * A.pow(3) * cubic;
  // C_A(0,y,z) = z (k2 z^2 + k1 z y + k0 y^2); both sides have degree <= 3 in A, so 7 values suffice.
  bool restriction = true;
  for (long a = 0; a <= 6; ++a) {
    const QuadScalar v(a);
    const Poly lhs = family_cubic(v).poly().specialize(0, 0);
    const Poly y = Poly::y(), z = Poly::z();
    const Poly rhs = z * (Poly(k2(v)) * z * z + Poly(k1(v)) * z * y + Poly(k0(v)) * y * y);
    restriction = restriction && lhs == rhs;
  }
  // A = 1: the singular point (0,0,1) is the tangency point on x + y.
  const HomogPoly c1 = family_cubic(QuadScalar(1));
  const ProjPoint o = pt(0, 0, 1);
  const bool a1 = is_singular_at(c1, o) && o == pt(0, 0, 1) && evaluate(line(1, 1, 0), o).is_zero();
  const bool a4 = is_singular_at(family_cubic(QuadScalar(4)), pt(0, 9, -16));
  r.pass = exact && disc && restriction && a1 && a4;
  r.detail = "division remainder zero, quotient A-4: " + yes_no(exact) + "; discriminant 4A^3 (A^3-6A^2+9A-4): " +
             yes_no(disc) + "; restriction to x=0: " + yes_no(restriction) +
             "; A=1 singular at (0,0,1) on x+y: " + yes_no(a1) + "; A=4 node at (0,9,-16): " + yes_no(a4);
  return r;
}

inline ConfigCheck flexes() {
  ConfigCheck r{9, "flexes of C", false, ""};
  const Poly x = Poly::x(), u = Poly::y(), z = Poly::z();
  const HomogPoly cu(to_xuz(cubic_C().poly()));
  const HomogPoly h = hessian(cu);
  const Poly printed = -((u + z) * u * u) - Poly(8) * x * x * (z - Poly(2) * u);
  auto k = proportional(h.poly(), printed);
  // All common points: Res_x(C, H) = c u^6 (u + 4z)^2.
  auto all = proportional(resultant(cu.poly(), h.poly(), 0), u.pow(6) * (u + Poly(4) * z).pow(2));
  const HomogPoly C = cubic_C(), HC = hessian(C);
  const QuadScalar r6 = QuadScalar::sqrt_rational(Rational(2, 3));
  bool found = true;
  for (const QuadScalar& sx : {r6, -r6}) {
    const ProjPoint p(sx, QuadScalar(Rational(13, 16)), QuadScalar(-1));
    const ProjPoint pu(sx, QuadScalar(4), QuadScalar(-1));
    found = found && evaluate(C, p).is_zero() && evaluate(HC, p).is_zero() && !is_singular_at(C, p) &&
            evaluate(cu, pu).is_zero() && evaluate(h, pu).is_zero();
    const bool plus = sx.b() > 0;
    const QuadScalar ratio = sx / QuadScalar(Rational(13, 16));
    const QuadScalar expect = (plus ? r6 : -r6) * QuadScalar(Rational(16, 13));
    found = found && ratio == expect && expect == QuadScalar::sqrt_of(6, Rational(plus ? 16 : -16, 39));
  }
  const ProjPoint inf = pt(1, 0, 0);
  const bool at_inf = evaluate(C, inf).is_zero() && evaluate(HC, inf).is_zero() && !is_singular_at(C, inf);
  r.pass = k.has_value() && all.has_value() && found && at_inf;
  r.detail = "hessian in (x,u,z) proportional to -(u+z)u^2 - 8x^2(z-2u): " + yes_no(k.has_value()) +
             "; Res_x(C, H) = c u^6 (u+4z)^2: " + yes_no(all.has_value()) +
             "; (+-sqrt(6)/3, 13/16, -1) flexes with x/y = +-16 sqrt(6)/39: " + yes_no(found) +
             "; (1,0,0) flex: " + yes_no(at_inf);
  return r;
}

inline ConfigCheck irreducible() {
  ConfigCheck r{10, "z=0 is not a component of C", false, ""};
  const Poly rest = cubic_C().poly().specialize(2, 0);
  r.pass = !rest.is_zero();
  r.detail = "C(x,y,0) = " + rest.str();
  return r;
}

}  // namespace detail

inline ConfigReport verify_persson_configuration() {
  const auto t0 = std::chrono::steady_clock::now();
  ConfigReport rep;
  using Fn = ConfigCheck (*)();
  for (Fn f : {&detail::conic_tangents, &detail::conic_at_infinity, &detail::single_intersection, &detail::node,
               &detail::tangent_cone, &detail::tangents_from_origin, &detail::tangents_pm, &detail::parameter_roots,
               &detail::flexes, &detail::irreducible}) {
    try {
      rep.checks.push_back(f());
    } catch (const Error& e) {
      rep.checks.push_back(ConfigCheck{static_cast<int>(rep.checks.size()) + 1, "error", false, e.what()});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pnh
