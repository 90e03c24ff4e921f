#include "murphy/murphy.hpp"

namespace murphy {

namespace {

using BPoly = Poly<BiquadElem>;
using UPoly = Poly<QuadElem>;

BiquadElem bq(const BiquadCtxPtr& ctx, const Rational& c0, const Rational& c1 = 0,
              const Rational& c2 = 0, const Rational& c3 = 0) {
  return BiquadElem(ctx, c0, c1, c2, c3);
}

BPoly embed_poly(const UPoly& p, const BiquadCtxPtr& ctx) {
  return p.map([&](const QuadElem& c) { return embed(c, ctx); });
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("bundle invariant failed: ") + what);
}

// Coefficient of x^(2-j) of a monic-or-not quadratic.
BiquadElem qcoef(const BPoly& q, int j) { return q.coeff(2 - j); }

}  // namespace

std::string to_string(const Params& p) { return "(" + to_string(p.m) + ", " + to_string(p.A) + ")"; }

Regime regime(const Params& p) {
  if (p.m == 2) return Regime::m_is_2;
  if (p.m == -2) return Regime::m_is_minus_2;
  if (is_square(s2_of(p))) return Regime::s_square;
  return Regime::generic;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::m_is_2: return "m=2";
    case Regime::m_is_minus_2: return "m=-2";
    case Regime::s_square: return "m^2-4 square";
    case Regime::generic: return "generic";
  }
  return "unknown";
}

Rational s2_of(const Params& p) { return p.m * p.m - 4; }
Rational w2_of(const Params& p) { return (p.m + 2 + p.A) * (p.m + 2 + p.A) - 4 * (p.m - 2); }
Rational y2_of(const Params& p) { return p.A * p.A - 4 * (p.m - 2); }

Params related_octic(const Params& p) { return {p.m, -p.m - 2 - p.A}; }

std::optional<std::string> mu_zero_case(const Params& p) {
  if (p.m == 2 && p.A == -4) return std::string("mu=0 at (m,A)=(2,-4)");
  if (p.m == Rational(2, 3) && p.A == Rational(-4, 3))
    return std::string("mu=0 at (m,A)=(2/3,-4/3)");
  return std::nullopt;
}

UPoly build_p(const Params& prm) {
  const Rational& m = prm.m;
  const Rational& A = prm.A;
  QuadElem u;
  if (m == 2 || m == -2)
    u = QuadElem(Rational(m / 2));
  else
    u = QuadElem::gen(make_quad_ctx(m));
  QuadElem uinv = QuadElem(m) - u;
  QuadElem a(A);
  return UPoly({u * u, u * u - QuadElem(1) - a * u, (QuadElem(2) - a) * u - a - QuadElem(4),
                u - uinv - a, QuadElem(1)});
}

BiquadElem quad_resultant(const BPoly& f, const BPoly& g) {
  if (f.degree() != 2 || g.degree() != 2 || !f.is_monic() || !g.is_monic())
    throw std::invalid_argument("quad_resultant expects monic quadratics");
  BiquadElem b1 = f.coeff(1), c1 = f.coeff(0), b2 = g.coeff(1), c2 = g.coeff(0);
  BiquadElem dc = c1 - c2;
  return dc * dc + (b1 - b2) * (b1 * c2 - b2 * c1);
}

BiquadElem quad_discriminant(const BPoly& f) {
  if (f.degree() != 2) throw std::invalid_argument("quad_discriminant expects a quadratic");
  BiquadElem b = f.coeff(1), c = f.coeff(0), a = f.coeff(2);
  return b * b - BiquadElem(4) * a * c;
}

OcticBundle build_bundle(const Params& prm) {
  OcticBundle b;
  b.params = prm;
  b.regime = regime(prm);
  const Rational& m = prm.m;
  const Rational& A = prm.A;
  const bool pm2 = b.regime == Regime::m_is_2 || b.regime == Regime::m_is_minus_2;
  b.bctx = make_biquad_ctx(m, A);
  const auto& ctx = b.bctx;
  b.p = build_p(prm);
  b.qctx = pm2 ? nullptr : b.p.coeff(0).ctx();
  b.pbar = conj(b.p);

  // s is set to zero at m = +-2, where u = +-1.
  const Rational sc = pm2 ? Rational(0) : Rational(1, 2);
  auto quad = [&](int ss, int ws) {
    BiquadElem lin = bq(ctx, -A / 2, ss * sc, Rational(-ws, 2));
    BiquadElem cst = bq(ctx, m / 2, ss * sc);
    return BPoly({cst, lin, BiquadElem(1)});
  };
  b.q1 = quad(1, 1);
  b.q2 = quad(1, -1);
  b.q3 = quad(-1, -1);
  b.q4 = quad(-1, 1);

  b.Ps = b.q1 * b.q2;
  b.Ps_bar = b.q3 * b.q4;
  b.Psw = b.q1 * b.q3;
  b.Psw_bar = b.q2 * b.q4;
  b.Pw = b.q1 * b.q4;
  b.Pw_bar = b.q2 * b.q3;

  b.T = rational_poly(b.Ps * b.Ps_bar);
  require(b.T == rational_poly(b.p * b.pbar), "T = p pbar");
  require(embed_poly(b.p, ctx) == b.Ps, "q1 q2 = p");
  require(embed_poly(b.pbar, ctx) == b.Ps_bar, "q3 q4 = pbar");
  require(b.T.is_monic() && b.T.coeff(0) == 1 && b.T.degree() == 8, "T monic octic, constant 1");
  require(b.Psw * b.Psw_bar == b.Ps * b.Ps_bar, "Psw Psw_bar = T");
  require(b.Pw * b.Pw_bar == b.Ps * b.Ps_bar, "Pw Pw_bar = T");

  b.s2 = s2_of(prm);
  b.w2 = w2_of(prm);
  b.y2 = y2_of(prm);
  BiquadElem mu = quad_resultant(b.q1, b.q3) * quad_resultant(b.q2, b.q4);
  require(mu.is_rational(), "mu rational");
  b.mu = mu.rational_part();
  b.relatedA = -m - 2 - A;
  return b;
}

SigmaMap sigma_mod_T(const OcticBundle& b) {
  const Params& prm = b.params;
  switch (b.regime) {
    case Regime::m_is_2:
    case Regime::m_is_minus_2:
      throw DegenerateParams(to_string(b.regime),
                             "sigma is not defined modulo T at m=+-2 " + to_string(prm));
    case Regime::s_square:
      throw DegenerateParams(to_string(b.regime),
                             "m^2-4 is a rational square at " + to_string(prm));
    case Regime::generic:
      break;
  }
  if (sgn(b.mu) == 0) {
    auto label = mu_zero_case(prm).value_or("mu=0");
    throw DegenerateParams(label, "Res(A(x), T) = 0 at " + to_string(prm) + ": " + label);
  }
  SigmaMap sm;
  sm.T = b.T;
  QPoly Acoef = component(b.Ps, 1), Bcoef = component(b.Ps, 0);
  sm.s_expr = rem_monic(-(Bcoef * invmod(Acoef, b.T)), b.T);
  sm.u_expr = rem_monic((QPoly(prm.m) + sm.s_expr).scaled(Rational(1, 2)), b.T);
  QPoly Ccoef = component(b.Pw, 2), Dcoef = component(b.Pw, 0);
  if (sgn(resultant(Ccoef, b.T)) != 0)
    sm.w_expr = rem_monic(-(Dcoef * invmod(Ccoef, b.T)), b.T);
  const QPoly x = QPoly::x();
  const QPoly one(1L);
  sm.sigma = MobiusMap<QPoly>{-one, -one, one, sm.u_expr};
  sm.sigma_x = rem_monic((-x - one) * invmod(x + sm.u_expr, b.T), b.T);
  return sm;
}

SigmaMap sigma_mod_T(const Params& p) { return sigma_mod_T(build_bundle(p)); }

QPoly apply_sigma(const SigmaMap& sm, const QPoly& g) { return compose_mod(g, sm.sigma_x, sm.T); }

std::vector<QPoly> sigma_orbit(const SigmaMap& sm, int n) {
  std::vector<QPoly> out{QPoly::x()};
  for (int k = 1; k < n; ++k) out.push_back(apply_sigma(sm, out.back()));
  return out;
}

QPoly murphy_sum(const SigmaMap& sm, const QPoly& g) {
  QPoly acc(1L), term = rem_monic(g, sm.T), cur = term;
  acc += term;
  for (int k = 1; k < 3; ++k) {
    cur = apply_sigma(sm, cur);
    term = mulmod(term, cur, sm.T);
    acc += term;
  }
  return rem_monic(acc, sm.T);
}

bool murphy_identity_check(const Params& prm) {
  if (regime(prm) == Regime::m_is_minus_2) {
    // T = p^2; the map (-x-1)/(x-1) acts on the roots of p.
    QPoly P = rational_poly(build_p(prm));
    SigmaMap sm;
    sm.T = P;
    const QPoly x = QPoly::x(), one(1L);
    sm.u_expr = QPoly(-1L);
    sm.sigma_x = rem_monic((-x - one) * invmod(x - one, P), P);
    return murphy_sum(sm, x).is_zero();
  }
  SigmaMap sm = sigma_mod_T(prm);
  return murphy_sum(sm, QPoly::x()).is_zero();
}

bool IdentityReport::all_passed() const {
  for (const auto& r : results)
    if (!r.skipped && !r.passed) return false;
  return true;
}

IdentityReport verify_core_identities(const Params& prm) {
  IdentityReport rep;
  rep.params = prm;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    rep.results.push_back({std::move(name), ok, false, std::move(detail)});
  };
  static const char* const names[] = {
      "sigma transform of pbar equals (m-2) p",
      "reciprocity u^2 p(x) = x^4 p(u/x)",
      "p = (x^2+u)^2 + c1 x (x^2+u) + c0 x^2",
      "disc F = w^2",
      "disc q1 = Q1 (Q1 + Q2 u - 2(u+1))",
      "(x+u)^2 q3(sigma x) = q3(-1) q1",
      "disc q1 disc q3 q3(-1)^2 = ((u-1) disc q3)^2",
      "(u-1) disc q3 = q3(-1)((m+A-2)s + (2-m)w)/2",
      "disc q1 disc q2 = y^2 (u-1)^2",
      "Res(q1,q2) = w^2 u",
      "disc q1 disc q4 = y^2 Q1^2",
      "Res(q1,q4) = s^2 Q1",
      "Res(A,T) = (m-2)^2 mu^2/256",
      "Res(C,T) = mu^2/256",
      "tv tv' = (2-m) Res(q1,q3)",
      "disc T is a rational square",
      "disc p = u^6 disc pbar",
      "T = p pbar with q1 q2 = p, q3 q4 = pbar",
      "related octic swaps w^2 and y^2",
  };
  const Regime rg = regime(prm);
  if (rg != Regime::generic) {
    for (const char* n : names) rep.results.push_back({n, false, true, "regime " + to_string(rg)});
    return rep;
  }

  OcticBundle b;
  try {
    b = build_bundle(prm);
  } catch (const std::logic_error& e) {
    add(names[17], false, e.what());
    return rep;
  }
  const auto& ctx = b.bctx;
  const Rational& m = prm.m;
  const Rational& A = prm.A;
  const QuadElem u = QuadElem::gen(b.qctx), ubar = u.conj();
  const BiquadElem ub = u_in_biquad(ctx);
  const BiquadElem s = BiquadElem::s(ctx), w = BiquadElem::w(ctx);
  const BiquadElem one(1);

  add(names[0], mobius_transform(b.pbar, MobiusMap<QuadElem>{-1, -1, 1, u}) ==
                    b.p.scaled(QuadElem(m - 2)));
  add(names[1], b.p.scaled(u * u) == mobius_transform(b.p, MobiusMap<QuadElem>{0, u, 1, 0}));

  const QuadElem c1 = QuadElem(-A) + u - ubar;
  const QuadElem c0 = QuadElem(-A - 4) - QuadElem(A) * u;
  const UPoly x = UPoly::x();
  const UPoly inner = x * x + UPoly(u);
  add(names[2], b.p == inner * inner + (x * inner).scaled(c1) + (x * x).scaled(c0));
  add(names[3], c1 * c1 - QuadElem(4) * c0 == QuadElem(b.w2));

  const BiquadElem Q1 = b.q1(BiquadElem(-1)), Q2 = b.q2(BiquadElem(-1)), Q3 = b.q3(BiquadElem(-1));
  const BiquadElem d1 = quad_discriminant(b.q1), d2 = quad_discriminant(b.q2);
  const BiquadElem d3 = quad_discriminant(b.q3), d4 = quad_discriminant(b.q4);
  add(names[4], d1 == Q1 * (Q1 + Q2 * ub - BiquadElem(2) * (ub + one)) &&
                    Q1 == bq(ctx, (m + 2 + A) / 2, 0, Rational(1, 2)));
  add(names[5], mobius_transform(b.q3, MobiusMap<BiquadElem>{-1, -1, 1, ub}) == b.q1.scaled(Q3));
  const BiquadElem um1d3 = (ub - one) * d3;
  add(names[6], d1 * d3 * Q3 * Q3 == um1d3 * um1d3);
  add(names[7], um1d3 == Q3 * bq(ctx, 0, (m + A - 2) / 2, (2 - m) / 2));
  add(names[8], d1 * d2 == BiquadElem(b.y2) * (ub - one) * (ub - one));
  const BiquadElem r12 = quad_resultant(b.q1, b.q2), r14 = quad_resultant(b.q1, b.q4);
  add(names[9], r12 == BiquadElem(b.w2) * ub && r12 == resultant(b.q1, b.q2));
  add(names[10], d1 * d4 == BiquadElem(b.y2) * Q1 * Q1);
  add(names[11], r14 == BiquadElem(b.s2) * Q1 && r14 == resultant_berkowitz(b.q1, b.q4));

  const Rational mu2 = b.mu * b.mu / 256;
  add(names[12], resultant(component(b.Ps, 1), b.T) == (m - 2) * (m - 2) * mu2);
  add(names[13], resultant(component(b.Pw, 2), b.T) == mu2);

  const BPoly qu({one, one + ub, one}), qub({one, one + (BiquadElem(m) - ub), one});
  auto det3 = [](const BPoly& r0, const BPoly& r1, const BPoly& r2) {
    Matrix<BiquadElem> M{{qcoef(r0, 0), qcoef(r0, 1), qcoef(r0, 2)},
                         {qcoef(r1, 0), qcoef(r1, 1), qcoef(r1, 2)},
                         {qcoef(r2, 0), qcoef(r2, 1), qcoef(r2, 2)}};
    return det_berkowitz(M);
  };
  const BiquadElem tv = det3(b.q1, qu, b.q3), tvp = det3(b.q3, qub, b.q1);
  add(names[14], tv == test_value(ctx) &&
                     tv * tvp == BiquadElem(2 - m) * quad_resultant(b.q1, b.q3));

  const Rational dT = discriminant(b.T);
  add(names[15], is_square(dT), "disc T = " + to_string(dT));
  add(names[16], discriminant(b.p) == u * u * u * u * u * u * discriminant(b.pbar));
  add(names[17], true);
  const Params rel = related_octic(prm);
  add(names[18], w2_of(rel) == b.y2 && y2_of(rel) == b.w2 && related_octic(rel) == prm);
  return rep;
}

}  // namespace murphy
