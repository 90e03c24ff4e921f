#include "murphy/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace murphy {

namespace {

using TPoly = Poly<QPoly>;  // polynomials in x with coefficients in Q[t]

QPoly tpoly(std::initializer_list<long> asc) { return qpoly(asc); }

struct FamilyFormal {
  int n = 0;
  TPoly P;
  std::optional<MobiusMap<Rational>> mobius;
  TPoly sigma_num;
  QPoly sigma_den;
};

FamilyFormal formal(FamilyKind kind) {
  FamilyFormal f;
  switch (kind) {
    case FamilyKind::cubic_a:
      f.n = 3;
      f.P = TPoly({tpoly({-1}), tpoly({-3, -1}), tpoly({0, -1}), tpoly({1})});
      f.mobius = MobiusMap<Rational>{-1, -1, 1, 0};
      break;
    case FamilyKind::quartic_b:
      f.n = 4;
      f.P = TPoly({tpoly({1}), tpoly({0, 1}), tpoly({-6}), tpoly({0, -1}), tpoly({1})});
      f.mobius = MobiusMap<Rational>{-1, -1, 1, -1};
      break;
    case FamilyKind::washington_c:
      f.n = 4;
      f.P = TPoly({tpoly({1}), tpoly({4, 2, 1, 1}), tpoly({6, 4, 3, 1}), tpoly({4, 2, 1}), tpoly({1})});
      f.sigma_num = TPoly({tpoly({-2, -2, -1, -1}), tpoly({-5, -4, -3, -1}), tpoly({-4, -2, -1}), tpoly({-1})});
      f.sigma_den = tpoly({0, 1});
      break;
    case FamilyKind::quintic_d:
      f.n = 5;
      f.P = TPoly({tpoly({-1}), tpoly({10, 10, 4, 1}), tpoly({-5, -15, -11, -5, -1}),
                   tpoly({-10, -10, -6, -2}), tpoly({0, 0, -1}), tpoly({1})});
      f.sigma_num = TPoly({tpoly({-9, -20, -16, -6, -1}), tpoly({-19, -29, -19, -7, -1}),
                           tpoly({8, 14, 9, 4, 1}), tpoly({3, 3, 2, 1}), tpoly({-1, -1})});
      f.sigma_den = tpoly({7, 10, 5, 1});
      break;
    case FamilyKind::sextic_e:
      f.n = 6;
      f.P = TPoly({tpoly({1}), tpoly({6, 2}), tpoly({0, 5}), tpoly({-20}), tpoly({-15, -5}), tpoly({0, -2}),
                   tpoly({1})});
      f.mobius = MobiusMap<Rational>{-2, -1, 1, -1};
      break;
  }
  return f;
}

QPoly at(const TPoly& p, const Rational& t) {
  return p.map([&](const QPoly& c) { return c(t); });
}

int max_coeff_degree(const TPoly& p) {
  int d = 0;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

QPoly murphy_sum_mod(const QPoly& y, const QPoly& eta_x, const QPoly& P, int n) {
  QPoly sum = QPoly(1L) + y, term = y, img = y;
  for (int j = 1; j <= n - 2; ++j) {
    img = compose_mod(img, eta_x, P);
    term = mulmod(term, img, P);
    sum += term;
  }
  return sum;
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::cubic_a: return "cubic_a";
    case FamilyKind::quartic_b: return "quartic_b";
    case FamilyKind::washington_c: return "washington_c";
    case FamilyKind::quintic_d: return "quintic_d";
    case FamilyKind::sextic_e: return "sextic_e";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
  for (FamilyKind k : all_family_kinds()) {
    std::string name = to_string(k);
    if (s == name || s == name.substr(name.size() - 1)) return k;
  }
  throw std::invalid_argument("unknown family '" + s + "'");
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> kinds{FamilyKind::cubic_a, FamilyKind::quartic_b,
                                             FamilyKind::washington_c, FamilyKind::quintic_d,
                                             FamilyKind::sextic_e};
  return kinds;
}

FamilySpec family_poly(FamilyKind kind, const Rational& t) {
  FamilyFormal f = formal(kind);
  FamilySpec s;
  s.kind = kind;
  s.t = t;
  s.n = f.n;
  s.P = at(f.P, t);
  const QPoly x = QPoly::x();
  if (f.mobius) {
    s.mobius = f.mobius;
    const auto& M = *f.mobius;
    QPoly den({M.d, M.c});
    s.sigma_x = mulmod(QPoly({M.b, M.a}), invmod(den, s.P), s.P);
  } else {
    s.sigma_den = f.sigma_den(t);
    if (sgn(s.sigma_den) == 0)
      throw std::invalid_argument("t = " + to_string(t) + " is a pole of sigma for family " + to_string(kind));
    s.sigma_num = at(f.sigma_num, t);
    s.sigma_x = rem_monic(s.sigma_num, s.P).divided(s.sigma_den);
  }
  return s;
}

QPoly apply_sigma(const FamilySpec& s, const QPoly& g) { return compose_mod(g, s.sigma_x, s.P); }

std::vector<QPoly> sigma_orbit(const FamilySpec& s, int count) {
  std::vector<QPoly> out;
  QPoly cur = rem_monic(QPoly::x(), s.P);
  for (int k = 0; k < count; ++k) {
    out.push_back(cur);
    cur = apply_sigma(s, cur);
  }
  return out;
}

QPoly murphy_residue(const FamilySpec& s) {
  return murphy_sum_mod(rem_monic(QPoly::x(), s.P), s.sigma_x, s.P, s.n);
}

bool verify_M(const FamilySpec& s) { return murphy_residue(s).is_zero(); }

long murphy_t_degree_bound(FamilyKind kind) {
  FamilyFormal f = formal(kind);
  if (f.mobius) return 0;
  // Residues are N(x, t) / den(t)^k; track (t-degree of N, k). Reducing a
  // product mod P takes at most n-1 steps, each raising the t-degree by e.
  struct B {
    long d, k;
  };
  const long n = f.n, e = max_coeff_degree(f.P), dc = f.sigma_den.degree();
  const long ds = max_coeff_degree(f.sigma_num), J = f.sigma_num.degree();
  auto mul = [&](B a, B b) { return B{a.d + b.d + (n - 1) * e, a.k + b.k}; };
  auto add = [&](B a, B b) {
    long k = std::max(a.k, b.k);
    return B{std::max(a.d + (k - a.k) * dc, b.d + (k - b.k) * dc), k};
  };
  auto sig = [&](B h) {
    B acc{ds, 0}, pw{0, 0};
    for (long i = 1; i <= J; ++i) {
      pw = i == 1 ? h : mul(pw, h);
      acc = add(acc, B{ds + pw.d, pw.k});
    }
    return B{acc.d, acc.k + 1};
  };
  std::vector<B> orbit{B{0, 0}};
  for (long k = 1; k <= n - 2; ++k) orbit.push_back(sig(orbit.back()));
  B term{0, 0}, sum = add(B{0, 0}, B{0, 0});
  for (long k = 1; k <= n - 2; ++k) {
    term = mul(term, orbit[k]);
    sum = add(sum, term);
  }
  return sum.d;
}

FamilyIdentityReport verify_M_family(FamilyKind kind, long min_samples) {
  FamilyIdentityReport r;
  r.kind = kind;
  r.t_degree_bound = murphy_t_degree_bound(kind);
  FamilyFormal f = formal(kind);
  r.formal_identity = f.mobius ? mobius_murphy_numerator(*f.mobius, f.n).is_zero() : false;
  const long want = std::max(r.t_degree_bound + 1, min_samples);
  r.all_pass = f.mobius ? r.formal_identity : true;
  for (long t = 0; static_cast<long>(r.samples.size()) < want; ++t) {
    FamilySpec s;
    try {
      s = family_poly(kind, Rational(t));
    } catch (const std::invalid_argument&) {
      continue;
    }
    r.samples.push_back(Rational(t));
    if (!verify_M(s)) {
      r.all_pass = false;
      if (!r.failing_t) r.failing_t = Rational(t);
    }
  }
  return r;
}

int sigma_order(const FamilySpec& s) {
  const QPoly x = rem_monic(QPoly::x(), s.P);
  QPoly cur = x;
  for (int k = 1; k <= s.n; ++k) {
    cur = apply_sigma(s, cur);
    if (cur == x) return k;
  }
  return 0;
}

bool order_check(const FamilySpec& s) {
  if (sigma_order(s) != s.n) return false;
  if (s.mobius) {
    if (!mobius_power(*s.mobius, s.n).is_scalar()) return false;
    for (int d = 1; d < s.n; ++d)
      if (s.n % d == 0 && mobius_power(*s.mobius, d).is_scalar()) return false;
  }
  return true;
}

DiffgenReport diffgen(const FamilySpec& s, int k) {
  if (k < 1 || k >= s.n || std::gcd(k, s.n) != 1)
    throw std::invalid_argument("diffgen needs 1 <= k < n with gcd(k, n) = 1");
  DiffgenReport r;
  r.kind = s.kind;
  r.t = s.t;
  r.k = k;
  std::vector<QPoly> orbit = sigma_orbit(s, k + 1);
  r.y = QPoly(1L);
  for (int i = 0; i < k; ++i) r.y = mulmod(r.y, orbit[i], s.P);
  r.f = conjugate_product(s.P, r.y);
  r.murphy_eta = murphy_sum_mod(r.y, orbit[k], s.P, s.n).is_zero();
  return r;
}

ZElementReport z_element_check(const Rational& t) {
  FamilySpec s = family_poly(FamilyKind::cubic_a, t);
  ZElementReport r;
  r.t = t;
  r.z = QPoly({-t - 4, -(2 * t + 1), Rational(2)});
  const Rational D = t * t + 3 * t + 9;
  QPoly rel = mulmod(mulmod(r.z, r.z, s.P), r.z, s.P) - r.z.scaled(D) + QPoly(D);
  r.cubic_relation = rem_monic(rel, s.P).is_zero();
  r.sigma_ratio = apply_sigma(s, r.z) == mulmod(QPoly::x(), r.z, s.P);
  return r;
}

QPoly washington_quartic(const Rational& t) {
  const Rational t2 = t * t;
  return QPoly({Rational(1), -t2, -(t2 * t + 2 * t2 + 4 * t + 2), -t2, Rational(1)});
}

bool washington_octic_square(const Rational& t) {
  QPoly P = at(formal(FamilyKind::washington_c).P, t);
  OcticBundle b = build_bundle({t * t + 2, -t * t - 2 * t - 4});
  return P * P == b.T;
}

WashingtonReport washington_equiv(const Rational& t, long bits) {
  if (sgn(t) == 0 || t == -2) throw std::invalid_argument("washington_equiv needs t not in {0, -2}");
  WashingtonReport r;
  r.t = t;
  const Rational t2 = t * t;
  r.P_t = family_poly(FamilyKind::washington_c, t).P;
  r.f_t = washington_quartic(t);
  const QPoly& P = r.P_t;
  auto u_rel = [&](const QPoly& u) {
    return rem_monic(mulmod(u, u, P) - u.scaled(t2 + 2) + QPoly(1L), P).is_zero();
  };
  const QPoly unscaled({Rational(-1), -(t2 * t + 2 * t2 + 3 * t + 3), -(t2 + 2 * t + 3), Rational(-1)});
  r.u_unscaled_relation = u_rel(unscaled);
  r.u_expr = unscaled.divided(t);
  r.u_relation = u_rel(r.u_expr);
  // sigma^2 maps a root r to u / r.
  FamilySpec s = family_poly(FamilyKind::washington_c, t);
  r.u_matches_sigma = mulmod(QPoly::x(), sigma_orbit(s, 3)[2], P) == r.u_expr;

  // v = (u - 1)/t.
  r.x_over_v = mulmod(QPoly::x().scaled(t), invmod(r.u_expr - QPoly(1L), P), P);
  QPoly expected = QPoly({Rational(1), t2 + t + 3, t2 + t + 3, Rational(1)}).divided(t2);
  r.x_over_v_formula = r.x_over_v == expected;
  r.f_at_x_over_v = compose_mod(r.f_t, r.x_over_v, P).is_zero();

  r.xv = QPoly({Rational(-1), t2 + t, Rational(-1)}).divided(t + 2);
  r.P_at_xv = compose_mod(P, r.xv, r.f_t).is_zero();

  QPoly T = build_bundle({t2 + 2, 2 * t}).T;
  QPoly q = QPoly({Rational(-1), -t, Rational(1)});
  auto [quo, rem] = divrem(T, q * q);
  r.repeated_factor = rem.is_zero();
  r.cofactor = quo;
  if (r.repeated_factor && is_integer(t) && num::quartic_irreducible(P, bits) &&
      num::quartic_irreducible(quo, bits))
    r.cofactor_same_field = num::same_field_check(P, quo, bits).relation == num::FieldRelation::same;
  return r;
}

// ---- Shen polynomials ----

ShenPoly shen_build(int n) {
  if (n < 2) throw std::invalid_argument("shen_build needs n > 1");
  ShenPoly s;
  s.n = n;
  std::vector<Rational> q(n + 1, Rational(0)), v(n, Rational(0));
  for (int k = 0; 2 * k <= n; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, 2 * k);
    q[n - 2 * k] = (k % 2 ? -1 : 1) * Rational(c);
  }
  for (int k = 0; 2 * k < n; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, 2 * k + 1);
    v[n - 2 * k - 1] = (k % 2 ? -1 : 1) * Rational(c);
  }
  s.Q = QPoly(q);
  s.V = QPoly(v);
  const Rational scale = pow(Rational(2), static_cast<long>(v2(Integer(n))));
  std::vector<QPoly> c;
  for (int i = 0; i <= n; ++i) c.push_back(QPoly({s.Q.coeff(i), Rational(-s.V.coeff(i) / scale)}));
  s.P = TPoly(std::move(c));
  return s;
}

QPoly shen_poly(int n, const Rational& a) { return at(shen_build(n).P, a); }

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate needs matching sizes");
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis(1L);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly({Rational(-xs[j]), Rational(1)});
      denom *= xs[i] - xs[j];
    }
    out += basis.scaled(Rational(ys[i] / denom));
  }
  return out;
}

QPoly shen_disc_formula(int n) {
  const long v = static_cast<long>(v2(Integer(n)));
  Rational c = Rational(n) * pow(pow(Rational(2), n - 2 - 2 * v) * n, n - 1);
  QPoly base({pow(Rational(4), v), Rational(0), Rational(1)});
  return pow(base, static_cast<unsigned long>(n - 1)).scaled(c);
}

bool shen_disc_check(int n) { return discriminant(shen_build(n).P) == shen_disc_formula(n); }

ShenInvariants shen_invariants(int n) {
  ShenPoly s = shen_build(n);
  ShenInvariants r;
  r.n = n;
  r.monic = s.P.degree() == n && s.P.lead() == QPoly(1L);
  r.parity = true;
  for (int k = 0; k <= n; ++k) {
    QPoly c = s.P.coeff(n - k);
    bool ok = k % 2 == 0 ? c.degree() <= 0 && is_integer(c.coeff(0))
                         : sgn(c.coeff(0)) == 0 && c.degree() <= 1 && is_integer(c.coeff(1));
    r.parity = r.parity && ok;
  }
  Integer g = 0;
  for (const auto& c : s.V.coeffs()) g = gcd(g, c.get_num());
  r.v_gcd = g == pow(Integer(2), v2(Integer(n)));
  r.constant_term = n % 2 == 1 || s.P.coeff(0) == QPoly(Rational((n / 2) % 2 ? -1 : 1));
  r.doubling = shen_build(2 * n).V == (s.Q * s.V).scaled(Rational(2));
  return r;
}

ShenOcticReport shen_octic_check() {
  ShenOcticReport r;
  auto ctx = make_quad_ctx(2, -1, "xi");
  const QuadElem xi = QuadElem::gen(ctx);
  using QE = QuadElem;
  using XPoly = Poly<QE>;
  const MobiusMap<QE> sigma{-xi, QE(-1), QE(1), -xi};
  const MobiusMap<QE> sigma2 = mobius_power(sigma, 2);
  r.formal_identity = mobius_murphy_numerator(sigma, 8).is_zero();

  // y_3 = x sigma(x) sigma^2(x) as a quotient of polynomials over Q(xi).
  const XPoly num = XPoly::x() * XPoly({sigma.b, sigma.a}) * XPoly({sigma2.b, sigma2.a});
  const XPoly den = XPoly({sigma.d, sigma.c}) * XPoly({sigma2.d, sigma2.c});
  // Each f_3 coefficient is integral over Q(xi)[a] and grows at most like
  // |a|^3, so it is a polynomial of degree <= 3 in a.
  r.sigma_permutes = true;
  std::vector<Rational> re, im;
  for (long a = -4; a <= 4; ++a) {
    const Rational A(a);
    r.samples.push_back(A);
    XPoly P = shen_poly(8, A).map([&](const Rational& c) { return QE(ctx, c, 0); });
    XPoly f3 = conjugate_product(P, num, den);
    re.push_back(f3.coeff(5).a());
    im.push_back(f3.coeff(5).b());
    XPoly image = mobius_transform(P, sigma);
    if (image.degree() != 8 || image != P.scaled(image.lead())) r.sigma_permutes = false;
  }
  r.f3_x5_rational = interpolate(r.samples, re);
  r.f3_x5_xi = interpolate(r.samples, im);
  r.f3_degree_ok = r.f3_x5_rational.degree() <= 3 && r.f3_x5_xi.degree() <= 3;
  r.f3_matches_alt_form = r.f3_x5_rational == qpoly({-768, 57, -12, 1}) && r.f3_x5_xi == qpoly({768, 0, 12});
  return r;
}

LambdaReport lambda_cycle_check(int n, const Rational& a, long bits) {
  using num::Complex;
  using num::Real;
  if (n < 2) throw std::invalid_argument("lambda_cycle_check needs n > 1");
  num::PrecisionGuard guard(bits);
  LambdaReport r;
  r.n = n;
  r.a = a;
  r.precision_bits = bits;
  ShenPoly sp = shen_build(n);
  QPoly P = at(sp.P, a);
  num::EmbeddingSet es = num::complex_roots(P, bits);
  const auto& roots = es.roots;

  const Real pi = num::pi();
  const Real xi = boost::multiprecision::cos(pi / n) / boost::multiprecision::sin(pi / n);
  Real min_dist = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Real d = num::abs(roots[i] - roots[j]);
      if (min_dist < 0 || d < min_dist) min_dist = d;
    }
  r.tolerance = min_dist / 2;
  for (const auto& rad : es.radii)
    if (rad * 4 > r.tolerance) throw num::PrecisionError("root radii too large against root separation");

  auto lambda = [&](const Complex& z) { return (Complex(xi) * z - Complex(Real(1))) / (z + Complex(xi)); };
  std::vector<int> perm(n, -1);
  r.max_perm_error = 0;
  bool bijective = true;
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    Complex img = lambda(roots[i]);
    int best = 0;
    Real bd = num::abs(img - roots[0]);
    for (int j = 1; j < n; ++j) {
      Real d = num::abs(img - roots[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    perm[i] = best;
    if (bd > r.max_perm_error) r.max_perm_error = bd;
    if (hit[best]) bijective = false;
    hit[best] = true;
  }
  int len = 0, cur = 0;
  do {
    cur = perm[cur];
    ++len;
  } while (cur != 0 && len <= n);
  r.cyclic = bijective && len == n && r.max_perm_error < r.tolerance;

  // Sample points avoid 0 and +-1, the only rational poles.
  const Real eps = num::two_pow(-bits / 2);
  r.max_sum_error = 0;
  r.max_S = 0;
  r.samples = 10;
  for (int j = 0; j < r.samples; ++j) {
    const Real x = num::to_real(make_rational(3 * j + 2, 7));
    Real sum = 0, y = x;
    for (int k = 0; k < n; ++k) {
      sum += y;
      y = (xi * y - 1) / (y + xi);
    }
    const Real rhs = n * num::to_real(sp.Q(make_rational(3 * j + 2, 7))) /
                     num::to_real(sp.V(make_rational(3 * j + 2, 7)));
    Real err = boost::multiprecision::abs(sum - rhs) / boost::multiprecision::max(Real(1), boost::multiprecision::abs(rhs));
    if (err > r.max_sum_error) r.max_sum_error = err;

    if (n % 4 == 0) {
      // sigma = lambda^-1: x -> (xi x + 1)/(xi - x).
      Real S = 1, term = x, z = x, scale = 1;
      for (int k = 1; k < n; ++k) {
        S += term;
        scale = boost::multiprecision::max(scale, boost::multiprecision::abs(term));
        z = (xi * z + 1) / (xi - z);
        term *= z;
      }
      Real e = boost::multiprecision::abs(S) / scale;
      if (e > r.max_S) r.max_S = e;
    }
  }
  r.sum_ok = r.max_sum_error < eps;
  if (n % 4 == 0) r.s_vanishes = r.max_S < eps;
  return r;
}

Order10Report order10_check(int sample_count) {
  Order10Report r;
  auto ctx = make_quad_ctx(-3, 1, "u");
  using QE = QuadElem;
  const QE u = QE::gen(ctx);
  const MobiusMap<QE> f{QE(-1), QE(-1), QE(1), u};
  r.m10_scalar = mobius_power(f, 10).is_scalar();
  r.m5_scalar = mobius_power(f, 5).is_scalar();
  r.m2_scalar = mobius_power(f, 2).is_scalar();
  for (int k = 1; k <= 9; ++k)
    if (mobius_murphy_numerator(mobius_power(f, k), 10).is_zero()) r.identity_powers.push_back(k);

  auto check = [&](int k) {
    Order10Power out;
    out.k = k;
    const MobiusMap<QE> sigma = mobius_power(f, k);
    out.formal_identity = mobius_murphy_numerator(sigma, 10).is_zero();
    std::vector<MobiusMap<QE>> powers;
    for (unsigned long e = 1; e <= 8; ++e) powers.push_back(mobius_power(sigma, e));
    out.sum_vanishes = true;
    std::vector<Rational> used;
    for (long x0 = 2; static_cast<int>(used.size()) < sample_count; ++x0) {
      const QE x(ctx, Rational(x0), 0);
      std::vector<QE> vals{x};
      bool pole = false;
      for (const auto& M : powers) {
        QE d = M.c * x + M.d;
        if (d.is_zero()) {
          pole = true;
          break;
        }
        vals.push_back((M.a * x + M.b) * d.inverse());
      }
      if (pole) continue;
      used.push_back(Rational(x0));
      QE sum(1), term(1);
      for (int i = 0; i <= 8; ++i) {
        term = term * vals[i];
        sum = sum + term;
      }
      if (used.size() == 1) out.sum_at_first = sum.str();
      if (!sum.is_zero()) out.sum_vanishes = false;
    }
    if (r.samples.empty()) r.samples = used;
    return out;
  };
  r.f3 = check(3);
  r.f7 = check(7);
  return r;
}

}  // namespace murphy
