#include "murphy/classify.hpp"

#include <stdexcept>

namespace murphy {

namespace {

bool sq(const Rational& x) { return is_square(x); }

// Zero generators stand in as 1 so the square tests stay multiplicative.
Rational nz(const Rational& x) { return sgn(x) == 0 ? Rational(1) : x; }

Signature from_real(int real) { return {real, (8 - real) / 2}; }

Signature sturm_signature(const Params& p) {
  OcticBundle b = build_bundle(p);
  return from_real(real_roots_with_multiplicity(b.T));
}

// Washington parameter t with m = t^2 + 2 when w = 0.
Rational washington_t(const Params& p) { return -(p.m + 2 + p.A) / 2; }

bool in_list(const Params& p, std::initializer_list<std::pair<long, long>> xs) {
  for (auto [m, A] : xs)
    if (p.m == m && p.A == A) return true;
  return false;
}

void classify_cyclic_t(Classification& c, const Rational& t, const std::string& how) {
  if (is_square(t * t + 4)) {
    c.group = "degenerate(" + how + ", t^2+4 square)";
    c.notes.push_back("P_t is reducible");
    return;
  }
  c.group = "C4";
  c.notes.push_back(how + " with t = " + to_string(t));
}

void classify_degree_two(Classification& c) {
  const Rational& m = c.params.m;
  const Rational& A = c.params.A;
  if (A == -(m + 2) / 2) {
    Rational r1 = (m - 2) * (m - 2) - 16, r2 = (m - 4) * (m - 4) - 4;
    c.notes.push_back("dihedral divisor d=-2: L = Q(sqrt(" + to_string(r1) + "), sqrt(" +
                      to_string(r2) + "))");
    if (sgn(r1) != 0 && sgn(r2) != 0 && !sq(r1) && !sq(r2) && !sq(r1 * r2)) {
      c.group = "V4";
      c.notes.push_back("degenerate dihedral case d=-2");
      return;
    }
  }
  if (A == -3) {
    QPoly pw = dihedral_quartic(m, -1);
    Rational disc = discriminant(pw);
    if (sgn(disc) != 0 && sq(disc) && !pw.is_zero()) {
      c.group = "V4";
      c.notes.push_back("dihedral divisor d=-1 with disc(P_w) a square");
      return;
    }
  }
  c.group = "degenerate(degE=2)";
  if (in_list(c.params, {{-3, -4}, {-7, 8}, {-66, 13}}))
    c.notes.push_back("y rational: twins define the same C4 extension");
  else if (in_list(c.params, {{-3, 5}, {-7, -3}, {-66, 51}}))
    c.notes.push_back("s^2 y^2 square: G is C4 and P_w is not dihedral");
  else
    c.notes.push_back("no group label assigned for [E:Q]=2");
}

}  // namespace

bool Classification::abelian() const {
  return group == "C4" || group == "C4xC2" || group == "C4_twins" || group == "V4";
}

std::array<bool, 7> square_flags(const Rational& s2, const Rational& w2, const Rational& y2) {
  Rational s = nz(s2), w = nz(w2), y = nz(y2);
  return {sq(s), sq(w), sq(y), sq(s * w), sq(s * y), sq(w * y), sq(s * w * y)};
}

int degree_E(const std::array<bool, 7>& f) {
  int squares = 0;
  for (bool b : f) squares += b;
  // The square products form a subgroup of order 2^(3-r) in (Z/2)^3.
  switch (squares) {
    case 0: return 8;
    case 1: return 4;
    case 3: return 2;
    case 7: return 1;
  }
  throw std::logic_error("square flags are not a subgroup");
}

Rational monster_mu(const Params& p) {
  auto ctx = make_biquad_ctx(p.m, p.A);
  const bool pm2 = p.m == 2 || p.m == -2;
  const Rational sc = pm2 ? Rational(0) : Rational(1, 2);
  struct Q {
    BiquadElem b, c;
  };
  auto quad = [&](int ss, int ws) {
    return Q{BiquadElem(ctx, -p.A / 2, ss * sc, Rational(-ws, 2), 0),
             BiquadElem(ctx, p.m / 2, ss * sc, 0, 0)};
  };
  auto res = [](const Q& f, const Q& g) {
    BiquadElem dc = f.c - g.c;
    return dc * dc + (f.b - g.b) * (f.b * g.c - g.b * f.c);
  };
  BiquadElem mu = res(quad(1, 1), quad(-1, -1)) * res(quad(1, -1), quad(-1, 1));
  if (!mu.is_rational()) throw std::logic_error("mu is not rational");
  return mu.rational_part();
}

Rational signature_discriminant(const Params& p) {
  const Rational& m = p.m;
  const Rational& A = p.A;
  return abs((A + 4) * (A + 4) + m * A * (A + 4) + A * A);
}

Signature signature(const Params& p) {
  Regime r = regime(p);
  if (r != Regime::generic) return sturm_signature(p);
  Rational s2 = s2_of(p), w2 = w2_of(p), y2 = y2_of(p);
  if (sgn(w2) == 0) {
    Rational t1 = abs(washington_t(p) + 1);
    if (t1 > 1) return from_real(8);
    if (t1 < 1) return from_real(0);
    return sturm_signature(p);
  }
  if (sgn(y2) == 0) return sturm_signature(p);
  if (sgn(s2) < 0 || sgn(w2) < 0) return from_real(0);
  if (sgn(y2) < 0) return from_real(4);
  if (p.m < -2) return from_real(8);
  Rational K = signature_discriminant(p);
  if (K > 16) return from_real(8);
  if (K < 16) return from_real(0);
  throw std::logic_error("signature boundary |(A+4)^2 + mA(A+4) + A^2| = 16 at " + to_string(p));
}

Classification classify(const Params& p) {
  Classification c;
  c.params = p;
  c.s2 = s2_of(p);
  c.w2 = w2_of(p);
  c.y2 = y2_of(p);
  c.square_flags = square_flags(c.s2, c.w2, c.y2);
  c.degE = degree_E(c.square_flags);
  const auto& f = c.square_flags;
  c.T_irreducible = !f[kS] && !f[kW] && !f[kSW] && sgn(c.w2) != 0;
  if (f[kSW] || sgn(c.w2) == 0)
    c.Psw_irreducible_over_Q = !f[kS] && sgn(c.y2) != 0 && regime(p) == Regime::generic;
  c.signature = signature(p);
  c.totally_real = c.signature.real_roots == 8;

  switch (regime(p)) {
    case Regime::m_is_2:
      c.group = "degenerate(m=2)";
      c.notes.push_back("T = p^2 with p = (x+1)^2 (x^2 - (A+2)x + 1)");
      return c;
    case Regime::m_is_minus_2: {
      Rational d = p.A * p.A + 16;
      if (sq(d)) {
        c.group = "degenerate(m=-2, A^2+16 square)";
      } else {
        c.group = "C4";
        c.notes.push_back("T = p^2 with p the simplest quartic x^4 - Ax^3 - 6x^2 + Ax + 1");
      }
      return c;
    }
    case Regime::s_square:
      c.group = "degenerate(m^2-4 square)";
      return c;
    case Regime::generic:
      break;
  }

  Rational mu = monster_mu(p);
  if (sgn(mu) == 0) {
    c.group = "degenerate(" + mu_zero_case(p).value_or("mu=0") + ")";
    return c;
  }
  if (sgn(c.w2) == 0 && sgn(c.y2) == 0) {
    c.group = "degenerate(w=y=0)";
    c.notes.push_back("self-related octic T = (x^2+2x-1)^4");
    return c;
  }
  if (sgn(c.w2) == 0) {
    classify_cyclic_t(c, washington_t(p), "Washington case");
    return c;
  }
  if (sgn(c.y2) == 0) {
    classify_cyclic_t(c, p.A / 2, "related octic in Washington case");
    return c;
  }

  switch (c.degE) {
    case 8:
      c.group = "8T11";
      break;
    case 4:
      if (f[kSWY]) {
        c.group = "Q8";
        c.notes.push_back("quaternion fixed field Q(swy) = Q");
      } else if (f[kSW]) {
        c.group = "C4_twins";
        Rational sw = *perfect_square(c.s2 * c.w2);
        c.notes.push_back("sw = " + to_string(sw) + ": P_sw and its conjugate are Murphy's twins");
      } else if (f[kW] || f[kY]) {
        c.group = "D8(8)";
        c.notes.push_back(std::string(f[kW] ? "w" : "y") + " rational: quartic factors have group D4_quartic");
        c.notes.push_back("T defines the octic splitting field");
      } else {
        c.group = "C4xC2";
        c.notes.push_back(std::string(f[kSY] ? "sy" : "wy") + " rational");
      }
      break;
    case 2:
      classify_degree_two(c);
      break;
    default:
      c.group = "degenerate(degE=" + std::to_string(c.degE) + ")";
  }
  return c;
}

Rational dihedral_A(const Rational& m, const Rational& d) {
  if (sgn(d) == 0) throw std::invalid_argument("dihedral divisor d must be nonzero");
  return -m - 2 - d - (m - 2) / d;
}

QPoly dihedral_quartic(const Rational& m, const Rational& d) {
  if (sgn(d) == 0) throw std::invalid_argument("dihedral divisor d must be nonzero");
  return QPoly({Rational(1), (d + 1) * m + 2, (d + 2) * m + d * d + 2 * d + 2, m + 2 * d + 2,
                Rational(1)});
}

bool totally_real_special(RealCase rc, const Params& p, long d) {
  if (!is_integer(p.m) || (rc != RealCase::dihedral_divisor && !is_integer(p.A)))
    throw std::invalid_argument("totally_real_special needs integer parameters");
  const Rational& m = p.m;
  if (m == 2 || m == -2) throw std::invalid_argument("m = +-2 excluded");
  Params q = p;
  if (rc == RealCase::dihedral_divisor) {
    if (d == 0) throw std::invalid_argument("divisor d must be nonzero");
    Rational md = m - 2;
    if (!is_integer(md / d) || Rational(d) * d > abs(md))
      throw std::invalid_argument("d must divide m-2 with d^2 <= |m-2|");
    q.A = dihedral_A(m, d);
  }
  Rational s2 = s2_of(q), w2 = w2_of(q), y2 = y2_of(q);
  if (sgn(s2 * w2 * y2) == 0) throw std::invalid_argument("s^2 w^2 y^2 must be nonzero");
  auto integral = [](const Rational& x2) {
    auto r = perfect_square(abs(x2));
    return r && is_integer(*r);
  };
  // Real square roots of negative squares do not occur in Z, so sign checks
  // come first.
  switch (rc) {
    case RealCase::yw_integral:
      if (sgn(y2 * w2) < 0 || !integral(y2 * w2)) throw std::invalid_argument("yw is not in Z");
      return !in_list(q, {{1, -4}, {1, 1}, {4, -3}});
    case RealCase::swy_integral:
      if (sgn(s2 * w2 * y2) < 0 || !integral(s2 * w2 * y2))
        throw std::invalid_argument("swy is not in Z");
      return true;
    case RealCase::sw_integral:
      if (sgn(s2 * w2) < 0 || !integral(s2 * w2)) throw std::invalid_argument("sw is not in Z");
      return !in_list(q, {{7, -4}, {7, 1}});
    case RealCase::dihedral_divisor: {
      const long mm = m.get_num().get_si();
      if ((d == 1 || d == -1) && (mm == -1 || mm == 0 || mm == 1)) return false;
      if (d == -1 && mm >= 4) return false;
      return true;
    }
  }
  return true;
}

}  // namespace murphy
