#include "murphy/twins.hpp"

#include <stdexcept>

namespace murphy {

namespace {

// a + b sqrt(d).
struct QuadNum {
  Rational a, b;
};

QuadNum mul(const QuadNum& x, const QuadNum& y, const Rational& d) {
  return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadNum from_unit(const std::pair<Integer, Integer>& xy) {
  return {make_rational(xy.first, 2), make_rational(xy.second, 2)};
}

// Membership in the maximal order; d = 1 mod 4 allows half-integers of equal parity.
bool integral(const QuadNum& x, const Integer& d) {
  Rational a2 = 2 * x.a, b2 = 2 * x.b;
  if (!is_integer(a2) || !is_integer(b2)) return false;
  if (d % 4 == 1) return (a2.get_num() - b2.get_num()) % 2 == 0;
  return is_integer(x.a) && is_integer(x.b);
}

QPoly specialize(const Poly<BiquadElem>& p, const Rational& S, const Rational& sw, bool& ok) {
  std::vector<Rational> c;
  ok = true;
  for (const auto& e : p.coeffs()) {
    if (sgn(e.c(1) + e.c(2) * sw / S) != 0) ok = false;
    c.push_back(e.c(0) + e.c(3) * sw);
  }
  return QPoly(std::move(c));
}

void flag_degenerate(TwinPair& t) {
  Params p{t.m, t.A};
  if (sgn(y2_of(p)) == 0) {
    t.degenerate = true;
    t.flag = "y^2 = 0";
  } else if (sgn(w2_of(p)) == 0) {
    t.degenerate = true;
    t.flag = "w^2 = 0";
  } else if (t.Psw == t.Psw_bar) {
    t.degenerate = true;
    t.flag = "identical twins";
  }
}

// X = m + A + 2 up to sign.
TwinPair from_norm(const Rational& m, const Rational& X, long j, const std::string& branch, int sign) {
  TwinPair t = twins_from_params({m, -m - 2 + sign * X});
  t.j = j;
  t.branch = branch;
  return t;
}

}  // namespace

TwinPair twins_from_params(const Params& p) {
  if (p.m == 2 || p.m == -2) throw std::invalid_argument("twins need m != +-2");
  OcticBundle b = build_bundle(p);
  auto sw = perfect_square(b.s2 * b.w2);
  if (!sw) throw std::invalid_argument("s^2 w^2 is not a square at " + to_string(p));
  TwinPair t;
  t.m = p.m;
  t.A = p.A;
  bool found = false;
  for (int sign : {1, -1}) {
    bool ok1 = false, ok2 = false;
    QPoly P = specialize(b.Psw, b.s2, sign * *sw, ok1);
    QPoly Pb = specialize(b.Psw_bar, b.s2, sign * *sw, ok2);
    if (ok1 && ok2) {
      t.sw = sign * *sw;
      t.Psw = P;
      t.Psw_bar = Pb;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no sign of sw makes P_sw rational at " + to_string(p));
  if (t.Psw * t.Psw_bar != b.T) throw std::logic_error("P_sw P_sw_bar differs from T at " + to_string(p));
  flag_degenerate(t);
  return t;
}

TwinPair twins_d5(long j, int family) {
  if (family != 1 && family != 2) throw std::invalid_argument("twins_d5 family is 1 or 2");
  auto L = [](long n) { return Rational(lucas_fib(Integer(5), n).L); };
  auto F = [](long n) { return Rational(lucas_fib(Integer(5), n).F); };
  TwinPair t;
  t.m = 3;
  t.j = j;
  if (family == 1) {
    t.A = -5 + L(2 * j);
    t.Psw = QPoly({Rational(1), 5 - L(2 * j - 2), 9 - 5 * F(2 * j - 1), 5 - L(2 * j), Rational(1)});
    t.Psw_bar = QPoly({Rational(1), 5 - L(2 * j + 2), 9 - 5 * F(2 * j + 1), 5 - L(2 * j), Rational(1)});
    t.branch = "sw1";
  } else {
    t.A = -5 - L(2 * j);
    t.Psw = QPoly({Rational(1), 5 + L(2 * j + 2), 9 + 5 * F(2 * j + 1), 5 + L(2 * j), Rational(1)});
    t.Psw_bar = QPoly({Rational(1), 5 + L(2 * j - 2), 9 + 5 * F(2 * j - 1), 5 + L(2 * j), Rational(1)});
    t.branch = "sw2";
  }
  t.sw = 5 * F(2 * j);
  OcticBundle b = build_bundle({t.m, t.A});
  if (t.Psw * t.Psw_bar != b.T) throw std::logic_error("closed-form twins do not multiply to T");
  if (sgn(b.w2) != 0) {
    TwinPair g = twins_from_params({t.m, t.A});
    bool same = (g.Psw == t.Psw && g.Psw_bar == t.Psw_bar) || (g.Psw == t.Psw_bar && g.Psw_bar == t.Psw);
    if (!same) throw std::logic_error("closed-form twins differ from the bundle factors");
    if (abs(g.sw) != abs(t.sw)) throw std::logic_error("closed-form sw differs from the bundle");
  }
  flag_degenerate(t);
  return t;
}

std::optional<std::pair<long, long>> two_squares(long d) {
  for (long a = 1; 2 * a * a <= 2 * d; ++a) {
    long r = d - a * a;
    if (r < 0) break;
    auto b = perfect_square(Rational(r));
    if (b) return std::make_pair(a, b->get_num().get_si());
  }
  return std::nullopt;
}

std::vector<TwinPair> twins_enumerate(long d, long j_min, long j_max) {
  if (d <= 1 || squarefree_status(Integer(d)) == Squarefree::no)
    throw std::invalid_argument("twins_enumerate needs squarefree d > 1");
  auto ab = two_squares(d);
  if (!ab) throw std::invalid_argument("d = " + std::to_string(d) + " is not a sum of two squares");
  if (j_min > j_max) throw std::invalid_argument("empty j range");
  std::vector<TwinPair> out;
  if (d == 5) {
    for (long j = j_min; j <= j_max; ++j)
      for (int fam : {1, 2}) out.push_back(twins_d5(j, fam));
    return out;
  }
  const Integer D(d);
  const Rational Dq(d);
  QuadUnit eps = fundamental_unit(D);
  auto power = [&](long n) { return from_unit(unit_power(eps, n)); };

  if (eps.norm == -1) {
    // m = L_2, X + Y sqrt d = 2 (eps^2 - 1) eps^(2j-1).
    QuadNum e2 = power(2);
    Rational m = 2 * e2.a;
    QuadNum e2m1{e2.a - 1, e2.b};
    for (long j = j_min; j <= j_max; ++j) {
      QuadNum pi = mul(e2m1, power(2 * j - 1), Dq);
      for (int sign : {1, -1}) out.push_back(from_norm(m, 2 * pi.a, j, "norm-1", sign));
    }
    return out;
  }

  // Norm +1: u = +-eps^n with (u - 1)/a integral.
  const long a = ab->first, b = ab->second;
  std::optional<QuadNum> u;
  for (long n = 1; n <= 10000 && !u; ++n) {
    for (int sgn_u : {1, -1}) {
      QuadNum c = power(n);
      c.a *= sgn_u;
      c.b *= sgn_u;
      QuadNum q{(c.a - 1) / a, c.b / a};
      if (integral(q, D)) {
        u = c;
        break;
      }
    }
  }
  if (!u) throw std::runtime_error("no power of eps is 1 mod a");
  Rational m = 2 * u->a;
  QuadNum base = mul(QuadNum{(u->a - 1) / a, u->b / a}, QuadNum{Rational(b), Rational(-1)}, Dq);
  for (long j = j_min; j <= j_max; ++j) {
    QuadNum pi = mul(base, power(j), Dq);
    for (int sign : {1, -1}) out.push_back(from_norm(m, 2 * pi.a, j, "norm+1", sign));
  }
  return out;
}

}  // namespace murphy
