#include "murphy/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "murphy/classify.hpp"

namespace murphy::num {

namespace {

unsigned digits10_for(long bits) { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2; }

Integer floor_to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
  return z;
}

Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

Complex cis(const Real& t) { return Complex(cos(t), sin(t)); }

struct Certified {
  bool ok = false;
  std::vector<Real> radii;
};

// Weierstrass inclusion disks; evaluation error of p(z) is bounded by a
// relative 2^-(bits-20) of the absolute-value polynomial.
Certified certify(const std::vector<Real>& a, const std::vector<Complex>& z, long bits) {
  const std::size_t n = z.size();
  Certified c;
  c.radii.resize(n);
  Real slack = two_pow(-(bits - 20));
  Real widen = 1 + two_pow(-20);
  for (std::size_t k = 0; k < n; ++k) {
    Complex v(1);
    Real av = 1, az = abs(z[k]);
    for (std::size_t i = n; i-- > 0;) {
      v = v * z[k] + Complex(a[i]);
      av = av * az + abs(a[i]);
    }
    Complex prod(1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) prod = prod * (z[k] - z[j]);
    Real ap = abs(prod);
    if (ap == 0) return c;
    c.radii[k] = Real(n) * (abs(v) + slack * av) / ap * widen + slack * (1 + az);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) <= c.radii[i] + c.radii[j]) return c;
  c.ok = true;
  return c;
}

// Aberth iteration on the monic polynomial with lower coefficients a.
bool aberth(const std::vector<Real>& a, std::vector<Complex>& z, long bits) {
  const std::size_t n = a.size();
  Real bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Real t = pow(abs(a[i]), Real(1) / Real(n - i));
    if (t > bound) bound = t;
  }
  bound = 2 * bound + 1;
  Complex centre(-a[n - 1] / Real(n));
  z.assign(n, Complex());
  for (std::size_t k = 0; k < n; ++k)
    z[k] = centre + Complex(bound) * cis(2 * pi() * Real(k) / Real(n) + Real(0.4));
  Real stop = two_pow(-(bits - 8));
  const int max_iter = 2000 + 50 * static_cast<int>(n);
  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      Complex v(1), d(0);
      for (std::size_t i = n; i-- > 0;) {
        d = d * z[k] + v;
        v = v * z[k] + Complex(a[i]);
      }
      if (norm2(v) == 0) continue;
      Complex ratio = v / d;
      Complex sum(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum = sum + Complex(1) / (z[k] - z[j]);
      Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] = z[k] - step;
      if (abs(step) > stop * (1 + abs(z[k]))) done = false;
    }
    if (done) return true;
  }
  return false;
}

bool try_roots(const QPoly& p, long bits, EmbeddingSet& out) {
  PrecisionGuard g(bits);
  const std::size_t n = p.degree();
  std::vector<Real> a(n);
  Rational lead = p.lead();
  for (std::size_t i = 0; i < n; ++i) a[i] = to_real(p.coeffs()[i] / lead);
  std::vector<Complex> z;
  if (!aberth(a, z, bits)) return false;
  Certified c = certify(a, z, bits);
  if (!c.ok) return false;

  std::vector<std::size_t> real_idx, upper_idx;
  for (std::size_t k = 0; k < n; ++k) {
    const Real& r = c.radii[k];
    if (abs(z[k].im) > r) {
      if (z[k].im > 0) upper_idx.push_back(k);
      continue;
    }
    Complex zc = conj(z[k]);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && abs(zc - z[j]) <= r + c.radii[j]) return false;
    real_idx.push_back(k);
  }
  if (real_idx.size() + 2 * upper_idx.size() != n) return false;
  std::sort(real_idx.begin(), real_idx.end(), [&](auto x, auto y) { return z[x].re < z[y].re; });
  std::sort(upper_idx.begin(), upper_idx.end(), [&](auto x, auto y) { return z[x].re < z[y].re; });

  out.poly = p;
  out.precision_bits = bits;
  out.roots.clear();
  out.radii.clear();
  out.is_real.clear();
  for (auto k : real_idx) {
    out.roots.push_back(Complex(z[k].re, Real(0)));
    out.radii.push_back(c.radii[k]);
    out.is_real.push_back(true);
  }
  for (auto k : upper_idx) {
    for (int s = 0; s < 2; ++s) {
      out.roots.push_back(s ? conj(z[k]) : z[k]);
      out.radii.push_back(c.radii[k]);
      out.is_real.push_back(false);
    }
  }
  out.real_count = static_cast<int>(real_idx.size());
  return true;
}

// Index of the conjugate of each root in an EmbeddingSet.
std::vector<std::size_t> conjugate_index(const EmbeddingSet& e) {
  std::vector<std::size_t> c(e.roots.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(e.real_count); ++i) c[i] = i;
  for (std::size_t i = e.real_count; i < e.roots.size(); i += 2) {
    c[i] = i + 1;
    c[i + 1] = i;
  }
  return c;
}

// Gaussian elimination with partial pivoting; false if singular.
bool solve(std::vector<std::vector<Complex>> M, std::vector<Complex> b, std::vector<Complex>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (norm2(M[r][col]) > norm2(M[piv][col])) piv = r;
    if (norm2(M[piv][col]) == 0) return false;
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = M[r][col] / M[col][col];
      for (std::size_t k = col; k < n; ++k) M[r][k] = M[r][k] - f * M[col][k];
      b[r] = b[r] - f * b[col];
    }
  }
  x.assign(n, Complex());
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc = acc - M[i][k] * x[k];
    x[i] = acc / M[i][i];
  }
  return true;
}

QPoly squarefree_part(const QPoly& p) { return exact_quotient(p, gcd(p, p.derivative())).monic(); }

struct FieldSearch {
  std::optional<QPoly> witness;
  long bits = 0;
};

constexpr std::size_t kMaxAssignments = 300000;

// Tries every conjugation-compatible assignment of Q-roots to P-roots at the
// given precision. inconclusive is set when a reconstructed candidate fails
// the exact check.
std::optional<QPoly> search_at(const QPoly& P, const QPoly& Q, long bits, bool& inconclusive) {
  EmbeddingSet ep = complex_roots(P, bits), eq = complex_roots(Q, bits);
  PrecisionGuard g(bits);
  const std::size_t n = ep.roots.size();
  auto cq = conjugate_index(eq);

  std::vector<std::size_t> real_targets;
  for (std::size_t j = 0; j < eq.roots.size(); ++j)
    if (eq.is_real[j]) real_targets.push_back(j);
  if (ep.real_count > 0 && real_targets.empty()) return std::nullopt;

  // Slots: each real root of P, then the upper member of each complex pair.
  std::vector<std::size_t> slots, choices;
  for (std::size_t i = 0; i < static_cast<std::size_t>(ep.real_count); ++i) {
    slots.push_back(i);
    choices.push_back(real_targets.size());
  }
  for (std::size_t i = ep.real_count; i < n; i += 2) {
    slots.push_back(i);
    choices.push_back(eq.roots.size());
  }
  double total = 1;
  for (auto c : choices) total *= static_cast<double>(c);
  if (total > kMaxAssignments) throw std::invalid_argument("root_in_field: too many root assignments");

  std::vector<std::vector<Complex>> V(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Complex pw(1);
    for (std::size_t l = 0; l < n; ++l) {
      V[i][l] = pw;
      pw = pw * ep.roots[i];
    }
  }
  const Integer cap = Integer(1) << (bits / 4);
  const Real tol = two_pow(-(3 * bits / 4));

  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    std::vector<Complex> b(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::size_t i = slots[s];
      if (ep.is_real[i]) {
        b[i] = eq.roots[real_targets[pick[s]]];
      } else {
        b[i] = eq.roots[pick[s]];
        b[i + 1] = eq.roots[cq[pick[s]]];
      }
    }
    std::vector<Complex> c;
    if (solve(V, b, c)) {
      std::vector<Rational> coeffs;
      bool ok = true;
      for (const auto& v : c) {
        if (abs(v.im) > tol * (1 + abs(v.re))) {
          ok = false;
          break;
        }
        auto q = reconstruct_rational(v.re, cap, tol * (1 + abs(v.re)));
        if (!q) {
          ok = false;
          break;
        }
        coeffs.push_back(*q);
      }
      if (ok) {
        QPoly cand(coeffs);
        if (compose_mod(Q, cand, P).is_zero()) return cand;
        inconclusive = true;
      }
    }
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == choices[s]) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return std::nullopt;
}

FieldSearch find_root(const QPoly& P0, const QPoly& Q0, long bits) {
  if (P0.degree() < 1 || Q0.degree() < 1) throw std::invalid_argument("root_in_field needs nonconstant polynomials");
  QPoly P = P0.monic(), Q = squarefree_part(Q0);
  if (gcd(P, P.derivative()).degree() > 0) throw std::invalid_argument("field polynomial is not squarefree");
  for (long b = std::max(bits, 64L);; b *= 2) {
    bool inconclusive = false;
    auto w = search_at(P, Q, b, inconclusive);
    if (w) return {w, b};
    if (!inconclusive) return {std::nullopt, b};
    if (b * 2 > kPrecisionCeiling)
      throw PrecisionError("root_in_field: reconstruction inconclusive at " + std::to_string(b) + " bits");
  }
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

long precision_from_env() {
  const char* v = std::getenv("MURPHY_PRECISION_BITS");
  if (!v) return kDefaultPrecisionBits;
  char* end = nullptr;
  long b = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || b < 32 || b > kPrecisionCeiling) return kDefaultPrecisionBits;
  return b;
}

PrecisionGuard::PrecisionGuard(long bits) : saved_(Real::default_precision()) {
  Real::default_precision(digits10_for(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm2(b);
  if (d == 0) throw std::domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex conj(const Complex& a) { return {a.re, -a.im}; }
Real abs(const Complex& a) { return sqrt(norm2(a)); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex eval(const QPoly& p, const Complex& z) {
  Complex acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + Complex(to_real(p.coeffs()[i]));
  return acc;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real two_pow(long e) { return ldexp(Real(1), static_cast<int>(e)); }

std::optional<Rational> reconstruct_rational(const Real& x, const Integer& max_den, const Real& tol) {
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real y = x;
  Real tiny = two_pow(-static_cast<long>(Real::default_precision() * 3));
  for (int step = 0; step < 100000; ++step) {
    Integer a = floor_to_integer(y);
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Real frac = y - Real(a.get_str());
    if (abs(frac) < tiny) break;
    y = 1 / frac;
  }
  if (k1 == 0) return std::nullopt;
  Rational q(h1, k1);
  q.canonicalize();
  if (abs(x - to_real(q)) > tol) return std::nullopt;
  return q;
}

EmbeddingSet complex_roots(const QPoly& p, long bits, long ceiling) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots needs a nonconstant polynomial");
  if (gcd(p, p.derivative()).degree() > 0) throw std::invalid_argument("complex_roots needs a squarefree polynomial");
  EmbeddingSet e;
  if (p.degree() == 1) {
    PrecisionGuard g(bits);
    e.poly = p;
    e.precision_bits = bits;
    e.roots = {Complex(to_real(-p.coeffs()[0] / p.coeffs()[1]), Real(0))};
    e.radii = {Real(0)};
    e.is_real = {true};
    e.real_count = 1;
    return e;
  }
  for (long b = std::max(bits, 64L); b <= ceiling; b *= 2)
    if (try_roots(p, b, e)) return e;
  throw PrecisionError("complex_roots: no certified separation up to " + std::to_string(ceiling) + " bits");
}

int numeric_real_count(const QPoly& p, long bits) {
  auto f = squarefree_factors(p);
  int total = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].degree() > 0) total += static_cast<int>(i + 1) * complex_roots(f[i], bits).real_count;
  return total;
}

std::optional<QPoly> root_in_field(const QPoly& P, const QPoly& Q, long bits) {
  return find_root(P, Q, bits).witness;
}

std::string to_string(FieldRelation r) { return r == FieldRelation::same ? "same" : "different"; }

SameFieldResult same_field_check(const QPoly& P, const QPoly& Q, long bits) {
  if (P.degree() != Q.degree()) throw std::invalid_argument("same_field_check needs equal degrees");
  FieldSearch fs = find_root(P, Q, bits);
  SameFieldResult r;
  r.precision_bits = fs.bits;
  r.denominator_cap_bits = fs.bits / 4;
  r.witness = fs.witness;
  r.relation = fs.witness ? FieldRelation::same : FieldRelation::different;
  return r;
}

QPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic needs n >= 1");
  QPoly f = QPoly::monomial(Rational(1), n) - QPoly(1L);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) f = exact_quotient(f, cyclotomic(d));
  return f;
}

long torsion_order(const QPoly& P, long bits) {
  EmbeddingSet e = complex_roots(P, bits);
  if (e.real_count > 0) return 2;
  const long deg = P.degree();
  // Q(zeta_n) contains sqrt(p*) for odd p | n, and i, sqrt 2 when 4 | n, 8 | n.
  std::map<long, bool> quadratic;
  auto has_sqrt = [&](long D) {
    auto it = quadratic.find(D);
    if (it != quadratic.end()) return it->second;
    bool in = root_in_field(P, QPoly({Rational(-D), Rational(0), Rational(1)}), bits).has_value();
    return quadratic[D] = in;
  };
  for (long n = 60; n > 2; --n) {
    if (deg % euler_phi(n) != 0) continue;
    std::vector<long> need;
    if (n % 4 == 0) need.push_back(-1);
    if (n % 8 == 0) need.push_back(2);
    for (long p = 3, k = n; p <= k; p += 2) {
      if (k % p) continue;
      while (k % p == 0) k /= p;
      need.push_back(p % 4 == 1 ? p : -p);
    }
    if (!std::all_of(need.begin(), need.end(), has_sqrt)) continue;
    if (root_in_field(P, cyclotomic(n), bits)) return n % 2 ? 2 * n : n;
  }
  return 2;
}

bool quartic_irreducible(const QPoly& P, long bits) {
  if (P.degree() != 4) throw std::invalid_argument("quartic_irreducible needs degree 4");
  QPoly M = P.monic();
  if (gcd(M, M.derivative()).degree() > 0) return false;
  EmbeddingSet e = complex_roots(M, bits);
  PrecisionGuard g(e.precision_bits);
  const Integer cap = Integer(1) << (e.precision_bits / 4);
  const Real tol = two_pow(-(e.precision_bits / 2));
  for (std::size_t i = 0; i < 4; ++i) {
    if (!e.is_real[i]) continue;
    auto q = reconstruct_rational(e.roots[i].re, cap, tol);
    if (q && sgn(M(*q)) == 0) return false;
  }
  // The three ways of splitting the roots into two pairs.
  for (int partner = 1; partner < 4; ++partner) {
    Complex a = e.roots[0], b = e.roots[partner];
    Complex s = a + b, p = a * b;
    if (abs(s.im) > tol || abs(p.im) > tol) continue;
    auto qs = reconstruct_rational(s.re, cap, tol * (1 + abs(s.re)));
    auto qp = reconstruct_rational(p.re, cap, tol * (1 + abs(p.re)));
    if (!qs || !qp) continue;
    QPoly f({*qp, Rational(-*qs), Rational(1)});
    if ((M % f).is_zero()) return false;
  }
  return true;
}

UnitReport unit_checks(const Params& p) {
  if (!is_integer(p.m) || !is_integer(p.A)) throw std::invalid_argument("unit_checks needs integer parameters");
  UnitReport r;
  r.params = p;
  OcticBundle b = build_bundle(p);
  r.constant_term_one = b.T.coeff(0) == 1 && b.T.lead() == 1;
  r.T_at_minus1 = b.T(Rational(-1));
  if (r.T_at_minus1 != (p.m - 2) * (p.m - 2)) r.notes.push_back("T(-1) differs from (m-2)^2");
  if (!b.qctx) {
    r.notes.push_back("m = +-2: u is rational");
    r.Ps_at_minus1 = b.p(QuadElem(-1));
    return r;
  }
  QuadElem u = QuadElem::gen(b.qctx);
  r.Ps_at_minus1 = b.p(QuadElem(-1));
  r.u_identity = (u - 1) * (u - 1) == QuadElem(p.m - 2) * u;
  r.norm_r_plus_1 = r.T_at_minus1;
  r.norm_r_plus_u = b.p(-u).norm();
  r.norm_u_minus_1 = (u - 1).norm();
  auto unit = [](const Rational& n) { return n == 1 || n == -1; };
  r.exceptional_triple = unit(r.norm_r_plus_1) && unit(r.norm_r_plus_u) && unit(r.norm_u_minus_1);
  if (r.exceptional_triple) r.notes.push_back("r, r+1, r+u form an exceptional sequence of units");
  return r;
}

ConstellationReport constellation_check(const Rational& m, const Rational& d) {
  ConstellationReport c;
  c.m = m;
  c.d = d;
  c.A = dihedral_A(m, d);
  if (m == 2 || m == -2) throw std::invalid_argument("constellation_check needs m != +-2");
  c.Pw = dihedral_quartic(m, d);
  c.Pw_at_minus1 = c.Pw(Rational(-1));
  auto ctx = make_quad_ctx(m);
  QuadElem u = QuadElem::gen(ctx);
  Poly<QuadElem> q1({u, QuadElem(d + 1) + u, QuadElem(1)});
  // q1 and its conjugate multiply to P_w.
  if (rational_poly(q1 * conj(q1)) != c.Pw) throw std::logic_error("q1 conj(q1) differs from P_w");
  const std::pair<std::string, QuadElem> shifts[] = {
      {"r", QuadElem(0)}, {"r+1", QuadElem(1)}, {"r+1+d", QuadElem(d + 1)}, {"r+u", u},
      {"r+1+d+u", QuadElem(d + 1) + u}};
  c.all_units = true;
  for (const auto& [name, k] : shifts) {
    Rational n = q1(-k).norm();
    c.norms.emplace_back(name, n);
    if (n != 1 && n != -1) c.all_units = false;
  }
  return c;
}

}  // namespace murphy::num
