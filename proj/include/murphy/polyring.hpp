#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "murphy/exact.hpp"

namespace murphy {

// Exact ring interface used by Poly. Every coefficient type R must be
// constructible from a long (0 and 1 at least), support + - * and unary -,
// equality, and specialize ring_traits.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static constexpr bool exact_division = true;
  static constexpr bool field = true;
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return Rational(a / b);
  }
  static std::string str(const Rational& a) { return to_string(a); }
  static bool atomic(const Rational& a) { return sgn(a) >= 0; }
};

template <class R>
class Poly {
 public:
  using traits = ring_traits<R>;
  using coeff_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  explicit Poly(const R& constant) {
    if (!traits::is_zero(constant)) c_.push_back(constant);
  }
  explicit Poly(long constant) : Poly(R(constant)) {}
  Poly(std::initializer_list<R> c) : c_(c) { trim(); }

  static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }
  static Poly monomial(const R& coeff, std::size_t k) {
    std::vector<R> c(k + 1, R(0));
    c[k] = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& operator[](std::size_t i) const { return c_.at(i); }

  bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] - o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<R> c;
    c.reserve(a.c_.size());
    for (const auto& v : a.c_) c.push_back(R(-v));
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = R(c[i + j] + a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const R& k) const {
    std::vector<R> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(R(v * k));
    return Poly(std::move(c));
  }
  Poly divided(const R& k) const {
    std::vector<R> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(traits::div(v, k));
    return Poly(std::move(c));
  }
  Poly monic() const { return divided(lead()); }

  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<R> c(k, R(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  Poly derivative() const {
    std::vector<R> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(R(c_[i] * R(static_cast<long>(i))));
    return Poly(std::move(c));
  }

  template <class S>
  S eval(const S& at) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = S(acc * at + S(c_[i]));
    return acc;
  }
  R operator()(const R& at) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = R(acc * at + c_[i]);
    return acc;
  }

  // p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
    return acc;
  }

  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<R>()))> {
    using S = decltype(f(std::declval<R>()));
    std::vector<S> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(f(v));
    return Poly<S>(std::move(c));
  }

  // Reverse coefficient order with respect to degree n >= degree().
  Poly reversed(std::size_t n) const {
    std::vector<R> c(n + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[n - i] = c_[i];
    return Poly(std::move(c));
  }

  // Drop coefficients of degree >= k.
  Poly truncated(std::size_t k) const {
    std::vector<R> c(c_.begin(), c_.begin() + std::min(k, c_.size()));
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
struct ring_traits<Poly<R>> {
  static constexpr bool exact_division = ring_traits<R>::field;
  static constexpr bool field = false;
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static Poly<R> div(const Poly<R>& a, const Poly<R>& b);
  static std::string str(const Poly<R>& a);
  static bool atomic(const Poly<R>& a) {
    return a.degree() <= 0 && (a.is_zero() || ring_traits<R>::atomic(a.lead()));
  }
};

using QPoly = Poly<Rational>;

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned long e) {
  Poly<R> acc(1L), base = p;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Division with remainder; the divisor's leading coefficient must be
// invertible. Leading terms are dropped explicitly so the loop also
// terminates over rings where cancellation is not structural.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  using T = ring_traits<R>;
  std::vector<R> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<R>(), a};
  std::vector<R> q(a.degree() - db + 1, R(0));
  const R& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    R c = T::div(r[k], lb);
    if (T::is_zero(c)) continue;
    q[k - db] = c;
    for (int j = 0; j < db; ++j) r[k - db + j] = R(r[k - db + j] - c * b.coeffs()[j]);
    r[k] = R(0);
  }
  r.resize(db);
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).second;
}

// lc(b)^(deg a - deg b + 1) * a mod b without divisions.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lead();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    R t = r[k];
    for (int j = 0; j < k; ++j) r[j] = R(r[j] * lb);
    for (int j = 0; j < db; ++j) r[k - db + j] = R(r[k - db + j] - t * b.coeffs()[j]);
    r.pop_back();
    --e;
  }
  R scale(1);
  for (int i = 0; i < e; ++i) scale = R(scale * lb);
  return Poly<R>(std::move(r)).scaled(scale);
}

template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

template <class R>
Poly<R> ring_traits<Poly<R>>::div(const Poly<R>& a, const Poly<R>& b) {
  return exact_quotient(a, b);
}

// Monic gcd over a field; gcd(0,0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class R>
struct ExtGcd {
  Poly<R> g, s, t;
};

template <class R>
ExtGcd<R> ext_gcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b, s0(1L), s1, t0, t1(1L);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R l = r0.lead();
  return {r0.divided(l), s0.divided(l), t0.divided(l)};
}

// ---- resultants ----

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& p, const Poly<R>& q) {
  const int m = p.degree(), n = q.degree();
  const int N = m + n;
  Matrix<R> S(N, std::vector<R>(N, R(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[i][i + j] = p.coeffs()[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[n + i][i + j] = q.coeffs()[n - j];
  return S;
}

// Fraction-free Gaussian elimination with row pivoting.
template <class R>
R det_bareiss(Matrix<R> M) {
  using T = ring_traits<R>;
  const std::size_t n = M.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(M[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && T::is_zero(M[piv][k])) ++piv;
      if (piv == n) return R(0);
      std::swap(M[k], M[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = T::div(R(M[i][j] * M[k][k] - M[i][k] * M[k][j]), prev);
      M[i][k] = R(0);
    }
    prev = M[k][k];
  }
  return negate ? R(-M[n - 1][n - 1]) : M[n - 1][n - 1];
}

// Division-free characteristic-polynomial route; needs only ring operations.
template <class R>
R det_berkowitz(const Matrix<R>& A) {
  const std::size_t n = A.size();
  std::vector<R> v{R(1)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<R> t(r + 2, R(0));
    t[0] = R(1);
    t[1] = R(-A[r][r]);
    std::vector<R> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = A[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      R dot(0);
      for (std::size_t i = 0; i < r; ++i) dot = R(dot + A[r][i] * col[i]);
      t[k + 2] = R(-dot);
      std::vector<R> next(r, R(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = R(next[i] + A[i][j] * col[j]);
      col = std::move(next);
    }
    std::vector<R> w(r + 2, R(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] = R(w[i] + t[i - j] * v[j]);
    v = std::move(w);
  }
  return (n % 2) ? R(-v[n]) : v[n];
}

namespace detail {

template <class R>
R rpow(const R& a, long e) {
  R acc(1), base = a;
  while (e > 0) {
    if (e & 1) acc = R(acc * base);
    e >>= 1;
    if (e) base = R(base * base);
  }
  return acc;
}

template <class R>
bool trivial_resultant(const Poly<R>& p, const Poly<R>& q, R& out) {
  if (p.is_zero() || q.is_zero()) {
    out = R(0);
    return true;
  }
  if (q.degree() == 0) {
    out = rpow(q.lead(), p.degree());
    return true;
  }
  if (p.degree() == 0) {
    out = rpow(p.lead(), q.degree());
    return true;
  }
  return false;
}

}  // namespace detail

// Subresultant pseudo-remainder sequence without content removal.
template <class R>
R resultant_subresultant(Poly<R> A, Poly<R> B) {
  using T = ring_traits<R>;
  R out(0);
  if (detail::trivial_resultant(A, B, out)) return out;
  bool negate = false;
  if (A.degree() < B.degree()) {
    if ((A.degree() % 2) && (B.degree() % 2)) negate = true;
    std::swap(A, B);
  }
  R g(1), h(1);
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2) && (B.degree() % 2)) negate = !negate;
    Poly<R> Rm = pseudo_rem(A, B);
    A = std::move(B);
    if (Rm.is_zero()) return R(0);
    B = Rm.divided(R(g * detail::rpow(h, delta)));
    g = A.lead();
    if (delta == 0)
      ;  // h unchanged
    else
      h = T::div(detail::rpow(g, delta), detail::rpow(h, delta - 1));
    if (B.degree() == 0) break;
  }
  const int da = A.degree();
  R res = T::div(detail::rpow(B.lead(), da), detail::rpow(h, da - 1));
  return negate ? R(-res) : res;
}

template <class R>
R resultant_bareiss(const Poly<R>& p, const Poly<R>& q) {
  R out(0);
  if (detail::trivial_resultant(p, q, out)) return out;
  return det_bareiss(sylvester_matrix(p, q));
}

template <class R>
R resultant_berkowitz(const Poly<R>& p, const Poly<R>& q) {
  R out(0);
  if (detail::trivial_resultant(p, q, out)) return out;
  return det_berkowitz(sylvester_matrix(p, q));
}

// Res(p,q) = lc(p)^deg q * prod q(roots of p).
template <class R>
R resultant(const Poly<R>& p, const Poly<R>& q) {
  if constexpr (ring_traits<R>::exact_division)
    return resultant_subresultant(p, q);
  else
    return resultant_berkowitz(p, q);
}

// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
template <class R>
R discriminant(const Poly<R>& p) {
  const long n = p.degree();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  R r = ring_traits<R>::div(resultant(p, p.derivative()), p.lead());
  return ((n * (n - 1) / 2) % 2) ? R(-r) : r;
}

// ---- linear fractional maps ----

template <class R>
struct MobiusMap {
  R a, b, c, d;  // x -> (a x + b)/(c x + d)

  R det() const { return R(a * d - b * c); }
  // (this o other)(x) = this(other(x)).
  MobiusMap after(const MobiusMap& o) const {
    return {R(a * o.a + b * o.c), R(a * o.b + b * o.d), R(c * o.a + d * o.c),
            R(c * o.b + d * o.d)};
  }
  bool is_scalar() const {
    using T = ring_traits<R>;
    return T::is_zero(b) && T::is_zero(c) && a == d && !T::is_zero(a);
  }
};

template <class R>
MobiusMap<R> mobius_power(const MobiusMap<R>& M, unsigned long e) {
  MobiusMap<R> acc{R(1), R(0), R(0), R(1)}, base = M;
  while (e) {
    if (e & 1) acc = acc.after(base);
    e >>= 1;
    if (e) base = base.after(base);
  }
  return acc;
}

// (c x + d)^deg p * p((a x + b)/(c x + d)).
template <class R>
Poly<R> mobius_transform(const Poly<R>& p, const MobiusMap<R>& M) {
  if (ring_traits<R>::is_zero(M.det())) throw std::domain_error("degenerate linear fractional map");
  if (p.is_zero()) return p;
  const int n = p.degree();
  const Poly<R> num({M.b, M.a}), den({M.d, M.c});
  std::vector<Poly<R>> dp(n + 1);
  dp[0] = Poly<R>(1L);
  for (int i = 1; i <= n; ++i) dp[i] = dp[i - 1] * den;
  Poly<R> acc, np(1L);
  for (int i = 0; i <= n; ++i) {
    acc += (np * dp[n - i]).scaled(p.coeffs()[i]);
    np = np * num;
  }
  return acc;
}

// Monic polynomial whose roots are num(y)/den(y) over the roots y of P:
// Res_y(P(y), x den(y) - num(y)) normalized.
template <class R>
Poly<R> conjugate_product(const Poly<R>& P, const Poly<R>& num, const Poly<R>& den) {
  if (P.degree() < 1) throw std::domain_error("conjugate_product needs deg P >= 1");
  if (ring_traits<R>::is_zero(resultant(P, den)))
    throw std::domain_error("denominator not invertible modulo P");
  using PR = Poly<R>;
  std::vector<PR> py, hy;
  for (const auto& c : P.coeffs()) py.push_back(PR(c));
  const std::size_t len = std::max(num.size(), den.size());
  for (std::size_t i = 0; i < len; ++i) hy.push_back(PR({R(-num.coeff(i)), den.coeff(i)}));
  PR r = resultant(Poly<PR>(std::move(py)), Poly<PR>(std::move(hy)));
  return r.monic();
}

template <class R>
Poly<R> conjugate_product(const Poly<R>& P, const Poly<R>& g) {
  return conjugate_product(P, g, Poly<R>(1L));
}

// ---- arithmetic modulo a monic polynomial ----

// Remainder modulo monic P, subtracting and then dropping the top term so it
// also works over semirings without exact cancellation.
template <class R>
Poly<R> rem_monic(const Poly<R>& a, const Poly<R>& P) {
  const int n = P.degree();
  if (n < 1) throw std::domain_error("modulus must have positive degree");
  if (a.degree() < n) return a;
  std::vector<R> r = a.coeffs();
  for (int k = a.degree(); k >= n; --k) {
    R t = r[k];
    for (int j = 0; j < n; ++j) r[k - n + j] = R(r[k - n + j] - t * P.coeffs()[j]);
    r.pop_back();
  }
  return Poly<R>(std::move(r));
}

template <class R>
Poly<R> mulmod(const Poly<R>& a, const Poly<R>& b, const Poly<R>& P) {
  return rem_monic(a * b, P);
}

template <class R>
Poly<R> powmod(Poly<R> a, unsigned long e, const Poly<R>& P) {
  Poly<R> acc = rem_monic(Poly<R>(1L), P);
  a = rem_monic(a, P);
  while (e) {
    if (e & 1) acc = mulmod(acc, a, P);
    e >>= 1;
    if (e) a = mulmod(a, a, P);
  }
  return acc;
}

// Inverse of a modulo P over a field; throws if gcd(a, P) != 1.
template <class R>
Poly<R> invmod(const Poly<R>& a, const Poly<R>& P) {
  auto eg = ext_gcd(a % P, P);
  if (eg.g.degree() != 0) throw std::domain_error("element not invertible modulo P");
  return eg.s % P;
}

// g(h(x)) mod P.
template <class R>
Poly<R> compose_mod(const Poly<R>& g, const Poly<R>& h, const Poly<R>& P) {
  Poly<R> hr = rem_monic(h, P), acc;
  for (std::size_t i = g.size(); i-- > 0;) acc = rem_monic(acc * hr + Poly<R>(g.coeffs()[i]), P);
  return acc;
}

// ---- rational-coefficient utilities ----

// Square-free factorization p = c * prod f_i^i (Yun); entry i-1 holds f_i.
std::vector<QPoly> squarefree_factors(const QPoly& p);

// Distinct real roots via a Sturm sequence.
int sturm_real_roots(const QPoly& p);

// Real roots counted with multiplicity.
int real_roots_with_multiplicity(const QPoly& p);

// "c0, c1, ..., cn" with rationals as num/den; zero polynomial is "".
std::string to_text(const QPoly& p);
QPoly from_text(const std::string& text);

QPoly qpoly(std::initializer_list<long> ascending);
QPoly qpoly_desc(std::initializer_list<long> descending);

template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
  using T = ring_traits<R>;
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const R& c = p.coeffs()[i];
    if (T::is_zero(c)) continue;
    std::string cs = T::str(c);
    bool neg = !cs.empty() && cs[0] == '-' && T::atomic(R(-c));
    if (neg) cs = T::str(R(-c));
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const bool simple = T::atomic(c) || neg;
    if (i == 0) {
      out += simple ? cs : "(" + cs + ")";
      continue;
    }
    if (cs != "1") out += (simple ? cs : "(" + cs + ")") + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

template <class R>
std::string ring_traits<Poly<R>>::str(const Poly<R>& a) {
  return to_string(a, "t");
}

}  // namespace murphy
