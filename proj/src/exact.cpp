#include "murphy/exact.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace murphy {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<char> composite(kTrialBound + 1, 0);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kTrialBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= kTrialBound; q += p) composite[q] = 1;
    }
    return out;
  }();
  return primes;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if (neg) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> perfect_square(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return make_rational(rn, rd);
}

bool is_square(const Rational& q) { return perfect_square(q).has_value(); }

Integer pow(const Integer& z, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  return make_rational(pow(q.get_num(), static_cast<unsigned long>(e)),
                       pow(q.get_den(), static_cast<unsigned long>(e)));
}

unsigned long v2(const Integer& n) {
  if (n == 0) throw std::domain_error("v2 of zero");
  return mpz_scan1(n.get_mpz_t(), 0);
}

Squarefree squarefree_status(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return Squarefree::no;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > m) return Squarefree::yes;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return Squarefree::no;
    }
  }
  if (m == 1) return Squarefree::yes;
  Integer bound = Integer(kTrialBound) * kTrialBound;
  if (m <= bound) return Squarefree::yes;
  if (mpz_perfect_square_p(m.get_mpz_t())) return Squarefree::no;
  return Squarefree::probable;
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree part of zero");
  Integer m = abs(n);
  Integer core = 1, k = 1;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) core *= p;
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      k *= r;
    } else {
      core *= m;
    }
  }
  if (n < 0) core = -core;
  return {core, k};
}

Integer fundamental_discriminant(const Integer& n) {
  auto [core, k] = squarefree_decompose(n);
  if (core == 1) throw std::domain_error("square has no quadratic field");
  Integer r = core % 4;
  if (r < 0) r += 4;
  return r == 1 ? core : Integer(4 * core);
}

namespace {

std::pair<Integer, Integer> unit_mul(const Integer& d, const std::pair<Integer, Integer>& a,
                                     const std::pair<Integer, Integer>& b) {
  Integer x = a.first * b.first + d * a.second * b.second;
  Integer y = a.first * b.second + a.second * b.first;
  return {x / 2, y / 2};
}

}  // namespace

QuadUnit fundamental_unit(const Integer& d) {
  if (d <= 1) throw std::invalid_argument("fundamental_unit needs d > 1");
  if (squarefree_status(d) == Squarefree::no)
    throw std::invalid_argument("fundamental_unit needs squarefree d");
  Integer r4 = d % 4;
  const bool one_mod_four = r4 == 1;
  const Integer D = one_mod_four ? d : Integer(4 * d);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
  Integer b = root;
  if ((b - D) % 2 != 0) b -= 1;

  const Integer P0 = b, Q0 = 2;
  Integer P = P0, Q = Q0;
  Integer k2 = 1, k1 = 0;  // convergent denominators k_{i-2}, k_{i-1}
  long period = 0;
  while (true) {
    Integer a = (P + root) / Q;
    Integer k = a * k1 + k2;
    k2 = k1;
    k1 = k;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    ++period;
    if (P == P0 && Q == Q0) break;
    if (period >= kUnitPeriodCap) throw std::runtime_error("continued fraction period exceeds cap");
  }
  // k1 = k_{L-1}, k2 = k_{L-2}; eps = k_{L-1} (b + sqrt D)/2 + k_{L-2}.
  QuadUnit u;
  u.d = d;
  u.x = k1 * b + 2 * k2;
  u.y = one_mod_four ? k1 : Integer(2 * k1);
  u.norm = (period % 2 == 0) ? 1 : -1;
  return u;
}

std::pair<Integer, Integer> unit_power(const QuadUnit& eps, long n) {
  std::pair<Integer, Integer> base{eps.x, eps.y};
  if (n < 0) {
    base = {eps.norm * eps.x, -eps.norm * eps.y};
    n = -n;
  }
  std::pair<Integer, Integer> acc{2, 0};
  while (n > 0) {
    if (n & 1) acc = unit_mul(eps.d, acc, base);
    base = unit_mul(eps.d, base, base);
    n >>= 1;
  }
  return acc;
}

LucasFib lucas_fib(const QuadUnit& eps, long n) {
  auto [X, Y] = unit_power(eps, n);
  LucasFib out;
  out.d = eps.d;
  out.n = n;
  out.L = X;
  if (Y % eps.y != 0) throw std::logic_error("unit power not divisible by eps - conj eps");
  out.F = Y / eps.y;
  return out;
}

LucasFib lucas_fib(const Integer& d, long n) { return lucas_fib(fundamental_unit(d), n); }

}  // namespace murphy
