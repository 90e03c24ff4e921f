#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace murphy {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den = 1);

// Accepts "p", "-p", "+p", "p/q" with q != 0. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Integers print bare, others as "num/den".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

// Nonnegative exact square root, if q is the square of a rational.
std::optional<Rational> perfect_square(const Rational& q);
bool is_square(const Rational& q);

Rational pow(const Rational& q, long e);
Integer pow(const Integer& z, unsigned long e);

// 2-adic valuation of a nonzero integer.
unsigned long v2(const Integer& n);

enum class Squarefree { yes, no, probable };

// Trial division by primes up to 10^6; a cofactor above 10^12 that is not a
// perfect square is reported as probable.
Squarefree squarefree_status(const Integer& n);

// Fundamental discriminant of Q(sqrt(n)) for a nonzero, non-square integer n.
Integer fundamental_discriminant(const Integer& n);

// Squarefree kernel and cofactor: n = core * k^2 with core squarefree.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

// Unit (x + y*sqrt(d))/2 of the maximal order of Q(sqrt d).
struct QuadUnit {
  Integer d;
  Integer x;
  Integer y;
  int norm = 1;
};

inline constexpr long kUnitPeriodCap = 1000000;

// Continued-fraction period of the reduced irrational (b + sqrt D)/2,
// D the field discriminant. Throws std::invalid_argument for d <= 1 or d
// not squarefree, std::runtime_error past kUnitPeriodCap steps.
QuadUnit fundamental_unit(const Integer& d);

// eps^n = (X + Y sqrt d)/2 for any integer n.
std::pair<Integer, Integer> unit_power(const QuadUnit& eps, long n);

struct LucasFib {
  Integer d;
  long n = 0;
  Integer L;
  Integer F;
};

// eps^n = (L_n + F_n (eps - conj eps))/2.
LucasFib lucas_fib(const Integer& d, long n);
LucasFib lucas_fib(const QuadUnit& eps, long n);

}  // namespace murphy
