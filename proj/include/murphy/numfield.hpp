#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "murphy/murphy.hpp"

namespace murphy::num {

using Real = boost::multiprecision::mpfr_float;

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr long kPrecisionCeiling = 8192;

// MURPHY_PRECISION_BITS if set and valid, else 256.
long precision_from_env();

// Sets the working precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex conj(const Complex& a);
Real abs(const Complex& a);

Real to_real(const Rational& q);
Complex eval(const QPoly& p, const Complex& z);
Real pi();
Real two_pow(long e);

// Best rational approximation with denominator <= max_den, accepted only
// when it lies within tol of x.
std::optional<Rational> reconstruct_rational(const Real& x, const Integer& max_den, const Real& tol);

// Roots of a squarefree polynomial with certified inclusion disks. Real roots
// come first in ascending order, then each root with positive imaginary part
// followed by its conjugate.
struct EmbeddingSet {
  QPoly poly;
  long precision_bits = 0;
  std::vector<Complex> roots;
  std::vector<Real> radii;
  std::vector<bool> is_real;
  int real_count = 0;
};

// Throws std::invalid_argument for a non-squarefree or constant input and
// PrecisionError when the ceiling is reached without certification.
EmbeddingSet complex_roots(const QPoly& p, long bits = kDefaultPrecisionBits,
                           long ceiling = kPrecisionCeiling);

// Real roots of p counted with multiplicity, via its squarefree parts.
int numeric_real_count(const QPoly& p, long bits = kDefaultPrecisionBits);

// A polynomial g of degree < deg P with Q(g(x)) = 0 mod P, if one exists
// with coefficients reconstructible below the denominator cap 2^(bits/4).
// Every returned witness is verified exactly.
std::optional<QPoly> root_in_field(const QPoly& P, const QPoly& Q, long bits);

enum class FieldRelation { same, different };
std::string to_string(FieldRelation r);

struct SameFieldResult {
  FieldRelation relation = FieldRelation::different;
  long precision_bits = 0;
  long denominator_cap_bits = 0;
  std::optional<QPoly> witness;  // Q(witness) = 0 mod P when same
};

// For irreducible P and Q of equal degree. Throws PrecisionError when a
// candidate reconstructs but fails exact verification at every precision.
SameFieldResult same_field_check(const QPoly& P, const QPoly& Q, long bits = kDefaultPrecisionBits);

// Order of the torsion subgroup of Q[x]/(P) for irreducible P: the largest
// n <= 60 with phi(n) | deg P whose cyclotomic polynomial has a root in the field.
long torsion_order(const QPoly& P, long bits = kDefaultPrecisionBits);

// n-th cyclotomic polynomial.
QPoly cyclotomic(long n);

// Exact irreducibility of a monic quartic with integer coefficients, from the
// rational root test and the three root pairings (each candidate verified exactly).
bool quartic_irreducible(const QPoly& P, long bits = kDefaultPrecisionBits);

struct UnitReport {
  Params params;
  bool constant_term_one = false;   // roots of T are units
  Rational T_at_minus1;             // equals (m-2)^2
  QuadElem Ps_at_minus1;            // equals m-2
  bool u_identity = false;          // (u-1)^2 = (m-2)u
  Rational norm_r_plus_1;
  Rational norm_r_plus_u;
  Rational norm_u_minus_1;
  bool exceptional_triple = false;  // r, r+1, r+u pairwise differ by units
  std::vector<std::string> notes;
};

// Integer parameters only; throws std::invalid_argument otherwise.
UnitReport unit_checks(const Params& p);

struct ConstellationReport {
  Rational m, d, A;
  QPoly Pw;
  Rational Pw_at_minus1;                      // equals d^2
  std::vector<std::pair<std::string, Rational>> norms;  // N(r + c) for the listed c
  bool all_units = false;
};

// r ~ r+1+d+u ~ 1 for r a root of q1 = x^2 + (1+d+u)x + u, a factor of P_w.
ConstellationReport constellation_check(const Rational& m, const Rational& d);

}  // namespace murphy::num
