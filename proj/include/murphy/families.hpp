#pragma once

#include <optional>
#include <string>
#include <vector>

#include "murphy/murphy.hpp"
#include "murphy/numfield.hpp"

namespace murphy {

enum class FamilyKind { cubic_a, quartic_b, washington_c, quintic_d, sextic_e };
std::string to_string(FamilyKind k);
// Accepts the enum names and the letters a-e.
FamilyKind parse_family_kind(const std::string& s);
const std::vector<FamilyKind>& all_family_kinds();

struct FamilySpec {
  FamilyKind kind = FamilyKind::cubic_a;
  Rational t;
  int n = 0;
  QPoly P;
  // (a), (b), (e): sigma is a t-independent linear fractional map.
  std::optional<MobiusMap<Rational>> mobius;
  // (c), (d): sigma(x) = sigma_num(x) / sigma_den.
  QPoly sigma_num;
  Rational sigma_den = 1;
  QPoly sigma_x;  // sigma(x) mod P
};

// Throws std::invalid_argument when t is a pole of sigma.
FamilySpec family_poly(FamilyKind kind, const Rational& t);

// sigma applied to g, i.e. g(sigma(x)) mod P.
QPoly apply_sigma(const FamilySpec& s, const QPoly& g);
// sigma^k(x) mod P for k = 0..count-1.
std::vector<QPoly> sigma_orbit(const FamilySpec& s, int count);

// 1 + x + x sigma(x) + ... + x sigma(x)...sigma^(n-2)(x) reduced mod P.
QPoly murphy_residue(const FamilySpec& s);
bool verify_M(const FamilySpec& s);

// Cleared numerator of the n-term Murphy sum for a linear fractional sigma,
// over the common denominator of sigma(x), ..., sigma^(n-2)(x). It is the zero
// polynomial exactly when the sum vanishes identically in x.
template <class R>
Poly<R> mobius_murphy_numerator(const MobiusMap<R>& s, int n) {
  std::vector<Poly<R>> num{Poly<R>::x()}, den{Poly<R>(R(1))};
  for (int k = 1; k <= n - 2; ++k) {
    MobiusMap<R> M = mobius_power(s, static_cast<unsigned long>(k));
    num.push_back(Poly<R>({M.b, M.a}));
    den.push_back(Poly<R>({M.d, M.c}));
  }
  Poly<R> total;
  for (int j = 0; j < n; ++j) {
    Poly<R> term(R(1));
    for (int k = 0; k < j; ++k) term = term * num[k];
    for (int k = j; k <= n - 2; ++k) term = term * den[k];
    total += term;
  }
  return total;
}

// Upper bound on the t-degree of the cleared numerator of murphy_residue. It is
// 0 for the linear fractional families, whose sum vanishes before reduction.
long murphy_t_degree_bound(FamilyKind kind);

struct FamilyIdentityReport {
  FamilyKind kind = FamilyKind::cubic_a;
  long t_degree_bound = 0;
  std::vector<Rational> samples;
  bool formal_identity = false;  // mobius_murphy_numerator vanishes (a, b, e)
  bool all_pass = false;
  std::optional<Rational> failing_t;
};

// verify_M at t = 0, 1, 2, ... skipping excluded values, using
// max(bound + 1, min_samples) samples.
FamilyIdentityReport verify_M_family(FamilyKind kind, long min_samples = 5);

// Least k in 1..n with sigma^k(x) = x mod P, or 0 if none.
int sigma_order(const FamilySpec& s);
// sigma^n(x) = x mod P and no proper divisor of n works; for a linear
// fractional sigma the matrix order is checked too.
bool order_check(const FamilySpec& s);

struct DiffgenReport {
  FamilyKind kind = FamilyKind::cubic_a;
  Rational t;
  int k = 0;
  QPoly y;       // y_k = x sigma(x) ... sigma^(k-1)(x) mod P
  QPoly f;       // monic polynomial with the conjugates of y_k as roots
  bool murphy_eta = false;  // the Murphy sum of y_k with eta = sigma^k vanishes
};

// Requires 1 <= k < n and gcd(k, n) = 1.
DiffgenReport diffgen(const FamilySpec& s, int k);

struct ZElementReport {
  Rational t;
  QPoly z;
  bool cubic_relation = false;  // z^3 - (t^2+3t+9) z + (t^2+3t+9) = 0 mod P
  bool sigma_ratio = false;     // sigma(z) = x z mod P
};

ZElementReport z_element_check(const Rational& t);

struct WashingtonReport {
  Rational t;
  QPoly P_t, f_t;
  QPoly u_expr;              // residue of u mod P_t
  bool u_matches_sigma = false;  // u_expr = x sigma^2(x) mod P_t
  // The cubic for u without the 1/t factor satisfies the u relation only at t = 1.
  bool u_unscaled_relation = false;
  QPoly x_over_v;            // x (u-1)^-1 t mod P_t
  QPoly xv;                  // witness modulo f_t
  bool u_relation = false;   // u^2 - (t^2+2) u + 1 = 0 mod P_t
  bool x_over_v_formula = false;
  bool f_at_x_over_v = false;
  bool P_at_xv = false;
  bool repeated_factor = false;  // (x^2 - t x - 1)^2 divides T(t^2+2, 2t, x)
  QPoly cofactor;
  std::optional<bool> cofactor_same_field;  // computed for integer t
  bool pass() const {
    return u_relation && u_matches_sigma && x_over_v_formula && f_at_x_over_v && P_at_xv && repeated_factor;
  }
};

// Throws std::invalid_argument for t in {0, -2}.
WashingtonReport washington_equiv(const Rational& t, long bits = num::kDefaultPrecisionBits);

// f_t(x) = x^4 - t^2 x^3 - (t^3+2t^2+4t+2) x^2 - t^2 x + 1.
QPoly washington_quartic(const Rational& t);
// P_t^2 = T(t^2+2, -t^2-2t-4, x).
bool washington_octic_square(const Rational& t);

// ---- Shen polynomials ----

struct ShenPoly {
  int n = 0;
  QPoly Q, V;
  Poly<QPoly> P;  // coefficients in Q[a]
};

ShenPoly shen_build(int n);
QPoly shen_poly(int n, const Rational& a);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// disc(P_n) in Q[a] against n (2^(n-2-2v) n)^(n-1) (a^2 + 4^v)^(n-1).
QPoly shen_disc_formula(int n);
bool shen_disc_check(int n);

struct ShenInvariants {
  int n = 0;
  bool monic = false;
  bool parity = false;           // x^(n-k) coefficient in Z for even k, in Z a for odd k
  bool v_gcd = false;            // gcd of V_n coefficients is 2^v2(n)
  bool constant_term = false;    // (-1)^(n/2) for even n, vacuous otherwise
  bool doubling = false;         // V_2n = 2 Q_n V_n
  bool all() const { return monic && parity && v_gcd && constant_term && doubling; }
};

ShenInvariants shen_invariants(int n);

struct ShenOcticReport {
  std::vector<Rational> samples;
  // x^5 coefficient of f_3 as rational_part(a) + xi_part(a) xi, interpolated
  // through the samples.
  QPoly f3_x5_rational, f3_x5_xi;
  bool f3_degree_ok = false;    // interpolant has degree <= 3, as integrality forces
  bool f3_matches_alt_form = false;  // against (12a^2+768) xi + a^3 - 12a^2 + 57a - 768
  bool sigma_permutes = false;  // sigma maps P(a, x) to a multiple of itself
  bool formal_identity = false; // n = 8 Murphy sum vanishes identically over Q(xi)
  bool pass() const { return f3_degree_ok && sigma_permutes && formal_identity; }
};

// Octic P_8(a, x) with sigma = (-xi x - 1)/(x - xi), xi^2 - 2 xi - 1 = 0.
ShenOcticReport shen_octic_check();

struct LambdaReport {
  int n = 0;
  Rational a;
  long precision_bits = 0;
  bool cyclic = false;
  num::Real max_perm_error, tolerance;
  bool sum_ok = false;
  num::Real max_sum_error;
  std::optional<bool> s_vanishes;  // only for n divisible by 4
  num::Real max_S;
  int samples = 0;
  bool pass() const { return cyclic && sum_ok && s_vanishes.value_or(true); }
};

// Numeric, with xi = cot(pi/n). Throws num::PrecisionError when the root
// inclusion radii are not small against the root separation.
LambdaReport lambda_cycle_check(int n, const Rational& a, long bits = num::kDefaultPrecisionBits);

// ---- order-10 map ----

struct Order10Power {
  int k = 0;                     // sigma = f^k
  bool sum_vanishes = false;     // at every sample, exactly
  bool formal_identity = false;  // cleared numerator is zero
  std::string sum_at_first;      // sum at the first sample point
};

struct Order10Report {
  bool m10_scalar = false;
  bool m5_scalar = true;
  bool m2_scalar = true;
  std::vector<Rational> samples;
  Order10Power f3, f7;
  std::vector<int> identity_powers;  // k in 1..9 for which f^k satisfies the n = 10 condition
  // f^3 does not satisfy the condition; f^7 does.
  bool pass() const {
    return m10_scalar && !m5_scalar && !m2_scalar && f7.sum_vanishes && f7.formal_identity;
  }
};

// f: x -> (-x - 1)/(x + u) with u^2 + 3u + 1 = 0.
Order10Report order10_check(int sample_count = 20);

}  // namespace murphy
