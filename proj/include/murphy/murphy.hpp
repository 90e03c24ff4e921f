#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "murphy/exact.hpp"
#include "murphy/polyring.hpp"
#include "murphy/quadring.hpp"

namespace murphy {

struct Params {
  Rational m;
  Rational A;
  friend bool operator==(const Params& x, const Params& y) { return x.m == y.m && x.A == y.A; }
};

std::string to_string(const Params& p);

enum class Regime { m_is_2, m_is_minus_2, s_square, generic };
Regime regime(const Params& p);
std::string to_string(Regime r);

Rational s2_of(const Params& p);  // m^2 - 4
Rational w2_of(const Params& p);  // (m+2+A)^2 - 4(m-2)
Rational y2_of(const Params& p);  // A^2 - 4(m-2)

// (m, -m-2-A): swaps w^2 and y^2.
Params related_octic(const Params& p);

// Raised for parameters where the sigma construction does not exist; label
// names the degenerate case.
class DegenerateParams : public std::runtime_error {
 public:
  DegenerateParams(std::string label, const std::string& what)
      : std::runtime_error(what), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// Label of the vanishing-mu case for p, if any.
std::optional<std::string> mu_zero_case(const Params& p);

// Quartic over Q(u), u^2 - m u + 1 = 0; u is the rational +-1 when m = +-2.
Poly<QuadElem> build_p(const Params& p);

struct OcticBundle {
  Params params;
  Regime regime;
  QuadCtxPtr qctx;  // null when m = +-2
  BiquadCtxPtr bctx;
  Poly<QuadElem> p, pbar;
  QPoly T;
  Poly<BiquadElem> q1, q2, q3, q4;
  Poly<BiquadElem> Ps, Ps_bar, Psw, Psw_bar, Pw, Pw_bar;
  Rational s2, w2, y2, mu;
  Rational relatedA;
};

// Builds every factor and re-expands the products; throws std::logic_error on
// any internal inconsistency.
OcticBundle build_bundle(const Params& p);

// Monic quadratic x^2 + b x + c helpers over the biquadratic ring.
BiquadElem quad_resultant(const Poly<BiquadElem>& f, const Poly<BiquadElem>& g);
BiquadElem quad_discriminant(const Poly<BiquadElem>& f);

// s, w, u and sigma as residues modulo T.
struct SigmaMap {
  QPoly T;
  QPoly s_expr;
  std::optional<QPoly> w_expr;  // absent when Res(C, T) = 0
  QPoly u_expr;
  QPoly sigma_x;                // sigma(x) mod T
  MobiusMap<QPoly> sigma;       // (-x - 1)/(x + u)
};

SigmaMap sigma_mod_T(const OcticBundle& b);
SigmaMap sigma_mod_T(const Params& p);

// g(sigma(x)) mod T.
QPoly apply_sigma(const SigmaMap& sm, const QPoly& g);
// sigma^k(x) mod T for k = 0..n-1.
std::vector<QPoly> sigma_orbit(const SigmaMap& sm, int n);

// 1 + g + g sigma(g) + g sigma(g) sigma^2(g) mod T.
QPoly murphy_sum(const SigmaMap& sm, const QPoly& g);

// The four-term Murphy condition for r = x mod T. At m = -2 the modulus is p
// and u = -1.
bool murphy_identity_check(const Params& p);

struct IdentityResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct IdentityReport {
  Params params;
  std::vector<IdentityResult> results;
  bool all_passed() const;
};

IdentityReport verify_core_identities(const Params& p);

}  // namespace murphy
