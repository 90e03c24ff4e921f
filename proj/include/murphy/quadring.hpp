#pragma once

#include <memory>
#include <string>

#include "murphy/exact.hpp"
#include "murphy/polyring.hpp"

namespace murphy {

// Q[u]/(u^2 - m u + nu). The default nu = 1 gives u a unit with inverse m - u.
struct QuadCtx {
  Rational m;
  Rational nu = 1;
  std::string symbol = "u";
};

using QuadCtxPtr = std::shared_ptr<const QuadCtx>;

QuadCtxPtr make_quad_ctx(const Rational& m, const Rational& nu = 1, std::string symbol = "u");

// a + b u. A null context marks a rational constant, which adopts the
// context of whatever it is combined with.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : a_(v) {}
  QuadElem(const Rational& v) : a_(v) {}
  QuadElem(QuadCtxPtr ctx, Rational a, Rational b);

  static QuadElem gen(QuadCtxPtr ctx) { return QuadElem(std::move(ctx), 0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const QuadCtxPtr& ctx() const { return ctx_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadElem conj() const;
  Rational norm() const;
  Rational trace() const;
  QuadElem inverse() const;

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x);
  friend bool operator==(const QuadElem& x, const QuadElem& y);
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  std::string str() const;

 private:
  QuadCtxPtr ctx_;
  Rational a_ = 0, b_ = 0;
};

template <>
struct ring_traits<QuadElem> {
  static constexpr bool exact_division = true;
  static constexpr bool field = true;
  static bool is_zero(const QuadElem& x) { return x.is_zero(); }
  static QuadElem div(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }
  static std::string str(const QuadElem& x) { return x.str(); }
  static bool atomic(const QuadElem& x) { return x.is_rational() && sgn(x.a()) >= 0; }
};

// Q[s,w]/(s^2 - S, w^2 - W) with S = m^2 - 4, W = (m+2+A)^2 - 4(m-2).
struct BiquadCtx {
  Rational m, A, S, W;
};

using BiquadCtxPtr = std::shared_ptr<const BiquadCtx>;

BiquadCtxPtr make_biquad_ctx(const Rational& m, const Rational& A);

// c0 + c1 s + c2 w + c3 s w.
class BiquadElem {
 public:
  BiquadElem() = default;
  BiquadElem(long v) : c_{Rational(v), 0, 0, 0} {}
  BiquadElem(const Rational& v) : c_{v, 0, 0, 0} {}
  BiquadElem(BiquadCtxPtr ctx, Rational c0, Rational c1, Rational c2, Rational c3);

  static BiquadElem s(BiquadCtxPtr ctx) { return BiquadElem(std::move(ctx), 0, 1, 0, 0); }
  static BiquadElem w(BiquadCtxPtr ctx) { return BiquadElem(std::move(ctx), 0, 0, 1, 0); }
  static BiquadElem sw(BiquadCtxPtr ctx) { return BiquadElem(std::move(ctx), 0, 0, 0, 1); }

  const Rational& c(int i) const { return c_[i]; }
  const BiquadCtxPtr& ctx() const { return ctx_; }
  const Rational& rational_part() const { return c_[0]; }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_zero() const { return is_rational() && sgn(c_[0]) == 0; }

  BiquadElem conj_s() const;   // s -> -s
  BiquadElem conj_w() const;   // w -> -w
  BiquadElem conj_sw() const;  // both
  // Product of the four conjugates; rational by construction.
  Rational norm() const;
  BiquadElem inverse() const;

  friend BiquadElem operator+(const BiquadElem& x, const BiquadElem& y);
  friend BiquadElem operator-(const BiquadElem& x, const BiquadElem& y);
  friend BiquadElem operator*(const BiquadElem& x, const BiquadElem& y);
  friend BiquadElem operator-(const BiquadElem& x);
  friend bool operator==(const BiquadElem& x, const BiquadElem& y);
  friend bool operator!=(const BiquadElem& x, const BiquadElem& y) { return !(x == y); }

  std::string str() const;

 private:
  BiquadCtxPtr ctx_;
  Rational c_[4] = {0, 0, 0, 0};
};

template <>
struct ring_traits<BiquadElem> {
  static constexpr bool exact_division = true;
  static constexpr bool field = true;
  static bool is_zero(const BiquadElem& x) { return x.is_zero(); }
  static BiquadElem div(const BiquadElem& x, const BiquadElem& y) { return x * y.inverse(); }
  static std::string str(const BiquadElem& x) { return x.str(); }
  static bool atomic(const BiquadElem& x) { return x.is_rational() && sgn(x.rational_part()) >= 0; }
};

// u = (m + s)/2 inside the biquadratic ring.
BiquadElem u_in_biquad(const BiquadCtxPtr& ctx);

// Image of a + b u under u -> (m + s)/2; requires matching m and nu = 1.
BiquadElem embed(const QuadElem& x, const BiquadCtxPtr& ctx);

// (-2m - A) s/2 + (m - 2) w/2 - (m^2 - 4)/2.
BiquadElem test_value(const BiquadCtxPtr& ctx);

// Coefficient-wise conjugation of polynomials.
Poly<QuadElem> conj(const Poly<QuadElem>& p);
Poly<BiquadElem> conj_s(const Poly<BiquadElem>& p);
Poly<BiquadElem> conj_w(const Poly<BiquadElem>& p);
Poly<BiquadElem> conj_sw(const Poly<BiquadElem>& p);

// Rational polynomial from one that has only rational coefficients; throws otherwise.
QPoly rational_poly(const Poly<QuadElem>& p);
QPoly rational_poly(const Poly<BiquadElem>& p);
// Component i of each coefficient.
QPoly component(const Poly<BiquadElem>& p, int i);
QPoly component(const Poly<QuadElem>& p, int i);

Poly<QuadElem> lift_quad(const QPoly& p);
Poly<BiquadElem> lift_biquad(const QPoly& p);

}  // namespace murphy
