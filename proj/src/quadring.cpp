#include "murphy/quadring.hpp"

#include <stdexcept>

namespace murphy {

namespace {

template <class Ptr>
Ptr join(const Ptr& x, const Ptr& y) {
  if (!x) return y;
  if (!y || x == y) return x;
  throw std::invalid_argument("ring context mismatch");
}

bool same_quad(const QuadCtxPtr& x, const QuadCtxPtr& y) {
  return x == y || (x && y && x->m == y->m && x->nu == y->nu);
}

bool same_biquad(const BiquadCtxPtr& x, const BiquadCtxPtr& y) {
  return x == y || (x && y && x->m == y->m && x->A == y->A);
}

QuadCtxPtr join_quad(const QuadCtxPtr& x, const QuadCtxPtr& y) {
  if (x && y && x != y && same_quad(x, y)) return x;
  return join(x, y);
}

BiquadCtxPtr join_biquad(const BiquadCtxPtr& x, const BiquadCtxPtr& y) {
  if (x && y && x != y && same_biquad(x, y)) return x;
  return join(x, y);
}

std::string term(const Rational& c, const std::string& sym, bool first) {
  std::string out;
  if (sgn(c) == 0) return out;
  Rational a = abs(c);
  if (!first) out += sgn(c) < 0 ? " - " : " + ";
  else if (sgn(c) < 0) out += "-";
  if (sym.empty()) return out + to_string(a);
  if (a != 1) out += to_string(a) + "*";
  return out + sym;
}

}  // namespace

QuadCtxPtr make_quad_ctx(const Rational& m, const Rational& nu, std::string symbol) {
  return std::make_shared<const QuadCtx>(QuadCtx{m, nu, std::move(symbol)});
}

QuadElem::QuadElem(QuadCtxPtr ctx, Rational a, Rational b)
    : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {
  if (!ctx_ && sgn(b_) != 0) throw std::invalid_argument("irrational element needs a context");
}

QuadElem QuadElem::conj() const {
  if (is_rational()) return *this;
  return QuadElem(ctx_, a_ + b_ * ctx_->m, -b_);
}

Rational QuadElem::norm() const {
  if (is_rational()) return a_ * a_;
  return a_ * a_ + a_ * b_ * ctx_->m + ctx_->nu * b_ * b_;
}

Rational QuadElem::trace() const {
  if (is_rational()) return 2 * a_;
  return 2 * a_ + b_ * ctx_->m;
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("QuadElem is not invertible");
  QuadElem c = conj();
  return QuadElem(ctx_, c.a_ / n, c.b_ / n);
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  return QuadElem(join_quad(x.ctx_, y.ctx_), x.a_ + y.a_, x.b_ + y.b_);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  return QuadElem(join_quad(x.ctx_, y.ctx_), x.a_ - y.a_, x.b_ - y.b_);
}

QuadElem operator-(const QuadElem& x) { return QuadElem(x.ctx_, -x.a_, -x.b_); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  auto ctx = join_quad(x.ctx_, y.ctx_);
  if (!ctx) return QuadElem(x.a_ * y.a_);
  Rational bd = x.b_ * y.b_;
  return QuadElem(ctx, x.a_ * y.a_ - ctx->nu * bd, x.a_ * y.b_ + x.b_ * y.a_ + ctx->m * bd);
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.ctx_ && y.ctx_ && !same_quad(x.ctx_, y.ctx_)) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadElem::str() const {
  if (is_zero()) return "0";
  std::string out = term(a_, "", true);
  out += term(b_, ctx_ ? ctx_->symbol : "u", out.empty());
  return out;
}

BiquadCtxPtr make_biquad_ctx(const Rational& m, const Rational& A) {
  Rational S = m * m - 4;
  Rational W = (m + 2 + A) * (m + 2 + A) - 4 * (m - 2);
  return std::make_shared<const BiquadCtx>(BiquadCtx{m, A, S, W});
}

BiquadElem::BiquadElem(BiquadCtxPtr ctx, Rational c0, Rational c1, Rational c2, Rational c3)
    : ctx_(std::move(ctx)), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  if (!ctx_ && !is_rational()) throw std::invalid_argument("irrational element needs a context");
}

BiquadElem BiquadElem::conj_s() const { return BiquadElem(ctx_, c_[0], -c_[1], c_[2], -c_[3]); }
BiquadElem BiquadElem::conj_w() const { return BiquadElem(ctx_, c_[0], c_[1], -c_[2], -c_[3]); }
BiquadElem BiquadElem::conj_sw() const { return BiquadElem(ctx_, c_[0], -c_[1], -c_[2], c_[3]); }

Rational BiquadElem::norm() const {
  BiquadElem n = (*this * conj_s()) * (conj_w() * conj_sw());
  if (!n.is_rational()) throw std::logic_error("biquadratic norm is not rational");
  return n.c_[0];
}

BiquadElem BiquadElem::inverse() const {
  BiquadElem others = conj_s() * conj_w() * conj_sw();
  BiquadElem n = *this * others;
  if (!n.is_rational() || sgn(n.c_[0]) == 0) throw std::domain_error("BiquadElem is not invertible");
  const Rational& d = n.c_[0];
  return BiquadElem(ctx_, others.c_[0] / d, others.c_[1] / d, others.c_[2] / d, others.c_[3] / d);
}

BiquadElem operator+(const BiquadElem& x, const BiquadElem& y) {
  return BiquadElem(join_biquad(x.ctx_, y.ctx_), x.c_[0] + y.c_[0], x.c_[1] + y.c_[1],
                    x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
}

BiquadElem operator-(const BiquadElem& x, const BiquadElem& y) {
  return BiquadElem(join_biquad(x.ctx_, y.ctx_), x.c_[0] - y.c_[0], x.c_[1] - y.c_[1],
                    x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]);
}

BiquadElem operator-(const BiquadElem& x) {
  return BiquadElem(x.ctx_, -x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]);
}

BiquadElem operator*(const BiquadElem& x, const BiquadElem& y) {
  auto ctx = join_biquad(x.ctx_, y.ctx_);
  const Rational* a = x.c_;
  const Rational* b = y.c_;
  if (!ctx) return BiquadElem(a[0] * b[0]);
  const Rational& S = ctx->S;
  const Rational& W = ctx->W;
  Rational SW = S * W;
  return BiquadElem(ctx, a[0] * b[0] + a[1] * b[1] * S + a[2] * b[2] * W + a[3] * b[3] * SW,
                    a[0] * b[1] + a[1] * b[0] + (a[2] * b[3] + a[3] * b[2]) * W,
                    a[0] * b[2] + a[2] * b[0] + (a[1] * b[3] + a[3] * b[1]) * S,
                    a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]);
}

bool operator==(const BiquadElem& x, const BiquadElem& y) {
  if (x.ctx_ && y.ctx_ && !same_biquad(x.ctx_, y.ctx_)) return false;
  for (int i = 0; i < 4; ++i)
    if (x.c_[i] != y.c_[i]) return false;
  return true;
}

std::string BiquadElem::str() const {
  if (is_zero()) return "0";
  static const char* const syms[] = {"", "s", "w", "s*w"};
  std::string out;
  for (int i = 0; i < 4; ++i) out += term(c_[i], syms[i], out.empty());
  return out;
}

BiquadElem u_in_biquad(const BiquadCtxPtr& ctx) {
  return BiquadElem(ctx, ctx->m / 2, Rational(1, 2), 0, 0);
}

BiquadElem embed(const QuadElem& x, const BiquadCtxPtr& ctx) {
  if (x.ctx() && (x.ctx()->m != ctx->m || x.ctx()->nu != 1))
    throw std::invalid_argument("embedding needs u^2 - m u + 1 with matching m");
  return BiquadElem(x.a()) + BiquadElem(x.b()) * u_in_biquad(ctx);
}

BiquadElem test_value(const BiquadCtxPtr& ctx) {
  const Rational& m = ctx->m;
  const Rational& A = ctx->A;
  return BiquadElem(ctx, -(m * m - 4) / 2, (-2 * m - A) / 2, (m - 2) / 2, 0);
}

Poly<QuadElem> conj(const Poly<QuadElem>& p) {
  return p.map([](const QuadElem& c) { return c.conj(); });
}
Poly<BiquadElem> conj_s(const Poly<BiquadElem>& p) {
  return p.map([](const BiquadElem& c) { return c.conj_s(); });
}
Poly<BiquadElem> conj_w(const Poly<BiquadElem>& p) {
  return p.map([](const BiquadElem& c) { return c.conj_w(); });
}
Poly<BiquadElem> conj_sw(const Poly<BiquadElem>& p) {
  return p.map([](const BiquadElem& c) { return c.conj_sw(); });
}

QPoly rational_poly(const Poly<QuadElem>& p) {
  return p.map([](const QuadElem& c) {
    if (!c.is_rational()) throw std::domain_error("coefficient is not rational");
    return Rational(c.a());
  });
}

QPoly rational_poly(const Poly<BiquadElem>& p) {
  return p.map([](const BiquadElem& c) {
    if (!c.is_rational()) throw std::domain_error("coefficient is not rational");
    return Rational(c.rational_part());
  });
}

QPoly component(const Poly<BiquadElem>& p, int i) {
  return p.map([i](const BiquadElem& c) { return Rational(c.c(i)); });
}

QPoly component(const Poly<QuadElem>& p, int i) {
  return p.map([i](const QuadElem& c) { return Rational(i == 0 ? c.a() : c.b()); });
}

Poly<QuadElem> lift_quad(const QPoly& p) {
  return p.map([](const Rational& c) { return QuadElem(c); });
}

Poly<BiquadElem> lift_biquad(const QPoly& p) {
  return p.map([](const Rational& c) { return BiquadElem(c); });
}

}  // namespace murphy
