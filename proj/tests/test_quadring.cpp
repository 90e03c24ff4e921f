#include <random>

#include "doctest.h"
#include "murphy/quadring.hpp"

using namespace murphy;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-12, 12), d(1, 5);
  return make_rational(n(rng), d(rng));
}

}  // namespace

TEST_SUITE("quadring") {
  TEST_CASE("u satisfies u^2 - m u + 1 = 0") {
    auto ctx = make_quad_ctx(3);
    QuadElem u = QuadElem::gen(ctx);
    CHECK(u * u - QuadElem(3) * u + QuadElem(1) == QuadElem(0));
    CHECK(u * u.conj() == QuadElem(1));
    CHECK(u.norm() == 1);
    CHECK(u.trace() == 3);
  }

  TEST_CASE("biquadratic generators square to S and W") {
    auto ctx = make_biquad_ctx(3, 13);
    BiquadElem s = BiquadElem::s(ctx), w = BiquadElem::w(ctx);
    CHECK(s * s == BiquadElem(Rational(5)));
    CHECK(w * w == BiquadElem(Rational(18 * 18 - 4)));
    BiquadElem u = u_in_biquad(ctx);
    CHECK(u * u - BiquadElem(3) * u + BiquadElem(1) == BiquadElem(0));
  }

  TEST_CASE("rational_poly rejects irrational coefficients") {
    auto ctx = make_quad_ctx(5);
    Poly<QuadElem> p({QuadElem(1), QuadElem::gen(ctx)});
    CHECK_THROWS(rational_poly(p));
    CHECK(rational_poly(p * conj(p)) == qpoly({1, 5, 1}));
  }

  TEST_CASE("property: quadratic field axioms") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
      Rational m = small_rational(rng);
      if (is_square(m * m - 4)) continue;
      auto ctx = make_quad_ctx(m);
      QuadElem a(ctx, small_rational(rng), small_rational(rng));
      QuadElem b(ctx, small_rational(rng), small_rational(rng));
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a + b).conj() == a.conj() + b.conj());
      CHECK(a * a.conj() == QuadElem(a.norm()));
      if (!a.is_zero()) CHECK(a * a.inverse() == QuadElem(1));
    }
  }

  TEST_CASE("property: biquadratic norm is multiplicative and inverses exist") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 60; ++i) {
      Rational m = small_rational(rng), A = small_rational(rng);
      auto ctx = make_biquad_ctx(m, A);
      if (is_square(ctx->S) || is_square(ctx->W) || is_square(ctx->S * ctx->W)) continue;
      BiquadElem a(ctx, small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
      BiquadElem b(ctx, small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a * b).conj_sw() == a.conj_sw() * b.conj_sw());
      if (!a.is_zero()) CHECK(a * a.inverse() == BiquadElem(1));
    }
  }
}
