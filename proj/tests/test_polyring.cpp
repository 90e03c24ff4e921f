#include <random>

#include "doctest.h"
#include "murphy/polyring.hpp"

using namespace murphy;

namespace {

QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-9, 9), den(1, 4);
  std::vector<Rational> v(deg(rng) + 1);
  for (auto& q : v) q = make_rational(c(rng), den(rng));
  return QPoly(v);
}

}  // namespace

TEST_SUITE("polyring") {
  // Oracle values from an independent computer algebra system.
  TEST_CASE("resultant and discriminant") {
    QPoly f = qpoly_desc({1, 0, -2, 5}), g = qpoly_desc({2, 1, -7});
    CHECK(resultant(f, g) == -24);
    CHECK(resultant_bareiss(f, g) == -24);
    CHECK(resultant_berkowitz(f, g) == -24);
    CHECK(discriminant(qpoly_desc({1, 0, 0, 0, -1, 1})) == 2869);
  }

  TEST_CASE("squarefree factors and Sturm counts") {
    QPoly p = pow(qpoly({-1, 2, 1}), 4);
    auto sf = squarefree_factors(p);
    REQUIRE(sf.size() == 4);
    CHECK(sf[3] == qpoly({-1, 2, 1}));
    CHECK(sturm_real_roots(qpoly({-1, 2, 1})) == 2);
    CHECK(real_roots_with_multiplicity(p) == 8);
    CHECK(sturm_real_roots(qpoly_desc({1, 0, -3, 3, 14, 15, 9, 3, 1})) == 0);
  }

  TEST_CASE("modular inverse") {
    QPoly P = qpoly({1, 1, 0, 1});
    QPoly a = qpoly({1, 0, 1});
    CHECK(mulmod(a, invmod(a, P), P) == qpoly({1}));
    CHECK(invmod(a, P) == qpoly({0, -1}));
  }

  TEST_CASE("text round trip") {
    QPoly p = qpoly_desc({1, -3, 0, 2});
    CHECK(to_string(p) == "x^3 - 3*x^2 + 2");
    CHECK(from_text(to_text(p)) == p);
  }

  TEST_CASE("property: ring laws and division") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      QPoly a = random_poly(rng, 6), b = random_poly(rng, 5), c = random_poly(rng, 4);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (b.is_zero()) continue;
      auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }

  TEST_CASE("property: resultant methods agree and Res(fg, h) = Res(f, h) Res(g, h)") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
      QPoly f = random_poly(rng, 4), g = random_poly(rng, 3), h = random_poly(rng, 4);
      if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
      Rational r = resultant_subresultant(f, h);
      CHECK(r == resultant_bareiss(f, h));
      CHECK(r == resultant_berkowitz(f, h));
      CHECK(resultant(f * g, h) == r * resultant(g, h));
    }
  }

  TEST_CASE("property: gcd divides both and ext_gcd is a Bezout relation") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      QPoly c = random_poly(rng, 2), a = random_poly(rng, 4) * c, b = random_poly(rng, 3) * c;
      if (a.is_zero() || b.is_zero()) continue;
      QPoly g = gcd(a, b);
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      CHECK((g % c.monic()).is_zero());
      auto e = ext_gcd(a, b);
      CHECK(e.s * a + e.t * b == e.g);
    }
  }

  TEST_CASE("property: Mobius maps compose like 2x2 matrices") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 50; ++i) {
      MobiusMap<Rational> M{c(rng), c(rng), c(rng), c(rng)};
      if (M.det() == 0) continue;
      QPoly p = random_poly(rng, 4);
      if (p.degree() < 1) continue;
      QPoly first = mobius_transform(p, M);
      if (first.degree() != p.degree()) continue;
      QPoly once = mobius_transform(first, M);
      QPoly twice = mobius_transform(p, mobius_power(M, 2));
      // Both are (cx+d)^deg p(M^2 x) up to a nonzero scalar.
      CHECK(once.scaled(twice.lead()) == twice.scaled(once.lead()));
    }
  }
}
