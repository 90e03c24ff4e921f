#include "doctest.h"
#include "murphy/classify.hpp"
#include "murphy/suites.hpp"
#include "murphy/families.hpp"

using namespace murphy;

TEST_SUITE("murphy") {
  TEST_CASE("T(6,-4,x) is the fourth power of x^2 + 2x - 1") {
    CHECK(build_bundle({6, -4}).T == pow(qpoly({-1, 2, 1}), 4));
  }

  TEST_CASE("T(1,0,x)") {
    CHECK(build_bundle({1, 0}).T == qpoly_desc({1, 0, -3, 3, 14, 15, 9, 3, 1}));
  }

  TEST_CASE("m = -2 gives the simplest quartic squared") {
    for (long A : {-3, 1, 5, 8}) {
      QPoly q4 = qpoly_desc({1, -A, -6, A, 1});
      OcticBundle b = build_bundle({-2, A});
      CHECK(rational_poly(b.p) == q4);
      CHECK(b.T == q4 * q4);
    }
  }

  TEST_CASE("m = 2 factors through (x+1)^2") {
    for (long A : {-7, -1, 3, 6}) {
      QPoly expect = qpoly({1, 1}) * qpoly({1, 1}) * qpoly({1, -(A + 2), 1});
      CHECK(rational_poly(build_bundle({2, A}).p) == expect);
    }
  }

  TEST_CASE("Washington squares T(t^2+2, -t^2-2t-4) = P_t^2") {
    for (long t = -10; t <= 10; ++t) {
      Rational tt(t);
      QPoly P = qpoly_desc({1, t * t + 2 * t + 4, t * t * t + 3 * t * t + 4 * t + 6, t * t * t + t * t + 2 * t + 4, 1});
      if (t != 0 && t != -2) CHECK(family_poly(FamilyKind::washington_c, tt).P == P);
      CHECK(build_bundle({tt * tt + 2, -tt * tt - 2 * tt - 4}).T == P * P);
    }
  }

  TEST_CASE("mu vanishes at the two known points") {
    CHECK(monster_mu({2, -4}) == 0);
    CHECK(monster_mu({make_rational(2, 3), make_rational(-4, 3)}) == 0);
    CHECK(*mu_zero_case({2, -4}) == "mu=0 at (m,A)=(2,-4)");
    CHECK_FALSE(mu_zero_case({3, -4}));
    CHECK_THROWS_AS(sigma_mod_T(Params{make_rational(2, 3), make_rational(-4, 3)}), DegenerateParams);
  }

  TEST_CASE("related octic is an involution swapping w^2 and y^2") {
    Params p{3, 13};
    Params q = related_octic(p);
    CHECK(q == Params{3, -18});
    CHECK(related_octic(q) == p);
    CHECK(w2_of(p) == y2_of(q));
    CHECK(y2_of(p) == w2_of(q));
  }

  TEST_CASE("tv tv' at (3,13)") {
    IdentityReport r = verify_core_identities({3, 13});
    CHECK(r.all_passed());
    CHECK(r.results.size() == 19);
  }

  TEST_CASE("property: core identities at random rational pairs") {
    for (const Params& p : random_params(60, 99)) {
      IdentityReport r = verify_core_identities(p);
      INFO(to_string(p));
      CHECK(r.all_passed());
      for (const auto& x : r.results) CHECK_FALSE(x.skipped);
      if (monster_mu(p) != 0) CHECK(murphy_identity_check(p));
    }
  }

  TEST_CASE("property: sigma has order 4 modulo T") {
    for (const Params& p : random_params(15, 5)) {
      if (monster_mu(p) == 0) continue;
      SigmaMap sm = sigma_mod_T(p);
      auto orbit = sigma_orbit(sm, 5);
      CHECK(orbit[4] == QPoly::x());
      CHECK(orbit[2] != QPoly::x());
    }
  }

  TEST_CASE("regimes skip the generic identities") {
    IdentityReport r = verify_core_identities({2, 5});
    CHECK(r.all_passed());
    for (const auto& x : r.results) CHECK(x.skipped);
  }
}
