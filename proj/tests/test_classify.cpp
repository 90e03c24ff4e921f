#include <random>

#include "doctest.h"
#include "murphy/classify.hpp"
#include "murphy/families.hpp"
#include "murphy/numfield.hpp"

using namespace murphy;

TEST_SUITE("classify") {
  TEST_CASE("named groups") {
    CHECK(classify({1, 0}).group == "D8(8)");
    CHECK(classify({1, 0}).degE == 4);
    CHECK(classify({-6, -4}).group == "Q8");
    CHECK(classify({1, -4}).group == "C4xC2");
    CHECK(classify({1, 1}).group == "C4xC2");
    CHECK(classify({7, -4}).group == "C4_twins");
    CHECK(classify({4, -3}).group == "V4");
    CHECK(classify({3, 13}).group == "C4_twins");
    CHECK(classify({5, 1}).group == "8T11");
    CHECK(classify({5, 1}).degE == 8);
  }

  TEST_CASE("C4xC2 cases have both related octics irreducible") {
    for (Params p : {Params{1, -4}, Params{1, 1}}) {
      CHECK(classify(p).T_irreducible);
      CHECK(classify(related_octic(p)).T_irreducible);
    }
  }

  TEST_CASE("Washington inputs w^2 = 0 give C4") {
    for (long t : {-5, -3, -1, 1, 3, 4, 7}) {
      Rational tt(t);
      Classification c = classify({tt * tt + 2, -tt * tt - 2 * tt - 4});
      CHECK(c.w2 == 0);
      CHECK(c.group == "C4");
    }
  }

  TEST_CASE("degenerate inputs are labelled") {
    CHECK(classify({2, -4}).group.rfind("degenerate", 0) == 0);
    CHECK(classify({make_rational(2, 3), make_rational(-4, 3)}).group == "degenerate(mu=0 at (m,A)=(2/3,-4/3))");
    CHECK(classify({6, -4}).group == "degenerate(w=y=0)");
    CHECK(classify({-2, 3}).group == "degenerate(m=-2, A^2+16 square)");
    CHECK(classify({-2, 5}).group == "C4");
  }

  TEST_CASE("signature examples") {
    CHECK(signature({-3, 1}).real_roots == 8);
    CHECK(signature({3, -6}).real_roots == 0);
    CHECK(signature({4, -3}).real_roots == 0);
    CHECK(signature({1, 1}).real_roots == 0);
    CHECK(signature({7, 1}).real_roots == 4);
  }

  TEST_CASE("square flags and degE") {
    auto f = square_flags(5, 20, 45);
    CHECK(degree_E(f) == 2);
    CHECK(degree_E(square_flags(2, 3, 5)) == 8);
    CHECK(degree_E(square_flags(2, 3, 6)) == 4);
  }

  TEST_CASE("dihedral parametrization") {
    CHECK(dihedral_A(47, 1) == -47 - 2 - 1 - 45);
    // P_w from the dihedral quartic is a factor of T.
    for (long m : {7, 11, 47}) {
      Rational A = dihedral_A(m, 1);
      OcticBundle b = build_bundle({m, A});
      CHECK((b.T % dihedral_quartic(m, 1)).is_zero());
    }
  }

  TEST_CASE("property: theorem signature matches exact Sturm count") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 3);
    for (int i = 0; i < 150; ++i) {
      Params p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
      if (is_square(p.m * p.m - 4) || monster_mu(p) == 0) continue;
      CHECK(signature(p).real_roots == real_roots_with_multiplicity(build_bundle(p).T));
    }
  }

  TEST_CASE("property: related octics share degE and square flags up to swap") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> num(-25, 25);
    for (int i = 0; i < 100; ++i) {
      Params p{num(rng), num(rng)};
      if (p.m == 2 || p.m == -2) continue;
      Classification a = classify(p), b = classify(related_octic(p));
      CHECK(a.degE == b.degE);
      CHECK(a.square_flags[kW] == b.square_flags[kY]);
      CHECK(a.square_flags[kSW] == b.square_flags[kSY]);
    }
  }

  TEST_CASE("Washington signature: P_t has 4 real roots when |t+1| > 1, none when |t+1| < 1") {
    for (long t = -10; t <= 10; ++t) {
      if (t == 0 || t == -2) continue;
      Rational tt(t);
      int expect = std::abs(t + 1) > 1 ? 4 : 0;
      CHECK(sturm_real_roots(family_poly(FamilyKind::washington_c, tt).P) == expect);
      CHECK(signature({tt * tt + 2, -tt * tt - 2 * tt - 4}).real_roots == 2 * expect);
    }
    CHECK(sturm_real_roots(family_poly(FamilyKind::washington_c, make_rational(-1, 2)).P) == 0);
  }
}
