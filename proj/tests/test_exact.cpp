#include <random>

#include "doctest.h"
#include "murphy/exact.hpp"

using namespace murphy;

TEST_SUITE("exact") {
  TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  }

  TEST_CASE("perfect squares") {
    CHECK(*perfect_square(make_rational(49, 4)) == make_rational(7, 2));
    CHECK(*perfect_square(Rational(0)) == 0);
    CHECK_FALSE(perfect_square(Rational(-4)));
    CHECK_FALSE(is_square(make_rational(2, 9)));
  }

  TEST_CASE("squarefree decomposition") {
    auto [core, k] = squarefree_decompose(Integer(-72));
    CHECK(core == -2);
    CHECK(k == 6);
    CHECK(squarefree_status(Integer(680)) == Squarefree::no);
    CHECK(squarefree_status(Integer(1001)) == Squarefree::yes);
    CHECK(fundamental_discriminant(Integer(5)) == 5);
    CHECK(fundamental_discriminant(Integer(12)) == 12);
    CHECK(fundamental_discriminant(Integer(-1)) == -4);
    CHECK(v2(Integer(48)) == 4);
  }

  // Oracle: the classical table of least solutions of Pell's equation.
  TEST_CASE("fundamental units") {
    QuadUnit e2 = fundamental_unit(Integer(2));
    CHECK(e2.x == 2);
    CHECK(e2.y == 2);
    CHECK(e2.norm == -1);
    QuadUnit e5 = fundamental_unit(Integer(5));
    CHECK(e5.x == 1);
    CHECK(e5.y == 1);
    CHECK(e5.norm == -1);
    QuadUnit e34 = fundamental_unit(Integer(34));
    CHECK(e34.x == 70);
    CHECK(e34.y == 12);
    CHECK(e34.norm == 1);
    QuadUnit e94 = fundamental_unit(Integer(94));
    CHECK(e94.x == 2 * Integer("2143295"));
    CHECK(e94.y == 2 * Integer("221064"));
    CHECK_THROWS_AS(fundamental_unit(Integer(12)), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_unit(Integer(1)), std::invalid_argument);
  }

  TEST_CASE("Lucas and Fibonacci numbers from the golden unit") {
    const long L[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123};
    const long F[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (long n = 0; n <= 10; ++n) {
      LucasFib lf = lucas_fib(Integer(5), n);
      CHECK(lf.L == L[n]);
      CHECK(lf.F == F[n]);
    }
  }

  TEST_CASE("property: unit powers keep norm and multiply") {
    std::mt19937_64 rng(7);
    for (long d : {2, 3, 5, 6, 7, 13, 21, 29, 34, 61}) {
      QuadUnit e = fundamental_unit(Integer(d));
      CHECK(e.x * e.x - d * e.y * e.y == 4 * e.norm);
      for (int i = 0; i < 5; ++i) {
        long a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
        auto [xa, ya] = unit_power(e, a);
        auto [xb, yb] = unit_power(e, b);
        auto [xs, ys] = unit_power(e, a + b);
        CHECK(xa * xb + d * ya * yb == 2 * xs);
        CHECK(xa * yb + xb * ya == 2 * ys);
      }
    }
  }
}
