#include <random>

#include "doctest.h"
#include "murphy/numfield.hpp"

using namespace murphy;
using num::Real;

TEST_SUITE("numfield") {
  TEST_CASE("roots of a cyclotomic polynomial") {
    num::EmbeddingSet es = num::complex_roots(num::cyclotomic(5), 128);
    CHECK(es.roots.size() == 4);
    CHECK(es.real_count == 0);
    num::PrecisionGuard g(128);
    for (const auto& z : es.roots) CHECK(num::abs(z) - 1 < Real("1e-30"));
    CHECK(num::cyclotomic(12) == qpoly({1, 0, -1, 0, 1}));
  }

  TEST_CASE("complex_roots rejects repeated roots") {
    CHECK_THROWS_AS(num::complex_roots(qpoly({1, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(num::complex_roots(qpoly({3})), std::invalid_argument);
    CHECK(num::numeric_real_count(pow(qpoly({-1, 2, 1}), 4)) == 8);
  }

  TEST_CASE("rational reconstruction") {
    num::PrecisionGuard g(200);
    Real x = Real(355) / Real(113);
    auto q = num::reconstruct_rational(x, Integer(1000), Real("1e-40"));
    REQUIRE(q);
    CHECK(*q == make_rational(355, 113));
    CHECK_FALSE(num::reconstruct_rational(num::pi(), Integer(1000), Real("1e-40")));
  }

  TEST_CASE("same field: Gaussian periods of conductor 5 versus 13") {
    QPoly c5 = num::cyclotomic(5);
    QPoly shifted = c5.compose(qpoly({1, 1}));
    auto same = num::same_field_check(c5, shifted, 256);
    CHECK(same.relation == num::FieldRelation::same);
    REQUIRE(same.witness);
    CHECK(compose_mod(shifted, *same.witness, c5).is_zero());
    QPoly q13 = qpoly_desc({1, 1, 2, -4, 3});  // a cyclic quartic of conductor 13
    CHECK(num::same_field_check(c5, q13, 256).relation == num::FieldRelation::different);
  }

  TEST_CASE("torsion orders") {
    CHECK(num::torsion_order(num::cyclotomic(5)) == 10);
    CHECK(num::torsion_order(num::cyclotomic(8)) == 8);
    CHECK(num::torsion_order(qpoly_desc({1, -1, -6, 1, 1})) == 2);
  }

  TEST_CASE("quartic irreducibility") {
    CHECK(num::quartic_irreducible(qpoly_desc({1, -1, -6, 1, 1})));
    CHECK_FALSE(num::quartic_irreducible(qpoly({1, 0, 1}) * qpoly({2, 0, 1})));
    CHECK_FALSE(num::quartic_irreducible(qpoly({-1, 1}) * qpoly_desc({1, 0, 0, 2})));
  }

  TEST_CASE("unit checks and exceptional triples") {
    for (Params p : {Params{3, 13}, Params{1, -5}, Params{3, -6}}) {
      num::UnitReport u = num::unit_checks(p);
      INFO(to_string(p));
      CHECK(u.constant_term_one);
      CHECK(u.u_identity);
      CHECK(u.T_at_minus1 == (p.m - 2) * (p.m - 2));
      CHECK(u.exceptional_triple);
    }
    CHECK_FALSE(num::unit_checks({5, 1}).exceptional_triple);
  }

  TEST_CASE("constellation for d = 1, m = 7") {
    num::ConstellationReport c = num::constellation_check(7, 1);
    CHECK(c.all_units);
    CHECK(c.Pw_at_minus1 == 1);
  }

  TEST_CASE("precision from the environment") {
    setenv("MURPHY_PRECISION_BITS", "512", 1);
    CHECK(num::precision_from_env() == 512);
    setenv("MURPHY_PRECISION_BITS", "junk", 1);
    CHECK(num::precision_from_env() == num::kDefaultPrecisionBits);
    unsetenv("MURPHY_PRECISION_BITS");
    CHECK(num::precision_from_env() == num::kDefaultPrecisionBits);
  }

  TEST_CASE("property: certified real count equals Sturm count") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> c(-15, 15);
    for (int i = 0; i < 60; ++i) {
      QPoly p = qpoly({c(rng), c(rng), c(rng), c(rng), c(rng), c(rng), 1});
      if (squarefree_factors(p).size() != 1 || p.degree() < 1) continue;
      CHECK(num::complex_roots(p, 128).real_count == sturm_real_roots(p));
    }
  }
}
