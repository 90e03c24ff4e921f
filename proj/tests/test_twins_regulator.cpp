#include <cmath>

#include "doctest.h"
#include "murphy/regulator.hpp"
#include "murphy/twins.hpp"

using namespace murphy;
using num::Real;

namespace {

bool close(const Real& a, const Real& b, const char* tol) { return boost::multiprecision::abs(a - b) < Real(tol); }

}  // namespace

TEST_SUITE("twins") {
  TEST_CASE("d = 5 twins multiply back to T") {
    auto pairs = twins_enumerate(5, 1, 6);
    CHECK(pairs.size() == 12);
    for (const auto& t : pairs) {
      INFO(t.branch << " j=" << t.j);
      CHECK(t.Psw * t.Psw_bar == build_bundle({t.m, t.A}).T);
      CHECK(t.m == 3);
      if (t.j <= 2 && t.branch == "sw1") CHECK(t.degenerate);
      if (t.j >= 3) CHECK_FALSE(t.degenerate);
    }
  }

  TEST_CASE("twins from parameters") {
    TwinPair t = twins_from_params({3, 13});
    CHECK(t.sw == 40);
    CHECK(t.Psw == qpoly_desc({1, -13, -16, -2, 1}));
    CHECK(t.Psw_bar == qpoly_desc({1, -13, -56, -42, 1}));
    CHECK_THROWS_AS(twins_from_params({5, 1}), std::invalid_argument);
  }

  TEST_CASE("same and different twin fields") {
    for (Params p : {Params{-3, -4}, Params{-7, 8}, Params{-66, 13}}) {
      TwinPair t = twins_from_params(p);
      INFO(to_string(p));
      CHECK(num::same_field_check(t.Psw, t.Psw_bar).relation == num::FieldRelation::same);
    }
    TwinPair t = twins_from_params({7, -4});
    CHECK(num::same_field_check(t.Psw, t.Psw_bar).relation == num::FieldRelation::different);
  }

  TEST_CASE("d = 34 has a norm +1 unit and twins") {
    CHECK(fundamental_unit(Integer(34)).norm == 1);
    auto pairs = twins_enumerate(34, 1, 2);
    CHECK_FALSE(pairs.empty());
    for (const auto& t : pairs) CHECK(t.Psw * t.Psw_bar == build_bundle({t.m, t.A}).T);
    CHECK_THROWS_AS(twins_enumerate(3, 1, 2), std::invalid_argument);
    CHECK(*two_squares(34) == std::pair<long, long>{3, 5});
  }
}

TEST_SUITE("regulator") {
  TEST_CASE("closed forms match log determinants at 128 bits") {
    struct Case {
      RegCase c;
      Params p;
      int twin;
    };
    for (Case k : {Case{RegCase::imag_m01, {1, 2}, 0}, Case{RegCase::imag_mgt2, {3, -6}, 0},
                   Case{RegCase::twin_real, {3, 13}, 0}, Case{RegCase::twin_real, {3, 13}, 1}}) {
      RegulatorReport r = regulator(k.c, k.p, 128, 0, k.twin);
      INFO(to_string(k.c));
      CHECK(r.match);
      num::PrecisionGuard g(128);
      CHECK(close(r.log_matrix_det, r.closed_form, "1e-20"));
      CHECK(close(r.log_matrix_det, r.det_other_places, "1e-20"));
    }
  }

  TEST_CASE("unit index halving") {
    RegulatorReport r = regulator(RegCase::twin_real, {3, 13}, 128, 0, 0);
    REQUIRE(r.half_det);
    num::PrecisionGuard g(128);
    CHECK(close(r.log_matrix_det / *r.half_det, Real(2), "1e-20"));
  }

  TEST_CASE("dihedral real quartics within O(1/sqrt|m-2|)") {
    for (long m : {47, 102}) {
      RegulatorReport r = regulator(RegCase::dihedral_real, {m, 0}, 128, 1, 0);
      CHECK(r.match);
      double ratio = static_cast<double>(r.log_matrix_det / r.closed_form);
      CHECK(std::abs(ratio - 1) <= kNoncycC / std::sqrt(static_cast<double>(m - 2)));
    }
  }

  TEST_CASE("tiny regulator estimates approach 1") {
    for (auto f : {EstimateFamily::m1_tinyR, EstimateFamily::sw1_tinyR, EstimateFamily::sdb_tinyR}) {
      EstimateReport e = regulator_estimate_check(f, 4, 6, 128);
      INFO(to_string(f));
      CHECK(e.trend_ok);
      for (const auto& row : e.rows) CHECK(boost::multiprecision::abs(row.ratio - 1) <= 0.25);
    }
  }

  TEST_CASE("bad cases are rejected") {
    CHECK_THROWS_AS(parse_reg_case("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_estimate_family("nope"), std::invalid_argument);
  }
}
