#include <sstream>

#include "doctest.h"
#include "murphy/suites.hpp"

using namespace murphy;

TEST_SUITE("scan") {
  TEST_CASE("small centered box") {
    ScanOptions o;
    o.m_lo = -10;
    o.m_hi = 10;
    o.a_lo = -10;
    o.a_hi = 10;
    ScanResult r = scan(o);
    CHECK(r.rows.size() == 431);
    CHECK(r.special == 42);
    CHECK(r.counted == 389);
    CHECK(r.degE8 == 280);
    REQUIRE(r.fraction);
    CHECK(*r.fraction == doctest::Approx(280.0 / 389.0));
  }

  TEST_CASE("thread count does not change the result") {
    ScanOptions o;
    o.m_lo = -6;
    o.m_hi = 6;
    o.a_lo = -6;
    o.a_hi = 6;
    o.threads = 1;
    ScanResult one = scan(o);
    o.threads = 4;
    ScanResult four = scan(o);
    REQUIRE(one.rows.size() == four.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
      CHECK(one.rows[i].params == four.rows[i].params);
      CHECK(one.rows[i].group == four.rows[i].group);
    }
    CHECK(one.degE_histogram == four.degE_histogram);
  }

  TEST_CASE("empty fraction") {
    ScanOptions o;
    o.m_lo = o.m_hi = 2;
    o.a_lo = o.a_hi = 0;
    ScanResult r = scan(o);
    CHECK(r.counted == 0);
    CHECK_FALSE(r.fraction);
  }

  TEST_CASE("absolute A range") {
    ScanOptions o;
    o.m_lo = o.m_hi = 7;
    o.a_lo = -4;
    o.a_hi = -4;
    o.centered = false;
    ScanResult r = scan(o);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].params == Params{7, -4});
    CHECK(r.rows[0].abelian_nonreal);
  }

  TEST_CASE("csv rows") {
    ScanOptions o;
    o.m_lo = 2;
    o.m_hi = 3;
    o.a_lo = o.a_hi = 0;
    o.centered = false;
    std::ostringstream out;
    write_csv(out, scan(o));
    std::string text = out.str();
    CHECK(text.rfind("m,A,degE,group,real_roots,notes\n", 0) == 0);
    CHECK(text.find("m = +-2 special case") != std::string::npos);
  }
}

TEST_SUITE("report") {
  TEST_CASE("envelope carries schema and precision") {
    report::json j = report::envelope("x", {{"a", 1}}, 128);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "x");
    CHECK(j["precision_bits"] == 128);
    CHECK(j["a"] == 1);
    CHECK_FALSE(report::envelope("y", report::json::object()).contains("precision_bits"));
  }

  TEST_CASE("polynomials serialize ascending with exact rationals") {
    report::json j = report::poly(QPoly({make_rational(1, 2), Rational(0), Rational(-3)}));
    CHECK(j["coefficients_ascending"] == report::json::array({"1/2", "0", "-3"}));
    CHECK(j["text"] == "-3*x^2 + 1/2");
  }

  TEST_CASE("classification json") {
    report::json j = report::to_json(classify({1, 0}));
    CHECK(j["group"] == "D8(8)");
    CHECK(j["square_flags"]["y2"] == true);
  }

  TEST_CASE("suites") {
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    SuiteResult r = run_suite("order10", {});
    CHECK(r.passed());
    report::json j = r.to_json();
    CHECK(j["kind"] == "verify");
    CHECK(j["failures"] == 0);
    SuiteOptions o;
    o.count = 10;
    CHECK(run_suite("core", o).passed());
  }

  TEST_CASE("random parameters are deterministic and avoid square m^2 - 4") {
    auto a = random_params(50, 3), b = random_params(50, 3);
    CHECK(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == b[i]);
      CHECK_FALSE(is_square(a[i].m * a[i].m - 4));
    }
  }
}

TEST_SUITE("scan") {
  // Measured value, just under 0.95.
  TEST_CASE("full default box: pinned degE=8 counts and abelian non-real list") {
    ScanResult r = scan(ScanOptions{});
    CHECK(r.rows.size() == 39899 + r.special);
    CHECK(r.counted == 39899);
    CHECK(r.degE8 == 37860);
    const std::vector<Params> expect{{0, -1}, {1, -4}, {1, 1},   {3, -3}, {3, -2},
                                     {4, -3}, {7, -10}, {7, -5}, {7, -4}, {7, 1}};
    CHECK(r.abelian_nonreal == expect);
  }
}
