#include "murphy/suites.hpp"

#include <random>
#include <stdexcept>

namespace murphy {

using report::json;
using report::to_json;

namespace {

void add(SuiteResult& r, std::string name, bool ok, json detail = json::object()) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

void core_suite(SuiteResult& r, const SuiteOptions& opt) {
  for (const Params& p : random_params(opt.count, opt.seed)) {
    IdentityReport rep = verify_core_identities(p);
    json failed = json::array();
    for (const auto& x : rep.results)
      if (!x.passed && !x.skipped) failed.push_back(x.name);
    add(r, "core identities at " + to_string(p), rep.all_passed(), {{"failed", failed}});
    if (sgn(monster_mu(p)) != 0) add(r, "Murphy condition at " + to_string(p), murphy_identity_check(p));
  }
}

void families_suite(SuiteResult& r) {
  for (FamilyKind k : all_family_kinds()) {
    FamilyIdentityReport rep = verify_M_family(k);
    add(r, "Murphy condition for " + to_string(k), rep.all_pass, to_json(rep));
    for (long t : {1, 2, 3}) add(r, "sigma order for " + to_string(k) + " at t=" + std::to_string(t),
                                 order_check(family_poly(k, Rational(t))));
  }
  for (long t : {1, 2, 3}) {
    DiffgenReport d = diffgen(family_poly(FamilyKind::quartic_b, Rational(t)), 3);
    bool ok = d.murphy_eta && d.f == family_poly(FamilyKind::quartic_b, Rational(-t)).P;
    add(r, "quartic y_3 gives the t -> -t polynomial at t=" + std::to_string(t), ok, to_json(d));
  }
  {
    const Rational t(2);
    DiffgenReport d = diffgen(family_poly(FamilyKind::quintic_d, t), 2);
    QPoly f2({Rational(-1), -(2 * t * t + 5 * t + 10), -(t * t * t * t + 5 * t * t * t + 17 * t * t + 25 * t + 25),
              -(t * t * t * t + 3 * t * t * t + 7 * t * t + 5 * t + 5), t * t * t + 3 * t * t + 5 * t + 5,
              Rational(1)});
    add(r, "quintic alternate polynomial f_2 at t=2", d.murphy_eta && d.f == f2, to_json(d));
  }
  for (long t : {1, 2, -3}) {
    ZElementReport z = z_element_check(Rational(t));
    add(r, "cubic z-element at t=" + std::to_string(t), z.cubic_relation && z.sigma_ratio);
  }
  for (long t : {-5, -3, -1, 1, 3, 5}) {
    WashingtonReport w = washington_equiv(Rational(t), 128);
    add(r, "Washington equivalence at t=" + std::to_string(t), w.pass(), to_json(w));
  }
}

void shen_suite(SuiteResult& r, long bits) {
  for (int n = 2; n <= 10; ++n) add(r, "discriminant formula n=" + std::to_string(n), shen_disc_check(n));
  for (int n = 2; n <= 16; ++n) {
    ShenInvariants inv = shen_invariants(n);
    add(r, "coefficient invariants n=" + std::to_string(n), inv.all(), to_json(inv));
  }
  ShenOcticReport oct = shen_octic_check();
  add(r, "octic over Q(xi)", oct.pass(), to_json(oct));
  for (auto [n, a] : std::vector<std::pair<int, long>>{{4, 1}, {6, 3}, {8, 2}, {12, 5}}) {
    LambdaReport l = lambda_cycle_check(n, Rational(a), bits);
    add(r, "lambda cycle n=" + std::to_string(n) + " a=" + std::to_string(a), l.pass(), to_json(l));
  }
}

void order10_suite(SuiteResult& r) {
  Order10Report o = order10_check();
  json detail = to_json(o);
  add(r, "f has compositional order exactly 10", o.m10_scalar && !o.m5_scalar && !o.m2_scalar, detail);
  add(r, "sigma = f^7 satisfies the n = 10 condition", o.f7.sum_vanishes && o.f7.formal_identity, detail);
}

void regulators_suite(SuiteResult& r, long bits) {
  auto reg = [&](const std::string& name, RegCase c, const Params& p, long d, int twin) {
    RegulatorReport rep = regulator(c, p, bits, d, twin);
    add(r, name, rep.match, to_json(rep));
  };
  reg("imaginary m in {0,1} at (1,2)", RegCase::imag_m01, {1, 2}, 0, 0);
  reg("imaginary m > 2 at (3,-6)", RegCase::imag_mgt2, {3, -6}, 0, 0);
  reg("twin P_sw at (3,13)", RegCase::twin_real, {3, 13}, 0, 0);
  reg("twin conjugate at (3,13)", RegCase::twin_real, {3, 13}, 0, 1);
  reg("dihedral m=47 d=1", RegCase::dihedral_real, {47, 0}, 1, 0);
  reg("dihedral m=102 d=1", RegCase::dihedral_real, {102, 0}, 1, 0);
  for (auto f : {EstimateFamily::m1_tinyR, EstimateFamily::sw1_tinyR, EstimateFamily::sdb_tinyR}) {
    EstimateReport e = regulator_estimate_check(f, 4, 6, bits);
    bool ok = e.trend_ok;
    for (const auto& row : e.rows) ok = ok && boost::multiprecision::abs(row.ratio - 1) <= 0.25;
    add(r, "regulator estimate " + to_string(f), ok, to_json(e));
  }
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json SuiteResult::to_json() const {
  json items = json::array();
  long failures = 0;
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    failures += !c.passed;
  }
  return report::envelope("verify", {{"suite", suite}, {"passed", passed()}, {"checks", items.size()},
                                     {"failures", failures}, {"results", items}},
                          precision_bits);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "families", "shen", "order10", "regulators"};
  return names;
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt) {
  SuiteResult r;
  r.suite = suite;
  if (suite == "core") {
    core_suite(r, opt);
  } else if (suite == "families") {
    families_suite(r);
  } else if (suite == "shen") {
    r.precision_bits = opt.bits;
    shen_suite(r, opt.bits);
  } else if (suite == "order10") {
    order10_suite(r);
  } else if (suite == "regulators") {
    r.precision_bits = opt.bits;
    regulators_suite(r, opt.bits);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return r;
}

std::vector<Params> random_params(long count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
  std::vector<Params> out;
  while (static_cast<long>(out.size()) < count) {
    Params p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    if (is_square(p.m * p.m - 4)) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace murphy
