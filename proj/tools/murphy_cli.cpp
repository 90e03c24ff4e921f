#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "murphy/suites.hpp"

using namespace murphy;
using report::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(name + ": '" + text + "' is not a rational literal p/q");
  }
}

std::pair<long, long> range_arg(const std::string& name, const std::string& text) {
  auto colon = text.find(':', text[0] == '-' ? 1 : 0);
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    long lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    std::string rest = text.substr(colon + 1);
    long hi = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError(name + ": '" + text + "' is not a range lo:hi");
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string factor_text(const QPoly& T) {
  std::string out;
  auto sf = squarefree_factors(T);
  for (std::size_t i = 0; i < sf.size(); ++i) {
    if (sf[i].degree() < 1) continue;
    if (!out.empty()) out += " * ";
    out += "(" + to_string(sf[i]) + ")";
    if (i > 0) out += "^" + std::to_string(i + 1);
  }
  return out;
}

bool is_integral(const Params& p) { return is_integer(p.m) && is_integer(p.A); }

int cmd_analyze(const std::string& ms, const std::string& as, bool as_json) {
  Params p{rational_arg("m", ms), rational_arg("A", as)};
  json body = {{"params", report::to_json(p)}};
  std::ostringstream text;
  text << "(m, A) = " << to_string(p) << '\n';

  auto mu_case = mu_zero_case(p);
  if (mu_case) {
    body["degenerate_case"] = *mu_case;
    text << "degenerate: " << *mu_case << " (monster resultant vanishes)\n";
  }
  try {
    OcticBundle b = build_bundle(p);
    body["T"] = report::poly(b.T);
    body["factor_structure"] = factor_text(b.T);
    body["self_related"] = related_octic(p) == p;
    body["mu"] = to_string(b.mu);
    text << "T = " << to_string(b.T) << '\n';
    text << "squarefree structure: " << factor_text(b.T) << '\n';
    text << "mu = " << to_string(b.mu) << '\n';
    if (related_octic(p) == p) text << "self-related octic\n";
  } catch (const DegenerateParams& e) {
    body["degenerate_case"] = e.label();
    text << "degenerate: " << e.label() << '\n';
  }
  try {
    Classification c = classify(p);
    body["classification"] = report::to_json(c);
    text << "degE = " << c.degE << ", group " << c.group << '\n';
    text << "signature: " << c.signature.real_roots << " real, " << c.signature.complex_pairs << " complex pairs"
         << (c.totally_real ? ", totally real splitting field" : "") << '\n';
    for (const auto& n : c.notes) text << "note: " << n << '\n';
  } catch (const DegenerateParams& e) {
    body["degenerate_case"] = e.label();
    text << "degenerate: " << e.label() << '\n';
  }
  if (is_integral(p) && p.m != 2 && p.m != -2) {
    try {
      num::UnitReport u = num::unit_checks(p);
      body["units"] = report::to_json(u);
      text << "units: N(r+1) = " << to_string(u.norm_r_plus_1) << ", N(r+u) = " << to_string(u.norm_r_plus_u)
           << (u.exceptional_triple ? ", r, r+1, r+u is an exceptional triple" : "") << '\n';
      for (const auto& n : u.notes) text << "unit note: " << n << '\n';
    } catch (const std::exception& e) {
      text << "units: " << e.what() << '\n';
    }
  }
  if (as_json)
    print_json(report::envelope("analyze", body));
  else
    std::cout << text.str();
  return kOk;
}

int cmd_scan(const std::string& mr, const std::string& ar, bool absolute_a, const std::string& csv,
             unsigned threads, bool as_json) {
  ScanOptions opt;
  std::tie(opt.m_lo, opt.m_hi) = range_arg("--m-range", mr);
  std::tie(opt.a_lo, opt.a_hi) = range_arg("--a-range", ar);
  opt.centered = !absolute_a;
  opt.threads = threads;
  std::ofstream file;
  if (!csv.empty()) {
    file.open(csv);
    if (!file) {
      std::cerr << "error: cannot write " << csv << '\n';
      return kFail;
    }
  }
  ScanResult r = scan(opt);
  if (file) write_csv(file, r);
  if (as_json) {
    print_json(report::envelope("scan", report::to_json(r, false)));
    return kOk;
  }
  std::cout << "pairs " << r.rows.size() << ", counted " << r.counted << ", special-cased (m = +-2) " << r.special
            << '\n';
  for (const auto& [k, v] : r.degE_histogram) std::cout << "degE " << k << ": " << v << '\n';
  if (r.fraction)
    std::cout << "degE=8 fraction " << r.degE8 << "/" << r.counted << " = " << *r.fraction << '\n';
  else
    std::cout << "degE=8 fraction undefined (no pairs with m != +-2)\n";
  std::cout << "abelian non-real:";
  for (const auto& p : r.abelian_nonreal) std::cout << ' ' << to_string(p);
  std::cout << '\n';
  return kOk;
}

int cmd_twins(long d, long jmin, long jmax, const std::vector<std::string>& ma, bool as_json) {
  std::vector<TwinPair> pairs;
  if (!ma.empty()) {
    if (ma.size() != 2) throw UsageError("twins takes either --d or m A");
    pairs.push_back(twins_from_params({rational_arg("m", ma[0]), rational_arg("A", ma[1])}));
  } else {
    if (jmin > jmax) throw UsageError("--j-min exceeds --j-max");
    pairs = twins_enumerate(d, jmin, jmax);
  }
  bool ok = true;
  json arr = json::array();
  for (const auto& t : pairs) {
    bool product = t.Psw * t.Psw_bar == build_bundle({t.m, t.A}).T;
    ok = ok && product;
    json j = report::to_json(t);
    j["product_is_T"] = product;
    arr.push_back(j);
    if (!as_json)
      std::cout << (t.branch.empty() ? "given" : t.branch) << " j=" << t.j << " (m, A) = " << to_string(Params{t.m, t.A}) << " sw=" << to_string(t.sw)
                << "\n  P_sw     = " << to_string(t.Psw) << "\n  conjugate = " << to_string(t.Psw_bar)
                << (t.degenerate ? "\n  degenerate: " + t.flag : "") << (product ? "" : "\n  PRODUCT MISMATCH")
                << '\n';
  }
  if (as_json) print_json(report::envelope("twins", {{"pairs", arr}, {"passed", ok}}));
  return ok ? kOk : kFail;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool as_json) {
  SuiteResult r = run_suite(suite, opt);
  if (as_json) {
    print_json(r.to_json());
  } else {
    for (const auto& c : r.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    std::cout << suite << ": " << (r.passed() ? "all passed" : "FAILURES") << '\n';
  }
  return r.passed() ? kOk : kFail;
}

int cmd_shen(int n, const std::optional<std::string>& a, long bits, bool as_json) {
  if (n < 2) throw UsageError("--n must be at least 2");
  ShenPoly s = shen_build(n);
  json body = {{"shen", report::to_json(s)}};
  bool ok = true;
  ShenInvariants inv = shen_invariants(n);
  body["invariants"] = report::to_json(inv);
  ok = ok && inv.all();
  if (n <= 10) {
    bool disc = shen_disc_check(n);
    body["disc_formula"] = to_string(shen_disc_formula(n), "a");
    body["disc_check"] = disc;
    ok = ok && disc;
  }
  std::ostringstream text;
  text << "Q_n = " << to_string(s.Q) << "\nV_n = " << to_string(s.V) << "\n";
  text << "invariants " << (inv.all() ? "hold" : "FAIL") << '\n';
  if (body.contains("disc_check"))
    text << "disc = " << to_string(shen_disc_formula(n), "a") << (body["disc_check"].get<bool>() ? " (verified)" : " (MISMATCH)")
         << '\n';
  if (a) {
    Rational av = rational_arg("--a", *a);
    QPoly P = shen_poly(n, av);
    body["P"] = report::poly(P);
    text << "P_n(a, x) = " << to_string(P) << '\n';
    LambdaReport l = lambda_cycle_check(n, av, bits);
    body["lambda"] = report::to_json(l);
    ok = ok && l.pass();
    text << "lambda cycle " << (l.cyclic ? "cyclic" : "NOT cyclic") << ", sum identity "
         << (l.sum_ok ? "holds" : "FAILS");
    if (l.s_vanishes) text << ", S(x) " << (*l.s_vanishes ? "vanishes" : "DOES NOT vanish");
    text << " at " << bits << " bits\n";
  }
  if (as_json)
    print_json(report::envelope("shen", body, a ? bits : 0));
  else
    std::cout << text.str();
  return ok ? kOk : kFail;
}

int cmd_families(const std::string& kind, const std::optional<std::string>& t, bool as_json) {
  std::vector<FamilyKind> kinds;
  if (kind == "all")
    kinds = all_family_kinds();
  else
    try {
      kinds.push_back(parse_family_kind(kind));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  bool ok = true;
  json arr = json::array();
  for (FamilyKind k : kinds) {
    json j;
    if (t) {
      Rational tv = rational_arg("--t", *t);
      FamilySpec s;
      try {
        s = family_poly(k, tv);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      bool m = verify_M(s), o = order_check(s);
      ok = ok && m && o;
      j = report::to_json(s);
      j["murphy_condition"] = m;
      j["order_exact"] = o;
      if (!as_json)
        std::cout << to_string(k) << " t=" << to_string(tv) << ": P = " << to_string(s.P) << "\n  sigma(x) mod P = "
                  << to_string(s.sigma_x) << "\n  Murphy condition " << (m ? "holds" : "FAILS") << ", sigma order "
                  << (o ? "exactly n" : "WRONG") << '\n';
    } else {
      FamilyIdentityReport r = verify_M_family(k);
      ok = ok && r.all_pass;
      j = report::to_json(r);
      if (!as_json)
        std::cout << to_string(k) << ": t-degree bound " << r.t_degree_bound << ", " << r.samples.size()
                  << " samples" << (r.formal_identity ? ", exact rational-function identity" : "") << ": "
                  << (r.all_pass ? "holds" : "FAILS") << '\n';
    }
    arr.push_back(j);
  }
  if (as_json) print_json(report::envelope("families", {{"results", arr}, {"passed", ok}}));
  return ok ? kOk : kFail;
}

int cmd_regulator(const std::string& cs, const std::string& ms, const std::string& as, long d, int twin,
                  const std::string& est, long jmin, long jmax, long bits, bool as_json) {
  if (!est.empty()) {
    EstimateFamily f;
    try {
      f = parse_estimate_family(est);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    EstimateReport r = regulator_estimate_check(f, jmin, jmax, bits);
    if (as_json) {
      print_json(report::envelope("regulator_estimate", report::to_json(r), bits));
    } else {
      for (const auto& row : r.rows)
        std::cout << "j=" << row.j << " " << to_string(row.params) << " R1=" << row.R1.str(15)
                  << " estimate=" << row.estimate.str(15) << " ratio=" << row.ratio.str(8)
                  << (row.note.empty() ? "" : " (" + row.note + ")") << '\n';
      std::cout << "fitted C " << r.fitted_C << ", trend toward 1 " << (r.trend_ok ? "yes" : "NO") << '\n';
    }
    return r.trend_ok ? kOk : kFail;
  }
  RegCase c;
  try {
    c = parse_reg_case(cs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Params p{rational_arg("--m", ms), rational_arg("--A", as)};
  RegulatorReport r;
  try {
    r = regulator(c, p, bits, d, twin);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    print_json(report::envelope("regulator", report::to_json(r), bits));
  } else {
    std::cout << to_string(r.reg_case) << " at " << to_string(r.params) << ": field " << to_string(r.field_poly)
              << "\n  unit system " << r.unit_system << "\n  |det| = " << r.log_matrix_det.str(25)
              << "\n  closed form = " << r.closed_form.str(25) << "\n  match " << (r.match ? "yes" : "NO") << " at "
              << bits << " bits\n";
    if (r.half_det) std::cout << "  half-index determinant = " << r.half_det->str(25) << '\n';
    for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
  }
  return r.match ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octic T(m,A,x), simplest families and Murphy's units"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  long bits = num::precision_from_env();
  app.add_option("--bits", bits, "Numeric precision in bits (default MURPHY_PRECISION_BITS or 256)")
      ->check(CLI::Range(64L, num::kPrecisionCeiling));

  std::string am, aa;
  auto* analyze = app.add_subcommand("analyze", "Classify and report on one pair (m, A)");
  analyze->add_option("m", am, "m as p/q")->required();
  analyze->add_option("A", aa, "A as p/q")->required();

  std::string mr = "-100:100", ar = "-100:100", csv;
  bool absolute_a = false;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every integer pair in a box");
  scan_cmd->add_option("--m-range", mr, "lo:hi for m");
  scan_cmd->add_option("--a-range", ar, "lo:hi for A + (m+2)/2 (or A with --absolute-a)");
  scan_cmd->add_flag("--absolute-a", absolute_a, "Apply --a-range to A itself");
  scan_cmd->add_option("--csv", csv, "Write per-pair rows to this file");
  scan_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

  long td = 5, jmin = 1, jmax = 6;
  std::vector<std::string> tma;
  auto* twins = app.add_subcommand("twins", "Murphy's twins P_sw and its conjugate");
  twins->add_option("--d", td, "Squarefree d, a sum of two squares");
  twins->add_option("--j-min", jmin);
  twins->add_option("--j-max", jmax);
  twins->add_option("params", tma, "Optional m A instead of an enumeration");

  std::string suite;
  SuiteOptions sopt;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "core | families | shen | order10 | regulators")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--count", sopt.count, "Random pairs for the core suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", sopt.seed);

  int sn = 8;
  std::optional<std::string> sa;
  auto* shen = app.add_subcommand("shen", "Shen polynomials P_n(a, x)");
  shen->add_option("--n", sn, "Degree n > 1");
  shen->add_option("--a", sa, "Rational a for the numeric cycle check");

  std::string fk = "all";
  std::optional<std::string> ft;
  auto* fam = app.add_subcommand("families", "Simplest families (a)-(e)");
  fam->add_option("--kind", fk, "a..e, a family name, or all");
  fam->add_option("--t", ft, "Parameter t; without it the identity is checked by sampling");

  std::string rc = "imag_m01", rm = "1", ra = "2", re;
  long rd = 0;
  int rtwin = 0;
  long rjmin = 4, rjmax = 6;
  auto* reg = app.add_subcommand("regulator", "Regulator closed forms against log determinants");
  reg->add_option("--case", rc, "imag_m01 | imag_mgt2 | twin_real | dihedral_real");
  reg->add_option("--m", rm);
  reg->add_option("--A", ra);
  reg->add_option("--d", rd, "Divisor for dihedral_real");
  reg->add_option("--twin", rtwin, "0 for P_sw, 1 for its conjugate")->check(CLI::Range(0, 1));
  reg->add_option("--estimate", re, "m1_tinyR | sw1_tinyR | sdb_tinyR");
  reg->add_option("--j-min", rjmin);
  reg->add_option("--j-max", rjmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  sopt.bits = bits;

  try {
    if (*analyze) return cmd_analyze(am, aa, as_json);
    if (*scan_cmd) return cmd_scan(mr, ar, absolute_a, csv, threads, as_json);
    if (*twins) return cmd_twins(td, jmin, jmax, tma, as_json);
    if (*verify) return cmd_verify(suite, sopt, as_json);
    if (*shen) return cmd_shen(sn, sa, bits, as_json);
    if (*fam) return cmd_families(fk, ft, as_json);
    if (*reg) return cmd_regulator(rc, rm, ra, rd, rtwin, re, rjmin, rjmax, bits, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
