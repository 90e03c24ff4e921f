#include "murphy/regulator.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "murphy/classify.hpp"
#include "murphy/twins.hpp"

namespace murphy {

using num::Complex;
using num::Real;

namespace {

// A number field Q[x]/(F) inside the octic, with the quadratic generator
// gen = sqrt(D) N and the residues needed for sigma.
struct FieldData {
  Params params;
  QPoly F;
  QPoly s_res;    // s mod F
  QPoly gen_res;  // s or w mod F
  Rational gen_N;
  QuadUnit eps;
  std::string gen_name;
  num::EmbeddingSet emb;
  std::vector<std::size_t> places;  // indices into emb.roots
  std::vector<int> weights;
};

using UnitFn = std::function<Complex(const Complex&)>;

FieldData make_field(const Params& p, const QPoly& F, const std::string& gen_name, long bits) {
  FieldData fd;
  fd.params = p;
  fd.F = F.monic();
  OcticBundle b = build_bundle(p);
  if (!(b.T % fd.F).is_zero()) throw std::logic_error("field polynomial does not divide T");
  SigmaMap sm = sigma_mod_T(b);
  fd.s_res = rem_monic(sm.s_expr, fd.F);
  Rational gen2;
  if (gen_name == "s") {
    fd.gen_res = fd.s_res;
    gen2 = b.s2;
  } else {
    if (!sm.w_expr) throw std::invalid_argument("w is not a polynomial in r (Res(C, T) = 0)");
    fd.gen_res = rem_monic(*sm.w_expr, fd.F);
    gen2 = b.w2;
  }
  fd.gen_name = gen_name;
  if (sgn(gen2) <= 0 || is_square(gen2) || !is_integer(gen2))
    throw std::invalid_argument(gen_name + "^2 must be a positive non-square integer");
  if (mulmod(fd.gen_res, fd.gen_res, fd.F) != QPoly(gen2))
    throw std::logic_error(gen_name + " residue does not square to " + gen_name + "^2");
  auto [core, k] = squarefree_decompose(gen2.get_num());
  fd.gen_N = Rational(k);
  fd.eps = fundamental_unit(core);
  fd.emb = num::complex_roots(fd.F, bits);
  for (std::size_t i = 0; i < fd.emb.roots.size(); ++i) {
    if (fd.emb.is_real[i]) {
      fd.places.push_back(i);
      fd.weights.push_back(1);
    } else if (fd.emb.roots[i].im > 0) {
      fd.places.push_back(i);
      fd.weights.push_back(2);
    }
  }
  return fd;
}

struct Units {
  UnitFn eps, r, sigma_r, r_plus_1, u;
};

Units units_of(const FieldData& fd) {
  Units U;
  const Rational m = fd.params.m;
  const QPoly gen = fd.gen_res, s = fd.s_res;
  const Rational x = Rational(fd.eps.x), y = Rational(fd.eps.y), N = fd.gen_N;
  U.r = [](const Complex& t) { return t; };
  U.eps = [=](const Complex& t) {
    return (Complex(num::to_real(x)) + Complex(num::to_real(y / N)) * num::eval(gen, t)) / Complex(Real(2));
  };
  U.u = [=](const Complex& t) { return (Complex(num::to_real(m)) + num::eval(s, t)) / Complex(Real(2)); };
  U.sigma_r = [u = U.u](const Complex& t) { return -(t + Complex(Real(1))) / (t + u(t)); };
  U.r_plus_1 = [](const Complex& t) { return t + Complex(Real(1)); };
  return U;
}

Real log_abs(const Complex& z) { return log(num::abs(z)); }

// |det| of w_j ln|unit_i(theta_j)| over the chosen three places.
Real det3(const FieldData& fd, const std::vector<UnitFn>& units, const std::vector<std::size_t>& which) {
  Real M[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::size_t pl = which[j];
      M[i][j] = fd.weights[pl] * log_abs(units[i](fd.emb.roots[fd.places[pl]]));
    }
  Real d = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  return abs(d);
}

Real ln_eps(const QuadUnit& e) {
  Real v = (num::to_real(Rational(e.x)) + num::to_real(Rational(e.y)) * sqrt(num::to_real(Rational(e.d)))) / 2;
  return log(v);
}

bool in_list(const Params& p, std::initializer_list<std::pair<long, long>> xs) {
  for (auto [m, A] : xs)
    if (p.m == m && p.A == A) return true;
  return false;
}

void require(bool ok, const std::string& why) {
  if (!ok) throw std::invalid_argument("regulator hypothesis: " + why);
}

}  // namespace

std::string to_string(RegCase c) {
  switch (c) {
    case RegCase::imag_m01: return "imag_m01";
    case RegCase::imag_mgt2: return "imag_mgt2";
    case RegCase::twin_real: return "twin_real";
    case RegCase::dihedral_real: return "dihedral_real";
  }
  return "?";
}

RegCase parse_reg_case(const std::string& s) {
  for (RegCase c : {RegCase::imag_m01, RegCase::imag_mgt2, RegCase::twin_real, RegCase::dihedral_real})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown regulator case " + s);
}

std::string to_string(EstimateFamily f) {
  switch (f) {
    case EstimateFamily::m1_tinyR: return "m1_tinyR";
    case EstimateFamily::sw1_tinyR: return "sw1_tinyR";
    case EstimateFamily::sdb_tinyR: return "sdb_tinyR";
  }
  return "?";
}

EstimateFamily parse_estimate_family(const std::string& s) {
  for (auto f : {EstimateFamily::m1_tinyR, EstimateFamily::sw1_tinyR, EstimateFamily::sdb_tinyR})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown estimate family " + s);
}

RegulatorReport regulator(RegCase c, const Params& p, long bits, long d, int twin) {
  require((is_integer(p.m) && is_integer(p.A)) || c == RegCase::dihedral_real, "integer parameters");
  RegulatorReport rep;
  rep.reg_case = c;
  rep.params = p;
  rep.d = d;
  rep.twin = twin;
  rep.precision_bits = bits;
  const Rational& m = p.m;
  Params prm = p;
  QPoly F;
  std::string gen = "s";
  switch (c) {
    case RegCase::imag_m01:
      require(m == -1 || m == 0 || m == 1, "m in {-1, 0, 1}");
      require(!in_list(p, {{-1, -3}, {-1, 1}, {0, -3}, {0, -1}, {1, -3}}), "excluded pair");
      F = build_bundle(p).T;
      gen = "w";
      break;
    case RegCase::imag_mgt2:
      require(m > 2, "m > 2");
      require((m + 2 + p.A) * (m + 2 + p.A) < 4 * (m - 2), "(m+2+A)^2 < 4(m-2)");
      F = build_bundle(p).T;
      break;
    case RegCase::twin_real: {
      require(abs(m) > 2, "|m| > 2");
      require(!in_list(p, {{3, -2}, {3, -3}}), "excluded pair");
      require(is_square(s2_of(p) * w2_of(p)), "sw rational");
      TwinPair tp = twins_from_params(p);
      require(!tp.degenerate, "non-degenerate twins (" + tp.flag + ")");
      F = twin ? tp.Psw_bar : tp.Psw;
      require(num::quartic_irreducible(F, bits), "[Q(r):Q] = 4");
      break;
    }
    case RegCase::dihedral_real: {
      require(is_integer(m) && d != 0 && d != -1, "integer m, d != 0, -1");
      require(m != 2 && m != -2, "m != +-2");
      require(is_integer((m - 2) / d), "d | m-2");
      require(Rational(d) * d <= abs(m - 2), "d^2 <= |m-2|");
      prm.A = dihedral_A(m, d);
      F = dihedral_quartic(m, d);
      require(num::quartic_irreducible(F, bits), "P_w irreducible");
      break;
    }
  }

  num::PrecisionGuard guard(bits);
  FieldData fd = make_field(prm, F, gen, bits);
  rep.params = prm;
  rep.field_poly = fd.F;
  rep.eps = fd.eps;
  rep.eps_generator = gen;
  rep.signature = {fd.emb.real_count, (F.degree() - fd.emb.real_count) / 2};
  if (c == RegCase::twin_real || c == RegCase::dihedral_real)
    require(fd.emb.real_count == 4, "totally real quartic");
  else
    require(fd.emb.real_count == 0, "totally imaginary octic");
  require(fd.places.size() == 4, "four archimedean places");
  rep.torsion = num::torsion_order(fd.F, bits);

  Units U = units_of(fd);
  const std::string zeta = rep.torsion == 2 ? "-1" : "zeta_" + std::to_string(rep.torsion);
  rep.unit_system = "<" + zeta + ", eps, r, sigma(r)>";
  rep.log_matrix_det = det3(fd, {U.eps, U.r, U.sigma_r}, {0, 1, 2});
  rep.det_other_places = det3(fd, {U.eps, U.r, U.sigma_r}, {1, 2, 3});

  const Real le = abs(ln_eps(fd.eps));
  auto closed_at = [&](std::size_t pl) -> Real {
    Complex t = fd.emb.roots[fd.places[pl]];
    Complex sr = U.sigma_r(t), u = U.u(t);
    switch (c) {
      case RegCase::imag_m01: {
        Real a = log_abs(t), b = log_abs(sr);
        return 16 * le * (a * a + b * b);
      }
      case RegCase::imag_mgt2:
      case RegCase::twin_real: {
        Real a = log_abs(t * t / u), b = log_abs(sr * sr * u);
        return (c == RegCase::imag_mgt2 ? Real(4) : Real(0.5)) * le * (a * a + b * b);
      }
      case RegCase::dihedral_real: {
        Real lm = log(abs(num::to_real(m - 2)));
        Real dd = num::to_real(Rational(d));
        Real ld = log(abs(dd)), ld1 = log(abs(dd + 1));
        Real t2 = log(abs((dd + 1) * (dd + 1) / dd));
        return 2 * le * abs(lm * lm + t2 * lm - ld * ld1);
      }
    }
    return Real(0);
  };
  rep.closed_form = closed_at(0);
  Real spread = 0;
  for (std::size_t pl = 1; pl < fd.places.size(); ++pl) spread = std::max(spread, Real(abs(closed_at(pl) - rep.closed_form)));
  rep.closed_form_spread = spread;

  if (c == RegCase::dihedral_real) {
    rep.tolerance = Real(kNoncycC) / sqrt(abs(num::to_real(m - 2)));
    rep.match = abs(rep.log_matrix_det / rep.closed_form - 1) <= rep.tolerance;
    rep.notes.push_back("closed form is asymptotic; tolerance is relative");
  } else {
    rep.tolerance = num::two_pow(-bits / 2);
    rep.match = abs(rep.log_matrix_det - rep.closed_form) <= rep.tolerance * (1 + rep.closed_form);
  }
  if (abs(rep.log_matrix_det - rep.det_other_places) > num::two_pow(-bits / 2) * (1 + rep.log_matrix_det))
    rep.notes.push_back("determinant depends on the omitted place");

  Rational n1 = fd.F(Rational(-1));
  if (n1 == 1 || n1 == -1) {
    rep.half_det = det3(fd, {U.eps, U.r, U.r_plus_1}, {0, 1, 2});
    rep.notes.push_back("r+1 is a unit; half_det uses <eps, r, r+1>");
  }
  return rep;
}

EstimateReport regulator_estimate_check(EstimateFamily f, long j_min, long j_max, long bits) {
  if (j_min > j_max || j_max > 8) throw std::invalid_argument("index range must satisfy j_min <= j_max <= 8");
  EstimateReport rep;
  rep.family = f;
  rep.precision_bits = bits;
  num::PrecisionGuard guard(bits);
  const Real ln_tau = log((1 + sqrt(Real(5))) / 2);
  auto L = [](long n) { return Rational(lucas_fib(Integer(5), n).L); };
  auto Fib = [](long n) { return Rational(lucas_fib(Integer(5), n).F); };
  for (long j = j_min; j <= j_max; ++j) {
    EstimateRow row;
    row.j = j;
    QPoly F;
    std::string gen = "s";
    Real est;
    switch (f) {
      case EstimateFamily::m1_tinyR: {
        row.params = {Rational(1), L(2 * j - 1) - 3};
        F = build_bundle(row.params).T;
        gen = "w";
        Rational a2 = row.params.A * row.params.A + 4;
        row.squarefree_target = a2.get_num();
        Real l = log(num::to_real(a2 * a2));
        est = ln_tau * l * l / 2;
        break;
      }
      case EstimateFamily::sw1_tinyR: {
        TwinPair tp = twins_d5(j, 1);
        row.params = {tp.m, tp.A};
        F = tp.Psw;
        Rational cc = Fib(2 * j - 1) - 2;
        row.squarefree_target = cc.get_num();
        Real l = log(num::to_real(5 * cc * cc));
        est = ln_tau * l * l / 4;
        break;
      }
      case EstimateFamily::sdb_tinyR: {
        Rational m = L(2 * j);
        row.params = {m, dihedral_A(m, 1)};
        F = dihedral_quartic(m, 1);
        Rational t = 4 * m * m + 9;
        row.squarefree_target = t.get_num();
        Real l = log(num::to_real(t));
        est = ln_tau * l * l / 4;
        break;
      }
    }
    const Integer& tgt = row.squarefree_target;
    row.squarefree = tgt != 0 && squarefree_status(abs(tgt)) != Squarefree::no;
    if (f == EstimateFamily::sw1_tinyR && (tgt % 2 == 0 || tgt % 5 == 0)) row.squarefree = false;
    if (!row.squarefree)
      row.note = "squarefree assumption fails for " + to_string(tgt) + "; ratio still reported";
    FieldData fd = make_field(row.params, F, gen, bits);
    Rational n1 = fd.F(Rational(-1));
    if (n1 != 1 && n1 != -1) throw std::logic_error("r+1 is not a unit in the estimate family");
    Units U = units_of(fd);
    row.field_poly = fd.F;
    row.R1 = det3(fd, {U.eps, U.r, U.r_plus_1}, {0, 1, 2});
    row.estimate = est;
    row.ratio = row.R1 / est;
    rep.rows.push_back(row);
  }
  rep.trend_ok = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    double dev = std::fabs(rep.rows[i].ratio.convert_to<double>() - 1);
    rep.fitted_C = std::max(rep.fitted_C, dev * rep.rows[i].j);
    if (i > 0 && !(dev < std::fabs(rep.rows[i - 1].ratio.convert_to<double>() - 1))) rep.trend_ok = false;
  }
  return rep;
}

}  // namespace murphy
