#include "murphy/report.hpp"

namespace murphy::report {

namespace {

json rat(const Rational& q) { return to_string(q); }

json rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

json quad(const QuadElem& e) { return e.str(); }

}  // namespace

json envelope(const std::string& kind, json body, long precision_bits) {
  json out = {{"schema", kSchema}, {"kind", kind}};
  if (precision_bits > 0) out["precision_bits"] = precision_bits;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

json poly(const QPoly& p) {
  json c = json::array();
  for (const auto& q : p.coeffs()) c.push_back(rat(q));
  return {{"text", to_string(p)}, {"coefficients_ascending", c}};
}

json real(const num::Real& x) { return x.str(30, std::ios_base::scientific); }

json to_json(const Params& p) { return {{"m", rat(p.m)}, {"A", rat(p.A)}}; }

json to_json(const Classification& c) {
  json flags = json::object();
  for (int i = 0; i < 7; ++i) flags[kSquareNames[i]] = c.square_flags[i];
  json j = {{"params", to_json(c.params)},
            {"s2", rat(c.s2)},
            {"w2", rat(c.w2)},
            {"y2", rat(c.y2)},
            {"square_flags", flags},
            {"degE", c.degE},
            {"T_irreducible", c.T_irreducible},
            {"group", c.group},
            {"abelian", c.abelian()},
            {"signature", {{"real_roots", c.signature.real_roots}, {"complex_pairs", c.signature.complex_pairs}}},
            {"totally_real", c.totally_real},
            {"notes", c.notes}};
  if (c.Psw_irreducible_over_Q) j["Psw_irreducible_over_Q"] = *c.Psw_irreducible_over_Q;
  return j;
}

json to_json(const IdentityReport& r) {
  json items = json::array();
  for (const auto& x : r.results)
    items.push_back({{"name", x.name}, {"passed", x.passed}, {"skipped", x.skipped}, {"detail", x.detail}});
  return {{"params", to_json(r.params)}, {"all_passed", r.all_passed()}, {"identities", items}};
}

json to_json(const num::UnitReport& r) {
  return {{"params", to_json(r.params)},
          {"constant_term_one", r.constant_term_one},
          {"T_at_minus1", rat(r.T_at_minus1)},
          {"Ps_at_minus1", quad(r.Ps_at_minus1)},
          {"u_identity", r.u_identity},
          {"norm_r_plus_1", rat(r.norm_r_plus_1)},
          {"norm_r_plus_u", rat(r.norm_r_plus_u)},
          {"norm_u_minus_1", rat(r.norm_u_minus_1)},
          {"exceptional_triple", r.exceptional_triple},
          {"notes", r.notes}};
}

json to_json(const TwinPair& t) {
  return {{"m", rat(t.m)},         {"A", rat(t.A)},         {"sw", rat(t.sw)},
          {"j", t.j},              {"branch", t.branch},    {"Psw", poly(t.Psw)},
          {"Psw_bar", poly(t.Psw_bar)}, {"degenerate", t.degenerate}, {"flag", t.flag}};
}

json to_json(const RegulatorReport& r) {
  json j = {{"case", to_string(r.reg_case)},
            {"params", to_json(r.params)},
            {"d", r.d},
            {"twin", r.twin},
            {"field_poly", poly(r.field_poly)},
            {"precision_bits", r.precision_bits},
            {"signature", {{"real_roots", r.signature.real_roots}, {"complex_pairs", r.signature.complex_pairs}}},
            {"eps", {{"d", to_string(r.eps.d)}, {"x", to_string(r.eps.x)}, {"y", to_string(r.eps.y)}, {"norm", r.eps.norm}}},
            {"eps_generator", r.eps_generator},
            {"torsion", r.torsion},
            {"unit_system", r.unit_system},
            {"log_matrix_det", real(r.log_matrix_det)},
            {"det_other_places", real(r.det_other_places)},
            {"closed_form", real(r.closed_form)},
            {"closed_form_spread", real(r.closed_form_spread)},
            {"tolerance", real(r.tolerance)},
            {"match", r.match},
            {"notes", r.notes}};
  if (r.half_det) j["half_det"] = real(*r.half_det);
  return j;
}

json to_json(const EstimateReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"j", row.j},
                    {"params", to_json(row.params)},
                    {"field_poly", poly(row.field_poly)},
                    {"R1", real(row.R1)},
                    {"estimate", real(row.estimate)},
                    {"ratio", real(row.ratio)},
                    {"squarefree_target", to_string(row.squarefree_target)},
                    {"squarefree", row.squarefree},
                    {"note", row.note}});
  return {{"family", to_string(r.family)},
          {"precision_bits", r.precision_bits},
          {"rows", rows},
          {"fitted_C", r.fitted_C},
          {"trend_ok", r.trend_ok}};
}

json to_json(const ScanResult& r, bool with_rows) {
  json hist = json::object();
  for (const auto& [k, v] : r.degE_histogram) hist[std::to_string(k)] = v;
  json ab = json::array();
  for (const auto& p : r.abelian_nonreal) ab.push_back(to_json(p));
  json j = {{"m_range", {r.options.m_lo, r.options.m_hi}},
            {"a_range", {r.options.a_lo, r.options.a_hi}},
            {"a_range_centered", r.options.centered},
            {"pairs", r.rows.size()},
            {"counted", r.counted},
            {"special_cased", r.special},
            {"degE_histogram", hist},
            {"degE8", r.degE8},
            {"abelian_nonreal", ab}};
  if (r.fraction)
    j["degE8_fraction"] = *r.fraction;
  else
    j["degE8_fraction"] = nullptr;
  j["fraction_defined"] = r.fraction.has_value();
  if (with_rows) {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"m", rat(row.params.m)},
                      {"A", rat(row.params.A)},
                      {"degE", row.degE},
                      {"group", row.group},
                      {"real_roots", row.real_roots},
                      {"notes", row.notes}});
    j["rows"] = rows;
  }
  return j;
}

json to_json(const FamilySpec& s) {
  json j = {{"family", to_string(s.kind)}, {"t", rat(s.t)}, {"n", s.n}, {"P", poly(s.P)}, {"sigma_mod_P", poly(s.sigma_x)}};
  if (s.mobius) {
    const auto& M = *s.mobius;
    j["sigma"] = "(" + to_string(QPoly({M.b, M.a})) + ")/(" + to_string(QPoly({M.d, M.c})) + ")";
  } else {
    j["sigma"] = "(" + to_string(s.sigma_num) + ")/(" + to_string(s.sigma_den) + ")";
  }
  return j;
}

json to_json(const FamilyIdentityReport& r) {
  json j = {{"family", to_string(r.kind)},
            {"t_degree_bound", r.t_degree_bound},
            {"sample_count", r.samples.size()},
            {"formal_identity", r.formal_identity},
            {"passed", r.all_pass}};
  if (r.failing_t) j["failing_t"] = rat(*r.failing_t);
  return j;
}

json to_json(const DiffgenReport& r) {
  return {{"family", to_string(r.kind)}, {"t", rat(r.t)}, {"k", r.k},
          {"y_k", poly(r.y)},           {"f_k", poly(r.f)}, {"murphy_eta", r.murphy_eta}};
}

json to_json(const WashingtonReport& r) {
  json j = {{"t", rat(r.t)},
            {"P_t", poly(r.P_t)},
            {"f_t", poly(r.f_t)},
            {"u_expr", poly(r.u_expr)},
            {"u_relation", r.u_relation},
            {"u_matches_sigma", r.u_matches_sigma},
            {"u_unscaled_relation", r.u_unscaled_relation},
            {"x_over_v", poly(r.x_over_v)},
            {"x_over_v_formula", r.x_over_v_formula},
            {"f_at_x_over_v", r.f_at_x_over_v},
            {"xv", poly(r.xv)},
            {"P_at_xv", r.P_at_xv},
            {"repeated_factor", r.repeated_factor},
            {"cofactor", poly(r.cofactor)},
            {"passed", r.pass()}};
  if (r.cofactor_same_field) j["cofactor_same_field"] = *r.cofactor_same_field;
  return j;
}

json to_json(const ShenPoly& s) {
  json coeffs = json::array();
  for (const auto& c : s.P.coeffs()) coeffs.push_back(to_string(c, "a"));
  return {{"n", s.n}, {"Q", poly(s.Q)}, {"V", poly(s.V)}, {"P_coefficients_ascending", coeffs}};
}

json to_json(const ShenInvariants& r) {
  return {{"n", r.n},           {"monic", r.monic},       {"parity", r.parity},   {"v_gcd", r.v_gcd},
          {"constant_term", r.constant_term}, {"doubling", r.doubling}, {"passed", r.all()}};
}

json to_json(const ShenOcticReport& r) {
  return {{"samples", rats(r.samples)},
          {"f3_x5_rational", to_string(r.f3_x5_rational, "a")},
          {"f3_x5_xi", to_string(r.f3_x5_xi, "a")},
          {"f3_degree_ok", r.f3_degree_ok},
          {"f3_matches_alt_form", r.f3_matches_alt_form},
          {"sigma_permutes", r.sigma_permutes},
          {"formal_identity", r.formal_identity},
          {"passed", r.pass()}};
}

json to_json(const LambdaReport& r) {
  json j = {{"n", r.n},
            {"a", rat(r.a)},
            {"precision_bits", r.precision_bits},
            {"cyclic", r.cyclic},
            {"max_perm_error", real(r.max_perm_error)},
            {"tolerance", real(r.tolerance)},
            {"sum_ok", r.sum_ok},
            {"max_sum_error", real(r.max_sum_error)},
            {"samples", r.samples},
            {"passed", r.pass()}};
  if (r.s_vanishes) {
    j["s_vanishes"] = *r.s_vanishes;
    j["max_S"] = real(r.max_S);
  }
  return j;
}

json to_json(const Order10Report& r) {
  auto power = [](const Order10Power& p) {
    return json{{"k", p.k}, {"sum_vanishes", p.sum_vanishes}, {"formal_identity", p.formal_identity},
                {"sum_at_first_sample", p.sum_at_first}};
  };
  return {{"m10_scalar", r.m10_scalar},
          {"m5_scalar", r.m5_scalar},
          {"m2_scalar", r.m2_scalar},
          {"samples", rats(r.samples)},
          {"sigma_f3", power(r.f3)},
          {"sigma_f7", power(r.f7)},
          {"identity_powers", r.identity_powers},
          {"passed", r.pass()}};
}

}  // namespace murphy::report
