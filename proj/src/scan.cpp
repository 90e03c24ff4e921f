#include "murphy/scan.hpp"

#include <algorithm>
#include <thread>

namespace murphy {

namespace {

std::vector<Params> pairs(const ScanOptions& opt) {
  std::vector<Params> out;
  for (long m = opt.m_lo; m <= opt.m_hi; ++m) {
    if (!opt.centered) {
      for (long a = opt.a_lo; a <= opt.a_hi; ++a) out.push_back({Rational(m), Rational(a)});
      continue;
    }
    // A + (m+2)/2 in [a_lo, a_hi] with A an integer.
    const Rational shift = make_rational(m + 2, 2);
    Rational lo = opt.a_lo - shift, hi = opt.a_hi - shift;
    Integer first;
    mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    for (Integer a = first; a <= hi; ++a) out.push_back({Rational(m), Rational(a)});
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

ScanRow classify_row(const Params& p) {
  ScanRow row;
  row.params = p;
  row.special = p.m == 2 || p.m == -2;
  Classification c = classify(p);
  row.degE = c.degE;
  row.group = c.group;
  row.real_roots = c.signature.real_roots;
  for (std::size_t i = 0; i < c.notes.size(); ++i) row.notes += (i ? "; " : "") + c.notes[i];
  if (row.special) row.notes += std::string(row.notes.empty() ? "" : "; ") + "m = +-2 special case";
  row.abelian_nonreal = c.abelian() && !c.totally_real;
  return row;
}

}  // namespace

ScanResult scan(const ScanOptions& opt) {
  ScanResult r;
  r.options = opt;
  std::vector<Params> ps = pairs(opt);
  r.rows.resize(ps.size());
  unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(ps.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < ps.size(); i += nt) r.rows[i] = classify_row(ps[i]);
    });
  for (auto& th : pool) th.join();

  for (const auto& row : r.rows) {
    if (row.special) {
      ++r.special;
      continue;
    }
    ++r.counted;
    ++r.degE_histogram[row.degE];
    if (row.degE == 8) ++r.degE8;
    if (row.abelian_nonreal) r.abelian_nonreal.push_back(row.params);
  }
  if (r.counted) r.fraction = static_cast<double>(r.degE8) / static_cast<double>(r.counted);
  return r;
}

void write_csv(std::ostream& out, const ScanResult& r) {
  out << "m,A,degE,group,real_roots,notes\n";
  for (const auto& row : r.rows)
    out << to_string(row.params.m) << ',' << to_string(row.params.A) << ',' << row.degE << ','
        << csv_field(row.group) << ',' << row.real_roots << ',' << csv_field(row.notes) << '\n';
}

}  // namespace murphy
