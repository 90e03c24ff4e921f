#include "murphy/polyring.hpp"

#include <sstream>

namespace murphy {

std::vector<QPoly> squarefree_factors(const QPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<QPoly> out;
  QPoly a = p.monic();
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = exact_quotient(a, c);
  QPoly y = exact_quotient(b, c);
  // Yun: y - w' = w * d_i for successive factors.
  QPoly z = y - w.derivative();
  while (w.degree() > 0) {
    QPoly g = gcd(w, z);
    out.push_back(g);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

int sign_changes(const std::vector<int>& s) {
  int changes = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

int sturm_real_roots(const QPoly& p) {
  if (p.degree() < 1) return 0;
  std::vector<QPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    int s = sgn(q.lead());
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 ? -s : s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

int real_roots_with_multiplicity(const QPoly& p) {
  auto parts = squarefree_factors(p);
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    total += static_cast<int>(i + 1) * sturm_real_roots(parts[i]);
  return total;
}

std::string to_text(const QPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.coeffs()[i]);
  }
  return out;
}

QPoly from_text(const std::string& text) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t\n");
    auto e = item.find_last_not_of(" \t\n");
    if (b == std::string::npos) {
      if (!any && ss.eof()) break;
      throw std::invalid_argument("empty coefficient in '" + text + "'");
    }
    c.push_back(parse_rational(item.substr(b, e - b + 1)));
    any = true;
  }
  return QPoly(std::move(c));
}

QPoly qpoly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly qpoly_desc(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long v : descending) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return QPoly(std::move(c));
}

}  // namespace murphy
