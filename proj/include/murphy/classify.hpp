#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "murphy/murphy.hpp"

namespace murphy {

// Order of the seven square tests.
enum SquareIndex { kS = 0, kW, kY, kSW, kSY, kWY, kSWY };
inline constexpr const char* kSquareNames[7] = {"s2", "w2", "y2", "s2w2", "s2y2", "w2y2", "s2w2y2"};

struct Signature {
  int real_roots = 0;
  int complex_pairs = 0;
};

struct Classification {
  Params params;
  Rational s2, w2, y2;
  std::array<bool, 7> square_flags{};
  int degE = 0;
  bool T_irreducible = false;
  std::optional<bool> Psw_irreducible_over_Q;  // set when sw is rational
  std::string group;
  Signature signature;
  bool totally_real = false;
  std::vector<std::string> notes;

  bool abelian() const;
};

// Seven square flags; a zero generator is treated as rational.
std::array<bool, 7> square_flags(const Rational& s2, const Rational& w2, const Rational& y2);
int degree_E(const std::array<bool, 7>& flags);

// Res(q1,q3) Res(q2,q4) without building the full bundle.
Rational monster_mu(const Params& p);

Classification classify(const Params& p);

// Real-root count of T with multiplicity. Simple-root cases follow the sign
// rules on s^2, w^2, y^2; repeated-root cases use the Washington rule or an
// exact Sturm count.
Signature signature(const Params& p);

// Value |(A+4)^2 + mA(A+4) + A^2| separating the two m > 2 cases.
Rational signature_discriminant(const Params& p);

// A for the dihedral parametrization with divisor d.
Rational dihedral_A(const Rational& m, const Rational& d);
QPoly dihedral_quartic(const Rational& m, const Rational& d);

enum class RealCase { yw_integral, swy_integral, dihedral_divisor, sw_integral };

// Whether the splitting field is totally real, read from the exception lists
// for integer parameters. Throws std::invalid_argument if the case hypothesis
// fails. For dihedral_divisor, p.A is ignored and d supplies the divisor.
bool totally_real_special(RealCase c, const Params& p, long d = 0);

}  // namespace murphy
