#pragma once

#include <string>
#include <vector>

#include "murphy/murphy.hpp"

namespace murphy {

struct TwinPair {
  Rational m, A, sw;
  QPoly Psw, Psw_bar;
  long j = 0;
  std::string branch;  // "sw1", "sw2", "norm-1", "norm+1"
  bool degenerate = false;
  std::string flag;    // reason when degenerate
};

// Rational P_sw and its conjugate from the bundle when s^2 w^2 is a square.
// w is replaced by (sw / s^2) s with the sign of sw that makes P_sw rational.
// Throws std::invalid_argument when s^2 w^2 is not a square.
TwinPair twins_from_params(const Params& p);

// m = 3 twins from the Lucas/Fibonacci closed forms, family 1 (A = -5 + L_2j)
// or 2 (A = -5 - L_2j). Each pair is checked against the bundle and against
// P_sw P_sw_bar = T; std::logic_error on mismatch.
TwinPair twins_d5(long j, int family);

// Twins with Q(s) = Q(sqrt d) for j in [j_min, j_max]. d = 5 uses the closed
// forms; other d use the norm construction with m = L_2 (norm -1) or the
// smallest +-eps^n = 1 mod a (norm +1), both signs of X. Throws
// std::invalid_argument unless d > 1 is squarefree and a sum of two squares.
std::vector<TwinPair> twins_enumerate(long d, long j_min, long j_max);

// Representation d = a^2 + b^2 with a > 0 smallest, if one exists.
std::optional<std::pair<long, long>> two_squares(long d);

}  // namespace murphy
