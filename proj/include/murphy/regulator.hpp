#pragma once

#include <optional>
#include <string>
#include <vector>

#include "murphy/classify.hpp"
#include "murphy/numfield.hpp"

namespace murphy {

enum class RegCase { imag_m01, imag_mgt2, twin_real, dihedral_real };
std::string to_string(RegCase c);
RegCase parse_reg_case(const std::string& s);

struct RegulatorReport {
  RegCase reg_case = RegCase::imag_m01;
  Params params;
  long d = 0;                 // divisor for dihedral_real
  int twin = 0;               // 0 for P_sw, 1 for its conjugate (twin_real)
  QPoly field_poly;
  long precision_bits = 0;
  Signature signature;
  QuadUnit eps;               // fundamental unit of the quadratic subfield
  std::string eps_generator;  // "s" or "w"
  long torsion = 2;
  std::string unit_system;
  num::Real log_matrix_det;   // |det| over the first three places
  num::Real det_other_places; // |det| with a different place omitted
  num::Real closed_form;      // evaluated at the first place
  num::Real closed_form_spread;  // max difference of the closed form across places
  std::optional<num::Real> half_det;  // <zeta, eps, r, r+1> when r+1 is a unit
  num::Real tolerance;
  bool match = false;
  std::vector<std::string> notes;
};

// Hypothesis violations raise std::invalid_argument. For dihedral_real the
// closed form is an approximation and match uses relative error at most
// kNoncycC / sqrt|m-2|.
RegulatorReport regulator(RegCase c, const Params& p, long bits, long d = 0, int twin = 0);

inline constexpr double kNoncycC = 1.0;

enum class EstimateFamily { m1_tinyR, sw1_tinyR, sdb_tinyR };
std::string to_string(EstimateFamily f);
EstimateFamily parse_estimate_family(const std::string& s);

struct EstimateRow {
  long j = 0;
  Params params;
  QPoly field_poly;
  num::Real R1, estimate, ratio;
  Integer squarefree_target;  // quantity whose squarefreeness the estimate assumes
  bool squarefree = false;
  std::string note;
};

struct EstimateReport {
  EstimateFamily family = EstimateFamily::m1_tinyR;
  long precision_bits = 0;
  std::vector<EstimateRow> rows;
  double fitted_C = 0;   // max over rows of j |ratio - 1|
  bool trend_ok = false; // |ratio - 1| strictly decreasing in j
};

// Half regulator R1 = Reg<zeta, eps, r, r+1> against the asymptotic estimate.
// Indices failing the squarefree assumption are still evaluated and carry a note.
EstimateReport regulator_estimate_check(EstimateFamily f, long j_min, long j_max, long bits);

}  // namespace murphy
