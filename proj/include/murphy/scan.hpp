#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "murphy/classify.hpp"

namespace murphy {

struct ScanOptions {
  long m_lo = -100, m_hi = 100;
  // Bounds on A + (m+2)/2 when centered, else on A itself.
  long a_lo = -100, a_hi = 100;
  bool centered = true;
  unsigned threads = 0;  // 0 uses the hardware concurrency
};

struct ScanRow {
  Params params;
  int degE = 0;
  std::string group;
  int real_roots = 0;
  std::string notes;
  bool special = false;  // m = +-2, excluded from the fraction
  bool abelian_nonreal = false;
};

struct ScanResult {
  ScanOptions options;
  std::vector<ScanRow> rows;
  std::map<int, long> degE_histogram;  // over rows with m != +-2
  long counted = 0;
  long degE8 = 0;
  long special = 0;
  std::optional<double> fraction;  // degE8 / counted, absent when counted = 0
  std::vector<Params> abelian_nonreal;
};

// Integer pairs in the ranges, classified in parallel; rows keep scan order.
ScanResult scan(const ScanOptions& opt);

// Columns m,A,degE,group,real_roots,notes.
void write_csv(std::ostream& out, const ScanResult& r);

}  // namespace murphy
