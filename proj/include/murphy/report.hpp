#pragma once

#include "json.hpp"

#include "murphy/classify.hpp"
#include "murphy/families.hpp"
#include "murphy/numfield.hpp"
#include "murphy/regulator.hpp"
#include "murphy/scan.hpp"
#include "murphy/twins.hpp"

namespace murphy::report {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

// {"schema": 1, "kind": kind, "precision_bits": bits (when > 0), ...body}.
json envelope(const std::string& kind, json body, long precision_bits = 0);

json poly(const QPoly& p);
json real(const num::Real& x);

json to_json(const Params& p);
json to_json(const Classification& c);
json to_json(const IdentityReport& r);
json to_json(const num::UnitReport& r);
json to_json(const TwinPair& t);
json to_json(const RegulatorReport& r);
json to_json(const EstimateReport& r);
json to_json(const ScanResult& r, bool with_rows);
json to_json(const FamilySpec& s);
json to_json(const FamilyIdentityReport& r);
json to_json(const DiffgenReport& r);
json to_json(const WashingtonReport& r);
json to_json(const ShenPoly& s);
json to_json(const ShenInvariants& r);
json to_json(const ShenOcticReport& r);
json to_json(const LambdaReport& r);
json to_json(const Order10Report& r);

}  // namespace murphy::report
