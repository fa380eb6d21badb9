#pragma once

#include <string>

#include "spdual/verifier.hpp"

namespace spdual {

// Report JSON:
// { "theorem": string,
//   "domain": {"q": int, "denominator": int, "characters": [string]},
//   "points_checked": int,
//   "violations": [{"point","norm","bound","ordering"}],
//   "equality_witnesses": [string] }
// plus "all_coordinates_strict" / "max_norm_sum" when the run produced them.
// Keys are emitted sorted, so parse + re-serialize is byte identical.
std::string report_json(const Report& rep);

// Columns: family, parameters, norm, bound, verdict.
std::string report_csv(const Report& rep);

std::string report_text(const Report& rep);

// One row per enumerated parameter point.
struct EnumeratedRow {
    std::string family;
    std::string point;
    std::string norm;
};

std::string rows_json(const std::string& family, int q, const GridSpec& grid,
                      const std::vector<EnumeratedRow>& rows);
std::string rows_csv(const std::vector<EnumeratedRow>& rows);
std::string rows_text(const std::vector<EnumeratedRow>& rows);

std::string csv_escape(const std::string& field);

}  // namespace spdual
