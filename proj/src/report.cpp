#include "spdual/report.hpp"

#include <json.hpp>

namespace spdual {

using nlohmann::json;

static json domain_json(int q, const GridSpec& grid) {
    json chars = json::array();
    for (const auto& chi : grid.characters) chars.push_back(chi.str());
    return json{{"q", q}, {"denominator", grid.denominator}, {"characters", chars}};
}

std::string report_json(const Report& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["domain"] = domain_json(rep.q, rep.grid);
    j["points_checked"] = rep.points_checked;
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"point", v.point},
                             {"norm", v.norm},
                             {"bound", v.bound},
                             {"ordering", v.ordering}});
    j["violations"] = viols;
    json eq = json::array();
    for (const auto& w : rep.equality_witnesses) eq.push_back(w);
    j["equality_witnesses"] = eq;
    if (rep.all_coordinates_strict) j["all_coordinates_strict"] = *rep.all_coordinates_strict;
    if (rep.max_norm_sum) j["max_norm_sum"] = rep.max_norm_sum->str();
    if (rep.norm_sum_cap) j["norm_sum_cap"] = rep.norm_sum_cap->str();
    return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

static const char* kCsvHeader = "family,parameters,norm,bound,verdict\n";

std::string report_csv(const Report& rep) {
    std::string out = kCsvHeader;
    for (const auto& v : rep.violations) {
        out += csv_escape(rep.theorem) + "," + csv_escape(v.point) + "," + csv_escape(v.norm) +
               "," + csv_escape(v.bound) + "," + csv_escape("violated:" + v.ordering) + "\n";
    }
    return out;
}

std::string report_text(const Report& rep) {
    std::string out;
    out += rep.theorem + ": q=" + std::to_string(rep.q) +
           " denominator=" + std::to_string(rep.grid.denominator) +
           " points_checked=" + std::to_string(rep.points_checked) + "\n";
    out += "  domain: deformation exponents k/" + std::to_string(rep.grid.denominator) +
           " in (0,1), characters {";
    for (std::size_t i = 0; i < rep.grid.characters.size(); ++i) {
        if (i) out += ",";
        out += rep.grid.characters[i].str();
    }
    out += "}\n";
    for (const auto& v : rep.violations)
        out += "  VIOLATION [" + v.ordering + "] " + v.point + " norm=" + v.norm +
               " bound=" + v.bound + "\n";
    for (const auto& w : rep.equality_witnesses) out += "  equality: " + w + "\n";
    if (rep.all_coordinates_strict)
        out += std::string("  all_coordinates_strict: ") +
               (*rep.all_coordinates_strict ? "yes" : "no") + "\n";
    if (rep.max_norm_sum)
        out += "  max_norm_sum: " + rep.max_norm_sum->str() +
               (rep.norm_sum_cap ? " (cap " + rep.norm_sum_cap->str() + ")" : "") + "\n";
    out += rep.passed() ? "  PASS\n" : "  FAIL\n";
    return out;
}

std::string rows_json(const std::string& family, int q, const GridSpec& grid,
                      const std::vector<EnumeratedRow>& rows) {
    json j;
    j["family"] = family;
    j["domain"] = domain_json(q, grid);
    json points = json::array();
    for (const auto& r : rows) points.push_back(json{{"point", r.point}, {"norm", r.norm}});
    j["points"] = points;
    return j.dump(2) + "\n";
}

std::string rows_csv(const std::vector<EnumeratedRow>& rows) {
    std::string out = kCsvHeader;
    for (const auto& r : rows)
        out += csv_escape(r.family) + "," + csv_escape(r.point) + "," + csv_escape(r.norm) +
               ",,\n";
    return out;
}

std::string rows_text(const std::vector<EnumeratedRow>& rows) {
    std::string out;
    for (const auto& r : rows) out += r.norm + "  " + r.point + "\n";
    out += std::to_string(rows.size()) + " points\n";
    return out;
}

}  // namespace spdual
