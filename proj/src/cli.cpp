#include "spdual/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spdual/report.hpp"
#include "spdual/verifier.hpp"

namespace spdual {

namespace {

std::vector<UnitaryChar> parse_characters(const std::string& list) {
    std::vector<UnitaryChar> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(UnitaryChar::from_angle(Rational::parse(item)));
    }
    return out;
}

std::string join_vec(const ExpVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

int emit(const std::string& payload, const std::string& output_path, std::ostream& out,
         std::ostream& err) {
    if (output_path.empty()) {
        out << payload;
        return 0;
    }
    std::filesystem::path p = output_path;
    if (p.is_relative()) {
        const char* dir = std::getenv("SPDUAL_OUTPUT_DIR");
        if (dir && *dir) p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p);
    if (!f) {
        err << "error: cannot open output file " << p.string() << "\n";
        return 2;
    }
    f << payload;
    return 0;
}

struct CommonOpts {
    int q = -1;
    int denominator = 8;
    std::string characters = "0,1/2,1/4,3/4";
    std::string format = "text";
    std::string output;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_exec) {
    cmd->add_option("--q", opts.q, "group rank")->required();
    cmd->add_option("--denominator", opts.denominator, "exponent grid denominator (>= 2)");
    cmd->add_option("--characters", opts.characters, "comma list of character angles");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", opts.output, "output path (stdout when omitted)");
    if (with_exec) cmd->add_flag("--serial", opts.serial, "run the serial reference path");
}

GridSpec grid_from(const CommonOpts& opts) {
    return make_grid(opts.denominator, opts.q, parse_characters(opts.characters));
}

int cmd_enumerate(const CommonOpts& opts, const std::string& family, std::ostream& out,
                  std::ostream& err) {
    if (opts.q < 0) {
        err << "error: enumerate requires q >= 0\n";
        return 2;
    }
    GridSpec grid = grid_from(opts);
    std::vector<EnumeratedRow> rows;
    if (family == "sn") {
        for (const auto& [J, norm] : enumerate_strongly_negative(opts.q))
            rows.push_back({family, jord_str(J), vec_str(norm)});
    } else if (family == "negative") {
        for (const auto& [rep, norm] : enumerate_negative(opts.q, grid))
            rows.push_back({family, neg_str(rep), vec_str(norm)});
    } else {
        if (opts.q < 1) {
            err << "error: enumerate --family dual requires q >= 1\n";
            return 2;
        }
        for (const auto& pt : enumerate_dual_points(opts.q, grid))
            rows.push_back({family, point_str(pt), vec_str(dual_point_norm(pt))});
    }
    std::string payload;
    if (opts.format == "json")
        payload = rows_json(family, opts.q, grid, rows);
    else if (opts.format == "csv")
        payload = rows_csv(rows);
    else
        payload = rows_text(rows);
    return emit(payload, opts.output, out, err);
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, std::ostream& out,
               std::ostream& err) {
    GridSpec grid = grid_from(opts);
    ExecMode mode = opts.serial ? ExecMode::Serial : ExecMode::Parallel;
    std::vector<Report> reports;
    try {
        if (suite == "bound-by-trivial") {
            reports.push_back(verify_bound_by_trivial(opts.q, grid, mode));
        } else if (suite == "isolation") {
            reports.push_back(verify_isolation(opts.q, grid, mode));
        } else if (suite == "section5") {
            reports.push_back(verify_section5(opts.q, grid, mode));
        } else if (suite == "filters") {
            reports.push_back(verify_filters_consistency(opts.q, grid, mode));
        } else if (suite == "extremal") {
            reports.push_back(extremal_norm_sum(opts.q, grid, mode));
        } else {  // all: every suite whose rank precondition is met
            if (opts.q >= 1) reports.push_back(verify_bound_by_trivial(opts.q, grid, mode));
            if (opts.q >= 2) reports.push_back(verify_isolation(opts.q, grid, mode));
            if (opts.q >= 2) reports.push_back(verify_section5(opts.q, grid, mode));
            if (opts.q >= 1) reports.push_back(verify_filters_consistency(opts.q, grid, mode));
            if (opts.q >= 2) reports.push_back(extremal_norm_sum(opts.q, grid, mode));
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string payload;
    if (opts.format == "json") {
        if (reports.size() == 1) {
            payload = report_json(reports[0]);
        } else {
            payload = "{\n  \"reports\": [\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                std::string one = report_json(reports[i]);
                if (!one.empty() && one.back() == '\n') one.pop_back();
                payload += one + (i + 1 < reports.size() ? ",\n" : "\n");
            }
            payload += "  ]\n}\n";
        }
    } else if (opts.format == "csv") {
        payload = "family,parameters,norm,bound,verdict\n";
        for (const auto& rep : reports) {
            std::string rows = report_csv(rep);
            payload += rows.substr(rows.find('\n') + 1);
        }
    } else {
        for (const auto& rep : reports) payload += report_text(rep);
    }
    int rc = emit(payload, opts.output, out, err);
    if (rc != 0) return rc;
    for (const auto& rep : reports)
        if (!rep.passed()) return 1;
    return 0;
}

GroupKind parse_group(const std::string& g) {
    return g == "sp" ? GroupKind::Sp : GroupKind::SOOdd;
}

CFormula parse_formula(const std::string& f) {
    if (f == "intro-sqrt") return CFormula::IntroSqrt;
    if (f == "multiplicity") return CFormula::Multiplicity;
    return CFormula::Reconciled;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumeration and bound verification for the unramified unitary dual of Sp(2n,F)"};
    app.require_subcommand(1);

    CommonOpts enum_opts;
    std::string family = "sn";
    auto* cmd_enum = app.add_subcommand("enumerate", "list parameter points with exponent norms");
    cmd_enum->add_option("--family", family, "sn | negative | dual")
        ->required()
        ->check(CLI::IsMember({"sn", "negative", "dual"}));
    add_common(cmd_enum, enum_opts, false);

    auto* cmd_bounds = app.add_subcommand("bounds", "print a closed-form bound vector");
    std::string bound_kind;
    cmd_bounds->add_option("kind", bound_kind, "trivial | parabolic | bernstein | nonselfdual")
        ->required()
        ->check(CLI::IsMember({"trivial", "parabolic", "bernstein", "nonselfdual"}));
    std::string group = "sp";
    std::string formula = "reconciled";
    int bq = -1, bp = -1, bn = -1, jord_card = -1;
    cmd_bounds->add_option("--group", group, "sp | so-odd")
        ->check(CLI::IsMember({"sp", "so-odd"}));
    cmd_bounds->add_option("--q", bq, "classical group rank");
    cmd_bounds->add_option("--p", bp, "GL rank of the inducing class");
    cmd_bounds->add_option("--n", bn, "multiplicity");
    cmd_bounds->add_option("--jord-card", jord_card, "Jordan block count of the component");
    cmd_bounds->add_option("--formula", formula, "reconciled | intro-sqrt | multiplicity")
        ->check(CLI::IsMember({"reconciled", "intro-sqrt", "multiplicity"}));

    CommonOpts verify_opts;
    std::string suite;
    auto* cmd_ver = app.add_subcommand("verify", "exhaustively check a theorem suite");
    cmd_ver->add_option("suite", suite,
                        "bound-by-trivial | isolation | section5 | filters | extremal | all")
        ->required()
        ->check(CLI::IsMember(
            {"bound-by-trivial", "isolation", "section5", "filters", "extremal", "all"}));
    add_common(cmd_ver, verify_opts, true);

    std::vector<const char*> argv;
    argv.push_back("spdual");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int cli_rc = app.exit(e, out, err);
        return cli_rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_enum)) return cmd_enumerate(enum_opts, family, out, err);
        if (app.got_subcommand(cmd_bounds)) {
            ExpVector v;
            if (bound_kind == "trivial") {
                if (bq < 1) {
                    err << "error: bounds trivial requires --q >= 1\n";
                    return 2;
                }
                v = trivial_norm(parse_group(group), bq);
            } else if (bound_kind == "parabolic") {
                if (bp < 1 || bn < 1 || bq < 0) {
                    err << "error: bounds parabolic requires --p, --n and --q\n";
                    return 2;
                }
                v = parabolic_bound_vector(bp, bn, parse_group(group), bq, parse_formula(formula));
            } else if (bound_kind == "bernstein") {
                if (jord_card < 0 || bn < 1) {
                    err << "error: bounds bernstein requires --jord-card and --n\n";
                    return 2;
                }
                v = bernstein_bound_vector(jord_card, bn);
            } else {
                if (bn < 1) {
                    err << "error: bounds nonselfdual requires --n\n";
                    return 2;
                }
                v = nonselfdual_bound_vector(bn);
            }
            out << join_vec(v) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_ver)) return cmd_verify(verify_opts, suite, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace spdual
