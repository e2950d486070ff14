// Command-line front end: solve | table | plot | verify.
//
// Exit codes: 0 success, 1 usage error, 2 no approximant, 3 verification
// failure.

#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcfit/report.hpp"

namespace {

using namespace arcfit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoApproximant = 2;
constexpr int kExitVerifyFailed = 3;

struct Selection {
    std::string angle = "pi/3";
    int degree = 3;
    int continuity = 1;
    std::string side = "inner";
};

void add_selection_flags(CLI::App* cmd, Selection& sel) {
    cmd->add_option("--angle", sel.angle, "half-angle phi (radians or pi/K form)");
    cmd->add_option("--degree", sel.degree, "polynomial degree")
        ->check(CLI::IsMember({2, 3, 4}));
    cmd->add_option("--continuity", sel.continuity, "geometric continuity order")
        ->check(CLI::IsMember({0, 1, 2}));
    cmd->add_option("--side", sel.side, "inner or outer")
        ->check(CLI::IsMember({"inner", "outer"}));
}

CaseId make_case(const Selection& sel) {
    return CaseId{sel.degree, sel.continuity,
                  sel.side == "inner" ? Side::inner : Side::outer};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal one-sided Bezier approximants of circular arcs"};
    app.require_subcommand(1);

    Selection sel;
    std::string format = "text";
    auto* solve_cmd = app.add_subcommand("solve", "compute one optimal approximant");
    add_selection_flags(solve_cmd, sel);
    solve_cmd->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string table_id = "G31";
    std::vector<std::string> table_angles;
    bool table_csv = false;
    auto* table_cmd = app.add_subcommand("table", "regenerate a parameter table");
    table_cmd->add_option("--id", table_id, "G20|G30|G31|G41|G42");
    table_cmd->add_option("--angles", table_angles, "angle list (default: the six published rows)");
    table_cmd->add_flag("--csv", table_csv, "emit CSV instead of text");

    Selection plot_sel;
    std::string what = "both";
    std::string out_path;
    auto* plot_cmd = app.add_subcommand("plot", "emit an SVG plot");
    add_selection_flags(plot_cmd, plot_sel);
    plot_cmd->add_option("--what", what, "curve|error|both")
        ->check(CLI::IsMember({"curve", "error", "both"}));
    plot_cmd->add_option("--out", out_path, "output path (default: stdout)");

    Selection verify_sel;
    int grid_n = 0;
    bool verify_all = false;
    auto* verify_cmd = app.add_subcommand("verify", "brute-force optimality cross-check");
    add_selection_flags(verify_cmd, verify_sel);
    verify_cmd->add_option("--grid", grid_n, "grid points per parameter");
    verify_cmd->add_flag("--all", verify_all, "sweep all cases over the six table angles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            const CircularArc arc(parse_angle(sel.angle));
            try {
                const ApproximantResult r = solve(arc, make_case(sel));
                if (format == "json")
                    std::cout << result_to_json(arc, r).dump(2) << "\n";
                else if (format == "csv")
                    std::cout << render_result_csv(arc, r);
                else
                    std::cout << render_result_text(arc, r);
            } catch (const NoApproximantError& e) {
                std::cout << "no approximant: " << e.what() << "\n";
                return kExitNoApproximant;
            }
            return kExitOk;
        }

        if (table_cmd->parsed()) {
            TableSpec spec;
            spec.table_id = table_id;
            for (const std::string& a : table_angles)
                spec.angles.push_back(parse_angle(a));
            std::cout << render_table(spec, table_csv);
            return kExitOk;
        }

        if (plot_cmd->parsed()) {
            const CircularArc arc(parse_angle(plot_sel.angle));
            ApproximantResult r{CaseId{2, 0, Side::inner}, {}, {}, {}, 0.0, {}, {}};
            try {
                r = solve(arc, make_case(plot_sel));
            } catch (const NoApproximantError& e) {
                std::cerr << "no approximant: " << e.what() << "\n";
                return kExitNoApproximant;
            }
            const PlotWhat w = what == "curve"   ? PlotWhat::curve
                               : what == "error" ? PlotWhat::error
                                                 : PlotWhat::both;
            const std::string svg = render_svg(arc, r, w);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) {
                    std::cerr << "cannot write '" << out_path << "'\n";
                    return kExitUsage;
                }
                f << svg;
            }
            return kExitOk;
        }

        // verify
        bool all_passed = true;
        if (verify_all) {
            const std::vector<std::pair<int, int>> cases = {
                {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}};
            int passed = 0, total = 0;
            for (double phi : default_table_angles()) {
                const CircularArc arc(phi);
                for (auto [deg, cont] : cases) {
                    for (Side side : {Side::inner, Side::outer}) {
                        const OracleReport rep =
                            oracle_cross_check(arc, CaseId{deg, cont, side}, grid_n);
                        std::cout << "phi = " << phi << ": "
                                  << render_oracle_report(rep);
                        ++total;
                        if (rep.passed)
                            ++passed;
                        else
                            all_passed = false;
                    }
                }
            }
            std::cout << passed << "/" << total << " cross-checks passed\n";
        } else {
            const CircularArc arc(parse_angle(verify_sel.angle));
            const OracleReport rep =
                oracle_cross_check(arc, make_case(verify_sel), grid_n);
            std::cout << render_oracle_report(rep);
            all_passed = rep.passed;
        }
        return all_passed ? kExitOk : kExitVerifyFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
