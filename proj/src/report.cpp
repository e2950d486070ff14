#include "arcfit/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace arcfit {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string fmt_param(double v) { return fmt("%.6g", v); }
std::string fmt_error(double v) { return fmt("%.2e", v); }

}  // namespace

double parse_angle(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty angle");

    double value;
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        try {
            value = parse_number(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse angle '" + text + "'");
        }
    } else {
        double factor = 1.0;
        const std::string before = strip(s.substr(0, pi_pos));
        if (!before.empty()) {
            if (before.back() != '*')
                throw std::invalid_argument("cannot parse angle '" + text + "'");
            factor = parse_number(strip(before.substr(0, before.size() - 1)));
        }
        double divisor = 1.0;
        const std::string after = strip(s.substr(pi_pos + 2));
        if (!after.empty()) {
            if (after.front() != '/')
                throw std::invalid_argument("cannot parse angle '" + text + "'");
            divisor = parse_number(strip(after.substr(1)));
        }
        value = factor * std::numbers::pi / divisor;
    }

    if (!(value > 0.0) || value > std::numbers::pi / 2 + 1e-12)
        throw std::invalid_argument("angle must lie in (0, pi/2]");
    return std::min(value, std::numbers::pi / 2);
}

std::vector<double> default_table_angles() {
    const double pi = std::numbers::pi;
    return {pi / 2, pi / 3, pi / 4, pi / 6, pi / 8, pi / 12};
}

std::pair<int, int> parse_table_id(const std::string& table_id) {
    if (table_id == "G20") return {2, 0};
    if (table_id == "G30") return {3, 0};
    if (table_id == "G31") return {3, 1};
    if (table_id == "G41") return {4, 1};
    if (table_id == "G42") return {4, 2};
    throw std::invalid_argument("unknown table id '" + table_id +
                                "' (expected G20|G30|G31|G41|G42)");
}

nlohmann::json result_to_json(const CircularArc& arc,
                              const ApproximantResult& result) {
    nlohmann::json j;
    j["schema_version"] = "1.0";
    j["arc"] = {{"phi", arc.phi}, {"c", arc.c}, {"s", arc.s}};
    j["case"] = {{"degree", result.case_id.degree},
                 {"continuity", result.case_id.continuity},
                 {"side", to_string(result.case_id.side)}};
    nlohmann::json params;
    params["xi"] = result.params.xi;
    if (result.params.eta) params["eta"] = *result.params.eta;
    if (result.params.u) params["u"] = *result.params.u;
    if (result.params.v) params["v"] = *result.params.v;
    j["params"] = params;
    nlohmann::json cps = nlohmann::json::array();
    for (const Point2& p : result.curve.control_points)
        cps.push_back({p.x, p.y});
    j["control_points"] = cps;
    j["max_radial_error"] = result.max_radial_error;
    j["certificate"] = {{"side", to_string(result.certificate.side)},
                        {"passed", result.certificate.passed},
                        {"worst_violation", result.certificate.worst_violation},
                        {"max_abs_psi", result.certificate.max_abs_psi},
                        {"sample_count", result.certificate.sample_count},
                        {"slack", result.certificate.slack}};
    j["equioscillation_nodes"] = result.equioscillation_nodes;
    return j;
}

std::string render_result_text(const CircularArc& arc,
                               const ApproximantResult& result) {
    std::ostringstream os;
    os << "case " << result.case_id.table_id() << " "
       << to_string(result.case_id.side) << ", phi = " << fmt_param(arc.phi)
       << "\n";
    os << "  xi  = " << fmt_param(result.params.xi) << "\n";
    if (result.params.eta) os << "  eta = " << fmt_param(*result.params.eta) << "\n";
    os << "  max radial error = " << fmt_error(result.max_radial_error) << "\n";
    os << "  one-sided certificate: "
       << (result.certificate.passed ? "pass" : "FAIL") << "\n";
    os << "  control points:";
    for (const Point2& p : result.curve.control_points)
        os << " (" << fmt_param(p.x) << ", " << fmt_param(p.y) << ")";
    os << "\n";
    if (!result.equioscillation_nodes.empty()) {
        os << "  equioscillation nodes:";
        for (double t : result.equioscillation_nodes) os << " " << fmt_param(t);
        os << "\n";
    }
    return os.str();
}

std::string render_result_csv(const CircularArc& arc,
                              const ApproximantResult& result) {
    std::ostringstream os;
    os << "phi,degree,continuity,side,xi,eta,err\n";
    os << fmt("%.17g", arc.phi) << "," << result.case_id.degree << ","
       << result.case_id.continuity << "," << to_string(result.case_id.side)
       << "," << fmt("%.17g", result.params.xi) << ",";
    if (result.params.eta) os << fmt("%.17g", *result.params.eta);
    os << "," << fmt_error(result.max_radial_error) << "\n";
    return os.str();
}

std::string render_table(const TableSpec& spec, bool csv) {
    const auto [degree, continuity] = parse_table_id(spec.table_id);
    const bool two_param = (degree - continuity == 3);
    const std::vector<double> angles =
        spec.angles.empty() ? default_table_angles() : spec.angles;

    std::ostringstream os;
    if (csv) {
        os << (two_param ? "phi,xi_out,eta_out,err_out,xi_in,eta_in,err_in"
                         : "phi,xi_out,err_out,xi_in,err_in")
           << "\n";
    } else {
        os << "table " << spec.table_id
           << (two_param ? "  (phi | xi_out eta_out err_out | xi_in eta_in err_in)"
                         : "  (phi | xi_out err_out | xi_in err_in)")
           << "\n";
    }

    const char sep = csv ? ',' : ' ';
    for (double phi : angles) {
        const CircularArc arc(phi);
        os << fmt_param(phi);
        for (Side side : {Side::outer, Side::inner}) {
            try {
                const ApproximantResult r = solve(arc, CaseId{degree, continuity, side});
                os << sep << fmt_param(r.params.xi);
                if (two_param) os << sep << fmt_param(*r.params.eta);
                os << sep << fmt_error(r.max_radial_error);
            } catch (const NoApproximantError&) {
                os << sep << (csv ? "no_approximant" : "no approximant") << sep
                   << "-";
                if (two_param) os << sep << "-";
            }
        }
        os << "\n";
    }
    if (!csv)
        os << "(general optimal xi*/eta* columns of the published tables are "
              "not produced by this tool)\n";
    return os.str();
}

namespace {

std::string svg_coord(double v) { return fmt("%.9g", v); }

// maps the unit-circle frame to SVG pixels
struct Frame {
    double scale = 180.0;
    double cx = 300.0;
    double cy = 300.0;
    std::string map(double x, double y) const {
        return svg_coord(cx + scale * x) + "," + svg_coord(cy - scale * y);
    }
};

void polyline(std::ostringstream& os, const std::vector<std::string>& pts,
              const char* style) {
    os << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i ? " " : "") << pts[i];
    os << "\"/>\n";
}

}  // namespace

std::string render_svg(const CircularArc& arc, const ApproximantResult& result,
                       PlotWhat what) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";

    if (what == PlotWhat::curve || what == PlotWhat::both) {
        Frame fr;
        std::vector<std::string> pts;
        for (int i = 0; i <= 720; ++i) {
            const double a = -arc.phi + 2.0 * arc.phi * i / 720.0;
            pts.push_back(fr.map(std::cos(a), std::sin(a)));
        }
        polyline(os, pts, "stroke=\"#888888\" stroke-width=\"1\"");

        pts.clear();
        for (const Point2& p : result.curve.control_points)
            pts.push_back(fr.map(p.x, p.y));
        polyline(os, pts, "stroke=\"#55aa55\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");

        pts.clear();
        for (int i = 0; i <= 400; ++i) {
            const Point2 p = bezier_eval(result.curve, -1.0 + 2.0 * i / 400.0);
            pts.push_back(fr.map(p.x, p.y));
        }
        polyline(os, pts, "stroke=\"#2244cc\" stroke-width=\"2\"");
    }

    if (what == PlotWhat::error || what == PlotWhat::both) {
        // psi_r graph mapped into the lower band of the canvas
        const double ymax = std::max(result.max_radial_error, 1e-300);
        const double x0 = 40.0, x1 = 560.0, ymid = 520.0, yspan = 60.0;
        auto map_t = [&](double t) { return x0 + (x1 - x0) * (t + 1.0) / 2.0; };
        std::vector<std::string> pts;
        pts.push_back(svg_coord(x0) + "," + svg_coord(ymid));
        pts.push_back(svg_coord(x1) + "," + svg_coord(ymid));
        polyline(os, pts, "stroke=\"#888888\" stroke-width=\"1\"");
        pts.clear();
        for (int i = 0; i <= 800; ++i) {
            const double t = -1.0 + 2.0 * i / 800.0;
            const double e = radial_error(result.psi(t));
            pts.push_back(svg_coord(map_t(t)) + "," +
                          svg_coord(ymid - yspan * e / ymax));
        }
        polyline(os, pts, "stroke=\"#cc4422\" stroke-width=\"2\"");
    }

    os << "</svg>\n";
    return os.str();
}

std::string render_oracle_report(const OracleReport& report) {
    std::ostringstream os;
    os << "oracle cross-check, case G" << report.case_id.degree
       << report.case_id.continuity << " " << to_string(report.case_id.side)
       << "\n";
    if (!report.solver_has_approximant) {
        os << "  solver: no approximant\n";
        os << "  oracle feasible set: "
           << (report.feasible_found ? "NON-EMPTY (violation!)" : "empty (confirms no approximant)")
           << "\n";
    } else if (!report.feasible_found) {
        os << "  oracle found no feasible point (grid too coarse?)\n";
    } else {
        os << "  solver error = " << fmt_error(report.solver_error) << "\n";
        os << "  oracle best  = " << fmt_error(report.best_error_found);
        const SolverParams& p = *report.best_params_found;
        os << " at xi = " << fmt_param(p.xi);
        if (p.eta) os << ", eta = " << fmt_param(*p.eta);
        os << "\n";
        os << "  gap = " << fmt("%.3e", report.gap)
           << " (grid resolution " << fmt("%.3e", report.grid_resolution) << ")\n";
    }
    os << "  " << (report.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace arcfit
