#ifndef ARCFIT_REPORT_HPP
#define ARCFIT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "arcfit/oracle.hpp"
#include "arcfit/solvers.hpp"

namespace arcfit {

// Parses an angle given in radians or as "pi", "pi/K", "K*pi/M", "K*pi".
// The result must lie in (0, pi/2]; throws std::invalid_argument otherwise.
double parse_angle(const std::string& text);

/// Which of the five tables to regenerate, and at which angles.
struct TableSpec {
    std::string table_id;                 // "G20", "G30", "G31", "G41", "G42"
    std::vector<double> angles;           // defaults to the six table rows
};

std::vector<double> default_table_angles();

// Maps "G20" etc. to the (degree, continuity) pair; throws on unknown ids.
std::pair<int, int> parse_table_id(const std::string& table_id);

// Lossless JSON encoding of a solve result (schema_version, arc, case,
// params, control_points, max_radial_error, certificate, nodes).
nlohmann::json result_to_json(const CircularArc& arc, const ApproximantResult& result);

std::string render_result_text(const CircularArc& arc, const ApproximantResult& result);
std::string render_result_csv(const CircularArc& arc, const ApproximantResult& result);

// Rows (phi, xi_out[, eta_out], err_out, xi_in[, eta_in], err_in); parameters
// at 6 significant digits, errors at 3. The general-optimal columns of the
// published tables are intentionally omitted.
std::string render_table(const TableSpec& spec, bool csv);

enum class PlotWhat { curve, error, both };

// Deterministic SVG 1.1: arc polyline (720 segments), Bezier curve, control
// polygon and/or the graph of psi_r on [-1, 1].
std::string render_svg(const CircularArc& arc, const ApproximantResult& result,
                       PlotWhat what);

std::string render_oracle_report(const OracleReport& report);

}  // namespace arcfit

#endif
