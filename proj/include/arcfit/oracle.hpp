#ifndef ARCFIT_ORACLE_HPP
#define ARCFIT_ORACLE_HPP

#include <array>
#include <optional>

#include "arcfit/solvers.hpp"

namespace arcfit {

/// Per-parameter closed search intervals; dims matches the case's parameter
/// count (1 or 2, always (xi[, eta])).
struct SearchBox {
    struct Range {
        double lo;
        double hi;
    };
    int dims = 1;
    std::array<Range, 2> range{};
};

enum class ScanMode { serial, parallel };

struct OracleReport {
    CaseId case_id;
    std::optional<SolverParams> best_params_found;
    double best_error_found = 0.0;
    double solver_error = 0.0;
    double gap = 0.0;  // best_error_found - solver_error
    double grid_resolution = 0.0;
    bool feasible_found = false;
    bool solver_has_approximant = true;
    bool passed = false;
};

// The paper's admissible intervals: I x J for cubic G0, the
// (3c, u~) x [8-5c, ...]-induced (xi, eta) box for quartic G1 outer,
// [0, 3] (extended when 1/c is larger) for the one-parameter cases.
SearchBox default_search_box(const CircularArc& arc, const CaseId& case_id);

// Objective max |psi_r| and inner/outer feasibility of a parameter point,
// both measured on a uniform t-grid of grid_t points.
struct GridObjective {
    bool feasible = false;
    double objective = 0.0;
};
GridObjective evaluate_on_grid(const CircularArc& arc, const CaseId& case_id,
                               const SolverParams& params, int grid_t = 2001);

// Exhaustive scan of the box followed by coordinate-wise pattern search
// (halving steps down to 1e-9). The reduction is an exact max with ties
// broken toward smaller grid index, so the result is identical for the
// serial and the OpenMP scan.
OracleReport oracle_minimax(const CircularArc& arc, const CaseId& case_id,
                            const SearchBox& box, int grid_n,
                            ScanMode mode = ScanMode::parallel);

// solve() followed by oracle_minimax with default box; passes iff
// solver_error <= best_error_found + 1e-6, or the solver reports
// NoApproximant and the oracle finds no feasible point.
OracleReport oracle_cross_check(const CircularArc& arc, const CaseId& case_id,
                                int grid_n = 0 /* 0: per-case default */,
                                ScanMode mode = ScanMode::parallel);

}  // namespace arcfit

#endif
