#include "arcfit/oracle.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcfit {

namespace {

constexpr double kGridSlack = 1e-9;    // one-sidedness slack on the t-grid
constexpr double kOracleTol = 1e-6;    // optimality comparison tolerance

// At c = 0 the quartic G2 construction fixes xi = sqrt(3)/2 and leaves the
// middle control point's abscissa free; the oracle scans that abscissa as its
// single parameter there.
BezierCurve curve_for(const CircularArc& arc, const CaseId& case_id,
                      const SolverParams& params) {
    if (case_id.degree == 4 && case_id.continuity == 2 && arc.c == 0.0) {
        const double xi = std::sqrt(3.0) / 2.0;
        BezierCurve curve;
        curve.degree = 4;
        curve.control_points = {{0.0, -1.0},
                                {xi, -1.0},
                                {params.xi, 0.0},
                                {xi, 1.0},
                                {0.0, 1.0}};
        return curve;
    }
    return control_points(arc, case_id, params);
}

SolverParams params_from(const CaseId& case_id, double p0, double p1) {
    SolverParams p{p0};
    if (case_id.two_parameter()) p.eta = p1;
    return p;
}

// Exact evaluation used during pattern-search refinement. The slacked t-grid
// in evaluate_on_grid is fine for the coarse scan, but near optima whose
// one-sidedness constraint binds with high-order contact at t = +-1 a grid
// slack of eps admits parameter deviations of order eps^(1/3) and error gains
// far above the comparison tolerance. Here feasibility is decided at the
// interior critical points of psi and demands a clearance proportional to the
// coefficient scale of psi (well above binary64 evaluation noise), so an
// accepted point is genuinely one-sided. The clearance only biases the
// oracle's error upward, keeping the solver-vs-oracle comparison one-sided.
struct ExactObjective {
    bool feasible = false;
    double objective = 1e300;
};

ExactObjective evaluate_exact(const CircularArc& arc, const CaseId& case_id,
                              const SolverParams& params) {
    ExactObjective result;
    BezierCurve curve;
    try {
        curve = curve_for(arc, case_id, params);
    } catch (const std::invalid_argument&) {
        return result;
    }
    const ErrorPolynomial psi = build_psi(curve);
    double lo = 0.0;  // psi(+-1) = 0 bounds the objective
    double hi = 0.0;
    double lo_int = 1e300;  // interior extrema decide feasibility; the
    double hi_int = -1e300; // boundary zeros at t = +-1 are contact points
    for (double t : isolate_real_roots(psi.poly.derivative(), -1.0, 1.0)) {
        const double v = psi(t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (std::abs(t) < 1.0 - 1e-9) {
            lo_int = std::min(lo_int, v);
            hi_int = std::max(hi_int, v);
        }
    }
    if (lo <= -1.0) return result;
    const double margin = 1e-13 * std::max(psi.poly.coeff_scale(), 1e-300);
    result.feasible = (case_id.side == Side::inner) ? (hi_int <= -margin)
                                                    : (lo_int >= margin);
    result.objective = std::max(std::abs(std::sqrt(1.0 + lo) - 1.0),
                                std::abs(std::sqrt(1.0 + hi) - 1.0));
    return result;
}

}  // namespace

SearchBox default_search_box(const CircularArc& arc, const CaseId& case_id) {
    SearchBox box;
    if (case_id.degree == 3 && case_id.continuity == 0) {
        const CubicG0Domain d = cubic_g0_domain(arc);
        box.dims = 2;
        box.range[0] = {d.xi_min, d.xi_max};
        box.range[1] = {d.eta_min, d.eta_max};
        return box;
    }
    if (case_id.degree == 4 && case_id.continuity == 1) {
        box.dims = 2;
        if (case_id.side == Side::outer) {
            // (xi, eta) rectangle induced by (u, v) in [3c, u~] x [8-5c, 8-5c+2]
            const QuarticG1Domain d = quartic_g1_domain(arc);
            const double s = std::sqrt(1.0 - arc.c * arc.c);
            box.range[0] = {(d.v_lo - d.u_hi) / (8.0 * s),
                            (d.v_lo + 2.0 - d.u_lo) / (8.0 * s)};
            box.range[1] = {(d.u_lo + d.v_lo) / 6.0, (d.u_hi + d.v_lo + 2.0) / 6.0};
        } else {
            box.range[0] = {0.0, 1.5};
            box.range[1] = {0.5, 2.0};
        }
        return box;
    }
    box.dims = 1;
    double hi = 3.0;
    if (case_id.degree == 2 && case_id.side == Side::outer && arc.c > 0.0)
        hi = std::max(hi, 1.5 / arc.c);  // xi = 1/c can exceed the default box
    box.range[0] = {0.0, hi};
    return box;
}

GridObjective evaluate_on_grid(const CircularArc& arc, const CaseId& case_id,
                               const SolverParams& params, int grid_t) {
    GridObjective result;
    BezierCurve curve;
    try {
        curve = curve_for(arc, case_id, params);
    } catch (const std::invalid_argument&) {
        return result;  // construction undefined here: infeasible
    }
    const ErrorPolynomial psi = build_psi(curve);

    double lo = 1e300;
    double hi = -1e300;
    for (int i = 0; i < grid_t; ++i) {
        const double t = -1.0 + 2.0 * i / (grid_t - 1);
        const double v = psi(t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    result.feasible = (case_id.side == Side::inner) ? (hi <= kGridSlack)
                                                    : (lo >= -kGridSlack);
    if (lo <= -1.0) {
        result.feasible = false;
        result.objective = 1.0;
        return result;
    }
    result.objective = std::max(std::abs(std::sqrt(1.0 + lo) - 1.0),
                                std::abs(std::sqrt(1.0 + hi) - 1.0));
    return result;
}

namespace {

struct Best {
    bool feasible = false;
    double objective = 1e300;
    long index = -1;

    // total order: feasibility first, then objective, ties toward smaller index
    bool better_than(const Best& o) const {
        if (feasible != o.feasible) return feasible;
        if (objective != o.objective) return objective < o.objective;
        return index < o.index || o.index < 0;
    }
};

}  // namespace

OracleReport oracle_minimax(const CircularArc& arc, const CaseId& case_id,
                            const SearchBox& box, int grid_n, ScanMode mode) {
    OracleReport report{case_id, std::nullopt};
    const int dims = box.dims;
    const long n0 = grid_n;
    const long n1 = (dims == 2) ? grid_n : 1;
    const long total = n0 * n1;

    auto coord = [&](int d, long i, long n) {
        const auto& r = box.range[d];
        return (n == 1) ? r.lo : r.lo + (r.hi - r.lo) * i / (n - 1);
    };
    auto cell_params = [&](long idx) {
        const long i0 = idx / n1;
        const long i1 = idx % n1;
        return params_from(case_id, coord(0, i0, n0),
                           dims == 2 ? coord(1, i1, n1) : 0.0);
    };

    Best best;
    if (mode == ScanMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            Best local;
            #pragma omp for schedule(dynamic, 64) nowait
            for (long idx = 0; idx < total; ++idx) {
                const GridObjective g = evaluate_on_grid(arc, case_id, cell_params(idx));
                Best cand{g.feasible, g.objective, idx};
                if (g.feasible && cand.better_than(local)) local = cand;
            }
            #pragma omp critical
            if (local.better_than(best)) best = local;
        }
#else
        mode = ScanMode::serial;
#endif
    }
    if (mode == ScanMode::serial) {
        for (long idx = 0; idx < total; ++idx) {
            const GridObjective g = evaluate_on_grid(arc, case_id, cell_params(idx));
            Best cand{g.feasible, g.objective, idx};
            if (g.feasible && cand.better_than(best)) best = cand;
        }
    }

    report.grid_resolution =
        std::max((box.range[0].hi - box.range[0].lo) / std::max(1L, n0 - 1),
                 dims == 2
                     ? (box.range[1].hi - box.range[1].lo) / std::max(1L, n1 - 1)
                     : 0.0);

    if (!best.feasible) {
        report.feasible_found = false;
        return report;
    }
    report.feasible_found = true;

    // coordinate-wise pattern search from the best grid cell, refined with
    // the exact critical-point evaluation (the grid slack would otherwise let
    // the search creep past the one-sidedness boundary)
    SolverParams p = cell_params(best.index);
    ExactObjective cur = evaluate_exact(arc, case_id, p);
    double obj = cur.feasible ? cur.objective : 1e300;
    double step[2] = {(box.range[0].hi - box.range[0].lo) / std::max(1L, n0 - 1),
                      dims == 2
                          ? (box.range[1].hi - box.range[1].lo) / std::max(1L, n1 - 1)
                          : 0.0};
    auto get = [&](const SolverParams& q, int d) {
        return d == 0 ? q.xi : *q.eta;
    };
    auto with = [&](SolverParams q, int d, double val) {
        if (d == 0)
            q.xi = val;
        else
            q.eta = val;
        return q;
    };
    for (int iter = 0; iter < 4000; ++iter) {
        bool improved = false;
        for (int d = 0; d < dims; ++d) {
            for (double sgn : {1.0, -1.0}) {
                const SolverParams q = with(p, d, get(p, d) + sgn * step[d]);
                const ExactObjective g = evaluate_exact(arc, case_id, q);
                if (g.feasible && g.objective < obj) {
                    p = q;
                    obj = g.objective;
                    improved = true;
                }
            }
        }
        if (!improved) {
            double max_step = 0.0;
            for (int d = 0; d < dims; ++d) {
                step[d] *= 0.5;
                max_step = std::max(max_step, step[d]);
            }
            if (max_step < 1e-9) break;
        }
    }

    // re-certify the refined point with the exact critical-point certificate
    report.best_params_found = p;
    const ErrorPolynomial psi = build_psi(curve_for(arc, case_id, p));
    report.best_error_found = max_abs_radial_error(psi).value;
    const OneSidednessCertificate cert = certify_one_sided(psi, case_id.side, 1e-7);
    if (!cert.passed) {
        // the refinement overshot the feasible boundary; account for the
        // violation in psi_r scale so the comparison stays conservative
        report.best_error_found += 0.5 * cert.worst_violation;
    }
    return report;
}

OracleReport oracle_cross_check(const CircularArc& arc, const CaseId& case_id,
                                int grid_n, ScanMode mode) {
    SearchBox box = default_search_box(arc, case_id);
    if (grid_n <= 0) grid_n = (box.dims == 2) ? 256 : 1024;

    bool has_approximant = true;
    double solver_error = 0.0;
    try {
        solver_error = solve(arc, case_id).max_radial_error;
    } catch (const NoApproximantError&) {
        has_approximant = false;
    }

    OracleReport report = oracle_minimax(arc, case_id, box, grid_n, mode);
    report.solver_has_approximant = has_approximant;
    if (!has_approximant) {
        report.passed = !report.feasible_found;
        return report;
    }
    report.solver_error = solver_error;
    report.gap = report.best_error_found - solver_error;
    report.passed = report.feasible_found && report.gap >= -kOracleTol;
    return report;
}

}  // namespace arcfit
