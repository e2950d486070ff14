#include "arcfit/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arcfit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double sq(double x) { return x * x; }

// Builds the curve, error polynomial, certificate and equioscillation nodes
// for solved parameters. expected_nodes are touch points the construction
// guarantees; each must be recovered to 1e-7.
ApproximantResult finish(const CircularArc& arc, const CaseId& case_id,
                         const SolverParams& params,
                         const std::vector<double>& expected_nodes) {
    ApproximantResult r{case_id, params, control_points(arc, case_id, params),
                        {}, 0.0, {}, {}};
    r.psi = build_psi(r.curve);
    r.max_radial_error = max_abs_radial_error(r.psi).value;
    r.certificate = certify_one_sided(r.psi, case_id.side);
    r.equioscillation_nodes = touch_points(r.psi);
    // When psi's coefficients approach machine noise (very small angles) the
    // recovered locations degrade proportionally; widen the sanity tolerance
    // accordingly.
    const double scale = std::max(r.psi.poly.coeff_scale(), 1e-300);
    const double node_tol = std::max(1e-7, 1e-13 / scale);
    for (double expected : expected_nodes) {
        bool found = false;
        for (double t : r.equioscillation_nodes)
            if (std::abs(t - expected) <= node_tol) found = true;
        if (!found)
            throw std::logic_error("equioscillation node " + std::to_string(expected) +
                                   " not recovered for case " + case_id.table_id());
    }
    return r;
}

double psi_deriv_at(const ErrorPolynomial& psi, int order, double t) {
    PowerPolynomial p = psi.poly;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p(t);
}

}  // namespace

QuarticG2Roots quartic_g2_roots(const CircularArc& arc) {
    const double c = arc.c;
    const double cs = c * std::sqrt(1.0 - c * c);
    const double c2 = c * c;
    const double c4 = c2 * c2;
    QuarticG2Roots r{};
    // the radicands 3 -+ 8c + 6c^2 - c^4 factor as (1 -+ c)^3 (3 +- c), which
    // avoids the catastrophic cancellation of the expanded form near c = 1
    const double rad_plus = (1.0 + c) * (1.0 + c) * (1.0 + c) * (3.0 - c);
    const double rad_minus = (1.0 - c) * (1.0 - c) * (1.0 - c) * (3.0 + c);
    r.beta1 = 0.5 * (cs - std::sqrt(rad_plus));
    r.beta2 = 0.5 * (cs - std::sqrt(rad_minus));
    r.beta3 = 0.5 * (cs + std::sqrt(rad_minus));
    r.beta4 = 0.5 * (cs + std::sqrt(rad_plus));
    const double sc = std::sqrt(1.0 - c2);
    r.alpha1 = -0.5 * sc * (std::sqrt(3.0 + c2) + c);
    r.alpha2 = 0.5 * sc * (std::sqrt(3.0 + c2) - c);
    r.gamma1 = 0.5 * (cs - std::sqrt(3.0 + 6.0 * c2 - c4));
    r.gamma2 = 0.5 * cs;
    r.gamma3 = 0.5 * (cs + std::sqrt(3.0 + 6.0 * c2 - c4));
    const double root = std::sqrt(9.0 - 2.0 * c2 - 3.0 * c4);
    r.delta1 = (-2.0 * c - root) / (6.0 * sc);
    r.delta2 = (-2.0 * c + root) / (6.0 * sc);
    return r;
}

PowerPolynomial quartic_g2_td_scaled(const CircularArc& arc) {
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);
    // c * td(xi) = 48 s xi^3 + 48 c xi^2 - 12 s (3 + c^2) xi + 12 c (1 - c^2)
    return PowerPolynomial{{12.0 * c * (1.0 - c * c), -12.0 * s * (3.0 + c * c),
                            48.0 * c, 48.0 * s}};
}

CubicG0Domain cubic_g0_domain(const CircularArc& arc) {
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);
    CubicG0Domain d{};
    d.xi_min = (-5.0 * c + 8.0 * kSqrt2 * std::sqrt(9.0 - c * c)) / 27.0;
    d.xi_max = (4.0 - c) / 3.0;
    d.eta_min = s / 3.0;
    d.eta_max = (3.0 - c) / (1.0 + c) * s / 3.0;
    return d;
}

PowerPolynomial cubic_g0_g1(const CircularArc& arc) {
    const double c = arc.c;
    return PowerPolynomial{{245.0 * c * c * c - 4352.0 * c,
                            1953.0 * c * c - 3840.0, 3807.0 * c, 2187.0}};
}

double cubic_g0_g2(const CircularArc& arc, double xi, double eta) {
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);
    return -8.0 * (1.0 - c * c) * eta +
           s * (27.0 * xi * xi + 10.0 * c * xi + 3.0 * c * c - 40.0);
}

QuarticG1Domain quartic_g1_domain(const CircularArc& arc) {
    const double c = arc.c;
    const double k = 2.0 * std::sqrt((2.0 * kSqrt2 - 1.0) / 7.0);
    QuarticG1Domain d{};
    d.u_lo = 3.0 * c;
    d.u_hi = k * c * c - (2.0 * k - 3.0) * c + k;
    d.v_lo = 8.0 - 5.0 * c;
    return d;
}

PowerPolynomial quartic_g1_p1(const CircularArc& arc) {
    const double c = arc.c;
    const double c2 = c * c;
    const double r2 = kSqrt2;
    const double a4 = c2 * (c2 + 1.0);
    const double a3 = -8.0 * (3.0 + r2) * c2 * c2 * c + 4.0 * (4.0 + 5.0 * r2) * c2 * c +
                      4.0 * (4.0 + 3.0 * r2) * c;
    const double a2 = 2.0 * (125.0 + 68.0 * r2) * c2 * c2 * c2 -
                      2.0 * (229.0 + 182.0 * r2) * c2 * c2 +
                      4.0 * (140.0 + 97.0 * r2) * c2 - 4.0 * (65.0 + 46.0 * r2);
    const double a1 = -88.0 * (14.0 + 9.0 * r2) * c2 * c2 * c2 * c +
                      12.0 * (116.0 + 89.0 * r2) * c2 * c2 * c -
                      84.0 * (16.0 + 11.0 * r2) * c2 * c +
                      4.0 * (50.0 + 36.0 * r2) * c;
    const double a0 = 5.0 * (457.0 + 312.0 * r2) * c2 * c2 * c2 * c2 -
                      (1655.0 + 1236.0 * r2) * c2 * c2 * c2 +
                      12.0 * (16.0 + 9.0 * r2) * c2 * c2 +
                      4.0 * (163.0 + 114.0 * r2) * c2 + 272.0 + 192.0 * r2;
    const double w = 1.0 / (1.0 - c2);
    return PowerPolynomial{{a0 * w, a1 * w, a2 * w, a3 * w, a4 * w}};
}

PowerPolynomial quartic_g1_p1_shifted(const CircularArc& arc) {
    const double c = arc.c;
    const double c2 = c * c;
    const double c4 = c2 * c2;
    const double r2 = kSqrt2;
    const double omc2 = 1.0 - c2;  // 1 - c^2
    const double k0 = 16.0 * (17.0 + 12.0 * r2);
    const double b0 = k0 * omc2 * omc2 * omc2;
    const double b1 = -k0 * c * omc2 * (c2 + 5.0);
    const double w = 1.0 / omc2;
    const double b2 = 4.0 *
                      ((22.0 + 16.0 * r2) * c4 * c2 - (65.0 + 46.0 * r2) * c4 +
                       (176.0 + 124.0 * r2) * c2 - (65.0 + 46.0 * r2)) *
                      w;
    const double b3 = -4.0 * c *
                      ((3.0 + 2.0 * r2) * c4 - (7.0 + 5.0 * r2) * c2 -
                       (4.0 + 3.0 * r2)) *
                      w;
    const double b4 = c2 * (c2 + 1.0) * w;
    return PowerPolynomial{{b0, b1, b2, b3, b4}};
}

double quartic_g1_p2_beta1(const CircularArc& arc) {
    const double c = arc.c;
    const double c2 = c * c;
    const double r2 = kSqrt2;
    return -2.0 * (4.0 * c2 * c2 * c2 * c2 + 4.0 * (4.0 + r2) * c2 * c2 * c2 -
                   (1.0 + 6.0 * r2) * c2 * c2 + 2.0 * c2 + 3.0 + 2.0 * r2);
}

double quartic_g1_p2_beta0(const CircularArc& arc, double u) {
    const double c = arc.c;
    const double r2 = kSqrt2;
    const double u2 = u * u;
    const double c2 = c * c;
    const double c3 = c2 * c;
    const double c4 = c2 * c2;
    const double c5 = c4 * c;
    const double c6 = c4 * c2;
    const double c7 = c6 * c;
    const double c8 = c4 * c4;
    const double c9 = c8 * c;
    return 36.0 * (3.0 - 2.0 * r2) * c9 + 16.0 * (3.0 * r2 - 5.0) * c8 * u +
           (329.0 - 198.0 * r2 + (12.0 - 8.0 * r2) * u2) * c7 +
           (142.0 * r2 - 253.0) * c6 * u +
           (169.0 - 198.0 * r2 + (55.0 - 34.0 * r2) * u2) * c5 +
           (174.0 * r2 - 51.0 + (2.0 * r2 - 3.0) * u2) * c4 * u +
           (4.0 * (43.0 + 9.0 * r2) - 5.0 * (6.0 * r2 - 7.0) * u2) * c3 -
           (16.0 * (7.0 + 3.0 * r2) * u + (3.0 - 2.0 * r2) * u2 * u) * c2 +
           2.0 * (23.0 + 16.0 * r2) * u - 4.0 * c * (10.0 + 9.0 * r2 + r2 * u2);
}

double quartic_g1_p2(const CircularArc& arc, double u, double v) {
    const double c = arc.c;
    return (quartic_g1_p2_beta1(arc) * v + quartic_g1_p2_beta0(arc, u)) /
           (c * c - 1.0);
}

ApproximantResult solve_quad_g0(const CircularArc& arc, Side side) {
    const CaseId case_id{2, 0, side};
    if (side == Side::inner) {
        // psi(0, xi) = 0
        return finish(arc, case_id, SolverParams{2.0 - arc.c}, {0.0});
    }
    if (arc.c == 0.0)
        throw NoApproximantError("quadratic outer approximant does not exist for phi = pi/2");
    // psi'(1, xi) = 0, which also makes the approximant G1
    return finish(arc, case_id, SolverParams{1.0 / arc.c}, {});
}

ApproximantResult solve_cubic_g1(const CircularArc& arc, Side side) {
    const CaseId case_id{3, 1, side};
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);
    if (side == Side::outer)
        return finish(arc, case_id, SolverParams{4.0 * s / (3.0 * (1.0 + c))}, {0.0});
    return finish(arc, case_id,
                  SolverParams{(2.0 / 3.0) * s * (std::sqrt(3.0 + c * c) - c)}, {});
}

ApproximantResult solve_quartic_g2(const CircularArc& arc, Side side) {
    const CaseId case_id{4, 2, side};
    const QuarticG2Roots roots = quartic_g2_roots(arc);
    if (side == Side::inner)
        return finish(arc, case_id, SolverParams{roots.beta3}, {0.0});

    if (arc.c == 0.0)
        return finish(arc, case_id, SolverParams{std::sqrt(3.0) / 2.0}, {});

    // the only zero of td on [delta2, infinity); td(delta2) < 0 < td(beta3)
    const PowerPolynomial td = quartic_g2_td_scaled(arc);
    const double pad = 1e-12;
    const double xi = solve_bracketed([&td](double x) { return td(x); },
                                      make_bracket([&td](double x) { return td(x); },
                                                   roots.delta2 - pad,
                                                   roots.beta3 + pad));
    return finish(arc, case_id, SolverParams{xi}, {});
}

ApproximantResult solve_cubic_g0(const CircularArc& arc, Side side) {
    const CaseId case_id{3, 0, side};
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);
    if (side == Side::outer) {
        SolverParams params{(4.0 - c) / 3.0};
        params.eta = (3.0 - 4.0 * c + c * c) / (3.0 * s);
        ApproximantResult r = finish(arc, case_id, params, {0.0});
        if (std::abs(r.psi(0.0)) > 1e-10 ||
            std::abs(psi_deriv_at(r.psi, 1, 1.0)) > 1e-10)
            throw std::logic_error("cubic G0 outer defining equations violated");
        return r;
    }

    const CubicG0Domain dom = cubic_g0_domain(arc);
    const PowerPolynomial g1 = cubic_g0_g1(arc);
    const double pad = 1e-12;
    const double xi = solve_bracketed([&g1](double x) { return g1(x); },
                                      make_bracket([&g1](double x) { return g1(x); },
                                                   dom.xi_min - pad, dom.xi_max + pad));
    const double eta =
        (27.0 * xi * xi + 10.0 * c * xi + 3.0 * c * c - 40.0) / (8.0 * s);
    if (eta < dom.eta_min - 1e-9 || eta > dom.eta_max + 1e-9)
        throw std::logic_error("cubic G0 inner: eta outside J");
    SolverParams params{xi};
    params.eta = eta;
    return finish(arc, case_id, params, {-0.5, 0.5});
}

namespace {

// Unique zero of p1 on (3c, u_tilde), solved in the shifted variable
// d = u - 3c, where the evaluation is well conditioned all the way to c = 1.
// The bracket endpoints are expanded by 1e-12 since at c = 0 the zero sits
// exactly at u_tilde.
double quartic_g1_outer_u(const CircularArc& arc) {
    const QuarticG1Domain dom = quartic_g1_domain(arc);
    const PowerPolynomial p1 = quartic_g1_p1_shifted(arc);
    const double d_hi = dom.u_hi - dom.u_lo;
    const double pad = 1e-12 * (1.0 + dom.u_hi);
    auto f = [&p1](double d) { return p1(d); };
    try {
        return dom.u_lo + solve_bracketed(f, make_bracket(f, -pad, d_hi + pad));
    } catch (const std::invalid_argument&) {
        // rounding pushed the zero just past an endpoint: fall back to full
        // isolation and take the root closest to the interval
        double best = std::numeric_limits<double>::quiet_NaN();
        double best_dist = std::numeric_limits<double>::infinity();
        for (double r : isolate_real_roots(p1, -1.0, d_hi + 1.0)) {
            const double d = std::max({-r, r - d_hi, 0.0});
            if (d < best_dist) {
                best_dist = d;
                best = dom.u_lo + r;
            }
        }
        if (!(best_dist < 1e-6))
            throw std::logic_error("quartic G1 outer: no p1 zero near (3c, u~)");
        return best;
    }
}

}  // namespace

ApproximantResult solve_quartic_g1(const CircularArc& arc, Side side) {
    const CaseId case_id{4, 1, side};
    const double c = arc.c;
    const double s = std::sqrt(1.0 - c * c);

    if (side == Side::inner) {
        // identical curve to the quartic G2 inner approximant
        const double root = std::sqrt(3.0 + 4.0 * c + c * c);
        SolverParams params{(c * (1.0 - c * c) + sq(1.0 - c) * root) / (2.0 * s)};
        params.eta =
            (8.0 - 7.0 * c + 2.0 * c * c * c - 2.0 * sq(1.0 - c) * root) / 3.0;
        return finish(arc, case_id, params, {0.0});
    }

    const QuarticG1Domain dom = quartic_g1_domain(arc);
    const double u = quartic_g1_outer_u(arc);
    const double v = -quartic_g1_p2_beta0(arc, u) / quartic_g1_p2_beta1(arc);
    if (v < dom.v_lo - 1e-9)
        throw std::logic_error("quartic G1 outer: v below 8 - 5c");
    SolverParams params{(v - u) / (8.0 * s)};
    params.eta = (u + v) / 6.0;

    // Polish (xi, eta) with Newton on the defining touch conditions
    // psi(t*) = psi'(t*) = 0 at the angle-independent node t* = sqrt(2) - 1.
    // The closed-form u, v carry a few ulp of cancellation error, and the
    // degenerate double zero amplifies that into node displacements of up to
    // ~1e-7 at the small end of the angle range; a couple of Newton steps
    // brings the parameters to the nearest-double representation of the
    // exact solution.
    const double tstar = kSqrt2 - 1.0;
    auto touch_residual = [&](double xi, double eta) {
        SolverParams q{xi};
        q.eta = eta;
        const ErrorPolynomial psi =
            build_psi(control_points(arc, case_id, q));
        return std::pair{psi(tstar), psi.poly.derivative()(tstar)};
    };
    for (int it = 0; it < 8; ++it) {
        const auto [f0, f1] = touch_residual(params.xi, *params.eta);
        const double hx = 1e-7 * (1.0 + std::abs(params.xi));
        const double he = 1e-7 * (1.0 + std::abs(*params.eta));
        const auto [f0x, f1x] = touch_residual(params.xi + hx, *params.eta);
        const auto [f0e, f1e] = touch_residual(params.xi, *params.eta + he);
        const double j00 = (f0x - f0) / hx;
        const double j01 = (f0e - f0) / he;
        const double j10 = (f1x - f1) / hx;
        const double j11 = (f1e - f1) / he;
        const double det = j00 * j11 - j01 * j10;
        if (det == 0.0) break;
        const double dxi = (f0 * j11 - f1 * j01) / det;
        const double deta = (f1 * j00 - f0 * j10) / det;
        const double xi_next = params.xi - dxi;
        const double eta_next = *params.eta - deta;
        if (xi_next == params.xi && eta_next == *params.eta) break;
        params.xi = xi_next;
        params.eta = eta_next;
    }
    params.u = 3.0 * *params.eta - 4.0 * s * params.xi;
    params.v = 3.0 * *params.eta + 4.0 * s * params.xi;
    return finish(arc, case_id, params, {-tstar, tstar});
}

ApproximantResult solve(const CircularArc& arc, const CaseId& case_id) {
    if (case_id.degree == 2) return solve_quad_g0(arc, case_id.side);
    if (case_id.degree == 3 && case_id.continuity == 1)
        return solve_cubic_g1(arc, case_id.side);
    if (case_id.degree == 3) return solve_cubic_g0(arc, case_id.side);
    if (case_id.continuity == 2) return solve_quartic_g2(arc, case_id.side);
    return solve_quartic_g1(arc, case_id.side);
}

std::vector<QuarticG1Candidate> enumerate_quartic_g1_candidates(
    const CircularArc& arc) {
    const double s = std::sqrt(1.0 - arc.c * arc.c);
    const QuarticG1Domain dom = quartic_g1_domain(arc);
    PowerPolynomial p1 = quartic_g1_p1(arc);
    p1.trim(1e-13 * p1.coeff_scale());

    // Cauchy bound on the root magnitudes
    double bound = 0.0;
    const double lead = p1.coeffs.back();
    for (std::size_t i = 0; i + 1 < p1.coeffs.size(); ++i)
        bound = std::max(bound, std::abs(p1.coeffs[i] / lead));
    bound += 1.0;

    std::vector<QuarticG1Candidate> out;
    const double tol = 1e-9 * (1.0 + dom.u_hi);
    for (double u : isolate_real_roots(p1, -bound, bound)) {
        QuarticG1Candidate cand;
        const double v = -quartic_g1_p2_beta0(arc, u) / quartic_g1_p2_beta1(arc);
        cand.params.xi = (v - u) / (8.0 * s);
        cand.params.eta = (u + v) / 6.0;
        cand.params.u = u;
        cand.params.v = v;
        cand.is_optimal = (u > dom.u_lo - tol && u < dom.u_hi + tol);
        const BezierCurve curve =
            control_points(arc, CaseId{4, 1, Side::outer}, cand.params);
        try {
            cand.max_radial_error = max_abs_radial_error(build_psi(curve)).value;
        } catch (const std::domain_error&) {
            // curve reaches the circle center; radial distance saturates at 1
            cand.max_radial_error = 1.0;
        }
        out.push_back(cand);
    }
    return out;
}

}  // namespace arcfit
