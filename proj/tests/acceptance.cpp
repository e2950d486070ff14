// Acceptance gate: twelve criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "arcfit/oracle.hpp"
#include "arcfit/solvers.hpp"

using namespace arcfit;

namespace {

constexpr double kPi = std::numbers::pi;
const double kAngles[6] = {kPi / 2, kPi / 3, kPi / 4, kPi / 6, kPi / 8, kPi / 12};

int g_checks_failed = 0;

// |value - golden| <= one unit in the last printed significant digit
bool matches_printed(double value, const char* printed) {
    const double golden = std::strtod(printed, nullptr);
    int digits = 0;
    bool seen_nonzero = false;
    for (const char* p = printed; *p && *p != 'e' && *p != 'E'; ++p) {
        if (*p >= '1' && *p <= '9') seen_nonzero = true;
        if (*p >= '0' && *p <= '9' && seen_nonzero) ++digits;
    }
    const double mag = std::floor(std::log10(std::abs(golden)) + 1e-12);
    const double unit = std::pow(10.0, mag - digits + 1);
    return std::abs(value - golden) <= unit * (1.0 + 1e-9);
}

void expect(bool ok, const char* what) {
    if (!ok) {
        std::printf("    check failed: %s\n", what);
        ++g_checks_failed;
    }
}

void expect_printed(double value, const char* printed, const char* what) {
    if (!matches_printed(value, printed)) {
        std::printf("    check failed: %s (got %.10g, want %s)\n", what, value,
                    printed);
        ++g_checks_failed;
    }
}

std::vector<double> random_angles(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.05, kPi / 2);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(dist(rng));
    return out;
}

// ---------------------------------------------------------------- criteria

void criterion1_table1() {
    const char* xi_out[6] = {nullptr, "2", "1.41421", "1.1547", "1.08239", "1.03528"};
    const char* err_out[6] = {nullptr, "2.5e-1", "6.07e-2", "1.04e-2", "3.14e-3", "6.01e-4"};
    const char* xi_in[6] = {"2", "1.5", "1.29289", "1.13397", "1.07612", "1.03407"};
    const char* err_in[6] = {"1.34e-1", "3.18e-2", "1.08e-2", "2.25e-3", "7.25e-4", "1.45e-4"};

    bool threw = false;
    try {
        solve_quad_g0(CircularArc(kPi / 2), Side::outer);
    } catch (const NoApproximantError&) {
        threw = true;
    }
    expect(threw, "quadratic outer at pi/2 raises NoApproximant");

    for (int i = 0; i < 6; ++i) {
        if (i > 0) {
            auto r = solve_quad_g0(CircularArc(kAngles[i]), Side::outer);
            expect_printed(r.params.xi, xi_out[i], "T1 xi_out");
            expect_printed(r.max_radial_error, err_out[i], "T1 err_out");
        }
        auto r = solve_quad_g0(CircularArc(kAngles[i]), Side::inner);
        expect_printed(r.params.xi, xi_in[i], "T1 xi_in");
        expect_printed(r.max_radial_error, err_in[i], "T1 err_in");
    }
}

void criterion2_table2() {
    const char* out[6][3] = {{"1.33333", "1.", "1.84e-2"},
                             {"1.16667", "0.481125", "1.54e-3"},
                             {"1.09763", "0.316582", "2.73e-4"},
                             {"1.04466", "0.190599", "2.39e-5"},
                             {"1.02537", "0.137655", "4.25e-6"},
                             {"1.01136", "0.0892636", "3.73e-7"}};
    const char* in[6][3] = {{"1.32508", "0.925926", "6.19e-3"},
                            {"1.16587", "0.473285", "5.99e-4"},
                            {"1.09748", "0.31486", "1.1e-4"},
                            {"1.04465", "0.190384", "9.89e-6"},
                            {"1.02537", "0.137605", "1.77e-6"},
                            {"1.01136", "0.0892572", "1.57e-7"}};
    for (int i = 0; i < 6; ++i) {
        auto ro = solve_cubic_g0(CircularArc(kAngles[i]), Side::outer);
        expect_printed(ro.params.xi, out[i][0], "T2 xi_out");
        expect_printed(*ro.params.eta, out[i][1], "T2 eta_out");
        expect_printed(ro.max_radial_error, out[i][2], "T2 err_out");
        auto ri = solve_cubic_g0(CircularArc(kAngles[i]), Side::inner);
        expect_printed(ri.params.xi, in[i][0], "T2 xi_in");
        expect_printed(*ri.params.eta, in[i][1], "T2 eta_in");
        expect_printed(ri.max_radial_error, in[i][2], "T2 err_in");
    }
}

void criterion3_table3() {
    const char* xi_out[6] = {"1.33333", "0.7698", "0.552285", "0.357266", "0.265216", "0.175537"};
    const char* err_out[6] = {"1.84e-2", "1.54e-3", "2.73e-4", "2.39e-5", "4.25e-6", "3.73e-7"};
    const char* xi_in[6] = {"1.1547", "0.752158", "0.548584", "0.356822", "0.265115", "0.175524"};
    const char* err_in[6] = {"1.34e-1", "1.15e-2", "1.96e-3", "1.66e-4", "2.92e-5", "2.54e-6"};
    for (int i = 0; i < 6; ++i) {
        auto ro = solve_cubic_g1(CircularArc(kAngles[i]), Side::outer);
        expect_printed(ro.params.xi, xi_out[i], "T3 xi_out");
        expect_printed(ro.max_radial_error, err_out[i], "T3 err_out");
        auto ri = solve_cubic_g1(CircularArc(kAngles[i]), Side::inner);
        expect_printed(ri.params.xi, xi_in[i], "T3 xi_in");
        expect_printed(ri.max_radial_error, err_in[i], "T3 err_in");
    }
}

void criterion4_table4() {
    const char* out[6][3] = {{"0.87247", "1.50401", "2.4e-4"},
                             {"0.547886", "1.20071", "9.59e-6"},
                             {"0.402742", "1.10845", "9.69e-7"},
                             {"0.264734", "1.0468", "3.8e-8"},
                             {"0.197582", "1.02605", "3.82e-9"},
                             {"0.131264", "1.01149", "1.49e-10"}};
    const char* in[6][3] = {{"0.866025", "1.51197", "9.47e-4"},
                            {"0.547225", "1.20145", "3.59e-5"},
                            {"0.402599", "1.10858", "3.56e-6"},
                            {"0.264716", "1.04681", "1.38e-7"},
                            {"0.197577", "1.02605", "1.38e-8"},
                            {"0.131263", "1.01149", "5.36e-10"}};
    for (int i = 0; i < 6; ++i) {
        auto ro = solve_quartic_g1(CircularArc(kAngles[i]), Side::outer);
        expect_printed(ro.params.xi, out[i][0], "T4 xi_out");
        expect_printed(*ro.params.eta, out[i][1], "T4 eta_out");
        expect_printed(ro.max_radial_error, out[i][2], "T4 err_out");
        auto ri = solve_quartic_g1(CircularArc(kAngles[i]), Side::inner);
        expect_printed(ri.params.xi, in[i][0], "T4 xi_in");
        expect_printed(*ri.params.eta, in[i][1], "T4 eta_in");
        expect_printed(ri.max_radial_error, in[i][2], "T4 err_in");
    }
}

void criterion5_table5() {
    const char* xi_out[6] = {"0.866025", "0.546677", "0.402437", "0.264692", "0.197572", "0.131262"};
    const char* err_out[6] = {"1.04e-2", "3.62e-4", "3.5e-5", "1.33e-6", "1.32e-7", "5.1e-9"};
    const char* xi_in[6] = {"0.866025", "0.547225", "0.402599", "0.264716", "0.197577", "0.131263"};
    const char* err_in[6] = {"9.47e-4", "3.59e-5", "3.56e-6", "1.38e-7", "1.38e-8", "5.36e-10"};
    const double limit = std::sqrt(3.0) / 2;
    for (int i = 0; i < 6; ++i) {
        auto ro = solve_quartic_g2(CircularArc(kAngles[i]), Side::outer);
        expect_printed(ro.params.xi, xi_out[i], "T5 xi_out");
        expect_printed(ro.max_radial_error, err_out[i], "T5 err_out");
        auto ri = solve_quartic_g2(CircularArc(kAngles[i]), Side::inner);
        expect_printed(ri.params.xi, xi_in[i], "T5 xi_in");
        expect_printed(ri.max_radial_error, err_in[i], "T5 err_in");
        if (i == 0) {
            expect(std::abs(ro.params.xi - limit) <= 1e-12, "T5 pi/2 outer limit");
            expect(std::abs(ri.params.xi - limit) <= 1e-12, "T5 pi/2 inner limit");
        }
    }
}

void criterion6_candidates() {
    auto cands = enumerate_quartic_g1_candidates(CircularArc(kPi / 6));
    expect(cands.size() == 4, "four candidates at pi/6");
    std::vector<double> errs;
    for (const auto& cand : cands) errs.push_back(cand.max_radial_error);
    std::sort(errs.begin(), errs.end());
    const char* golden[4] = {"3.8e-8", "5.3e-5", "1.4e-2", "2.3e-1"};
    for (int i = 0; i < 4 && i < static_cast<int>(errs.size()); ++i)
        expect_printed(errs[i], golden[i], "candidate distance");
}

void criterion7_residuals() {
    std::vector<double> angles(kAngles, kAngles + 6);
    for (double a : random_angles(50, 2024)) angles.push_back(a);
    const double node = std::sqrt(2.0) - 1.0;
    for (double phi : angles) {
        CircularArc arc(phi);
        auto d0 = [](const ApproximantResult& r, double t) { return r.psi(t); };
        auto d1 = [](const ApproximantResult& r, double t) {
            return r.psi.poly.derivative()(t);
        };
        auto d2 = [](const ApproximantResult& r, double t) {
            return r.psi.poly.derivative().derivative()(t);
        };
        auto d3 = [](const ApproximantResult& r, double t) {
            return r.psi.poly.derivative().derivative().derivative()(t);
        };

        auto qi = solve_quad_g0(arc, Side::inner);
        expect(std::abs(d0(qi, 0.0)) <= 1e-10, "quad inner psi(0)");
        if (arc.c > 0) {
            auto qo = solve_quad_g0(arc, Side::outer);
            expect(std::abs(d1(qo, 1.0)) <= 1e-10, "quad outer psi'(1)");
        }
        auto c1i = solve_cubic_g1(arc, Side::inner);
        expect(std::abs(d2(c1i, 1.0)) <= 1e-10, "cubic G1 inner psi''(1)");
        expect(std::abs(d2(c1i, -1.0)) <= 1e-10, "cubic G1 inner psi''(-1)");
        auto c1o = solve_cubic_g1(arc, Side::outer);
        expect(std::abs(d0(c1o, 0.0)) <= 1e-10, "cubic G1 outer psi(0)");
        auto c0i = solve_cubic_g0(arc, Side::inner);
        expect(std::abs(d0(c0i, 0.5)) <= 1e-10, "cubic G0 inner psi(1/2)");
        expect(std::abs(d1(c0i, 0.5)) <= 1e-10, "cubic G0 inner psi'(1/2)");
        auto c0o = solve_cubic_g0(arc, Side::outer);
        expect(std::abs(d0(c0o, 0.0)) <= 1e-10, "cubic G0 outer psi(0)");
        expect(std::abs(d1(c0o, 1.0)) <= 1e-10, "cubic G0 outer psi'(1)");
        auto q1o = solve_quartic_g1(arc, Side::outer);
        expect(std::abs(d0(q1o, node)) <= 1e-10, "quartic G1 outer psi(r2-1)");
        expect(std::abs(d1(q1o, node)) <= 1e-10, "quartic G1 outer psi'(r2-1)");
        auto q2i = solve_quartic_g2(arc, Side::inner);
        expect(std::abs(d0(q2i, 0.0)) <= 1e-10, "quartic G2 inner psi(0)");
        expect(std::abs(d2(q2i, 1.0)) <= 1e-10, "quartic G2 inner psi''(1)");
        auto q2o = solve_quartic_g2(arc, Side::outer);
        expect(std::abs(d3(q2o, 1.0)) <= 1e-10, "quartic G2 outer psi'''(1)");
    }
}

void criterion8_certificates() {
    std::vector<double> angles(kAngles, kAngles + 6);
    for (double a : random_angles(50, 2024)) angles.push_back(a);
    const int pairs[5][2] = {{2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}};
    for (double phi : angles) {
        CircularArc arc(phi);
        for (auto [deg, cont] : pairs) {
            for (Side side : {Side::inner, Side::outer}) {
                if (deg == 2 && side == Side::outer && arc.c == 0.0) continue;
                auto r = solve(arc, CaseId{deg, cont, side});
                auto cert = certify_one_sided(r.psi, side, 1e-10);
                expect(cert.passed, "one-sidedness certificate");
            }
        }
    }
}

void criterion9_oracle_sweep() {
    const int pairs[5][2] = {{2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}};
    for (double phi : kAngles) {
        CircularArc arc(phi);
        for (auto [deg, cont] : pairs) {
            for (Side side : {Side::inner, Side::outer}) {
                OracleReport rep =
                    oracle_cross_check(arc, CaseId{deg, cont, side});
                if (!rep.passed) {
                    std::printf("    cross-check failed: G%d%d %s phi=%.6g "
                                "(gap %.3e)\n",
                                deg, cont, to_string(side).c_str(), phi, rep.gap);
                    ++g_checks_failed;
                }
            }
        }
    }
}

void criterion10_nodes() {
    const double node = std::sqrt(2.0) - 1.0;
    for (double phi : kAngles) {
        CircularArc arc(phi);
        auto c0 = solve_cubic_g0(arc, Side::inner);
        expect(c0.equioscillation_nodes.size() == 2, "cubic G0 inner node count");
        if (c0.equioscillation_nodes.size() == 2) {
            expect(std::abs(c0.equioscillation_nodes[0] + 0.5) <= 1e-7,
                   "cubic G0 inner node -1/2");
            expect(std::abs(c0.equioscillation_nodes[1] - 0.5) <= 1e-7,
                   "cubic G0 inner node +1/2");
        }
        auto q1 = solve_quartic_g1(arc, Side::outer);
        expect(q1.equioscillation_nodes.size() == 2, "quartic G1 outer node count");
        if (q1.equioscillation_nodes.size() == 2) {
            expect(std::abs(q1.equioscillation_nodes[0] + node) <= 1e-7,
                   "quartic G1 outer node -(r2-1)");
            expect(std::abs(q1.equioscillation_nodes[1] - node) <= 1e-7,
                   "quartic G1 outer node +(r2-1)");
        }
    }
}

void criterion11_structural() {
    for (double phi : random_angles(20, 555)) {
        CircularArc arc(phi);
        auto g1 = solve_quartic_g1(arc, Side::inner);
        auto g2 = solve_quartic_g2(arc, Side::inner);
        expect(g1.curve.control_points.size() == g2.curve.control_points.size(),
               "control point counts");
        for (std::size_t i = 0; i < g1.curve.control_points.size(); ++i) {
            expect(std::abs(g1.curve.control_points[i].x -
                            g2.curve.control_points[i].x) <= 1e-12,
                   "control point x");
            expect(std::abs(g1.curve.control_points[i].y -
                            g2.curve.control_points[i].y) <= 1e-12,
                   "control point y");
        }
    }
}

void criterion12_brackets() {
    for (int i = 0; i < 200; ++i) {
        const double c = i * (1.0 - 1e-6) / 199.0;
        CircularArc arc(std::acos(c));
        {
            auto d = cubic_g0_domain(arc);
            PowerPolynomial g1 = cubic_g0_g1(arc);
            expect(g1(d.xi_min) < 0.0, "g1(xi_min) < 0");
            expect(g1(d.xi_max) > 0.0, "g1(xi_max) > 0");
        }
        {
            auto d = quartic_g1_domain(arc);
            // evaluated in the shifted variable u - 3c, which stays accurate
            // near c = 1 where p1(3c) = O((1-c^2)^3)
            PowerPolynomial p1 = quartic_g1_p1_shifted(arc);
            expect(p1(0.0) > 0.0, "p1(3c) > 0");
            if (arc.c == 0.0)  // u~ is exactly the root of the degenerate p1
                expect(std::abs(p1(d.u_hi - d.u_lo)) <= 1e-9 * p1.coeff_scale(),
                       "p1(u~) = 0 at c = 0");
            else
                expect(p1(d.u_hi - d.u_lo) < 0.0, "p1(u~) < 0");
        }
        {
            auto r = quartic_g2_roots(arc);
            PowerPolynomial ctd = quartic_g2_td_scaled(arc);
            expect(ctd(r.delta2) < 0.0, "c*td(delta2) < 0");
            if (arc.c == 0.0)  // td(beta3) > 0 but the c-scaling collapses it
                expect(std::abs(ctd(r.beta3)) <= 1e-9 * ctd.coeff_scale(),
                       "c*td(beta3) = 0 at c = 0");
            else
                expect(ctd(r.beta3) > 0.0, "c*td(beta3) > 0");
            const double tol = 1e-12;
            expect(r.alpha1 <= tol && r.beta1 <= tol && r.gamma1 <= tol &&
                       r.delta1 <= tol,
                   "negative root group");
            expect(r.beta2 <= r.gamma2 + tol, "beta2 <= gamma2");
            expect(r.gamma2 <= r.delta2 + tol, "gamma2 <= delta2");
            expect(r.delta2 <= r.beta3 + tol, "delta2 <= beta3");
            expect(r.beta3 <= r.alpha2 + tol, "beta3 <= alpha2");
            expect(r.alpha2 <= r.gamma3 + tol, "alpha2 <= gamma3");
            expect(r.gamma3 <= r.beta4 + tol, "gamma3 <= beta4");
        }
    }
}

struct Criterion {
    const char* label;
    std::function<void()> run;
    double time_limit_s;  // 0: untimed
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"Table 1 reproduction (quadratic G0)", criterion1_table1, 1.0},
        {"Table 2 reproduction (cubic G0)", criterion2_table2, 1.0},
        {"Table 3 reproduction (cubic G1)", criterion3_table3, 0.0},
        {"Table 4 reproduction (quartic G1)", criterion4_table4, 0.0},
        {"Table 5 reproduction (quartic G2)", criterion5_table5, 0.0},
        {"candidate enumeration diagnostics", criterion6_candidates, 0.0},
        {"defining-equation residual suite", criterion7_residuals, 5.0},
        {"one-sidedness certification", criterion8_certificates, 0.0},
        {"oracle optimality sweep", criterion9_oracle_sweep, 300.0},
        {"equioscillation nodes", criterion10_nodes, 0.0},
        {"quartic G1/G2 inner structural identity", criterion11_structural, 0.0},
        {"bracket facts and root ordering", criterion12_brackets, 0.0},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        g_checks_failed = 0;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
            ++g_checks_failed;
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool ok = g_checks_failed == 0;
        if (criteria[i].time_limit_s > 0 && elapsed > criteria[i].time_limit_s) {
            std::printf("    time limit exceeded: %.2f s > %.0f s\n", elapsed,
                        criteria[i].time_limit_s);
            ok = false;
        }
        std::printf("criterion %2zu: %s — %s (%.2f s)\n", i + 1,
                    ok ? "PASS" : "FAIL", criteria[i].label, elapsed);
        if (!ok) ++failed;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed;
}
