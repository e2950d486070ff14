#ifndef ARCFIT_SOLVERS_HPP
#define ARCFIT_SOLVERS_HPP

#include <stdexcept>
#include <vector>

#include "arcfit/error_poly.hpp"
#include "arcfit/geometry.hpp"

namespace arcfit {

/// Requested one-sided approximant does not exist (quadratic outer at c = 0).
class NoApproximantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The twelve algebraic constants of the quartic G2 analysis. For every
/// c in [0, 1): alpha1, beta1, gamma1, delta1 <= 0 and
/// beta2 <= gamma2 <= delta2 <= beta3 <= alpha2 <= gamma3 <= beta4.
struct QuarticG2Roots {
    double alpha1, alpha2;
    double beta1, beta2, beta3, beta4;
    double gamma1, gamma2, gamma3;
    double delta1, delta2;
};

/// Interval I x J containing the cubic G0 inner solution;
/// c < 1 < xi_min < xi_max for all c in [0, 1).
struct CubicG0Domain {
    double xi_min, xi_max;
    double eta_min, eta_max;
};

/// u-interval (3c, u_tilde) of the quartic G1 outer construction, plus the
/// lower bound 8 - 5c for v.
struct QuarticG1Domain {
    double u_lo;  // 3c
    double u_hi;  // u_tilde = k c^2 - (2k - 3) c + k, k = 2 sqrt((2 sqrt(2)-1)/7)
    double v_lo;  // 8 - 5c
};

struct ApproximantResult {
    CaseId case_id;
    SolverParams params;
    BezierCurve curve;
    ErrorPolynomial psi;
    double max_radial_error = 0.0;
    OneSidednessCertificate certificate;
    std::vector<double> equioscillation_nodes;
};

QuarticG2Roots quartic_g2_roots(const CircularArc& arc);
CubicG0Domain cubic_g0_domain(const CircularArc& arc);
QuarticG1Domain quartic_g1_domain(const CircularArc& arc);

// td(xi) = psi'''(1, xi) of the quartic G2 case, multiplied by c so the
// expression stays finite for c = 0. Coefficients constant-first.
PowerPolynomial quartic_g2_td_scaled(const CircularArc& arc);

// g1 of the cubic G0 Groebner basis (cubic in xi) and the back-substitution
// residual g2(xi, eta).
PowerPolynomial cubic_g0_g1(const CircularArc& arc);
double cubic_g0_g2(const CircularArc& arc, double xi, double eta);

// p1 of the quartic G1 outer Groebner basis (quartic in u, including the
// 1/(1-c^2) prefactor) and the pieces of the linear-in-v polynomial p2.
PowerPolynomial quartic_g1_p1(const CircularArc& arc);
// p1 re-expressed in powers of d = u - 3c. The raw power-basis coefficients
// cancel catastrophically near c = 1 (p1(3c) = 16 (17 + 12 sqrt(2)) (1-c^2)^3
// sinks below rounding noise of the O(1/(1-c^2)) coefficients), while the
// shifted coefficients factor exactly, so evaluation stays accurate on the
// bracket [3c, u~] where u~ - 3c = k (1-c)^2.
PowerPolynomial quartic_g1_p1_shifted(const CircularArc& arc);
double quartic_g1_p2_beta1(const CircularArc& arc);
double quartic_g1_p2_beta0(const CircularArc& arc, double u);
double quartic_g1_p2(const CircularArc& arc, double u, double v);

ApproximantResult solve_quad_g0(const CircularArc& arc, Side side);
ApproximantResult solve_cubic_g1(const CircularArc& arc, Side side);
ApproximantResult solve_cubic_g0(const CircularArc& arc, Side side);
ApproximantResult solve_quartic_g2(const CircularArc& arc, Side side);
ApproximantResult solve_quartic_g1(const CircularArc& arc, Side side);

// Dispatch to the case solver. Throws NoApproximantError for the quadratic
// outer case with c = 0.
ApproximantResult solve(const CircularArc& arc, const CaseId& case_id);

struct QuarticG1Candidate {
    SolverParams params;
    double max_radial_error = 0.0;
    bool is_optimal = false;  // the root lying in (3c, u_tilde)
};

// All real roots of p1 back-substituted through p2, with their radial
// distances. The non-optimal ones correspond to approximants of the
// complementary arc and are reported for diagnostics only.
std::vector<QuarticG1Candidate> enumerate_quartic_g1_candidates(
    const CircularArc& arc);

}  // namespace arcfit

#endif
