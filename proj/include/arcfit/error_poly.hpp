#ifndef ARCFIT_ERROR_POLY_HPP
#define ARCFIT_ERROR_POLY_HPP

#include <vector>

#include "arcfit/geometry.hpp"
#include "arcfit/polynomial.hpp"

namespace arcfit {

/// psi(t) = ||p(t)||^2 - 1 in the power basis. Even polynomial of degree
/// at most 8 with psi(+-1) = 0.
struct ErrorPolynomial {
    PowerPolynomial poly;

    double operator()(double t) const { return poly(t); }
};

/// Evidence that psi keeps one sign on [-1, 1] within the given slack.
struct OneSidednessCertificate {
    Side side = Side::inner;
    double worst_violation = 0.0;  // max psi (inner) or max -psi (outer)
    int sample_count = 0;
    std::vector<double> extremum_locations;
    double max_abs_psi = 0.0;
    double slack = 1e-10;
    bool passed = false;
};

// psi from the power-basis forms of x(t) and y(t).
ErrorPolynomial build_psi(const BezierCurve& curve);

// Radial error sqrt(1 + psi) - 1; throws std::domain_error for psi <= -1.
double radial_error(double psi_value);

struct RadialErrorExtremum {
    double value = 0.0;                // max over [-1,1] of |psi_r|
    std::vector<double> locations;     // arg-max t values
};

// Evaluates |psi_r| at every critical point of psi in (-1, 1) and at
// t in {-1, 0, 1}.
RadialErrorExtremum max_abs_radial_error(const ErrorPolynomial& psi);

// Critical points plus a 10001-point uniform grid; passes iff the sign
// condition holds everywhere within slack.
OneSidednessCertificate certify_one_sided(const ErrorPolynomial& psi, Side side,
                                          double slack = 1e-10);

// Interior t values where psi touches zero: critical points of psi in (-1, 1)
// with |psi| below tol relative to the coefficient scale.
std::vector<double> touch_points(const ErrorPolynomial& psi, double tol = 1e-8);

}  // namespace arcfit

#endif
