#ifndef ARCFIT_GEOMETRY_HPP
#define ARCFIT_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "arcfit/polynomial.hpp"

namespace arcfit {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Canonical unit-circle arc, symmetric about the abscissa, with half-angle
/// phi in (0, pi/2]. Boundary points are (c, -s) and (c, s).
struct CircularArc {
    double phi;
    double c;  // cos(phi)
    double s;  // sin(phi)

    explicit CircularArc(double phi_radians);
};

enum class Side { inner, outer };

std::string to_string(Side side);

/// One of the five supported (degree, continuity) pairs together with the
/// requested side: (2,0), (3,0), (3,1), (4,1), (4,2).
struct CaseId {
    int degree;
    int continuity;
    Side side;

    CaseId(int degree, int continuity, Side side);

    bool two_parameter() const;      // cubic G0 and quartic G1
    std::string table_id() const;    // "G20", "G30", ...
};

/// Per-case free parameters. eta is present for the two-parameter cases;
/// (u, v) are the internal coordinates of the quartic G1 outer construction,
/// u = 3*eta - 4*s*xi and v = 3*eta + 4*s*xi.
struct SolverParams {
    double xi = 0.0;
    std::optional<double> eta;
    std::optional<double> u;
    std::optional<double> v;
};

/// Polynomial curve of degree 2..4 in Bernstein-Bezier form on [-1, 1].
struct BezierCurve {
    int degree = 0;
    std::vector<Point2> control_points;
};

// Reparameterized Bernstein basis polynomial B_i^n on [-1, 1].
// Throws std::invalid_argument for i outside [0, n].
double bernstein_eval(int n, int i, double t);

// Numerically stable de Casteljau evaluation. t outside [-1, 1] is allowed
// for diagnostics.
Point2 bezier_eval(const BezierCurve& curve, double t);

// First and second derivative of the curve at t (with respect to t).
Point2 bezier_deriv(const BezierCurve& curve, double t);
Point2 bezier_second_deriv(const BezierCurve& curve, double t);

// Signed curvature at t; counterclockwise traversal positive, so the unit
// circle has curvature +1.
double signed_curvature(const BezierCurve& curve, double t);

// Builds the control points for the case's construction from the free
// parameters. For the quartic G2 case at c = 0 the middle control point uses
// the limit abscissa ((2/3)(4-sqrt(3)) inner, 8*sqrt(3)/9 outer) and params.xi
// must equal the limit solution sqrt(3)/2, otherwise a "limit-case mismatch"
// std::invalid_argument is thrown.
BezierCurve control_points(const CircularArc& arc, const CaseId& case_id,
                           const SolverParams& params);

// x(t) and y(t) of the curve converted exactly to the power basis.
PowerPolynomial curve_x_poly(const BezierCurve& curve);
PowerPolynomial curve_y_poly(const BezierCurve& curve);

}  // namespace arcfit

#endif
