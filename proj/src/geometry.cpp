#include "arcfit/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arcfit {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CircularArc::CircularArc(double phi_radians) : phi(phi_radians) {
    if (!(phi > 0.0) || !(phi <= std::numbers::pi / 2 + 1e-15))
        throw std::invalid_argument("CircularArc: phi must lie in (0, pi/2]");
    c = std::cos(phi);
    s = std::sin(phi);
    if (std::abs(c) < 1e-12) c = 0.0;  // phi == pi/2 up to rounding
}

std::string to_string(Side side) {
    return side == Side::inner ? "inner" : "outer";
}

CaseId::CaseId(int degree_, int continuity_, Side side_)
    : degree(degree_), continuity(continuity_), side(side_) {
    const int gap = degree - continuity;
    const bool ok = (degree >= 2 && degree <= 4) && (gap == 2 || gap == 3) &&
                    continuity >= 0;
    if (!ok)
        throw std::invalid_argument(
            "CaseId: supported (degree, continuity) pairs are "
            "(2,0), (3,0), (3,1), (4,1), (4,2)");
}

bool CaseId::two_parameter() const { return degree - continuity == 3; }

std::string CaseId::table_id() const {
    return "G" + std::to_string(degree) + std::to_string(continuity);
}

double bernstein_eval(int n, int i, double t) {
    if (i < 0 || i > n) throw std::invalid_argument("bernstein_eval: i out of range");
    return binomial(n, i) * std::pow(0.5 * (1.0 + t), i) *
           std::pow(0.5 * (1.0 - t), n - i);
}

Point2 bezier_eval(const BezierCurve& curve, double t) {
    std::vector<Point2> pts = curve.control_points;
    const double a = 0.5 * (1.0 - t);
    const double b = 0.5 * (1.0 + t);
    for (int level = curve.degree; level > 0; --level) {
        for (int i = 0; i < level; ++i) {
            pts[i].x = a * pts[i].x + b * pts[i + 1].x;
            pts[i].y = a * pts[i].y + b * pts[i + 1].y;
        }
    }
    return pts[0];
}

Point2 bezier_deriv(const BezierCurve& curve, double t) {
    // derivative curve has control points (n/2)(b_{i+1} - b_i); the factor
    // 1/2 comes from the [-1,1] parameter domain
    const int n = curve.degree;
    BezierCurve d;
    d.degree = n - 1;
    d.control_points.resize(n);
    for (int i = 0; i < n; ++i) {
        d.control_points[i].x =
            0.5 * n * (curve.control_points[i + 1].x - curve.control_points[i].x);
        d.control_points[i].y =
            0.5 * n * (curve.control_points[i + 1].y - curve.control_points[i].y);
    }
    return bezier_eval(d, t);
}

Point2 bezier_second_deriv(const BezierCurve& curve, double t) {
    const int n = curve.degree;
    BezierCurve d;
    d.degree = n - 1;
    d.control_points.resize(n);
    for (int i = 0; i < n; ++i) {
        d.control_points[i].x =
            0.5 * n * (curve.control_points[i + 1].x - curve.control_points[i].x);
        d.control_points[i].y =
            0.5 * n * (curve.control_points[i + 1].y - curve.control_points[i].y);
    }
    return bezier_deriv(d, t);
}

double signed_curvature(const BezierCurve& curve, double t) {
    const Point2 d1 = bezier_deriv(curve, t);
    const Point2 d2 = bezier_second_deriv(curve, t);
    const double speed2 = d1.x * d1.x + d1.y * d1.y;
    return (d1.x * d2.y - d1.y * d2.x) / std::pow(speed2, 1.5);
}

BezierCurve control_points(const CircularArc& arc, const CaseId& case_id,
                           const SolverParams& params) {
    const double c = arc.c;
    const double s = arc.s;
    const double xi = params.xi;

    BezierCurve curve;
    curve.degree = case_id.degree;

    if (case_id.degree == 2) {
        curve.control_points = {{c, -s}, {xi, 0.0}, {c, s}};
        return curve;
    }

    if (case_id.degree == 3 && case_id.continuity == 1) {
        curve.control_points = {{c, -s},
                                {c + xi * s, -s + xi * c},
                                {c + xi * s, s - xi * c},
                                {c, s}};
        return curve;
    }

    if (case_id.degree == 3 && case_id.continuity == 0) {
        if (!params.eta) throw std::invalid_argument("cubic G0 needs eta");
        const double eta = *params.eta;
        curve.control_points = {{c, -s}, {xi, -eta}, {xi, eta}, {c, s}};
        return curve;
    }

    if (case_id.degree == 4 && case_id.continuity == 1) {
        if (!params.eta) throw std::invalid_argument("quartic G1 needs eta");
        const double eta = *params.eta;
        curve.control_points = {{c, -s},
                                {c + xi * s, -s + xi * c},
                                {eta, 0.0},
                                {c + xi * s, s - xi * c},
                                {c, s}};
        return curve;
    }

    // quartic G2
    double b2x;
    if (c == 0.0) {
        const double xi_limit = std::sqrt(3.0) / 2.0;
        if (std::abs(xi - xi_limit) > 1e-9)
            throw std::invalid_argument(
                "quartic G2 limit-case mismatch: c = 0 requires xi = sqrt(3)/2");
        b2x = (case_id.side == Side::inner) ? (2.0 / 3.0) * (4.0 - std::sqrt(3.0))
                                            : 8.0 * std::sqrt(3.0) / 9.0;
    } else {
        b2x = (3.0 - 4.0 * xi * xi) / (3.0 * c);
    }
    curve.control_points = {{c, -s},
                            {c + xi * s, -s + xi * c},
                            {b2x, 0.0},
                            {c + xi * s, s - xi * c},
                            {c, s}};
    return curve;
}

namespace {

PowerPolynomial component_poly(const BezierCurve& curve, bool y_component) {
    const int n = curve.degree;
    PowerPolynomial acc{{0.0}};
    for (int i = 0; i <= n; ++i) {
        PowerPolynomial basis{{1.0}};
        for (int j = 0; j < i; ++j)
            basis = multiply(basis, PowerPolynomial{{0.5, 0.5}});
        for (int j = 0; j < n - i; ++j)
            basis = multiply(basis, PowerPolynomial{{0.5, -0.5}});
        const double w = binomial(n, i) * (y_component ? curve.control_points[i].y
                                                       : curve.control_points[i].x);
        for (double& coef : basis.coeffs) coef *= w;
        acc = add(acc, basis);
    }
    return acc;
}

}  // namespace

PowerPolynomial curve_x_poly(const BezierCurve& curve) {
    return component_poly(curve, false);
}

PowerPolynomial curve_y_poly(const BezierCurve& curve) {
    return component_poly(curve, true);
}

}  // namespace arcfit
