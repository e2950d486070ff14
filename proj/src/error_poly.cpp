#include "arcfit/error_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcfit {

namespace {

// Compensated (double-double) arithmetic. psi's coefficients are tiny
// residues of cancelling O(1) terms; computing them in plain binary64 leaves
// absolute noise ~1e-16 that swamps the polynomial at small angles.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD t = two_sum(s.hi, s.lo);
    return t;
}

DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    DD t = two_sum(p.hi, p.lo);
    return t;
}

// Exact power-basis coefficients of B_i^n on [-1, 1]: every entry is a small
// integer multiple of 2^-n, so the convolutions below are exact in binary64.
std::vector<std::vector<double>> bernstein_power_rows(int n) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= n; ++i) {
        std::vector<double> basis{1.0};
        auto conv = [&basis](double c0, double c1) {
            std::vector<double> out(basis.size() + 1, 0.0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                out[k] += c0 * basis[k];
                out[k + 1] += c1 * basis[k];
            }
            basis = std::move(out);
        };
        for (int j = 0; j < i; ++j) conv(0.5, 0.5);
        for (int j = 0; j < n - i; ++j) conv(0.5, -0.5);
        double binom = 1.0;
        for (int j = 0; j < i; ++j) binom = binom * (n - j) / (j + 1);
        for (double& c : basis) c *= binom;
        rows.push_back(std::move(basis));
    }
    return rows;
}

}  // namespace

ErrorPolynomial build_psi(const BezierCurve& curve) {
    const int n = curve.degree;
    const auto rows = bernstein_power_rows(n);

    std::vector<DD> px(n + 1), py(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            px[k] = dd_add(px[k], two_prod(curve.control_points[i].x, rows[i][k]));
            py[k] = dd_add(py[k], two_prod(curve.control_points[i].y, rows[i][k]));
        }

    std::vector<DD> acc(2 * n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            acc[i + j] = dd_add(acc[i + j], dd_mul(px[i], px[j]));
            acc[i + j] = dd_add(acc[i + j], dd_mul(py[i], py[j]));
        }
    acc[0] = dd_add(acc[0], DD{-1.0, 0.0});

    PowerPolynomial psi;
    for (const DD& c : acc) psi.coeffs.push_back(c.hi + c.lo);
    return ErrorPolynomial{psi};
}

double radial_error(double psi_value) {
    if (psi_value <= -1.0)
        throw std::domain_error("radial_error: psi <= -1 (curve reaches the center)");
    return std::sqrt(1.0 + psi_value) - 1.0;
}

RadialErrorExtremum max_abs_radial_error(const ErrorPolynomial& psi) {
    RadialErrorExtremum result;
    if (psi.poly.coeff_scale() == 0.0) return result;

    std::vector<double> candidates =
        isolate_real_roots(psi.poly.derivative(), -1.0, 1.0);
    candidates.push_back(-1.0);
    candidates.push_back(0.0);
    candidates.push_back(1.0);

    double best = -1.0;
    for (double t : candidates) {
        const double v = std::abs(radial_error(psi(t)));
        if (v > best) best = v;
    }
    result.value = best;
    for (double t : candidates)
        if (std::abs(radial_error(psi(t))) >= best * (1.0 - 1e-12) - 1e-300)
            result.locations.push_back(t);
    std::sort(result.locations.begin(), result.locations.end());
    return result;
}

OneSidednessCertificate certify_one_sided(const ErrorPolynomial& psi, Side side,
                                          double slack) {
    OneSidednessCertificate cert;
    cert.side = side;
    cert.slack = slack;

    std::vector<double> critical = isolate_real_roots(psi.poly.derivative(), -1.0, 1.0);
    cert.extremum_locations = critical;

    const int grid_n = 10001;
    double worst = -1e300;
    double max_abs = 0.0;
    auto consider = [&](double t) {
        const double v = psi(t);
        max_abs = std::max(max_abs, std::abs(v));
        const double violation = (side == Side::inner) ? v : -v;
        worst = std::max(worst, violation);
    };
    for (double t : critical) consider(t);
    for (int i = 0; i < grid_n; ++i)
        consider(-1.0 + 2.0 * i / (grid_n - 1));

    cert.sample_count = grid_n + static_cast<int>(critical.size());
    cert.worst_violation = worst;
    cert.max_abs_psi = max_abs;
    cert.passed = worst <= slack;
    return cert;
}

std::vector<double> touch_points(const ErrorPolynomial& psi, double tol) {
    // tol is relative to the coefficient scale so flat error polynomials
    // (small angles) are treated the same as large ones; the absolute floor
    // covers binary64 rounding noise in psi's coefficients when the whole
    // polynomial sits near machine precision. The boundary zeros at t = +-1
    // are excluded.
    const double scale = psi.poly.coeff_scale();
    std::vector<double> out;
    for (double t : isolate_real_roots(psi.poly.derivative(), -1.0, 1.0))
        if (std::abs(t) < 1.0 - 1e-6 && std::abs(psi(t)) <= tol * scale + 1e-14)
            out.push_back(t);
    return out;
}

}  // namespace arcfit
