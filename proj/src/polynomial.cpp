#include "arcfit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcfit {

double PowerPolynomial::operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

PowerPolynomial PowerPolynomial::derivative() const {
    PowerPolynomial d;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs[i - 1] = static_cast<double>(i) * coeffs[i];
    return d;
}

int PowerPolynomial::degree() const {
    for (std::size_t i = coeffs.size(); i > 0; --i)
        if (std::abs(coeffs[i - 1]) > 1e-300) return static_cast<int>(i - 1);
    return 0;
}

void PowerPolynomial::trim(double eps) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= eps)
        coeffs.pop_back();
}

double PowerPolynomial::coeff_scale() const {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

PowerPolynomial multiply(const PowerPolynomial& a, const PowerPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return PowerPolynomial{{0.0}};
    PowerPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

PowerPolynomial add(const PowerPolynomial& a, const PowerPolynomial& b) {
    PowerPolynomial r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

PowerPolynomial from_roots(const std::vector<double>& roots) {
    PowerPolynomial p{{1.0}};
    for (double r : roots) p = multiply(p, PowerPolynomial{{-r, 1.0}});
    return p;
}

Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("make_bracket: lo >= hi");
    Bracket b{lo, hi, f(lo), f(hi)};
    if (b.f_lo * b.f_hi > 0.0)
        throw std::invalid_argument("make_bracket: no sign change on [lo, hi]");
    return b;
}

double solve_bracketed(const std::function<double(double)>& f, Bracket b,
                       double tol) {
    if (!(b.lo < b.hi) || b.f_lo * b.f_hi > 0.0)
        throw std::invalid_argument("solve_bracketed: invalid bracket");
    if (b.f_lo == 0.0) return b.lo;
    if (b.f_hi == 0.0) return b.hi;

    // Illinois-weighted false position: the f value of an endpoint retained
    // twice in a row is halved, which prevents one-sided stagnation.
    double w_lo = b.f_lo;
    double w_hi = b.f_hi;
    int retained = 0;
    double x = 0.5 * (b.lo + b.hi);
    for (int iter = 0; iter < 200; ++iter) {
        double denom = w_hi - w_lo;
        double cand = (denom != 0.0) ? b.lo - w_lo * (b.hi - b.lo) / denom
                                     : 0.5 * (b.lo + b.hi);
        if (!(cand > b.lo && cand < b.hi)) cand = 0.5 * (b.lo + b.hi);
        x = cand;
        const double fx = f(x);
        // the residual exit must be scaled by the smaller surviving endpoint
        // value: a wide initial bracket can carry an astronomically large f
        // on one side, and scaling by it would accept points far from the root
        const double fscale =
            1.0 + std::min(std::abs(b.f_lo), std::abs(b.f_hi));
        if (std::abs(fx) <= tol * fscale || fx == 0.0) return x;
        if (b.f_lo * fx < 0.0) {
            b.hi = x;
            b.f_hi = fx;
            w_hi = fx;
            if (retained == -1) w_lo *= 0.5;
            retained = -1;
        } else {
            b.lo = x;
            b.f_lo = fx;
            w_lo = fx;
            if (retained == 1) w_hi *= 0.5;
            retained = 1;
        }
        if (b.hi - b.lo <= 1e-15 * std::max(1.0, std::abs(x)))
            return 0.5 * (b.lo + b.hi);
    }
    return x;
}

namespace {

void isolate_rec(PowerPolynomial p, double lo, double hi,
                 std::vector<double>& out) {
    const int deg = p.degree();
    if (deg <= 0) return;
    // normalize so the tolerances below are scale-invariant
    const double norm = p.coeff_scale();
    if (norm > 0.0)
        for (double& c : p.coeffs) c /= norm;
    if (deg == 1) {
        double r = -p.coeffs[0] / p.coeffs[1];
        if (r > lo && r < hi) out.push_back(r);
        return;
    }

    std::vector<double> crit;
    isolate_rec(p.derivative(), lo, hi, crit);
    crit.push_back(hi);

    auto eval = [&p](double t) { return p(t); };

    double a = lo;
    double fa = p(a);
    for (double b : crit) {
        double fb = p(b);
        if (fa == 0.0) {
            // endpoint roots belong to the caller's interval check
        }
        if (fa * fb < 0.0) {
            double r = solve_bracketed(eval, Bracket{a, b, fa, fb});
            if (r > lo && r < hi) out.push_back(r);
        } else if (b < hi && std::abs(fb) <= 1e-10) {
            // critical point sitting on the axis: multiple root, report once
            out.push_back(b);
            // skip the adjacent piece so the same root is not found twice
            a = b;
            fa = fb;
            continue;
        }
        a = b;
        fa = fb;
    }
}

}  // namespace

std::vector<double> isolate_real_roots(const PowerPolynomial& poly, double lo,
                                       double hi) {
    PowerPolynomial p = poly;
    p.trim();
    std::vector<double> out;
    isolate_rec(p, lo, hi, out);
    std::sort(out.begin(), out.end());
    // collapse near-duplicates coming from a tangency found on both sides
    std::vector<double> uniq;
    for (double r : out) {
        // evaluation noise around a double root produces spurious sign
        // changes within ~sqrt(eps) of it, so the merge radius must exceed
        // that spread
        if (uniq.empty() || std::abs(r - uniq.back()) > 1e-7 * std::max(1.0, std::abs(r)))
            uniq.push_back(r);
    }
    return uniq;
}

}  // namespace arcfit
