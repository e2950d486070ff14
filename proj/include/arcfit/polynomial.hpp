#ifndef ARCFIT_POLYNOMIAL_HPP
#define ARCFIT_POLYNOMIAL_HPP

#include <functional>
#include <vector>

namespace arcfit {

/// Real polynomial in the power basis, coefficients constant-first.
struct PowerPolynomial {
    std::vector<double> coeffs;

    PowerPolynomial() = default;
    explicit PowerPolynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    // Horner evaluation.
    double operator()(double t) const;

    PowerPolynomial derivative() const;

    // Degree after ignoring trailing coefficients below 1e-300 in magnitude.
    int degree() const;

    // Drops negligible leading coefficients.
    void trim(double eps = 1e-300);

    // Largest coefficient magnitude; 0 for the zero polynomial.
    double coeff_scale() const;
};

PowerPolynomial multiply(const PowerPolynomial& a, const PowerPolynomial& b);
PowerPolynomial add(const PowerPolynomial& a, const PowerPolynomial& b);

// Builds a monic polynomial with the given roots.
PowerPolynomial from_roots(const std::vector<double>& roots);

/// Sign-change interval with cached endpoint values.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

// Evaluates f at the endpoints; throws std::invalid_argument unless
// lo < hi and f(lo)*f(hi) <= 0.
Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi);

// Safeguarded Newton (secant-slope) with bisection fallback. Newton steps are
// accepted only when they land strictly inside the current bracket.
// Stops when |f(r)| <= tol * (1 + max(|f_lo|, |f_hi|)) or the bracket width
// drops below 1e-15 * max(1, |r|).
double solve_bracketed(const std::function<double(double)>& f, Bracket bracket,
                       double tol = 1e-14);

// All real roots of poly in (lo, hi), increasing. Monotone pieces are cut at
// the (recursively isolated) roots of the derivative; each sign change yields
// one bracketed root. A derivative root where |poly| <= 1e-10 * scale is
// reported once as a multiple root.
std::vector<double> isolate_real_roots(const PowerPolynomial& poly, double lo,
                                       double hi);

}  // namespace arcfit

#endif
