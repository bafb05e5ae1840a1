#pragma once

#include <cmath>

#include "hmdisk/error.hpp"

namespace hmdisk {

namespace detail {

template <typename F>
double adaptive_simpson(F& f, double a, double m, double b, double fa, double fm, double fb,
                        double whole, double tol, long& budget, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    if ((budget -= 2) < 0) {
        throw Error(ErrorCode::QuadratureFailure, "evaluation budget exhausted");
    }
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth > 0 && std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth > 60) {
        throw Error(ErrorCode::QuadratureFailure, "refinement stalled");
    }
    return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, budget, depth + 1) +
           adaptive_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, budget, depth + 1);
}

} // namespace detail

/// Adaptive Simpson integral of f over [a, b] to absolute tolerance abs_tol.
/// Throws QuadratureFailure when more than max_evals evaluations would be
/// needed.
template <typename F>
double integrate_adaptive(F f, double a, double b, double abs_tol, long max_evals = 1'000'000) {
    long budget = max_evals - 3;
    if (budget < 0) {
        throw Error(ErrorCode::QuadratureFailure, "evaluation budget exhausted");
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson(f, a, m, b, fa, fm, fb, whole, abs_tol, budget, 0);
}

} // namespace hmdisk
