#pragma once

#include <functional>

namespace levyspde::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
};

using Fn = std::function<double(double)>;

/// One Gauss-Kronrod 7-15 panel on [a,b]; err is the |G7-K15| based estimate.
double gk15(const Fn& f, double a, double b, double& err);

/// Adaptive bisection driven by the G7-K15 error estimate.
Result integrate(const Fn& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-10,
                 int max_depth = 50);

/// Integral over [a, inf) via the rational substitution x = a + u/(1-u).
Result integrate_half_line(const Fn& f, double a,
                           double abs_tol = 1e-12, double rel_tol = 1e-10);

/// Integral over [0, inf) of a cosine-modulated decaying integrand:
///   I = \int_0^inf f(x) cos(omega x) dx,
/// summed over half-period chunks until the chunk magnitude certifies the
/// tail below tail_tol.  Throws QuadratureFail if the tail cannot be
/// certified within the chunk budget.
double integrate_cosine(const Fn& f, double omega, double tail_tol = 1e-7);

/// Fixed-grid composite Simpson on [a,b] with n subintervals (n even).
double simpson(const Fn& f, double a, double b, int n);

/// Fixed-grid trapezoid rule on [a,b] with n subintervals.
double trapezoid(const Fn& f, double a, double b, int n);

} // namespace levyspde::quad
