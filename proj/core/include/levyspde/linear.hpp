#pragma once

#include "levyspde/measure.hpp"
#include "levyspde/operators.hpp"

#include <cstdint>

namespace levyspde {

/// Weight of the linear solution at (t, x):
///   w_{t,x}(y) = int_0^t (G_{t-s}(x - .) * kappa)(y) ds
///              = (1/pi) int_0^inf cos(xi (y - x)) g^{1/2}(xi) H_t(xi) dxi
/// (d = 1 only; real by symmetry since F kappa = g^{1/2} is real and even).
double weight_eval(const GreenOperator& op, const ColorationKernel& k,
                   double t, double x, double y);

/// Monte Carlo summary of v(t, x) from the compound-Poisson representation.
struct FieldEstimate {
    double t = 0.0;
    double x = 0.0;
    std::size_t trials = 0;
    double mean = 0.0, mean_se = 0.0;
    double second = 0.0, second_se = 0.0;    // E v^2
    double p4_norm = 0.0, p4_norm_se = 0.0;  // ||v||_4
};

/// Samples v(t,x) = sum_i z_i w_{t,x}(y_i) - nu_mean int w over a PRM on
/// [-R, R].  The spatial truncation is validated up front: the spectral
/// (Plancherel) value of ||w||_2^2 and its boxed grid integral must agree to
/// 1e-4 relative, else TruncationError.  Riesz coloration is excluded.
FieldEstimate simulate_linear(const GreenOperator& op,
                              const ColorationKernel& k, const LevyMeasure& nu,
                              double t, double x, double box_half_width,
                              std::size_t trials, std::uint64_t seed,
                              unsigned workers);

/// E v(t,x)^2 = m_2 int |H_t(xi)|^2 mu(dxi), radial quadrature, any d.
double exact_second_moment(const GreenOperator& op, const ColorationKernel& k,
                           double t, double m2);

/// E v(t,x) v(t,x') = m_2 int cos(xi (x - x')) |H_t|^2 mu(dxi); x != x'
/// supported for d = 1 only.
double covariance_linear(const GreenOperator& op, const ColorationKernel& k,
                         double t, double x, double x_prime, double m2);

/// Upper envelope for ||v(t,x)||_p:
///   C_p int_0^t (J_2(s)^{1/2} + J_p(s)^{1/2}) ds,
/// C_p = B_p (m_2^{1/2} v m_p^{1/p}), with each J term replaced by its
/// closed-form power-law majorant so the time integral is exact.
double p_moment_envelope(const GreenOperator& op, const ColorationKernel& k,
                         double t, double p, double b_p,
                         const LevyMeasure& nu);

/// Alternative envelope
///   [ t^{p-1} C_p^p int_0^t (J_2(s)^{p/2} + J_p(s)^{p/2}) ds ]^{1/p},
/// finite on a strictly smaller p-range.
double alt_p_moment_envelope(const GreenOperator& op,
                             const ColorationKernel& k, double t, double p,
                             double b_p, const LevyMeasure& nu);

} // namespace levyspde
