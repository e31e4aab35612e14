#pragma once

#include "levyspde/measure.hpp"
#include "levyspde/operators.hpp"

#include <cstdint>
#include <utility>

namespace levyspde {

/// K(t) = sup_eta int |FG_t(xi + eta)|^2 mu(dxi).  Heat: the sup sits at
/// eta = 0 and equals int e^{-t |xi|^2} mu(dxi).  Wave: returns the
/// certified upper bound D_t C_mu with D_t = 2 (t^2 v 1).
double k_sup(const GreenOperator& op, const ColorationKernel& k, double t);

/// int |FG_t(xi + eta e_1)|^2 mu(dxi) at a frequency offset eta (d <= 3);
/// used to probe where the sup of K is attained.
double k_offset(const GreenOperator& op, const ColorationKernel& k, double t,
                double eta);

/// A_T = int_0^T K(t) dt.  Heat: computed in the swapped order
/// int (1 - e^{-T |xi|^2}) / |xi|^2 mu(dxi).  Wave: the certificate
/// T D_T C_mu.
double a_integral(const GreenOperator& op, const ColorationKernel& k,
                  double T);

struct ChaosTermEstimate {
    int n = 0;
    double jn_value = 0.0;  // MC estimate of J_n(t)
    double jn_se = 0.0;
    double jn_bound = 0.0;  // certified bound (A_t^n heat, factorial wave)
    double term = 0.0;      // m2^n t^n jn_value for m2 = 1
};

/// Monte Carlo estimate of the simplex-spectral integral
///   J_n(t) = int_{simplex} int prod_j |FG_{t_{j+1}-t_j}(xi_1+...+xi_j)|^2
///            mu(dxi_1)...mu(dxi_n) dt,
/// by sorted-uniform times (simplex volume t^n/n!) and frequencies drawn
/// from the normalized mu.  Requires finite mu mass (Heat coloration any d,
/// Bessel with alpha > d); Unsupported otherwise.
ChaosTermEstimate jn_estimate(const GreenOperator& op,
                              const ColorationKernel& k, double t, int n,
                              std::size_t samples, std::uint64_t seed,
                              unsigned workers);

/// Certified bound for J_n(t): heat A_t^n, wave (D_t C_mu)^n t^n / n!.
double jn_bound(const GreenOperator& op, const ColorationKernel& k, double t,
                int n);

/// Simplex quadrature of the product-of-K bound (heat, n <= 3); tighter
/// than A_t^n.
double jn_simplex_bound(const GreenOperator& op, const ColorationKernel& k,
                        double t, int n);

/// Convergence certificate for sum_n m2^n t^n J_n(t): smallest N whose
/// certified tail is below tail_tol, with the partial sum of term bounds.
/// Heat without a geometric ratio < 1 is Inconclusive (conclusive = false).
struct SeriesCertificate {
    int n_terms = 0;
    double partial_sum = 0.0;
    double tail_bound = 0.0;
    bool conclusive = false;
};

SeriesCertificate series_certificate(const GreenOperator& op,
                                     const ColorationKernel& k, double t,
                                     double m2, double tail_tol);

/// First chaos term vs linear second moment: lhs = m2 int |H_t|^2 mu via the
/// closed-form H_t; rhs = the same quantity through the time-first route
/// |H_t|^2 = 2 int_0^t FG_s H_s ds with the spectral integral innermost.
/// Returns (lhs, rhs).
std::pair<double, double> first_chaos_identity(const GreenOperator& op,
                                               const ColorationKernel& k,
                                               double t, double m2);

/// Poisson vs Gaussian chaos-term second moments at order n in {1, 2}.
/// n = 1: identical code path (ratio exactly 1).  n = 2: one MC with shared
/// randomness, the Poisson path carrying sampled z_1^2 z_2^2 and the
/// Gaussian path the analytic m2^2.
struct GaussEquiv {
    double poisson_term = 0.0;
    double gaussian_term = 0.0;
    double ratio_se = 0.0;  // MC standard error of poisson/gaussian
};

GaussEquiv gaussian_equivalence(const GreenOperator& op,
                                const ColorationKernel& k, double t, int n,
                                const LevyMeasure& nu, std::size_t samples,
                                std::uint64_t seed, unsigned workers);

/// Draw from the normalized spectral measure mu / mu(R^d); out must have
/// k.dim slots.  Heat coloration: Gaussian.  Bessel alpha > d: scaled
/// Student-t construction.  Unsupported otherwise.
void sample_mu(const ColorationKernel& k, RandomStream& rng, double* out);

} // namespace levyspde
