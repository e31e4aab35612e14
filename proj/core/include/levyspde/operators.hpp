#pragma once

#include "levyspde/kernels.hpp"

#include <limits>

namespace levyspde {

enum class OpFamily { Heat, Wave };

/// Fundamental solution G_t of the heat operator d/dt - (1/2) Laplacian or
/// the wave operator d^2/dt^2 - Laplacian.
struct GreenOperator {
    OpFamily family;
    int dim;

    static GreenOperator heat(int dim);
    static GreenOperator wave(int dim);
};

/// Fourier symbol FG_t at |xi| = r.
///   heat: exp(-t r^2 / 2);  wave: sin(t r)/r (limit t at r = 0).
double fourier_g(const GreenOperator& op, double t, double r);

/// H_t(r) = int_0^t FG_{t-s}(r) ds, closed forms:
///   heat: 2 (1 - exp(-t r^2/2)) / r^2   (t at r = 0)
///   wave: (1 - cos(t r)) / r^2          (t^2/2 at r = 0)
double h_transform(const GreenOperator& op, double t, double r);

/// Spatial density G_t(x) at |x| = r.  Wave d >= 3 is a measure, not a
/// function: Unsupported.
double green_eval(const GreenOperator& op, double t, double r);

/// ||G_t||_{L^q}; the infinite case (wave d = 2, q >= 2) is a tagged value,
/// not an exception.
struct LqNorm {
    double value;
    bool finite;
};
LqNorm green_lq_norm(const GreenOperator& op, double t, double q);

/// J_p(t) = ||G_t * kappa||^2_{L^p}.  Closed Gaussian-Gaussian form for the
/// heat operator with the Heat-family kernel (any d); otherwise the d = 1
/// grid route: inverse Fourier synthesis of FG_t * g^{1/2} followed by a
/// grid L^p norm, with a resolution-doubling guard.
double jp_norm(const GreenOperator& op, const ColorationKernel& k, double t,
               double p);

/// Moment-bound value for J_p(t) with C = 1, dispatching on kernel family:
///   Heat kernel:  int |FG_t(xi)|^2 exp(-alpha |xi|^2/2) dxi
///   Riesz:        ||G_t||^2_{L^q} with 1/q = 1/p + alpha/(2d)
///   Bessel (L^1): ||G_t||^2_{L^p}
double jp_bound(const GreenOperator& op, const ColorationKernel& k, double t,
                double p);

/// The set of p >= 2 for which the p-th moment envelope's time integral is
/// finite; all == true means every p >= 2 with m_p finite.
struct AdmissibleP {
    double p_min = 2.0;
    double p_max = std::numeric_limits<double>::infinity();  // exclusive
    bool all = false;
};
AdmissibleP admissible_p_range(const GreenOperator& op,
                               const ColorationKernel& k);

} // namespace levyspde
