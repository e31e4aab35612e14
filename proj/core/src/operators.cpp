#include "levyspde/operators.hpp"
#include "levyspde/errors.hpp"
#include "levyspde/quad.hpp"

#include <cmath>
#include <vector>

namespace levyspde {

GreenOperator GreenOperator::heat(int dim) {
    if (dim < 1) throw DomainError("heat operator: dim >= 1 required");
    return {OpFamily::Heat, dim};
}

GreenOperator GreenOperator::wave(int dim) {
    if (dim < 1) throw DomainError("wave operator: dim >= 1 required");
    return {OpFamily::Wave, dim};
}

double fourier_g(const GreenOperator& op, double t, double r) {
    if (t < 0.0) throw DomainError("fourier_g: t >= 0 required");
    if (op.family == OpFamily::Heat) return std::exp(-0.5 * t * r * r);
    if (r == 0.0) return t;
    // sin(t r)/r loses accuracy for tiny t r; the direct form is fine here
    return std::sin(t * r) / r;
}

double h_transform(const GreenOperator& op, double t, double r) {
    if (t < 0.0) throw DomainError("h_transform: t >= 0 required");
    if (op.family == OpFamily::Heat) {
        if (r == 0.0) return t;
        // cancellation-free via expm1
        return -2.0 * std::expm1(-0.5 * t * r * r) / (r * r);
    }
    if (r == 0.0) return 0.5 * t * t;
    // 1 - cos(t r) = 2 sin^2(t r / 2), cancellation-free
    const double s = std::sin(0.5 * t * r);
    return 2.0 * s * s / (r * r);
}

double green_eval(const GreenOperator& op, double t, double r) {
    if (!(t > 0.0)) throw DomainError("green_eval: t > 0 required");
    if (op.family == OpFamily::Heat) {
        return std::pow(2.0 * M_PI * t, -0.5 * op.dim) *
               std::exp(-r * r / (2.0 * t));
    }
    switch (op.dim) {
        case 1:
            return (r < t) ? 0.5 : 0.0;
        case 2:
            return (r < t)
                       ? 1.0 / (2.0 * M_PI * std::sqrt(t * t - r * r))
                       : 0.0;
        default:
            throw Unsupported("wave Green function is not a function for d >= 3");
    }
}

LqNorm green_lq_norm(const GreenOperator& op, double t, double q) {
    if (!(t > 0.0) || !(q > 0.0))
        throw DomainError("green_lq_norm: t > 0, q > 0 required");
    if (op.family == OpFamily::Heat) {
        const double d = op.dim;
        // ||G_t||_q^q = (2 pi t)^{-d(q-1)/2} q^{-d/2}
        const double cq =
            std::pow(2.0 * M_PI, -0.5 * d * (q - 1.0)) * std::pow(q, -0.5 * d);
        return {std::pow(cq, 1.0 / q) * std::pow(t, 0.5 * d * (1.0 / q - 1.0)),
                true};
    }
    switch (op.dim) {
        case 1:
            // |G_t| = 1/2 on an interval of length 2t
            return {std::pow(std::pow(0.5, q) * 2.0 * t, 1.0 / q), true};
        case 2:
            if (q >= 2.0)
                return {std::numeric_limits<double>::infinity(), false};
            return {std::pow(std::pow(2.0 * M_PI, 1.0 - q) *
                                 std::pow(t, 2.0 - q) / (2.0 - q),
                             1.0 / q),
                    true};
        default:
            throw Unsupported("wave L^q norm undefined for d >= 3");
    }
}

namespace {

/// ||H_{d,a}||_{L^p}^2 for the Gaussian H_{d,a}(x) = (2 pi a)^{-d/2}
/// exp(-|x|^2/(2a)).
double gaussian_lp_norm_sq(double a, int dim, double p) {
    const double d = dim;
    // ||H||_p^p = (2 pi a)^{-dp/2} (2 pi a / p)^{d/2}
    const double log_norm =
        (-0.5 * d * (p - 1.0) * std::log(2.0 * M_PI * a) -
         0.5 * d * std::log(p)) /
        p;
    return std::exp(2.0 * log_norm);
}

/// Amplitude FG_t(r) * g^{1/2}(r) of the Fourier transform of G_t * kappa.
double convolved_symbol(const GreenOperator& op, const ColorationKernel& k,
                        double t, double r) {
    return fourier_g(op, t, r) * std::sqrt(spectral_density(k, r));
}

double jp_norm_on_grid(const GreenOperator& op, const ColorationKernel& k,
                       double t, double p, double xi_max, double half_width,
                       int n_xi, int n_x) {
    // midpoint rule in xi dodges the (integrable) Riesz r -> 0 singularity
    const double h_xi = xi_max / n_xi;
    std::vector<double> amp(n_xi);
    std::vector<double> xi(n_xi);
    for (int m = 0; m < n_xi; ++m) {
        xi[m] = (m + 0.5) * h_xi;
        amp[m] = convolved_symbol(op, k, t, xi[m]) * h_xi / M_PI;
    }
    // w is even in x, so synthesize on [0, L] only; composite Simpson
    const double h_x = half_width / n_x;
    double lp_pow = 0.0;
    for (int j = 0; j <= n_x; ++j) {
        const double x = j * h_x;
        double w = 0.0;
        for (int m = 0; m < n_xi; ++m) w += amp[m] * std::cos(xi[m] * x);
        const double sw =
            (j == 0 || j == n_x) ? 1.0 : ((j % 2) ? 4.0 : 2.0);
        lp_pow += 2.0 * sw * std::pow(std::fabs(w), p) * h_x / 3.0;
    }
    return std::pow(lp_pow, 2.0 / p);
}

// wave, d = 1: (G_t * kappa)(x) = (1/2) int_{x-t}^{x+t} kappa(u) du, exact in
// space; the symbol route is hopeless here because |FG_t| ~ 1/|xi| decays too
// slowly for an absolute frequency cutoff
double jp_norm_wave_spatial(const ColorationKernel& k, double t, double p,
                            double half_width, int n_x) {
    auto f = [&](double u) { return kappa_eval(k, std::fabs(u)); };
    auto w_at = [&](double x) {
        const double lo = x - t, hi = x + t;
        // kappa may have an integrable singularity at 0: split there
        if (lo < 0.0 && hi > 0.0) {
            return 0.5 * (quad::integrate(f, lo, 0.0, 1e-14, 1e-10).value +
                          quad::integrate(f, 0.0, hi, 1e-14, 1e-10).value);
        }
        return 0.5 * quad::integrate(f, lo, hi, 1e-14, 1e-10).value;
    };
    const double h_x = half_width / n_x;
    double lp_pow = 0.0;
    for (int j = 0; j <= n_x; ++j) {
        const double w = w_at(j * h_x);
        const double sw =
            (j == 0 || j == n_x) ? 1.0 : ((j % 2) ? 4.0 : 2.0);
        lp_pow += 2.0 * sw * std::pow(std::fabs(w), p) * h_x / 3.0;
    }
    return std::pow(lp_pow, 2.0 / p);
}

} // namespace

double jp_norm(const GreenOperator& op, const ColorationKernel& k, double t,
               double p) {
    if (!(t > 0.0) || !(p >= 1.0))
        throw DomainError("jp_norm: t > 0, p >= 1 required");
    if (op.dim != k.dim) throw DomainError("jp_norm: dimension mismatch");

    if (op.family == OpFamily::Heat && k.family == KernelFamily::Heat) {
        // G_t * kappa = H_{d, t + alpha/2}: Gaussian-Gaussian closed form
        return gaussian_lp_norm_sq(t + 0.5 * k.alpha, op.dim, p);
    }
    if (op.dim != 1)
        throw Unsupported("jp_norm numeric route is d = 1 only");

    // spatial window: diffusive scale for heat, light cone + kernel width
    // for wave
    const double width_scale = std::sqrt(t + std::max(k.alpha, 1.0));
    const double half_width = (op.family == OpFamily::Heat)
                                  ? 10.0 * width_scale
                                  : t + 10.0 * width_scale;

    if (op.family == OpFamily::Wave) {
        const int n_x = 1024;
        const double coarse = jp_norm_wave_spatial(k, t, p, half_width, n_x);
        const double fine =
            jp_norm_wave_spatial(k, t, p, half_width, 2 * n_x);
        const double scale = std::max(std::fabs(fine), 1e-300);
        if (std::fabs(fine - coarse) > 1e-3 * scale)
            throw GridTooCoarse("jp_norm: resolution doubling moved the value");
        return fine;
    }

    // frequency cutoff: grow until the absolute symbol tail is negligible
    const double total =
        quad::integrate([&](double r) { return std::fabs(convolved_symbol(op, k, t, r)); },
                        0.0, 1.0, 1e-13, 1e-8)
            .value +
        quad::integrate_half_line(
            [&](double r) { return std::fabs(convolved_symbol(op, k, t, r)); },
            1.0, 1e-13, 1e-8)
            .value;
    double xi_max = 16.0;
    for (;;) {
        const double tail =
            quad::integrate_half_line(
                [&](double r) {
                    return std::fabs(convolved_symbol(op, k, t, r));
                },
                xi_max, 1e-14, 1e-6)
                .value;
        if (tail < 1e-9 * total) break;
        xi_max *= 2.0;
        if (xi_max > 1e6)
            throw GridTooCoarse("jp_norm: symbol tail does not decay");
    }

    const int n_xi = 4096, n_x = 1024;
    const double coarse =
        jp_norm_on_grid(op, k, t, p, xi_max, half_width, n_xi, n_x);
    const double fine =
        jp_norm_on_grid(op, k, t, p, xi_max, half_width, 2 * n_xi, 2 * n_x);
    const double scale = std::max(std::fabs(fine), 1e-300);
    if (std::fabs(fine - coarse) > 1e-3 * scale)
        throw GridTooCoarse("jp_norm: resolution doubling moved the value");
    return fine;
}

double jp_bound(const GreenOperator& op, const ColorationKernel& k, double t,
                double p) {
    if (!(t > 0.0) || !(p > 0.0))
        throw DomainError("jp_bound: t > 0, p > 0 required");
    if (op.dim != k.dim) throw DomainError("jp_bound: dimension mismatch");
    const double d = op.dim;

    switch (k.family) {
        case KernelFamily::Heat: {
            // int |FG_t(xi)|^2 exp(-alpha |xi|^2 / 2) dxi, any p
            auto f = [&](double r) {
                const double s = fourier_g(op, t, r);
                return std::pow(r, d - 1.0) * s * s *
                       std::exp(-0.5 * k.alpha * r * r);
            };
            const double radial =
                quad::integrate(f, 0.0, 1.0, 1e-13, 1e-9).value +
                quad::integrate_half_line(f, 1.0, 1e-13, 1e-9).value;
            return sphere_area(op.dim) * radial;
        }
        case KernelFamily::Riesz: {
            if (!(p > 2.0 * d / (2.0 * d - k.alpha)))
                throw Unsupported("jp_bound: need p > 2d/(2d - alpha)");
            const double q = 1.0 / (1.0 / p + k.alpha / (2.0 * d));
            const LqNorm lq = green_lq_norm(op, t, q);
            if (!lq.finite)
                throw Unsupported("jp_bound: ||G_t||_q infinite at induced q");
            return lq.value * lq.value;
        }
        case KernelFamily::Bessel: {
            // kappa in L^1 with ||kappa||_1 = 1
            const LqNorm lq = green_lq_norm(op, t, p);
            if (!lq.finite)
                throw Unsupported("jp_bound: ||G_t||_p infinite");
            return lq.value * lq.value;
        }
    }
    throw DomainError("jp_bound: unknown kernel family");
}

AdmissibleP admissible_p_range(const GreenOperator& op,
                               const ColorationKernel& k) {
    if (op.dim != k.dim)
        throw DomainError("admissible_p_range: dimension mismatch");
    const double d = op.dim;
    AdmissibleP r;

    if (op.family == OpFamily::Wave && op.dim >= 3)
        throw Unsupported("admissible_p_range: wave d >= 3 out of scope");
    if (k.family == KernelFamily::Heat) {
        r.all = true;
        return r;
    }
    if (op.family == OpFamily::Heat) {
        if (k.family == KernelFamily::Riesz) {
            if (k.alpha >= 2.0 * d - 4.0) {
                r.all = true;
            } else {
                r.p_max = 2.0 * d / (2.0 * d - k.alpha - 4.0);
            }
            return r;
        }
        // L^1 kernel (Bessel)
        if (d <= 2.0) {
            r.all = true;
        } else {
            r.p_max = d / (d - 2.0);
        }
        return r;
    }
    // wave operator, d <= 2
    if (k.family == KernelFamily::Riesz) {
        if (op.dim == 1) {
            r.all = true;
        } else {
            // d = 2: factory already enforces alpha < 2
            r.p_max = 4.0 / (2.0 - k.alpha);
        }
        return r;
    }
    // wave + L^1 kernel
    if (op.dim == 1) {
        r.all = true;
    } else {
        r.p_max = 2.0;  // empty: ||G_t||_p is infinite for every p >= 2
    }
    return r;
}

} // namespace levyspde
