#include "levyspde/kernels.hpp"
#include "levyspde/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace levyspde {

namespace {

double norm_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

ColorationKernel ColorationKernel::heat(double alpha, int dim) {
    if (!(alpha > 0.0) || dim < 1) throw DomainError("heat kernel: bad parameters");
    return {KernelFamily::Heat, alpha, dim};
}

ColorationKernel ColorationKernel::riesz(double alpha, int dim) {
    if (dim < 1 || !(alpha > 0.0) || !(alpha < dim))
        throw DomainError("riesz kernel: need 0 < alpha < d");
    return {KernelFamily::Riesz, alpha, dim};
}

ColorationKernel ColorationKernel::bessel(double alpha, int dim) {
    if (!(alpha > 0.0) || dim < 1) throw DomainError("bessel kernel: bad parameters");
    return {KernelFamily::Bessel, alpha, dim};
}

double sphere_area(int dim) {
    return 2.0 * std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double spectral_density(const ColorationKernel& k, double r) {
    switch (k.family) {
        case KernelFamily::Heat:
            return std::exp(-0.5 * k.alpha * r * r);
        case KernelFamily::Riesz:
            if (r == 0.0) throw DomainError("riesz spectral density at xi = 0");
            return std::pow(r, -k.alpha);
        case KernelFamily::Bessel:
            return std::pow(1.0 + r * r, -0.5 * k.alpha);
    }
    return 0.0;
}

double spectral_density(const ColorationKernel& k, std::span<const double> xi) {
    return spectral_density(k, norm_of(xi));
}

double kappa_eval(const ColorationKernel& k, double r) {
    const double d = k.dim;
    const double a = 0.5 * k.alpha;  // kappa sits at index alpha/2
    switch (k.family) {
        case KernelFamily::Heat:
            // H_{d,a}(x) = (2 pi a)^{-d/2} exp(-|x|^2 / (2a))
            return std::pow(2.0 * M_PI * a, -0.5 * d) *
                   std::exp(-r * r / (2.0 * a));
        case KernelFamily::Riesz: {
            if (r == 0.0 && d - a >= 0.0)
                throw DomainError("riesz kernel singular at the origin");
            const double c = std::pow(M_PI, -0.5 * d) * std::pow(2.0, -a) *
                             std::tgamma(0.5 * (d - a)) / std::tgamma(0.5 * a);
            return c * std::pow(r, -(d - a));
        }
        case KernelFamily::Bessel: {
            if (r == 0.0 && d - a >= 0.0)
                throw DomainError("bessel kernel singular at the origin");
            // B_{d,a}(x) = Gamma(a/2)^{-1} int_0^inf w^{a/2-1} e^{-w}
            //              (4 pi w)^{-d/2} exp(-|x|^2/(4w)) dw
            auto f = [&](double w) {
                return std::pow(w, 0.5 * a - 1.0) * std::exp(-w) *
                       std::pow(4.0 * M_PI * w, -0.5 * d) *
                       std::exp(-r * r / (4.0 * w));
            };
            const double head = quad::integrate(f, 0.0, 1.0, 0.0, 1e-10).value;
            const double tail = quad::integrate_half_line(f, 1.0, 0.0, 1e-10).value;
            return (head + tail) / std::tgamma(0.5 * a);
        }
    }
    return 0.0;
}

double kappa_eval(const ColorationKernel& k, std::span<const double> x) {
    return kappa_eval(k, norm_of(x));
}

bool dalang_check(const ColorationKernel& k) {
    switch (k.family) {
        case KernelFamily::Heat:
            return true;
        case KernelFamily::Riesz:
            return k.alpha > k.dim - 2 && k.alpha < k.dim;
        case KernelFamily::Bessel:
            return k.alpha > k.dim - 2;
    }
    return false;
}

double mu_radial_integral(const ColorationKernel& k,
                          const std::function<double(double)>& F,
                          double r_max) {
    const double d = k.dim;
    const double prefactor =
        std::pow(2.0 * M_PI, -d) * sphere_area(k.dim);
    const bool infinite = (r_max < 0.0);
    const double hi = infinite ? std::numeric_limits<double>::infinity() : r_max;

    auto body = [&](double r) {
        return std::pow(r, d - 1.0) * F(r) * spectral_density(k, r);
    };

    double head = 0.0;
    double split = std::min(1.0, hi);
    if (k.family == KernelFamily::Riesz) {
        // r = u^{1/(d-alpha)} turns r^{d-1-alpha} dr into du/(d-alpha)
        const double q = d - k.alpha;
        head = quad::integrate(
                   [&](double u) { return F(std::pow(u, 1.0 / q)) / q; }, 0.0,
                   std::pow(split, q), 0.0, 1e-10)
                   .value;
    } else {
        head = quad::integrate(body, 0.0, split, 0.0, 1e-10).value;
    }

    double tail = 0.0;
    if (hi > split) {
        tail = infinite
                   ? quad::integrate_half_line(body, split, 0.0, 1e-9).value
                   : quad::integrate(body, split, hi, 0.0, 1e-9).value;
    }
    return prefactor * (head + tail);
}

bool cutoff_stable(const ColorationKernel& k) {
    auto weight = [](double r) { return 1.0 / (1.0 + r * r); };
    const double r0 = 1e3;
    const double i1 = mu_radial_integral(k, weight, r0);
    const double i2 = mu_radial_integral(k, weight, 2.0 * r0);
    const double i3 = mu_radial_integral(k, weight, 4.0 * r0);
    const double d1 = i2 - i1, d2 = i3 - i2;
    if (d2 <= 1e-12 * std::fabs(i3)) return true;  // tail already dead
    return d2 < 0.999 * d1;
}

double dalang_integral(const ColorationKernel& k, bool force) {
    if (!force && !dalang_check(k))
        throw DivergentIntegral("dalang condition (D) fails");
    if (force && !cutoff_stable(k))
        throw DivergentIntegral("dalang integral diverges (cutoff growth)");
    return mu_radial_integral(k, [](double r) { return 1.0 / (1.0 + r * r); });
}

double mu_total_mass(const ColorationKernel& k) {
    switch (k.family) {
        case KernelFamily::Heat:
            // (2pi)^{-d} int exp(-alpha |xi|^2/2) dxi = (2 pi alpha)^{-d/2}
            return std::pow(2.0 * M_PI * k.alpha, -0.5 * k.dim);
        case KernelFamily::Riesz:
            throw Unsupported("riesz spectral measure has infinite mass");
        case KernelFamily::Bessel: {
            if (!(k.alpha > k.dim))
                throw Unsupported("bessel spectral mass infinite for alpha <= d");
            // int_0^inf r^{d-1} (1+r^2)^{-alpha/2} dr = B(d/2, (alpha-d)/2)/2
            const double d = k.dim;
            const double lb = std::lgamma(0.5 * d) +
                              std::lgamma(0.5 * (k.alpha - d)) -
                              std::lgamma(0.5 * k.alpha);
            return std::pow(2.0 * M_PI, -d) * sphere_area(k.dim) * 0.5 *
                   std::exp(lb);
        }
    }
    return 0.0;
}

namespace {

double inner0_on_grid(const std::function<double(double)>& phi,
                      const std::function<double(double)>& psi,
                      const ColorationKernel& k, double half_width, int n) {
    const double h = 2.0 * half_width / n;
    std::vector<double> pv(n + 1), qv(n + 1), xs(n + 1);
    for (int j = 0; j <= n; ++j) {
        xs[j] = -half_width + j * h;
        pv[j] = phi(xs[j]);
        qv[j] = psi(xs[j]);
    }
    auto transform_product = [&](double xi) {
        std::complex<double> fp{0.0, 0.0}, fq{0.0, 0.0};
        for (int j = 0; j <= n; ++j) {
            const std::complex<double> e{std::cos(xi * xs[j]),
                                         -std::sin(xi * xs[j])};
            fp += pv[j] * e;
            fq += qv[j] * e;
        }
        return std::real(fp * std::conj(fq)) * h * h;
    };
    const double nyquist = M_PI / h;
    return mu_radial_integral(k, transform_product, nyquist);
}

} // namespace

double inner0(const std::function<double(double)>& phi,
              const std::function<double(double)>& psi,
              const ColorationKernel& k, double half_width, int n) {
    if (k.dim != 1) throw Unsupported("inner0 is implemented for d = 1");
    const double coarse = inner0_on_grid(phi, psi, k, half_width, n);
    const double fine = inner0_on_grid(phi, psi, k, half_width, 2 * n);
    const double scale = std::max(std::fabs(fine), 1e-300);
    if (std::fabs(fine - coarse) > 1e-4 * scale)
        throw GridTooCoarse("inner0: resolution doubling moved the value");
    return fine;
}

} // namespace levyspde
