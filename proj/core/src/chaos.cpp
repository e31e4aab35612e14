#include "levyspde/chaos.hpp"
#include "levyspde/errors.hpp"
#include "levyspde/quad.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace levyspde {

namespace {

double norm3(const double* v, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += v[i] * v[i];
    return std::sqrt(s);
}

bool finite_mu_mass(const ColorationKernel& k) {
    if (k.family == KernelFamily::Heat) return true;
    return k.family == KernelFamily::Bessel && k.alpha > k.dim;
}

double d_wave(double t) { return 2.0 * std::max(t * t, 1.0); }

} // namespace

void sample_mu(const ColorationKernel& k, RandomStream& rng, double* out) {
    if (k.family == KernelFamily::Heat) {
        const double s = 1.0 / std::sqrt(k.alpha);
        for (int i = 0; i < k.dim; ++i) out[i] = s * rng.normal();
        return;
    }
    if (k.family == KernelFamily::Bessel && k.alpha > k.dim) {
        // (1+|xi|^2)^{-alpha/2} is the density of Z / sqrt(W),
        // Z ~ N(0, I_d), W ~ chi^2 with alpha - d degrees of freedom
        const double w = rng.chi_square(k.alpha - k.dim);
        const double s = 1.0 / std::sqrt(w);
        for (int i = 0; i < k.dim; ++i) out[i] = s * rng.normal();
        return;
    }
    throw Unsupported("sample_mu: spectral measure has infinite mass");
}

double k_sup(const GreenOperator& op, const ColorationKernel& k, double t) {
    if (op.dim != k.dim) throw DomainError("k_sup: dimension mismatch");
    if (!dalang_check(k)) throw DomainError("k_sup: Dalang check fails");
    if (op.family == OpFamily::Heat) {
        return mu_radial_integral(
            k, [&](double r) { return std::exp(-t * r * r); });
    }
    return d_wave(t) * dalang_integral(k);
}

double k_offset(const GreenOperator& op, const ColorationKernel& k, double t,
                double eta) {
    if (op.dim != k.dim) throw DomainError("k_offset: dimension mismatch");
    if (op.dim > 3) throw Unsupported("k_offset: d <= 3 only");
    auto sym2 = [&](double r) {
        const double s = fourier_g(op, t, r);
        return s * s;
    };
    auto angular = [&](double r) {
        switch (op.dim) {
            case 1:
                return sym2(r + eta) + sym2(std::fabs(r - eta));
            case 2: {
                auto f = [&](double th) {
                    return sym2(std::sqrt(std::max(
                        r * r + eta * eta + 2.0 * r * eta * std::cos(th),
                        0.0)));
                };
                return 2.0 * quad::simpson(f, 0.0, M_PI, 512);
            }
            default: {
                auto f = [&](double th) {
                    return std::sin(th) *
                           sym2(std::sqrt(std::max(
                               r * r + eta * eta +
                                   2.0 * r * eta * std::cos(th),
                               0.0)));
                };
                return 2.0 * M_PI * quad::simpson(f, 0.0, M_PI, 512);
            }
        }
    };
    const double d = op.dim;
    auto body = [&](double r) {
        return std::pow(r, d - 1.0) * spectral_density(k, r) * angular(r);
    };
    const double head = quad::integrate(body, 0.0, 1.0, 0.0, 1e-11).value;
    const double tail = quad::integrate_half_line(body, 1.0, 0.0, 1e-11).value;
    return std::pow(2.0 * M_PI, -d) * (head + tail);
}

double a_integral(const GreenOperator& op, const ColorationKernel& k,
                  double T) {
    if (op.dim != k.dim) throw DomainError("a_integral: dimension mismatch");
    if (T == 0.0) return 0.0;
    if (op.family == OpFamily::Heat) {
        // Fubini: int_0^T int e^{-t|xi|^2} mu dt = int (1-e^{-T|xi|^2})/|xi|^2 mu
        return mu_radial_integral(k, [&](double r) {
            const double u = T * r * r;
            if (u < 1e-8) return T * (1.0 - 0.5 * u);
            return (1.0 - std::exp(-u)) / (r * r);
        });
    }
    return T * d_wave(T) * dalang_integral(k);
}

double jn_bound(const GreenOperator& op, const ColorationKernel& k, double t,
                int n) {
    if (n < 1) throw DomainError("jn_bound: n >= 1 required");
    if (op.family == OpFamily::Heat)
        return std::pow(a_integral(op, k, t), n);
    const double x = d_wave(t) * dalang_integral(k) * t;
    return std::exp(n * std::log(x) - std::lgamma(n + 1.0));
}

double jn_simplex_bound(const GreenOperator& op, const ColorationKernel& k,
                        double t, int n) {
    if (n < 1 || n > 3)
        throw DomainError("jn_simplex_bound: n in {1,2,3}");
    if (!finite_mu_mass(k))
        throw Unsupported("jn_simplex_bound: K(0) infinite for this kernel");

    // tabulate K on [0, t], then iterate the convolution
    //   C_1(tau) = int_0^tau K, C_{m+1}(tau) = int_0^tau K(u) C_m(tau - u) du
    const int ngrid = 512;
    const double h = t / ngrid;
    std::vector<double> kk(ngrid + 1);
    for (int i = 0; i <= ngrid; ++i) kk[i] = k_sup(op, k, i * h);

    auto convolve = [&](const std::vector<double>& c) {
        std::vector<double> out(ngrid + 1, 0.0);
        for (int i = 1; i <= ngrid; ++i) {
            double s = 0.0;
            for (int j = 0; j <= i; ++j) {
                const double w = (j == 0 || j == i) ? 0.5 : 1.0;
                s += w * kk[j] * c[i - j];
            }
            out[i] = s * h;
        }
        return out;
    };

    std::vector<double> c(ngrid + 1, 1.0);  // C_0 = 1
    for (int m = 0; m < n; ++m) c = convolve(c);
    return c[ngrid];
}

ChaosTermEstimate jn_estimate(const GreenOperator& op,
                              const ColorationKernel& k, double t, int n,
                              std::size_t samples, std::uint64_t seed,
                              unsigned workers) {
    if (n < 1) throw DomainError("jn_estimate: n >= 1 required");
    if (op.dim != k.dim) throw DomainError("jn_estimate: dimension mismatch");
    if (!finite_mu_mass(k))
        throw Unsupported("jn_estimate: normalized-mu sampling needs finite "
                          "spectral mass");
    if (samples < 2) throw DomainError("jn_estimate: samples >= 2 required");

    const double mass = mu_total_mass(k);
    const int d = k.dim;
    const double log_simplex =
        n * std::log(t) - std::lgamma(n + 1.0) + n * std::log(mass);
    const double scale = std::exp(log_simplex);  // t^n/n! * mass^n

    auto draws = run_trials(seed, samples, workers,
                            [&](std::size_t, RandomStream& rs) {
        std::vector<double> ts(n);
        for (int j = 0; j < n; ++j) ts[j] = rs.uniform(0.0, t);
        std::sort(ts.begin(), ts.end());
        std::vector<double> prefix(d, 0.0), xi(d);
        double prod = 1.0;
        for (int j = 0; j < n; ++j) {
            sample_mu(k, rs, xi.data());
            for (int i = 0; i < d; ++i) prefix[i] += xi[i];
            const double dt = ((j + 1 < n) ? ts[j + 1] : t) - ts[j];
            const double s = fourier_g(op, dt, norm3(prefix.data(), d));
            prod *= s * s;
        }
        return prod;
    });

    const double nn = static_cast<double>(samples);
    const double mean = kahan_sum(draws) / nn;
    double var = 0.0;
    for (double x : draws) var += (x - mean) * (x - mean);
    var /= (nn - 1.0);

    ChaosTermEstimate est;
    est.n = n;
    est.jn_value = scale * mean;
    est.jn_se = scale * std::sqrt(var / nn);
    est.jn_bound = jn_bound(op, k, t, n);
    est.term = std::pow(t, n) * est.jn_value;
    return est;
}

SeriesCertificate series_certificate(const GreenOperator& op,
                                     const ColorationKernel& k, double t,
                                     double m2, double tail_tol) {
    if (!(m2 >= 0.0) || !(tail_tol > 0.0))
        throw DomainError("series_certificate: bad m2 or tolerance");
    SeriesCertificate cert;
    if (op.family == OpFamily::Wave) {
        // terms x^n/n! with x = m2 D_t C_mu t^2; exponential tail remainder
        const double x = m2 * d_wave(t) * dalang_integral(k) * t * t;
        double term = 1.0;
        double partial = 0.0;
        for (int n = 1; n <= 10000; ++n) {
            term *= x / n;
            partial += term;
            const double tail = term * (x / (n + 1.0)) * std::exp(x);
            if (tail < tail_tol) {
                cert.n_terms = n;
                cert.partial_sum = partial;
                cert.tail_bound = tail;
                cert.conclusive = true;
                return cert;
            }
        }
        throw Overflow("series_certificate: wave tail failed to close");
    }
    // heat: geometric terms r^n with r = m2 t A_t
    const double r = m2 * t * a_integral(op, k, t);
    if (r < 1.0) {
        int n = 1;
        double term = r, partial = r;
        while (term * r / (1.0 - r) >= tail_tol) {
            term *= r;
            partial += term;
            ++n;
            if (n > 100000)
                throw Overflow("series_certificate: geometric tail stalled");
        }
        cert.n_terms = n;
        cert.partial_sum = partial;
        cert.tail_bound = term * r / (1.0 - r);
        cert.conclusive = true;
        return cert;
    }
    // ratio >= 1: this certificate cannot close the tail
    cert.conclusive = false;
    cert.n_terms = 20;
    double term = 1.0;
    for (int n = 1; n <= cert.n_terms; ++n) {
        term *= r;
        cert.partial_sum += term;
    }
    cert.tail_bound = std::numeric_limits<double>::infinity();
    return cert;
}

std::pair<double, double> first_chaos_identity(const GreenOperator& op,
                                               const ColorationKernel& k,
                                               double t, double m2) {
    if (op.dim != k.dim)
        throw DomainError("first_chaos_identity: dimension mismatch");
    if (!dalang_check(k))
        throw DomainError("first_chaos_identity: Dalang check fails");
    // frequency-first with the closed-form H_t
    const double lhs = m2 * mu_radial_integral(k, [&](double r) {
        const double h = h_transform(op, t, r);
        return h * h;
    });
    // time-first: d/ds |H_s|^2 = 2 FG_s H_s, so
    // |H_t|^2 = 2 int_0^t FG_s(xi) H_s(xi) ds with the spectral integral
    // innermost -- a route through the symbol itself, not its antiderivative
    // squared
    const double rhs =
        m2 * 2.0 *
        quad::integrate(
            [&](double s) {
                return mu_radial_integral(k, [&](double r) {
                    return fourier_g(op, s, r) * h_transform(op, s, r);
                });
            },
            0.0, t, 0.0, 1e-11)
            .value;
    return {lhs, rhs};
}

GaussEquiv gaussian_equivalence(const GreenOperator& op,
                                const ColorationKernel& k, double t, int n,
                                const LevyMeasure& nu, std::size_t samples,
                                std::uint64_t seed, unsigned workers) {
    if (n != 1 && n != 2)
        throw Unsupported("gaussian_equivalence: n in {1, 2} only");
    const double m2 = nu.moment(2.0);
    GaussEquiv out;
    if (n == 1) {
        const double val = mu_radial_integral(k, [&](double r) {
            const double h = h_transform(op, t, r);
            return h * h;
        });
        out.poisson_term = m2 * val;
        out.gaussian_term = m2 * val;
        return out;
    }
    if (!finite_mu_mass(k))
        throw Unsupported("gaussian_equivalence: needs finite spectral mass");
    if (samples < 2)
        throw DomainError("gaussian_equivalence: samples >= 2 required");

    const double mass = mu_total_mass(k);
    const double numass = nu.total_mass();
    const int d = k.dim;
    const double scale = 0.5 * t * t * mass * mass;  // t^2/2! * mass^2

    // shared randomness: the frequency/time part Q is drawn before the jump
    // marks, so both bookkeeping paths see identical Q
    auto draw = [&](RandomStream& rs, bool with_jumps) {
        double t1 = rs.uniform(0.0, t), t2 = rs.uniform(0.0, t);
        if (t2 < t1) std::swap(t1, t2);
        std::vector<double> xi(d), prefix(d, 0.0);
        double prod = 1.0;
        sample_mu(k, rs, xi.data());
        for (int i = 0; i < d; ++i) prefix[i] += xi[i];
        {
            const double s = fourier_g(op, t2 - t1, norm3(prefix.data(), d));
            prod *= s * s;
        }
        sample_mu(k, rs, xi.data());
        for (int i = 0; i < d; ++i) prefix[i] += xi[i];
        {
            const double s = fourier_g(op, t - t2, norm3(prefix.data(), d));
            prod *= s * s;
        }
        const double q = scale * prod;
        if (!with_jumps) return m2 * m2 * q;
        const double z1 = nu.sample_jump(rs);
        const double z2 = nu.sample_jump(rs);
        return numass * numass * z1 * z1 * z2 * z2 * q;
    };

    auto a = run_trials(seed, samples, workers,
                        [&](std::size_t, RandomStream& rs) {
        return draw(rs, true);
    });
    auto b = run_trials(seed, samples, workers,
                        [&](std::size_t, RandomStream& rs) {
        return draw(rs, false);
    });

    const double nn = static_cast<double>(samples);
    out.poisson_term = kahan_sum(a) / nn;
    out.gaussian_term = kahan_sum(b) / nn;
    const double ratio = out.poisson_term / out.gaussian_term;
    double var = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double res = a[i] - ratio * b[i];
        var += res * res;
    }
    var /= (nn - 1.0);
    out.ratio_se = std::sqrt(var / nn) / out.gaussian_term;
    return out;
}

} // namespace levyspde
