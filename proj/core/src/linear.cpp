#include "levyspde/linear.hpp"
#include "levyspde/errors.hpp"
#include "levyspde/prm.hpp"
#include "levyspde/quad.hpp"

#include <cmath>
#include <vector>

namespace levyspde {

double weight_eval(const GreenOperator& op, const ColorationKernel& k,
                   double t, double x, double y) {
    if (op.dim != 1 || k.dim != 1)
        throw Unsupported("weight_eval: d = 1 only");
    if (!dalang_check(k)) throw DomainError("weight_eval: Dalang check fails");
    auto amplitude = [&](double xi) {
        return std::sqrt(spectral_density(k, xi)) * h_transform(op, t, xi);
    };
    return quad::integrate_cosine(amplitude, std::fabs(y - x)) / M_PI;
}

double exact_second_moment(const GreenOperator& op, const ColorationKernel& k,
                           double t, double m2) {
    if (op.dim != k.dim)
        throw DomainError("exact_second_moment: dimension mismatch");
    if (!dalang_check(k))
        throw DivergentIntegral("exact_second_moment: Dalang check fails");
    return m2 * mu_radial_integral(k, [&](double r) {
        const double h = h_transform(op, t, r);
        return h * h;
    });
}

double covariance_linear(const GreenOperator& op, const ColorationKernel& k,
                         double t, double x, double x_prime, double m2) {
    if (x == x_prime) return exact_second_moment(op, k, t, m2);
    if (op.dim != 1 || k.dim != 1)
        throw Unsupported("covariance_linear: x != x' needs d = 1");
    if (!dalang_check(k))
        throw DivergentIntegral("covariance_linear: Dalang check fails");
    const double delta = x - x_prime;
    return m2 * mu_radial_integral(k, [&](double r) {
        const double h = h_transform(op, t, r);
        return std::cos(r * delta) * h * h;
    });
}

namespace {

struct GridWeight {
    double lo, hi, h;
    std::vector<double> w;

    double operator()(double y) const {
        const double pos = (y - lo) / h;
        const auto j = static_cast<std::size_t>(pos);
        if (pos < 0.0 || j + 1 >= w.size()) return 0.0;
        const double frac = pos - static_cast<double>(j);
        return w[j] + frac * (w[j + 1] - w[j]);
    }
};

double trapezoid_sum(const std::vector<double>& v, double h, bool square) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double val = square ? v[j] * v[j] : v[j];
        const double wgt = (j == 0 || j + 1 == v.size()) ? 0.5 : 1.0;
        s += wgt * val;
    }
    return s * h;
}

struct Moment {
    double mean, se;
};

Moment sample_moment(const std::vector<double>& v, int power) {
    std::vector<double> pw(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        pw[i] = std::pow(v[i], power);
    const double n = static_cast<double>(v.size());
    const double mean = kahan_sum(pw) / n;
    double var = 0.0;
    for (double x : pw) var += (x - mean) * (x - mean);
    var /= (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

} // namespace

FieldEstimate simulate_linear(const GreenOperator& op,
                              const ColorationKernel& k, const LevyMeasure& nu,
                              double t, double x, double box_half_width,
                              std::size_t trials, std::uint64_t seed,
                              unsigned workers) {
    if (op.dim != 1 || k.dim != 1)
        throw Unsupported("simulate_linear: d = 1 only");
    if (k.family == KernelFamily::Riesz)
        throw Unsupported("simulate_linear: Riesz weights are too heavy-tailed "
                          "for boxed truncation");
    if (trials < 2) throw DomainError("simulate_linear: trials >= 2 required");

    FieldEstimate est;
    est.t = t;
    est.x = x;
    est.trials = trials;
    if (t == 0.0) return est;  // v identically zero

    // precompute the weight on a y-grid over the sampling box
    GridWeight gw;
    gw.lo = x - box_half_width;
    gw.hi = x + box_half_width;
    const int n = 2048;
    gw.h = (gw.hi - gw.lo) / n;
    gw.w.resize(n + 1);
    for (int j = 0; j <= n; ++j)
        gw.w[j] = weight_eval(op, k, t, x, gw.lo + j * gw.h);

    // truncation validity: the boxed L^2 mass must capture the spectral
    // (Plancherel) value of ||w||_2^2
    const double spectral_l2 = mu_radial_integral(k, [&](double r) {
        const double h = h_transform(op, t, r);
        return h * h;
    });
    const double boxed_l2 = trapezoid_sum(gw.w, gw.h, true);
    if (std::fabs(spectral_l2 - boxed_l2) > 1e-4 * spectral_l2)
        throw TruncationError("simulate_linear: tail mass outside the box "
                              "exceeds 1e-4 of ||w||^2");

    const double w_integral = trapezoid_sum(gw.w, gw.h, false);
    const double nu_mean = nu.mean();
    const Box1D box{gw.lo, gw.hi};

    auto v = run_trials(seed, trials, workers,
                        [&](std::size_t, RandomStream& rs) {
        const PRMSample s = sample_prm(box, nu, rs);
        double acc = 0.0;
        for (std::size_t i = 0; i < s.xs.size(); ++i)
            acc += s.zs[i] * gw(s.xs[i]);
        return acc - nu_mean * w_integral;
    });

    const Moment m1 = sample_moment(v, 1);
    const Moment m2 = sample_moment(v, 2);
    const Moment m4 = sample_moment(v, 4);
    est.mean = m1.mean;
    est.mean_se = m1.se;
    est.second = m2.mean;
    est.second_se = m2.se;
    est.p4_norm = std::pow(m4.mean, 0.25);
    est.p4_norm_se = (m4.mean > 0.0)
                         ? 0.25 * std::pow(m4.mean, -0.75) * m4.se
                         : 0.0;
    return est;
}

namespace {

struct PowTerm {
    double coef;
    double pow;  // J_q(s)^{1/2} <= coef * s^pow
};

// ||G_s||_{L^q} = coef * s^pow in closed form
PowTerm lq_power(const GreenOperator& op, double q) {
    const double d = op.dim;
    if (op.family == OpFamily::Heat) {
        const double cq =
            std::pow(2.0 * M_PI, -0.5 * d * (q - 1.0)) * std::pow(q, -0.5 * d);
        return {std::pow(cq, 1.0 / q), 0.5 * d * (1.0 / q - 1.0)};
    }
    switch (op.dim) {
        case 1:
            return {0.5 * std::pow(2.0, 1.0 / q), 1.0 / q};
        case 2:
            if (q >= 2.0)
                throw Unsupported("lq_power: wave d = 2 with q >= 2");
            return {std::pow(std::pow(2.0 * M_PI, 1.0 - q) / (2.0 - q),
                             1.0 / q),
                    (2.0 - q) / q};
        default:
            throw Unsupported("lq_power: wave d >= 3");
    }
}

double gaussian_lp_norm(double a, int dim, double p) {
    const double d = dim;
    return std::exp((-0.5 * d * (p - 1.0) * std::log(2.0 * M_PI * a) -
                     0.5 * d * std::log(p)) /
                    p);
}

PowTerm jp_sqrt_majorant(const GreenOperator& op, const ColorationKernel& k,
                         double q) {
    const double d = op.dim;
    switch (k.family) {
        case KernelFamily::Heat:
            if (op.family == OpFamily::Heat) {
                // J_q(s) = ||H_{d, s + alpha/2}||_q^2 <= value at s = 0
                return {gaussian_lp_norm(0.5 * k.alpha, op.dim, q), 0.0};
            }
            // wave: sin^2(s|xi|)/|xi|^2 <= s^2, so
            // J_q(s) <= s^2 int e^{-alpha |xi|^2/2} dxi = s^2 (2pi/alpha)^{d/2}
            return {std::pow(2.0 * M_PI / k.alpha, 0.25 * d), 1.0};
        case KernelFamily::Riesz: {
            if (!(q > 2.0 * d / (2.0 * d - k.alpha)))
                throw Unsupported("envelope: need q > 2d/(2d - alpha)");
            return lq_power(op, 1.0 / (1.0 / q + k.alpha / (2.0 * d)));
        }
        case KernelFamily::Bessel:
            return lq_power(op, q);
    }
    throw DomainError("jp_sqrt_majorant: unknown kernel family");
}

double envelope_cp(double b_p, double p, const LevyMeasure& nu) {
    return b_p * std::max(std::sqrt(nu.moment(2.0)),
                          std::pow(nu.moment(p), 1.0 / p));
}

void check_admissible(const GreenOperator& op, const ColorationKernel& k,
                      double p) {
    if (!(p >= 2.0)) throw DomainError("envelope: p >= 2 required");
    const AdmissibleP ap = admissible_p_range(op, k);
    if (!ap.all && !(p < ap.p_max))
        throw Unsupported("envelope: p outside the admissible range");
}

} // namespace

double p_moment_envelope(const GreenOperator& op, const ColorationKernel& k,
                         double t, double p, double b_p,
                         const LevyMeasure& nu) {
    check_admissible(op, k, p);
    const double cp = envelope_cp(b_p, p, nu);
    double sum = 0.0;
    for (double q : {2.0, p}) {
        const PowTerm tm = jp_sqrt_majorant(op, k, q);
        if (!(tm.pow > -1.0))
            throw Unsupported("envelope: time integral diverges");
        sum += tm.coef * std::pow(t, tm.pow + 1.0) / (tm.pow + 1.0);
    }
    return cp * sum;
}

double alt_p_moment_envelope(const GreenOperator& op,
                             const ColorationKernel& k, double t, double p,
                             double b_p, const LevyMeasure& nu) {
    check_admissible(op, k, p);
    const double cp = envelope_cp(b_p, p, nu);
    double sum = 0.0;
    for (double q : {2.0, p}) {
        const PowTerm tm = jp_sqrt_majorant(op, k, q);
        const double pw = p * tm.pow;
        if (!(pw > -1.0))
            throw Unsupported("alt envelope: stronger admissibility fails");
        sum += std::pow(tm.coef, p) * std::pow(t, pw + 1.0) / (pw + 1.0);
    }
    return std::pow(std::pow(t, p - 1.0) * std::pow(cp, p) * sum, 1.0 / p);
}

} // namespace levyspde
