#include "levyspde/prm.hpp"
#include "levyspde/errors.hpp"
#include "levyspde/quad.hpp"

#include <algorithm>
#include <cmath>

namespace levyspde {

PRMSample sample_prm(const Box1D& box, const LevyMeasure& nu,
                     RandomStream& rng) {
    if (!(box.length() > 0.0)) throw DomainError("sample_prm: empty box");
    PRMSample s;
    s.box = box;
    s.intensity_mass = box.length() * nu.total_mass();
    s.nu_mean = nu.mean();
    const std::uint64_t count = rng.poisson(s.intensity_mass);
    s.xs.reserve(count);
    s.zs.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        s.xs.push_back(rng.uniform(box.lo, box.hi));
        s.zs.push_back(nu.sample_jump(rng));
    }
    return s;
}

namespace {

double box_integral(const std::function<double(double)>& phi,
                    const Box1D& box) {
    return quad::integrate(phi, box.lo, box.hi, 1e-12, 1e-10).value;
}

void check_support(const std::function<double(double)>& phi,
                   const Box1D& box) {
    auto abs_phi = [&](double x) { return std::fabs(phi(x)); };
    const double inside =
        quad::integrate(abs_phi, box.lo, box.hi, 1e-13, 1e-9).value;
    const double outside =
        quad::integrate_half_line(abs_phi, box.hi, 1e-13, 1e-8).value +
        quad::integrate_half_line([&](double x) { return abs_phi(-x); },
                                  -box.lo, 1e-13, 1e-8)
            .value;
    if (outside > 1e-9 * std::max(inside, 1e-300))
        throw SupportError("l_integral: phi has mass outside the box");
}

} // namespace

double l_integral(const std::function<double(double)>& phi,
                  const PRMSample& sample) {
    check_support(phi, sample.box);
    double s = 0.0, c = 0.0;  // Kahan over the atoms
    for (std::size_t i = 0; i < sample.xs.size(); ++i) {
        const double term = phi(sample.xs[i]) * sample.zs[i];
        const double y = term - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    if (sample.nu_mean != 0.0)
        s -= sample.nu_mean * box_integral(phi, sample.box);
    return s;
}

std::complex<double> char_function(const std::function<double(double)>& phi,
                                   const Box1D& box, const LevyMeasure& nu,
                                   double theta) {
    // inner z-integral of e^{i a z} - 1 - i a z at a = theta phi(x)
    auto inner = [&](double a) -> std::complex<double> {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& atom : nu.atoms()) {
            const double az = a * atom.z;
            acc += atom.w * std::complex<double>{std::cos(az) - 1.0,
                                                 std::sin(az) - az};
        }
        return acc;
    };

    std::complex<double> exponent{0.0, 0.0};
    if (nu.is_discrete()) {
        const double re = quad::integrate(
            [&](double x) { return inner(theta * phi(x)).real(); }, box.lo,
            box.hi, 1e-12, 1e-10).value;
        const double im = quad::integrate(
            [&](double x) { return inner(theta * phi(x)).imag(); }, box.lo,
            box.hi, 1e-12, 1e-10).value;
        exponent = {re, im};
    } else {
        // density variant: two nested quadratures over the support branches
        auto inner_density = [&](double a, bool real_part) {
            auto f = [&](double z) {
                const double az = a * z;
                const double val = real_part ? (std::cos(az) - 1.0)
                                             : (std::sin(az) - az);
                return val * nu.density_at(z);
            };
            return quad::integrate(f, -nu.support_max(), -nu.support_min(),
                                   1e-12, 1e-9).value +
                   quad::integrate(f, nu.support_min(), nu.support_max(),
                                   1e-12, 1e-9).value;
        };
        const double re = quad::integrate(
            [&](double x) { return inner_density(theta * phi(x), true); },
            box.lo, box.hi, 1e-11, 1e-8).value;
        const double im = quad::integrate(
            [&](double x) { return inner_density(theta * phi(x), false); },
            box.lo, box.hi, 1e-11, 1e-8).value;
        exponent = {re, im};
    }
    return std::exp(exponent);
}

double phi_lq_norm(const std::function<double(double)>& phi, const Box1D& box,
                   double q) {
    const double pow_int = quad::integrate(
        [&](double x) { return std::pow(std::fabs(phi(x)), q); }, box.lo,
        box.hi, 1e-13, 1e-10).value;
    return std::pow(pow_int, 1.0 / q);
}

PNormEstimate l_p_norm_mc(const std::function<double(double)>& phi,
                          const Box1D& box, const LevyMeasure& nu, double p,
                          std::size_t trials, std::uint64_t seed,
                          unsigned workers) {
    if (trials < 2) throw DomainError("l_p_norm_mc: trials >= 2 required");
    check_support(phi, box);
    const double compensator =
        (nu.mean() != 0.0) ? nu.mean() * box_integral(phi, box) : 0.0;

    auto draws = run_trials(seed, trials, workers,
                            [&](std::size_t, RandomStream& rs) {
        const PRMSample s = sample_prm(box, nu, rs);
        double acc = 0.0;
        for (std::size_t i = 0; i < s.xs.size(); ++i)
            acc += phi(s.xs[i]) * s.zs[i];
        return std::pow(std::fabs(acc - compensator), p);
    });

    const double n = static_cast<double>(trials);
    const double total = kahan_sum(draws);
    const double mean = total / n;
    PNormEstimate out;
    out.value = std::pow(mean, 1.0 / p);

    // jackknife over leave-one-out p-norms
    double jk_mean = 0.0;
    std::vector<double> jk(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        jk[i] = std::pow(std::max((total - draws[i]) / (n - 1.0), 0.0),
                         1.0 / p);
        jk_mean += jk[i] / n;
    }
    double var = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const double dlt = jk[i] - jk_mean;
        var += dlt * dlt;
    }
    out.se = std::sqrt((n - 1.0) / n * var);

    std::vector<double> sorted = draws;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t top = std::max<std::size_t>(1, trials / 100);
    double top_sum = 0.0;
    for (std::size_t i = trials - top; i < trials; ++i) top_sum += sorted[i];
    out.heavy_tail = (total > 0.0 && top_sum > 0.5 * total);
    return out;
}

double rosenthal_ratio(const std::function<double(double)>& phi,
                       const Box1D& box, const LevyMeasure& nu, double p,
                       std::size_t trials, std::uint64_t seed,
                       unsigned workers) {
    const PNormEstimate est =
        l_p_norm_mc(phi, box, nu, p, trials, seed, workers);
    const double denom = std::sqrt(nu.moment(2.0)) * phi_lq_norm(phi, box, 2.0) +
                         std::pow(nu.moment(p), 1.0 / p) *
                             phi_lq_norm(phi, box, p);
    return est.value / denom;
}

std::vector<TestBump> rosenthal_family() {
    std::vector<TestBump> fam;
    const double scales[3] = {0.5, 1.0, 2.0};
    for (double s : scales) {
        fam.push_back({"indicator_" + std::to_string(s),
                       {-s - 1.0, s + 1.0},
                       [s](double x) { return (std::fabs(x) <= s) ? 1.0 : 0.0; }});
        fam.push_back({"gauss_" + std::to_string(s),
                       {-8.0 * s, 8.0 * s},
                       [s](double x) {
                           return std::exp(-x * x / (2.0 * s * s));
                       }});
        fam.push_back({"osc_" + std::to_string(s),
                       {-8.0 * s, 8.0 * s},
                       [s](double x) {
                           return std::cos(3.0 * x / s) *
                                  std::exp(-x * x / (2.0 * s * s));
                       }});
    }
    return fam;
}

} // namespace levyspde
