#include "levyspde/measure.hpp"
#include "levyspde/errors.hpp"
#include "levyspde/quad.hpp"

#include <algorithm>
#include <cmath>

namespace levyspde {

LevyMeasure LevyMeasure::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("LevyMeasure: no atoms");
    LevyMeasure m;
    double mass = 0.0, mean = 0.0;
    for (const auto& a : atoms) {
        if (a.z == 0.0) throw DomainError("LevyMeasure: atom at z = 0");
        if (a.w <= 0.0) throw DomainError("LevyMeasure: non-positive weight");
        mass += a.w;
        mean += a.w * a.z;
    }
    m.atoms_ = std::move(atoms);
    m.total_mass_ = mass;
    m.mean_ = mean;
    m.cum_.reserve(m.atoms_.size());
    double c = 0.0;
    for (const auto& a : m.atoms_) {
        c += a.w;
        m.cum_.push_back(c / mass);
    }
    m.cum_.back() = 1.0;
    return m;
}

LevyMeasure LevyMeasure::from_density(std::function<double(double)> rho,
                                      double eps, double big_m) {
    if (!(eps > 0.0) || !(big_m > eps))
        throw DomainError("LevyMeasure: need 0 < eps < M");
    LevyMeasure m;
    m.density_ = std::move(rho);
    m.eps_ = eps;
    m.big_m_ = big_m;

    auto neg = quad::integrate([&](double z) { return m.density_(z); },
                               -big_m, -eps, 1e-12, 1e-10);
    auto pos = quad::integrate([&](double z) { return m.density_(z); },
                               eps, big_m, 1e-12, 1e-10);
    m.total_mass_ = neg.value + pos.value;
    if (!(m.total_mass_ > 0.0))
        throw DomainError("LevyMeasure: density has zero mass");
    m.mean_ = quad::integrate([&](double z) { return z * m.density_(z); },
                              -big_m, -eps, 1e-12, 1e-10).value +
              quad::integrate([&](double z) { return z * m.density_(z); },
                              eps, big_m, 1e-12, 1e-10).value;

    // inverse-CDF table over both support branches, on a fine grid
    const int n = 4096;
    std::vector<double> zs, cdf;
    zs.reserve(2 * n + 2);
    cdf.reserve(2 * n + 2);
    double acc = 0.0;
    auto accumulate = [&](double lo, double hi) {
        const double h = (hi - lo) / n;
        for (int i = 0; i < n; ++i) {
            const double a = lo + i * h, b = a + h;
            double err;
            acc += quad::gk15([&](double z) { return m.density_(z); }, a, b, err);
            zs.push_back(b);
            cdf.push_back(acc);
        }
    };
    zs.push_back(-big_m);
    cdf.push_back(0.0);
    accumulate(-big_m, -eps);
    accumulate(eps, big_m);
    for (auto& c : cdf) c /= acc;
    cdf.back() = 1.0;

    // resample to a uniform-in-probability table
    const int k = 4096;
    m.inv_cdf_z_.resize(k + 1);
    std::size_t j = 0;
    for (int i = 0; i <= k; ++i) {
        const double u = static_cast<double>(i) / k;
        while (j + 1 < cdf.size() && cdf[j + 1] < u) ++j;
        if (j + 1 >= cdf.size()) {
            m.inv_cdf_z_[i] = zs.back();
            continue;
        }
        const double c0 = cdf[j], c1 = cdf[j + 1];
        const double t = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
        double z = zs[j] + t * (zs[j + 1] - zs[j]);
        // never land inside the excluded band (-eps, eps)
        if (std::fabs(z) < eps) z = (z >= 0.0) ? eps : -eps;
        m.inv_cdf_z_[i] = z;
    }

    if (!std::isfinite(m.moment(2.0)))
        throw Overflow("LevyMeasure: m_2 not finite");
    return m;
}

double LevyMeasure::moment(double p) const {
    if (!(p > 0.0)) throw DomainError("moment: need p > 0");
    if (is_discrete()) {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.w * std::pow(std::fabs(a.z), p);
        if (!std::isfinite(s)) throw Overflow("moment: m_p overflow");
        return s;
    }
    auto f = [&](double z) { return std::pow(std::fabs(z), p) * density_(z); };
    const double v = quad::integrate(f, -big_m_, -eps_, 1e-12, 1e-10).value +
                     quad::integrate(f, eps_, big_m_, 1e-12, 1e-10).value;
    if (!std::isfinite(v)) throw Overflow("moment: m_p overflow");
    return v;
}

double LevyMeasure::sample_jump(RandomStream& rng) const {
    const double u = rng.uniform();
    if (is_discrete()) {
        const auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
        const std::size_t i =
            std::min<std::size_t>(it - cum_.begin(), atoms_.size() - 1);
        return atoms_[i].z;
    }
    const double pos = u * (inv_cdf_z_.size() - 1);
    const std::size_t i = std::min<std::size_t>(
        static_cast<std::size_t>(pos), inv_cdf_z_.size() - 2);
    const double t = pos - static_cast<double>(i);
    double z = inv_cdf_z_[i] + t * (inv_cdf_z_[i + 1] - inv_cdf_z_[i]);
    if (std::fabs(z) < eps_) z = (z >= 0.0) ? eps_ : -eps_;
    return z;
}

LevyMeasure symmetric_two_point(double z) {
    return LevyMeasure::from_atoms({{-z, 0.5}, {z, 0.5}});
}

} // namespace levyspde
