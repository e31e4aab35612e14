#pragma once

#include "levyspde/measure.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace levyspde {

/// Spatial window for compound-Poisson sampling (d = 1).
struct Box1D {
    double lo;
    double hi;
    double length() const { return hi - lo; }
};

/// One realization of the Poisson random measure N restricted to box x R_0:
/// atom locations x_i (uniform on the box) with jump marks z_i (law nu
/// normalized), count Poisson with mean |B| nu(R_0).
struct PRMSample {
    Box1D box;
    std::vector<double> xs;
    std::vector<double> zs;
    double intensity_mass = 0.0;  // |B| * nu(R_0)
    double nu_mean = 0.0;         // int z nu(dz), for compensation
};

PRMSample sample_prm(const Box1D& box, const LevyMeasure& nu,
                     RandomStream& rng);

/// Compensated integral L(phi) = sum_i phi(x_i) z_i - nu_mean int_B phi.
/// phi must live on the box: mass outside beyond 1e-9 relative raises
/// SupportError.
double l_integral(const std::function<double(double)>& phi,
                  const PRMSample& sample);

/// Characteristic function E exp(i theta L(phi)) =
/// exp{ int_B int (e^{i theta phi(x) z} - 1 - i theta phi(x) z) nu(dz) dx }.
std::complex<double> char_function(const std::function<double(double)>& phi,
                                   const Box1D& box, const LevyMeasure& nu,
                                   double theta);

/// Monte Carlo estimate of ||L(phi)||_p with a jackknife standard error;
/// heavy_tail flags runs where the top 1% of trials carries more than half
/// of the p-th moment sum.
struct PNormEstimate {
    double value = 0.0;
    double se = 0.0;
    bool heavy_tail = false;
};

PNormEstimate l_p_norm_mc(const std::function<double(double)>& phi,
                          const Box1D& box, const LevyMeasure& nu, double p,
                          std::size_t trials, std::uint64_t seed,
                          unsigned workers);

/// ||L(phi)||_p (MC) divided by m_2^{1/2}||phi||_2 + m_p^{1/p}||phi||_p.
/// The sup of this ratio over a test family is the empirical constant B_p.
double rosenthal_ratio(const std::function<double(double)>& phi,
                       const Box1D& box, const LevyMeasure& nu, double p,
                       std::size_t trials, std::uint64_t seed,
                       unsigned workers);

/// The documented test family for the Rosenthal sweep: indicators, Gaussian
/// bumps, and oscillating bumps at three scales each.
struct TestBump {
    std::string name;
    Box1D box;
    std::function<double(double)> f;
};

std::vector<TestBump> rosenthal_family();

/// L^q norm of phi over the box by adaptive quadrature.
double phi_lq_norm(const std::function<double(double)>& phi, const Box1D& box,
                   double q);

} // namespace levyspde
