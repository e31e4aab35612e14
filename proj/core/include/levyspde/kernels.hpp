#pragma once

#include "levyspde/quad.hpp"

#include <functional>
#include <span>

namespace levyspde {

enum class KernelFamily { Heat, Riesz, Bessel };

/// Coloration kernel kappa at index alpha/2, so that the squared Fourier
/// transform |F kappa|^2 is:
///   Heat:   exp(-alpha |xi|^2 / 2)
///   Riesz:  |xi|^(-alpha)          (requires 0 < alpha < d)
///   Bessel: (1 + |xi|^2)^(-alpha/2)
struct ColorationKernel {
    KernelFamily family;
    double alpha;
    int dim;

    static ColorationKernel heat(double alpha, int dim);
    static ColorationKernel riesz(double alpha, int dim);
    static ColorationKernel bessel(double alpha, int dim);
};

/// Surface area of the unit sphere in R^d: omega_d = 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int dim);

/// Radial profile of the spectral density g(xi) = |F kappa(xi)|^2.
double spectral_density(const ColorationKernel& k, double r);
double spectral_density(const ColorationKernel& k, std::span<const double> xi);

/// Spatial evaluation of kappa itself (radial).  Bessel goes through the
/// one-dimensional w-integral representation, relative tolerance 1e-10.
double kappa_eval(const ColorationKernel& k, double r);
double kappa_eval(const ColorationKernel& k, std::span<const double> x);

/// Dalang condition (D): int (1+|xi|^2)^{-1} mu(dxi) < infinity, decided
/// analytically per family.
bool dalang_check(const ColorationKernel& k);

/// int F(|xi|) mu(dxi) = (2pi)^{-d} omega_d int_0^rmax r^{d-1} F(r) g(r) dr.
/// The Riesz r -> 0 singularity is absorbed by the substitution
/// r = u^{1/(d-alpha)} on [0,1].
double mu_radial_integral(const ColorationKernel& k,
                          const std::function<double(double)>& F,
                          double r_max = -1.0);

/// Operational divergence probe for the Dalang integral: cutoff-increment
/// stability between R, 2R, 4R beyond R = 1e3.
bool cutoff_stable(const ColorationKernel& k);

/// C_mu = int (1+|xi|^2)^{-1} mu(dxi).  Throws DivergentIntegral if (D)
/// fails (immediately, or through the cutoff probe when force = true).
double dalang_integral(const ColorationKernel& k, bool force = false);

/// Total mass mu(R^d); throws Unsupported when infinite (Riesz always;
/// Bessel with alpha <= d).
double mu_total_mass(const ColorationKernel& k);

/// Base inner product <phi, psi>_0 = int Fphi conj(Fpsi) dmu for d = 1 grid
/// functions: phi, psi sampled on a uniform grid over [-L, L] with n+1
/// points, transforms evaluated by direct summation, xi-quadrature cut at
/// the Nyquist frequency.  Throws GridTooCoarse if doubling the resolution
/// moves the value by more than 1e-4 relative.
double inner0(const std::function<double(double)>& phi,
              const std::function<double(double)>& psi,
              const ColorationKernel& k, double half_width, int n);

} // namespace levyspde
