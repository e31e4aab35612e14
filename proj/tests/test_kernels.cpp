#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <levyspde/errors.hpp>
#include <levyspde/kernels.hpp>
#include <levyspde/quad.hpp>

#include <cmath>
#include <vector>

using namespace levyspde;

TEST_CASE("spectral density closed forms") {
    CHECK(spectral_density(ColorationKernel::heat(1.0, 1), 0.0) == 1.0);
    CHECK(spectral_density(ColorationKernel::bessel(2.0, 2), 1.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(spectral_density(ColorationKernel::riesz(1.0, 2), 4.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(spectral_density(ColorationKernel::riesz(0.5, 1), 0.0),
                    DomainError);
}

TEST_CASE("spectral density is radially non-increasing") {
    const std::vector<ColorationKernel> ks = {
        ColorationKernel::heat(1.0, 2), ColorationKernel::riesz(1.5, 3),
        ColorationKernel::bessel(0.7, 1)};
    for (const auto& k : ks) {
        double prev = spectral_density(k, 1e-3);
        for (double lr = -2.5; lr <= 3.0; lr += 0.1) {
            const double cur = spectral_density(k, std::pow(10.0, lr));
            CHECK(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("kappa spatial values at reference points") {
    // heat family at alpha = 2: Gaussian with unit variance parameter
    CHECK(kappa_eval(ColorationKernel::heat(2.0, 1), 0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
    // riesz family, d = 3, alpha = 2: kappa has index alpha/2 = 1, so the
    // constant is Gamma(1) / (2 pi^{3/2} Gamma(1/2)) = 1/(2 pi^2) at |x| = 1
    CHECK(kappa_eval(ColorationKernel::riesz(2.0, 3), 1.0) ==
          doctest::Approx(1.0 / (2.0 * M_PI * M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(kappa_eval(ColorationKernel::riesz(0.5, 1), 0.0),
                    DomainError);
}

TEST_CASE("bessel kappa matches a fixed 1e4-point trapezoid of its "
          "w-integral") {
    const auto k = ColorationKernel::bessel(3.0, 1);
    const double a = 1.5;  // kappa index alpha/2
    for (double r : {0.25, 1.0, 2.0}) {
        // substitute w = u/(1-u) to put the half-line on a fixed grid
        auto f = [&](double u) {
            const double w = u / (1.0 - u);
            const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
            return std::pow(w, 0.5 * a - 1.0) * std::exp(-w) *
                   std::pow(4.0 * M_PI * w, -0.5) *
                   std::exp(-r * r / (4.0 * w)) * jac;
        };
        const double oracle =
            quad::trapezoid(f, 1e-9, 1.0 - 1e-9, 10000) / std::tgamma(0.5 * a);
        CHECK(kappa_eval(k, r) == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("heat-family self-convolution on a grid reproduces the wider "
          "Gaussian") {
    // kappa has index alpha/2 = 1, so kappa * kappa has index alpha = 2
    const auto k = ColorationKernel::heat(2.0, 1);
    const double alpha = 2.0;
    const double L = 12.0, h = 0.005;
    const int n = static_cast<int>(2.0 * L / h);
    std::vector<double> kv(n + 1);
    for (int j = 0; j <= n; ++j) kv[j] = kappa_eval(k, std::fabs(-L + j * h));
    for (double x : {0.0, 0.5, 1.5}) {
        double conv = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double y = -L + j * h;
            conv += kv[j] * kappa_eval(k, std::fabs(x - y)) * h;
        }
        const double closed = std::pow(2.0 * M_PI * alpha, -0.5) *
                              std::exp(-x * x / (2.0 * alpha));
        CHECK(conv == doctest::Approx(closed).epsilon(1e-6));
    }
}

TEST_CASE("dalang check per family") {
    CHECK(dalang_check(ColorationKernel::riesz(2.5, 3)));
    CHECK_FALSE(dalang_check(ColorationKernel::riesz(0.5, 3)));
    CHECK(dalang_check(ColorationKernel::bessel(0.5, 1)));
    CHECK(dalang_check(ColorationKernel::heat(0.1, 3)));
    CHECK_FALSE(dalang_check(ColorationKernel::bessel(0.9, 3)));
}

TEST_CASE("dalang integral, heat d=1, against a brute-force trapezoid") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto k = ColorationKernel::heat(alpha, 1);
        auto f = [&](double r) {
            return std::exp(-0.5 * alpha * r * r) / (1.0 + r * r);
        };
        const double oracle =
            quad::trapezoid(f, -50.0, 50.0, 1000000) / (2.0 * M_PI);
        CHECK(dalang_integral(k) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("dalang integral divergence handling") {
    CHECK(dalang_integral(ColorationKernel::riesz(2.5, 3)) > 0.0);
    CHECK_THROWS_AS(dalang_integral(ColorationKernel::riesz(1.0, 3)),
                    DivergentIntegral);
    CHECK_THROWS_AS(dalang_integral(ColorationKernel::riesz(1.0, 3), true),
                    DivergentIntegral);
}

TEST_CASE("cutoff stability verdict matches the analytic check on a sweep") {
    std::vector<ColorationKernel> ks;
    for (double a : {0.3, 0.7}) ks.push_back(ColorationKernel::riesz(a, 1));
    for (double a : {0.5, 1.5}) ks.push_back(ColorationKernel::riesz(a, 2));
    for (double a : {0.75, 1.25, 2.5}) ks.push_back(ColorationKernel::riesz(a, 3));
    for (double a : {0.5, 1.5}) ks.push_back(ColorationKernel::bessel(a, 1));
    for (double a : {0.25, 1.0}) ks.push_back(ColorationKernel::bessel(a, 2));
    for (double a : {0.75, 1.25}) ks.push_back(ColorationKernel::bessel(a, 3));
    for (double a : {0.5, 1.0}) {
        for (int d : {1, 2, 3}) ks.push_back(ColorationKernel::heat(a, d));
    }
    for (const auto& k : ks) {
        CAPTURE(static_cast<int>(k.family));
        CAPTURE(k.alpha);
        CAPTURE(k.dim);
        CHECK(cutoff_stable(k) == dalang_check(k));
    }
}

TEST_CASE("inner0 matches the spatial double-integral oracle") {
    const auto k = ColorationKernel::heat(2.0, 1);
    auto phi = [](double x) { return std::exp(-2.0 * x * x); };
    const double got = inner0(phi, phi, k, 8.0, 256);

    // oracle: iint phi(x) phi(y) f(x - y) dx dy with f the alpha = 2 Gaussian
    auto f = [](double r) {
        return std::pow(4.0 * M_PI, -0.5) * std::exp(-r * r / 4.0);
    };
    const double L = 4.0;
    const int n = 400;
    const double h = 2.0 * L / n;
    double oracle = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = -L + i * h;
        const double wi = (i == 0 || i == n) ? 0.5 : 1.0;
        for (int j = 0; j <= n; ++j) {
            const double y = -L + j * h;
            const double wj = (j == 0 || j == n) ? 0.5 : 1.0;
            oracle += wi * wj * phi(x) * phi(y) * f(x - y);
        }
    }
    oracle *= h * h;
    CHECK(got == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("inner0 basic bilinear-form properties") {
    const auto k = ColorationKernel::bessel(1.0, 1);
    auto zero = [](double) { return 0.0; };
    CHECK(inner0(zero, zero, k, 6.0, 128) == 0.0);

    auto phi = [](double x) { return std::exp(-x * x) * (1.0 + 0.3 * x); };
    auto psi = [](double x) { return std::exp(-0.5 * (x - 0.4) * (x - 0.4)); };
    const double pq = inner0(phi, psi, k, 10.0, 256);
    const double qp = inner0(psi, phi, k, 10.0, 256);
    CHECK(pq == doctest::Approx(qp).epsilon(1e-12));
    CHECK(inner0(phi, phi, k, 10.0, 256) >= 0.0);
    CHECK(inner0(psi, psi, k, 10.0, 256) >= 0.0);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(ColorationKernel::riesz(1.5, 1), DomainError);
    CHECK_THROWS_AS(ColorationKernel::riesz(-0.5, 2), DomainError);
    CHECK_THROWS_AS(ColorationKernel::heat(0.0, 1), DomainError);
}
