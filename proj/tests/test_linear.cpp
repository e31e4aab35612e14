#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <levyspde/errors.hpp>
#include <levyspde/linear.hpp>
#include <levyspde/prm.hpp>
#include <levyspde/quad.hpp>

#include <cmath>
#include <vector>

using namespace levyspde;

TEST_CASE("weight for heat flow with heat coloration matches the "
          "time-quadrature oracle") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    const double t = 1.0, x = 0.3;
    for (double y : {0.3, 1.0, 2.5}) {
        // G_{t-s} * kappa is the Gaussian with parameter (t - s) + alpha/2
        auto f = [&](double s) {
            const double a = (t - s) + 0.5;
            const double r = x - y;
            return std::pow(2.0 * M_PI * a, -0.5) *
                   std::exp(-r * r / (2.0 * a));
        };
        const double oracle = quad::simpson(f, 0.0, t, 20000);
        CHECK(weight_eval(op, k, t, x, y) ==
              doctest::Approx(oracle).epsilon(1e-7));
    }
}

TEST_CASE("weight symmetry and decay") {
    const auto op = GreenOperator::wave(1);
    const auto k = ColorationKernel::bessel(2.0, 1);
    const double t = 1.0, x = 0.5;
    for (double r : {0.4, 1.1, 2.0}) {
        CHECK(weight_eval(op, k, t, x, x + r) ==
              doctest::Approx(weight_eval(op, k, t, x, x - r))
                  .epsilon(1e-10));
    }
    const double near = std::fabs(weight_eval(op, k, t, x, x));
    CHECK(std::fabs(weight_eval(op, k, t, x, x + 25.0)) < 1e-4 * near);
}

TEST_CASE("boxed grid energy of the weight matches the spectral value") {
    const auto kh = ColorationKernel::heat(1.0, 1);
    const auto kb = ColorationKernel::bessel(2.0, 1);
    struct Case {
        GreenOperator op;
        ColorationKernel k;
    };
    const Case cases[] = {{GreenOperator::heat(1), kh},
                          {GreenOperator::heat(1), kb},
                          {GreenOperator::wave(1), kh},
                          {GreenOperator::wave(1), kb}};
    const double t = 1.0, L = 15.0;
    const int n = 600;
    for (const auto& c : cases) {
        const double h = 2.0 * L / n;
        double boxed = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double w = weight_eval(c.op, c.k, t, 0.0, -L + j * h);
            boxed += ((j == 0 || j == n) ? 0.5 : 1.0) * w * w * h;
        }
        const double spectral = mu_radial_integral(c.k, [&](double r) {
            const double hh = h_transform(c.op, t, r);
            return hh * hh;
        });
        CHECK(boxed == doctest::Approx(spectral).epsilon(2e-4));
    }
}

TEST_CASE("simulated field moments agree with the spectral second moment") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    const auto nu = symmetric_two_point(1.0);
    const FieldEstimate est = simulate_linear(op, k, nu, 1.0, 0.0, 14.0,
                                              30000, 31, 1);
    CHECK(est.trials == 30000);
    CHECK(std::fabs(est.mean) <= 3.0 * est.mean_se);
    const double exact = exact_second_moment(op, k, 1.0, 1.0);
    CHECK(std::fabs(est.second - exact) <= 3.5 * est.second_se);
    CHECK(est.p4_norm > 0.0);
}

TEST_CASE("simulation guards: zero time, Riesz exclusion, truncation") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    const auto nu = symmetric_two_point(1.0);
    const FieldEstimate zero = simulate_linear(op, k, nu, 0.0, 0.0, 10.0,
                                               100, 31, 1);
    CHECK(zero.second == 0.0);
    CHECK(zero.p4_norm == 0.0);
    CHECK_THROWS_AS(simulate_linear(op, ColorationKernel::riesz(0.5, 1), nu,
                                    1.0, 0.0, 10.0, 100, 31, 1),
                    Unsupported);
    // a box far too small for the diffusive spread must be rejected
    CHECK_THROWS_AS(simulate_linear(op, k, nu, 1.0, 0.0, 1.0, 100, 31, 1),
                    TruncationError);
}

TEST_CASE("stationarity: moments at two spatial points agree") {
    const auto op = GreenOperator::wave(1);
    const auto k = ColorationKernel::bessel(2.0, 1);
    const auto nu = symmetric_two_point(1.0);
    const FieldEstimate a = simulate_linear(op, k, nu, 1.0, 0.0, 15.0,
                                            30000, 33, 1);
    const FieldEstimate b = simulate_linear(op, k, nu, 1.0, 1.7, 15.0,
                                            30000, 34, 1);
    const double joint2 = std::hypot(a.second_se, b.second_se);
    CHECK(std::fabs(a.second - b.second) <= 3.0 * joint2);
    const double joint4 = std::hypot(a.p4_norm_se, b.p4_norm_se);
    CHECK(std::fabs(a.p4_norm - b.p4_norm) <= 3.0 * joint4);
}

TEST_CASE("exact second moment: monotonicity and short-time quadratic "
          "scaling") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    double prev = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        const double v = exact_second_moment(op, k, t, 1.0);
        CHECK(v > prev);
        prev = v;
    }
    for (double t : {1e-3, 1e-4}) {
        const double ratio = exact_second_moment(op, k, 2.0 * t, 1.0) /
                             exact_second_moment(op, k, t, 1.0);
        CHECK(ratio == doctest::Approx(4.0).epsilon(2e-3));
    }
}

TEST_CASE("wave second moment obeys the split bound on |H_t|") {
    const auto op = GreenOperator::wave(2);
    const auto k = ColorationKernel::heat(1.0, 2);
    for (double t : {0.5, 1.0, 2.0}) {
        const double val = exact_second_moment(op, k, t, 1.0);
        // |H_t(xi)| <= min(t^2/2, 2/|xi|^2)
        const double bound = mu_radial_integral(k, [&](double r) {
            const double m = std::min(0.5 * t * t, 2.0 / (r * r));
            return m * m;
        });
        CHECK(val <= bound * (1.0 + 1e-10));
    }
}

TEST_CASE("covariance reduces to the second moment and decays in the gap") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::bessel(2.0, 1);
    const double t = 1.0;
    CHECK(covariance_linear(op, k, t, 0.7, 0.7, 1.0) ==
          doctest::Approx(exact_second_moment(op, k, t, 1.0)));
    const double c0 = exact_second_moment(op, k, t, 1.0);
    CHECK(std::fabs(covariance_linear(op, k, t, 0.0, 3.0, 1.0)) < c0);
    CHECK(std::fabs(covariance_linear(op, k, t, 0.0, 12.0, 1.0)) <
          std::fabs(covariance_linear(op, k, t, 0.0, 3.0, 1.0)));
}

TEST_CASE("simulated cross moment matches the covariance quadrature") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    const auto nu = symmetric_two_point(1.0);
    const double t = 1.0, dx = 1.0, L = 16.0;
    const int n = 2048;
    const double h = 2.0 * L / n;
    // shared weight profile; translation covariance gives the second point
    std::vector<double> w(n + 1);
    for (int j = 0; j <= n; ++j)
        w[j] = weight_eval(op, k, t, 0.0, -L + j * h);
    auto interp = [&](double y, double center) {
        const double pos = (y - center + L) / h;
        if (pos < 0.0) return 0.0;
        const auto j = static_cast<std::size_t>(pos);
        if (j + 1 >= w.size()) return 0.0;
        return w[j] + (pos - j) * (w[j + 1] - w[j]);
    };
    const Box1D box{-L, L};
    auto prods = run_trials(35, 40000, 1, [&](std::size_t, RandomStream& rs) {
        const PRMSample s = sample_prm(box, nu, rs);
        double va = 0.0, vb = 0.0;
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            va += s.zs[i] * interp(s.xs[i], 0.0);
            vb += s.zs[i] * interp(s.xs[i], dx);
        }
        return va * vb;
    });
    const double nn = static_cast<double>(prods.size());
    const double mean = kahan_sum(prods) / nn;
    double var = 0.0;
    for (double p : prods) var += (p - mean) * (p - mean);
    const double se = std::sqrt(var / (nn - 1.0) / nn);
    const double exact = covariance_linear(op, k, t, 0.0, dx, 1.0);
    CHECK(std::fabs(mean - exact) <= 3.0 * se);
}

TEST_CASE("envelope growth exponents per flow and kernel") {
    const auto nu = symmetric_two_point(1.0);
    const double b4 = 4.0, p = 4.0;
    const auto kh1 = ColorationKernel::heat(1.0, 1);
    // heat flow, heat coloration: exactly linear in t
    {
        const auto op = GreenOperator::heat(1);
        const double e1 = p_moment_envelope(op, kh1, 1.0, p, b4, nu);
        const double e2 = p_moment_envelope(op, kh1, 2.0, p, b4, nu);
        CHECK(e2 / e1 == doctest::Approx(2.0).epsilon(1e-12));
    }
    // wave flow, heat coloration: exactly quadratic in t
    {
        const auto op = GreenOperator::wave(1);
        const double e1 = p_moment_envelope(op, kh1, 1.0, p, b4, nu);
        const double e2 = p_moment_envelope(op, kh1, 2.0, p, b4, nu);
        CHECK(e2 / e1 == doctest::Approx(4.0).epsilon(1e-12));
    }
    // wave flow, L1 coloration: two-term shape t (t^{1/2} + t^{1/p})
    {
        const auto op = GreenOperator::wave(1);
        const auto kb = ColorationKernel::bessel(2.0, 1);
        const double e1 = p_moment_envelope(op, kb, 1.0, p, b4, nu);
        const double e2 = p_moment_envelope(op, kb, 2.0, p, b4, nu);
        CHECK(e2 / e1 >= std::pow(2.0, 1.0 + 1.0 / p));
        CHECK(e2 / e1 <= std::pow(2.0, 1.5));
    }
}

TEST_CASE("simulated fourth norm sits below the envelope") {
    const auto op = GreenOperator::heat(1);
    const auto k = ColorationKernel::heat(1.0, 1);
    const auto nu = symmetric_two_point(1.0);
    const FieldEstimate est = simulate_linear(op, k, nu, 1.0, 0.0, 14.0,
                                              20000, 37, 1);
    const double env = p_moment_envelope(op, k, 1.0, 4.0, 4.0, nu);
    CHECK(est.p4_norm + 3.0 * est.p4_norm_se <= env);
}

TEST_CASE("alternative envelope has the strictly smaller admissible range") {
    const auto nu = symmetric_two_point(1.0);
    const auto op1 = GreenOperator::heat(1);
    const auto kb1 = ColorationKernel::bessel(2.0, 1);
    // d = 1 with an L1 kernel: the first envelope takes every p >= 2,
    // the alternative one needs p < 1 + 2/d = 3
    CHECK(p_moment_envelope(op1, kb1, 1.0, 2.9, 4.0, nu) > 0.0);
    CHECK(p_moment_envelope(op1, kb1, 1.0, 3.1, 4.0, nu) > 0.0);
    CHECK(alt_p_moment_envelope(op1, kb1, 1.0, 2.9, 4.0, nu) > 0.0);
    CHECK_THROWS_AS(alt_p_moment_envelope(op1, kb1, 1.0, 3.1, 4.0, nu),
                    Unsupported);
    // p = 2 is always inside both ranges whenever the base condition holds
    CHECK(alt_p_moment_envelope(op1, kb1, 1.0, 2.0, 1.0, nu) > 0.0);
    // outside the admissible range the first envelope refuses too
    const auto op3 = GreenOperator::heat(3);
    const auto kb3 = ColorationKernel::bessel(1.5, 3);
    CHECK_THROWS_AS(p_moment_envelope(op3, kb3, 1.0, 3.5, 4.0, nu),
                    Unsupported);
}

TEST_CASE("running second moment is bounded and mean-square continuous "
          "in time") {
    const auto op = GreenOperator::wave(1);
    const auto k = ColorationKernel::bessel(2.0, 1);
    double sup = 0.0;
    for (double t = 0.1; t <= 2.0; t += 0.1)
        sup = std::max(sup, exact_second_moment(op, k, t, 1.0));
    CHECK(std::isfinite(sup));
    double prev = -1.0;
    for (double h : {0.2, 0.1, 0.05}) {
        double worst = 0.0;
        for (double t : {0.5, 1.0, 1.5}) {
            const double diff = mu_radial_integral(k, [&](double r) {
                const double d =
                    h_transform(op, t + h, r) - h_transform(op, t, r);
                return d * d;
            });
            worst = std::max(worst, diff);
        }
        if (prev >= 0.0) CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 0.05);
}
