#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zonal/asymptotics.hpp"
#include "zonal/errors.hpp"

using namespace zonal;
using std::numbers::pi;

TEST_CASE("laplace limit is c_tilde / (2 sqrt(pi))") {
    const auto p = predicted_ratio(Laplace::with_c_tilde(1.0));
    CHECK(p.even_limit == doctest::Approx(0.282095).epsilon(2e-6));
    CHECK(p.odd_limit == p.even_limit);
    const auto q = predicted_ratio(Laplace{1.0});
    CHECK(q.even_limit == doctest::Approx(std::numbers::sqrt2 / (2.0 * std::sqrt(pi))).epsilon(1e-15));
}

TEST_CASE("NTK limits from the two singularities") {
    CHECK(predicted_ratio(Ntk{2, 0.0}).even_limit == doctest::Approx(7.0 / (2.0 * std::numbers::sqrt2 * std::pow(pi, 1.5))).epsilon(1e-14));
    CHECK(std::abs(predicted_ratio(Ntk{2, 0.0}).even_limit - 0.444455) < 1e-6);

    const double n3 = (13.0 * pi - std::acos(1.0 / pi)) / (2.0 * std::numbers::sqrt2 * std::pow(pi, 2.5));
    CHECK(predicted_ratio(Ntk{3, 0.0}).even_limit == doctest::Approx(n3).epsilon(1e-14));
    CHECK(std::abs(n3 - 0.800218) < 1e-6);

    CHECK(std::abs(predicted_ratio(Ntk{4, 0.0}).even_limit - 1.29531) < 1e-5);
    // 40-digit value of the k = 4 closed form
    CHECK(predicted_ratio(Ntk{4, 0.0}).even_limit == doctest::Approx(1.2953139863109345).epsilon(1e-14));

    const auto p = predicted_ratio(Ntk{4, 1.0});
    CHECK(p.even_limit == doctest::Approx(10.0 * std::numbers::sqrt2 / std::pow(pi, 1.5)).epsilon(1e-14));
    CHECK(std::abs(p.even_limit - 2.53975) < 1e-5);
    CHECK(p.odd_limit == doctest::Approx(p.even_limit).epsilon(1e-15));

    CHECK(predicted_ratio(Ntk{1, 0.0}).odd_limit == doctest::Approx(0.0).epsilon(1e-16));
}

TEST_CASE("beta = 1 general formula reduces to k(k+1) / (sqrt(2) pi^{3/2})") {
    for (int k = 1; k <= 8; ++k) {
        const auto p = predicted_ratio(Ntk{k, 1.0});
        const double simple = k * (k + 1.0) / (std::numbers::sqrt2 * std::pow(pi, 1.5));
        CHECK(std::abs(p.even_limit - simple) <= 1e-14 * simple);
        CHECK(std::abs(p.even_limit - p.odd_limit) <= 1e-14);
    }
}

TEST_CASE("parity collapse happens only at beta = 1") {
    for (int k = 1; k <= 6; ++k) {
        for (double beta : {0.0, 0.3, 0.9, 1.0, 1.5}) {
            const auto p = predicted_ratio(Ntk{k, beta});
            CHECK((std::abs(p.even_limit - p.odd_limit) <= 1e-14) == (beta == 1.0));
        }
    }
}

TEST_CASE("unsupported kernels") {
    CHECK_THROWS_AS((void)predicted_ratio(Gaussian{0.5}), UnsupportedKernelError);
    CHECK_THROWS_AS((void)predicted_ratio(ExpPower{1.0, 1.0}), UnsupportedKernelError);
    CHECK_THROWS_AS((void)predicted_ratio(ArcCos1{}), UnsupportedKernelError);
    CHECK_THROWS_AS((void)predicted_decay(Gaussian{0.5}), UnsupportedKernelError);
}

TEST_CASE("exponential power decay law") {
    const auto one = predicted_exp_ratio(1.0, 1.0);
    CHECK(one.exponent == -1.5);
    CHECK(one.constant == doctest::Approx(1.0 / std::sqrt(2.0 * pi)).epsilon(1e-13));
    CHECK(one.constant == doctest::Approx(predicted_ratio(Laplace{1.0}).even_limit).epsilon(1e-13));

    CHECK(predicted_exp_ratio(0.5, 1.0).exponent == -1.25);
    CHECK(predicted_exp_ratio(0.5, 1.0).constant == doctest::Approx(0.24261280114151913).epsilon(1e-13));
    CHECK(predicted_exp_ratio(1.5, 1.0).constant == doctest::Approx(0.3478986032171253).epsilon(1e-13));

    for (double g1 = 0.1; g1 < 1.9; g1 += 0.1) {
        CHECK(predicted_exp_ratio(g1, 1.0).exponent > predicted_exp_ratio(g1 + 0.1, 1.0).exponent);
        CHECK(predicted_exp_ratio(g1, 2.0).constant > 0.0);
    }
    CHECK_THROWS_AS((void)predicted_exp_ratio(2.0, 1.0), ParameterError);
    CHECK_THROWS_AS((void)predicted_exp_ratio(0.0, 1.0), ParameterError);
    CHECK_THROWS_AS((void)predicted_exp_ratio(1.0, 0.0), ParameterError);

    const auto d = predicted_decay(ExpPower{0.5, 1.0});
    CHECK(d.exponent == -1.25);
    CHECK(d.even_limit == d.odd_limit);
}

TEST_CASE("ratio diagnostics at n = 100") {
    const ExtractionConfig config{0.99, std::size_t{1} << 15, 128};
    const auto lap = ratio_diagnostics(cauchy_coefficients(Laplace::with_c_tilde(1.0), config));
    CHECK(std::abs(lap.ratios[99].ratio - 0.28244) < 1e-5);
    CHECK(lap.ratios[99].n == 100);

    for (double beta : {0.0, 1.0}) {
        const auto series = cauchy_coefficients(Ntk{1, beta}, config);
        const auto d = ratio_diagnostics(series);
        CHECK(std::abs(d.ratios[99].ratio - 0.261069) < 1e-6);
        if (beta == 0.0) {
            for (std::size_t n = 3; n <= 128; n += 2) {
                REQUIRE(std::abs(d.ratios[n - 1].ratio) <= series.error_bound[n] * std::pow(static_cast<double>(n), 1.5));
            }
        }
    }
}

TEST_CASE("exponent estimates") {
    const auto lap = ratio_diagnostics(cauchy_coefficients(Laplace{1.0}));
    CHECK(lap.exponent_estimate > -1.55);
    CHECK(lap.exponent_estimate < -1.45);
    const auto ntk = ratio_diagnostics(cauchy_coefficients(Ntk{1, 0.0}));
    CHECK(std::abs(ntk.exponent_estimate + 1.5) < 0.05);
    CHECK(std::abs(ntk.odd_tail_mean) < 1e-6);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS((void)ratio_diagnostics(cauchy_coefficients(Laplace{1.0}, ExtractionConfig{0.99, 1 << 15, 32})),
                    DegenerateInputError);
    // Gaussian coefficients fall below noise long before the fit window.
    CHECK_THROWS_AS((void)ratio_diagnostics(cauchy_coefficients(Gaussian{0.5})), DegenerateInputError);
}
