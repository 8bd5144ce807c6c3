#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/special.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_CASE("gamma values") {
    CHECK(std::abs(gamma_complex(1.0) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_complex(5.0) - 24.0) < 1e-12);
    const double root_pi = std::sqrt(std::numbers::pi);
    CHECK(std::abs(oracle::gamma_half_quadrature() - root_pi) < 1e-13);
    CHECK(std::abs(gamma_complex(0.5) - oracle::gamma_half_quadrature()) < 1e-13);
    CHECK(std::abs(gamma_complex(-0.5) + 2.0 * root_pi) < 1e-12);
    for (double x : {0.1, 0.75, 1.3, 2.5, 7.2, 15.0})
        CHECK(std::abs(gamma_complex(x).real() / std::tgamma(x) - 1.0) < 1e-13);
}

TEST_CASE("gamma poles") {
    for (double p : {0.0, -1.0, -2.0, -7.0}) CHECK_THROWS_AS(gamma_complex(p), DomainError);
}

TEST_CASE("gamma recurrence and reflection") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> re(-6.0, 8.0), im(-6.0, 6.0);
    double worst_rec = 0, worst_ref = 0;
    for (int i = 0; i < 400; ++i) {
        const cplx s(re(rng), im(rng));
        const cplx g = gamma_complex(s);
        worst_rec = std::max(worst_rec, std::abs(gamma_complex(s + 1.0) - s * g) / std::abs(s * g));
        const cplx refl = g * gamma_complex(1.0 - s);
        const cplx expect = std::numbers::pi / std::sin(std::numbers::pi * s);
        worst_ref = std::max(worst_ref, std::abs(refl - expect) / std::abs(expect));
    }
    CHECK(worst_rec < 1e-10);
    CHECK(worst_ref < 1e-10);
}

TEST_CASE("whittaker closed form W_{0,1/2}") {
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        const cplx w = whittaker_W(0.0, 0.5, x);
        CHECK(std::abs(w - std::exp(-x / 2)) < 1e-10 * std::exp(-x / 2));
    }
    // another closed form: W_{κ, 1/2-κ}(x) = W_{κ, κ-1/2}(x) = x^κ e^{-x/2}
    for (double kappa : {0.125, 0.25, 0.4}) {
        const double x = 3.0;
        const cplx w = whittaker_W(kappa, 0.5 - kappa, x);
        CHECK(std::abs(w - std::pow(x, kappa) * std::exp(-x / 2)) < 1e-9);
    }
}

TEST_CASE("whittaker symmetric in mu") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> kap(-0.2, 0.2), mre(-0.25, 0.25), mim(-2.0, 2.0), xs(0.3, 15.0);
    for (int i = 0; i < 40; ++i) {
        const double k = kap(rng), x = xs(rng);
        const cplx mu(mre(rng), mim(rng));
        const cplx a = whittaker_W(k, mu, x), b = whittaker_W(k, -mu, x);
        CHECK(std::abs(a - b) <= 1e-8 * std::abs(a));
    }
}

TEST_CASE("whittaker large-x asymptotics") {
    const double x = 50.0;
    for (double kappa : {-0.25, 0.0, 0.25})
        for (cplx mu : {cplx(1.5, 0.5), cplx(0.7, 0), cplx(2.0, -1.0)}) {
            const cplx ratio = whittaker_W(kappa, mu, x) / (std::exp(-x / 2) * std::pow(x, kappa));
            // Σ_k Π_{i<=k} (μ² - (κ - i + 1/2)²) / (k! x^k), three terms
            cplx series = 1.0, term = 1.0;
            for (int k = 1; k <= 3; ++k) {
                const double h = kappa - k + 0.5;
                term *= (mu * mu - h * h) / (k * x);
                series += term;
            }
            CHECK(std::abs(ratio - series) < 2e-5);
            // leading order alone, for the weights the Fourier side uses (μ = s - 1/2, s = 2 + 0.5i)
            if (mu == cplx(1.5, 0.5)) CHECK(std::abs(ratio - 1.0) < 0.05);
        }
}

TEST_CASE("whittaker domain") {
    CHECK_THROWS_AS(whittaker_W(0.0, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(whittaker_W(0.0, 0.5, -1.0), DomainError);
    CHECK_THROWS_AS(whittaker_W(1.0, 0.25, 1.0), DomainError);
}
