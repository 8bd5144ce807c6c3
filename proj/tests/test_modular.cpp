#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/modular.hpp"
#include "hardy/sums.hpp"

using namespace hardy;

namespace {
constexpr double pi = std::numbers::pi;
const GroupElement inversion{0, -1, 1, 0};
}  // namespace

TEST_CASE("group elements") {
    CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), DomainError);
    CHECK(inversion.in_theta_group());
    CHECK(GroupElement(1, 2, 0, 1).in_theta_group());
    CHECK_FALSE(GroupElement(1, 1, 0, 1).in_theta_group());
    CHECK_FALSE(GroupElement(1, 0, 1, 1).in_theta_group());

    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_theta_element(rng, 60);
        REQUIRE(g.a * g.d - g.b * g.c == 1);
        REQUIRE(g.in_theta_group());
        REQUIRE(g.c >= 1);
        REQUIRE(std::abs(g.d) <= 2 * g.c);
    }
    CHECK_THROWS_AS(theta_group_element(2, 4), DomainError);
    CHECK_THROWS_AS(theta_group_element(3, 5), DomainError);
}

TEST_CASE("theta at i") {
    const double expected = std::pow(pi, 0.25) / std::tgamma(0.75);
    CHECK(std::abs(theta({0, 1}, 1e-15) - expected) < 1e-14);
    CHECK(std::abs(theta({0, 1}, 1e-15).real() - 1.0864348112133080) < 1e-14);
}

TEST_CASE("theta shifts and symmetries") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.3, 2.0);
    for (int i = 0; i < 50; ++i) {
        const cplx z(re(rng), im(rng));
        CHECK(std::abs(theta(z + 2.0, 1e-15) - theta(z, 1e-15)) < 1e-13);
        CHECK(std::abs(theta4(z, 1e-15) - theta(z + 1.0, 1e-15)) < 1e-13);
        const cplx reflected = std::conj(theta4(-std::conj(z), 1e-15));
        CHECK(std::abs(theta4(z, 1e-15) - reflected) < 1e-13);
    }
    CHECK(std::abs(theta4({0, 1}, 1e-15) - theta({1, 1}, 1e-15)) < 1e-14);
    const cplx t2 = theta4({0, 2}, 1e-15);
    CHECK(t2.imag() == 0.0);
    CHECK(t2.real() > 0.0);
}

TEST_CASE("theta domain and budget") {
    CHECK_THROWS_AS(theta({0, 0}, 1e-10), DomainError);
    CHECK_THROWS_AS(theta({0, -1}, 1e-10), DomainError);
    CHECK_THROWS_AS(theta({0, 1}, 0.0), DomainError);
    CHECK_THROWS_AS(theta_series({0, 1e-9}, 1e-12, false, 1000), ResourceError);
}

TEST_CASE("theta cutoff term count") {
    // tail < tol is what the cutoff guarantees; check it against the exact tail
    for (double y : {0.01, 0.1, 1.0, 3.0})
        for (double tol : {1e-8, 1e-12}) {
            const auto M = theta_series({0, y}, tol, false).terms;
            double tail = 0;
            for (std::int64_t n = M + 1; n < M + 100000; ++n) tail += std::exp(-pi * n * n * y);
            CHECK(tail < tol);
        }
    // term count at z = i mapped by g, as a function of c and d
    for (std::int64_t c = 1; c <= 40; ++c)
        for (std::int64_t d = -2 * c; d <= 2 * c; ++d) {
            if ((c + d) % 2 == 0 || std::gcd(c, d) != 1) continue;
            const double y = 1.0 / static_cast<double>(c * c + d * d);
            const double cd2 = static_cast<double>(c * c + d * d);
            for (double tol : {1e-8, 1e-12, 1e-15}) {
                const auto M = theta_series({0.3, y}, tol, false).terms;
                const double L = std::log(1 / tol);
                const double corrected = std::ceil(std::sqrt((L + std::log1p(1 / (pi * y))) * cd2 / pi)) + 1;
                REQUIRE(M <= corrected);
                if (y >= 0.1) REQUIRE(M <= std::ceil(std::sqrt(L * cd2 / pi)) + 1);
            }
        }
}

TEST_CASE("multiplier examples") {
    for (auto r : {Rational(1, 8), Rational(1, 3), Rational(1, 2), Rational(5, 6)}) {
        const double rv = r.to_double();
        CHECK(std::abs(nu_r(GroupElement(1, 2, 0, 1), r) - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(nu_r(GroupElement(-1, 0, 0, -1), r) - std::polar(1.0, -4 * pi * rv)) < 1e-14);
        CHECK(std::abs(nu_r(inversion, r) - std::polar(1.0, -2 * pi * rv)) < 1e-14);
    }
    CHECK_THROWS_AS(nu_r(GroupElement(1, 1, 0, 1), Rational(1, 8)), DomainError);
    CHECK_THROWS_AS(nu_r(inversion, Rational(1)), DomainError);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_theta_element(rng, 100);
        CHECK(std::abs(std::abs(nu_r(g, Rational(3, 7))) - 1.0) < 1e-15);
    }
}

TEST_CASE("transformation law, single elements") {
    CHECK(verify_theta_transform(inversion, {0, 1}, 1e-15).max() < 1e-10);
    const GroupElement g(1, 0, 2, 1);
    CHECK(hardy_S(1, 2) == 1);
    const auto res = verify_theta_transform(g, {0, 1}, 1e-15);
    CHECK(res.theta < 1e-10);
    CHECK(res.theta4_checked);
    CHECK(res.theta4 < 1e-10);
    CHECK_THROWS_AS(verify_theta_transform(GroupElement(1, 2, 0, 1), {0, 1}, 1e-12), DomainError);
    CHECK_THROWS_AS(verify_theta_transform(-g, {0, 1}, 1e-12), DomainError);
}

TEST_CASE("transformation law pins S mod 8") {
    // flipping S by 1 must break the identity, or the check proves nothing
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_theta_element(rng, 20);
        const cplx z(0.3, 1.1);
        const cplx lhs = theta(g.act(z), 1e-15);
        const cplx root = std::sqrt(g.j(z) / cplx(0, 1));
        const auto s = hardy_S(g.d, g.c);
        for (int shift = 1; shift < 8; ++shift) {
            const cplx wrong = root * std::polar(1.0, pi * (s + shift) / 4.0) * theta(z, 1e-15);
            CHECK(std::abs(lhs - wrong) > 1e-3 * std::abs(lhs));
        }
    }
}

TEST_CASE("cocycle examples") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_theta_element(rng, 30);
        CHECK(cocycle_check(g, GroupElement{}, {0.1, 1.2}, Rational(1, 8)) < 1e-14);
    }
    CHECK(cocycle_check(inversion, inversion, {0, 1}, Rational(1, 8)) < 1e-10);
    CHECK_THROWS_AS(cocycle_check(GroupElement(1, 1, 0, 1), inversion, {0, 1}, Rational(1, 8)), DomainError);
}

TEST_CASE("nu_1/2 is a homomorphism") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_theta_element(rng, 40), h = random_theta_element(rng, 40);
        REQUIRE(std::abs(nu_r(g * h, Rational(1, 2)) - nu_r(g, Rational(1, 2)) * nu_r(h, Rational(1, 2))) < 1e-10);
    }
}
