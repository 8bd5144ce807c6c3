#include <doctest.h>

#include <random>

#include "hardy/errors.hpp"
#include "hardy/sums.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_CASE("dedekind examples") {
    CHECK(dedekind_sum(1, 2) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(1, 3).str() == "1/18");
    CHECK(dedekind_sum(0, 1) == Rational(0));
    CHECK(dedekind_sum(-1, 3) == -Rational(1, 18));
    CHECK_THROWS_AS(dedekind_sum(2, 4), DomainError);
    CHECK_THROWS_AS(dedekind_sum(1, 0), DomainError);
}

TEST_CASE("dedekind periodic in d mod c") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> pick(2, 500);
    for (int i = 0; i < 200; ++i) {
        const auto c = pick(rng);
        auto d = pick(rng) % c;
        while (std::gcd(d, c) != 1) ++d;
        REQUIRE(dedekind_sum(d + c, c) == dedekind_sum(d, c));
        REQUIRE(dedekind_sum(d - 3 * c, c) == dedekind_sum(d, c));
    }
}

TEST_CASE("dedekind agrees with the cotangent sum, c <= 200") {
    double worst = 0;
    for (std::int64_t c = 2; c <= 200; ++c)
        for (std::int64_t d = 1; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            const double exact = dedekind_sum(d, c).to_double();
            worst = std::max(worst, std::abs(exact - static_cast<double>(oracle::dedekind_cot(d, c))));
            worst = std::max(worst, std::abs(exact - dedekind_sum_cotangent(d, c)));
        }
    CHECK(worst < 1e-9);
}

TEST_CASE("hardy sums: hand values") {
    CHECK(hardy_S(1, 2) == 1);
    CHECK(hardy_S(1, 4) == 1);
    CHECK(hardy_S(2, 3) == 2);
    CHECK(hardy_S(3, 4) == 3);
    CHECK(hardy_S(0, 1) == 0);
    CHECK(hardy_S4(1, 2) == 1);
    CHECK(hardy_S4(1, 3) == 2);
    CHECK(hardy_S4(3, 4) == 1);
    CHECK(hardy_S_fast(3, 4) == 3);
    CHECK(hardy_S4_fast(1, 3) == 2);
}

TEST_CASE("hardy sums: domain") {
    CHECK_THROWS_AS(hardy_S(1, 3), DomainError);   // c + d even
    CHECK_THROWS_AS(hardy_S(2, 6), DomainError);   // gcd
    CHECK_THROWS_AS(hardy_S4(2, 3), DomainError);  // d even
    CHECK_THROWS_AS(hardy_S4(3, 9), DomainError);
    CHECK_THROWS_AS(hardy_S(1, 0), DomainError);
    CHECK_THROWS_AS(hardy_S(1, -4), DomainError);
    CHECK_THROWS_AS(hardy_S_fast(1, 3), DomainError);
    CHECK_THROWS_AS(hardy_S4_fast(2, 5), DomainError);
}

TEST_CASE("hardy sums match the definition, shift and flip laws") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> pick(2, 700);
    for (int i = 0; i < 400; ++i) {
        const auto c = pick(rng);
        const auto d = pick(rng) % c;
        if (std::gcd(d, c) != 1) continue;
        if ((c + d) % 2 == 1) {
            const auto s = hardy_S(d, c);
            REQUIRE(s == oracle::S(d, c));
            REQUIRE(hardy_S(d + 2 * c, c) == s);
            REQUIRE(hardy_S(d - 2 * c, c) == s);
            REQUIRE(hardy_S_fast(d + 2 * c, c) == s);
            REQUIRE(hardy_S_fast(d - 6 * c, c) == s);
        }
        if (d % 2 == 1) {
            const auto s4 = hardy_S4(d, c);
            REQUIRE(s4 == oracle::S4(d, c));
            REQUIRE(hardy_S4(d + 2 * c, c) == s4);
            REQUIRE(hardy_S4_fast(d - 2 * c, c) == s4);
            // not c-periodic: one shift by c flips S4 into -S
            if ((d + c + c) % 2 == 1) REQUIRE(oracle::S(d + c, c) == -s4);
        }
    }
}

TEST_CASE("floor_sum against brute force") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> pick(1, 60);
    for (int i = 0; i < 500; ++i) {
        const auto n = pick(rng), m = pick(rng), a = pick(rng) - 1, b = pick(rng) - 1;
        __int128 brute = 0;
        for (std::int64_t k = 0; k < n; ++k) brute += (a * k + b) / m;
        REQUIRE(floor_sum(n, m, a, b) == brute);
    }
}

TEST_CASE("batch_row examples") {
    auto r4 = batch_row(4, ParityClass::theta);
    REQUIRE(r4.size() == 2);
    CHECK(r4[0].d == 1);
    CHECK(*r4[0].S == 1);
    CHECK(r4[1].d == 3);
    CHECK(*r4[1].S == 3);
    CHECK(*r4[1].S4 == 1);  // d odd, so S4 rides along

    auto r3 = batch_row(3, ParityClass::theta);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].d == 2);
    CHECK(*r3[0].S == 2);
    CHECK_FALSE(r3[0].S4.has_value());

    for (const auto& rec : batch_row(5, ParityClass::four)) {
        REQUIRE(rec.S4.has_value());
        CHECK(*rec.S4 % 2 == 0);
    }
}

TEST_CASE("rows match the definition, c <= 400") {
    for (std::int64_t c = 2; c <= 400; ++c) {
        for (auto cls : {ParityClass::theta, ParityClass::four}) {
            const auto row = compute_row(c, cls);
            std::size_t k = 0;
            for (std::int64_t d = 1; d < c; ++d) {
                if (!in_class(d, c, cls) || std::gcd(d, c) != 1) continue;
                REQUIRE(k < row.d.size());
                REQUIRE(row.d[k] == d);
                REQUIRE(row.value[k] == (cls == ParityClass::theta ? oracle::S(d, c) : oracle::S4(d, c)));
                ++k;
            }
            REQUIRE(k == row.d.size());
        }
    }
}

TEST_CASE("parity law and cross identity, c <= 300") {
    for (std::int64_t c = 2; c <= 300; ++c)
        for (std::int64_t d = 1; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            if ((c + d) % 2 == 1) REQUIRE((hardy_S(d, c) % 2 != 0) == (c % 2 == 0));
            if (d % 2 == 1) {
                REQUIRE((hardy_S4(d, c) % 2 != 0) == (c % 2 == 0));
                REQUIRE(hardy_S(c - d, c) == hardy_S4(d, c));
            }
        }
}
