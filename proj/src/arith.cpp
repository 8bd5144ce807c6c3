#include "hardy/arith.hpp"

#include <numeric>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

// Keeps both tables below ~16 GiB; larger limits are certainly a usage error.
constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 31;

}  // namespace

const char* to_string(ParityClass cls) noexcept { return cls == ParityClass::theta ? "theta" : "four"; }

bool in_class(std::int64_t d, std::int64_t c, ParityClass cls) noexcept {
    if (cls == ParityClass::theta) return ((c + d) & 1) != 0;
    return (d & 1) != 0;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

SieveTables::SieveTables(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw DomainError("sieve limit must be >= 1");
    if (limit > kMaxSieveLimit) throw DomainError("sieve limit " + std::to_string(limit) + " exceeds index range");
    mu_.assign(limit + 1, 0);
    phi_.assign(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    mu_[1] = 1;
    phi_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu_[i] = -1;
            phi_[i] = i - 1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu_[ip] = 0;
                phi_[ip] = phi_[i] * p;
                break;
            }
            mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
            phi_[ip] = phi_[i] * (p - 1);
        }
    }
}

int SieveTables::mobius(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw DomainError("mobius argument outside sieve range");
    return mu_[n];
}

std::uint64_t SieveTables::totient(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw DomainError("totient argument outside sieve range");
    return phi_[n];
}

SieveTables build_sieves(std::uint64_t limit) { return SieveTables(limit); }

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius(0) is undefined");
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw DomainError("totient(0) is undefined");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::uint64_t phi_theta_from(std::uint64_t c, std::uint64_t phi) {
    if (c == 1) return 0;  // 1 <= d < 1 is empty
    return (c % 2 == 0) ? phi : phi / 2;
}

}  // namespace

std::uint64_t phi_theta(std::uint64_t c) {
    if (c == 0) throw DomainError("phi_theta requires c >= 1");
    return phi_theta_from(c, totient(c));
}

std::uint64_t phi_theta(std::uint64_t c, const SieveTables& sieve) {
    if (c == 0) throw DomainError("phi_theta requires c >= 1");
    return phi_theta_from(c, sieve.totient(c));
}

std::uint64_t phi_theta_count(std::uint64_t N, const SieveTables& sieve) {
    if (N == 0) throw DomainError("phi_theta_count requires N >= 1");
    std::uint64_t total = 0;
    for (std::uint64_t c = 2; c <= N; ++c) total += phi_theta_from(c, sieve.totient(c));
    return total;
}

std::uint64_t phi_theta_count(std::uint64_t N) {
    if (N == 0) throw DomainError("phi_theta_count requires N >= 1");
    return phi_theta_count(N, SieveTables(N));
}

std::uint64_t class_count(std::uint64_t c, ParityClass cls) {
    if (c < 2) return 0;
    if (cls == ParityClass::theta) return phi_theta(c);
    // d odd: every unit is odd when c is even; half of them when c is odd.
    std::uint64_t phi = totient(c);
    return (c % 2 == 0) ? phi : phi / 2;
}

std::vector<ThetaFraction> enumerate_fractions(std::int64_t N, ParityClass cls) {
    if (N < 2) throw DomainError("enumerate_fractions requires N >= 2");
    std::vector<ThetaFraction> out;
    for_each_fraction(2, N, cls, [&](const ThetaFraction& f) { out.push_back(f); });
    return out;
}

}  // namespace hardy
