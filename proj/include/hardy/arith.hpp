#pragma once

// Sieves, totients and the parity-restricted Farey fractions that index
// every Hardy-sum sweep.

#include <cstdint>
#include <span>
#include <vector>

namespace hardy {

enum class ParityClass {
    theta,  // c + d odd (domain of S)
    four,   // d odd (domain of S4)
};

const char* to_string(ParityClass cls) noexcept;

struct ThetaFraction {
    std::int64_t d;
    std::int64_t c;
    ParityClass parity_class;

    friend bool operator==(const ThetaFraction&, const ThetaFraction&) = default;
};

// True when (d, c) belongs to the class, with no range check on d.
bool in_class(std::int64_t d, std::int64_t c, ParityClass cls) noexcept;

// Möbius and Euler tables on [1, limit], built by a linear sieve.
class SieveTables {
public:
    explicit SieveTables(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    int mobius(std::uint64_t n) const;
    std::uint64_t totient(std::uint64_t n) const;

    std::span<const std::int8_t> mobius_table() const noexcept { return {mu_.data() + 1, limit_}; }
    std::span<const std::uint64_t> totient_table() const noexcept { return {phi_.data() + 1, limit_}; }

private:
    std::uint64_t limit_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint64_t> phi_;
};

// Throws DomainError for N = 0 or a limit beyond the addressable range.
SieveTables build_sieves(std::uint64_t limit);

// Single-value versions by trial division, for callers without a table.
int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

// #{1 <= d < c : gcd(d, c) = 1, c + d odd}. phi_theta(1) = 0.
std::uint64_t phi_theta(std::uint64_t c);
std::uint64_t phi_theta(std::uint64_t c, const SieveTables& sieve);

// Φ_θ(N) = Σ_{c<=N} phi_theta(c).
std::uint64_t phi_theta_count(std::uint64_t N);
std::uint64_t phi_theta_count(std::uint64_t N, const SieveTables& sieve);

// Number of fractions of the class with denominator exactly c.
std::uint64_t class_count(std::uint64_t c, ParityClass cls);

// Calls fn(ThetaFraction) for every fraction of the class with
// c in [c_lo, c_hi], ascending c then ascending d.
template <class Fn>
void for_each_fraction(std::int64_t c_lo, std::int64_t c_hi, ParityClass cls, Fn&& fn);

// All fractions 1 <= d < c <= N of the class, ascending c then d.
std::vector<ThetaFraction> enumerate_fractions(std::int64_t N, ParityClass cls);

// --- implementation ---

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept;

template <class Fn>
void for_each_fraction(std::int64_t c_lo, std::int64_t c_hi, ParityClass cls, Fn&& fn) {
    if (c_lo < 2) c_lo = 2;
    for (std::int64_t c = c_lo; c <= c_hi; ++c) {
        for (std::int64_t d = 1; d < c; ++d) {
            if (in_class(d, c, cls) && gcd64(d, c) == 1) fn(ThetaFraction{d, c, cls});
        }
    }
}

}  // namespace hardy
