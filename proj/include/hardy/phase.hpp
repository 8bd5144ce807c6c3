#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace hardy {

// e(k/m) = exp(2πi k/m), with k reduced into [0, m) exactly before the
// floating evaluation.
inline std::complex<double> unit_root(__int128 k, __int128 m) {
    k %= m;
    if (k < 0) k += m;
    // quarter turns are exact, so real-valued sums stay real
    if (k == 0) return {1.0, 0.0};
    if (4 * k % m == 0) {
        switch (4 * k / m) {
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    // Fold into (-m/2, m/2] so the angle stays small.
    if (2 * k > m) k -= m;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace hardy
