#pragma once

// Theta series, the multiplier system ν_r of θ^{8r} on Γ_θ, and numerical
// checks of the transformation laws that define S and S4.

#include <cstdint>
#include <random>

#include "hardy/rational.hpp"
#include "hardy/special.hpp"

namespace hardy {

// Element of SL2(Z): (a b; c d) with ad - bc = 1.
struct GroupElement {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    // Γ_θ: g ≡ (1 0; 0 1) or (0 1; 1 0) mod 2, i.e. c + d odd and a + b odd.
    bool in_theta_group() const noexcept;

    cplx j(cplx z) const noexcept;    // cz + d
    cplx act(cplx z) const noexcept;  // (az + b) / (cz + d)

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    friend GroupElement operator-(const GroupElement& g) { return {-g.a, -g.b, -g.c, -g.d}; }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// An element of Γ_θ with bottom row (c, d); requires gcd(c, d) = 1, c + d odd.
GroupElement theta_group_element(std::int64_t c, std::int64_t d);

// Uniform bottom row with 1 <= c <= c_max and -2c <= d <= 2c.
GroupElement random_theta_element(std::mt19937_64& rng, std::int64_t c_max);

struct ThetaValue {
    cplx value;
    std::int64_t terms;  // cutoff M: |n| <= M were summed
};

// Σ_n e^{πi n² z} (four = false) or Σ_n (-1)^n e^{πi n² z} (four = true),
// truncated at the first M with Σ_{n>M} e^{-π n² y} < tol.
// ResourceError when M would exceed max_terms.
ThetaValue theta_series(cplx z, double tol, bool four, std::int64_t max_terms = 50'000'000);

cplx theta(cplx z, double tol);
cplx theta4(cplx z, double tol);

// ν_r(g) = e(r (S(d, c) - sign c)) for c != 0, e(r (sign d - 1)) for c = 0.
// For c < 0, S(d, c) = S(-d, |c|). Phases are reduced exactly before exp.
cplx nu_r(const GroupElement& g, const Rational& r);

struct TransformResidual {
    double theta = 0.0;  // |θ(g.z) - ((cz+d)/i)^{1/2} e^{πi S/4} θ(z)|
    double theta4 = 0.0; // |θ4(g.z) - ((cz+d)/i)^{1/2} e^{-πi S4/4} θ4(z)|, when d is odd
    bool theta4_checked = false;

    double max() const noexcept { return theta > theta4 ? theta : theta4; }
};

// Requires g ∈ Γ_θ, c > 0, Im z > 0.
TransformResidual verify_theta_transform(const GroupElement& g, cplx z, double tol);

// |ν(gh) j(gh,z)^{4r} - ν(g) ν(h) j(g,h.z)^{4r} j(h,z)^{4r}| / |ν(gh) j(gh,z)^{4r}|,
// principal powers.
double cocycle_check(const GroupElement& g, const GroupElement& h, cplx z, const Rational& r);

// Principal branch w^α = exp(α Log w).
cplx principal_pow(cplx w, double alpha);

}  // namespace hardy
