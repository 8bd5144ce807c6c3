#pragma once

// Dirichlet series built from Hardy-sum phases, the non-holomorphic
// Eisenstein series of weight 4r with multiplier ν_r on Γ_θ (direct coset
// sum and Fourier side), and a Perron-integral diagnostic. Everything here
// requires Re(s) > 1: there is no analytic continuation.

#include <cstdint>
#include <vector>

#include "hardy/rational.hpp"
#include "hardy/special.hpp"

namespace hardy {

struct SpectralPoint {
    Rational r;
    std::int64_t n = 0;
    cplx s;
    std::int64_t c_max = 0;
    cplx value;
    double tail_bound = 0.0;  // bound on |omitted terms|, no cancellation assumed
};

// Per-denominator Weyl sums A_c = Σ_{1<=d<c, gcd=1, c+d odd} e(-n d/c + r S(d, c))
// for c = 0..c_max (A_0 = A_1 = 0). Phases are reduced exactly mod 1.
std::vector<cplx> weyl_coefficients(const Rational& r, std::int64_t n, std::int64_t c_max);

// Z_r(n, s) = e^{-2πir} Σ_{c<=c_max} c^{-2s} A_c, with
// tail_bound = c_max^{2-2σ} / (2σ - 2) ≥ Σ_{c>c_max} φ_θ(c) c^{-2σ}.
SpectralPoint z_partial(const Rational& r, std::int64_t n, cplx s, std::int64_t c_max);

// The coefficient series that the Fourier expansion at i∞ (cusp width 2)
// actually produces:
//   Z~(n, s) = 1/2 Σ_{c<=c_max} c^{-2s} Σ_{d mod 2c, gcd=1, c+d odd} e(n d/(2c) - r S(d, c)).
// Unlike z_partial, c = 1 contributes (d = 0).
SpectralPoint cusp_coefficient_partial(const Rational& r, std::int64_t n, cplx s, std::int64_t c_max);

// Same, for n = -n_max..n_max at once; result[k] holds n = k - n_max.
std::vector<SpectralPoint> cusp_coefficient_partials(const Rational& r, std::int64_t n_max, cplx s,
                                                     std::int64_t c_max);

struct EisensteinParams {
    Rational r{1, 8};
    cplx s{2.0, 0.5};
    cplx z{0.2, 1.0};
    std::int64_t c_max = 2000;
    std::int64_t d_span = 50;  // |d| <= d_span * c
    std::int64_t n_max = 8;
    unsigned threads = 1;
    std::uint64_t term_budget = 2'000'000'000;  // cap on visited (c, d) pairs
};

struct EisensteinValue {
    cplx value;
    double tail_bound = 0.0;
    std::uint64_t terms = 0;
};

// y^{s-2r} + Σ_{c=1}^{c_max} Σ_{|d|<=d_span c, gcd=1, c+d odd}
//   conj(ν_r) (cz+d)^{-4r} (y / |cz+d|²)^{s-2r},
// summed in ascending (c, d) order with compensated accumulation. When the
// budget is too small, throws ResourceError holding the partial value and
// its tail bound.
EisensteinValue eisenstein_direct(const EisensteinParams& p);

// Absolute bound on the terms eisenstein_direct omits at these parameters.
double eisenstein_tail_bound(const EisensteinParams& p);

enum class FourierNormalization {
    cusp_width_two,  // coefficients from cusp_coefficient_partial (matches the coset sum)
    literal,         // Z_r(n, s) from z_partial with the e^{2πir} prefactors, as usually printed
};

struct FourierConvention {
    FourierNormalization normalization = FourierNormalization::cusp_width_two;
    double whittaker_scale = 2.0;  // W argument is whittaker_scale * π |n| y
};

// Fourier-side value
//   y^{s-2r} + φ(s) y^{1-s-2r} + Σ_{0<|n|<=n_max} y^{-2r} φ(n, s) W_{sign(n)2r, s-1/2}(scale π|n|y) e^{πinx}.
cplx eisenstein_fourier(const EisensteinParams& p, FourierConvention conv = {});

// Constant term y^{s-2r} + φ(s) y^{1-s-2r} of the expansion.
cplx eisenstein_constant_term(const EisensteinParams& p, FourierConvention conv = {});

struct PerronResult {
    cplx value;       // (1/2πi) ∫_{α-iT}^{α+iT} D(s) N^{2s} / s ds
    cplx exact;       // Σ_{c<=N} A_c
    double discrepancy = 0.0;
    std::int64_t c_max = 0;
    std::int64_t nodes = 0;
};

// Perron integral over the truncated series D(s) = Σ_{c<=c_max} A_c c^{-2s}
// (= e^{2πir} z_partial). N must not be an integer. Diagnostic only.
PerronResult perron_partial(const Rational& r, std::int64_t n, double N, double T, double alpha,
                            std::int64_t c_max = 0);

}  // namespace hardy
