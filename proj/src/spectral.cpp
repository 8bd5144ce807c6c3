#include "hardy/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include "hardy/arith.hpp"
#include "hardy/compensated.hpp"
#include "hardy/errors.hpp"
#include "hardy/parallel.hpp"
#include "hardy/phase.hpp"
#include "hardy/sums.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

void require_convergent(cplx s, const char* what) {
    if (!(s.real() > 1.0))
        throw DomainError(std::string(what) + " requires Re(s) > 1 (no analytic continuation)");
}

void require_unit_interval(const Rational& r, const char* what) {
    if (r <= Rational(0) || r >= Rational(1)) throw DomainError(std::string(what) + " requires 0 < r < 1");
}

cplx pow_c(double base, cplx expo) { return std::exp(expo * std::log(base)); }

// Σ_{c>c_max} c^{1-2σ} <= c_max^{2-2σ} / (2σ - 2).
double dirichlet_tail(double sigma, std::int64_t c_max) {
    return std::pow(static_cast<double>(c_max), 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0);
}

// Σ_{c>=1} c^{-p} <= 1 + 1/(p-1).
double zeta_bound(double p) { return 1.0 + 1.0 / (p - 1.0); }

}  // namespace

std::vector<cplx> weyl_coefficients(const Rational& r, std::int64_t n, std::int64_t c_max) {
    require_unit_interval(r, "weyl_coefficients");
    if (c_max < 1) throw DomainError("weyl_coefficients requires c_max >= 1");
    const std::int64_t m = r.den();
    std::vector<cplx> out(static_cast<std::size_t>(c_max) + 1, cplx(0.0));
    for (std::int64_t c = 2; c <= c_max; ++c) {
        const std::int64_t L = lcm64(c, m);
        const __int128 scale_d = L / c, scale_s = L / m;
        CompensatedComplexSum acc;
        for (std::int64_t d = 1; d < c; ++d) {
            if (((c + d) & 1) == 0 || std::gcd(d, c) != 1) continue;
            const std::int64_t S = hardy_S_fast(d, c);
            acc += unit_root(-static_cast<__int128>(n) * d * scale_d + static_cast<__int128>(r.num()) * S * scale_s, L);
        }
        out[static_cast<std::size_t>(c)] = acc.value();
    }
    return out;
}

SpectralPoint z_partial(const Rational& r, std::int64_t n, cplx s, std::int64_t c_max) {
    require_convergent(s, "z_partial");
    require_unit_interval(r, "z_partial");
    if (c_max < 2) throw DomainError("z_partial requires c_max >= 2");
    const auto coeff = weyl_coefficients(r, n, c_max);
    CompensatedComplexSum acc;
    for (std::int64_t c = 2; c <= c_max; ++c) acc += coeff[static_cast<std::size_t>(c)] * pow_c(static_cast<double>(c), -2.0 * s);
    const cplx prefactor = unit_root(-r.num(), r.den());
    return {r, n, s, c_max, prefactor * acc.value(), dirichlet_tail(s.real(), c_max)};
}

std::vector<SpectralPoint> cusp_coefficient_partials(const Rational& r, std::int64_t n_max, cplx s,
                                                     std::int64_t c_max) {
    require_convergent(s, "cusp_coefficient_partial");
    require_unit_interval(r, "cusp_coefficient_partial");
    if (c_max < 1) throw DomainError("cusp_coefficient_partial requires c_max >= 1");
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    const std::int64_t m = r.den();
    const std::size_t width = static_cast<std::size_t>(2 * n_max + 1);
    std::vector<CompensatedComplexSum> acc(width);
    std::vector<CompensatedComplexSum> row(width);
    for (std::int64_t c = 1; c <= c_max; ++c) {
        const std::int64_t L = lcm64(2 * c, m);
        const __int128 scale_d = L / (2 * c), scale_s = L / m;
        std::fill(row.begin(), row.end(), CompensatedComplexSum{});
        for (std::int64_t d = 0; d < 2 * c; ++d) {
            if (((c + d) & 1) == 0 || std::gcd(d, c) != 1) continue;
            const __int128 base = -static_cast<__int128>(r.num()) * hardy_S_fast(d, c) * scale_s;
            for (std::int64_t n = -n_max; n <= n_max; ++n)
                row[static_cast<std::size_t>(n + n_max)] += unit_root(static_cast<__int128>(n) * d * scale_d + base, L);
        }
        const cplx weight = 0.5 * pow_c(static_cast<double>(c), -2.0 * s);
        for (std::size_t k = 0; k < width; ++k) acc[k] += weight * row[k].value();
    }
    std::vector<SpectralPoint> out;
    out.reserve(width);
    const double tail = dirichlet_tail(s.real(), c_max);
    for (std::int64_t n = -n_max; n <= n_max; ++n)
        out.push_back({r, n, s, c_max, acc[static_cast<std::size_t>(n + n_max)].value(), tail});
    return out;
}

SpectralPoint cusp_coefficient_partial(const Rational& r, std::int64_t n, cplx s, std::int64_t c_max) {
    // Single frequency: shift so the requested n is the only one evaluated.
    require_convergent(s, "cusp_coefficient_partial");
    require_unit_interval(r, "cusp_coefficient_partial");
    if (c_max < 1) throw DomainError("cusp_coefficient_partial requires c_max >= 1");
    const std::int64_t m = r.den();
    CompensatedComplexSum acc;
    for (std::int64_t c = 1; c <= c_max; ++c) {
        const std::int64_t L = lcm64(2 * c, m);
        const __int128 scale_d = L / (2 * c), scale_s = L / m;
        CompensatedComplexSum row;
        for (std::int64_t d = 0; d < 2 * c; ++d) {
            if (((c + d) & 1) == 0 || std::gcd(d, c) != 1) continue;
            row += unit_root(static_cast<__int128>(n) * d * scale_d -
                                 static_cast<__int128>(r.num()) * hardy_S_fast(d, c) * scale_s,
                             L);
        }
        acc += 0.5 * pow_c(static_cast<double>(c), -2.0 * s) * row.value();
    }
    return {r, n, s, c_max, acc.value(), dirichlet_tail(s.real(), c_max)};
}

double eisenstein_tail_bound(const EisensteinParams& p) {
    const double sigma = p.s.real();
    const double y = p.z.imag();
    const double x = std::abs(p.z.real());
    const double r = p.r.to_double();
    const double D = static_cast<double>(p.d_span);
    const double C = static_cast<double>(p.c_max);
    // Every term has modulus y^{σ-2r} |cz+d|^{-2σ}.
    const double scale = std::pow(y, sigma - 2.0 * r);

    // |d| > D c: the values |cx + d| are >= c (D - |x|) and spaced by 1.
    double d_tail = 0.0;
    const double gap = D - x;
    if (gap <= 0.0) {
        d_tail = std::numeric_limits<double>::infinity();
    } else {
        d_tail = 2.0 * std::pow(gap, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0) * zeta_bound(2.0 * sigma - 1.0) +
                 2.0 * std::pow(gap, -2.0 * sigma) * zeta_bound(2.0 * sigma);
    }

    // c > c_max, all d: Σ_d ((cx+d)² + (cy)²)^{-σ} <= 2 (cy)^{-2σ} + B (cy)^{1-2σ}.
    const double B = std::sqrt(kPi) * std::exp(std::lgamma(sigma - 0.5) - std::lgamma(sigma));
    const double c_tail = 2.0 * std::pow(y, -2.0 * sigma) * std::pow(C, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0) +
                          B * std::pow(y, 1.0 - 2.0 * sigma) * std::pow(C, 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0);
    return scale * (d_tail + c_tail);
}

EisensteinValue eisenstein_direct(const EisensteinParams& p) {
    require_convergent(p.s, "eisenstein_direct");
    require_unit_interval(p.r, "eisenstein_direct");
    if (!(p.z.imag() > 0.0)) throw DomainError("eisenstein_direct requires Im(z) > 0");
    if (p.c_max < 1 || p.d_span < 1) throw DomainError("eisenstein_direct requires c_max, d_span >= 1");

    // Pairs visited up to C: Σ_{c<=C} (2 D c + 1) = D C (C + 1) + C.
    const auto visited = [&](std::int64_t C) {
        return static_cast<unsigned __int128>(p.d_span) * C * (C + 1) + C;
    };
    std::int64_t c_eff = p.c_max;
    while (c_eff > 0 && visited(c_eff) > p.term_budget) --c_eff;

    const double x = p.z.real(), y = p.z.imag();
    const double four_r = 4.0 * p.r.to_double();
    const cplx shifted = p.s - 0.5 * four_r;  // s - 2r
    const double log_y = std::log(y);
    const std::int64_t m = p.r.den();

    std::vector<cplx> per_c(static_cast<std::size_t>(c_eff) + 1, cplx(0.0));
    parallel_for(static_cast<std::size_t>(c_eff), p.threads, [&](std::size_t idx) {
        const std::int64_t c = static_cast<std::int64_t>(idx) + 1;
        // conj ν_r = e(-r (S(d, c) - 1)), keyed by d mod 2c; -1 marks excluded residues.
        std::vector<std::int64_t> key(static_cast<std::size_t>(2 * c), -1);
        for (std::int64_t d0 = 0; d0 < 2 * c; ++d0) {
            if (((c + d0) & 1) == 0 || std::gcd(d0, c) != 1) continue;
            const __int128 k = -static_cast<__int128>(p.r.num()) * (hardy_S_fast(d0, c) - 1) % m;
            key[static_cast<std::size_t>(d0)] = static_cast<std::int64_t>(k < 0 ? k + m : k);
        }
        std::vector<cplx> roots(static_cast<std::size_t>(m));
        for (std::int64_t k = 0; k < m; ++k) roots[static_cast<std::size_t>(k)] = unit_root(k, m);

        const double cx = static_cast<double>(c) * x, cy = static_cast<double>(c) * y;
        const std::int64_t span = p.d_span * c;
        std::int64_t d0 = (-span) % (2 * c);
        if (d0 < 0) d0 += 2 * c;
        CompensatedComplexSum acc;
        for (std::int64_t d = -span; d <= span; ++d) {
            const std::int64_t k = key[static_cast<std::size_t>(d0)];
            if (++d0 == 2 * c) d0 = 0;
            if (k < 0) continue;
            const double re = cx + static_cast<double>(d);
            const double log_abs2 = std::log(re * re + cy * cy);
            const double arg = std::atan2(cy, re);
            // (cz+d)^{-4r} (y/|cz+d|^2)^{s-2r}
            const cplx expo = cplx(-0.5 * four_r * log_abs2, -four_r * arg) + shifted * (log_y - log_abs2);
            acc += roots[static_cast<std::size_t>(k)] * std::exp(expo);
        }
        per_c[idx + 1] = acc.value();
    });

    CompensatedComplexSum total;
    total += std::exp(shifted * log_y);  // identity coset
    for (std::int64_t c = 1; c <= c_eff; ++c) total += per_c[static_cast<std::size_t>(c)];

    EisensteinParams eff = p;
    eff.c_max = std::max<std::int64_t>(c_eff, 1);
    EisensteinValue out{total.value(), eisenstein_tail_bound(eff), static_cast<std::uint64_t>(visited(c_eff))};
    if (c_eff < p.c_max) {
        throw ResourceError("eisenstein_direct: term budget " + std::to_string(p.term_budget) + " stops at c = " +
                                std::to_string(c_eff) + " of " + std::to_string(p.c_max),
                            out.value, out.tail_bound);
    }
    return out;
}

namespace {

struct FourierCoefficients {
    cplx constant;                 // φ(s)
    std::vector<cplx> by_n;        // φ(n, s), index n + n_max (index n_max unused)
};

FourierCoefficients fourier_coefficients(const EisensteinParams& p, FourierConvention conv) {
    require_convergent(p.s, "eisenstein_fourier");
    require_unit_interval(p.r, "eisenstein_fourier");
    const cplx s = p.s;
    const double two_r = 2.0 * p.r.to_double();
    const std::int64_t n_max = p.n_max;
    FourierCoefficients out;
    out.by_n.assign(static_cast<std::size_t>(2 * n_max + 1), cplx(0.0));

    std::vector<cplx> series(static_cast<std::size_t>(2 * n_max + 1));
    cplx prefactor = 1.0;
    if (conv.normalization == FourierNormalization::cusp_width_two) {
        auto pts = cusp_coefficient_partials(p.r, n_max, s, p.c_max);
        for (std::size_t k = 0; k < pts.size(); ++k) series[k] = pts[k].value;
    } else {
        for (std::int64_t n = -n_max; n <= n_max; ++n)
            series[static_cast<std::size_t>(n + n_max)] = z_partial(p.r, n, s, std::max<std::int64_t>(p.c_max, 2)).value;
        prefactor = unit_root(p.r.num(), p.r.den());  // e^{2πir}
    }

    const cplx gamma_ratio = gamma_complex(2.0 * s - 1.0) / (gamma_complex(s - two_r) * gamma_complex(s + two_r));
    out.constant = kPi * pow_c(2.0, 2.0 - 2.0 * s) * gamma_ratio * prefactor * series[static_cast<std::size_t>(n_max)];

    const cplx pi_s = pow_c(kPi, s);
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
        if (n == 0) continue;
        const double sgn = n > 0 ? 1.0 : -1.0;
        const double an = static_cast<double>(std::abs(n));
        cplx coeff = pi_s * pow_c(an, s - 1.0) / gamma_complex(s + sgn * two_r) * prefactor;
        if (conv.normalization == FourierNormalization::cusp_width_two) coeff *= pow_c(2.0, 1.0 - s);
        out.by_n[static_cast<std::size_t>(n + n_max)] = coeff * series[static_cast<std::size_t>(n + n_max)];
    }
    return out;
}

}  // namespace

cplx eisenstein_constant_term(const EisensteinParams& p, FourierConvention conv) {
    EisensteinParams q = p;
    q.n_max = 0;
    const auto coeff = fourier_coefficients(q, conv);
    const double y = p.z.imag();
    const double two_r = 2.0 * p.r.to_double();
    return pow_c(y, p.s - two_r) + coeff.constant * pow_c(y, 1.0 - p.s - two_r);
}

cplx eisenstein_fourier(const EisensteinParams& p, FourierConvention conv) {
    if (!(p.z.imag() > 0.0)) throw DomainError("eisenstein_fourier requires Im(z) > 0");
    if (p.n_max < 0) throw DomainError("eisenstein_fourier requires n_max >= 0");
    const auto coeff = fourier_coefficients(p, conv);
    const double x = p.z.real(), y = p.z.imag();
    const double two_r = 2.0 * p.r.to_double();
    const cplx s = p.s;

    CompensatedComplexSum acc;
    acc += pow_c(y, s - two_r);
    acc += coeff.constant * pow_c(y, 1.0 - s - two_r);
    const double y_weight = std::pow(y, -two_r);
    for (std::int64_t n = -p.n_max; n <= p.n_max; ++n) {
        if (n == 0) continue;
        const double kappa = n > 0 ? two_r : -two_r;
        const double arg = conv.whittaker_scale * kPi * static_cast<double>(std::abs(n)) * y;
        const cplx w = whittaker_W(kappa, s - 0.5, arg);
        const cplx wave = std::exp(cplx(0.0, kPi * static_cast<double>(n) * x));
        acc += y_weight * coeff.by_n[static_cast<std::size_t>(n + p.n_max)] * w * wave;
    }
    return acc.value();
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration.
struct GaussLegendre16 {
    std::array<double, 16> x{}, w{};
    GaussLegendre16() {
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double step = p1 / dp;
                t -= step;
                if (std::abs(step) < 1e-16) {
                    x[static_cast<std::size_t>(i)] = t;
                    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
                    break;
                }
            }
        }
    }
};

}  // namespace

PerronResult perron_partial(const Rational& r, std::int64_t n, double N, double T, double alpha, std::int64_t c_max) {
    require_unit_interval(r, "perron_partial");
    if (!(alpha > 1.0)) throw DomainError("perron_partial requires alpha > 1");
    if (!(T > 0.0)) throw DomainError("perron_partial requires T > 0");
    if (!(N > 1.0) || std::floor(N) == N) throw DomainError("perron_partial requires non-integer N > 1");
    if (c_max <= 0) c_max = std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(20.0 * N)), 100);

    const auto coeff = weyl_coefficients(r, n, c_max);
    PerronResult out;
    out.c_max = c_max;
    CompensatedComplexSum exact;
    for (std::int64_t c = 2; c <= static_cast<std::int64_t>(std::floor(N)); ++c) exact += coeff[static_cast<std::size_t>(c)];
    out.exact = exact.value();

    // Largest oscillation frequency of N^{2it} c^{-2it} over the included c.
    const double omega = 2.0 * std::max(std::log(N), std::log(static_cast<double>(c_max) / N));
    const double panel = std::min(0.5, 4.0 / std::max(omega, 1e-9));
    const auto panels = static_cast<std::int64_t>(std::ceil(2.0 * T / panel));
    const double h = 2.0 * T / static_cast<double>(panels);
    static const GaussLegendre16 gl;

    std::vector<double> log_c(static_cast<std::size_t>(c_max) + 1, 0.0);
    for (std::int64_t c = 1; c <= c_max; ++c) log_c[static_cast<std::size_t>(c)] = std::log(static_cast<double>(c));
    const double log_n = std::log(N);

    CompensatedComplexSum integral;
    for (std::int64_t j = 0; j < panels; ++j) {
        const double mid = -T + (static_cast<double>(j) + 0.5) * h;
        for (std::size_t q = 0; q < 16; ++q) {
            const double t = mid + 0.5 * h * gl.x[q];
            const cplx s(alpha, t);
            cplx series = 0.0;
            for (std::int64_t c = 2; c <= c_max; ++c)
                series += coeff[static_cast<std::size_t>(c)] * std::exp(-2.0 * s * log_c[static_cast<std::size_t>(c)]);
            // ds = i dt, so (1/2πi) ds = dt / 2π.
            integral += (0.5 * h * gl.w[q] / (2.0 * kPi)) * series * std::exp(2.0 * s * log_n) / s;
        }
    }
    out.value = integral.value();
    out.nodes = panels * 16;
    out.discrepancy = std::abs(out.value - out.exact);
    return out;
}

}  // namespace hardy
