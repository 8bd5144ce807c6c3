#include "hardy/modular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/phase.hpp"
#include "hardy/sums.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

// (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
void extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& x, std::int64_t& y) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

// S(d, c) with the |c| summation limit, so S(d, c) = S(-d, |c|) for c < 0.
std::int64_t hardy_S_signed(std::int64_t d, std::int64_t c) {
    if (c < 0) return hardy_S_fast(-d, -c);
    return hardy_S_fast(d, c);
}

}  // namespace

GroupElement::GroupElement(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1) throw DomainError("group element must have determinant 1");
}

bool GroupElement::in_theta_group() const noexcept { return ((c + d) & 1) != 0 && ((a + b) & 1) != 0; }

cplx GroupElement::j(cplx z) const noexcept {
    return {static_cast<double>(c) * z.real() + static_cast<double>(d), static_cast<double>(c) * z.imag()};
}

cplx GroupElement::act(cplx z) const noexcept {
    const cplx num(static_cast<double>(a) * z.real() + static_cast<double>(b), static_cast<double>(a) * z.imag());
    return num / j(z);
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

GroupElement theta_group_element(std::int64_t c, std::int64_t d) {
    if (((c + d) & 1) == 0) throw DomainError("theta_group_element: c + d must be odd");
    std::int64_t g, x, y;
    extended_gcd(d, c, g, x, y);  // x d + y c = 1
    if (g != 1) throw DomainError("theta_group_element: gcd(c, d) != 1");
    std::int64_t a = x, b = -y;
    if (((a + b) & 1) == 0) {
        // (a, b) -> (a + c, b + d) keeps det = 1 and flips the parity of a + b.
        a += c;
        b += d;
    }
    return {a, b, c, d};
}

GroupElement random_theta_element(std::mt19937_64& rng, std::int64_t c_max) {
    std::uniform_int_distribution<std::int64_t> pick_c(1, c_max);
    for (;;) {
        const std::int64_t c = pick_c(rng);
        std::uniform_int_distribution<std::int64_t> pick_d(-2 * c, 2 * c);
        const std::int64_t d = pick_d(rng);
        if (((c + d) & 1) != 0 && std::gcd(c, d) == 1) return theta_group_element(c, d);
    }
}

cplx principal_pow(cplx w, double alpha) { return std::exp(alpha * std::log(w)); }

ThetaValue theta_series(cplx z, double tol, bool four, std::int64_t max_terms) {
    const double y = z.imag();
    if (!(y > 0.0)) throw DomainError("theta requires Im(z) > 0");
    if (!(tol > 0.0)) throw DomainError("theta requires tol > 0");

    // Smallest M with e^{-π(M+1)²y} / (1 - e^{-π(2M+3)y}) < tol, which bounds
    // Σ_{n>M} e^{-πn²y} by a geometric series.
    const double log_tol = std::log(tol);
    auto tail_ok = [&](double M) {
        const double lead = -kPi * (M + 1) * (M + 1) * y;
        const double ratio = -std::expm1(-kPi * (2 * M + 3) * y);
        return lead - std::log(ratio) < log_tol;
    };
    std::int64_t M = static_cast<std::int64_t>(std::floor(std::sqrt(-log_tol / (kPi * y))));
    M = std::max<std::int64_t>(M - 1, 0);
    while (!tail_ok(static_cast<double>(M))) {
        ++M;
        if (M > max_terms)
            throw ResourceError("theta series needs more than " + std::to_string(max_terms) + " terms at Im(z) = " +
                                std::to_string(y));
    }
    while (M > 0 && tail_ok(static_cast<double>(M - 1))) --M;

    const long double x = std::fmod(static_cast<long double>(z.real()), 2.0L);
    double re = 0.0, im = 0.0;
    // Smallest terms first.
    for (std::int64_t n = M; n >= 1; --n) {
        const long double n2 = static_cast<long double>(n) * static_cast<long double>(n);
        const long double phase = std::fmod(n2 * x, 2.0L);
        const double mag = std::exp(-kPi * static_cast<double>(n2) * y);
        const double sgn = (four && (n & 1)) ? -1.0 : 1.0;
        const double ang = kPi * static_cast<double>(phase);
        re += sgn * mag * std::cos(ang);
        im += sgn * mag * std::sin(ang);
    }
    return {cplx(1.0 + 2.0 * re, 2.0 * im), M};
}

cplx theta(cplx z, double tol) { return theta_series(z, tol, false).value; }
cplx theta4(cplx z, double tol) { return theta_series(z, tol, true).value; }

cplx nu_r(const GroupElement& g, const Rational& r) {
    if (!g.in_theta_group()) throw DomainError("nu_r: element is not in the theta group");
    if (r <= Rational(0) || r >= Rational(1)) throw DomainError("nu_r requires 0 < r < 1");
    const std::int64_t m = r.den();
    std::int64_t k;
    if (g.c != 0) {
        const std::int64_t s = hardy_S_signed(g.d, g.c);
        k = static_cast<std::int64_t>(static_cast<__int128>(r.num()) * (s - sign(g.c)) % m);
    } else {
        k = r.num() * (sign(g.d) - 1) % m;
    }
    return unit_root(k, m);
}

TransformResidual verify_theta_transform(const GroupElement& g, cplx z, double tol) {
    if (!g.in_theta_group()) throw DomainError("verify_theta_transform: element is not in the theta group");
    if (g.c <= 0) throw DomainError("verify_theta_transform requires c > 0");
    if (!(z.imag() > 0.0)) throw DomainError("verify_theta_transform requires Im(z) > 0");

    const cplx gz = g.act(z);
    const cplx root = std::sqrt(g.j(z) / cplx(0.0, 1.0));  // principal, Re > 0
    TransformResidual out;

    const std::int64_t s = hardy_S_fast(g.d, g.c);
    const cplx phase = unit_root(s, 8);  // e^{πiS/4}
    out.theta = std::abs(theta(gz, tol) - root * phase * theta(z, tol));

    if ((g.d & 1) != 0) {
        const std::int64_t s4 = hardy_S4_fast(g.d, g.c);
        const cplx phase4 = unit_root(-s4, 8);
        out.theta4 = std::abs(theta4(gz, tol) - root * phase4 * theta4(z, tol));
        out.theta4_checked = true;
    }
    return out;
}

double cocycle_check(const GroupElement& g, const GroupElement& h, cplx z, const Rational& r) {
    const GroupElement gh = g * h;
    if (!g.in_theta_group() || !h.in_theta_group() || !gh.in_theta_group())
        throw DomainError("cocycle_check: factors and product must lie in the theta group");
    if (!(z.imag() > 0.0)) throw DomainError("cocycle_check requires Im(z) > 0");
    const double w = 4.0 * r.to_double();
    const cplx lhs = nu_r(gh, r) * principal_pow(gh.j(z), w);
    const cplx rhs = nu_r(g, r) * nu_r(h, r) * principal_pow(g.j(h.act(z)), w) * principal_pow(h.j(z), w);
    return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace hardy
