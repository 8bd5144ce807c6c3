#include "hardy/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx gamma_lanczos(cplx s) {
    s -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (s + static_cast<double>(i));
    cplx t = s + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((s + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx gamma_complex(cplx s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real())
        throw DomainError("gamma pole at s = " + std::to_string(s.real()));
    if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_lanczos(1.0 - s));
    return gamma_lanczos(s);
}

cplx whittaker_W(double kappa, cplx mu, double x) {
    if (!(x > 0.0)) throw DomainError("whittaker_W requires x > 0");
    const cplx a = mu - kappa + 0.5;  // exponent of t, plus one for dt = t du'
    const cplx b = mu + kappa - 0.5;
    if (!(a.real() > 0.0)) throw DomainError("whittaker_W requires Re(mu - kappa + 1/2) > 0");

    // t = exp(π/2 sinh u); integrand in u is e^{-xt} t^a (1+t)^b (π/2) cosh u.
    auto term = [&](double u) -> cplx {
        const double log_t = 0.5 * kPi * std::sinh(u);
        const double t = std::exp(log_t);
        const cplx expo = -x * t + a * log_t + b * std::log1p(t) + std::log(0.5 * kPi * std::cosh(u));
        if (expo.real() < -745.0) return 0.0;
        return std::exp(expo);
    };

    // Window: walk outward until terms are negligible against the peak.
    double peak = 0.0;
    for (double u = -6.0; u <= 6.0; u += 0.0625) peak = std::max(peak, std::abs(term(u)));
    if (peak == 0.0) return 0.0;
    const double cutoff = peak * 1e-20;
    double lo = 0.0, hi = 0.0;
    while (lo > -12.0 && (std::abs(term(lo)) > cutoff || lo > -1.0)) lo -= 0.125;
    while (hi < 12.0 && (std::abs(term(hi)) > cutoff || hi < 1.0)) hi += 0.125;

    double h = 0.125;
    long count = std::lround((hi - lo) / h);
    cplx sum = 0.0;
    for (long k = 0; k <= count; ++k) sum += term(lo + static_cast<double>(k) * h);
    cplx integral = h * sum;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        cplx odd = 0.0;
        for (long k = 0; k < count; ++k) odd += term(lo + static_cast<double>(2 * k + 1) * h);
        count *= 2;
        sum += odd;
        cplx refined = h * sum;
        const bool done = level >= 2 && std::abs(refined - integral) <= 1e-14 * std::abs(refined);
        integral = refined;
        if (done) break;
    }
    return std::exp((mu + 0.5) * std::log(x) - 0.5 * x) / gamma_complex(a) * integral;
}

}  // namespace hardy
