#include "hardy/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::string pair_str(std::int64_t d, std::int64_t c) { return "(" + std::to_string(d) + "," + std::to_string(c) + ")"; }

void require_positive_c(std::int64_t c, const char* what) {
    if (c < 1) throw DomainError(std::string(what) + ": c must be >= 1 (got " + std::to_string(c) + ")");
}

// Returns d reduced into [0, 2c) after checking the Hardy-sum domain.
std::int64_t checked_hardy_d(std::int64_t d, std::int64_t c, ParityClass cls) {
    const char* name = cls == ParityClass::theta ? "S" : "S4";
    require_positive_c(c, name);
    if (c > (std::int64_t{1} << 40)) throw DomainError(std::string(name) + ": c too large");
    std::int64_t r = mod_positive(d, 2 * c);
    if (std::gcd(r, c) != 1) throw DomainError(std::string(name) + pair_str(d, c) + ": gcd(d, c) != 1");
    if (!in_class(r, c, cls)) {
        throw DomainError(std::string(name) + pair_str(d, c) +
                          (cls == ParityClass::theta ? ": c + d must be odd" : ": d must be odd"));
    }
    return r;
}

// Σ_{k=1}^{c-1} (-1)^{floor(dk/c)} with a running remainder.
std::int64_t s4_direct(std::int64_t d, std::int64_t c) {
    std::int64_t rem = 0, quot = 0, acc = 0;
    for (std::int64_t k = 1; k < c; ++k) {
        rem += d;
        quot += rem / c;
        rem %= c;
        acc += (quot & 1) ? -1 : 1;
    }
    return acc;
}

std::int64_t s4_floor(std::int64_t d, std::int64_t c) {
    __int128 f1 = floor_sum(c, c, d, 0);
    __int128 f2 = floor_sum(c, 2 * c, d, 0);
    return static_cast<std::int64_t>((c - 1) - 2 * f1 + 4 * f2);
}

}  // namespace

__int128 floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
    __int128 ans = 0;
    __int128 nn = n, mm = m, aa = a, bb = b;
    for (;;) {
        if (aa >= mm) {
            ans += (nn - 1) * nn / 2 * (aa / mm);
            aa %= mm;
        }
        if (bb >= mm) {
            ans += nn * (bb / mm);
            bb %= mm;
        }
        __int128 y_max = aa * nn + bb;
        if (y_max < mm) break;
        nn = y_max / mm;
        bb = y_max % mm;
        std::swap(mm, aa);
    }
    return ans;
}

Rational dedekind_sum(std::int64_t d, std::int64_t c) {
    require_positive_c(c, "dedekind_sum");
    std::int64_t r = mod_positive(d, c);
    if (std::gcd(r, c) != 1) throw DomainError("dedekind_sum" + pair_str(d, c) + ": gcd(d, c) != 1");
    // ((k/c))((dk/c)) = (2k - c)(2 r_k - c) / (4c^2) for 0 < k < c.
    __int128 acc = 0;
    std::int64_t rk = 0;
    for (std::int64_t k = 1; k < c; ++k) {
        rk += r;
        if (rk >= c) rk -= c;
        acc += static_cast<__int128>(2 * k - c) * (2 * rk - c);
    }
    __int128 den = static_cast<__int128>(4) * c * c;
    // Reduce in 128 bits first; the reduced pair always fits.
    __int128 a = acc < 0 ? -acc : acc, b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(acc / a), static_cast<std::int64_t>(den / a));
}

double dedekind_sum_cotangent(std::int64_t d, std::int64_t c) {
    require_positive_c(c, "dedekind_sum_cotangent");
    if (std::gcd(mod_positive(d, c), c) != 1)
        throw DomainError("dedekind_sum_cotangent" + pair_str(d, c) + ": gcd(d, c) != 1");
    const double pi = std::numbers::pi;
    double acc = 0.0;
    for (std::int64_t k = 1; k < c; ++k) {
        double kd = static_cast<double>(mod_positive(k * mod_positive(d, c), c));
        acc += 1.0 / (std::tan(pi * static_cast<double>(k) / c) * std::tan(pi * kd / c));
    }
    return acc / (4.0 * static_cast<double>(c));
}

std::int64_t hardy_S(std::int64_t d, std::int64_t c) {
    std::int64_t r = checked_hardy_d(d, c, ParityClass::theta);
    // (-1)^{k+1+floor(rk/c)} = -(-1)^{floor((r+c)k/c)}
    return -s4_direct(mod_positive(r + c, 2 * c), c);
}

std::int64_t hardy_S4(std::int64_t d, std::int64_t c) {
    return s4_direct(checked_hardy_d(d, c, ParityClass::four), c);
}

std::int64_t hardy_S_fast(std::int64_t d, std::int64_t c) {
    std::int64_t r = checked_hardy_d(d, c, ParityClass::theta);
    return -s4_floor(mod_positive(r + c, 2 * c), c);
}

std::int64_t hardy_S4_fast(std::int64_t d, std::int64_t c) {
    return s4_floor(checked_hardy_d(d, c, ParityClass::four), c);
}

namespace {

struct RowSums {
    std::vector<std::int32_t> d;
    std::vector<std::int32_t> s;
    std::vector<std::int32_t> s4;
};

// Both sums for every d in `ds` (1 <= d < c) in one pass over k. Lanes are
// independent, so the inner loop vectorizes.
void row_kernel(std::int32_t c, const std::vector<std::int32_t>& ds, std::vector<std::int32_t>& s_out,
                std::vector<std::int32_t>& s4_out) {
    constexpr std::size_t kBlock = 512;
    const std::size_t n = ds.size();
    s_out.assign(n, 0);
    s4_out.assign(n, 0);
    std::int32_t rem[kBlock], par[kBlock], acc_s[kBlock], acc_4[kBlock], step[kBlock];
    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t len = std::min(kBlock, n - base);
        for (std::size_t i = 0; i < len; ++i) {
            step[i] = ds[base + i];
            rem[i] = 0;
            par[i] = 0;
            acc_s[i] = 0;
            acc_4[i] = 0;
        }
        for (std::int32_t k = 1; k < c; ++k) {
            const std::int32_t sign_k = (k & 1) ? 1 : -1;  // (-1)^{k+1}
            for (std::size_t i = 0; i < len; ++i) {
                std::int32_t r = rem[i] + step[i];
                std::int32_t wrap = r >= c;
                rem[i] = r - (c & -wrap);
                par[i] ^= wrap;
                std::int32_t t = 1 - 2 * par[i];
                acc_4[i] += t;
                acc_s[i] += sign_k * t;
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            s_out[base + i] = acc_s[i];
            s4_out[base + i] = acc_4[i];
        }
    }
}

RowSums row_sums(std::int64_t c, ParityClass cls) {
    if (c < 2) throw DomainError("batch_row requires c >= 2");
    if (c >= (std::int64_t{1} << 30)) throw DomainError("batch_row requires c < 2^30");
    RowSums out;
    for (std::int64_t d = 1; d < c; ++d)
        if (in_class(d, c, cls) && std::gcd(d, c) == 1) out.d.push_back(static_cast<std::int32_t>(d));
    row_kernel(static_cast<std::int32_t>(c), out.d, out.s, out.s4);
    return out;
}

}  // namespace

HardyRow compute_row(std::int64_t c, ParityClass cls) {
    RowSums sums = row_sums(c, cls);
    HardyRow row;
    row.c = c;
    row.parity_class = cls;
    row.d = std::move(sums.d);
    row.value = (cls == ParityClass::theta) ? std::move(sums.s) : std::move(sums.s4);
    return row;
}

std::vector<HardyRecord> batch_row(std::int64_t c, ParityClass cls) {
    RowSums sums = row_sums(c, cls);
    std::vector<HardyRecord> out;
    out.reserve(sums.d.size());
    for (std::size_t i = 0; i < sums.d.size(); ++i) {
        HardyRecord rec{sums.d[i], c, std::nullopt, std::nullopt};
        if (in_class(sums.d[i], c, ParityClass::theta)) rec.S = sums.s[i];
        if (in_class(sums.d[i], c, ParityClass::four)) rec.S4 = sums.s4[i];
        out.push_back(rec);
    }
    return out;
}

}  // namespace hardy
