#include "hardy/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/parallel.hpp"
#include "hardy/phase.hpp"
#include "hardy/sums.hpp"

namespace hardy {

const char* to_string(SumVariant v) noexcept { return v == SumVariant::S ? "S" : "S4"; }

SumVariant parse_variant(const std::string& text) {
    if (text == "S" || text == "s") return SumVariant::S;
    if (text == "S4" || text == "s4") return SumVariant::S4;
    throw DomainError("unknown variant '" + text + "' (expected S or S4)");
}

ParityClass class_of(SumVariant v) noexcept { return v == SumVariant::S ? ParityClass::theta : ParityClass::four; }

std::int64_t ramanujan_direct(std::int64_t c, std::int64_t n) {
    if (c < 1) throw DomainError("ramanujan_direct requires c >= 1");
    std::vector<std::int64_t> count(static_cast<std::size_t>(c), 0);
    const std::int64_t nm = ((n % c) + c) % c;
    for (std::int64_t d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        ++count[static_cast<std::size_t>(static_cast<__int128>(nm) * d % c)];
    }
    double re = 0.0, im = 0.0;
    for (std::int64_t k = 0; k < c; ++k) {
        if (count[static_cast<std::size_t>(k)] == 0) continue;
        const auto root = unit_root(k, c);
        re += static_cast<double>(count[static_cast<std::size_t>(k)]) * root.real();
        im += static_cast<double>(count[static_cast<std::size_t>(k)]) * root.imag();
    }
    const double rounded = std::round(re);
    if (std::abs(re - rounded) > 1e-6 || std::abs(im) > 1e-6)
        throw std::logic_error("ramanujan_direct: sum is not an integer");
    return static_cast<std::int64_t>(rounded);
}

std::int64_t ramanujan_von_sterneck(std::int64_t c, std::int64_t n) {
    if (c < 1) throw DomainError("ramanujan_von_sterneck requires c >= 1");
    if (n == 0) throw DomainError("ramanujan_von_sterneck requires n != 0; use ramanujan_direct");
    const std::int64_t g = std::gcd(c, n < 0 ? -n : n);
    const auto q = static_cast<std::uint64_t>(c / g);
    const auto phi_c = totient(static_cast<std::uint64_t>(c));
    return mobius(q) * static_cast<std::int64_t>(phi_c / totient(q));
}

std::vector<std::int64_t> default_checkpoints(std::int64_t N) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 250; v <= 8000 && v < N; v *= 2) out.push_back(v);
    out.push_back(N);
    return out;
}

namespace {

std::vector<std::int64_t> normalize_checkpoints(std::vector<std::int64_t> cps, std::int64_t lo, std::int64_t N) {
    if (cps.empty()) cps = default_checkpoints(N);
    std::vector<std::int64_t> out;
    for (auto v : cps)
        if (v > lo && v <= N) out.push_back(v);
    out.push_back(N);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_query(const Rational& r) {
    if (r <= Rational(0) || r >= Rational(1)) throw DomainError("weyl_sum requires 0 < r < 1");
}

// Advances every series from c = state.last_c + 1 through N.
void run_weyl(std::vector<WeylSeries>& series, std::int64_t N, const std::vector<std::int64_t>& checkpoints,
              unsigned threads) {
    if (series.empty()) return;
    const std::int64_t c0 = series.front().state.last_c + 1;
    const SumVariant variant = series.front().variant;
    const std::size_t Q = series.size();
    if (N < c0) return;
    const auto span = static_cast<std::size_t>(N - c0 + 1);

    std::vector<std::complex<double>> sub(span * Q);
    std::vector<std::uint64_t> sizes(span, 0);
    parallel_for(span, threads, [&](std::size_t idx) {
        const std::int64_t c = c0 + static_cast<std::int64_t>(idx);
        if (c < 2) return;
        const HardyRow row = compute_row(c, class_of(variant));
        sizes[idx] = row.d.size();
        for (std::size_t q = 0; q < Q; ++q) {
            const Rational& r = series[q].r;
            const std::int64_t L = lcm64(c, r.den());
            const __int128 scale_d = L / c, scale_s = L / r.den();
            const __int128 n = series[q].n;
            CompensatedComplexSum acc;
            for (std::size_t i = 0; i < row.d.size(); ++i)
                acc += unit_root(-n * row.d[i] * scale_d + static_cast<__int128>(r.num()) * row.value[i] * scale_s, L);
            sub[idx * Q + q] = acc.value();
        }
    });

    std::size_t next_cp = 0;
    for (std::size_t idx = 0; idx < span; ++idx) {
        const std::int64_t c = c0 + static_cast<std::int64_t>(idx);
        for (std::size_t q = 0; q < Q; ++q) {
            WeylState& st = series[q].state;
            st.re += sub[idx * Q + q].real();
            st.im += sub[idx * Q + q].imag();
            st.count += sizes[idx];
            st.last_c = c;
        }
        if (next_cp < checkpoints.size() && checkpoints[next_cp] == c) {
            for (auto& s : series) {
                const std::complex<double> w(s.state.re.value(), s.state.im.value());
                s.checkpoints.push_back(c);
                s.partials.push_back(w);
                s.counts.push_back(s.state.count);
                s.normalized.push_back(s.state.count ? std::abs(w) / static_cast<double>(s.state.count) : 0.0);
            }
            ++next_cp;
        }
    }
}

}  // namespace

std::vector<WeylSeries> weyl_sums(std::int64_t N, const std::vector<WeylQuery>& queries,
                                  std::vector<std::int64_t> checkpoints, SumVariant variant, unsigned threads) {
    if (N < 2) throw DomainError("weyl_sum requires N >= 2");
    std::vector<WeylSeries> series;
    series.reserve(queries.size());
    for (const auto& q : queries) {
        check_query(q.r);
        WeylSeries s;
        s.r = q.r;
        s.n = q.n;
        s.variant = variant;
        series.push_back(std::move(s));
    }
    run_weyl(series, N, normalize_checkpoints(std::move(checkpoints), 1, N), threads);
    return series;
}

WeylSeries weyl_sum(std::int64_t N, std::int64_t n, const Rational& r, std::vector<std::int64_t> checkpoints,
                    SumVariant variant, unsigned threads) {
    return std::move(weyl_sums(N, {{n, r}}, std::move(checkpoints), variant, threads).front());
}

void extend_weyl(WeylSeries& series, std::int64_t N, std::vector<std::int64_t> checkpoints, unsigned threads) {
    if (N <= series.state.last_c) return;
    std::vector<WeylSeries> one;
    one.push_back(std::move(series));
    run_weyl(one, N, normalize_checkpoints(std::move(checkpoints), one.front().state.last_c, N), threads);
    series = std::move(one.front());
}

LambdaSplit lambda_split(std::int64_t N) {
    if (N < 1) throw DomainError("lambda_split requires N >= 1");
    const SieveTables sieve(static_cast<std::uint64_t>(N));
    std::int64_t even = 0, odd = 0;
    for (std::int64_t c = 1; c <= N / 2; ++c) {
        even += static_cast<std::int64_t>(sieve.totient(static_cast<std::uint64_t>(2 * c)));
        odd += static_cast<std::int64_t>(sieve.totient(static_cast<std::uint64_t>(2 * c - 1)));
    }
    return {Rational(even), Rational(odd, 2)};
}

DistTable distribution_table(std::int64_t N, std::int64_t m, SumVariant variant, std::int64_t bins, unsigned threads) {
    if (N < 2) throw DomainError("distribution_table requires N >= 2");
    if (m < 2) throw DomainError("distribution_table requires m >= 2");
    if (bins < 1) throw DomainError("distribution_table requires bins >= 1");
    DistTable t;
    t.N = N;
    t.m = m;
    t.variant = variant;
    t.bins = bins;
    t.counts.assign(static_cast<std::size_t>(m), 0);
    t.joint.assign(static_cast<std::size_t>(bins * m), 0);

    constexpr std::int64_t kBlock = 16;
    const auto blocks = static_cast<std::size_t>((N - 2) / kBlock + 1);
    std::vector<std::vector<std::uint64_t>> partial(blocks);
    parallel_for(blocks, threads, [&](std::size_t b) {
        auto& joint = partial[b];
        joint.assign(static_cast<std::size_t>(bins * m), 0);
        const std::int64_t lo = 2 + static_cast<std::int64_t>(b) * kBlock;
        const std::int64_t hi = std::min(N, lo + kBlock - 1);
        for (std::int64_t c = lo; c <= hi; ++c) {
            const HardyRow row = compute_row(c, class_of(variant));
            for (std::size_t i = 0; i < row.d.size(); ++i) {
                const std::int64_t res = ((row.value[i] % m) + m) % m;
                const std::int64_t bin = bins * row.d[i] / c;  // d/c in [bin/B, (bin+1)/B)
                ++joint[static_cast<std::size_t>(bin * m + res)];
            }
        }
    });
    for (const auto& joint : partial)
        for (std::size_t k = 0; k < joint.size(); ++k) t.joint[k] += joint[k];
    for (std::int64_t b = 0; b < bins; ++b)
        for (std::int64_t res = 0; res < m; ++res) t.counts[static_cast<std::size_t>(res)] += t.joint_at(b, res);
    t.total = std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0});
    return t;
}

UniformityStats uniformity_stats(const DistTable& t) {
    if (t.total == 0) throw DomainError("uniformity_stats requires a non-empty table");
    const double total = static_cast<double>(t.total);
    const double m = static_cast<double>(t.counts.size());
    const double expected = total / m;
    UniformityStats st;
    double tv = 0.0;
    for (auto cnt : t.counts) {
        const double c = static_cast<double>(cnt);
        st.chi_square += (c - expected) * (c - expected) / expected;
        st.max_rel_dev = std::max(st.max_rel_dev, std::abs(c * m / total - 1.0));
        tv += std::abs(c / total - 1.0 / m);
    }
    st.tv_distance = 0.5 * tv;
    return st;
}

double joint_max_rel_dev(const DistTable& t) {
    if (t.total == 0) throw DomainError("joint_max_rel_dev requires a non-empty table");
    const double cells = static_cast<double>(t.bins * t.m);
    double worst = 0.0;
    for (auto cnt : t.joint)
        worst = std::max(worst, std::abs(static_cast<double>(cnt) * cells / static_cast<double>(t.total) - 1.0));
    return worst;
}

std::complex<double> character_sum(std::int64_t N, std::int64_t m, std::int64_t j, std::int64_t n, SumVariant variant,
                                   unsigned threads) {
    if (m < 2) throw DomainError("character_sum requires m >= 2");
    const std::int64_t jm = ((j % m) + m) % m;
    if (jm == 0) throw DomainError("character_sum: j = 0 mod m is the trivial character");
    return weyl_sum(N, n, Rational(jm, m), {N}, variant, threads).partials.back();
}

}  // namespace hardy
