#pragma once

// Weyl sums over the parity-restricted Farey fractions, Ramanujan sums,
// the Λ1/Λ2 split, and residue-class census tables for S and S4.

#include <complex>
#include <cstdint>
#include <vector>

#include "hardy/arith.hpp"
#include "hardy/compensated.hpp"
#include "hardy/rational.hpp"

namespace hardy {

enum class SumVariant { S, S4 };

const char* to_string(SumVariant v) noexcept;
SumVariant parse_variant(const std::string& text);
ParityClass class_of(SumVariant v) noexcept;

// R_c(n) = Σ_{d mod c, gcd(d,c)=1} e(nd/c), by counting residues nd mod c
// and summing the counted roots of unity.
std::int64_t ramanujan_direct(std::int64_t c, std::int64_t n);

// μ(c/(c,n)) φ(c) / φ(c/(c,n)); DomainError for n = 0.
std::int64_t ramanujan_von_sterneck(std::int64_t c, std::int64_t n);

// Running state of a Weyl sum so a series can be extended later with the
// same reduction order.
struct WeylState {
    std::int64_t last_c = 1;
    CompensatedSum re;
    CompensatedSum im;
    std::uint64_t count = 0;  // fractions summed so far
};

struct WeylSeries {
    Rational r;
    std::int64_t n = 0;
    SumVariant variant = SumVariant::S;
    std::vector<std::int64_t> checkpoints;
    std::vector<std::complex<double>> partials;
    std::vector<std::uint64_t> counts;  // Φ at each checkpoint (class size)
    std::vector<double> normalized;     // |W(N)| / count
    WeylState state;
};

struct WeylQuery {
    std::int64_t n;
    Rational r;
};

// Geometric default grid {250, 500, ..., 8000} clipped to N, plus N itself.
std::vector<std::int64_t> default_checkpoints(std::int64_t N);

// W(N) = Σ_{c<=N} Σ_{1<=d<c in class} e(-n d/c + r S(d, c)) at each
// checkpoint. Phases are reduced exactly over lcm(c, den r). Rows for
// distinct c are computed in parallel; per-c subtotals are reduced in
// ascending c, so results do not depend on `threads`.
WeylSeries weyl_sum(std::int64_t N, std::int64_t n, const Rational& r, std::vector<std::int64_t> checkpoints = {},
                    SumVariant variant = SumVariant::S, unsigned threads = 1);

// Several (n, r) at once, sharing the Hardy-sum rows.
std::vector<WeylSeries> weyl_sums(std::int64_t N, const std::vector<WeylQuery>& queries,
                                  std::vector<std::int64_t> checkpoints = {}, SumVariant variant = SumVariant::S,
                                  unsigned threads = 1);

// Continues a series from its stored state up to N (checkpoints > last_c).
void extend_weyl(WeylSeries& series, std::int64_t N, std::vector<std::int64_t> checkpoints = {}, unsigned threads = 1);

struct LambdaSplit {
    Rational lambda1;  // Σ_{c<=N/2} φ(2c)
    Rational lambda2;  // (1/2) Σ_{c<=N/2} φ(2c-1)
};

LambdaSplit lambda_split(std::int64_t N);

struct DistTable {
    std::int64_t N = 0;
    std::int64_t m = 0;
    SumVariant variant = SumVariant::S;
    std::vector<std::uint64_t> counts;  // m entries
    std::int64_t bins = 1;
    std::vector<std::uint64_t> joint;   // bins × m, row-major by bin
    std::uint64_t total = 0;

    std::uint64_t joint_at(std::int64_t bin, std::int64_t residue) const {
        return joint[static_cast<std::size_t>(bin * m + residue)];
    }
    friend bool operator==(const DistTable&, const DistTable&) = default;
};

// Residues of S (or S4) mod m over all fractions with c <= N, and a joint
// table over d/c ∈ [i/B, (i+1)/B) binned exactly in integers.
DistTable distribution_table(std::int64_t N, std::int64_t m, SumVariant variant, std::int64_t bins = 1,
                             unsigned threads = 1);

struct UniformityStats {
    double chi_square = 0.0;
    double max_rel_dev = 0.0;
    double tv_distance = 0.0;
};

UniformityStats uniformity_stats(const DistTable& t);

// max over cells of |cell · B · m / total - 1|.
double joint_max_rel_dev(const DistTable& t);

// Weyl sum for the character x -> e(j x / m) of Z/mZ: weyl_sum(N, n, j/m).
std::complex<double> character_sum(std::int64_t N, std::int64_t m, std::int64_t j, std::int64_t n,
                                   SumVariant variant = SumVariant::S, unsigned threads = 1);

}  // namespace hardy
