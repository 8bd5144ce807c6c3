#pragma once

// Dedekind sums and the Hardy sums S, S4.
//
//   s(d, c)  = Σ_{k=1}^{c-1} ((k/c)) ((dk/c))               gcd(d, c) = 1
//   S(d, c)  = Σ_{k=1}^{c-1} (-1)^{k + 1 + floor(dk/c)}      c + d odd
//   S4(d, c) = Σ_{k=1}^{c-1} (-1)^{floor(dk/c)}              d odd
//
// S and S4 have period 2c in d (not c): S(d + c, c) = -S4(d, c). Inputs are
// reduced into [0, 2c) before the parity test. Only c >= 1 is accepted.

#include <cstdint>
#include <optional>
#include <vector>

#include "hardy/arith.hpp"
#include "hardy/rational.hpp"

namespace hardy {

struct HardyRecord {
    std::int64_t d;
    std::int64_t c;
    std::optional<std::int64_t> S;
    std::optional<std::int64_t> S4;
};

// Exact s(d, c) from the sawtooth form. DomainError unless c >= 1 and gcd(d, c) = 1.
Rational dedekind_sum(std::int64_t d, std::int64_t c);

// The cotangent sum (1/4c) Σ cot(πk/c) cot(πkd/c) in double precision.
double dedekind_sum_cotangent(std::int64_t d, std::int64_t c);

// Direct O(c) evaluation; the reference semantics.
std::int64_t hardy_S(std::int64_t d, std::int64_t c);
std::int64_t hardy_S4(std::int64_t d, std::int64_t c);

// O(log c) evaluation through floor sums:
//   S4(d, c) = (c - 1) - 2 Σ floor(dk/c) + 4 Σ floor(dk/2c),
//   S(d, c)  = -S4(d + c, c).
// Same domain checks as the direct versions.
std::int64_t hardy_S_fast(std::int64_t d, std::int64_t c);
std::int64_t hardy_S4_fast(std::int64_t d, std::int64_t c);

// Σ_{i=0}^{n-1} floor((a i + b) / m) for n, m >= 1, a, b >= 0.
__int128 floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b);

// One denominator's worth of sums: d[i] runs over the class in ascending
// order, value[i] is S(d[i], c) for the theta class and S4(d[i], c) for four.
struct HardyRow {
    std::int64_t c = 0;
    ParityClass parity_class = ParityClass::theta;
    std::vector<std::int32_t> d;
    std::vector<std::int32_t> value;
};

// Incremental-remainder evaluation of a full row (one add and one compare
// per inner step). Requires 2 <= c < 2^30.
HardyRow compute_row(std::int64_t c, ParityClass cls);

// compute_row as records; the other sum is filled in wherever it is defined.
std::vector<HardyRecord> batch_row(std::int64_t c, ParityClass cls);

}  // namespace hardy
