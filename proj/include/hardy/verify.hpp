#pragma once

// Invariant suites behind `hardy verify`. Each suite returns one record per
// check; records serialize to one JSON object per line.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/rational.hpp"
#include "hardy/special.hpp"

namespace hardy {

enum class CheckStatus { pass, fail, budget };

const char* to_string(CheckStatus s) noexcept;

struct CheckRecord {
    std::string suite;
    std::string name;  // "case" in the JSON
    CheckStatus status = CheckStatus::pass;
    double residual = 0.0;
    double tolerance = 0.0;
    nlohmann::json budget = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<std::string> counterexamples;
    std::string note;
};

nlohmann::json to_json(const CheckRecord& rec);

struct VerifyOptions {
    std::int64_t c_max = 0;   // 0: suite default (2000 parity/cross, 40 theta/cocycle, 500 ramanujan)
    std::int64_t count = 0;   // 0: 200 theta elements, 500 cocycle pairs
    std::int64_t n_range = 20;
    std::uint64_t seed = 20240611;
    double tol = 0.0;         // 0: suite default
    std::vector<Rational> rs; // cocycle r values; eisenstein uses the first
    cplx s{2.0, 0.5};
    cplx z{0.2, 1.0};
    std::int64_t d_span = 50;
    std::int64_t n_max = 8;
    std::uint64_t term_budget = 2'000'000'000;
    std::size_t max_counterexamples = 10;
    unsigned threads = 1;
};

const std::vector<std::string>& suite_names();

// DomainError for an unknown suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyOptions& opt);

// 1 if any check failed, else 3 if any ran out of budget, else 0.
int exit_code(const std::vector<CheckRecord>& records);

}  // namespace hardy
