#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hardy/equidist.hpp"
#include "hardy/errors.hpp"
#include "hardy/modular.hpp"
#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"
#include "hardy/sums.hpp"

namespace hardy {

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::budget: return "budget";
    }
    return "?";
}

nlohmann::json to_json(const CheckRecord& rec) {
    nlohmann::json j;
    j["suite"] = rec.suite;
    j["case"] = rec.name;
    j["status"] = to_string(rec.status);
    // NaN has no JSON spelling; a budget stop may leave no residual
    if (std::isfinite(rec.residual))
        j["residual"] = rec.residual;
    else
        j["residual"] = nullptr;
    j["tolerance"] = rec.tolerance;
    j["budget"] = rec.budget;
    j["seed"] = rec.seed;
    j["counterexamples"] = rec.counterexamples;
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"parity", "cross", "theta", "cocycle", "ramanujan", "eisenstein"};
    return names;
}

int exit_code(const std::vector<CheckRecord>& records) {
    bool budget = false;
    for (const auto& r : records) {
        if (r.status == CheckStatus::fail) return 1;
        if (r.status == CheckStatus::budget) budget = true;
    }
    return budget ? 3 : 0;
}

namespace {

std::string pair_str(std::int64_t d, std::int64_t c) {
    return "(" + std::to_string(d) + "," + std::to_string(c) + ")";
}

std::string element_str(const GroupElement& g) {
    std::ostringstream os;
    os << "(" << g.a << " " << g.b << "; " << g.c << " " << g.d << ")";
    return os.str();
}

// Collects per-c counterexample lists and merges them in ascending c.
struct RowFindings {
    std::vector<std::uint64_t> violations;
    std::vector<std::vector<std::string>> examples;

    explicit RowFindings(std::size_t n) : violations(n, 0), examples(n) {}

    void note(std::size_t i, std::string what, std::size_t cap) {
        ++violations[i];
        if (examples[i].size() < cap) examples[i].push_back(std::move(what));
    }

    void finish(CheckRecord& rec, std::size_t cap) const {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < violations.size(); ++i) {
            total += violations[i];
            for (const auto& e : examples[i])
                if (rec.counterexamples.size() < cap) rec.counterexamples.push_back(e);
        }
        rec.residual = static_cast<double>(total);
        rec.status = total == 0 ? CheckStatus::pass : CheckStatus::fail;
    }
};

std::vector<CheckRecord> suite_parity(const VerifyOptions& opt) {
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : 2000;
    std::vector<CheckRecord> out;
    for (auto cls : {ParityClass::theta, ParityClass::four}) {
        CheckRecord rec;
        rec.suite = "parity";
        rec.name = cls == ParityClass::theta ? "S odd iff c even" : "S4 odd iff c even";
        rec.budget = {{"c_max", c_max}};
        rec.seed = opt.seed;
        const auto n = static_cast<std::size_t>(std::max<std::int64_t>(c_max - 1, 0));
        RowFindings found(n);
        parallel_for(n, opt.threads, [&](std::size_t i) {
            const std::int64_t c = static_cast<std::int64_t>(i) + 2;
            const auto row = compute_row(c, cls);
            const bool want_odd = c % 2 == 0;
            for (std::size_t k = 0; k < row.d.size(); ++k)
                if (((row.value[k] & 1) != 0) != want_odd)
                    found.note(i, pair_str(row.d[k], c) + " = " + std::to_string(row.value[k]), opt.max_counterexamples);
        });
        found.finish(rec, opt.max_counterexamples);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CheckRecord> suite_cross(const VerifyOptions& opt) {
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : 2000;
    CheckRecord rec;
    rec.suite = "cross";
    rec.name = "S(c-d,c) = S4(d,c)";
    rec.budget = {{"c_max", c_max}};
    rec.seed = opt.seed;
    const auto n = static_cast<std::size_t>(std::max<std::int64_t>(c_max - 1, 0));
    RowFindings found(n);
    parallel_for(n, opt.threads, [&](std::size_t i) {
        const std::int64_t c = static_cast<std::int64_t>(i) + 2;
        const auto s_row = compute_row(c, ParityClass::theta);
        const auto s4_row = compute_row(c, ParityClass::four);
        std::vector<std::int64_t> S(static_cast<std::size_t>(c), 0);
        std::vector<char> have(static_cast<std::size_t>(c), 0);
        for (std::size_t k = 0; k < s_row.d.size(); ++k) {
            S[static_cast<std::size_t>(s_row.d[k])] = s_row.value[k];
            have[static_cast<std::size_t>(s_row.d[k])] = 1;
        }
        for (std::size_t k = 0; k < s4_row.d.size(); ++k) {
            const auto partner = static_cast<std::size_t>(c - s4_row.d[k]);
            if (!have[partner] || S[partner] != s4_row.value[k])
                found.note(i, "d=" + std::to_string(s4_row.d[k]) + " c=" + std::to_string(c), opt.max_counterexamples);
        }
    });
    found.finish(rec, opt.max_counterexamples);
    return {rec};
}

std::vector<CheckRecord> suite_theta(const VerifyOptions& opt) {
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : 40;
    const std::int64_t count = opt.count > 0 ? opt.count : 200;
    const double tol = opt.tol > 0 ? opt.tol : 1e-8;
    std::vector<CheckRecord> out;
    for (cplx z : {cplx(0.0, 1.0), cplx(0.3, 1.1)}) {
        CheckRecord rec;
        rec.suite = "theta";
        std::ostringstream name;
        name << "theta and theta4 laws at z=" << z.real() << "+" << z.imag() << "i";
        rec.name = name.str();
        rec.tolerance = tol;
        rec.budget = {{"count", count}, {"c_max", c_max}};
        rec.seed = opt.seed;
        std::mt19937_64 rng(opt.seed);
        double worst = 0.0;
        try {
            for (std::int64_t i = 0; i < count; ++i) {
                const auto g = random_theta_element(rng, c_max);
                const double res = verify_theta_transform(g, z, tol * 1e-6).max();
                worst = std::max(worst, res);
                if (!(res < tol) && rec.counterexamples.size() < opt.max_counterexamples)
                    rec.counterexamples.push_back(element_str(g));
            }
            rec.residual = worst;
            rec.status = rec.counterexamples.empty() ? CheckStatus::pass : CheckStatus::fail;
        } catch (const ResourceError& e) {
            rec.residual = worst;
            rec.status = CheckStatus::budget;
            rec.note = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CheckRecord> suite_cocycle(const VerifyOptions& opt) {
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : 40;
    const std::int64_t count = opt.count > 0 ? opt.count : 500;
    const double tol = opt.tol > 0 ? opt.tol : 1e-8;
    std::vector<Rational> rs = opt.rs;
    if (rs.empty()) rs = {Rational(1, 8), Rational(1, 3), Rational(1, 2), Rational(5, 6)};

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.8, 1.5);
    struct Sample {
        GroupElement g, h;
        cplx z;
    };
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Sample s;
        s.g = random_theta_element(rng, c_max);
        s.h = random_theta_element(rng, c_max);
        const double x = re(rng);
        s.z = {x, im(rng)};
        samples.push_back(s);
    }

    std::vector<CheckRecord> out;
    for (const auto& r : rs) {
        CheckRecord rec;
        rec.suite = "cocycle";
        rec.name = "cocycle r=" + r.str();
        rec.tolerance = tol;
        rec.budget = {{"count", count}, {"c_max", c_max}};
        rec.seed = opt.seed;
        for (const auto& s : samples) {
            const double res = cocycle_check(s.g, s.h, s.z, r);
            rec.residual = std::max(rec.residual, res);
            if (!(res < tol) && rec.counterexamples.size() < opt.max_counterexamples)
                rec.counterexamples.push_back(element_str(s.g) + " * " + element_str(s.h));
        }
        rec.status = rec.counterexamples.empty() ? CheckStatus::pass : CheckStatus::fail;
        out.push_back(std::move(rec));
    }

    CheckRecord mult;
    mult.suite = "cocycle";
    mult.name = "nu_1/2 multiplicative";
    mult.tolerance = 1e-10;
    mult.budget = {{"count", count}, {"c_max", c_max}};
    mult.seed = opt.seed;
    const Rational half(1, 2);
    for (const auto& s : samples) {
        const double res = std::abs(nu_r(s.g * s.h, half) - nu_r(s.g, half) * nu_r(s.h, half));
        mult.residual = std::max(mult.residual, res);
        if (!(res < mult.tolerance) && mult.counterexamples.size() < opt.max_counterexamples)
            mult.counterexamples.push_back(element_str(s.g) + " * " + element_str(s.h));
    }
    mult.status = mult.counterexamples.empty() ? CheckStatus::pass : CheckStatus::fail;
    out.push_back(std::move(mult));
    return out;
}

std::vector<CheckRecord> suite_ramanujan(const VerifyOptions& opt) {
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : 500;
    const std::int64_t n_range = opt.n_range;
    CheckRecord eq, bound;
    eq.suite = bound.suite = "ramanujan";
    eq.name = "von Sterneck = direct";
    bound.name = "|R_c(n)| <= |n|";
    eq.budget = bound.budget = {{"c_max", c_max}, {"n_range", n_range}};
    eq.seed = bound.seed = opt.seed;
    std::uint64_t mismatches = 0;
    double excess = 0.0;
    for (std::int64_t c = 1; c <= c_max; ++c) {
        for (std::int64_t n = -n_range; n <= n_range; ++n) {
            if (n == 0) continue;
            const auto direct = ramanujan_direct(c, n);
            const auto vs = ramanujan_von_sterneck(c, n);
            const std::string where = "c=" + std::to_string(c) + " n=" + std::to_string(n);
            if (direct != vs) {
                ++mismatches;
                if (eq.counterexamples.size() < opt.max_counterexamples)
                    eq.counterexamples.push_back(where + ": " + std::to_string(direct) + " vs " + std::to_string(vs));
            }
            const double over = static_cast<double>(std::abs(direct) - std::abs(n));
            if (over > 0) {
                excess = std::max(excess, over);
                if (bound.counterexamples.size() < opt.max_counterexamples)
                    bound.counterexamples.push_back(where + ": R=" + std::to_string(direct));
            }
        }
    }
    eq.residual = static_cast<double>(mismatches);
    eq.status = mismatches == 0 ? CheckStatus::pass : CheckStatus::fail;
    bound.residual = excess;
    bound.status = bound.counterexamples.empty() ? CheckStatus::pass : CheckStatus::fail;
    return {eq, bound};
}

std::vector<CheckRecord> suite_eisenstein(const VerifyOptions& opt) {
    EisensteinParams p;
    p.r = opt.rs.empty() ? Rational(1, 8) : opt.rs.front();
    p.s = opt.s;
    p.z = opt.z;
    p.c_max = opt.c_max > 0 ? opt.c_max : 2000;
    p.d_span = opt.d_span;
    p.n_max = opt.n_max;
    p.threads = opt.threads;
    p.term_budget = opt.term_budget;

    CheckRecord rec;
    rec.suite = "eisenstein";
    std::ostringstream name;
    name << "fourier vs direct r=" << p.r.str() << " s=" << p.s.real() << (p.s.imag() < 0 ? "" : "+") << p.s.imag()
         << "i";
    rec.name = name.str();
    rec.tolerance = opt.tol > 0 ? opt.tol : 1e-3;
    rec.budget = {{"c_max", p.c_max}, {"d_span", p.d_span}, {"n_max", p.n_max}, {"term_budget", p.term_budget}};
    rec.seed = opt.seed;

    const cplx fourier = eisenstein_fourier(p);
    try {
        const auto direct = eisenstein_direct(p);
        rec.residual = std::abs(direct.value - fourier) / std::abs(direct.value);
        rec.status = rec.residual <= rec.tolerance ? CheckStatus::pass : CheckStatus::fail;
        std::ostringstream note;
        note.precision(6);
        note << "direct tail bound " << direct.tail_bound << ", terms " << direct.terms;
        rec.note = note.str();
    } catch (const ResourceError& e) {
        rec.residual = std::abs(e.partial() - fourier) / std::abs(fourier);
        rec.status = CheckStatus::budget;
        rec.note = e.what();
    }
    return {rec};
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "parity") return suite_parity(opt);
    if (suite == "cross") return suite_cross(opt);
    if (suite == "theta") return suite_theta(opt);
    if (suite == "cocycle") return suite_cocycle(opt);
    if (suite == "ramanujan") return suite_ramanujan(opt);
    if (suite == "eisenstein") return suite_eisenstein(opt);
    throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace hardy
