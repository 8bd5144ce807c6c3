#include "hardy/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardy/arith.hpp"
#include "hardy/errors.hpp"
#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"
#include "hardy/sums.hpp"
#include "hardy/verify.hpp"

namespace hardy {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, std::size_t& pos) {
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) throw DomainError("malformed number in '" + text + "'");
    pos += static_cast<std::size_t>(end - begin);
    return v;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw DomainError("config line " + std::to_string(lineno) + ": empty key");
        for (auto& ch : key)
            if (ch == '_') ch = '-';
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

std::int64_t parse_int(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw DomainError("expected an integer, got ''");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw DomainError("expected an integer, got '" + text + "'");
    for (std::size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') throw DomainError("expected an integer, got '" + text + "'");
    errno = 0;
    const long long v = std::strtoll(t.c_str(), nullptr, 10);
    if (errno == ERANGE) throw DomainError("integer out of range: '" + text + "'");
    return v;
}

Rational parse_ratio(const std::string& text) {
    const std::string t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string::npos) throw DomainError("r must be given as j/m, got '" + text + "'");
    return Rational(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
}

cplx parse_complex(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t.empty()) throw DomainError("empty complex number");
    auto imag_unit = [&](std::size_t pos) { return pos + 1 == t.size() && (t[pos] == 'i' || t[pos] == 'j'); };
    // bare "i", "+i", "-i"
    if (t == "i" || t == "+i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    std::size_t pos = 0;
    const double first = parse_real(t, pos);
    if (pos == t.size()) return {first, 0.0};
    if (imag_unit(pos)) return {0.0, first};
    if (t[pos] != '+' && t[pos] != '-') throw DomainError("malformed complex number '" + text + "'");
    double second;
    if (t.compare(pos, std::string::npos, "+i") == 0 || t.compare(pos, std::string::npos, "-i") == 0) {
        second = t[pos] == '-' ? -1.0 : 1.0;
        pos += 1;
    } else {
        second = parse_real(t, pos);
    }
    if (!imag_unit(pos)) throw DomainError("malformed complex number '" + text + "'");
    return {first, second};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(parse_int(item));
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json dist_to_json(const DistTable& t) {
    nlohmann::json j;
    j["N"] = t.N;
    j["m"] = t.m;
    j["variant"] = to_string(t.variant);
    j["total"] = t.total;
    j["counts"] = t.counts;
    j["bins"] = t.bins;
    auto rows = nlohmann::json::array();
    for (std::int64_t b = 0; b < t.bins; ++b) {
        auto row = nlohmann::json::array();
        for (std::int64_t r = 0; r < t.m; ++r) row.push_back(t.joint_at(b, r));
        rows.push_back(std::move(row));
    }
    j["joint"] = std::move(rows);
    const auto st = uniformity_stats(t);
    j["stats"] = {{"chi_square", st.chi_square}, {"max_rel_dev", st.max_rel_dev}, {"tv_distance", st.tv_distance}};
    return j;
}

DistTable dist_from_json(const nlohmann::json& j) {
    DistTable t;
    t.N = j.at("N").get<std::int64_t>();
    t.m = j.at("m").get<std::int64_t>();
    t.variant = parse_variant(j.at("variant").get<std::string>());
    t.total = j.at("total").get<std::uint64_t>();
    t.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    t.bins = j.at("bins").get<std::int64_t>();
    for (const auto& row : j.at("joint"))
        for (const auto& cell : row) t.joint.push_back(cell.get<std::uint64_t>());
    if (static_cast<std::int64_t>(t.counts.size()) != t.m ||
        static_cast<std::int64_t>(t.joint.size()) != t.bins * t.m)
        throw DomainError("distribution table JSON has inconsistent dimensions");
    return t;
}

namespace {

struct SumArgs {
    std::string which, d, c;
};

struct WeylArgs {
    std::string N, n = "0", j, m, checkpoints, variant = "S";
};

struct DistArgs {
    std::string N, m, variant = "S", bins = "1", format = "csv";
};

struct PerronArgs {
    std::string r, n = "0", N, T = "200", alpha = "1.25", cmax = "0";
};

struct VerifyArgs {
    std::string suite, cmax, count, seed, tol, r, s, z, n_max, d_span, budget, n_range;
};

int cmd_sum(const SumArgs& a, std::ostream& out) {
    const std::int64_t d = parse_int(a.d);
    const std::int64_t c = parse_int(a.c);
    const std::string args = "(" + std::to_string(d) + "," + std::to_string(c) + ")";
    if (a.which == "dedekind") {
        const Rational v = dedekind_sum(d, c);
        out << "s" << args << " = " << v.str() << "\n";
        out << "gcd(d,c) = 1\n";
        return exit_ok;
    }
    const bool four = a.which == "S4";
    if (!four && a.which != "S") throw DomainError("unknown sum '" + a.which + "' (expected dedekind, S or S4)");
    const std::int64_t v = four ? hardy_S4_fast(d, c) : hardy_S_fast(d, c);
    out << (four ? "S4" : "S") << args << " = " << v << "\n";
    const std::int64_t dr = ((d % (2 * c)) + 2 * c) % (2 * c);
    out << "class " << (four ? "four (d odd)" : "theta (c+d odd)") << ", d mod 2c = " << dr << ", value "
        << ((v & 1) ? "odd" : "even") << ", c " << (c % 2 == 0 ? "even" : "odd") << "\n";
    return exit_ok;
}

int cmd_weyl(const WeylArgs& a, unsigned threads, std::ostream& out) {
    const std::int64_t N = parse_int(a.N);
    const std::int64_t n = parse_int(a.n);
    const std::int64_t j = parse_int(a.j);
    const std::int64_t m = parse_int(a.m);
    if (m < 2) throw DomainError("--m must be >= 2");
    const auto cps = parse_int_list(a.checkpoints);
    const auto series = weyl_sum(N, n, Rational(j, m), cps, parse_variant(a.variant), threads);
    out << "N,re,im,abs,phi_theta,ratio\n";
    for (std::size_t k = 0; k < series.checkpoints.size(); ++k) {
        const auto w = series.partials[k];
        const double abs = std::abs(w);
        const auto count = series.counts[k];
        out << series.checkpoints[k] << "," << format_double(w.real()) << "," << format_double(w.imag()) << ","
            << format_double(abs) << "," << count << "," << format_double(abs / static_cast<double>(count)) << "\n";
    }
    return exit_ok;
}

int cmd_dist(const DistArgs& a, unsigned threads, std::ostream& out) {
    const auto t = distribution_table(parse_int(a.N), parse_int(a.m), parse_variant(a.variant), parse_int(a.bins),
                                      threads);
    if (a.format == "json") {
        out << dist_to_json(t).dump() << "\n";
        return exit_ok;
    }
    if (a.format != "csv") throw DomainError("unknown format '" + a.format + "' (expected csv or json)");
    out << "bin,residue,count\n";
    for (std::int64_t r = 0; r < t.m; ++r) out << "all," << r << "," << t.counts[static_cast<std::size_t>(r)] << "\n";
    if (t.bins > 1)
        for (std::int64_t b = 0; b < t.bins; ++b)
            for (std::int64_t r = 0; r < t.m; ++r) out << b << "," << r << "," << t.joint_at(b, r) << "\n";
    return exit_ok;
}

int cmd_perron(const PerronArgs& a, std::ostream& out) {
    std::size_t pos = 0;
    const double N = parse_real(a.N, pos);
    pos = 0;
    const double T = parse_real(a.T, pos);
    pos = 0;
    const double alpha = parse_real(a.alpha, pos);
    const auto res = perron_partial(parse_ratio(a.r), parse_int(a.n), N, T, alpha, parse_int(a.cmax));
    out << "N,T,alpha,re,im,exact_re,exact_im,discrepancy\n";
    out << format_double(N) << "," << format_double(T) << "," << format_double(alpha) << ","
        << format_double(res.value.real()) << "," << format_double(res.value.imag()) << ","
        << format_double(res.exact.real()) << "," << format_double(res.exact.imag()) << ","
        << format_double(res.discrepancy) << "\n";
    return exit_ok;
}

int cmd_verify(const VerifyArgs& a, unsigned threads, std::ostream& out) {
    VerifyOptions opt;
    opt.threads = threads;
    if (!a.cmax.empty()) opt.c_max = parse_int(a.cmax);
    if (!a.count.empty()) opt.count = parse_int(a.count);
    if (!a.seed.empty()) opt.seed = static_cast<std::uint64_t>(parse_int(a.seed));
    if (!a.tol.empty()) {
        std::size_t pos = 0;
        opt.tol = parse_real(a.tol, pos);
        if (pos != a.tol.size()) throw DomainError("malformed tolerance '" + a.tol + "'");
    }
    if (!a.r.empty()) {
        std::stringstream ss(a.r);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!trim(item).empty()) opt.rs.push_back(parse_ratio(item));
    }
    if (!a.s.empty()) opt.s = parse_complex(a.s);
    if (!a.z.empty()) opt.z = parse_complex(a.z);
    if (!a.n_max.empty()) opt.n_max = parse_int(a.n_max);
    if (!a.d_span.empty()) opt.d_span = parse_int(a.d_span);
    if (!a.budget.empty()) opt.term_budget = static_cast<std::uint64_t>(parse_int(a.budget));
    if (!a.n_range.empty()) opt.n_range = parse_int(a.n_range);
    const auto records = run_suite(a.suite, opt);
    for (const auto& rec : records) out << to_json(rec).dump() << "\n";
    return exit_code(records);
}

// Turns config entries into flags placed ahead of the user's own flags, so
// that the command line wins (every option keeps the last value given).
std::vector<std::string> splice_config(const std::vector<std::string>& args, const CLI::App& app) {
    std::vector<std::string> rest;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config", 1, 0);
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file '" + path + "'");
    const auto entries = read_config(in);

    std::size_t sub_at = rest.size();
    const CLI::App* sub = nullptr;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!rest[i].empty() && rest[i][0] != '-') {
            try {
                sub = app.get_subcommand(rest[i]);
                sub_at = i;
            } catch (const CLI::OptionNotFound&) {
            }
            break;
        }
    }
    std::vector<std::string> global, local;
    for (const auto& [key, value] : entries) {
        const std::string flag = "--" + key;
        if (sub && sub->get_option_no_throw(flag)) {
            local.push_back(flag);
            local.push_back(value);
            continue;
        }
        if (app.get_option_no_throw(flag)) {
            global.push_back(flag);
            global.push_back(value);
            continue;
        }
        bool known = false;
        for (const auto* other : app.get_subcommands([](const CLI::App*) { return true; }))
            if (other->get_option_no_throw(flag)) known = true;
        if (!known) throw DomainError("unknown config key '" + key + "'");
    }
    std::vector<std::string> out = global;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        out.push_back(rest[i]);
        if (i == sub_at) out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardy sums, theta multipliers and Weyl-sum sweeps", "hardy"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = default_threads();
    std::string output;
    std::string config_path;
    app.add_option("--threads", threads, "worker threads (default: HARDY_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", output, "write results to this file instead of stdout");
    app.add_option("--config", config_path, "flat key = value file; command-line flags override it");

    SumArgs sa;
    auto* sum = app.add_subcommand("sum", "exact Dedekind or Hardy sum");
    sum->add_option("which", sa.which, "dedekind, S or S4")->required();
    sum->add_option("d", sa.d)->required();
    sum->add_option("c", sa.c)->required();

    WeylArgs wa;
    auto* weyl = app.add_subcommand("weyl", "Weyl sums W(N; n, j/m) as CSV");
    weyl->add_option("--N", wa.N)->required();
    weyl->add_option("--n", wa.n);
    weyl->add_option("--j", wa.j)->required();
    weyl->add_option("--m", wa.m)->required();
    weyl->add_option("--checkpoints", wa.checkpoints, "comma-separated N values");
    weyl->add_option("--variant", wa.variant, "S or S4");

    DistArgs da;
    auto* dist = app.add_subcommand("dist", "residues of S or S4 mod m");
    dist->add_option("--N", da.N)->required();
    dist->add_option("--m", da.m)->required();
    dist->add_option("--variant", da.variant, "S or S4");
    dist->add_option("--bins", da.bins, "d/c bins for the joint table");
    dist->add_option("--format", da.format, "csv or json");

    PerronArgs pa;
    auto* perron = app.add_subcommand("perron", "Perron-integral diagnostic for the Weyl partial sum");
    perron->add_option("--r", pa.r, "j/m")->required();
    perron->add_option("--n", pa.n);
    perron->add_option("--N", pa.N, "non-integer cutoff")->required();
    perron->add_option("--T", pa.T);
    perron->add_option("--alpha", pa.alpha);
    perron->add_option("--cmax", pa.cmax);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run an invariant suite, one JSON line per check");
    verify->add_option("suite", va.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--cmax", va.cmax);
    verify->add_option("--count", va.count);
    verify->add_option("--seed", va.seed);
    verify->add_option("--tol", va.tol);
    verify->add_option("--r", va.r, "j/m, or a comma-separated list");
    verify->add_option("--s", va.s, "complex, e.g. 2+0.5i");
    verify->add_option("--z", va.z, "complex, e.g. 0.2+1i");
    verify->add_option("--n-max", va.n_max);
    verify->add_option("--d-span", va.d_span);
    verify->add_option("--budget", va.budget, "term budget for the direct Eisenstein sum");
    verify->add_option("--n-range", va.n_range);

    try {
        const auto full = splice_config(args, app);
        std::vector<const char*> argv{"hardy"};
        for (const auto& a : full) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const DomainError& e) {
        err << "hardy: " << e.what() << "\n";
        return exit_usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "hardy: cannot write '" << output << "'\n";
            return exit_usage;
        }
        sink = &file;
    }

    try {
        if (*sum) return cmd_sum(sa, *sink);
        if (*weyl) return cmd_weyl(wa, threads, *sink);
        if (*dist) return cmd_dist(da, threads, *sink);
        if (*perron) return cmd_perron(pa, *sink);
        if (*verify) return cmd_verify(va, threads, *sink);
    } catch (const DomainError& e) {
        err << "hardy: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceError& e) {
        err << "hardy: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        err << "hardy: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace hardy
