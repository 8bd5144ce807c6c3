#pragma once

// The `hardy` command line: argument parsing, the flat config file, and the
// CSV/JSON output formats. run_cli is the whole program minus main().

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardy/equidist.hpp"
#include "hardy/rational.hpp"
#include "hardy/special.hpp"

namespace hardy {

// Exit codes shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_budget = 3 };

// Flat `key = value` lines. '#' starts a comment, blank lines are skipped,
// keys may use '_' or '-'. Order is kept; DomainError on a line without '='.
std::vector<std::pair<std::string, std::string>> read_config(std::istream& in);

// Strict decimal integer (no trailing junk). DomainError otherwise.
std::int64_t parse_int(const std::string& text);

// "j/m" only. Decimal input such as "0.5" is rejected.
Rational parse_ratio(const std::string& text);

// "2+0.5i", "0.2+1i", "-3", "1.5i", "i".
cplx parse_complex(const std::string& text);

// Comma-separated integers, e.g. "250,500,1000".
std::vector<std::int64_t> parse_int_list(const std::string& text);

nlohmann::json dist_to_json(const DistTable& t);
DistTable dist_from_json(const nlohmann::json& j);

// %.17g, the precision every CSV float column uses.
std::string format_double(double x);

// Runs one command line (args excludes the program name). Output goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy
