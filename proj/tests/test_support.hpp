#pragma once

#include "lieclass/cli.hpp"
#include "lieclass/numeric.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace test_support {

inline std::string fixtures_dir() { return LIECLASS_TEST_FIXTURES; }

/// Reference text shipped next to the fixtures, with whitespace collapsed.
inline const std::string& reference_text()
{
    static const std::string text = [] {
        std::ifstream in(fixtures_dir() + "/../paper.md");
        std::stringstream ss;
        ss << in.rdbuf();
        return std::regex_replace(ss.str(), std::regex("\\s+"), " ");
    }();
    return text;
}

inline std::string collapse_ws(const std::string& s) { return std::regex_replace(s, std::regex("\\s+"), " "); }

struct CliResult {
    int status = 0;
    std::string out, err;
};

inline CliResult run(std::vector<std::string> args)
{
    args.insert(args.begin(), "lieclass");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.status = lieclass::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Binomial coefficient by the multiplicative formula, independent of the
/// library helper.
inline lieclass::Int choose(long n, long k)
{
    if (k < 0 || k > n) return 0;
    lieclass::Int r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace test_support
