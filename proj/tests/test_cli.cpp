#include "lieclass/serialize.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <set>

using test_support::run;
using Json = nlohmann::json;

namespace {

/// One invocation per verb, used for the round-trip and cross-format checks.
const std::vector<std::vector<std::string>>& verb_samples()
{
    static const std::vector<std::vector<std::string>> s = {
        {"exponents", "E8", "8"},
        {"irreps", "G2", "2", "--max-dim", "30"},
        {"irreps", "C", "2", "--max-dim", "20", "--field", "h"},
        {"index", "su2", "6"},
        {"index", "B", "3", "--weight", "0,0,1"},
        {"pi3", "--matrix", "1,3;3,1"},
        {"homotopy", "--free", "3,5,8"},
        {"homotopy", "--truncated", "4^2;11"},
        {"classify", "--max-rank", "6", "--case", "1"},
        {"classify", "--n1", "6", "--n2", "7", "--max-rank", "6"},
        {"spheres", "--max-rank", "4"},
        {"quadrangle", "3", "4", "--candidates", "--max-rank", "6"},
        {"quadrangle", "5", "6"},
        {"atlas", "--max", "9"},
        {"dump-tables", "--max-rank", "3"},
        {"verify-fixtures", "exponents"},
    };
    return s;
}

/// Scalar leaves of a JSON value as they would be printed in text mode.
void leaves(const Json& j, std::vector<std::string>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) leaves(v, out);
    } else if (j.is_array()) {
        for (const auto& v : j) leaves(v, out);
    } else if (j.is_string()) {
        if (!j.get<std::string>().empty()) out.push_back(j.get<std::string>());
    } else if (!j.is_null()) {
        out.push_back(j.dump());
    }
}

/// Keys of every object in the JSON value.
void keys(const Json& j, std::set<std::string>& out)
{
    if (j.is_object())
        for (const auto& [k, v] : j.items()) {
            out.insert(k);
            keys(v, out);
        }
    else if (j.is_array())
        for (const auto& v : j) keys(v, out);
}

}  // namespace

TEST_CASE("spot outputs")
{
    auto r = run({"exponents", "A", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "3 5 7 9\n");
    r = run({"pi3", "--matrix", "1,3;3,1"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("Z/8\n", 0) == 0);
    r = run({"index", "su2", "20"});
    CHECK(r.out == "1540\n");   // binom(22, 3)
    r = run({"exponents", "D", "4", "--format", "json"});
    CHECK(Json::parse(r.out) == Json{{"exponents", {3, 7, 7, 11}}});
    r = run({"verify-fixtures", "case1-simple"});
    CHECK(r.status == 0);
    CHECK(r.out.find("true") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"exponents", "A"}).status == 2);
    CHECK(run({"exponents", "A", "x"}).status == 2);
    CHECK(run({"exponents", "Q", "3"}).status == 2);
    CHECK(run({"exponents", "D", "2"}).status == 1);
    CHECK(run({"exponents", "E", "5"}).status == 1);
    CHECK(run({"pi3", "--matrix", "1,2;3"}).status == 2);
    CHECK(run({"pi3", "--matrix", "1,2;3,x"}).err.find("position") != std::string::npos);
    CHECK(run({"irreps", "A", "2", "--max-dim", "abc"}).status == 2);
    CHECK(run({"irreps", "A", "2", "--max-dim", "10", "--field", "q"}).status == 2);
    CHECK(run({"homotopy"}).status == 2);
    CHECK(run({"homotopy", "--free", "3", "--truncated", "4^2"}).status == 2);
    CHECK(run({"homotopy", "--free", "4,3"}).status == 0);
    CHECK(run({"homotopy", "--truncated", "3^2"}).status == 1);
    CHECK(run({"classify", "--n1", "2", "--n2", "5"}).status == 1);
    CHECK(run({"classify", "--case", "zzz"}).status == 2);
    CHECK(run({"quadrangle", "2", "3", "--candidates"}).status == 1);
    CHECK(run({"verify-fixtures", "nope"}).status == 1);
    CHECK(run({"exponents", "A", "4", "--format", "xml"}).status == 2);
    CHECK(run({"--help"}).status == 0);
    const auto e = run({"exponents", "D", "2"});
    CHECK(e.err.find("not simple") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte-identically")
{
    for (const auto& args : verb_samples()) {
        auto a = args;
        a.push_back("--format");
        a.push_back("json");
        const auto r = run(a);
        CAPTURE(args.front());
        REQUIRE(r.status == 0);
        const Json j = Json::parse(r.out);
        CHECK(lieclass::dump_json(j) == r.out);
        // No floating-point numbers anywhere.
        std::function<void(const Json&)> no_floats = [&](const Json& x) {
            CHECK_FALSE(x.is_number_float());
            if (x.is_structured())
                for (const auto& v : x) no_floats(v);
        };
        no_floats(j);
    }
}

TEST_CASE("text and JSON carry the same information")
{
    for (const auto& args : verb_samples()) {
        auto a = args;
        const auto text = run(a);
        a.push_back("--format");
        a.push_back("json");
        const auto js = run(a);
        CAPTURE(args.front());
        REQUIRE(text.status == 0);
        REQUIRE(js.status == 0);
        const Json j = Json::parse(js.out);
        std::vector<std::string> vals;
        leaves(j, vals);
        for (const auto& v : vals) {
            CAPTURE(v);
            CHECK(text.out.find(v) != std::string::npos);
        }
        // Field names appear too, except in the single-value verbs.
        if (args.front() == "exponents" || args.front() == "pi3" || (args.front() == "index" && args[1] == "su2"))
            continue;
        std::set<std::string> ks;
        keys(j, ks);
        for (const auto& k : ks) {
            CAPTURE(k);
            CHECK(text.out.find(k) != std::string::npos);
        }
    }
}

TEST_CASE("fixture directory override")
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "lieclass-fixture-override";
    fs::create_directories(dir);
    std::ifstream in(test_support::fixtures_dir() + "/exponents.json");
    Json fx = Json::parse(in);
    fx.at("rows").at(0)["exponents"] = Json::array({3, 5, 9});
    std::ofstream(dir / "exponents.json") << fx.dump(2);

    setenv("LIECLASS_FIXTURES", dir.c_str(), 1);
    const auto r = run({"verify-fixtures", "exponents"});
    unsetenv("LIECLASS_FIXTURES");
    CHECK(r.status == 1);
    CHECK(r.out.find("changed: A1") != std::string::npos);
    fs::remove_all(dir);

    CHECK(run({"verify-fixtures", "exponents"}).status == 0);
}

TEST_CASE("all fixtures verify through the command line")
{
    const auto r = run({"verify-fixtures", "all", "--format", "json"});
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("fixtures").size() == 9);
    for (const auto& f : j.at("fixtures")) CHECK(f.at("ok").get<bool>());
}
