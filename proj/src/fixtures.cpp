#include "lieclass/fixtures.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#ifndef LIECLASS_DEFAULT_FIXTURES
#define LIECLASS_DEFAULT_FIXTURES "fixtures"
#endif

namespace lieclass {

std::string fixture_dir()
{
    if (const char* env = std::getenv("LIECLASS_FIXTURES"); env && *env) return env;
    return LIECLASS_DEFAULT_FIXTURES;
}

const std::vector<std::string>& fixture_ids()
{
    static const std::vector<std::string> ids = {
        "exponents",        "ch4-modules",      "simz-matrices",  "pi3-annotations", "case1-simple",
        "case2-simple",     "spheres",          "case1-semisimple", "case2-semisimple"};
    return ids;
}

Json load_fixture(const std::string& id, const std::string& dir)
{
    const auto& ids = fixture_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string known;
        for (const auto& k : ids) known += (known.empty() ? "" : ", ") + k;
        throw DomainError("unknown fixture id '" + id + "' (known: " + known + ")");
    }
    const auto path = std::filesystem::path(dir) / (id + ".json");
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read fixture file " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError("malformed fixture " + path.string() + ": " + e.what());
    }
}

namespace {

std::string strip(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n') out += c;
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string residual_str(const std::vector<int>& r)
{
    std::string s;
    for (int x : r) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

std::string label_of(const std::vector<std::string>& g, const std::vector<std::string>& h, const std::string& h0)
{
    std::string hs = h.empty() ? "1" : join(h, "x");
    if (!h0.empty()) hs += " (H0 " + h0 + ")";
    return join(g, "x") + "/" + hs;
}

/// Identity of a classification row: everything except the witness, which
/// is compared separately so that a wrong witness reads as "changed".
struct RowKey {
    std::string label;
    std::vector<int> residual;
    auto operator<=>(const RowKey&) const = default;
    std::string str() const { return label + " " + residual_str(residual); }
};

struct RowData {
    RowKey key;
    std::string witness;   // normalized
    std::string shown;     // as written
    std::vector<std::string> notes;
};

std::vector<std::string> str_list(const Json& j, const char* key)
{
    if (!j.contains(key)) return {};
    return j.at(key).get<std::vector<std::string>>();
}

std::vector<CandidatePair> computed_rows(const std::string& search, int max_rank)
{
    std::vector<CandidatePair> rows;
    if (search == "1") {
        rows = classify_case1(max_rank);
    } else if (search == "2") {
        rows = classify_case2(max_rank);
    } else if (search == "sphere") {
        rows = classify_spheres(max_rank);
    } else if (search == "nonsplit-1" || search == "nonsplit-2") {
        // Non-split rows with n1 odd (exterior case) or n1 even.
        const int parity = search == "nonsplit-1" ? 1 : 0;
        for (auto& r : classify_semisimple(max_rank))
            if (r.search == SearchCase::nonsplit && r.residual.front() % 2 == parity) rows.push_back(std::move(r));
    } else {
        throw DomainError("fixture names unknown search '" + search + "'");
    }
    return rows;
}

std::vector<std::string> diff_classification(const Json& fx)
{
    const std::string search = fx.at("search").get<std::string>();
    const int max_rank = fx.at("max_rank").get<int>();
    std::vector<std::string> out;

    std::vector<RowData> expected, computed;
    for (const auto& r : fx.at("rows")) {
        RowData d;
        const auto g = str_list(r, "g"), h = str_list(r, "h");
        const std::string h0 = r.value("h0", "");
        d.key = {label_of(g, h, h0), r.at("residual").get<std::vector<int>>()};
        d.shown = r.at("witness").get<std::string>();
        d.witness = normalize_witness(g.size() == 1 ? g.front() : "", h, d.shown);
        expected.push_back(d);
    }
    for (const auto& c : computed_rows(search, max_rank)) {
        if (!c.survives()) continue;
        RowData d;
        d.key = {row_label(c), c.residual};
        d.shown = c.witnesses.empty() ? "" : c.witnesses.front();
        d.witness = normalize_witness(c.g.size() == 1 ? c.g.front() : "", c.h, d.shown);
        d.notes = c.curated_notes;
        computed.push_back(d);
    }

    // Exact matches first; leftovers with the same key are "changed".
    std::vector<bool> used_e(expected.size()), used_c(computed.size());
    for (size_t i = 0; i < expected.size(); ++i)
        for (size_t k = 0; k < computed.size(); ++k)
            if (!used_c[k] && expected[i].key == computed[k].key && expected[i].witness == computed[k].witness) {
                used_e[i] = used_c[k] = true;
                break;
            }
    for (size_t i = 0; i < expected.size(); ++i) {
        if (used_e[i]) continue;
        bool paired = false;
        for (size_t k = 0; k < computed.size() && !paired; ++k)
            if (!used_c[k] && expected[i].key == computed[k].key) {
                out.push_back("changed: " + expected[i].key.str() + " witness " + expected[i].shown + " -> " +
                              computed[k].shown);
                used_c[k] = paired = true;
            }
        if (!paired) out.push_back("missing: " + expected[i].key.str() + " " + expected[i].shown);
    }
    for (size_t k = 0; k < computed.size(); ++k)
        if (!used_c[k]) out.push_back("extra: " + computed[k].key.str() + " " + computed[k].shown);

    // Coincidence flags: every listed pair flagged, nothing else flagged.
    std::set<std::string> labels;
    if (fx.contains("coincidences")) {
        for (const auto& co : fx.at("coincidences")) {
            const std::string label = co.at("label").get<std::string>();
            labels.insert(label);
            for (const auto& row : co.at("rows")) {
                const std::string want = row.get<std::string>();
                const bool flagged = std::any_of(computed.begin(), computed.end(), [&](const RowData& d) {
                    return d.key.label == want &&
                           std::find(d.notes.begin(), d.notes.end(), "coincidence: " + label) != d.notes.end();
                });
                if (!flagged) out.push_back("coincidence: '" + label + "' not flagged on " + want);
            }
        }
    }
    for (const auto& d : computed)
        for (const auto& n : d.notes)
            if (n.rfind("coincidence: ", 0) == 0 && !labels.count(n.substr(13)))
                out.push_back("coincidence: unexpected flag '" + n.substr(13) + "' on " + d.key.label);
    return out;
}

std::vector<std::string> diff_exponents(const Json& fx)
{
    std::vector<std::string> out;
    for (const auto& r : fx.at("rows")) {
        const std::string t = r.at("type").get<std::string>();
        const auto want = r.at("exponents").get<std::vector<int>>();
        const auto got = exponents(parse_type(t));
        if (got != want) {
            std::string g, w;
            for (int x : got) g += std::to_string(x) + " ";
            for (int x : want) w += std::to_string(x) + " ";
            out.push_back("changed: " + t + " exponents " + strip(w) + " -> " + strip(g));
        }
    }
    return out;
}

/// Integers in fixtures may be JSON numbers or decimal strings.
Int int_of(const Json& j)
{
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

std::vector<std::string> diff_modules(const Json& fx)
{
    std::vector<std::string> out;
    for (const auto& r : fx.at("rows")) {
        const SimpleType t = parse_type(r.at("type").get<std::string>());
        const DominantWeight w = parse_weight(t, r.at("weight").get<std::string>());
        const IrrepDescriptor d = describe(w);
        const std::string tag = t.name() + " " + w.str();
        auto check = [&](const char* field, const Int& got) {
            if (!r.contains(field)) return;
            const Int want = int_of(r.at(field));
            if (want != got) out.push_back("changed: " + tag + " " + field + " " + to_string(want) + " -> " + to_string(got));
        };
        check("dim_c", d.dim_c);
        check("dim_r", d.dim_r);
        check("dim_h", d.dim_h);
        if (r.contains("field")) {
            const std::string want = r.at("field").get<std::string>(), got(1, field_char(d.field));
            if (want != got) out.push_back("changed: " + tag + " field " + want + " -> " + got);
        }
    }
    return out;
}

std::vector<std::string> diff_simz(const Json& fx)
{
    std::vector<std::string> out;
    for (const auto& r : fx.at("rows")) {
        const std::string text = r.at("matrix").get<std::string>();
        const IntMatrix m = parse_matrix(text);
        const auto got = smith_invariants(m);
        std::vector<Int> want;
        for (const auto& x : r.at("smith")) want.push_back(int_of(x));
        if (got != want) {
            std::string g;
            for (const auto& x : got) g += (g.empty() ? "" : ",") + to_string(x);
            out.push_back("changed: " + text + " smith -> " + g);
        }
        if (r.contains("pi3")) {
            const std::string p = pi3_cokernel(m).str();
            if (p != r.at("pi3").get<std::string>())
                out.push_back("changed: " + text + " pi3 " + r.at("pi3").get<std::string>() + " -> " + p);
        }
    }
    return out;
}

std::vector<std::string> diff_pi3(const Json& fx)
{
    std::vector<std::string> out;
    std::map<int, std::vector<CandidatePair>> semisimple;   // by max rank
    for (const auto& r : fx.at("rows")) {
        const auto g = str_list(r, "g"), h = str_list(r, "h");
        const std::string h0 = r.value("h0", "");
        const std::string witness = r.at("witness").get<std::string>();
        const std::string want = r.at("pi3").get<std::string>();
        const std::string tag = label_of(g, h, h0) + " " + witness;
        std::optional<AbelianGroup> got;
        IntMatrix matrix;
        if (g.size() == 1) {
            const SimpleType gt = parse_type(g.front());
            std::vector<SimpleType> factors;
            for (const auto& x : h) factors.push_back(parse_type(x));
            const HModule m = parse_witness(factors, natural_module(gt).field, witness);
            const TorsionVerdict v = integral_filter(parse_case(r.at("search").get<std::string>()), gt, m);
            got = v.pi3;
            matrix = v.matrix;
        } else {
            const int rank = r.value("max_rank", 8);
            if (!semisimple.count(rank)) semisimple[rank] = classify_semisimple(rank);
            for (const auto& c : semisimple[rank])
                if (c.g == g && c.h == h && c.h0 == h0 && !c.witnesses.empty() &&
                    strip(c.witnesses.front()) == strip(witness)) {
                    got = c.torsion.pi3;
                    matrix = c.torsion.matrix;
                }
            if (!got) {
                out.push_back("missing: " + tag);
                continue;
            }
        }
        if (!got || got->str() != want)
            out.push_back("changed: " + tag + " pi3 " + want + " -> " + (got ? got->str() : "-"));
        if (r.contains("matrix")) {
            const IntMatrix stated = parse_matrix(r.at("matrix").get<std::string>());
            if (stated != matrix)
                out.push_back("changed: " + tag + " matrix " + matrix_str(stated) + " -> " + matrix_str(matrix));
            if (pi3_cokernel(stated).str() != want)
                out.push_back("changed: " + tag + " cokernel of stated matrix " + pi3_cokernel(stated).str());
        }
    }
    return out;
}

}  // namespace

std::string normalize_witness(const std::string& g, const std::vector<std::string>& h, const std::string& witness)
{
    const std::string s = strip(witness);
    if (g.empty() || s.find(':') != std::string::npos) return s;
    if (std::find(h.begin(), h.end(), "T1") != h.end()) return s;
    try {
        const SimpleType gt = parse_type(g);
        std::vector<SimpleType> factors;
        for (const auto& x : h) factors.push_back(parse_type(x));
        return canonical_witness(parse_witness(factors, natural_module(gt).field, s));
    } catch (const std::exception&) {
        return s;
    }
}

std::vector<std::string> diff_fixture(const Json& fx)
{
    const std::string kind = fx.at("kind").get<std::string>();
    if (kind == "classification") return diff_classification(fx);
    if (kind == "exponents") return diff_exponents(fx);
    if (kind == "modules") return diff_modules(fx);
    if (kind == "simz") return diff_simz(fx);
    if (kind == "pi3") return diff_pi3(fx);
    throw DomainError("fixture has unknown kind '" + kind + "'");
}

std::vector<std::string> reproduce_tables(const std::string& id, const std::string& dir)
{
    return diff_fixture(load_fixture(id, dir));
}

}  // namespace lieclass
