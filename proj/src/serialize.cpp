#include "lieclass/serialize.hpp"

#include <algorithm>
#include <limits>
#include <regex>
#include <sstream>

namespace lieclass {

Json to_json(const Int& v)
{
    // Values beyond 64 bits are carried as decimal strings so that no
    // consumer ever sees a rounded number.
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(to_string(v));
}

Json to_json(const SimpleType& t)
{
    return Json{{"type", t.name()}, {"group", t.group_name()}, {"rank", t.rank}};
}

Json to_json(const IrrepDescriptor& d)
{
    Json j;
    j["type"] = d.weight.type.name();
    j["weight"] = d.weight.str();
    j["dim_c"] = to_json(d.dim_c);
    j["field"] = std::string(1, field_char(d.field));
    j["dim_r"] = to_json(d.dim_r);
    j["dim_h"] = to_json(d.dim_h);
    j["kernel"] = d.kernel.str();
    j["kernel_order"] = d.kernel.order();
    return j;
}

Json to_json(const AbelianGroup& g)
{
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(to_json(d));
    return Json{{"group", g.str()}, {"free_rank", g.free_rank}, {"torsion", t}};
}

namespace {

Json optional_group(const std::optional<AbelianGroup>& g)
{
    return g ? Json(g->str()) : Json(nullptr);
}

}  // namespace

Json to_json(const CandidatePair& c)
{
    Json j;
    j["label"] = row_label(c);
    j["g"] = c.g;
    j["h"] = c.h;
    j["h0"] = c.h0;
    j["residual"] = c.residual;
    j["case"] = case_name(c.search);
    j["feasible"] = c.feasible;
    j["feasibility"] = c.feasibility;
    j["witnesses"] = c.witnesses;
    j["curated_notes"] = c.curated_notes;
    j["multiplicity"] = c.multiplicity;
    j["survives"] = c.survives();
    Json t;
    t["verdict"] = c.torsion.verdict;
    t["pi2"] = optional_group(c.torsion.pi2);
    t["pi3"] = optional_group(c.torsion.pi3);
    t["matrix"] = c.torsion.matrix.empty() ? Json(nullptr) : Json(matrix_str(c.torsion.matrix));
    t["source"] = c.torsion.source;
    t["note"] = c.torsion.note;
    t["quote"] = c.torsion.quote;
    j["torsion"] = t;
    return j;
}

Json to_json(const Check& c)
{
    Json j{{"result", tri_name(c.result)}, {"clause", c.clause}};
    if (c.divisor != 0) j["divisor"] = c.divisor;
    return j;
}

Json to_json(const AdmissibilityReport& r)
{
    Json j;
    j["m1"] = r.p.m1;
    j["m2"] = r.p.m2;
    j["munzner"] = to_json(r.munzner);
    j["stolz"] = to_json(r.stolz);
    j["markert"] = to_json(r.markert);
    j["dims"] = Json{{"flags", r.dims.flags}, {"points", r.dims.points}, {"lines", r.dims.lines}};
    if (!r.cohomology_points.empty())
        j["cohomology"] = Json{{"points", r.cohomology_points},
                               {"lines", r.cohomology_lines},
                               {"flags", r.cohomology_flags}};
    return j;
}

Json to_json(const AtlasPoint& p)
{
    Json e = Json::array();
    for (const auto& x : p.entries) {
        Json o{{"label", x.label}, {"kind", x.kind}};
        if (!x.series.empty()) o["series"] = x.series;
        e.push_back(o);
    }
    return Json{{"n1", p.n1}, {"gap", p.gap}, {"multiplicity", p.multiplicity()}, {"entries", e}};
}

Json to_json(const RankTable& t)
{
    // Keys are degrees; JSON object keys are strings, so emit a sorted list.
    Json a = Json::array();
    for (const auto& [deg, rk] : t) a.push_back(Json{{"degree", deg}, {"rank", rk}});
    return a;
}

Json dump_tables(int max_rank)
{
    Json types = Json::array();
    for (const auto& t : canonical_types(max_rank)) {
        Json j = to_json(t);
        j["exponents"] = exponents(t);
        j["dimension"] = group_dimension(t);
        j["center"] = center(t).describe();
        j["galois"] = galois_involution(t);
        j["adjoint_weight"] = make_weight(t, adjoint_weight(t)).str();
        const auto g = galois_involution(t);
        Json fund = Json::array();
        for (int i = 1; i <= t.rank; ++i) {
            Json f;
            f["index"] = i;
            f["dim"] = to_json(fundamental_dim(t, i));
            f["beta"] = g[i - 1] == i - 1 ? std::string(1, field_char(beta_fundamental(t, i))) : "C";
            Json chi = Json::array();
            for (const auto& r : center_character(t, i)) chi.push_back(to_string(r));
            f["character"] = chi;
            fund.push_back(f);
        }
        j["fundamental"] = fund;
        types.push_back(j);
    }
    return Json{{"max_rank", max_rank}, {"types", types}};
}

std::string dump_json(const Json& j)
{
    return j.dump(2) + "\n";
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool all_scalars(const Json& a)
{
    for (const auto& x : a)
        if (!is_scalar(x)) return false;
    return true;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out);

/// Cell text for the column layout: scalars as usual, scalar arrays joined
/// by commas, empty text as "-" so that every row keeps its column count.
std::string cell_text(const Json& v)
{
    std::string s;
    if (v.is_array()) {
        for (const auto& x : v) s += (s.empty() ? "" : ",") + scalar_text(x);
    } else {
        s = scalar_text(v);
    }
    return s.empty() ? "-" : s;
}

/// A non-empty array of objects sharing one key set whose values are
/// scalars or scalar arrays is printed as an aligned table.
bool is_flat_table(const Json& a)
{
    if (!a.is_array() || a.empty() || !a.front().is_object()) return false;
    std::vector<std::string> keys;
    for (const auto& [k, v] : a.front().items()) keys.push_back(k);
    for (const auto& row : a) {
        if (!row.is_object() || row.size() != keys.size()) return false;
        for (const auto& k : keys) {
            if (!row.contains(k)) return false;
            const Json& v = row.at(k);
            if (v.is_object() || (v.is_array() && !all_scalars(v))) return false;
            if (cell_text(v).find(' ') != std::string::npos) return false;
        }
    }
    return true;
}

void render_table(const Json& a, const std::string& indent, std::ostringstream& out)
{
    std::vector<std::string> keys;
    for (const auto& [k, v] : a.front().items()) keys.push_back(k);
    std::vector<std::vector<std::string>> cells{keys};
    for (const auto& row : a) {
        std::vector<std::string> r;
        for (const auto& k : keys) r.push_back(cell_text(row.at(k)));
        cells.push_back(r);
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& r : cells)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : cells) {
        std::string line = indent;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

void render_value(const std::string& head, const Json& v, const std::string& indent, std::ostringstream& out)
{
    if (is_scalar(v)) {
        out << indent << head << scalar_text(v) << "\n";
    } else if (v.is_array() && all_scalars(v)) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
        out << indent << head << (v.empty() ? "(none)" : s) << "\n";
    } else {
        out << indent << head << "\n";
        render(v, indent + "  ", out);
    }
}

void render(const Json& j, const std::string& indent, std::ostringstream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_value(k + ": ", v, indent, out);
    } else if (is_flat_table(j)) {
        render_table(j, indent, out);
    } else if (j.is_array()) {
        if (j.empty()) out << indent << "(none)\n";
        for (const auto& x : j) {
            if (x.is_object()) {
                // First key on the "- " line, the rest aligned below it.
                std::ostringstream sub;
                render(x, indent + "  ", sub);
                std::string s = sub.str();
                if (s.size() >= indent.size() + 2) s.replace(indent.size(), 2, "- ");
                out << s;
            } else {
                render_value("- ", x, indent, out);
            }
        }
    } else {
        out << indent << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j)
{
    std::ostringstream out;
    render(j, "", out);
    // Drop the blanks left behind empty values and nested headings.
    return std::regex_replace(out.str(), std::regex(" +\n"), "\n");
}

}  // namespace lieclass
