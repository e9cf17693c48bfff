#include "lieclass/curated.hpp"

#include "lieclass/errors.hpp"

#include <map>
#include <stdexcept>

namespace lieclass {

namespace {

// Series are materialized up to this rank; the CLI rejects larger caps.
constexpr int series_rank_limit = 16;

struct Entry {
    SearchCase search;
    SimpleType g;
    std::vector<SimpleType> h;
    std::string witness;  // canonical
    CuratedVerdict verdict;
};

std::vector<SimpleType> types(const std::vector<std::string>& names)
{
    std::vector<SimpleType> out;
    for (const auto& n : names) out.push_back(parse_type(n));
    return out;
}

/// Canonical form of a curated witness; validates the literal at startup.
std::string canon(const SimpleType& g, const std::vector<SimpleType>& h, const std::string& text)
{
    return canonical_witness(parse_witness(h, natural_module(g).field, text));
}

/// "[1,0,...,0]+k*[0,...,0]" for the vector module of an orthogonal factor.
std::string vector_plus_trivial(int rank, int trivial_copies)
{
    std::string v = "[1", z = "[0";
    for (int i = 1; i < rank; ++i) {
        v += ",0";
        z += ",0";
    }
    v += "]";
    z += "]";
    return v + "+" + std::to_string(trivial_copies) + "*" + z;
}

std::vector<Entry> build_entries()
{
    std::vector<Entry> out;
    auto add = [&](SearchCase c, const std::string& g, const std::vector<std::string>& h, const std::string& w,
                   CuratedKind kind, const std::string& note, const std::string& quote) {
        const SimpleType gt = parse_type(g);
        const auto ht = types(h);
        out.push_back({c, gt, ht, canon(gt, ht, w), {kind, note, quote}});
    };
    const auto X = CuratedKind::exclude;
    const auto D = CuratedKind::duplicate;

    // Case (I): SO(2n+1)/SO(2n-3) = V_4(R^{2n+1}) for n >= 4 (n = 3 is computed).
    for (int n = 4; n <= series_rank_limit; ++n)
        add(SearchCase::I, "B" + std::to_string(n), {"B" + std::to_string(n - 2)}, vector_plus_trivial(n - 2, 4), X,
            "pi_" + std::to_string(2 * n - 3) + " = Z/2; X = V_4(R^" + std::to_string(2 * n + 1) + ")",
            "$\\pi_{2n-3}=\\ZZ/2$");
    // Case (I): SO(2n)/SO(2n-3) = V_3(R^{2n}) for n >= 4 (n = 3 is SU(4) with 2*[1]).
    for (int n = 4; n <= series_rank_limit; ++n)
        add(SearchCase::I, "D" + std::to_string(n), {"B" + std::to_string(n - 2)}, vector_plus_trivial(n - 2, 3), X,
            "pi_" + std::to_string(2 * n - 3) + " = Z/2; X = V_3(R^" + std::to_string(2 * n) + ")",
            "$\\pi_{2n-3}=\\ZZ/2$");
    add(SearchCase::I, "D4", {"B2"}, "^R[0,1]", X,
        "triality image of SO(5) in SO(8); same space as V_3(R^8), pi_5 = Z/2",
        "Both inclusions become equal in $\\Spin(8)$ under an automorphism");
    add(SearchCase::I, "B5", {"B3"}, "[0,0,1]+3*[0,0,0]", X, "pi_9 != 0 (mod-2 cohomology)", "$\\pi_9\\neq 0$");
    add(SearchCase::I, "B4", {"B2"}, "^R[0,1]+[0,0]", X, "pi_5 != 0 (mod-2 cohomology)", "$\\pi_5\\neq 0$");
    add(SearchCase::I, "B3", {"A1"}, "^R[1]+3*[0]", X, "pi_5 = Z/2; X = V_3(R^8)", "$\\pi_5=\\ZZ/2$");
    add(SearchCase::I, "F4", {"G2"}, "3*[1,0]+5*[0,0]", X, "pi_7 = Z/3 (mod-3 cohomology of F4/G2)",
        "$\\pi_7=\\ZZ/3$");
    add(SearchCase::I, "G2", {}, "trivial", X, "2-torsion in H^*(G2)", "2-torsion");

    // Case (II): SO(2n+1)/SO(2n-2) = V_3(R^{2n+1}), n >= 3.
    for (int n = 3; n <= series_rank_limit; ++n) {
        const std::string g = "B" + std::to_string(n);
        const std::string note = "V_3(R^" + std::to_string(2 * n + 1) + ") has 2-torsion";
        const std::string quote = "either not $(n_1-1)$-connected, or have torsion";
        if (n == 3)
            add(SearchCase::II, g, {"A1", "A1"}, "(1|1)+3*(0|0)", X, note, quote);
        else if (n == 4)
            add(SearchCase::II, g, {"A3"}, "[0,1,0]+3*[0,0,0]", X, note, quote);
        else
            add(SearchCase::II, g, {"D" + std::to_string(n - 1)}, vector_plus_trivial(n - 1, 3), X, note, quote);
    }
    add(SearchCase::II, "B3", {"A1", "A1"}, "(2|0)+^R(0|1)", X,
        "pi_2 = Z/2 as tabulated; the lift computation gives pi_2 = 0 and pi_3 = 0, exclusion kept from the table",
        "$\\pi_2=\\ZZ/2$");
    add(SearchCase::II, "C3", {"A1", "A1"}, "(1|0)+2*(0|1)", X,
        "not among the A1 subgroups of Sp(3) with large centralizer; rational-only, excluded by the table",
        "with large centralizers");
    add(SearchCase::II, "D4", {"A3"}, "^R[1,0,0]", D, "triality image of SO(6) in SO(8); same space as SO(8)/SO(6)",
        "Both inclusions become equal in $\\Spin(8)$ under an automorphism");
    add(SearchCase::II, "F4", {"B3"}, "2*[0,0,1]+[1,0,0]+3*[0,0,0]", X,
        "mod-3 cohomology of F4/Spin(7) contains (Z/3)[x_8]/(x_8^3)", "(\\ZZ/3)[x_8]/(x_8^3)");
    add(SearchCase::II, "F4", {"C3"}, "[0,1,0]+^R[1,0,0]", X, "pi_5 = Z/2", "$\\pi_5=\\ZZ/2$");

    // Spheres: SO(2n+1)/SO(2n-1) = V_2(R^{2n+1}), n >= 3 (n = 2 is computed).
    for (int n = 3; n <= series_rank_limit; ++n)
        add(SearchCase::sphere, "B" + std::to_string(n), {"B" + std::to_string(n - 1)}, vector_plus_trivial(n - 1, 2), X,
            "pi_" + std::to_string(2 * n - 1) + " = Z/2; X = V_2(R^" + std::to_string(2 * n + 1) + ")",
            "$\\pi_{2n-1}=\\ZZ/2$");
    add(SearchCase::sphere, "D4", {"B3"}, "[0,0,1]", D, "triality image of SO(7) in SO(8); same sphere S^7",
        "the action of $\\Spin(8)$ on $\\Spin(8)/\\Spin(7)$ is not effective");
    add(SearchCase::sphere, "G2", {"A1"}, "^R[1]+3*[0]", X, "pi_5 = Z/2; X = V_2(R^7)", "$\\pi_5=\\ZZ/2$");
    return out;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> e = build_entries();
    return e;
}

}  // namespace

std::string case_name(SearchCase c)
{
    switch (c) {
    case SearchCase::I: return "I";
    case SearchCase::II: return "II";
    case SearchCase::sphere: return "sphere";
    case SearchCase::split: return "split";
    case SearchCase::nonsplit: return "nonsplit";
    }
    return "?";
}

SearchCase parse_case(const std::string& text)
{
    if (text == "1" || text == "I") return SearchCase::I;
    if (text == "2" || text == "II") return SearchCase::II;
    if (text == "sphere") return SearchCase::sphere;
    if (text == "split") return SearchCase::split;
    if (text == "nonsplit") return SearchCase::nonsplit;
    throw UsageError("unknown case '" + text + "'");
}

std::optional<CuratedEmbeddings> curated_exceptional(const SimpleType& g, const std::vector<SimpleType>& h)
{
    if (!is_exceptional(g.family)) throw std::logic_error("curated_exceptional called for " + g.name());
    if (h.empty()) return CuratedEmbeddings{{"trivial"}, "trivial subgroup"};

    struct Known {
        std::string g;
        std::vector<std::string> h;
        std::vector<std::string> witnesses;
        std::string quote;
    };
    static const std::vector<Known> known = {
        {"G2", {"A1"}, {"^R[1]+3*[0]", "^R[1]+[2]", "2*[2]+[0]", "[6]"},
         "all subgroups $H$ of type $\\fa_1$ in $\\G_2$"},
        {"G2", {"A2"}, {"^R[1,0]+[0,0]"}, "the elementwise stabilizer of $\\CC\\SUB\\OO$"},
        {"F4", {"G2"}, {"3*[1,0]+5*[0,0]"}, "there is a unique inclusion $\\G_2\\SUB\\Ffour$"},
        {"F4", {"B3"}, {"2*[0,0,1]+[1,0,0]+3*[0,0,0]"}, "both groups are conjugate in $\\Ffour$"},
        {"F4", {"C3"}, {"[0,1,0]+^R[1,0,0]"}, "There is one conjugacy class of subgroups of this type"},
        {"E6", {"F4"}, {"[1,0,0,0]+[0,0,0,0]"}, "there is a unique inclusion $\\Ffour\\SUB\\E_6$"},
    };
    for (const auto& k : known) {
        if (parse_type(k.g) != g || types(k.h) != h) continue;
        CuratedEmbeddings e;
        e.quote = k.quote;
        for (const auto& w : k.witnesses) e.witnesses.push_back(canon(g, h, w));
        return e;
    }
    return std::nullopt;
}

std::optional<CuratedVerdict> curated_exclusion(SearchCase c, const SimpleType& g, const std::vector<SimpleType>& h,
                                                const std::string& witness)
{
    for (const auto& e : entries())
        if (e.search == c && e.g == g && e.h == h && e.witness == witness) return e.verdict;
    return std::nullopt;
}

std::vector<EvenSphere> even_spheres(int max_rank)
{
    std::vector<EvenSphere> out;
    const std::string quote = "a well-known result of Borel-De Siebenthal";
    for (int n = 1; n <= max_rank; ++n) {
        EvenSphere s;
        s.dim = 2 * n;
        s.quote = quote;
        if (n == 1) {
            s.k = parse_type("A1");
            s.h = {"T1"};
            s.witness = "T1";
        } else if (n == 2) {
            s.k = parse_type("B2");
            s.h = {"A1", "A1"};
            s.witness = canon(s.k, types(s.h), "(1|0)+(0|1)");
        } else if (n == 3) {
            s.k = parse_type("B3");
            s.h = {"A3"};
            s.witness = canon(s.k, types(s.h), "[0,1,0]+[0,0,0]");
        } else {
            s.k = make_type(Family::B, n);
            s.h = {"D" + std::to_string(n)};
            s.witness = canon(s.k, types(s.h), vector_plus_trivial(n, 1));
        }
        out.push_back(s);
    }
    if (max_rank >= 2) {
        EvenSphere s;
        s.k = parse_type("G2");
        s.h = {"A2"};
        s.dim = 6;
        s.witness = canon(s.k, types(s.h), "^R[1,0]+[0,0]");
        s.quote = "\\G_2/\\SU(3)=\\SS^6";
        out.push_back(s);
    }
    return out;
}

const std::vector<Coincidence>& coincidences()
{
    static const std::vector<Coincidence> c = [] {
        auto ref = [](const std::string& g, const std::vector<std::string>& h, const std::string& w) {
            const SimpleType gt = parse_type(g);
            return RowRef{gt.name(), h, canon(gt, types(h), w)};
        };
        return std::vector<Coincidence>{
            {SearchCase::I, ref("A4", {"B2"}, "[0,1]+[0,0]"), ref("A5", {"C3"}, "[1,0,0]"),
             "SU(5)/Sp(2) = SU(6)/Sp(3)", "\\SU(5)/\\Sp(2)=\\SU(6)/\\Sp(3)"},
            {SearchCase::II, ref("B4", {"A3"}, "^R[1,0,0]+[0,0,0]"), ref("D5", {"A4"}, "^R[1,0,0,0]"),
             "Spin(9)/SU(4) = Spin(10)/SU(5)", "\\Spin(9)/\\SU(4)=\\Spin(10)/\\SU(5)"},
            {SearchCase::II, ref("B3", {"A2"}, "^R[1,0]+[0,0]"), ref("D4", {"A3"}, "[0,1,0]+2*[0,0,0]"),
             "Spin(7)/SU(3) = SO(8)/SO(6)", "\\Spin(7)/\\SU(3)=\\SO(8)/\\SO(6)=V_2(\\RR^8)"},
        };
    }();
    return c;
}

}  // namespace lieclass
