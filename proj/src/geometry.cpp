#include "lieclass/geometry.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <map>

namespace lieclass {

MultiplicityPair make_multiplicities(int m1, int m2)
{
    if (m1 < 1 || m2 < 1)
        throw DomainError("multiplicities must be positive (got " + std::to_string(m1) + ", " + std::to_string(m2) + ")");
    return {m1, m2};
}

std::string tri_name(Tri t)
{
    switch (t) {
    case Tri::pass: return "pass";
    case Tri::fail: return "fail";
    case Tri::not_applicable: return "not-applicable";
    }
    return "?";
}

Check munzner_admissible(const MultiplicityPair& p)
{
    if (p.m1 == p.m2 && (p.m1 == 1 || p.m1 == 2 || p.m1 == 4)) return {Tri::pass, "equal", 0};
    if (p.m1 == 1 || p.m2 == 1) return {Tri::pass, "one", 0};
    if ((p.m1 + p.m2) % 2 == 1) return {Tri::pass, "odd-sum", 0};
    return {Tri::fail, "none", 0};
}

int phi(int k)
{
    if (k < 0) throw DomainError("phi(k) needs k >= 0");
    // Four residues per block of eight.
    int n = 4 * (k / 8);
    for (int i = 1; i <= k % 8; ++i)
        if (i == 1 || i == 2 || i == 4) ++n;
    return n;
}

namespace {

Check divisibility(const MultiplicityPair& p, int k)
{
    const int e = phi(k);
    if (e >= 62) return {Tri::fail, "divisibility", 0};   // 2^e exceeds any sum of ints
    const long d = 1L << e;
    const long sum = static_cast<long>(p.m1) + p.m2 + 1;
    return {sum % d == 0 ? Tri::pass : Tri::fail, "divisibility", d};
}

bool stolz_range(const MultiplicityPair& p) { return 2 <= p.m1 && p.m1 < p.m2; }

}  // namespace

Check stolz_admissible(const MultiplicityPair& p)
{
    if (!stolz_range(p)) return {Tri::not_applicable, "precondition", 0};
    if (p.m1 == 4 && p.m2 == 5) return {Tri::pass, "special-case", 0};
    return divisibility(p, p.m1 - 1);
}

Check markert_check(const MultiplicityPair& p)
{
    if (!stolz_range(p)) return {Tri::not_applicable, "precondition", 0};
    return divisibility(p, std::min(p.m2 - p.m1, p.m1 - 1));
}

AdmissibilityReport report(const MultiplicityPair& p)
{
    AdmissibilityReport r;
    r.p = p;
    r.munzner = munzner_admissible(p);
    r.stolz = stolz_admissible(p);
    r.markert = markert_check(p);
    r.dims = {2L * (p.m1 + p.m2), 2L * p.m1 + p.m2, 2L * p.m2 + p.m1};
    if ((p.m1 + p.m2) % 2 == 1) {
        const std::string s1 = "S^" + std::to_string(p.m1), s2 = "S^" + std::to_string(p.m2),
                          s12 = "S^" + std::to_string(p.m1 + p.m2);
        r.cohomology_points = s1 + " x " + s12;
        r.cohomology_lines = s2 + " x " + s12;
        r.cohomology_flags = s1 + " x " + s2 + " x " + s12;
    }
    return r;
}

std::vector<CandidatePair> candidate_point_spaces(const MultiplicityPair& p, int max_rank)
{
    if (p.m1 < 3) throw DomainError("out of classified range: m1 = " + std::to_string(p.m1) + " < 3");
    if ((p.m1 + p.m2) % 2 == 0) throw DomainError("out of classified range: m1 + m2 is even");
    Query q;
    q.n1 = p.m1;
    q.n2 = p.m1 + p.m2;
    q.max_rank = max_rank;
    return classify(q);
}

std::string series_of(const CandidatePair& c)
{
    auto is = [](const std::string& name, Family f) { return parse_type(name).family == f; };
    auto rank = [](const std::string& name) { return parse_type(name).rank; };
    if (c.search == SearchCase::I && c.g.size() == 1) {
        const std::string& g = c.g.front();
        if (c.h.empty()) {
            if (g == "A2") return "V2(C^n)";
            if (g == "B2") return "V2(H^n)";
            return "";
        }
        const std::string& h = c.h.front();
        const int n = rank(g);
        if (is(g, Family::A) && n >= 3 && is(h, Family::A) && rank(h) == n - 2) return "V2(C^n)";
        if (is(g, Family::C) && n >= 3 && parse_type(h) == canonicalize(Family::C, n - 2).type) return "V2(H^n)";
        return "";
    }
    if (c.search == SearchCase::II && c.g.size() == 1) {
        const std::string& g = c.g.front();
        // SO(2n)/SO(2n-2): D_n > D_{n-1}, with SO(6) = SU(4) and SO(4) = SU(2)SU(2).
        if (g == "A3" && c.h == std::vector<std::string>{"A1", "A1"}) return "V2(R^2n)";
        if (g == "D4" && c.h == std::vector<std::string>{"A3"}) return "V2(R^2n)";
        if (is(g, Family::D) && rank(g) >= 5 && c.h.size() == 1 && is(c.h.front(), Family::D) &&
            rank(c.h.front()) == rank(g) - 1)
            return "V2(R^2n)";
        return "";
    }
    if (c.search == SearchCase::nonsplit && c.g.size() == 2 && c.g.front() != "G2") {
        if (c.residual.front() == 4) return "Sp(n)xSp(2)/Sp(n-1)Sp(1)Sp(1)";
        if (c.g[1] == "A2") return "Sp(n)xSU(3)/Sp(n-1)Sp(1)";
        if (c.g[1] == "B2") return "Sp(n)xSp(2)/Sp(n-1)Sp(1)";
    }
    return "";
}

std::vector<AtlasPoint> atlas(int max)
{
    if (max < 3) throw DomainError("atlas needs --max >= 3");
    std::map<std::pair<int, int>, AtlasPoint> points;
    Query q;
    q.max_rank = max_supported_rank;
    for (const auto& r : classify(q)) {
        if (r.search == SearchCase::split) continue;
        const int n1 = r.residual[0], gap = r.residual[1] - r.residual[0];
        if (n1 > max || gap > max) continue;
        AtlasPoint& pt = points[{n1, gap}];
        pt.n1 = n1;
        pt.gap = gap;
        const std::string s = series_of(r);
        pt.entries.push_back({row_label(r), s.empty() ? "sporadic" : "series", s});
    }
    std::vector<AtlasPoint> out;
    for (auto& [k, v] : points) out.push_back(std::move(v));
    return out;
}

}  // namespace lieclass
