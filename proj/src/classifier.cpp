#include "lieclass/classifier.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lieclass {

namespace {

/// Multiset difference g \ h of sorted sequences; nullopt if h is not contained.
std::optional<std::vector<int>> multiset_difference(const std::vector<int>& g, const std::vector<int>& h)
{
    std::vector<int> rest;
    size_t j = 0;
    for (int x : g) {
        if (j < h.size() && h[j] == x)
            ++j;
        else
            rest.push_back(x);
    }
    if (j != h.size()) return std::nullopt;
    return rest;
}

std::vector<std::string> names(const std::vector<SimpleType>& ts)
{
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.name());
    return out;
}

bool torsion_free(const AbelianGroup& a) { return a.torsion.empty(); }

/// Rows for one rational match (G simple): one per witness module, or a
/// single infeasible row.
std::vector<CandidatePair> rows_for(SearchCase search, const SimpleType& g, const std::vector<SimpleType>& h,
                                    const std::vector<int>& residual)
{
    CandidatePair base;
    base.g = {g.name()};
    base.h = names(h);
    base.residual = residual;
    base.search = search;

    const Feasibility f = feasibility_filter(g, h);
    if (!f.feasible) {
        base.feasible = false;
        base.feasibility = f.source == "curated-data-missing" ? f.source : "infeasible";
        if (f.source == "curated-data-missing") {
            base.torsion.verdict = "curated-data-missing";
            base.torsion.note = "no curated subgroup data for " + g.name() + " > " +
                                (h.empty() ? std::string("1") : base.h.front());
        } else {
            base.torsion.note = "no module of H of the natural dimension of G";
        }
        base.torsion.quote = f.quote;
        return {base};
    }

    const NaturalModule nat = natural_module(g);
    std::vector<CandidatePair> out;
    for (const auto& w : f.witnesses) {
        CandidatePair c = base;
        c.feasible = true;
        c.feasibility = f.source;
        c.witnesses = {w};
        c.torsion = integral_filter(search, g, parse_witness(h, nat.field, w));
        if (f.source == "curated") c.curated_notes.push_back("embedding from the curated subgroup table");
        out.push_back(std::move(c));
    }
    return out;
}

/// Simple types of a given rank (trivial group for rank 0).
std::vector<std::vector<SimpleType>> simple_subgroups(int rank)
{
    if (rank == 0) return {{}};
    std::vector<std::vector<SimpleType>> out;
    for (const auto& t : canonical_types(rank))
        if (t.rank == rank) out.push_back({t});
    return out;
}

/// Unordered pairs of simple types with the given total rank.
std::vector<std::vector<SimpleType>> two_factor_subgroups(int rank)
{
    std::vector<std::vector<SimpleType>> out;
    const auto all = canonical_types(rank);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i; j < all.size(); ++j)
            if (all[i].rank + all[j].rank == rank) out.push_back({all[i], all[j]});
    return out;
}

void check_rank(int max_rank, int min_rank)
{
    if (max_rank < min_rank || max_rank > max_supported_rank)
        throw DomainError("max rank " + std::to_string(max_rank) + " outside the supported range " +
                          std::to_string(min_rank) + ".." + std::to_string(max_supported_rank));
}

// ---------------------------------------------------------------------------
// Non-split semisimple rows: G = K1 x K2, H = H1 x H0 (Case I) or
// H1 x H2 x H0 (Case II), H0 embedded diagonally.  A row is described by one
// module of H per factor of G; indices, pi_3 and pi_2 follow from those.

struct Target {
    SimpleType k;
    HModule m;
};

/// Module of `factors` from summands given per factor, `parts[i]` being the
/// coefficient vectors (one per factor; empty = trivial on that factor).
HModule assemble(const std::vector<SimpleType>& factors, FieldType field,
                 const std::vector<std::pair<std::vector<std::vector<int>>, int>>& summands)
{
    HModule m;
    m.factors = factors;
    m.field = field;
    for (const auto& [coeffs, mult] : summands) {
        std::vector<DominantWeight> parts;
        for (size_t f = 0; f < factors.size(); ++f) {
            std::vector<int> c = coeffs[f];
            if (c.empty()) c.assign(factors[f].rank, 0);
            parts.push_back(make_weight(factors[f], c));
        }
        m.summands.push_back({make_simple(std::move(parts)), mult});
    }
    return m;
}

/// Re-express an A1-module phi as a module of `factors` on which only factor
/// `at` acts.
HModule extend_to(const HModule& phi, const std::vector<SimpleType>& factors, size_t at)
{
    std::vector<std::pair<std::vector<std::vector<int>>, int>> s;
    for (const auto& sm : phi.summands) {
        std::vector<std::vector<int>> coeffs(factors.size());
        coeffs[at] = sm.simple.parts.front().coeffs;
        s.push_back({coeffs, sm.mult});
    }
    return assemble(factors, phi.field, s);
}

std::string describe_targets(const std::vector<Target>& ts)
{
    std::string out;
    for (const auto& t : ts) {
        if (!out.empty()) out += ";";
        out += t.k.name() + ":" + t.m.render();
    }
    return out;
}

CandidatePair nonsplit_row(const std::vector<Target>& ts, const std::vector<SimpleType>& h, const std::string& h0,
                           SearchCase sub)
{
    CandidatePair c;
    std::vector<SimpleType> ks;
    for (const auto& t : ts) ks.push_back(t.k);
    c.g = names(ks);
    c.h = names(h);
    c.h0 = h0;
    c.search = SearchCase::nonsplit;
    c.feasible = true;
    c.feasibility = "computed";
    c.witnesses = {describe_targets(ts)};

    const auto g_exps = combined_exponents(ks);
    const auto h_exps = combined_exponents(h);
    if (sub == SearchCase::I) {
        c.residual = match_case1(g_exps, h_exps).value();
    } else {
        for (const auto& m : match_case2(g_exps, h_exps))
            if (m.n1 == 4) c.residual = {m.n1, m.n2};
        if (c.residual.empty()) throw std::logic_error("non-split Case II row without n1 = 4 match");
    }

    TorsionVerdict& t = c.torsion;
    t.source = "computed";
    std::vector<std::pair<HModule, NaturalModule>> lifts;
    for (const auto& target : ts) {
        const NaturalModule nat = natural_module(target.k);
        t.matrix.push_back(embedding_indices(target.m, nat));
        lifts.push_back({target.m, nat});
    }
    t.pi3 = pi3_cokernel(t.matrix);
    t.pi2 = lift_kernel_product(lifts);
    if (!t.pi2->is_trivial()) {
        t.verdict = "fail";
        t.note = "pi_2 = " + t.pi2->str();
    } else if (!torsion_free(*t.pi3)) {
        t.verdict = "fail";
        t.note = "pi_3 = " + t.pi3->str();
    } else {
        t.verdict = "pass";
    }
    return c;
}

void curate_nonsplit(CandidatePair& c, const std::string& note, const std::string& quote)
{
    if (c.torsion.verdict == "pass") {
        c.torsion.verdict = "excluded";
        c.torsion.source = "curated";
        c.torsion.note = note;
        c.torsion.quote = quote;
    } else {
        c.curated_notes.push_back(note);
    }
}

/// The A1-modules phi : Sp(1) -> K2 for K2 in {A2, B2, G2}.
std::vector<HModule> phi_modules(const SimpleType& k2)
{
    const SimpleType a1 = make_type(Family::A, 1);
    const NaturalModule nat = natural_module(k2);
    std::vector<HModule> out;
    if (is_exceptional(k2.family)) {
        const CuratedEmbeddings cur = curated_exceptional(k2, {a1}).value();
        for (const auto& w : cur.witnesses)
            out.push_back(parse_witness({a1}, nat.field, w));
    } else {
        out = enumerate_modules({a1}, nat.field, nat.dim);
    }
    return out;
}

std::vector<CandidatePair> nonsplit_rows(int max_rank)
{
    const SimpleType a1 = make_type(Family::A, 1);
    const SimpleType b2 = make_type(Family::B, 2);
    const SimpleType g2 = make_type(Family::G2, 2);
    const std::vector<SimpleType> k2_choices = {make_type(Family::A, 2), b2, g2};
    const std::string pi5_quote = "$\\pi_5=\\ZZ/2$";
    std::vector<CandidatePair> out;

    // Sp(n) -> Sp(n-1) x Sp(1): the H-module of H1 x H0 on H^n.
    auto symplectic_k1 = [&](int n, const std::vector<SimpleType>& h, size_t h1, size_t h0) {
        const SimpleType k1 = canonicalize(Family::C, n).type;
        std::vector<std::pair<std::vector<std::vector<int>>, int>> s;
        std::vector<std::vector<int>> first(h.size()), second(h.size());
        first[h1] = natural_module(h[h1]).weight.coeffs;
        second[h0] = {1};
        s.push_back({first, 1});
        s.push_back({second, 1});
        return Target{k1, assemble(h, FieldType::H, s)};
    };
    // G2 -> SO(4) = (H1 x H0)/{+-1} on R^7 = (1|1) + (2|0) or (0|2): the
    // factor carrying the 3-dimensional piece has index 3, the other index 1.
    auto g2_k1 = [&](const std::vector<SimpleType>& h, size_t h1, size_t h0, bool psi_index_one) {
        std::vector<std::vector<int>> both(h.size()), adj(h.size());
        both[h1] = {1};
        both[h0] = {1};
        adj[psi_index_one ? h0 : h1] = {2};
        return Target{g2, assemble(h, FieldType::R, {{both, 1}, {adj, 1}})};
    };

    // Case (I), h0 = 1.
    for (int n = 2; n + 2 <= max_rank; ++n) {
        const SimpleType h1 = canonicalize(Family::C, n - 1).type;
        const std::vector<SimpleType> h = {h1, a1};
        for (const auto& k2 : k2_choices)
            for (const auto& phi : phi_modules(k2)) {
                auto c = nonsplit_row({symplectic_k1(n, h, 0, 1), {k2, extend_to(phi, h, 1)}}, h, "A1",
                                      SearchCase::I);
                if (k2 == g2 && canonical_witness(phi) == canonical_witness(parse_witness({a1}, FieldType::R, "^R[1]+3*[0]")))
                    curate_nonsplit(c, "pi_5 = Z/2", pi5_quote);
                out.push_back(std::move(c));
            }
    }
    if (max_rank >= 4) {
        const std::vector<SimpleType> h = {a1, a1};
        for (bool psi_one : {true, false})
            for (const auto& k2 : k2_choices)
                for (const auto& phi : phi_modules(k2)) {
                    auto c = nonsplit_row({g2_k1(h, 0, 1, psi_one), {k2, extend_to(phi, h, 1)}}, h, "A1",
                                          SearchCase::I);
                    const Int j_phi = c.torsion.matrix[1][1];
                    if (psi_one && j_phi == 1)
                        curate_nonsplit(c, k2 == g2 ? "pi_5 = Z/2+Z/2" : "pi_5 = Z/2",
                                        k2 == g2 ? "$\\pi_5=\\ZZ/2\\oplus\\ZZ/2$" : pi5_quote);
                    out.push_back(std::move(c));
                }

        // Case (I), h0 = 2: H = H0 of type A1+A1 inside SO(4) x SO(4) resp.
        // SO(4) x Sp(1)Sp(1).
        std::vector<std::vector<int>> one_zero = {{1}, {}}, zero_one = {{}, {1}};
        auto c = nonsplit_row({g2_k1(h, 0, 1, true), {b2, assemble(h, FieldType::H, {{one_zero, 1}, {zero_one, 1}})}},
                              h, "A1+A1", SearchCase::I);
        out.push_back(std::move(c));
        auto d = nonsplit_row({g2_k1(h, 0, 1, true), g2_k1(h, 0, 1, false)}, h, "A1+A1", SearchCase::I);
        d.multiplicity = 2;
        d.curated_notes.push_back("two conjugacy classes (diagonal and anti-diagonal) with the same data");
        out.push_back(std::move(d));
    }

    // Case (II): H = H1 x H2 x H0 with (K2, H2) = (Sp(2), Sp(1)).
    auto sp2_target = [&](const std::vector<SimpleType>& h) {
        std::vector<std::vector<int>> h2(h.size()), h0(h.size());
        h2[1] = {1};
        h0[2] = {1};
        return Target{b2, assemble(h, FieldType::H, {{h2, 1}, {h0, 1}})};
    };
    for (int n = 2; n + 2 <= max_rank; ++n) {
        const std::vector<SimpleType> h = {canonicalize(Family::C, n - 1).type, a1, a1};
        out.push_back(nonsplit_row({symplectic_k1(n, h, 0, 2), sp2_target(h)}, h, "A1", SearchCase::II));
    }
    if (max_rank >= 4) {
        const std::vector<SimpleType> h = {a1, a1, a1};
        for (bool psi_one : {true, false}) {
            auto c = nonsplit_row({g2_k1(h, 0, 2, psi_one), sp2_target(h)}, h, "A1", SearchCase::II);
            curate_nonsplit(c, "mod-2 cohomology of G/H is not that of S^4 x S^11",
                            "(\\ZZ/2)[x_4,x_6]/(x_4^2,x_6^2)");
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CandidatePair> split_rows(int max_rank)
{
    std::vector<CandidatePair> spheres;
    for (auto& s : classify_spheres(max_rank))
        if (s.survives()) spheres.push_back(std::move(s));

    auto rank_of = [](const CandidatePair& c) {
        int r = 0;
        for (const auto& g : c.g) r += parse_type(g).rank;
        return r;
    };
    std::vector<CandidatePair> out;
    for (size_t i = 0; i < spheres.size(); ++i)
        for (size_t j = i; j < spheres.size(); ++j) {
            const CandidatePair* a = &spheres[i];
            const CandidatePair* b = &spheres[j];
            if (rank_of(*a) + rank_of(*b) > max_rank) continue;
            if (a->residual[0] > b->residual[0]) std::swap(a, b);
            const int n1 = a->residual[0], n2 = b->residual[0];
            if (n1 < 3 || n2 % 2 == 0) continue;
            CandidatePair c;
            c.g = a->g;
            c.g.insert(c.g.end(), b->g.begin(), b->g.end());
            c.h = a->h;
            c.h.insert(c.h.end(), b->h.begin(), b->h.end());
            c.residual = {n1, n2};
            c.search = SearchCase::split;
            c.feasible = true;
            c.feasibility = "computed";
            c.witnesses = {a->witnesses.front() + " ; " + b->witnesses.front()};
            c.torsion.verdict = "pass";
            c.torsion.source = "computed";
            c.torsion.note = "product of two homogeneous spheres";
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace

std::optional<std::vector<int>> match_case1(const std::vector<int>& g_exps, const std::vector<int>& h_exps)
{
    return multiset_difference(g_exps, h_exps);
}

std::vector<Case2Match> match_case2(const std::vector<int>& g_exps, const std::vector<int>& h_exps)
{
    if (g_exps.size() != h_exps.size() + 1)
        throw DomainError("Case II matching needs |g| = |h| + 1 (got " + std::to_string(g_exps.size()) + " and " +
                          std::to_string(h_exps.size()) + ")");
    std::vector<Case2Match> out;
    for (size_t s = 0; s < h_exps.size(); ++s) {
        std::vector<int> t = h_exps;
        t[s] = 2 * t[s] + 1;
        std::sort(t.begin(), t.end());
        const auto rest = multiset_difference(g_exps, t);
        if (!rest || rest->size() != 1) continue;
        const Case2Match m{static_cast<int>(s), h_exps[s] + 1, rest->front()};
        if (m.n2 <= m.n1) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const Case2Match& o) { return o.n1 == m.n1 && o.n2 == m.n2; });
        if (!seen) out.push_back(m);
    }
    return out;
}

std::vector<int> combined_exponents(const std::vector<SimpleType>& factors)
{
    std::vector<int> out;
    for (const auto& t : factors) {
        const auto e = exponents(t);
        out.insert(out.end(), e.begin(), e.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Feasibility feasibility_filter(const SimpleType& g, const std::vector<SimpleType>& h)
{
    Feasibility f;
    if (is_exceptional(g.family)) {
        const auto cur = curated_exceptional(g, h);
        if (!cur) {
            f.source = "curated-data-missing";
            return f;
        }
        f.source = "curated";
        f.quote = cur->quote;
        f.witnesses = cur->witnesses;
        f.feasible = !f.witnesses.empty();
        return f;
    }
    const NaturalModule nat = natural_module(g);
    f.source = "computed";
    for (const auto& m : enumerate_modules(h, nat.field, nat.dim)) f.witnesses.push_back(canonical_witness(m));
    std::sort(f.witnesses.begin(), f.witnesses.end());
    f.witnesses.erase(std::unique(f.witnesses.begin(), f.witnesses.end()), f.witnesses.end());
    f.feasible = !f.witnesses.empty();
    return f;
}

TorsionVerdict integral_filter(SearchCase search, const SimpleType& g, const HModule& m)
{
    const NaturalModule nat = natural_module(g);
    TorsionVerdict t;
    t.source = "computed";
    t.matrix = {embedding_indices(m, nat)};
    t.pi3 = pi3_cokernel(t.matrix);
    t.pi2 = lift_kernel(m, nat);

    std::string computed_note;
    if (!t.pi2->is_trivial())
        computed_note = "pi_2 = " + t.pi2->str();
    else if (!torsion_free(*t.pi3))
        computed_note = "pi_3 = " + t.pi3->str();
    t.verdict = computed_note.empty() ? "pass" : "fail";
    t.note = computed_note;

    if (const auto cur = curated_exclusion(search, g, m.factors, canonical_witness(m))) {
        // A computed failure stays the verdict; the curated fact is recorded
        // alongside it.  Otherwise the curated fact decides.
        if (t.verdict == "pass") {
            t.verdict = cur->kind == CuratedKind::duplicate ? "duplicate" : "excluded";
            t.source = "curated";
            t.note = cur->note;
        } else {
            t.note += "; also " + cur->note;
        }
        t.quote = cur->quote;
    }
    return t;
}

std::vector<CandidatePair> classify_case1(int max_rank)
{
    check_rank(max_rank, 2);
    std::vector<CandidatePair> out;
    for (const auto& g : canonical_types(max_rank)) {
        if (g.rank < 2) continue;
        const auto g_exps = exponents(g);
        for (const auto& h : simple_subgroups(g.rank - 2)) {
            const auto res = match_case1(g_exps, combined_exponents(h));
            if (!res || res->size() != 2) continue;
            for (auto& r : rows_for(SearchCase::I, g, h, *res)) out.push_back(std::move(r));
        }
    }
    annotate_coincidences(out);
    return out;
}

std::vector<CandidatePair> classify_case2(int max_rank)
{
    check_rank(max_rank, 3);
    std::vector<CandidatePair> out;
    for (const auto& g : canonical_types(max_rank)) {
        if (g.rank < 2) continue;
        const auto g_exps = exponents(g);
        auto hs = simple_subgroups(g.rank - 1);
        const bool two_factor = !is_exceptional(g.family) && g.rank >= 3 && g.rank <= 5;
        if (two_factor)
            for (auto& h : two_factor_subgroups(g.rank - 1)) hs.push_back(std::move(h));
        for (const auto& h : hs) {
            for (const auto& m : match_case2(g_exps, combined_exponents(h))) {
                // Two almost simple factors only occur for n1 = 4.
                if (h.size() == 2 && m.n1 != 4) continue;
                for (auto& r : rows_for(SearchCase::II, g, h, {m.n1, m.n2})) out.push_back(std::move(r));
            }
        }
    }
    annotate_coincidences(out);
    return out;
}

std::vector<CandidatePair> classify_spheres(int max_rank)
{
    check_rank(max_rank, 1);
    std::vector<CandidatePair> out;
    for (const auto& g : canonical_types(max_rank)) {
        const auto g_exps = exponents(g);
        for (const auto& h : simple_subgroups(g.rank - 1)) {
            const auto res = match_case1(g_exps, combined_exponents(h));
            if (!res || res->size() != 1) continue;
            for (auto& r : rows_for(SearchCase::sphere, g, h, *res)) out.push_back(std::move(r));
        }
    }
    for (const auto& s : even_spheres(max_rank)) {
        CandidatePair c;
        c.g = {s.k.name()};
        c.h = s.h;
        c.residual = {s.dim};
        c.search = SearchCase::sphere;
        c.feasible = true;
        c.feasibility = "curated";
        c.witnesses = {s.witness};
        c.torsion.verdict = "pass";
        c.torsion.source = "curated";
        c.torsion.note = "even-dimensional homogeneous sphere";
        c.torsion.quote = s.quote;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CandidatePair> classify_semisimple(int max_rank)
{
    check_rank(max_rank, 2);
    auto out = split_rows(max_rank);
    for (auto& r : nonsplit_rows(max_rank)) out.push_back(std::move(r));
    return out;
}

void annotate_coincidences(std::vector<CandidatePair>& rows)
{
    for (const auto& co : coincidences())
        for (const RowRef* ref : {&co.a, &co.b})
            for (auto& r : rows) {
                if (r.search != co.search || r.g.size() != 1 || r.g.front() != ref->g || r.h != ref->h) continue;
                if (r.witnesses.size() != 1 || r.witnesses.front() != ref->witness) continue;
                const std::string note = "coincidence: " + co.label;
                if (std::find(r.curated_notes.begin(), r.curated_notes.end(), note) == r.curated_notes.end())
                    r.curated_notes.push_back(note);
            }
}

std::vector<CandidatePair> classify(const Query& q)
{
    if (q.pattern != "SxS" && q.pattern != "S") throw UsageError("pattern must be \"SxS\" or \"S\"");
    check_rank(q.max_rank, 1);
    const bool single = q.pattern == "S";
    if (single && q.n2) throw UsageError("pattern \"S\" takes only --n1");
    if (q.n2 && !q.n1) throw UsageError("--n2 needs --n1");

    if (q.n1) {
        if (single) {
            if (*q.n1 < 2) throw DomainError("out of classified range: sphere dimension must be >= 2");
        } else {
            const int n1 = *q.n1;
            if (n1 < 3) throw DomainError("out of classified range: n1 = " + std::to_string(n1) + " < 3");
            if (q.n2) {
                const int n2 = *q.n2;
                if (n2 % 2 == 0) throw DomainError("out of classified range: n2 = " + std::to_string(n2) + " is even");
                if (n2 < n1 || (n1 % 2 == 0 && n2 == n1))
                    throw DomainError("out of classified range: need n2 > n1 (n2 >= n1 for odd n1)");
            }
        }
    }

    std::vector<CandidatePair> rows;
    auto take = [&](std::vector<CandidatePair> more) {
        for (auto& r : more) rows.push_back(std::move(r));
    };
    const std::string& s = q.search;
    if (single) {
        if (s != "auto" && s != "sphere") throw UsageError("pattern \"S\" only supports --case auto|sphere");
        take(classify_spheres(q.max_rank));
    } else {
        const bool want_odd = !q.n1 || *q.n1 % 2 == 1;
        const bool want_even = !q.n1 || *q.n1 % 2 == 0;
        if (s == "auto") {
            if (want_odd && q.max_rank >= 2) take(classify_case1(q.max_rank));
            if (want_even && q.max_rank >= 3) take(classify_case2(q.max_rank));
            if (q.max_rank >= 2) take(classify_semisimple(q.max_rank));
        } else if (s == "1" || s == "I") {
            take(classify_case1(q.max_rank));
        } else if (s == "2" || s == "II") {
            take(classify_case2(q.max_rank));
        } else if (s == "semisimple") {
            take(classify_semisimple(q.max_rank));
        } else if (s == "split" || s == "nonsplit") {
            for (auto& r : classify_semisimple(q.max_rank))
                if (case_name(r.search) == s) rows.push_back(std::move(r));
        } else if (s == "sphere") {
            throw UsageError("--case sphere needs --pattern S");
        } else {
            throw UsageError("unknown case '" + s + "'");
        }
    }

    std::vector<CandidatePair> out;
    for (auto& r : rows) {
        if (q.n1 && r.residual.front() != *q.n1) continue;
        if (q.n2 && (r.residual.size() < 2 || r.residual[1] != *q.n2)) continue;
        const bool keep = q.include_infeasible ? true : q.rational_only ? r.rationally_possible() : r.survives();
        if (keep) out.push_back(std::move(r));
    }
    return out;
}

std::string row_label(const CandidatePair& c)
{
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "x") + x;
        return s;
    };
    std::string h = c.h.empty() ? "1" : join(c.h);
    if (!c.h0.empty()) h += " (H0 " + c.h0 + ")";
    return join(c.g) + "/" + h;
}

}  // namespace lieclass
