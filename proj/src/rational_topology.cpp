#include "lieclass/rational_topology.hpp"

#include "lieclass/errors.hpp"
#include "lieclass/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace lieclass {

void validate(const FreeAlgebraSpec& s)
{
    for (int d : s.even_gens)
        if (d < 2 || d % 2 != 0)
            throw DomainError("even generator degree " + std::to_string(d) + " must be even and >= 2");
    for (int d : s.odd_gens)
        if (d < 3 || d % 2 != 1)
            throw DomainError("odd generator degree " + std::to_string(d) + " must be odd and >= 3");
}

void validate(const TruncatedAlgebraSpec& s)
{
    if (s.a_deg < 2 || s.a_deg % 2 != 0)
        throw DomainError("deg(a) = " + std::to_string(s.a_deg) + " must be even and >= 2");
    if (s.trunc_power < 2)
        throw DomainError("truncation power m = " + std::to_string(s.trunc_power) + " must be >= 2");
    validate(FreeAlgebraSpec{{}, s.odd_gens});
}

RankTable homotopy_ranks_free(const FreeAlgebraSpec& s)
{
    validate(s);
    RankTable t;
    for (int d : s.even_gens) ++t[d];
    for (int d : s.odd_gens) ++t[d];
    return t;
}

RankTable homotopy_ranks_truncated(const TruncatedAlgebraSpec& s)
{
    validate(s);
    RankTable t;
    for (int d : s.odd_gens) ++t[d];
    const int top = s.trunc_power * s.a_deg - 1;
    // deg a is even and top is odd, so the two special degrees never collide.
    assert(top != s.a_deg);
    t[s.a_deg] = 1;
    ++t[top];
    return t;
}

int total_rank(const RankTable& t)
{
    int s = 0;
    for (const auto& [k, r] : t) s += r;
    return s;
}

std::string EMCohomology::str() const
{
    switch (kind) {
    case AlgebraKind::trivial: return "Q";
    case AlgebraKind::exterior:
        return "Lambda(" + std::to_string(generators) + " gens of degree " + std::to_string(degree) + ")";
    case AlgebraKind::polynomial:
        return "Q[" + std::to_string(generators) + " gens of degree " + std::to_string(degree) + "]";
    }
    return "?";
}

EMCohomology em_rational_cohomology(int free_rank, int n)
{
    if (n < 1) throw DomainError("K(pi, n) needs n >= 1");
    if (free_rank < 0) throw DomainError("free rank must be non-negative");
    EMCohomology c;
    c.degree = n;
    c.generators = free_rank;
    if (free_rank == 0)
        c.kind = AlgebraKind::trivial;
    else
        c.kind = n % 2 == 1 ? AlgebraKind::exterior : AlgebraKind::polynomial;
    return c;
}

bool collapse_budget_case1(const std::vector<int>& g_exps, const std::vector<int>& h_exps, int r)
{
    // 2^{|g|} == 2^r * 2^{|h|}
    return static_cast<int>(g_exps.size()) == r + static_cast<int>(h_exps.size());
}

bool collapse_budget_case2(const std::vector<int>& g_exps, const std::vector<int>& h_exps)
{
    // dim E_2 = 4 * 2^{|h|} and dim E_infty = 2^{|g|}; non-collapse with a
    // single differential halving E_2 needs 4 * 2^{|h|} == 2 * 2^{|g|}.
    return static_cast<int>(g_exps.size()) == static_cast<int>(h_exps.size()) + 1;
}

FreeAlgebraSpec parse_free_spec(const std::string& text)
{
    FreeAlgebraSpec s;
    for (long v : parse_int_list(text, "free spec")) {
        if (v > 1000000 || v < -1000000) throw UsageError("free spec: degree too large");
        (v % 2 == 0 ? s.even_gens : s.odd_gens).push_back(static_cast<int>(v));
    }
    validate(s);
    return s;
}

TruncatedAlgebraSpec parse_truncated_spec(const std::string& text)
{
    TruncatedAlgebraSpec s;
    const size_t semi = text.find(';');
    const std::string head = text.substr(0, semi);
    const size_t caret = head.find('^');
    if (caret == std::string::npos)
        throw UsageError("truncated spec: expected 'a^m' before ';' (e.g. \"4^2;11\")");
    const auto a = parse_int_list(head.substr(0, caret), "truncated spec degree");
    const auto m = parse_int_list(head.substr(caret + 1), "truncated spec power");
    if (a.size() != 1 || m.size() != 1)
        throw UsageError("truncated spec: 'a^m' takes one degree and one power");
    s.a_deg = static_cast<int>(a[0]);
    s.trunc_power = static_cast<int>(m[0]);
    if (semi != std::string::npos) {
        const std::string tail = text.substr(semi + 1);
        if (tail.find_first_not_of(" \t") != std::string::npos)
            for (long v : parse_int_list(tail, "truncated spec odd generators"))
                s.odd_gens.push_back(static_cast<int>(v));
    }
    validate(s);
    return s;
}

}  // namespace lieclass
