#include "lieclass/classifier.hpp"
#include "lieclass/errors.hpp"
#include "lieclass/rational_topology.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lieclass;

TEST_CASE("truncated algebra (2n, 2): only pi_2n and pi_{4n-1} are infinite")
{
    for (int n = 1; n <= 10; ++n) {
        const RankTable t = homotopy_ranks_truncated({2 * n, 2, {}});
        CHECK(t == RankTable{{2 * n, 1}, {4 * n - 1, 1}});
    }
    // Even spheres and complex projective spaces.
    CHECK(homotopy_ranks_truncated({2, 3, {}}) == RankTable{{2, 1}, {5, 1}});
    CHECK(homotopy_ranks_truncated({4, 2, {11}}) == RankTable{{4, 1}, {7, 1}, {11, 1}});
    CHECK(homotopy_ranks_truncated({4, 2, {7}}) == RankTable{{4, 1}, {7, 2}});
}

TEST_CASE("free algebras: ranks count generators")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        FreeAlgebraSpec s;
        const int ne = static_cast<int>(rng() % 4), no = static_cast<int>(rng() % 6);
        for (int i = 0; i < ne; ++i) s.even_gens.push_back(2 * (1 + static_cast<int>(rng() % 10)));
        for (int i = 0; i < no; ++i) s.odd_gens.push_back(3 + 2 * static_cast<int>(rng() % 15));
        const RankTable t = homotopy_ranks_free(s);
        CHECK(total_rank(t) == ne + no);
        for (const auto& [deg, rk] : t) {
            const auto count = std::count(s.even_gens.begin(), s.even_gens.end(), deg) +
                               std::count(s.odd_gens.begin(), s.odd_gens.end(), deg);
            CHECK(rk == count);
            CHECK(rk > 0);
        }
    }
    CHECK(homotopy_ranks_free({}).empty());
}

TEST_CASE("compact groups: rational homotopy in the exponent degrees")
{
    for (const auto& g : canonical_types(8)) {
        FreeAlgebraSpec s;
        s.odd_gens = exponents(g);
        const RankTable t = homotopy_ranks_free(s);
        CHECK(total_rank(t) == g.rank);
        CHECK(t.begin()->first == 3);
    }
}

TEST_CASE("validation and grammar")
{
    CHECK_THROWS_AS(validate(FreeAlgebraSpec{{3}, {}}), DomainError);
    CHECK_THROWS_AS(validate(FreeAlgebraSpec{{}, {4}}), DomainError);
    CHECK_THROWS_AS(validate(FreeAlgebraSpec{{}, {1}}), DomainError);
    CHECK_THROWS_AS(validate(TruncatedAlgebraSpec{3, 2, {}}), DomainError);
    CHECK_THROWS_AS(validate(TruncatedAlgebraSpec{4, 1, {}}), DomainError);

    const FreeAlgebraSpec f = parse_free_spec("3, 5");
    CHECK(f.odd_gens == std::vector<int>{3, 5});
    CHECK(f.even_gens.empty());
    const TruncatedAlgebraSpec t = parse_truncated_spec("4^2;11");
    CHECK(t.a_deg == 4);
    CHECK(t.trunc_power == 2);
    CHECK(t.odd_gens == std::vector<int>{11});
    CHECK(parse_truncated_spec("6^3").odd_gens.empty());
    CHECK_THROWS_AS(parse_truncated_spec("4;11"), UsageError);
    CHECK_THROWS_AS(parse_free_spec("3,a"), UsageError);
}

TEST_CASE("Eilenberg-MacLane spaces")
{
    CHECK(em_rational_cohomology(0, 3).kind == AlgebraKind::trivial);
    const auto odd = em_rational_cohomology(2, 3);
    CHECK(odd.kind == AlgebraKind::exterior);
    CHECK(odd.generators == 2);
    CHECK(odd.degree == 3);
    const auto even = em_rational_cohomology(1, 4);
    CHECK(even.kind == AlgebraKind::polynomial);
    CHECK(even.degree == 4);
    CHECK_THROWS_AS(em_rational_cohomology(1, 0), DomainError);
}

TEST_CASE("collapse budgets")
{
    const auto e = [](const char* t) { return exponents(parse_type(t)); };
    // SU(4)/SU(2): rank gap 2 in Case (I).
    CHECK(collapse_budget_case1(e("A3"), e("A1"), 2));
    CHECK_FALSE(collapse_budget_case1(e("A3"), e("A1"), 1));
    CHECK(collapse_budget_case1(e("A2"), {}, 2));
    // Spin(7)/SU(3): rank gap 1 in Case (II).
    CHECK(collapse_budget_case2(e("B3"), e("A2")));
    CHECK_FALSE(collapse_budget_case2(e("B3"), e("A1")));
}

TEST_CASE("exponent matching")
{
    // Case (I): SU(5) > Sp(2) leaves (5, 9).
    const auto r = match_case1({3, 5, 7, 9}, {3, 7});
    REQUIRE(r);
    CHECK(*r == std::vector<int>{5, 9});
    CHECK_FALSE(match_case1({3, 5, 7}, {11}));
    // Case (II): Spin(7) > SU(3), exponents (3,7,11) vs (3,5): replacing
    // 5 by 11 leaves the residual 7, with n1 = 6.
    const auto m = match_case2({3, 7, 11}, {3, 5});
    REQUIRE(m.size() == 1);
    CHECK(m.front().n1 == 6);
    CHECK(m.front().n2 == 7);
    CHECK_THROWS_AS(match_case2({3, 5, 7}, {3}), DomainError);
}
