#include "lieclass/errors.hpp"
#include "lieclass/geometry.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lieclass;

namespace {

/// Number of i in 1..k with i = 0, 1, 2, 4 mod 8 (the Radon-Hurwitz count).
int phi_by_count(int k)
{
    int n = 0;
    for (int i = 1; i <= k; ++i) {
        const int r = i % 8;
        if (r == 0 || r == 1 || r == 2 || r == 4) ++n;
    }
    return n;
}

/// Realized multiplicity pairs: the Clifford family (1,k) and the
/// homogeneous examples.
std::vector<std::pair<int, int>> realized_pairs()
{
    std::vector<std::pair<int, int>> p;
    for (int k = 1; k <= 30; ++k) p.push_back({1, k});
    for (int k = 2; k <= 15; ++k) p.push_back({2, 2 * k - 3});
    for (int n = 2; n <= 10; ++n) p.push_back({4, 4 * n - 5});
    p.push_back({4, 5});
    p.push_back({6, 9});
    for (int n = 2; n <= 10; ++n) p.push_back({3, 4 * n - 4});
    p.push_back({8, 7});
    p.push_back({7, 8});
    p.push_back({2, 2});
    p.push_back({4, 4});
    return p;
}

}  // namespace

TEST_CASE("phi counts residues")
{
    for (int k = 0; k <= 64; ++k) CHECK(phi(k) == phi_by_count(k));
    CHECK_THROWS_AS(phi(-1), DomainError);
}

TEST_CASE("Stolz exclusions and the special case")
{
    CHECK(stolz_admissible(make_multiplicities(5, 6)).result == Tri::fail);
    CHECK(stolz_admissible(make_multiplicities(3, 6)).result == Tri::fail);
    const Check c45 = stolz_admissible(make_multiplicities(4, 5));
    CHECK(c45.result == Tri::pass);
    CHECK(c45.clause == "special-case");
    // Outside 2 <= m1 < m2 the condition does not apply.
    CHECK(stolz_admissible(make_multiplicities(1, 5)).result == Tri::not_applicable);
    CHECK(stolz_admissible(make_multiplicities(5, 5)).result == Tri::not_applicable);
    // Divisibility: 2^phi(m1-1) | m1 + m2 + 1.
    for (int m1 = 2; m1 <= 20; ++m1)
        for (int m2 = m1 + 1; m2 <= 40; ++m2) {
            if (m1 == 4 && m2 == 5) continue;
            const bool divides = (m1 + m2 + 1) % (1 << phi_by_count(m1 - 1)) == 0;
            CHECK((stolz_admissible(make_multiplicities(m1, m2)).result == Tri::pass) == divides);
        }
}

TEST_CASE("realized pairs pass Muenzner")
{
    for (auto [m1, m2] : realized_pairs()) {
        CAPTURE(m1);
        CAPTURE(m2);
        CHECK(munzner_admissible(make_multiplicities(m1, m2)).result == Tri::pass);
    }
    CHECK(munzner_admissible(make_multiplicities(3, 3)).result == Tri::fail);
    CHECK(munzner_admissible(make_multiplicities(2, 4)).result == Tri::fail);
    CHECK(munzner_admissible(make_multiplicities(4, 4)).clause == "equal");
    CHECK(munzner_admissible(make_multiplicities(3, 4)).clause == "odd-sum");
}

TEST_CASE("Markert check")
{
    // k = min(m2 - m1, m1 - 1).
    const Check c = markert_check(make_multiplicities(5, 6));
    CHECK(c.divisor == (1 << phi_by_count(1)));
    for (int m1 = 2; m1 <= 16; ++m1)
        for (int m2 = m1 + 1; m2 <= 32; ++m2) {
            const int k = std::min(m2 - m1, m1 - 1);
            const bool divides = (m1 + m2 + 1) % (1 << phi_by_count(k)) == 0;
            CHECK((markert_check(make_multiplicities(m1, m2)).result == Tri::pass) == divides);
        }
}

TEST_CASE("dimension identities of the quadrangle spaces")
{
    for (int m1 = 1; m1 <= 64; ++m1)
        for (int m2 = 1; m2 <= 64; ++m2) {
            const auto r = report(make_multiplicities(m1, m2));
            // Flags fibre over points with fibre S^{m2} and over lines with
            // fibre S^{m1}.
            CHECK(r.dims.flags == r.dims.points + m2);
            CHECK(r.dims.flags == r.dims.lines + m1);
            CHECK(r.dims.points == 2 * m1 + m2);
            CHECK(r.dims.lines == 2 * m2 + m1);
            CHECK(r.dims.points + r.dims.lines == 3 * (m1 + m2));
            CHECK((r.cohomology_points.empty()) == ((m1 + m2) % 2 == 0));
        }
    const auto r = report(make_multiplicities(3, 4));
    CHECK(r.cohomology_points == "S^3 x S^7");
    CHECK(r.cohomology_lines == "S^4 x S^7");
    CHECK_THROWS_AS(make_multiplicities(0, 3), DomainError);
}

TEST_CASE("candidate point spaces")
{
    const auto rows = candidate_point_spaces(make_multiplicities(4, 5), 8);
    std::vector<std::string> labels;
    for (const auto& r : rows) labels.push_back(row_label(r));
    CHECK(std::find(labels.begin(), labels.end(), "A4/B2") == labels.end());   // (4,9) is Case (II)
    CHECK(std::find(labels.begin(), labels.end(), "A4/A1xA2") != labels.end());
    CHECK_THROWS_AS(candidate_point_spaces(make_multiplicities(2, 3), 8), DomainError);
    CHECK_THROWS_AS(candidate_point_spaces(make_multiplicities(3, 5), 8), DomainError);
}

TEST_CASE("atlas")
{
    const auto pts = atlas(25);
    REQUIRE_FALSE(pts.empty());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        CHECK(std::make_pair(pts[i].n1, pts[i].gap) < std::make_pair(pts[i + 1].n1, pts[i + 1].gap));
    bool double_mark = false;
    for (const auto& p : pts) {
        CHECK(p.n1 <= 25);
        CHECK(p.gap <= 25);
        if (p.n1 == 5 && p.gap == 4) double_mark = p.multiplicity() == 2;
    }
    CHECK(double_mark);   // SU(5)/Sp(2) and SU(6)/Sp(3)
    CHECK_THROWS_AS(atlas(2), DomainError);
}
