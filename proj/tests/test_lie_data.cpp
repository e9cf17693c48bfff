#include "lieclass/errors.hpp"
#include "lieclass/lie_data.hpp"
#include "lieclass/rep_theory.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

using namespace lieclass;

namespace {

/// Closed-form exponents per family, written out independently.
std::vector<int> expected_exponents(Family f, int n)
{
    std::vector<int> e;
    switch (f) {
    case Family::A:
        for (int i = 1; i <= n; ++i) e.push_back(2 * i + 1);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i) e.push_back(4 * i - 1);
        break;
    case Family::D:
        for (int i = 1; i < n; ++i) e.push_back(4 * i - 1);
        e.push_back(2 * n - 1);
        break;
    case Family::E6: e = {3, 9, 11, 15, 17, 23}; break;
    case Family::E7: e = {3, 11, 15, 19, 23, 27, 35}; break;
    case Family::E8: e = {3, 15, 23, 27, 35, 39, 47, 59}; break;
    case Family::F4: e = {3, 11, 15, 23}; break;
    case Family::G2: e = {3, 11}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

int expected_dimension(Family f, int n)
{
    switch (f) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4: return 52;
    case Family::G2: return 14;
    }
    return 0;
}

int expected_center_order(Family f, int n)
{
    switch (f) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C:
    case Family::E7: return 2;
    case Family::D: return 4;
    case Family::E6: return 3;
    default: return 1;
    }
}

/// Integer determinant by fraction-free elimination.
Int determinant(std::vector<std::vector<int>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return to_int(det);
}

}  // namespace

TEST_CASE("exponents follow the closed forms up to rank 12")
{
    for (const auto& t : canonical_types(12)) {
        CAPTURE(t.name());
        const auto e = exponents(t);
        CHECK(e == expected_exponents(t.family, t.rank));
        CHECK(static_cast<int>(e.size()) == t.rank);
        CHECK(std::accumulate(e.begin(), e.end(), 0) == group_dimension(t));
        CHECK(group_dimension(t) == expected_dimension(t.family, t.rank));
    }
    CHECK(exponents(make_type(Family::E8, 8)) == std::vector<int>{3, 15, 23, 27, 35, 39, 47, 59});
    CHECK(exponents(make_type(Family::D, 4)) == std::vector<int>{3, 7, 7, 11});
}

TEST_CASE("canonical types and aliases")
{
    CHECK(canonicalize(Family::C, 2).type == make_type(Family::B, 2));
    CHECK(canonicalize(Family::D, 3).type == make_type(Family::A, 3));
    CHECK(canonicalize(Family::B, 1).type == make_type(Family::A, 1));
    CHECK(canonicalize(Family::C, 1).type == make_type(Family::A, 1));
    CHECK_FALSE(canonicalize(Family::C, 2).alias.empty());
    CHECK_THROWS_AS(canonicalize(Family::D, 2), DomainError);
    CHECK_THROWS_AS(canonicalize(Family::D, 1), DomainError);
    CHECK_THROWS_AS(canonicalize(Family::A, 0), DomainError);
    CHECK_THROWS_AS(make_type(Family::C, 2), DomainError);
    CHECK_THROWS_AS(canonicalize("E", 5), DomainError);
    CHECK_THROWS_AS(parse_family("Q"), UsageError);
    CHECK(parse_type("e6") == make_type(Family::E6, 6));
    CHECK(parse_type("G2").group_name() == "G2");
    CHECK(parse_type("B4").group_name() == "Spin(9)");
    CHECK(parse_type("C3").group_name() == "Sp(3)");

    // Every type appears once, ranks 1..12 with the expected family counts.
    const auto all = canonical_types(12);
    std::set<SimpleType> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    // A: 12, B: 11 (from 2), C: 10 (from 3), D: 9 (from 4), E: 3, F4, G2.
    CHECK(all.size() == 12 + 11 + 10 + 9 + 3 + 1 + 1);
}

TEST_CASE("center order equals the determinant of the Cartan matrix")
{
    for (const auto& t : canonical_types(12)) {
        CAPTURE(t.name());
        const CenterSpec z = center(t);
        CHECK(z.order() == expected_center_order(t.family, t.rank));
        CHECK(determinant(cartan_matrix(t)) == z.order());
        CHECK(static_cast<int>(z.elements().size()) == z.order());
        if (t.family == Family::D) CHECK((z.kind == CenterKind::klein) == (t.rank % 2 == 0));
    }
}

TEST_CASE("Cartan matrix is consistent with the diagram")
{
    for (const auto& t : canonical_types(10)) {
        CAPTURE(t.name());
        const auto c = cartan_matrix(t);
        const auto edges = dynkin_edges(t);
        CHECK(static_cast<int>(edges.size()) == t.rank - 1);   // a tree
        for (int i = 0; i < t.rank; ++i) CHECK(c[i][i] == 2);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) {
                if (i == j) continue;
                const bool joined = std::count(edges.begin(), edges.end(), std::make_pair(i, j)) +
                                    std::count(edges.begin(), edges.end(), std::make_pair(j, i));
                CHECK((c[i][j] != 0) == joined);
                CHECK((c[i][j] == 0) == (c[j][i] == 0));
            }
    }
}

TEST_CASE("node conventions")
{
    // B_n: the last node is short; C_n: all but the last are short.
    const auto b = root_length_factors(make_type(Family::B, 4));
    CHECK(b[3] < b[0]);
    const auto c = root_length_factors(make_type(Family::C, 4));
    CHECK(c[0] < c[3]);
    // G2: lambda_1 is the 7-dimensional module.
    CHECK(fundamental_dim(make_type(Family::G2, 2), 1) == 7);
    CHECK(fundamental_dim(make_type(Family::G2, 2), 2) == 14);
    // D_n branches at node n-2.
    const auto d = dynkin_edges(make_type(Family::D, 6));
    int deg = 0;
    for (auto [i, j] : d) deg += (i == 3) + (j == 3);
    CHECK(deg == 3);
    // E6: node 6 hangs off node 3; E7 off 4; E8 off 5.
    for (auto [f, r, hub] : {std::tuple{Family::E6, 6, 2}, std::tuple{Family::E7, 7, 3}, std::tuple{Family::E8, 8, 4}}) {
        const auto e = dynkin_edges(make_type(f, r));
        CHECK((std::count(e.begin(), e.end(), std::make_pair(hub, r - 1)) +
               std::count(e.begin(), e.end(), std::make_pair(r - 1, hub))) == 1);
    }
}

TEST_CASE("fundamental dimensions agree with the Weyl formula")
{
    for (const auto& t : canonical_types(8)) {
        CAPTURE(t.name());
        for (int i = 1; i <= t.rank; ++i) {
            std::vector<int> w(t.rank, 0);
            w[i - 1] = 1;
            CHECK(fundamental_dim(t, i) == dim_complex(make_weight(t, w)));
        }
    }
    // Exterior powers of C^{n+1}.
    for (int n = 1; n <= 10; ++n)
        for (int i = 1; i <= n; ++i) CHECK(fundamental_dim(make_type(Family::A, n), i) == test_support::choose(n + 1, i));
}

TEST_CASE("Galois action")
{
    for (int n = 1; n <= 8; ++n) {
        const auto g = galois_involution(make_type(Family::A, n));
        for (int i = 0; i < n; ++i) CHECK(g[i] == n - 1 - i);
    }
    for (int n = 4; n <= 9; ++n) {
        const auto g = galois_involution(make_type(Family::D, n));
        const bool swapped = g[n - 1] == n - 2;
        CHECK(swapped == (n % 2 == 1));
    }
    const auto e6 = galois_involution(make_type(Family::E6, 6));
    CHECK(e6 == std::vector<int>{4, 3, 2, 1, 0, 5});
    for (auto f : {Family::E7, Family::E8, Family::F4, Family::G2}) {
        const SimpleType t = f == Family::G2 ? make_type(f, 2) : f == Family::F4 ? make_type(f, 4)
                           : f == Family::E7 ? make_type(f, 7) : make_type(f, 8);
        const auto g = galois_involution(t);
        for (int i = 0; i < t.rank; ++i) CHECK(g[i] == i);
    }
    // Every Galois action is a diagram automorphism of order <= 2.
    for (const auto& t : canonical_types(10)) {
        const auto g = galois_involution(t);
        const auto autos = diagram_automorphisms(t);
        CHECK(std::find(autos.begin(), autos.end(), g) != autos.end());
        for (int i = 0; i < t.rank; ++i) CHECK(g[g[i]] == i);
    }
}

TEST_CASE("beta on fundamental weights")
{
    // Sp(n): lambda_i quaternionic iff i odd.
    for (int n = 3; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK((beta_fundamental(make_type(Family::C, n), i) == FieldType::H) == (i % 2 == 1));
    // Spin(2n+1) spin module: quaternionic iff n = 1, 2 mod 4.
    for (int n = 2; n <= 10; ++n)
        CHECK((beta_fundamental(make_type(Family::B, n), n) == FieldType::H) == (n % 4 == 1 || n % 4 == 2));
    CHECK(beta_fundamental(make_type(Family::A, 1), 1) == FieldType::H);
    CHECK(beta_fundamental(make_type(Family::E7, 7), 1) == FieldType::H);
    CHECK(beta_fundamental(make_type(Family::A, 5), 3) == FieldType::H);
    CHECK(beta_fundamental(make_type(Family::A, 3), 2) == FieldType::R);
    CHECK_THROWS_AS(beta_fundamental(make_type(Family::A, 4), 1), DomainError);

    // beta agrees with the Frobenius-Schur type of the representation.
    for (const auto& t : canonical_types(8)) {
        const auto g = galois_involution(t);
        for (int i = 1; i <= t.rank; ++i) {
            if (g[i - 1] != i - 1) continue;
            std::vector<int> w(t.rank, 0);
            w[i - 1] = 1;
            CAPTURE(t.name());
            CAPTURE(i);
            CHECK(beta_fundamental(t, i) == field_type(make_weight(t, w)));
        }
    }
}

TEST_CASE("center characters and the adjoint weight")
{
    for (const auto& t : canonical_types(10)) {
        CAPTURE(t.name());
        const auto adj = make_weight(t, adjoint_weight(t));
        CHECK(dim_complex(adj) == group_dimension(t));
        for (const auto& r : central_character(adj)) CHECK(r == 0);
        for (int i = 1; i <= t.rank; ++i) {
            const auto chi = center_character(t, i);
            CHECK(chi.size() == center(t).generator_orders.size());
            for (std::size_t k = 0; k < chi.size(); ++k) {
                CHECK(chi[k] >= 0);
                CHECK(chi[k] < 1);
                CHECK(is_integer(chi[k] * center(t).generator_orders[k]));
            }
        }
    }
    // SU(n+1): e_i(z) = z^i on the generator.
    const auto a4 = make_type(Family::A, 4);
    for (int i = 1; i <= 4; ++i) CHECK(center_character(a4, i).front() == Rat(i, 5));
}
