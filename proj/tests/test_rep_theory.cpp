#include "lieclass/errors.hpp"
#include "lieclass/rep_theory.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace lieclass;

namespace {

/// Closed-form Weyl dimensions of the rank <= 2 types (a = coefficient of
/// lambda_1, b = coefficient of lambda_2), derived by hand from the positive
/// roots; used as an oracle independent of the general implementation.
Int closed_form_dim(const SimpleType& t, int a, int b)
{
    const Int A = a, B = b;
    switch (t.family) {
    case Family::A:
        if (t.rank == 1) return A + 1;
        return (A + 1) * (B + 1) * (A + B + 2) / 2;
    case Family::B:   // lambda_2 is the 4-dimensional spin module
        return (A + 1) * (B + 1) * (A + B + 2) * (2 * A + B + 3) / 6;
    case Family::G2:  // lambda_1 is the 7-dimensional module
        return (A + 1) * (B + 1) * (A + B + 2) * (A + 2 * B + 3) * (A + 3 * B + 4) * (2 * A + 3 * B + 5) / 120;
    default: throw std::logic_error("no closed form");
    }
}

/// All weights with every coefficient <= max_dim whose closed-form
/// dimension is <= max_dim.
std::set<std::vector<int>> brute_force(const SimpleType& t, int max_dim)
{
    std::set<std::vector<int>> out;
    for (int a = 0; a <= max_dim; ++a)
        for (int b = 0; b <= (t.rank == 1 ? 0 : max_dim); ++b)
            if (closed_form_dim(t, a, b) <= max_dim) out.insert(t.rank == 1 ? std::vector<int>{a} : std::vector<int>{a, b});
    return out;
}

}  // namespace

TEST_CASE("enumeration equals brute force for the rank <= 2 types")
{
    for (const auto& t : {parse_type("A1"), parse_type("A2"), parse_type("B2"), parse_type("G2")}) {
        for (int max_dim : {1, 2, 7, 14, 27, 50}) {
            CAPTURE(t.name());
            CAPTURE(max_dim);
            std::set<std::vector<int>> got;
            for (const auto& d : enumerate_irreps(t, max_dim)) {
                got.insert(d.weight.coeffs);
                CHECK(d.dim_c == closed_form_dim(t, d.weight.coeffs[0], t.rank == 1 ? 0 : d.weight.coeffs[1]));
            }
            CHECK(got == brute_force(t, max_dim));
        }
    }
}

TEST_CASE("Weyl formula agrees with the closed forms on a grid")
{
    for (const auto& t : {parse_type("A1"), parse_type("A2"), parse_type("B2"), parse_type("G2")})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= (t.rank == 1 ? 0 : 6); ++b) {
                const auto w = t.rank == 1 ? make_weight(t, {a}) : make_weight(t, {a, b});
                CHECK(dim_complex(w) == closed_form_dim(t, a, b));
            }
}

TEST_CASE("classical dimension formulas")
{
    using test_support::choose;
    for (int n = 2; n <= 9; ++n) {
        const auto a = parse_type("A" + std::to_string(n));
        std::vector<int> w(n, 0);
        w[0] = 2;
        CHECK(dim_complex(make_weight(a, w)) == choose(n + 2, 2));   // S^2 C^{n+1}
        w[0] = 3;
        CHECK(dim_complex(make_weight(a, w)) == choose(n + 3, 3));   // S^3 C^{n+1}
    }
    for (int n = 2; n <= 9; ++n) {
        const auto b = canonicalize(Family::B, n).type;
        std::vector<int> w(n, 0);
        w[n - 1] = 1;
        CHECK(dim_complex(make_weight(b, w)) == Int(1) << n);        // spin module
    }
    for (int n = 4; n <= 9; ++n) {
        const auto d = parse_type("D" + std::to_string(n));
        std::vector<int> w(n, 0);
        w[n - 1] = 1;
        CHECK(dim_complex(make_weight(d, w)) == Int(1) << (n - 1));  // half-spin module
    }
    CHECK(dim_complex(parse_weight(parse_type("E8"), "1,0,0,0,0,0,0,0")) == 248);
    CHECK(dim_complex(parse_weight(parse_type("E6"), "1,0,0,0,0,0")) == 27);
    CHECK(dim_complex(parse_weight(parse_type("E7"), "1,0,0,0,0,0,0")) == 56);
    CHECK(dim_complex(parse_weight(parse_type("F4"), "1,0,0,0")) == 26);
}

TEST_CASE("field types and dimensions over R and H")
{
    const auto c3 = parse_type("C3");
    const auto l3 = parse_weight(c3, "0,0,1");
    CHECK(field_type(l3) == FieldType::H);
    CHECK(dims_over(l3).dim_h == 7);
    CHECK(dims_over(l3).dim_r == 28);
    const auto d5 = parse_type("D5");
    const auto l4 = parse_weight(d5, "0,0,0,1,0");
    CHECK(field_type(l4) == FieldType::C);
    CHECK(dims_over(l4).dim_r == 32);
    CHECK(conjugate(l4) == parse_weight(d5, "0,0,0,0,1"));

    // Conjugation is an involution preserving dimension; Galois-fixed weights
    // are R or H, others C; dim_r and dim_h follow the type.
    std::mt19937 rng(7);
    for (const auto& t : canonical_types(7)) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> c(t.rank);
            for (auto& x : c) x = static_cast<int>(rng() % 3);
            const auto w = make_weight(t, c);
            const auto cw = conjugate(w);
            CHECK(conjugate(cw) == w);
            CHECK(dim_complex(cw) == dim_complex(w));
            const FieldType f = field_type(w);
            CHECK((f == FieldType::C) == (cw != w));
            const Int d = dim_complex(w);
            const FieldDims fd = dims_over(w);
            if (f == FieldType::R) CHECK(fd.dim_r == d);
            if (f == FieldType::C) CHECK((fd.dim_r == 2 * d && fd.dim_h == d));
            if (f == FieldType::H) CHECK((fd.dim_r == 2 * d && fd.dim_h * 2 == d));
        }
    }
}

TEST_CASE("beta is multiplicative on Galois-fixed weights")
{
    // For weights fixed by conjugation, H parts combine like signs.
    for (const auto& t : {parse_type("C4"), parse_type("B5"), parse_type("A1"), parse_type("E7"), parse_type("D6")}) {
        const auto g = galois_involution(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = i; j < t.rank; ++j) {
                if (g[i] != i || g[j] != j) continue;
                std::vector<int> c(t.rank, 0);
                ++c[i];
                ++c[j];
                const bool hi = beta_fundamental(t, i + 1) == FieldType::H;
                const bool hj = beta_fundamental(t, j + 1) == FieldType::H;
                CHECK((field_type(make_weight(t, c)) == FieldType::H) == (hi != hj));
            }
    }
}

TEST_CASE("dimension grows when a fundamental weight is added")
{
    std::mt19937 rng(11);
    for (const auto& t : canonical_types(6)) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> c(t.rank);
            for (auto& x : c) x = static_cast<int>(rng() % 3);
            const auto w = make_weight(t, c);
            for (int i = 0; i < t.rank; ++i) {
                auto c2 = c;
                ++c2[i];
                CHECK(dim_complex(make_weight(t, c2)) > dim_complex(w));
            }
        }
    }
}

TEST_CASE("kernels of representations")
{
    for (const auto& t : canonical_types(8)) {
        CAPTURE(t.name());
        CHECK(rep_kernel(make_weight(t, adjoint_weight(t))).is_full());
        CHECK(rep_kernel(make_weight(t, std::vector<int>(t.rank, 0))).is_full());
    }
    CHECK(rep_kernel(parse_weight(parse_type("A3"), "1,0,0")).is_trivial());
    CHECK(rep_kernel(parse_weight(parse_type("A3"), "0,1,0")).order() == 2);   // SO(6)
    CHECK(rep_kernel(parse_weight(parse_type("B3"), "1,0,0")).order() == 2);   // SO(7)
    CHECK(rep_kernel(parse_weight(parse_type("B3"), "0,0,1")).is_trivial());   // spin
    CHECK(rep_kernel(parse_weight(parse_type("A1"), "2")).order() == 2);       // SO(3)
}

TEST_CASE("weight grammar")
{
    const auto a2 = parse_type("A2");
    CHECK(parse_weight(a2, " 1 , 2 ").str() == "[1,2]");
    CHECK_THROWS_AS(parse_weight(a2, "1,x"), UsageError);
    CHECK_THROWS_AS(parse_weight(a2, ""), UsageError);
    CHECK_THROWS_AS(parse_weight(a2, "1,0,0"), DomainError);
    CHECK_THROWS_AS(parse_weight(a2, "-1,0"), DomainError);
    CHECK_THROWS_AS(enumerate_irreps(a2, 0), DomainError);
}

TEST_CASE("real irreps up to a real dimension")
{
    // SU(2): R^1 (trivial), R^3, H^1 = R^4, R^5, H^2 = R^8 ...
    std::vector<Int> dims;
    for (const auto& d : real_irreps_up_to(parse_type("A1"), 8)) dims.push_back(d.dim_r);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<Int>{1, 3, 4, 5, 7, 8});
}
