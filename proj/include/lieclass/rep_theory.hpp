#pragma once

#include "lieclass/lie_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

/// Non-negative coefficients over the fundamental weights of `type`.
struct DominantWeight {
    SimpleType type;
    std::vector<int> coeffs;

    auto operator<=>(const DominantWeight&) const = default;

    bool is_trivial() const;
    /// "[1,0,2]" — the notation used in witnesses and fixtures.
    std::string str() const;
};

/// Builds a weight and validates length and sign; DomainError otherwise.
DominantWeight make_weight(const SimpleType& t, std::vector<int> coeffs);
/// Parses "1,0,2" for the given type (UsageError on bad grammar).
DominantWeight parse_weight(const SimpleType& t, const std::string& text);

/// Subgroup of the center, listed as exponent vectors over its generators.
struct CenterSubgroup {
    CenterSpec ambient;
    std::vector<std::vector<int>> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool is_trivial() const { return elements.size() == 1; }
    bool is_full() const { return static_cast<int>(elements.size()) == ambient.order(); }
    std::string str() const;
};

struct IrrepDescriptor {
    DominantWeight weight;
    Int dim_c;
    FieldType field = FieldType::R;
    Int dim_r;
    /// Quaternionic dimension of ^H rho: dim_c / 2 for H-type, dim_c for C-type.
    /// For R-type the doubled module ^H rho = rho (x) H has the same value
    /// dim_c; it is still reported so callers can compare uniformly.
    Int dim_h;
    CenterSubgroup kernel;
};

/// Exact Cartan data derived once per type.
struct CartanData {
    SimpleType type;
    std::vector<std::vector<int>> cartan;        ///< A_ij = <alpha_i^vee, alpha_j>
    std::vector<Rat> d;                          ///< half squared root lengths
    std::vector<std::vector<int>> pos_coroots;   ///< in the simple-coroot basis
    std::vector<std::vector<Rat>> weight_gram;   ///< (lambda_i, lambda_k)
};

/// Cached per type (thread-safe, immutable after construction).
const CartanData& cartan_data(const SimpleType& t);

/// Positive roots of a generalized Cartan matrix C_ij = <beta_i^vee, beta_j>,
/// as coefficient vectors over the simple roots, sorted by height.
std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& c);

/// Weyl dimension formula, exact; throws std::logic_error if the quotient is
/// not integral (never rounds).
Int dim_complex(const DominantWeight& w);
DominantWeight conjugate(const DominantWeight& w);
FieldType field_type(const DominantWeight& w);

struct FieldDims {
    Int dim_r;
    Int dim_h;
};
FieldDims dims_over(const DominantWeight& w);

/// Rotation number of w on each center generator: sum_i m_i r_i(g) mod 1.
std::vector<Rat> central_character(const DominantWeight& w);
CenterSubgroup rep_kernel(const DominantWeight& w);

/// (u, v) in the invariant form with long roots of squared length 2.
Rat weight_inner(const SimpleType& t, const std::vector<int>& u, const std::vector<int>& v);
/// (lambda, lambda + 2 rho).
Rat casimir(const DominantWeight& w);

IrrepDescriptor describe(const DominantWeight& w);

/// All dominant weights with dim_complex <= max_dim, sorted by (dim, coeffs).
/// Search walks coefficientwise-increasing weights and prunes on the
/// monotonicity lambda < mu  =>  dim(lambda) < dim(mu).
std::vector<IrrepDescriptor> enumerate_irreps(const SimpleType& t, const Int& max_dim);

/// One representative per Galois orbit with dim_r <= max_real_dim.  The
/// representative is the lexicographically larger of w and conjugate(w).
std::vector<IrrepDescriptor> real_irreps_up_to(const SimpleType& t, const Int& max_real_dim);

}  // namespace lieclass
