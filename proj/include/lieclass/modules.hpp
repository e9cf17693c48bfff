#pragma once

#include "lieclass/dynkin_index.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

/// The defining module of a target group G used to classify homomorphisms
/// H -> G: C^{n+1} for SU, R^N for Spin (through SO), H^n for Sp, and the
/// smallest faithful module for the exceptional groups.
struct NaturalModule {
    SimpleType group;
    FieldType field = FieldType::C;
    int dim = 0;                 ///< dimension over `field`
    DominantWeight weight;       ///< the G-weight realizing it
    Int complex_index;           ///< index of the complexified module of G
    bool spin_lift = false;      ///< G is Spin(N) acting through SO(N)
};

NaturalModule natural_module(const SimpleType& g);

/// Irreducible summand: an outer tensor product of one irrep per H factor.
struct Simple {
    std::vector<DominantWeight> parts;
    FieldType type = FieldType::R;   ///< of the complex tensor product
    Int dim_c;

    bool is_trivial() const;
    /// Dimension of the associated simple module over `field`.
    Int dim_over(FieldType field) const;
    bool operator==(const Simple& o) const { return parts == o.parts; }
};

Simple make_simple(std::vector<DominantWeight> parts);

struct Summand {
    Simple simple;
    int mult = 1;
};

/// A module of H = H_1 x ... x H_k over a field, as a multiset of simples.
struct HModule {
    std::vector<SimpleType> factors;
    FieldType field = FieldType::C;
    std::vector<Summand> summands;

    Int dim() const;
    /// Rendering without minimization, summands ordered by dimension (desc),
    /// then by text.
    std::string render() const;
};

/// Simple F-modules of H with F-dimension <= max_dim, one per Galois orbit
/// for F = R, H (simultaneous conjugation of all parts).
std::vector<Simple> simple_modules(const std::vector<SimpleType>& factors, FieldType field,
                                   int max_dim);

/// Every module of F-dimension exactly `dim` on which each H factor acts
/// nontrivially.  For an empty factor list the single trivial module.
std::vector<HModule> enumerate_modules(const std::vector<SimpleType>& factors, FieldType field,
                                       int dim);

/// Canonical witness string: the minimal rendering over diagram automorphisms
/// of each factor, permutations of isomorphic factors and (for F = C)
/// simultaneous complex conjugation.  "trivial" for H = 1.
std::string canonical_witness(const HModule& m);

/// Parses a witness string ("^R[1]+3*[0]", "(1|0)+(0|3)") back into a module;
/// UsageError on bad grammar, DomainError on inconsistent prefixes or ranks.
HModule parse_witness(const std::vector<SimpleType>& factors, FieldType field,
                      const std::string& text);

/// Complex Dynkin index of the complexified module restricted to each factor.
std::vector<Int> complex_indices(const HModule& m);

/// Index of H_i -> G for each factor, given the natural module of G:
/// complex index on the module divided by the complex index of G on it.
std::vector<Int> embedding_indices(const HModule& m, const NaturalModule& nat);

/// Kernel of the lift H~ -> G~ (simply connected covers), i.e. pi_1 of the
/// image of H, which is pi_2(G/H).  Central elements acting trivially on the
/// module; for Spin targets additionally the spin-lift parity must be even.
AbelianGroup lift_kernel(const HModule& m, const NaturalModule& nat);

/// Central elements of H~ (exponent vectors over the generators of each
/// factor's center, in order) that lie in the kernel of the lift.
std::vector<std::vector<int>> lift_kernel_elements(const HModule& m, const NaturalModule& nat);
std::vector<int> center_orders(const std::vector<SimpleType>& factors);

/// Kernel of H~ -> G_1~ x G_2~ x ...: one module of the same H per target.
AbelianGroup lift_kernel_product(const std::vector<std::pair<HModule, NaturalModule>>& targets);

/// Structure of a finite abelian group given as a list of elements inside
/// a product of cyclic groups of the given orders.
AbelianGroup finite_group_structure(const std::vector<std::vector<int>>& elements,
                                    const std::vector<int>& orders);

}  // namespace lieclass
