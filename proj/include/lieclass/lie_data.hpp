#pragma once

#include "lieclass/numeric.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace lieclass {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// One of the nine compact simple families together with its rank.
/// Construct through make_type() or canonicalize(); both enforce rank bounds.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const SimpleType&) const = default;

    /// Cartan label such as "A4", "E6".
    std::string name() const;
    /// Simply connected compact group: "SU(5)", "Spin(9)", "Sp(3)", "E6".
    std::string group_name() const;
};

/// Validated construction of a canonical type; non-canonical aliases
/// (C2, D3, B1, C1) and invalid ranks are rejected with DomainError.
SimpleType make_type(Family family, int rank);

/// Parses "A4", "e6", "D3" (family letter + rank, rank optional for the
/// exceptional families).  The result is canonicalized.
SimpleType parse_type(const std::string& text);
/// Family from a single token such as "A" or "E6"; UsageError if unknown.
Family parse_family(const std::string& text);
std::string family_name(Family f);
bool is_exceptional(Family f);

/// Result of canonicalize(): the canonical type, the alias applied (empty if
/// none) and the relabeling of fundamental weights, relabel[i] = index of the
/// canonical fundamental weight corresponding to the input weight i (0-based).
struct Canonical {
    SimpleType type;
    std::string alias;
    std::vector<int> relabel;
};

/// Normalizes C2 -> B2, D3 -> A3, B1/C1 -> A1; rejects D2, D1 and rank 0.
Canonical canonicalize(Family family, int rank);
/// Same, from a family letter "A".."G" (E needs rank 6..8, F rank 4, G rank 2)
/// or a full exceptional token such as "E7" (rank must then match or be 0).
Canonical canonicalize(const std::string& family, int rank);

/// Every canonical type of rank <= max_rank, ordered by (rank, family).
std::vector<SimpleType> canonical_types(int max_rank);

/// Odd degrees of the primitive generators of H^*(G; Q), sorted.
std::vector<int> exponents(const SimpleType& t);
int group_dimension(const SimpleType& t);

/// Half squared length d_i of each simple root, long roots normalized to 1.
std::vector<Rat> root_length_factors(const SimpleType& t);
/// Edges (i, j), 0-based, of the Dynkin diagram in the Bourbaki-style numbering used here.
std::vector<std::pair<int, int>> dynkin_edges(const SimpleType& t);
/// Cartan matrix A_ij = <alpha_i^vee, alpha_j>.
std::vector<std::vector<int>> cartan_matrix(const SimpleType& t);

enum class CenterKind { trivial, cyclic, klein };

struct CenterSpec {
    CenterKind kind = CenterKind::trivial;
    /// Order of each generator (empty for the trivial group).
    std::vector<int> generator_orders;
    std::vector<std::string> generator_names;

    int order() const;
    /// All elements as exponent vectors over the generators, identity first.
    std::vector<std::vector<int>> elements() const;
    std::string describe() const;
};

CenterSpec center(const SimpleType& t);

/// Complex conjugation on fundamental weights as a 0-based permutation.
std::vector<int> galois_involution(const SimpleType& t);

/// Automorphisms of the Dynkin diagram (as 0-based permutations, identity
/// included).  Larger than the Galois group for D_n (n even) and D4.
std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t);

enum class FieldType { R, C, H };
char field_char(FieldType f);

/// beta(lambda_i) for a Galois-fixed fundamental weight (i is 1-based).
/// Throws DomainError ("complex type") if lambda_i is not Galois-fixed.
FieldType beta_fundamental(const SimpleType& t, int i);

/// Closed-form dimension of the i-th fundamental representation (1-based).
Int fundamental_dim(const SimpleType& t, int i);

/// Rotation numbers r in [0,1) with e_i(g) = exp(2 pi sqrt(-1) r) for each
/// center generator g (i is 1-based).
std::vector<Rat> center_character(const SimpleType& t, int i);

/// Weight giving the adjoint representation (0-based coefficient vector).
std::vector<int> adjoint_weight(const SimpleType& t);

}  // namespace lieclass
