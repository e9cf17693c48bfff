#pragma once

#include "lieclass/rep_theory.hpp"

#include <string>
#include <vector>

namespace lieclass {

using IntMatrix = std::vector<std::vector<Int>>;

/// Dynkin index of the (k+1)-dimensional irreducible representation of SU(2).
Int su2_index(long k);

/// Dynkin index of rho_w : H -> SU(dim), i.e. dim * (w, w + 2 rho) / dim H.
/// Zero for the trivial weight.  Composing with SU(N) -> SO(2N) or
/// SU(N) -> Sp(N) keeps the value; for a real module landing in SO(N) the
/// index into SO(N) is half of it, see index_into_orthogonal().
Int index_of_rep(const DominantWeight& w);

/// Index of H -> SO(N) for a module of real type, N >= 5.  Throws
/// DomainError if w is not of real type.
Int index_into_orthogonal(const DominantWeight& w);

inline Int index_sum(const Int& a, const Int& b) { return a + b; }
inline Int index_compose(const Int& a, const Int& b) { return a * b; }

/// Invariant factors d_1 | d_2 | ... of an integer matrix, zeros last; the
/// list has min(rows, cols) entries.  Pivots on the entry of minimal absolute
/// value, ties broken by smallest row then column.
std::vector<Int> smith_invariants(const IntMatrix& m);

/// Finitely generated abelian group: free rank plus nontrivial torsion factors.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// "0", "Z", "Z/8", "Z/2+Z/2", "Z+Z/3".
    std::string str() const;
    bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of the map Z^cols -> Z^rows given by m.
AbelianGroup pi3_cokernel(const IntMatrix& m);

/// Parses "a,b;c,d" (rows separated by ';').  Rows must have equal length.
IntMatrix parse_matrix(const std::string& text);
std::string matrix_str(const IntMatrix& m);

}  // namespace lieclass
