#pragma once

#include <map>
#include <string>
#include <vector>

namespace lieclass {

/// Free graded-commutative algebra: polynomial on even generators tensor
/// exterior on odd generators.
struct FreeAlgebraSpec {
    std::vector<int> even_gens;
    std::vector<int> odd_gens;
};

/// Q[a]/(a^m) tensor Lambda(odd_gens) with deg a even.
struct TruncatedAlgebraSpec {
    int a_deg = 2;
    int trunc_power = 2;
    std::vector<int> odd_gens;
};

/// Sparse degree -> rank of pi_k (x) Q; zero ranks are never stored.
using RankTable = std::map<int, int>;

/// Validation helpers; throw DomainError on parity / range violations.
void validate(const FreeAlgebraSpec& s);
void validate(const TruncatedAlgebraSpec& s);

/// rk pi_k = number of generators of degree k.
RankTable homotopy_ranks_free(const FreeAlgebraSpec& s);

/// rk pi_k = 1 at k = deg a, r_k + 1 at k = m deg a - 1, r_k elsewhere.
RankTable homotopy_ranks_truncated(const TruncatedAlgebraSpec& s);

int total_rank(const RankTable& t);

enum class AlgebraKind { trivial, exterior, polynomial };

/// Reduced rational cohomology of K(pi, n) with pi of free rank r.
struct EMCohomology {
    AlgebraKind kind = AlgebraKind::trivial;
    int generators = 0;
    int degree = 0;
    std::string str() const;
};
EMCohomology em_rational_cohomology(int free_rank, int n);

/// Case (I) counting: E_2 has dimension 2^r 2^{rk H}, E_infty = H(G) has
/// 2^{rk G}; the spectral sequence collapses iff rk G - rk H = r.
bool collapse_budget_case1(const std::vector<int>& g_exps, const std::vector<int>& h_exps, int r);

/// Case (II) counting: the rank gap is exactly 1 and dim E_2 = 2 dim E_infty,
/// so the sequence cannot collapse; returns true when that budget balances.
bool collapse_budget_case2(const std::vector<int>& g_exps, const std::vector<int>& h_exps);

/// "3,5" -> free spec with odd gens 3,5 (even entries go to even_gens).
FreeAlgebraSpec parse_free_spec(const std::string& text);
/// "4^2;11,15" -> truncated spec (a of degree 4, m = 2, odd gens 11, 15).
TruncatedAlgebraSpec parse_truncated_spec(const std::string& text);

}  // namespace lieclass
