#pragma once

#include "lieclass/curated.hpp"
#include "lieclass/modules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

/// Exponent-matching search for compact homogeneous spaces G/H with the
/// cohomology of S^{n1} x S^{n2} (or of a single sphere), followed by the
/// module-existence and torsion filters.

/// Residual degrees when h is a sub-multiset of g (both sorted); nullopt
/// otherwise.  The residual keeps multiplicities and is sorted.
std::optional<std::vector<int>> match_case1(const std::vector<int>& g_exps, const std::vector<int>& h_exps);

struct Case2Match {
    int s = 0;    ///< 0-based position in h_exps of the transformed degree
    int n1 = 0;   ///< m_s + 1
    int n2 = 0;   ///< the single residual degree
    bool operator==(const Case2Match&) const = default;
};

/// For each position s: replace m_s by 2 m_s + 1; if the result is contained
/// in g_exps with a single residual rho > m_s + 1, emit (m_s + 1, rho).
/// Matches with identical (n1, n2) are reported once (first s).  Throws
/// DomainError unless |g| = |h| + 1.
std::vector<Case2Match> match_case2(const std::vector<int>& g_exps, const std::vector<int>& h_exps);

/// Sorted concatenation of the exponents of several factors.
std::vector<int> combined_exponents(const std::vector<SimpleType>& factors);

/// Outcome of the module-existence test for H -> G (G simple).
struct Feasibility {
    bool feasible = false;
    /// "computed" (classical G), "curated" (exceptional G, table hit) or
    /// "curated-data-missing" (exceptional G without a table entry).
    std::string source;
    std::vector<std::string> witnesses;   ///< canonical module strings
    std::string quote;                    ///< anchor for curated data
};

/// Classical G: every module of H of the natural dimension over the natural
/// field on which each factor of H acts nontrivially.  Exceptional G: the
/// curated subgroup table.
Feasibility feasibility_filter(const SimpleType& g, const std::vector<SimpleType>& h);

/// Torsion data and the integral verdict of one candidate.
struct TorsionVerdict {
    /// "pass", "fail" (computed torsion), "excluded" (curated exclusion),
    /// "duplicate" (same space as another row), "curated-data-missing",
    /// "not-applicable" (infeasible rows).
    std::string verdict = "not-applicable";
    std::optional<AbelianGroup> pi2;
    std::optional<AbelianGroup> pi3;
    IntMatrix matrix;                 ///< rows: factors of G, columns: factors of H
    std::string source;               ///< "computed" or "curated"
    std::string note;
    std::string quote;
};

struct CandidatePair {
    std::vector<std::string> g;       ///< type names of the factors of G
    std::vector<std::string> h;       ///< type names of the factors of H ("T1" = circle)
    std::string h0;                   ///< diagonal factor of a non-split row, if any
    std::vector<int> residual;        ///< (n1, n2), or (n) for spheres
    SearchCase search = SearchCase::I;
    bool feasible = false;
    std::string feasibility;          ///< "computed", "curated", "curated-data-missing", "infeasible"
    std::vector<std::string> witnesses;
    TorsionVerdict torsion;
    std::vector<std::string> curated_notes;
    int multiplicity = 1;

    /// Feasible and integrally a product of spheres (resp. a sphere).
    bool survives() const { return feasible && torsion.verdict == "pass"; }
    /// Visible when the integral filter is disabled.
    bool rationally_possible() const { return feasible || feasibility == "curated-data-missing"; }
};

/// pi_2 and pi_3 of G/H for simple G, decided from the module m, with the
/// curated verdict for (search, G, H, witness) taking precedence over a
/// computed pass.
TorsionVerdict integral_filter(SearchCase search, const SimpleType& g, const HModule& m);

/// All rational candidates of the respective search (feasible or not), one
/// row per (G, H, witness), deterministically ordered.
std::vector<CandidatePair> classify_case1(int max_rank);
std::vector<CandidatePair> classify_case2(int max_rank);
std::vector<CandidatePair> classify_spheres(int max_rank);
/// Split rows (products of two integral spheres) and non-split rows.
std::vector<CandidatePair> classify_semisimple(int max_rank);

/// Largest rank cap accepted by the searches.
constexpr int max_supported_rank = 16;

struct Query {
    /// "SxS" (product of two spheres) or "S" (single sphere).
    std::string pattern = "SxS";
    std::optional<int> n1, n2;
    int max_rank = 12;
    /// "auto", "1", "2", "sphere", "semisimple", "split", "nonsplit".
    std::string search = "auto";
    bool rational_only = false;
    bool include_infeasible = false;
};

/// Runs the searches selected by the query and filters the rows.  Throws
/// DomainError for (n1, n2) outside the classified envelope (n1 >= 3, n2 odd,
/// n2 >= n1, and n2 > n1 when n1 is even) and UsageError for bad options.
std::vector<CandidatePair> classify(const Query& q);

/// Coincidence labels attached to matching rows.
void annotate_coincidences(std::vector<CandidatePair>& rows);

/// Space label such as "SU(5)/Sp(2)" for display.
std::string row_label(const CandidatePair& c);

}  // namespace lieclass
