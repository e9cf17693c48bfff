#pragma once

#include "lieclass/classifier.hpp"

#include <string>
#include <vector>

namespace lieclass {

/// Admissibility of multiplicities (m1, m2) of compact (m1, m2)-quadrangles
/// and of isoparametric hypersurfaces with four principal curvatures.

struct MultiplicityPair {
    int m1 = 1;
    int m2 = 1;
};

/// Validates m1, m2 >= 1 (DomainError otherwise).
MultiplicityPair make_multiplicities(int m1, int m2);

enum class Tri { pass, fail, not_applicable };
std::string tri_name(Tri t);

struct Check {
    Tri result = Tri::not_applicable;
    /// Which clause decided: "equal", "one", "odd-sum", "none" (Muenzner);
    /// "special-case", "divisibility" (Stolz, Markert); "precondition".
    std::string clause;
    /// The power of two tested, when a divisibility clause was evaluated.
    long divisor = 0;
};

/// Either m1 = m2 in {1, 2, 4}, or 1 in {m1, m2}, or m1 + m2 odd.
Check munzner_admissible(const MultiplicityPair& p);

/// |{ i : 1 <= i <= k, i = 0, 1, 2, 4 mod 8 }|; DomainError for k < 0.
int phi(int k);

/// For 2 <= m1 < m2: (m1, m2) = (4, 5) or 2^phi(m1 - 1) divides m1 + m2 + 1.
Check stolz_admissible(const MultiplicityPair& p);

/// For 2 <= m1 < m2: with k = min(m2 - m1, m1 - 1), 2^phi(k) divides m1 + m2 + 1.
Check markert_check(const MultiplicityPair& p);

struct QuadrangleDims {
    long flags = 0;    ///< 2 (m1 + m2)
    long points = 0;   ///< 2 m1 + m2
    long lines = 0;    ///< 2 m2 + m1
};

struct AdmissibilityReport {
    MultiplicityPair p;
    Check munzner, stolz, markert;
    QuadrangleDims dims;
    /// Integral cohomology patterns of P, L, F (only when m1 + m2 is odd).
    std::string cohomology_points, cohomology_lines, cohomology_flags;
};

AdmissibilityReport report(const MultiplicityPair& p);

/// Homogeneous candidates for the point space: classifier rows for
/// (n1, n2) = (m1, m1 + m2).  DomainError unless m1 >= 3 and m1 + m2 odd.
std::vector<CandidatePair> candidate_point_spaces(const MultiplicityPair& p, int max_rank);

/// One point (n1, n2 - n1) of the distribution of integral spheres-product
/// types, products of homogeneous spheres excluded.
struct AtlasEntry {
    std::string label;    ///< e.g. "E6/F4"
    std::string kind;     ///< "series" or "sporadic"
    std::string series;   ///< series name for kind == "series"
};
struct AtlasPoint {
    int n1 = 0;
    int gap = 0;          ///< n2 - n1
    std::vector<AtlasEntry> entries;
    /// Number of distinct group actions at this point (2 = double mark).
    int multiplicity() const { return static_cast<int>(entries.size()); }
};

/// All points with n1 <= max and n2 - n1 <= max, ordered by (n1, gap).
std::vector<AtlasPoint> atlas(int max);

/// Series a surviving row belongs to ("" for sporadic rows).
std::string series_of(const CandidatePair& c);

}  // namespace lieclass
