#pragma once

#include "lieclass/modules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieclass {

/// Facts taken from the literature rather than computed: subgroup
/// classifications inside exceptional groups, mod-p cohomology exclusions,
/// triality identifications, the even-sphere list and homeomorphism
/// coincidences.  Every entry carries a short anchor quote.

/// Which search produced a row.
enum class SearchCase { I, II, sphere, split, nonsplit };
std::string case_name(SearchCase c);
/// "1", "2", "sphere", "split", "nonsplit" (also accepts "I", "II").
SearchCase parse_case(const std::string& text);

/// Known embeddings H -> G for exceptional G, as witness strings over the
/// natural module of G.  nullopt means the pair is not covered by the
/// curated table (callers must report "curated-data-missing").
struct CuratedEmbeddings {
    std::vector<std::string> witnesses;   ///< canonical; empty = no embedding
    std::string quote;
};
std::optional<CuratedEmbeddings> curated_exceptional(const SimpleType& g, const std::vector<SimpleType>& h);

enum class CuratedKind { exclude, duplicate };

struct CuratedVerdict {
    CuratedKind kind = CuratedKind::exclude;
    std::string note;    ///< e.g. "pi_5 = Z/2"
    std::string quote;
};

/// Curated exclusion for (case, G, H, canonical witness), if any.
std::optional<CuratedVerdict> curated_exclusion(SearchCase c, const SimpleType& g,
                                                const std::vector<SimpleType>& h,
                                                const std::string& witness);

/// Even-dimensional homogeneous spheres (not reachable by odd-degree
/// exponent matching).  `h` holds type names; "T1" marks the circle.
struct EvenSphere {
    SimpleType k;
    std::vector<std::string> h;
    std::string witness;
    int dim = 0;
    std::string quote;
};
std::vector<EvenSphere> even_spheres(int max_rank);

/// Two rows describing the same space; flagged, never merged.
struct RowRef {
    std::string g;
    std::vector<std::string> h;
    std::string witness;
};
struct Coincidence {
    SearchCase search;
    RowRef a, b;
    std::string label;
    std::string quote;
};
const std::vector<Coincidence>& coincidences();

}  // namespace lieclass
