#include "lieclass/dynkin_index.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieclass {

Int su2_index(long k)
{
    if (k < 1) throw DomainError("su2_index needs k >= 1");
    return binomial(k + 2, 3);
}

Int index_of_rep(const DominantWeight& w)
{
    if (w.is_trivial()) return 0;
    const Rat v = Rat(dim_complex(w)) * casimir(w) / group_dimension(w.type);
    return to_int(v);
}

Int index_into_orthogonal(const DominantWeight& w)
{
    if (field_type(w) != FieldType::R)
        throw DomainError(w.str() + " is not of real type; it does not land in SO(" +
                          to_string(dim_complex(w)) + ")");
    const Int j = index_of_rep(w);
    if (j % 2 != 0) throw std::logic_error("odd complex index for a real module " + w.str());
    return j / 2;
}

std::vector<Int> smith_invariants(const IntMatrix& input)
{
    IntMatrix a = input;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    const size_t n = std::min(rows, cols);
    std::vector<Int> diag;
    for (size_t t = 0; t < n; ++t) {
        while (true) {
            // Pivot: minimal nonzero |entry| in the trailing block.
            bool any = false;
            size_t pr = t, pc = t;
            Int best = 0;
            for (size_t r = t; r < rows; ++r)
                for (size_t c = t; c < cols; ++c) {
                    if (a[r][c] == 0) continue;
                    const Int v = abs(a[r][c]);
                    if (!any || v < best) {
                        any = true;
                        best = v;
                        pr = r;
                        pc = c;
                    }
                }
            if (!any) break;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (size_t r = t + 1; r < rows; ++r) {
                const Int q = a[r][t] / a[t][t];
                if (q != 0)
                    for (size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) clean = false;
            }
            for (size_t c = t + 1; c < cols; ++c) {
                const Int q = a[t][c] / a[t][t];
                if (q != 0)
                    for (size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the whole trailing block; otherwise fold a
            // offending row into row t and repeat.
            bool divides = true;
            for (size_t r = t + 1; r < rows && divides; ++r)
                for (size_t c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    // Nonzero factors first (already in divisibility order), zeros last.
    std::stable_partition(diag.begin(), diag.end(), [](const Int& d) { return d != 0; });
    return diag;
}

std::string AbelianGroup::str() const
{
    if (is_trivial()) return "0";
    std::string s;
    for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "" : "+") + std::string("Z");
    for (const auto& t : torsion) s += (s.empty() ? "" : "+") + ("Z/" + t.str());
    return s;
}

AbelianGroup pi3_cokernel(const IntMatrix& m)
{
    AbelianGroup g;
    const size_t rows = m.size();
    const auto inv = smith_invariants(m);
    size_t rank = 0;
    for (const auto& d : inv) {
        if (d == 0) continue;
        ++rank;
        if (d != 1) g.torsion.push_back(d);
    }
    g.free_rank = static_cast<int>(rows - rank);
    return g;
}

IntMatrix parse_matrix(const std::string& text)
{
    IntMatrix m;
    size_t start = 0;
    while (true) {
        const size_t end = text.find(';', start);
        const std::string row = text.substr(start, end == std::string::npos ? end : end - start);
        std::vector<Int> r;
        try {
            for (long v : parse_int_list(row, "matrix")) r.push_back(v);
        } catch (const UsageError& e) {
            throw UsageError(std::string(e.what()) + " (row " + std::to_string(m.size() + 1) +
                             ", starting at offset " + std::to_string(start) + ")");
        }
        if (!m.empty() && r.size() != m[0].size())
            throw UsageError("matrix: row " + std::to_string(m.size() + 1) + " has " +
                             std::to_string(r.size()) + " entries, expected " +
                             std::to_string(m[0].size()));
        m.push_back(std::move(r));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return m;
}

std::string matrix_str(const IntMatrix& m)
{
    std::string s;
    for (size_t r = 0; r < m.size(); ++r) {
        if (r) s += ";";
        for (size_t c = 0; c < m[r].size(); ++c) {
            if (c) s += ",";
            s += m[r][c].str();
        }
    }
    return s;
}

}  // namespace lieclass
