#include "lieclass/rep_theory.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lieclass {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix invert(RatMatrix a)
{
    const size_t n = a.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rat p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

CartanData build(const SimpleType& t)
{
    CartanData cd;
    cd.type = t;
    cd.cartan = cartan_matrix(t);
    cd.d = root_length_factors(t);
    const int n = t.rank;

    // Positive coroots are the positive roots of the transposed matrix.
    std::vector<std::vector<int>> at(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at[i][j] = cd.cartan[j][i];
    cd.pos_coroots = positive_roots(at);

    // lambda_i = sum_k M_ik alpha_k with M = (A^T)^{-1}; (lambda_i, lambda_k) = M_ik d_k.
    RatMatrix atr(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) atr[i][j] = at[i][j];
    const RatMatrix m = invert(atr);
    cd.weight_gram.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) cd.weight_gram[i][k] = m[i][k] * cd.d[k];
    return cd;
}

}  // namespace

bool DominantWeight::is_trivial() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::string DominantWeight::str() const
{
    std::string s = "[";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s + "]";
}

DominantWeight make_weight(const SimpleType& t, std::vector<int> coeffs)
{
    if (static_cast<int>(coeffs.size()) != t.rank)
        throw DomainError("weight for " + t.name() + " needs " + std::to_string(t.rank) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    for (int c : coeffs)
        if (c < 0) throw DomainError("weight coefficients must be non-negative");
    return {t, std::move(coeffs)};
}

DominantWeight parse_weight(const SimpleType& t, const std::string& text)
{
    std::vector<int> c;
    for (long v : parse_int_list(text, "weight")) {
        if (v > 1000000) throw UsageError("weight: coefficient too large");
        c.push_back(static_cast<int>(v));
    }
    return make_weight(t, std::move(c));
}

std::string CenterSubgroup::str() const
{
    if (is_trivial()) return "1";
    if (is_full()) return ambient.describe();
    // Proper nontrivial subgroups are cyclic here (orders 2 in Z/4 or Z/2+Z/2,
    // or a divisor of n+1 in Z/(n+1)).
    return "Z/" + std::to_string(order());
}

std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& c)
{
    const int n = static_cast<int>(c.size());
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> roots;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    while (!layer.empty()) {
        roots.insert(roots.end(), layer.begin(), layer.end());
        std::vector<std::vector<int>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                // The i-string through beta: beta - q alpha_i, ..., beta + p alpha_i with
                // p - q = -<alpha_i^vee, beta>.
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[j] * c[i][j];
                int q = 0;
                auto down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !known.count(down)) break;
                    ++q;
                }
                // A simple root has no string below it except -alpha_i (not positive).
                if (q - pairing > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return roots;
}

const CartanData& cartan_data(const SimpleType& t)
{
    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<CartanData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, std::make_unique<CartanData>(build(t))).first;
    return *it->second;
}

Int dim_complex(const DominantWeight& w)
{
    const CartanData& cd = cartan_data(w.type);
    Int num = 1, den = 1;
    for (const auto& c : cd.pos_coroots) {
        long a = 0, b = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            a += static_cast<long>(c[i]) * (w.coeffs[i] + 1);
            b += c[i];
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0)
        throw std::logic_error("Weyl dimension quotient not integral for " + w.str());
    return num / den;
}

DominantWeight conjugate(const DominantWeight& w)
{
    const auto p = galois_involution(w.type);
    DominantWeight out = w;
    for (size_t i = 0; i < p.size(); ++i) out.coeffs[p[i]] = w.coeffs[i];
    return out;
}

FieldType field_type(const DominantWeight& w)
{
    if (conjugate(w) != w) return FieldType::C;
    const auto p = galois_involution(w.type);
    long parity = 0;
    for (int i = 0; i < w.type.rank; ++i) {
        if (p[i] != i || w.coeffs[i] == 0) continue;
        if (beta_fundamental(w.type, i + 1) == FieldType::H) parity += w.coeffs[i];
    }
    return parity % 2 == 1 ? FieldType::H : FieldType::R;
}

FieldDims dims_over(const DominantWeight& w)
{
    const Int d = dim_complex(w);
    switch (field_type(w)) {
    case FieldType::R: return {d, d};
    case FieldType::C: return {2 * d, d};
    case FieldType::H: return {2 * d, d / 2};
    }
    return {d, d};
}

std::vector<Rat> central_character(const DominantWeight& w)
{
    const CenterSpec c = center(w.type);
    std::vector<Rat> r(c.generator_orders.size(), Rat(0));
    for (int i = 0; i < w.type.rank; ++i) {
        if (w.coeffs[i] == 0) continue;
        const auto e = center_character(w.type, i + 1);
        for (size_t g = 0; g < r.size(); ++g) r[g] += e[g] * w.coeffs[i];
    }
    for (auto& x : r) x = mod_one(x);
    return r;
}

CenterSubgroup rep_kernel(const DominantWeight& w)
{
    CenterSubgroup k;
    k.ambient = center(w.type);
    const auto chi = central_character(w);
    for (const auto& e : k.ambient.elements()) {
        Rat s = 0;
        for (size_t g = 0; g < e.size(); ++g) s += chi[g] * e[g];
        if (is_integer(s)) k.elements.push_back(e);
    }
    return k;
}

Rat weight_inner(const SimpleType& t, const std::vector<int>& u, const std::vector<int>& v)
{
    const auto& g = cartan_data(t).weight_gram;
    Rat s = 0;
    for (int i = 0; i < t.rank; ++i) {
        if (u[i] == 0) continue;
        for (int k = 0; k < t.rank; ++k)
            if (v[k] != 0) s += g[i][k] * u[i] * v[k];
    }
    return s;
}

Rat casimir(const DominantWeight& w)
{
    std::vector<int> shifted = w.coeffs;
    for (int& c : shifted) c += 2;
    return weight_inner(w.type, w.coeffs, shifted);
}

IrrepDescriptor describe(const DominantWeight& w)
{
    IrrepDescriptor d;
    d.weight = w;
    d.dim_c = dim_complex(w);
    d.field = field_type(w);
    const FieldDims f = dims_over(w);
    d.dim_r = f.dim_r;
    d.dim_h = f.dim_h;
    d.kernel = rep_kernel(w);
    return d;
}

std::vector<IrrepDescriptor> enumerate_irreps(const SimpleType& t, const Int& max_dim)
{
    if (max_dim < 1) throw DomainError("max_dim must be at least 1");
    std::vector<std::pair<Int, DominantWeight>> found;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    queue.push_back(std::vector<int>(t.rank, 0));
    seen.insert(queue.front());
    while (!queue.empty()) {
        auto c = std::move(queue.front());
        queue.pop_front();
        DominantWeight w{t, c};
        const Int d = dim_complex(w);
        // Every weight below a surviving one is smaller in dimension, so pruning
        // here never cuts off a weight within the bound.
        if (d > max_dim) continue;
        found.emplace_back(d, w);
        for (int i = 0; i < t.rank; ++i) {
            auto up = c;
            up[i] += 1;
            if (seen.insert(up).second) queue.push_back(std::move(up));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.coeffs < b.second.coeffs;
    });
    std::vector<IrrepDescriptor> out;
    out.reserve(found.size());
    for (const auto& [d, w] : found) out.push_back(describe(w));
    return out;
}

std::vector<IrrepDescriptor> real_irreps_up_to(const SimpleType& t, const Int& max_real_dim)
{
    if (max_real_dim < 1) throw DomainError("max_real_dim must be at least 1");
    std::vector<IrrepDescriptor> out;
    for (auto& d : enumerate_irreps(t, max_real_dim)) {
        if (d.dim_r > max_real_dim) continue;
        if (d.field == FieldType::C && conjugate(d.weight).coeffs > d.weight.coeffs) continue;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace lieclass
