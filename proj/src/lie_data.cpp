#include "lieclass/lie_data.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lieclass {

namespace {

int fixed_rank(Family f)
{
    switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
    }
}

void check_index(const SimpleType& t, int i)
{
    if (i < 1 || i > t.rank)
        throw DomainError("fundamental weight index " + std::to_string(i) + " out of range for " +
                          t.name());
}

std::vector<int> identity_perm(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

bool is_exceptional(Family f) { return fixed_rank(f) != 0; }

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    }
    return "?";
}

std::string SimpleType::name() const
{
    if (is_exceptional(family)) return family_name(family);
    return family_name(family) + std::to_string(rank);
}

std::string SimpleType::group_name() const
{
    const std::string n = std::to_string(rank);
    switch (family) {
    case Family::A: return "SU(" + std::to_string(rank + 1) + ")";
    case Family::B:
        // Spin(5) = Sp(2); the reference tables list it as Sp(2).
        if (rank == 2) return "Sp(2)";
        return "Spin(" + std::to_string(2 * rank + 1) + ")";
    case Family::C: return "Sp(" + n + ")";
    case Family::D: return "Spin(" + std::to_string(2 * rank) + ")";
    default: return family_name(family);
    }
}

SimpleType make_type(Family family, int rank)
{
    const Canonical c = canonicalize(family, rank);
    if (!c.alias.empty())
        throw DomainError(family_name(family) + std::to_string(rank) +
                          " is not canonical (use " + c.type.name() + ")");
    return c.type;
}

Canonical canonicalize(Family family, int rank)
{
    Canonical out;
    if (is_exceptional(family)) {
        if (rank != fixed_rank(family))
            throw DomainError(family_name(family) + " has rank " +
                              std::to_string(fixed_rank(family)) + ", not " +
                              std::to_string(rank));
        out.type = {family, rank};
        out.relabel = identity_perm(rank);
        return out;
    }
    const std::string label = family_name(family) + std::to_string(rank);
    if (rank <= 0) throw DomainError(label + ": rank must be positive (empty diagram)");
    out.relabel = identity_perm(rank);
    switch (family) {
    case Family::A: out.type = {Family::A, rank}; break;
    case Family::B:
        if (rank == 1) {
            out.type = {Family::A, 1};
            out.alias = "B1=A1";
        } else {
            out.type = {Family::B, rank};
        }
        break;
    case Family::C:
        if (rank == 1) {
            out.type = {Family::A, 1};
            out.alias = "C1=A1";
        } else if (rank == 2) {
            // sp(2) = so(5): the long-root node of C2 is the short-root node of B2.
            out.type = {Family::B, 2};
            out.alias = "C2=B2";
            out.relabel = {1, 0};
        } else {
            out.type = {Family::C, rank};
        }
        break;
    case Family::D:
        if (rank == 1) throw DomainError("D1: so(2) is abelian, not simple");
        if (rank == 2) throw DomainError("D2: so(4) = su(2)+su(2) is not simple");
        if (rank == 3) {
            // so(6) = su(4): the vector representation is Lambda^2 C^4, the two
            // half-spin representations are the two natural ones.
            out.type = {Family::A, 3};
            out.alias = "D3=A3";
            out.relabel = {1, 0, 2};
        } else {
            out.type = {Family::D, rank};
        }
        break;
    default: break;
    }
    return out;
}

Family parse_family(const std::string& text)
{
    std::string s;
    for (char ch : text) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    static const std::pair<const char*, Family> table[] = {
        {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4},
        {"G2", Family::G2}, {"F", Family::F4},  {"G", Family::G2}};
    for (const auto& [name, f] : table)
        if (s == name) return f;
    throw UsageError("unknown family '" + text + "'");
}

Canonical canonicalize(const std::string& family, int rank)
{
    std::string s;
    for (char ch : family) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "E") {
        if (rank == 6) return canonicalize(Family::E6, 6);
        if (rank == 7) return canonicalize(Family::E7, 7);
        if (rank == 8) return canonicalize(Family::E8, 8);
        throw DomainError("E" + std::to_string(rank) + ": family E exists only in ranks 6, 7, 8");
    }
    const Family f = parse_family(s);
    if (is_exceptional(f) && rank == 0) rank = fixed_rank(f);
    return canonicalize(f, rank);
}

SimpleType parse_type(const std::string& text)
{
    size_t i = 0;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    if (i != 1) throw UsageError("cannot parse type '" + text + "'");
    const std::string letter = text.substr(0, 1);
    const std::string digits = text.substr(1);
    if (digits.empty()) return canonicalize(letter, 0).type;
    if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch));
        }))
        throw UsageError("cannot parse type '" + text + "'");
    return canonicalize(letter, std::stoi(digits)).type;
}

std::vector<SimpleType> canonical_types(int max_rank)
{
    std::vector<SimpleType> out;
    for (int r = 1; r <= max_rank; ++r) {
        out.push_back({Family::A, r});
        if (r >= 2) out.push_back({Family::B, r});
        if (r >= 3) out.push_back({Family::C, r});
        if (r >= 4) out.push_back({Family::D, r});
        for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
            if (fixed_rank(f) == r) out.push_back({f, r});
    }
    return out;
}

std::vector<int> exponents(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<int> e;
    switch (t.family) {
    case Family::A:
        for (int i = 1; i <= n; ++i) e.push_back(2 * i + 1);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i) e.push_back(4 * i - 1);
        break;
    case Family::D:
        for (int i = 1; i <= n - 1; ++i) e.push_back(4 * i - 1);
        e.push_back(2 * n - 1);
        break;
    case Family::E6: e = {3, 9, 11, 15, 17, 23}; break;
    case Family::E7: e = {3, 11, 15, 19, 23, 27, 35}; break;
    case Family::E8: e = {3, 15, 23, 27, 35, 39, 47, 59}; break;
    case Family::F4: e = {3, 11, 15, 23}; break;
    case Family::G2: e = {3, 11}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

int group_dimension(const SimpleType& t)
{
    const auto e = exponents(t);
    return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<Rat> root_length_factors(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<Rat> d(n, Rat(1));
    const Rat half(1, 2);
    switch (t.family) {
    case Family::B: d[n - 1] = half; break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i) d[i] = half;
        break;
    case Family::F4: d[0] = d[1] = half; break;
    case Family::G2: d[0] = Rat(1, 3); break;
    default: break;
    }
    return d;
}

std::vector<std::pair<int, int>> dynkin_edges(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<std::pair<int, int>> e;
    auto chain = [&](int len) {
        for (int i = 0; i + 1 < len; ++i) e.push_back({i, i + 1});
    };
    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F4:
    case Family::G2: chain(n); break;
    case Family::D:
        chain(n - 1);
        e.push_back({n - 3, n - 1});
        break;
    case Family::E6:
        chain(5);
        e.push_back({2, 5});
        break;
    case Family::E7:
        chain(6);
        e.push_back({3, 6});
        break;
    case Family::E8:
        chain(7);
        e.push_back({4, 7});
        break;
    }
    return e;
}

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t)
{
    const int n = t.rank;
    const auto d = root_length_factors(t);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    // (alpha_i, alpha_j) = -max(d_i, d_j) on an edge, (alpha_i, alpha_i) = 2 d_i.
    for (auto [i, j] : dynkin_edges(t)) {
        const Rat b = -std::max(d[i], d[j]);
        a[i][j] = static_cast<int>(to_int(b / d[i]));
        a[j][i] = static_cast<int>(to_int(b / d[j]));
    }
    return a;
}

int CenterSpec::order() const
{
    int o = 1;
    for (int g : generator_orders) o *= g;
    return o;
}

std::vector<std::vector<int>> CenterSpec::elements() const
{
    std::vector<std::vector<int>> out{std::vector<int>(generator_orders.size(), 0)};
    for (size_t g = 0; g < generator_orders.size(); ++g) {
        std::vector<std::vector<int>> next;
        for (int k = 0; k < generator_orders[g]; ++k)
            for (auto e : out) {
                e[g] = k;
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

std::string CenterSpec::describe() const
{
    switch (kind) {
    case CenterKind::trivial: return "1";
    case CenterKind::cyclic: return "Z/" + std::to_string(generator_orders.at(0));
    case CenterKind::klein: return "Z/2+Z/2";
    }
    return "?";
}

CenterSpec center(const SimpleType& t)
{
    CenterSpec c;
    auto cyclic = [&](int k) {
        c.kind = CenterKind::cyclic;
        c.generator_orders = {k};
        c.generator_names = {"z"};
    };
    switch (t.family) {
    case Family::A: cyclic(t.rank + 1); break;
    case Family::B:
    case Family::C:
    case Family::E7: cyclic(2); break;
    case Family::E6: cyclic(3); break;
    case Family::D:
        if (t.rank % 2 == 1) {
            cyclic(4);
        } else {
            c.kind = CenterKind::klein;
            c.generator_orders = {2, 2};
            c.generator_names = {"z", "z'"};
        }
        break;
    default: break;
    }
    return c;
}

std::vector<int> galois_involution(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<int> p = identity_perm(n);
    switch (t.family) {
    case Family::A:
        for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
        break;
    case Family::D:
        if (n % 2 == 1) std::swap(p[n - 2], p[n - 1]);
        break;
    case Family::E6:
        std::swap(p[0], p[4]);
        std::swap(p[1], p[3]);
        break;
    default: break;
    }
    return p;
}

std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<std::vector<int>> out{identity_perm(n)};
    if (t.family == Family::D && n == 4) {
        // Triality: S3 permuting the three outer nodes 1, 3, 4.
        const int outer[3] = {0, 2, 3};
        std::vector<int> idx = {0, 1, 2};
        while (std::next_permutation(idx.begin(), idx.end())) {
            std::vector<int> p = identity_perm(n);
            for (int k = 0; k < 3; ++k) p[outer[k]] = outer[idx[k]];
            out.push_back(p);
        }
    } else if (t.family == Family::D) {
        auto p = identity_perm(n);
        std::swap(p[n - 2], p[n - 1]);
        out.push_back(p);
    } else if ((t.family == Family::A && n > 1) || t.family == Family::E6) {
        out.push_back(galois_involution(t));
    }
    return out;
}

char field_char(FieldType f)
{
    switch (f) {
    case FieldType::R: return 'R';
    case FieldType::C: return 'C';
    case FieldType::H: return 'H';
    }
    return '?';
}

FieldType beta_fundamental(const SimpleType& t, int i)
{
    check_index(t, i);
    const int n = t.rank;
    if (galois_involution(t)[i - 1] != i - 1)
        throw DomainError("complex type: lambda_" + std::to_string(i) + " of " + t.name() +
                          " is not Galois-fixed");
    switch (t.family) {
    case Family::A:
        // Only lambda_{(n+1)/2} is fixed; quaternionic iff (n+1)/2 is odd.
        return ((n + 1) / 2) % 2 == 1 ? FieldType::H : FieldType::R;
    case Family::B:
        if (i == n) return (n % 4 == 1 || n % 4 == 2) ? FieldType::H : FieldType::R;
        return FieldType::R;
    case Family::C: return i % 2 == 1 ? FieldType::H : FieldType::R;
    case Family::D:
        if (i >= n - 1) return n % 4 == 2 ? FieldType::H : FieldType::R;
        return FieldType::R;
    case Family::E7: return (i == 1 || i == 3 || i == 7) ? FieldType::H : FieldType::R;
    default: return FieldType::R;
    }
}

Int fundamental_dim(const SimpleType& t, int i)
{
    check_index(t, i);
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return binomial(n + 1, i);
    case Family::B:
        if (i == n) return Int(1) << n;
        return binomial(2 * n + 1, i);
    case Family::C: return binomial(2 * n, i) - binomial(2 * n, i - 2);
    case Family::D:
        if (i >= n - 1) return Int(1) << (n - 1);
        return binomial(2 * n, i);
    case Family::E6: {
        static const long v[] = {27, 351, 2925, 351, 27, 78};
        return v[i - 1];
    }
    case Family::E7: {
        static const long v[] = {56, 1539, 27664, 365750, 8645, 133, 912};
        return v[i - 1];
    }
    case Family::E8: {
        static const long v[] = {248,        30380,   2450240, 146325270,
                                 6899079264, 6696000, 3875,    147250};
        return v[i - 1];
    }
    case Family::F4: {
        static const long v[] = {26, 273, 1274, 52};
        return v[i - 1];
    }
    case Family::G2: {
        static const long v[] = {7, 14};
        return v[i - 1];
    }
    }
    return 0;
}

std::vector<Rat> center_character(const SimpleType& t, int i)
{
    check_index(t, i);
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return {mod_one(Rat(i, n + 1))};
    case Family::B: return {Rat(i == n ? 1 : 0, 2)};
    case Family::C: return {mod_one(Rat(i, 2))};
    case Family::D:
        if (n % 2 == 1) {
            // The two half-spin characters are conjugate: sqrt(-1) and -sqrt(-1).
            if (i == n - 1) return {Rat(1, 4)};
            if (i == n) return {Rat(3, 4)};
            return {mod_one(Rat(i, 2))};
        }
        if (i == n - 1) return {Rat(0), Rat(1, 2)};
        if (i == n) return {Rat(1, 2), Rat(0)};
        return {mod_one(Rat(i, 2)), mod_one(Rat(i, 2))};
    case Family::E6: {
        static const int v[] = {1, 2, 0, 1, 2, 0};
        return {Rat(v[i - 1], 3)};
    }
    case Family::E7: return {Rat((i == 1 || i == 3 || i == 7) ? 1 : 0, 2)};
    default: return {};
    }
}

std::vector<int> adjoint_weight(const SimpleType& t)
{
    const int n = t.rank;
    std::vector<int> w(n, 0);
    switch (t.family) {
    case Family::A:
        w[0] += 1;
        w[n - 1] += 1;
        break;
    case Family::B:
        if (n == 2)
            w[1] = 2;
        else
            w[1] = 1;
        break;
    case Family::C: w[0] = 2; break;
    case Family::D: w[1] = 1; break;
    case Family::E6: w[5] = 1; break;
    case Family::E7: w[5] = 1; break;
    case Family::E8: w[0] = 1; break;
    case Family::F4: w[3] = 1; break;
    case Family::G2: w[1] = 1; break;
    }
    return w;
}

}  // namespace lieclass
