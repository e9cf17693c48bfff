#include "lieclass/modules.hpp"

#include "lieclass/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace lieclass {

namespace {

/// Type of an outer tensor product: C if any part is C, else the product of
/// the R/H parts in Z/2.
FieldType product_type(const std::vector<DominantWeight>& parts)
{
    bool quaternionic = false;
    for (const auto& w : parts) {
        const FieldType f = field_type(w);
        if (f == FieldType::C) return FieldType::C;
        if (f == FieldType::H) quaternionic = !quaternionic;
    }
    return quaternionic ? FieldType::H : FieldType::R;
}

/// True when the simple F-module is the complex irrep itself (no doubling).
bool matches_field(FieldType type, FieldType field)
{
    return field == FieldType::C || type == field;
}

std::vector<DominantWeight> conjugate_parts(const std::vector<DominantWeight>& parts)
{
    std::vector<DominantWeight> out;
    for (const auto& w : parts) out.push_back(conjugate(w));
    return out;
}

/// Orbit representative for F = R, H: the larger of a tuple and its conjugate.
std::vector<DominantWeight> orbit_rep(const std::vector<DominantWeight>& parts, FieldType field)
{
    if (field == FieldType::C) return parts;
    auto c = conjugate_parts(parts);
    return std::max(parts, c);
}

std::string render_simple(const Simple& s, FieldType field)
{
    std::string out;
    if (!s.is_trivial() && !matches_field(s.type, field)) {
        out += '^';
        out += field_char(field);
    }
    if (s.parts.size() == 1) return out + s.parts[0].str();
    out += '(';
    for (size_t i = 0; i < s.parts.size(); ++i) {
        if (i) out += '|';
        for (size_t k = 0; k < s.parts[i].coeffs.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(s.parts[i].coeffs[k]);
        }
    }
    return out + ')';
}

std::string render_summands(std::vector<std::pair<Int, std::string>> items)
{
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    std::string out;
    for (const auto& [d, text] : items) out += (out.empty() ? "" : "+") + text;
    return out;
}

std::string render_module(const std::vector<Summand>& summands, FieldType field)
{
    std::vector<std::pair<Int, std::string>> items;
    for (const auto& sm : summands) {
        std::string text = render_simple(sm.simple, field);
        if (sm.mult != 1) text = std::to_string(sm.mult) + "*" + text;
        items.emplace_back(sm.simple.dim_over(field), text);
    }
    return render_summands(std::move(items));
}

/// All permutations of factor positions preserving the factor types.
std::vector<std::vector<size_t>> factor_permutations(const std::vector<SimpleType>& factors)
{
    std::vector<size_t> p(factors.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::vector<std::vector<size_t>> out;
    do {
        bool ok = true;
        for (size_t i = 0; i < p.size(); ++i)
            if (factors[p[i]] != factors[i]) ok = false;
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

DominantWeight permute_weight(const DominantWeight& w, const std::vector<int>& perm)
{
    DominantWeight out = w;
    for (size_t i = 0; i < perm.size(); ++i) out.coeffs[perm[i]] = w.coeffs[i];
    return out;
}

int to_small(const Int& v)
{
    if (v > 1000000) throw DomainError("module dimension too large: " + v.str());
    return static_cast<int>(v);
}

}  // namespace

NaturalModule natural_module(const SimpleType& g)
{
    NaturalModule nat;
    nat.group = g;
    std::vector<int> w(g.rank, 0);
    switch (g.family) {
    case Family::A:
        nat.field = FieldType::C;
        w[0] = 1;
        break;
    case Family::B:
        if (g.rank == 2) {
            // Sp(2): quaternionic H^2, the 4-dimensional lambda_2.
            nat.field = FieldType::H;
            w[1] = 1;
        } else {
            nat.field = FieldType::R;
            nat.spin_lift = true;
            w[0] = 1;
        }
        break;
    case Family::C:
        nat.field = FieldType::H;
        w[0] = 1;
        break;
    case Family::D:
        nat.field = FieldType::R;
        nat.spin_lift = true;
        w[0] = 1;
        break;
    default: {
        // Exceptional: the smallest nontrivial irrep (lambda_1 for E6, not its
        // conjugate), which is faithful on the simply connected group.
        const auto irreps = enumerate_irreps(g, 300);
        const IrrepDescriptor* best = nullptr;
        for (const auto& d : irreps) {
            if (d.weight.is_trivial()) continue;
            if (!best || d.dim_c < best->dim_c ||
                (d.dim_c == best->dim_c && d.weight.coeffs > best->weight.coeffs))
                best = &d;
        }
        w = best->weight.coeffs;
        nat.field = best->field;
        break;
    }
    }
    nat.weight = make_weight(g, w);
    const FieldDims dims = dims_over(nat.weight);
    const Int dc = dim_complex(nat.weight);
    nat.dim = to_small(nat.field == FieldType::C ? dc : nat.field == FieldType::R ? dims.dim_r : dc / 2);
    nat.complex_index = index_of_rep(nat.weight);
    return nat;
}

bool Simple::is_trivial() const
{
    return std::all_of(parts.begin(), parts.end(), [](const DominantWeight& w) { return w.is_trivial(); });
}

Int Simple::dim_over(FieldType field) const
{
    switch (field) {
    case FieldType::C: return dim_c;
    case FieldType::R: return type == FieldType::R ? dim_c : 2 * dim_c;
    case FieldType::H: return type == FieldType::H ? dim_c / 2 : dim_c;
    }
    return dim_c;
}

Simple make_simple(std::vector<DominantWeight> parts)
{
    Simple s;
    s.dim_c = 1;
    for (const auto& w : parts) s.dim_c *= dim_complex(w);
    s.type = product_type(parts);
    s.parts = std::move(parts);
    return s;
}

Int HModule::dim() const
{
    Int d = 0;
    for (const auto& sm : summands) d += sm.mult * sm.simple.dim_over(field);
    return d;
}

std::string HModule::render() const
{
    if (factors.empty()) return "trivial";
    return render_module(summands, field);
}

std::vector<Simple> simple_modules(const std::vector<SimpleType>& factors, FieldType field, int max_dim)
{
    // An H-type simple has quaternionic dimension dim_c / 2; every other
    // simple has F-dimension at least dim_c.
    const Int cap = field == FieldType::H ? Int(2 * max_dim) : Int(max_dim);
    std::vector<std::vector<IrrepDescriptor>> per;
    for (const auto& t : factors) per.push_back(enumerate_irreps(t, cap));

    std::vector<Simple> out;
    std::set<std::vector<DominantWeight>> seen;
    std::vector<DominantWeight> cur;
    std::function<void(size_t, const Int&)> rec = [&](size_t i, const Int& dim) {
        if (i == factors.size()) {
            Simple s = make_simple(cur);
            if (s.dim_over(field) > max_dim) return;
            s.parts = orbit_rep(s.parts, field);
            if (seen.insert(s.parts).second) out.push_back(std::move(s));
            return;
        }
        for (const auto& d : per[i]) {
            if (dim * d.dim_c > cap) break;
            cur.push_back(d.weight);
            rec(i + 1, dim * d.dim_c);
            cur.pop_back();
        }
    };
    rec(0, Int(1));
    std::sort(out.begin(), out.end(), [&](const Simple& a, const Simple& b) {
        if (a.dim_over(field) != b.dim_over(field)) return a.dim_over(field) < b.dim_over(field);
        return a.parts < b.parts;
    });
    return out;
}

std::vector<HModule> enumerate_modules(const std::vector<SimpleType>& factors, FieldType field, int dim)
{
    if (factors.empty()) {
        HModule m;
        m.field = field;
        m.summands.push_back({make_simple({}), dim});
        return {m};
    }
    const auto simples = simple_modules(factors, field, dim);
    std::vector<int> sdim;
    for (const auto& s : simples) sdim.push_back(to_small(s.dim_over(field)));

    std::map<std::string, HModule> found;
    std::vector<Summand> cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (left == 0) {
            // Every factor must act nontrivially.
            for (size_t f = 0; f < factors.size(); ++f) {
                bool acts = false;
                for (const auto& sm : cur)
                    if (!sm.simple.parts[f].is_trivial()) acts = true;
                if (!acts) return;
            }
            HModule m{factors, field, cur};
            found.emplace(canonical_witness(m), m);
            return;
        }
        if (i == simples.size()) return;
        rec(i + 1, left);
        for (int k = 1; k * sdim[i] <= left; ++k) {
            cur.push_back({simples[i], k});
            rec(i + 1, left - k * sdim[i]);
            cur.pop_back();
        }
    };
    rec(0, dim);
    std::vector<HModule> out;
    for (auto& [key, m] : found) out.push_back(std::move(m));
    return out;
}

std::string canonical_witness(const HModule& m)
{
    if (m.factors.empty()) return "trivial";
    std::vector<std::vector<std::vector<int>>> autos;
    for (const auto& t : m.factors) autos.push_back(diagram_automorphisms(t));
    const auto perms = factor_permutations(m.factors);
    const int conj_choices = m.field == FieldType::C ? 2 : 1;

    std::string best;
    std::vector<size_t> pick(m.factors.size(), 0);
    std::function<void(size_t)> rec = [&](size_t f) {
        if (f < m.factors.size()) {
            for (size_t a = 0; a < autos[f].size(); ++a) {
                pick[f] = a;
                rec(f + 1);
            }
            return;
        }
        for (const auto& perm : perms)
            for (int conj = 0; conj < conj_choices; ++conj) {
                std::vector<Summand> image;
                for (const auto& sm : m.summands) {
                    std::vector<DominantWeight> parts(m.factors.size());
                    for (size_t i = 0; i < m.factors.size(); ++i) {
                        DominantWeight w = permute_weight(sm.simple.parts[i], autos[i][pick[i]]);
                        if (conj) w = conjugate(w);
                        parts[perm[i]] = w;
                    }
                    Simple s = sm.simple;
                    s.parts = orbit_rep(parts, m.field);
                    image.push_back({s, sm.mult});
                }
                const std::string text = render_module(image, m.field);
                if (best.empty() || text < best) best = text;
            }
    };
    rec(0);
    return best;
}

HModule parse_witness(const std::vector<SimpleType>& factors, FieldType field, const std::string& text)
{
    HModule m;
    m.factors = factors;
    m.field = field;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "trivial") {
        if (!factors.empty()) throw DomainError("witness 'trivial' given for a nontrivial H");
        return m;
    }
    if (factors.empty()) throw DomainError("witness '" + text + "' given for trivial H");

    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw UsageError("witness \"" + text + "\": " + why + " at offset " + std::to_string(pos));
    };
    auto read_int = [&]() {
        const size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        if (pos - start > 6) fail("number too large");
        return std::stoi(s.substr(start, pos - start));
    };
    auto read_coeffs = [&](char close) {
        std::vector<std::vector<int>> parts(1);
        while (true) {
            parts.back().push_back(read_int());
            if (pos >= s.size()) fail("unterminated summand");
            if (s[pos] == ',') { ++pos; continue; }
            if (s[pos] == '|' && close == ')') { ++pos; parts.emplace_back(); continue; }
            if (s[pos] == close) { ++pos; break; }
            fail(std::string("unexpected '") + s[pos] + "'");
        }
        return parts;
    };

    while (true) {
        int mult = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mult = read_int();
            if (pos >= s.size() || s[pos] != '*') fail("expected '*' after multiplicity");
            ++pos;
            if (mult < 1) fail("multiplicity must be positive");
        }
        bool prefixed = false;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (pos >= s.size() || (s[pos] != 'R' && s[pos] != 'H' && s[pos] != 'C')) fail("expected R, H or C after '^'");
            if (s[pos] != field_char(field))
                throw DomainError("witness \"" + text + "\": prefix ^" + s[pos] + " does not match target field " +
                                  field_char(field));
            prefixed = true;
            ++pos;
        }
        if (pos >= s.size()) fail("expected '[' or '('");
        std::vector<std::vector<int>> coeffs;
        if (s[pos] == '[') {
            ++pos;
            coeffs = read_coeffs(']');
        } else if (s[pos] == '(') {
            ++pos;
            coeffs = read_coeffs(')');
        } else {
            fail("expected '[' or '('");
        }
        if (coeffs.size() != factors.size())
            throw DomainError("witness \"" + text + "\": summand has " + std::to_string(coeffs.size()) +
                              " parts, H has " + std::to_string(factors.size()) + " factors");
        std::vector<DominantWeight> parts;
        for (size_t i = 0; i < factors.size(); ++i) parts.push_back(make_weight(factors[i], coeffs[i]));
        Simple simple = make_simple(std::move(parts));
        const bool needs = !simple.is_trivial() && !matches_field(simple.type, field);
        if (needs != prefixed)
            throw DomainError("witness \"" + text + "\": summand " + render_simple(simple, field) +
                              (needs ? " needs" : " must not carry") + " a field prefix");
        m.summands.push_back({std::move(simple), mult});
        if (pos == s.size()) break;
        if (s[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return m;
}

std::vector<Int> complex_indices(const HModule& m)
{
    std::vector<Int> out(m.factors.size(), 0);
    for (const auto& sm : m.summands) {
        const int doubling = matches_field(sm.simple.type, m.field) ? 1 : 2;
        for (size_t i = 0; i < m.factors.size(); ++i) {
            Int l = index_of_rep(sm.simple.parts[i]);
            for (size_t j = 0; j < m.factors.size(); ++j)
                if (j != i) l *= dim_complex(sm.simple.parts[j]);
            out[i] += sm.mult * doubling * l;
        }
    }
    return out;
}

std::vector<Int> embedding_indices(const HModule& m, const NaturalModule& nat)
{
    std::vector<Int> out;
    for (const Int& l : complex_indices(m)) {
        if (l % nat.complex_index != 0)
            throw std::logic_error("module " + m.render() + " has complex index " + l.str() +
                                   " not divisible by " + nat.complex_index.str());
        out.push_back(l / nat.complex_index);
    }
    return out;
}

AbelianGroup finite_group_structure(const std::vector<std::vector<int>>& elements, const std::vector<int>& orders)
{
    const size_t n = elements.size();
    if (n <= 1) return {};
    auto killed_by = [&](long k) {
        size_t count = 0;
        for (const auto& e : elements) {
            bool ok = true;
            for (size_t g = 0; g < orders.size(); ++g)
                if ((k * e[g]) % orders[g] != 0) ok = false;
            if (ok) ++count;
        }
        return count;
    };
    // For each prime p, the number of cyclic p-factors of order >= p^k is
    // log_p(|G[p^k]| / |G[p^{k-1}]|); slot i collects the i-th largest.
    std::vector<Int> slots;
    size_t rest = n;
    for (long p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<long> sizes;
        size_t prev = 1;
        for (long pk = p;; pk *= p) {
            const size_t cur = killed_by(pk);
            size_t ratio = cur / prev;
            size_t c = 0;
            while (ratio > 1) {
                ratio /= p;
                ++c;
            }
            if (c == 0) break;
            if (sizes.size() < c) sizes.resize(c, 1);
            for (size_t i = 0; i < c; ++i) sizes[i] *= p;
            prev = cur;
        }
        if (slots.size() < sizes.size()) slots.resize(sizes.size(), Int(1));
        for (size_t i = 0; i < sizes.size(); ++i) slots[i] *= sizes[i];
    }
    AbelianGroup g;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) g.torsion.push_back(*it);
    return g;
}

std::vector<int> center_orders(const std::vector<SimpleType>& factors)
{
    std::vector<int> orders;
    for (const auto& t : factors)
        for (int o : center(t).generator_orders) orders.push_back(o);
    return orders;
}

std::vector<std::vector<int>> lift_kernel_elements(const HModule& m, const NaturalModule& nat)
{
    // Center of the product as exponent vectors over all generators.
    std::vector<int> orders;
    std::vector<size_t> offset;
    std::vector<CenterSpec> centers;
    for (const auto& t : m.factors) {
        offset.push_back(orders.size());
        centers.push_back(center(t));
        for (int o : centers.back().generator_orders) orders.push_back(o);
    }
    std::vector<std::vector<int>> all(1);
    for (int o : orders) {
        std::vector<std::vector<int>> next;
        for (const auto& e : all)
            for (int k = 0; k < o; ++k) {
                auto v = e;
                v.push_back(k);
                next.push_back(std::move(v));
            }
        all = std::move(next);
    }

    const std::vector<Int> idx = nat.spin_lift ? embedding_indices(m, nat) : std::vector<Int>{};
    // Rotation number of lambda_k of factor f at element e.
    auto fundamental_rotation = [&](size_t f, int k, const std::vector<int>& e) {
        const auto ch = center_character(m.factors[f], k + 1);
        Rat r = 0;
        for (size_t g = 0; g < ch.size(); ++g) r += ch[g] * e[offset[f] + g];
        return mod_one(r);
    };

    std::vector<std::vector<int>> kernel;
    for (const auto& e : all) {
        bool trivial_action = true;
        for (const auto& sm : m.summands) {
            Rat r = 0;
            for (size_t f = 0; f < m.factors.size(); ++f)
                for (int k = 0; k < m.factors[f].rank; ++k)
                    if (sm.simple.parts[f].coeffs[k])
                        r += fundamental_rotation(f, k, e) * sm.simple.parts[f].coeffs[k];
            if (!is_integer(r)) {
                trivial_action = false;
                break;
            }
        }
        if (!trivial_action) continue;
        if (nat.spin_lift) {
            // exp(2 pi i t X) is a loop in SO(N); it lifts to a loop in Spin(N)
            // iff sum_f j_f (X_f, X_f) is even.
            Rat parity = 0;
            for (size_t f = 0; f < m.factors.size(); ++f) {
                const auto& cd = cartan_data(m.factors[f]);
                const int n = m.factors[f].rank;
                std::vector<Rat> r(n);
                for (int k = 0; k < n; ++k) r[k] = fundamental_rotation(f, k, e);
                Rat xx = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) xx += r[i] * r[j] * cd.cartan[i][j] / cd.d[j];
                parity += xx * idx[f];
            }
            if (!is_integer(parity)) throw std::logic_error("non-integral spin parity for " + m.render());
            if (to_int(parity) % 2 != 0) continue;
        }
        kernel.push_back(e);
    }
    return kernel;
}

AbelianGroup lift_kernel(const HModule& m, const NaturalModule& nat)
{
    if (m.factors.empty()) return {};
    return finite_group_structure(lift_kernel_elements(m, nat), center_orders(m.factors));
}

AbelianGroup lift_kernel_product(const std::vector<std::pair<HModule, NaturalModule>>& targets)
{
    if (targets.empty()) throw std::logic_error("lift_kernel_product needs at least one target");
    const auto& factors = targets.front().first.factors;
    if (factors.empty()) return {};
    std::vector<std::vector<int>> kernel = lift_kernel_elements(targets.front().first, targets.front().second);
    for (size_t i = 1; i < targets.size(); ++i) {
        if (targets[i].first.factors != factors) throw std::logic_error("lift_kernel_product: factor mismatch");
        const auto other = lift_kernel_elements(targets[i].first, targets[i].second);
        std::vector<std::vector<int>> both;
        for (const auto& e : kernel)
            if (std::find(other.begin(), other.end(), e) != other.end()) both.push_back(e);
        kernel = std::move(both);
    }
    return finite_group_structure(kernel, center_orders(factors));
}

}  // namespace lieclass
