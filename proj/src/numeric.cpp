#include "lieclass/numeric.hpp"

#include "lieclass/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace lieclass {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v)
{
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rat mod_one(const Rat& v)
{
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    Int r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
}

bool is_integer(const Rat& v) { return boost::multiprecision::denominator(v) == 1; }

Int to_int(const Rat& v)
{
    if (!is_integer(v)) throw std::logic_error("non-integral value " + to_string(v));
    return boost::multiprecision::numerator(v);
}

std::vector<long> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<long> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw UsageError(what + ": empty list");
    while (true) {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits)
            throw UsageError(what + ": expected integer at position " + std::to_string(start));
        if (i - digits > 15)
            throw UsageError(what + ": integer too large at position " + std::to_string(start));
        out.push_back(std::stol(text.substr(start, i - start)));
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != ',')
            throw UsageError(what + ": unexpected '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i));
        ++i;
    }
    return out;
}

}  // namespace lieclass
