#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace ostra {

// All quotients, denominators, values and digits are exact integers;
// denominators grow exponentially, so a fixed-width type is never enough.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Largest s with s*s <= n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return s * s == n;
}

// Strict decimal integer parse; rejects anything cpp_int would silently eat.
inline Int parse_int(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start)
        throw std::invalid_argument("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("not an integer: '" + text + "'");
    return Int(text);
}

}  // namespace ostra
