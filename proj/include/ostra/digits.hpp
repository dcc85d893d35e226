#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ostra/bigint.hpp"

namespace ostra {

// Digit sequences are stored little-endian: digits[i] is the digit at
// position i+1 and multiplies the basis element of index i. Canonical form
// has no trailing zeros; the empty sequence represents zero.
using Digits = std::vector<Int>;

enum class ExpansionKind { absolute, alternating };

inline const char* kind_name(ExpansionKind k) {
    return k == ExpansionKind::absolute ? "abs" : "alt";
}

// First admissibility violation, scanning from the most significant digit
// down (the order the display reads in).
enum class DigitFault {
    trailing_zero,    // non-canonical: last stored digit is 0
    digit_too_large,  // digit exceeds its partial quotient
    first_digit_bound,  // c_1 exceeds a_1 - 1 (absolute system only)
    markov_violation,   // digit equals its quotient but its neighbor is nonzero
};

inline const char* fault_name(DigitFault f) {
    switch (f) {
        case DigitFault::trailing_zero: return "TrailingZero";
        case DigitFault::digit_too_large: return "DigitTooLarge";
        case DigitFault::first_digit_bound: return "FirstDigitBound";
        case DigitFault::markov_violation: return "MarkovViolation";
    }
    return "?";
}

struct Verdict {
    std::optional<DigitFault> fault;
    std::size_t index = 0;  // 1-based digit position of the violation

    bool ok() const { return !fault.has_value(); }

    static Verdict pass() { return {}; }
    static Verdict fail(DigitFault f, std::size_t index) { return {f, index}; }

    std::string to_string() const {
        if (ok()) return "OK";
        return std::string(fault_name(*fault)) + "(" + std::to_string(index) + ")";
    }
};

inline Digits trim_trailing_zeros(Digits d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

// Display order: most significant digit first.
inline Digits to_big_endian(Digits d) {
    std::reverse(d.begin(), d.end());
    return d;
}

}  // namespace ostra
