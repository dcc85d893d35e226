#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

#include "ostra/bigint.hpp"
#include "ostra/convergent_table.hpp"
#include "ostra/digits.hpp"
#include "ostra/errors.hpp"

namespace ostra {

// Base-alpha expansion of a natural number: N = sum c_k q_{k-1} with
// c_1 <= a_1 - 1, c_k <= a_k, and c_k = a_k forcing c_{k-1} = 0.
struct AbsExpansion {
    Digits digits;  // little-endian, canonical (no trailing zeros)

    std::size_t length() const { return digits.size(); }
};

// Greedy expansion: repeatedly bracket the remainder between consecutive
// denominators and divide by the lower one. Unique by the division
// algorithm; admissibility falls out of the bracketing bounds.
inline AbsExpansion expand_natural(ConvergentTable& tbl, Int n) {
    if (n < 0) throw std::invalid_argument("expand_natural needs n >= 0");
    AbsExpansion e;
    if (n == 0) return e;  // vacuous expansion
    while (n > 0) {
        std::size_t pos = tbl.bracket(n);  // q_{pos-1} <= n < q_pos
        if (e.digits.empty()) e.digits.assign(pos, Int(0));
        Int base = tbl.denominator(static_cast<std::int64_t>(pos) - 1);
        Int c = n / base;
        e.digits[pos - 1] = c;
        n -= c * base;
        internal_check(n < base, "greedy remainder must drop below the divisor");
    }
    return e;
}

// Exact dot product of digits with (q_0, q_1, ...). Defined for any digit
// vector, admissible or not.
inline Int evaluate_abs(ConvergentTable& tbl, std::span<const Int> digits_le) {
    Int sum = 0;
    for (std::size_t i = 0; i < digits_le.size(); ++i)
        sum += digits_le[i] * tbl.denominator(static_cast<std::int64_t>(i));
    return sum;
}

inline Int evaluate_abs(ConvergentTable& tbl, const AbsExpansion& e) {
    return evaluate_abs(tbl, std::span<const Int>(e.digits));
}

// Admissibility check, reporting the first violation read from the most
// significant position down.
inline Verdict validate_abs(ConvergentTable& tbl, std::span<const Int> digits_le) {
    std::size_t ell = digits_le.size();
    if (ell > 0 && digits_le[ell - 1] == 0)
        return Verdict::fail(DigitFault::trailing_zero, ell);
    for (std::size_t k = ell; k >= 1; --k) {
        const Int& d = digits_le[k - 1];
        Int a = tbl.quotient(k);
        if (k == 1) {
            if (d < 0 || d > a - 1) return Verdict::fail(DigitFault::first_digit_bound, 1);
        } else {
            if (d < 0 || d > a) return Verdict::fail(DigitFault::digit_too_large, k);
            if (d == a && digits_le[k - 2] != 0)
                return Verdict::fail(DigitFault::markov_violation, k);
        }
    }
    return Verdict::pass();
}

inline Verdict validate_abs(ConvergentTable& tbl, const AbsExpansion& e) {
    return validate_abs(tbl, std::span<const Int>(e.digits));
}

}  // namespace ostra
