#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ostra/bigint.hpp"
#include "ostra/convergent_table.hpp"
#include "ostra/digits.hpp"
#include "ostra/errors.hpp"

namespace ostra {

// Base-(-alpha) expansion of an integer: Z = sum b_k q*_{k-1} with
// b_k <= a_k and b_k = a_k forcing b_{k+1} = 0.
struct AltExpansion {
    Digits digits;  // little-endian, canonical

    std::size_t length() const { return digits.size(); }
};

// Per-iteration record of the signed greedy loop, for auditing the loop's
// internal inequalities from outside.
struct AltStep {
    std::size_t position;    // index n_m whose digit was written
    Int digit;
    Int remainder_abs;       // |Z_{m+1}|
    Int divisor;             // q_{n_m - 1}
};

struct AltTrace {
    std::vector<AltStep> steps;
};

// Signed greedy expansion. Each round locates |Z| (shifted by one for
// negative Z) between consecutive denominators, then picks the index of the
// pair whose basis sign matches the sign of Z, so every subtraction moves
// the remainder toward zero:
//
//   - indices n', n'+1 bracket the magnitude; the one with (-1)^(n-1) Z > 0
//     is used;
//   - at the lower index the digit is |Z| div q_{n-1}, bumped by one when
//     the leftover would still clear q_{n-2};
//   - at the upper index the digit is 1.
//
// The visited indices strictly decrease, so each position is written at
// most once; the loop audits that, the n >= 1 guarantee, and the remainder
// bound |Z_{m+1}| <= q_{n_m-1} on every round.
inline AltExpansion expand_integer(ConvergentTable& tbl, Int z, AltTrace* trace = nullptr) {
    AltExpansion e;
    if (z == 0) return e;  // vacuous expansion
    std::vector<bool> written;
    while (z != 0) {
        const bool negative = z < 0;
        Int magnitude = abs(z) + (negative ? 1 : 0);
        // n' >= 0 with q_{n'-1} < magnitude <= q_{n'}
        std::size_t lower = magnitude == 1 ? 0 : tbl.bracket(magnitude - 1);
        // n in {n', n'+1} with (-1)^(n-1) z > 0: odd for positive z, even otherwise
        std::size_t n = lower;
        const bool want_odd = !negative;
        if ((n % 2 == 1) != want_odd) ++n;
        internal_check(n >= 1, "signed greedy index must stay >= 1");

        Int divisor = tbl.denominator(static_cast<std::int64_t>(n) - 1);
        Int basis = tbl.signed_denominator(static_cast<std::int64_t>(n) - 1);
        Int b;
        if (n == lower) {
            b = abs(z) / divisor;
            Int leftover = z - b * basis;
            Int shifted = abs(leftover) + (leftover < 0 ? 1 : 0);
            if (shifted > tbl.denominator(static_cast<std::int64_t>(n) - 2)) ++b;
        } else {
            b = 1;
        }

        if (e.digits.empty()) {
            e.digits.assign(n, Int(0));
            written.assign(n, false);
        }
        internal_check(n <= e.digits.size() && !written[n - 1],
                       "signed greedy loop revisited a digit position");
        e.digits[n - 1] = b;
        written[n - 1] = true;
        z -= b * basis;
        internal_check(abs(z) <= divisor, "signed remainder escaped its bound");
        if (trace) trace->steps.push_back({n, b, abs(z), divisor});
    }
    // final fix-up of b_1 by the remainder; the loop exits with z = 0, so
    // this never changes the digit
    if (!e.digits.empty()) e.digits[0] += z;
    return e;
}

// Exact dot product of digits with (q*_0, q*_1, ...). Defined for any digit
// vector, admissible or not.
inline Int evaluate_alt(ConvergentTable& tbl, std::span<const Int> digits_le) {
    Int sum = 0;
    for (std::size_t i = 0; i < digits_le.size(); ++i)
        sum += digits_le[i] * tbl.signed_denominator(static_cast<std::int64_t>(i));
    return sum;
}

inline Int evaluate_alt(ConvergentTable& tbl, const AltExpansion& e) {
    return evaluate_alt(tbl, std::span<const Int>(e.digits));
}

inline Verdict validate_alt(ConvergentTable& tbl, std::span<const Int> digits_le) {
    std::size_t ell = digits_le.size();
    if (ell > 0 && digits_le[ell - 1] == 0)
        return Verdict::fail(DigitFault::trailing_zero, ell);
    for (std::size_t k = ell; k >= 1; --k) {
        const Int& d = digits_le[k - 1];
        Int a = tbl.quotient(k);
        if (d < 0 || d > a) return Verdict::fail(DigitFault::digit_too_large, k);
        // the condition on b_{k+1} is vacuous at k = ell
        if (d == a && k < ell && digits_le[k] != 0)
            return Verdict::fail(DigitFault::markov_violation, k);
    }
    return Verdict::pass();
}

inline Verdict validate_alt(ConvergentTable& tbl, const AltExpansion& e) {
    return validate_alt(tbl, std::span<const Int>(e.digits));
}

// Split into the nonnegative sums Z+ and Z- with value = Z+ - Z-: odd
// positions pair with even-index denominators (positive basis), even
// positions with odd-index denominators (negative basis).
struct SplitParts {
    Int positive;
    Int negative;
};

inline SplitParts split_parts(ConvergentTable& tbl, std::span<const Int> digits_le) {
    SplitParts parts{0, 0};
    for (std::size_t i = 0; i < digits_le.size(); ++i) {
        Int term = digits_le[i] * tbl.denominator(static_cast<std::int64_t>(i));
        if (i % 2 == 0)
            parts.positive += term;  // position i+1 odd
        else
            parts.negative += term;
    }
    return parts;
}

inline SplitParts split_parts(ConvergentTable& tbl, const AltExpansion& e) {
    return split_parts(tbl, std::span<const Int>(e.digits));
}

}  // namespace ostra
