#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ostra/bigint.hpp"
#include "ostra/errors.hpp"
#include "ostra/partial_quotients.hpp"

namespace ostra {

// Lazily extended table of convergent denominators for a quotient source:
//
//   q_{-1} = 0,  q_0 = 1,  q_k  = a_k q_{k-1}  + q_{k-2}
//   q*_{-1} = 0, q*_0 = 1, q*_k = q*_{k-2} - a_k q*_{k-1}
//
// The two rows are materialized by their own recursions; q*_k = (-1)^k q_k is
// a theorem about them, not how either is computed, so tests can cross-check
// the routes against each other.
//
// Not synchronized: confine a table to one thread, or copy it (copies are
// independent and cheap at desk scale).
class ConvergentTable {
public:
    explicit ConvergentTable(PartialQuotientSource source) : source_(std::move(source)) {
        q_.emplace_back(0);      // q_{-1}
        q_.emplace_back(1);      // q_0
        qstar_.emplace_back(0);
        qstar_.emplace_back(1);
    }

    // a_k, k >= 1 (cached alongside the denominators).
    Int quotient(std::size_t k) {
        while (a_.size() < k) a_.push_back(source_.at(a_.size() + 1));
        return a_[k - 1];
    }

    // q_k, k >= -1.
    Int denominator(std::int64_t k) {
        ensure(k);
        return q_[static_cast<std::size_t>(k + 1)];
    }

    // q*_k = (-1)^k q_k, k >= -1, computed by its own recursion.
    Int signed_denominator(std::int64_t k) {
        ensure(k);
        return qstar_[static_cast<std::size_t>(k + 1)];
    }

    // The unique n >= 1 with q_{n-1} <= x < q_n, for x >= 1. Where two
    // consecutive denominators are equal (a_1 = 1 gives q_0 = q_1 = 1) the
    // larger index wins, which keeps the greedy step off position 1 whenever
    // its digit bound is zero.
    std::size_t bracket(const Int& x) {
        if (x < 1) throw std::invalid_argument("bracket requires x >= 1");
        std::int64_t n = 1;
        while (denominator(n) <= x) ++n;
        return static_cast<std::size_t>(n);
    }

    std::size_t materialized() const { return q_.size() - 2; }

    std::string description() const { return source_.description(); }

private:
    void ensure(std::int64_t k) {
        if (k < -1) throw std::invalid_argument("denominator index starts at -1");
        while (static_cast<std::int64_t>(q_.size()) - 2 < k) {
            std::size_t next = q_.size() - 1;  // index of the term being added
            Int a = quotient(next);
            std::size_t m = q_.size();
            q_.push_back(a * q_[m - 1] + q_[m - 2]);
            qstar_.push_back(qstar_[m - 2] - a * qstar_[m - 1]);
        }
    }

    PartialQuotientSource source_;
    std::vector<Int> a_;      // a_[i] = a_{i+1}
    std::vector<Int> q_;      // q_[i] = q_{i-1}
    std::vector<Int> qstar_;  // qstar_[i] = q*_{i-1}
};

}  // namespace ostra
