#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ostra {

// A finite quotient list was asked for a term past its end.
class QuotientsExhausted : public std::runtime_error {
public:
    explicit QuotientsExhausted(std::size_t index)
        : std::runtime_error("partial quotient a_" + std::to_string(index) +
                             " is past the end of the supplied list"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// The (d, p, q) triple does not describe an irrational in (0,1).
class InvalidSurd : public std::runtime_error {
public:
    explicit InvalidSurd(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration would exceed the configured sequence budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("enumeration exceeds budget of " + std::to_string(budget) +
                             " sequences"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

// An internal audit tripped; indicates a bug, never a bad input.
class InternalCheckFailure : public std::logic_error {
public:
    explicit InternalCheckFailure(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalCheckFailure(what);
}

}  // namespace ostra
