#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ostra/bigint.hpp"
#include "ostra/errors.hpp"

namespace ostra {

namespace detail {

inline void require_quotient(const Int& a) {
    if (a < 1) throw std::invalid_argument("partial quotients must be >= 1");
}

inline std::string join(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace detail

// Supplies the continued-fraction partial quotients a_1, a_2, ... of the base.
// The base itself is never held as a floating-point value; every consumer of
// the numeration systems needs only the quotient stream.
class PartialQuotientSource {
public:
    static PartialQuotientSource constant(Int a) {
        detail::require_quotient(a);
        return PartialQuotientSource(Constant{std::move(a)});
    }

    // preperiod may be empty; period must not be.
    static PartialQuotientSource periodic(std::vector<Int> preperiod, std::vector<Int> period) {
        if (period.empty()) throw std::invalid_argument("period must be nonempty");
        for (const Int& a : preperiod) detail::require_quotient(a);
        for (const Int& a : period) detail::require_quotient(a);
        return PartialQuotientSource(Periodic{std::move(preperiod), std::move(period)});
    }

    // Finite list; asking past the end raises QuotientsExhausted.
    static PartialQuotientSource explicit_list(std::vector<Int> quotients) {
        if (quotients.empty()) throw std::invalid_argument("quotient list must be nonempty");
        for (const Int& a : quotients) detail::require_quotient(a);
        return PartialQuotientSource(Explicit{std::move(quotients)});
    }

    // alpha = (p + sqrt(d)) / q, reduced into (0,1) by dropping the integer
    // part. The quotient stream comes from the exact integer recurrence for
    // quadratic irrationals; it is eventually periodic.
    static PartialQuotientSource quadratic_surd(Int d, Int p, Int q) {
        if (q == 0) throw InvalidSurd("surd denominator q must be nonzero");
        if (d < 0) throw InvalidSurd("surd radicand d must be nonnegative");
        if (is_perfect_square(d))
            throw InvalidSurd("surd radicand d must not be a perfect square");
        Surd s;
        s.d = d;
        s.p = p;
        s.q = q;
        // The recurrence needs q | (d - p^2); rescale if the input lacks it.
        Int pp = p, qq = q, dd = d;
        if ((dd - pp * pp) % qq != 0) {
            pp *= abs(qq);
            dd *= qq * qq;
            qq *= abs(qq);
        }
        s.big_d = dd;
        s.sqrt_d = isqrt(dd);
        // Subtract the integer part so the value lands in (0,1).
        Int a0 = Surd::floor_term(pp, qq, s.sqrt_d);
        pp -= a0 * qq;
        s.cur_p = pp;
        s.cur_q = qq;
        internal_check(Surd::floor_term(pp, qq, s.sqrt_d) == 0,
                       "surd reduction must land in [0,1)");
        return PartialQuotientSource(std::move(s));
    }

    // a_k for k >= 1. Deterministic; lazily extends internal state for surds.
    Int at(std::size_t k) {
        if (k < 1) throw std::invalid_argument("partial quotient index starts at 1");
        return std::visit([k](auto& src) { return src.at(k); }, impl_);
    }

    // Canonical base-spec string for this source.
    std::string description() const {
        return std::visit([](const auto& src) { return src.description(); }, impl_);
    }

private:
    struct Constant {
        Int a;
        Int at(std::size_t) const { return a; }
        std::string description() const { return "const:" + a.str(); }
    };

    struct Periodic {
        std::vector<Int> pre;
        std::vector<Int> period;
        Int at(std::size_t k) const {
            if (k <= pre.size()) return pre[k - 1];
            return period[(k - pre.size() - 1) % period.size()];
        }
        std::string description() const {
            return "periodic:" + detail::join(pre) + ";" + detail::join(period);
        }
    };

    struct Explicit {
        std::vector<Int> quotients;
        Int at(std::size_t k) const {
            if (k > quotients.size()) throw QuotientsExhausted(k);
            return quotients[k - 1];
        }
        std::string description() const { return "explicit:" + detail::join(quotients); }
    };

    struct Surd {
        Int d, p, q;      // as supplied, for display
        Int big_d;        // radicand after rescaling
        Int sqrt_d;       // isqrt(big_d)
        Int cur_p, cur_q; // state of the term not yet emitted
        std::vector<Int> cache;  // a_1, a_2, ...

        // floor((P + sqrt(D)) / Q) using only integer arithmetic. sqrt(D) is
        // irrational, so floor((P + sqrt(D))/Q) = floor((P + isqrt(D))/Q) for
        // Q > 0, and the mirrored form handles Q < 0.
        static Int floor_term(const Int& P, const Int& Q, const Int& s) {
            if (Q > 0) return floor_div(P + s, Q);
            return floor_div(-P - s - 1, -Q);
        }

        Int at(std::size_t k) {
            while (cache.size() < k) {
                // advance (P,Q) past the previous term, then read the next
                Int a_prev = cache.empty() ? Int(0) : cache.back();
                cur_p = a_prev * cur_q - cur_p;
                cur_q = (big_d - cur_p * cur_p) / cur_q;
                internal_check(cur_q != 0, "surd recurrence denominator vanished");
                Int a = floor_term(cur_p, cur_q, sqrt_d);
                internal_check(a >= 1, "surd tail quotient below 1");
                cache.push_back(a);
            }
            return cache[k - 1];
        }

        std::string description() const {
            return "surd:" + d.str() + "," + p.str() + "," + q.str();
        }
    };

    using Impl = std::variant<Constant, Periodic, Explicit, Surd>;

    explicit PartialQuotientSource(Impl impl) : impl_(std::move(impl)) {}

    Impl impl_;
};

namespace detail {

inline std::vector<Int> parse_quotient_list(const std::string& text, bool allow_empty) {
    std::vector<Int> out;
    if (text.empty()) {
        if (allow_empty) return out;
        throw std::invalid_argument("empty quotient list");
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

// Base specification grammar shared with the CLI:
//   golden | silver | const:<a> | periodic:<pre;per> | explicit:<a1,a2,...>
//   | surd:<d>,<p>,<q>
inline PartialQuotientSource parse_base_spec(const std::string& spec) {
    if (spec == "golden") return PartialQuotientSource::constant(1);
    if (spec == "silver") return PartialQuotientSource::constant(2);
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown base spec '" + spec + "'");
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "const") return PartialQuotientSource::constant(parse_int(rest));
    if (head == "periodic") {
        std::size_t semi = rest.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("periodic spec needs '<pre;per>': '" + spec + "'");
        auto pre = detail::parse_quotient_list(rest.substr(0, semi), /*allow_empty=*/true);
        auto per = detail::parse_quotient_list(rest.substr(semi + 1), /*allow_empty=*/false);
        return PartialQuotientSource::periodic(std::move(pre), std::move(per));
    }
    if (head == "explicit")
        return PartialQuotientSource::explicit_list(detail::parse_quotient_list(rest, false));
    if (head == "surd") {
        auto parts = detail::parse_quotient_list(rest, false);
        // parse_quotient_list accepts signed entries, which surd needs
        if (parts.size() != 3)
            throw std::invalid_argument("surd spec needs '<d>,<p>,<q>': '" + spec + "'");
        return PartialQuotientSource::quadratic_surd(parts[0], parts[1], parts[2]);
    }
    throw std::invalid_argument("unknown base spec '" + spec + "'");
}

}  // namespace ostra
