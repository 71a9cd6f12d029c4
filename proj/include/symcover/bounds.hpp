#ifndef SYMCOVER_BOUNDS_HPP
#define SYMCOVER_BOUNDS_HPP

#include "point_cloud.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/**
 * @file bounds.hpp
 *
 * @brief Closed-form covering-number bounds for point clouds in [0,1]^{d x n}
 * under column permutations, evaluated exactly with big integers.
 *
 * Values reach thousands of decimal digits, so every bound carries a log10
 * magnitude and, when it is small enough to materialize, the exact integer.
 */

namespace symcover::bounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integers are materialized only up to this many decimal digits.
inline constexpr double max_exact_digits = 200000.0;

/**
 * @brief Covering radius as an exact rational.
 *
 * Parsed from "p/q" or a decimal literal such as "0.25"; the bound formulas
 * take ceilings of expressions in epsilon, which must not be perturbed by
 * binary rounding.
 */
class Epsilon {
public:
    Epsilon() = default;
    explicit Epsilon(Rational value) : value_(std::move(value)) {}

    static Epsilon ratio(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw DomainError("epsilon: zero denominator");
        }
        return Epsilon(Rational(num, den));
    }

    /// Parses "p/q" or a decimal literal.
    static Epsilon parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            const BigInt num = parse_integer(text.substr(0, slash), text);
            const BigInt den = parse_integer(text.substr(slash + 1), text);
            if (den == 0) {
                throw DomainError("epsilon: zero denominator");
            }
            return Epsilon(Rational(num, den));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            return Epsilon(Rational(parse_integer(text, text)));
        }
        const std::string fraction = text.substr(dot + 1);
        if (fraction.empty() || fraction.find_first_not_of("0123456789") != std::string::npos) {
            throw DomainError("epsilon: cannot parse '" + text + "'");
        }
        const BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fraction.size()));
        return Epsilon(Rational(parse_integer(text.substr(0, dot) + fraction, text), den));
    }

    const Rational& value() const { return value_; }
    double approx() const { return static_cast<double>(value_); }

    /// k with epsilon = 1/(2k), if epsilon has that form.
    std::optional<BigInt> half_inverse() const {
        if (value_ <= 0) {
            return std::nullopt;
        }
        const Rational inv = 1 / (2 * value_);
        if (boost::multiprecision::denominator(inv) != 1) {
            return std::nullopt;
        }
        return boost::multiprecision::numerator(inv);
    }

    std::string to_string() const {
        const BigInt den = boost::multiprecision::denominator(value_);
        if (den == 1) {
            return boost::multiprecision::numerator(value_).str();
        }
        return boost::multiprecision::numerator(value_).str() + "/" + den.str();
    }

private:
    // Decimal digits with an optional sign. cpp_int's own string constructor
    // would read a leading zero as an octal prefix.
    static BigInt parse_integer(std::string digits, const std::string& text) {
        const bool negative = !digits.empty() && (digits.front() == '-' || digits.front() == '+');
        const bool minus = negative && digits.front() == '-';
        if (negative) {
            digits.erase(0, 1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw DomainError("epsilon: cannot parse '" + text + "'");
        }
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        BigInt out(digits);
        return minus ? BigInt(-out) : out;
    }

    Rational value_{0};
};

/// Parameters shared by the bound formulas. `order` absent selects the m -> infinity limit.
struct BoundQuery {
    std::uint64_t n = 1;
    std::uint64_t d = 1;
    Epsilon epsilon;
    std::optional<unsigned> order;
};

/// Magnitude of a (possibly huge) non-negative integer.
struct LogValue {
    double log10 = 0.0;
    std::optional<BigInt> exact;
    std::string formula_id;

    /// Number of decimal digits implied by log10.
    std::uint64_t digits() const { return static_cast<std::uint64_t>(std::floor(log10)) + 1; }

    /// Scientific notation with `sig` significant figures, e.g. "2.1e+36".
    std::string scientific(int sig = 2) const;

    /// Mantissa and exponent, mantissa already rounded to `sig` figures.
    std::pair<double, std::int64_t> mantissa_exponent(int sig = 2) const;
};

namespace detail {

inline BigInt ceil_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den != num && num > 0) {
        q += 1;
    }
    return q;
}

inline double log10_big(const BigInt& v) {
    if (v <= 0) {
        throw DomainError("log10 of non-positive integer");
    }
    const std::string s = v.str();
    const std::size_t keep = std::min<std::size_t>(s.size(), 17);
    const double lead = std::stod(s.substr(0, keep));
    return std::log10(lead) + static_cast<double>(s.size() - keep);
}

// log10 C(n + k - 1, n): log-gamma for moderate k, a direct log-sum when
// lgamma(n + k) would cancel catastrophically.
inline double log10_multiset(std::uint64_t n, const BigInt& k) {
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    if (kd < 1e12) {
        return (std::lgamma(nd + kd) - std::lgamma(nd + 1.0) - std::lgamma(kd)) / std::log(10.0);
    }
    double acc = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        acc += std::log10((kd - 1.0) / static_cast<double>(i) + 1.0);
    }
    return acc;
}

inline BigInt binomial(const BigInt& top, std::uint64_t choose) {
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= choose; ++i) {
        out *= top - choose + i;
        out /= i;
    }
    return out;
}

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt out = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) {
            out *= b;
        }
        exp >>= 1;
        if (exp > 0) {
            b *= b;
        }
    }
    return out;
}

inline void check_query(const BoundQuery& q) {
    if (q.n < 1 || q.d < 1) {
        throw DomainError("bounds: n and d must be at least 1");
    }
    if (!(q.epsilon.value() > 0 && q.epsilon.value() < 1)) {
        throw DomainError("bounds: epsilon must lie in (0, 1), got " + q.epsilon.to_string());
    }
}

inline BigInt require_half_inverse(const BoundQuery& q, const char* formula) {
    auto k = q.epsilon.half_inverse();
    if (!k) {
        throw DomainError(std::string(formula) + ": epsilon must equal 1/(2k) for an integer k, got " +
                          q.epsilon.to_string());
    }
    return *k;
}

inline LogValue multiset_value(std::uint64_t n, const BigInt& k, std::string id) {
    LogValue out;
    out.formula_id = std::move(id);
    out.log10 = log10_multiset(n, k);
    if (out.log10 < max_exact_digits) {
        out.exact = binomial(BigInt(n) + k - 1, n);
    }
    return out;
}

inline LogValue power_value(const BigInt& k, std::uint64_t exponent, std::string id) {
    LogValue out;
    out.formula_id = std::move(id);
    out.log10 = static_cast<double>(exponent) * log10_big(k);
    if (out.log10 < max_exact_digits) {
        out.exact = ipow(k, exponent);
    }
    return out;
}

} // namespace detail

inline std::pair<double, std::int64_t> LogValue::mantissa_exponent(int sig) const {
    if (exact) {
        const std::string s = exact->str();
        if (*exact == 0) {
            return {0.0, 0};
        }
        std::int64_t exponent = static_cast<std::int64_t>(s.size()) - 1;
        // Leading sig+1 digits, rounded half-up on the last.
        std::string head = s.substr(0, std::min<std::size_t>(s.size(), sig + 1));
        while (static_cast<int>(head.size()) < sig + 1) {
            head += '0';
        }
        std::uint64_t lead = std::stoull(head.substr(0, sig));
        if (head[sig] >= '5') {
            ++lead;
        }
        double mant = static_cast<double>(lead) / std::pow(10.0, sig - 1);
        if (mant >= 10.0) {
            mant /= 10.0;
            ++exponent;
        }
        return {mant, exponent};
    }
    auto exponent = static_cast<std::int64_t>(std::floor(log10));
    const double scale = std::pow(10.0, sig - 1);
    double mant = std::round(std::pow(10.0, log10 - static_cast<double>(exponent)) * scale) / scale;
    if (mant >= 10.0) {
        mant /= 10.0;
        ++exponent;
    }
    return {mant, exponent};
}

inline std::string LogValue::scientific(int sig) const {
    const auto [mant, exponent] = mantissa_exponent(sig);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*fe%+lld", std::max(sig - 1, 0), mant, static_cast<long long>(exponent));
    return buf;
}

/// Number of multisets of size n over m symbols: C(n + m - 1, n).
inline BigInt multiset_count(std::uint64_t n, std::uint64_t m) {
    if (n < 1 || m < 1) {
        throw DomainError("multiset_count: n and m must be at least 1");
    }
    return detail::binomial(BigInt(n + m - 1), n);
}

/**
 * @brief Upper bound on the covering number of the permutation quotient:
 * C(n + k^d - 1, n) with k = ceil(1/(2 eps)).
 */
inline LogValue bound_quotient_upper(const BoundQuery& q) {
    detail::check_query(q);
    const BigInt k = detail::ceil_rational(1 / (2 * q.epsilon.value()));
    const BigInt cells = detail::ipow(k, q.d);
    return detail::multiset_value(q.n, cells, "quotient-upper");
}

/**
 * @brief Lower bound for lexicographic sorting: k^{(d-1) n + 1} with eps = 1/(2k).
 */
inline LogValue bound_lexsort_lower(const BoundQuery& q) {
    detail::check_query(q);
    if (q.d < 2 || q.n < 2) {
        throw DomainError("bound_lexsort_lower: requires d >= 2 and n >= 2");
    }
    const BigInt k = detail::require_half_inverse(q, "bound_lexsort_lower");
    return detail::power_value(k, (q.d - 1) * q.n + 1, "lexsort-lower");
}

/// 1 / (2 delta) for the Hilbert bound; delta = (eps - 2^{-m-1})^d / 4, or eps^d / 4 in the limit.
inline Rational hilbert_half_inverse_delta(const BoundQuery& q) {
    Rational gap = q.epsilon.value();
    if (q.order) {
        const Rational rounding(BigInt(1), detail::ipow(BigInt(2), *q.order + 1));
        if (gap <= rounding) {
            throw HypothesisError("bound_hilbert_upper: epsilon " + q.epsilon.to_string() +
                                  " must exceed 2^-(m+1) with m=" + std::to_string(*q.order));
        }
        gap -= rounding;
    }
    Rational power = 1;
    for (std::uint64_t i = 0; i < q.d; ++i) {
        power *= gap;
    }
    return 2 / power;
}

/**
 * @brief Upper bound for the order-m Hilbert canonization:
 * C(n + ceil(1/(2 delta)) - 1, n), delta = (eps - 2^{-m-1})^d / 4.
 */
inline LogValue bound_hilbert_upper(const BoundQuery& q) {
    detail::check_query(q);
    const BigInt k = detail::ceil_rational(hilbert_half_inverse_delta(q));
    return detail::multiset_value(q.n, k, q.order ? "hilbert-upper" : "hilbert-upper-limit");
}

/// Covering number of the full cube [0,1]^{d x n} under the entrywise sup metric: k^{nd}.
inline LogValue bound_hypercube_exact(const BoundQuery& q) {
    detail::check_query(q);
    const BigInt k = detail::require_half_inverse(q, "bound_hypercube_exact");
    return detail::power_value(k, q.n * q.d, "hypercube-exact");
}

/// |G| times a quotient covering number.
inline LogValue bound_group_cardinality(const LogValue& quotient, const BigInt& group_size) {
    if (group_size < 1) {
        throw DomainError("bound_group_cardinality: group size must be at least 1");
    }
    LogValue out;
    out.formula_id = "group-cardinality";
    out.log10 = quotient.log10 + detail::log10_big(group_size);
    if (quotient.exact) {
        out.exact = *quotient.exact * group_size;
    }
    return out;
}

inline BigInt factorial(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

struct GeneralizationInputs {
    double lipschitz_loss = 1.0;       ///< c_l
    double lipschitz_hypothesis = 1.0; ///< c_h
    double lipschitz_target = 1.0;     ///< c_f
    double epsilon = 0.0;
    double loss_bound = 1.0;           ///< M
    double covering_number = 1.0;      ///< N(X, rho, eps)
    double delta = 0.05;
    std::uint64_t samples = 1;
};

/**
 * @brief Right-hand side of the covering-number generalization bound:
 * 2 c_l (c_h + c_f) eps + M sqrt((2 N ln 2 + 2 ln(1/delta)) / n).
 *
 * N enters linearly (not through a logarithm).
 */
inline double generalization_rhs(const GeneralizationInputs& in) {
    if (!(in.delta > 0.0 && in.delta <= 1.0)) {
        throw DomainError("generalization_rhs: delta must lie in (0, 1]");
    }
    if (in.samples == 0) {
        throw DomainError("generalization_rhs: sample count must be positive");
    }
    if (in.epsilon < 0.0 || in.covering_number < 0.0 || in.loss_bound < 0.0) {
        throw DomainError("generalization_rhs: inputs must be non-negative");
    }
    const double approx_term = 2.0 * in.lipschitz_loss * (in.lipschitz_hypothesis + in.lipschitz_target) * in.epsilon;
    const double inner =
        (2.0 * in.covering_number * std::log(2.0) + 2.0 * std::log(1.0 / in.delta)) / static_cast<double>(in.samples);
    return approx_term + in.loss_bound * std::sqrt(inner);
}

struct BoundsRow {
    std::uint64_t n = 0;
    LogValue quotient;
    LogValue hilbert;
    LogValue lexsort;
    LogValue hypercube;
};

/// One row of the four bounds per n.
inline std::vector<BoundsRow> bounds_table(const std::vector<std::uint64_t>& ns, std::uint64_t d,
                                           const Epsilon& epsilon, std::optional<unsigned> order) {
    std::vector<BoundsRow> rows;
    rows.reserve(ns.size());
    for (auto n : ns) {
        const BoundQuery q{n, d, epsilon, order};
        rows.push_back(BoundsRow{n, bound_quotient_upper(q), bound_hilbert_upper(q), bound_lexsort_lower(q),
                                 bound_hypercube_exact(q)});
    }
    return rows;
}

} // namespace symcover::bounds

#endif // SYMCOVER_BOUNDS_HPP
