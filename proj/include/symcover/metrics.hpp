#ifndef SYMCOVER_METRICS_HPP
#define SYMCOVER_METRICS_HPP

#include "assignment.hpp"
#include "canonize.hpp"
#include "point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

/**
 * @file metrics.hpp
 *
 * @brief Base metrics on point clouds and the quotient metrics
 * min_g rho(g.X, Y) over the column-permutation, row-sign and translation groups.
 */

namespace symcover {

enum class BaseMetric {
    Inf,           ///< max |X_ij - Y_ij|
    Frobenius,     ///< sqrt(sum (X_ij - Y_ij)^2)
    L1,            ///< sum |X_ij - Y_ij|
    MeanEuclidean, ///< (1/n) sum_j |X_j - Y_j|_2
    Wasserstein1d, ///< |sort(x) - sort(y)|_p on one-row clouds
};

enum class Quotient {
    None,
    PermSum,        ///< permutations, mean-euclidean base (optimal assignment)
    PermBottleneck, ///< permutations, inf base (bottleneck assignment)
    Sign,           ///< row signs {-1,1}^d, entrywise bases
    Translation,    ///< translations, Frobenius base
};

/**
 * @brief A base metric, optionally wrapped in a group quotient.
 *
 * Textual forms (used by the CLI and in reports):
 * `inf`, `frobenius`, `l1`, `mean-euclidean`, `wasserstein-1d:P`,
 * `perm-sum`, `perm-bottleneck`, `sign:BASE`, `translation`, where P is 1, 2 or inf.
 */
struct MetricKind {
    BaseMetric base = BaseMetric::MeanEuclidean;
    Quotient quotient = Quotient::None;
    double p = 2.0; ///< norm order, used by Wasserstein1d

    static MetricKind inf() { return {BaseMetric::Inf, Quotient::None, 0.0}; }
    static MetricKind frobenius() { return {BaseMetric::Frobenius, Quotient::None, 0.0}; }
    static MetricKind l1() { return {BaseMetric::L1, Quotient::None, 0.0}; }
    static MetricKind mean_euclidean() { return {BaseMetric::MeanEuclidean, Quotient::None, 0.0}; }
    static MetricKind wasserstein_1d(double p) { return {BaseMetric::Wasserstein1d, Quotient::None, p}; }
    static MetricKind perm_sum() { return {BaseMetric::MeanEuclidean, Quotient::PermSum, 0.0}; }
    static MetricKind perm_bottleneck() { return {BaseMetric::Inf, Quotient::PermBottleneck, 0.0}; }
    static MetricKind translation() { return {BaseMetric::Frobenius, Quotient::Translation, 0.0}; }
    static MetricKind sign(BaseMetric b) { return {b, Quotient::Sign, 0.0}; }

    MetricKind base_kind() const { return {base, Quotient::None, p}; }

    void validate() const {
        const bool ok = [&] {
            switch (quotient) {
            case Quotient::None:
                return true;
            case Quotient::PermSum:
                return base == BaseMetric::MeanEuclidean;
            case Quotient::PermBottleneck:
                return base == BaseMetric::Inf;
            case Quotient::Translation:
                return base == BaseMetric::Frobenius;
            case Quotient::Sign:
                return base != BaseMetric::Wasserstein1d;
            }
            return false;
        }();
        if (!ok) {
            throw DomainError("metric: quotient " + to_string() + " is not defined over this base metric");
        }
        if (base == BaseMetric::Wasserstein1d && !(p == 1.0 || p == 2.0 || std::isinf(p))) {
            throw DomainError("metric: Wasserstein order must be 1, 2 or inf");
        }
    }

    std::string base_name() const {
        switch (base) {
        case BaseMetric::Inf:
            return "inf";
        case BaseMetric::Frobenius:
            return "frobenius";
        case BaseMetric::L1:
            return "l1";
        case BaseMetric::MeanEuclidean:
            return "mean-euclidean";
        case BaseMetric::Wasserstein1d:
            return std::string("wasserstein-1d:") + (std::isinf(p) ? "inf" : std::to_string(static_cast<int>(p)));
        }
        return "?";
    }

    std::string to_string() const {
        switch (quotient) {
        case Quotient::None:
            return base_name();
        case Quotient::PermSum:
            return "perm-sum";
        case Quotient::PermBottleneck:
            return "perm-bottleneck";
        case Quotient::Translation:
            return "translation";
        case Quotient::Sign:
            return "sign:" + base_name();
        }
        return "?";
    }

    static MetricKind parse(const std::string& text) {
        auto parse_base = [](const std::string& s) -> MetricKind {
            if (s == "inf") return inf();
            if (s == "frobenius") return frobenius();
            if (s == "l1") return l1();
            if (s == "mean-euclidean" || s == "euclidean") return mean_euclidean();
            const std::string w = "wasserstein-1d:";
            if (s.rfind(w, 0) == 0) {
                const std::string order = s.substr(w.size());
                if (order == "1") return wasserstein_1d(1.0);
                if (order == "2") return wasserstein_1d(2.0);
                if (order == "inf") return wasserstein_1d(std::numeric_limits<double>::infinity());
            }
            throw DomainError("unknown metric '" + s + "'");
        };
        MetricKind out;
        if (text == "perm-sum") {
            out = perm_sum();
        } else if (text == "perm-bottleneck") {
            out = perm_bottleneck();
        } else if (text == "translation") {
            out = translation();
        } else if (text.rfind("sign:", 0) == 0) {
            out = parse_base(text.substr(5));
            out.quotient = Quotient::Sign;
        } else {
            out = parse_base(text);
        }
        out.validate();
        return out;
    }

    friend bool operator==(const MetricKind&, const MetricKind&) = default;
};

namespace detail {

inline double checked(double value, const char* what) {
    if (value < -1e-12 || std::isnan(value)) {
        throw InternalError(std::string(what) + ": computed a negative distance " + std::to_string(value));
    }
    return value;
}

inline double lp_norm(const std::vector<double>& diff, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : diff) m = std::max(m, std::abs(v));
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (double v : diff) s += std::abs(v);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (double v : diff) s += v * v;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double v : diff) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

} // namespace detail

// ---- base metrics ----

inline double dist_inf(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "dist_inf");
    double m = 0.0;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
        m = std::max(m, std::abs(x.values()[i] - y.values()[i]));
    }
    return m;
}

inline double dist_frobenius(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "dist_frobenius");
    double s = 0.0;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
        const double t = x.values()[i] - y.values()[i];
        s += t * t;
    }
    return std::sqrt(s);
}

inline double dist_l1(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "dist_l1");
    double s = 0.0;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
        s += std::abs(x.values()[i] - y.values()[i]);
    }
    return s;
}

inline double column_euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        const double t = a[r] - b[r];
        s += t * t;
    }
    return std::sqrt(s);
}

inline double column_inf(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        m = std::max(m, std::abs(a[r] - b[r]));
    }
    return m;
}

inline double dist_mean_euclidean(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "dist_mean_euclidean");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        s += column_euclidean(x.column(j), y.column(j));
    }
    return s / static_cast<double>(x.size());
}

/// |sort(x) - sort(y)|_p for p in {1, 2, inf}.
inline double wasserstein_1d(const std::vector<double>& x, const std::vector<double>& y, double p) {
    if (x.size() != y.size()) {
        throw DomainError("wasserstein_1d: length mismatch");
    }
    if (!(p == 1.0 || p == 2.0 || std::isinf(p))) {
        throw DomainError("wasserstein_1d: p must be 1, 2 or inf");
    }
    auto sx = canon_sort(x);
    auto sy = canon_sort(y);
    std::vector<double> diff(sx.size());
    for (std::size_t i = 0; i < sx.size(); ++i) {
        diff[i] = sx[i] - sy[i];
    }
    return detail::lp_norm(diff, p);
}

/// Base (non-quotient) distance of the given kind.
inline double base_distance(const MetricKind& kind, const PointCloud& x, const PointCloud& y) {
    switch (kind.base) {
    case BaseMetric::Inf:
        return dist_inf(x, y);
    case BaseMetric::Frobenius:
        return dist_frobenius(x, y);
    case BaseMetric::L1:
        return dist_l1(x, y);
    case BaseMetric::MeanEuclidean:
        return dist_mean_euclidean(x, y);
    case BaseMetric::Wasserstein1d:
        require_same_shape(x, y, "wasserstein_1d");
        if (x.dim() != 1) {
            throw DomainError("wasserstein_1d: expects one-row clouds");
        }
        return wasserstein_1d(x.row(0), y.row(0), kind.p);
    }
    throw DomainError("base_distance: unknown metric");
}

// ---- permutation quotients ----

/// Pairwise column costs: cost(i, j) = f(X_i, Y_j).
template <class ColumnDistance>
CostMatrix column_cost_matrix(const PointCloud& x, const PointCloud& y, ColumnDistance&& f) {
    CostMatrix cost(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            cost(i, j) = f(x.column(i), y.column(j));
        }
    }
    return cost;
}

/// min over column permutations of the mean Euclidean column distance (exact assignment).
inline double perm_quotient_sum(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "perm_quotient_sum");
    const auto cost = column_cost_matrix(x, y, column_euclidean);
    const auto a = solve_min_sum(cost);
    return detail::checked(a.cost / static_cast<double>(x.size()), "perm_quotient_sum");
}

/// min over column permutations of max_i |X_i - Y_pi(i)|_inf (exact bottleneck assignment).
inline double perm_quotient_bottleneck(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "perm_quotient_bottleneck");
    const auto cost = column_cost_matrix(x, y, column_inf);
    return detail::checked(solve_bottleneck(cost).cost, "perm_quotient_bottleneck");
}

/**
 * @brief min over column permutations of the entrywise p-norm |X - Y.pi|_p.
 *
 * p=1 and p=2 reduce to min-sum assignment on |.|_1 and squared |.|_2 column
 * costs; p=inf is the bottleneck problem.
 */
inline double perm_quotient_lp(const PointCloud& x, const PointCloud& y, double p) {
    require_same_shape(x, y, "perm_quotient_lp");
    if (std::isinf(p)) {
        return perm_quotient_bottleneck(x, y);
    }
    if (p == 1.0) {
        auto cost = column_cost_matrix(x, y, [](auto a, auto b) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.size(); ++r) s += std::abs(a[r] - b[r]);
            return s;
        });
        return detail::checked(solve_min_sum(cost).cost, "perm_quotient_lp");
    }
    if (p == 2.0) {
        auto cost = column_cost_matrix(x, y, [](auto a, auto b) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.size(); ++r) s += (a[r] - b[r]) * (a[r] - b[r]);
            return s;
        });
        return std::sqrt(detail::checked(solve_min_sum(cost).cost, "perm_quotient_lp"));
    }
    throw DomainError("perm_quotient_lp: p must be 1, 2 or inf");
}

/**
 * @brief Exhaustive minimum of a base metric over all n! column permutations.
 *
 * Test oracle for the assignment-based quotients; limited to n <= 8.
 */
inline double brute_perm_quotient(const PointCloud& x, const PointCloud& y, const MetricKind& base) {
    require_same_shape(x, y, "brute_perm_quotient");
    if (x.size() > 8) {
        throw SizeError("brute_perm_quotient: n=" + std::to_string(x.size()) + " exceeds 8");
    }
    const MetricKind b = base.base_kind();
    std::vector<std::size_t> perm(x.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, base_distance(b, x, permute_columns(y, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---- sign quotient ----

namespace detail {

// Per-row distance under the base, comparing row r of X (optionally negated) with row r of Y.
inline double row_term(const PointCloud& x, const PointCloud& y, std::size_t r, double sign, BaseMetric base) {
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double t = std::abs(sign * x(r, j) - y(r, j));
        switch (base) {
        case BaseMetric::Inf:
            acc = std::max(acc, t);
            break;
        case BaseMetric::Frobenius:
            acc += t * t;
            break;
        default:
            acc += t;
            break;
        }
    }
    return acc;
}

} // namespace detail

/**
 * @brief min over row-sign patterns S of base(S.X, Y).
 *
 * Bases that decompose over rows (inf, frobenius, l1) are minimized row by
 * row; mean-euclidean couples rows inside each column and is enumerated.
 */
inline double sign_quotient(const PointCloud& x, const PointCloud& y, BaseMetric base) {
    require_same_shape(x, y, "sign_quotient");
    if (x.dim() > 20) {
        throw SizeError("sign_quotient: d=" + std::to_string(x.dim()) + " exceeds 20");
    }
    if (base == BaseMetric::Wasserstein1d) {
        throw DomainError("sign_quotient: base must be entrywise");
    }
    if (base == BaseMetric::MeanEuclidean) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& g : sign_orbit(x)) {
            best = std::min(best, dist_mean_euclidean(g, y));
        }
        return best;
    }
    double acc = 0.0;
    for (std::size_t r = 0; r < x.dim(); ++r) {
        const double term = std::min(detail::row_term(x, y, r, 1.0, base), detail::row_term(x, y, r, -1.0, base));
        acc = base == BaseMetric::Inf ? std::max(acc, term) : acc + term;
    }
    return base == BaseMetric::Frobenius ? std::sqrt(acc) : acc;
}

/// Exhaustive version of sign_quotient over all 2^d patterns (oracle).
inline double brute_sign_quotient(const PointCloud& x, const PointCloud& y, BaseMetric base) {
    require_same_shape(x, y, "brute_sign_quotient");
    const MetricKind b{base, Quotient::None, 0.0};
    double best = std::numeric_limits<double>::infinity();
    for (const auto& g : sign_orbit(x)) {
        best = std::min(best, base_distance(b, g, y));
    }
    return best;
}

// ---- translation quotient ----

/// min over translation vectors t of |X - (Y + t 1^T)|_F, via centering both inputs.
inline double translation_quotient(const PointCloud& x, const PointCloud& y) {
    require_same_shape(x, y, "translation_quotient");
    return dist_frobenius(canon_centralize(x).cloud, canon_centralize(y).cloud);
}

/// Distance of any supported kind.
inline double distance(const MetricKind& kind, const PointCloud& x, const PointCloud& y) {
    switch (kind.quotient) {
    case Quotient::None:
        return base_distance(kind, x, y);
    case Quotient::PermSum:
        return perm_quotient_sum(x, y);
    case Quotient::PermBottleneck:
        return perm_quotient_bottleneck(x, y);
    case Quotient::Sign:
        return sign_quotient(x, y, kind.base);
    case Quotient::Translation:
        return translation_quotient(x, y);
    }
    throw DomainError("distance: unknown metric");
}

} // namespace symcover

#endif // SYMCOVER_METRICS_HPP
