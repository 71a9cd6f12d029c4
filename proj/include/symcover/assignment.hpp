#ifndef SYMCOVER_ASSIGNMENT_HPP
#define SYMCOVER_ASSIGNMENT_HPP

#include "point_cloud.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

/**
 * @file assignment.hpp
 *
 * @brief Exact solvers for the linear (min-sum) and bottleneck (min-max)
 * assignment problems on square cost matrices.
 */

namespace symcover {

/// Square cost matrix, row-major: cost(i, j) is the cost of assigning row i to column j.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), c_(n * n, fill) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return c_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
    std::span<const double> values() const { return c_; }

private:
    std::size_t n_ = 0;
    std::vector<double> c_;
};

struct Assignment {
    std::vector<std::size_t> col_of_row; ///< row i is matched to column col_of_row[i]
    double cost = 0.0;                   ///< sum or max of matched costs, depending on the solver
};

/**
 * @brief Minimum-sum perfect matching (Hungarian method with row potentials).
 *
 * Shortest augmenting paths with Dijkstra-style slack updates, O(n^3).
 * The returned cost is re-summed from the original matrix along the matching.
 */
inline Assignment solve_min_sum(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    Assignment out;
    if (n == 0) {
        return out;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();

    // 1-based arrays; index 0 is the virtual source column.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        row_of_col[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = row_of_col[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) {
                    continue;
                }
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of_col[j0] != 0);

        do {
            const std::size_t j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    out.col_of_row.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        out.col_of_row[row_of_col[j] - 1] = j - 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.cost += cost(i, out.col_of_row[i]);
    }
    return out;
}

namespace detail {

// Kuhn's augmenting-path matching restricted to edges with cost <= threshold.
class ThresholdMatcher {
public:
    ThresholdMatcher(const CostMatrix& cost, double threshold)
        : cost_(cost), threshold_(threshold), row_of_col_(cost.size(), npos), visited_(cost.size(), 0) {}

    bool perfect() {
        const std::size_t n = cost_.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(visited_.begin(), visited_.end(), 0);
            if (!augment(i)) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::size_t> col_of_row() const {
        std::vector<std::size_t> out(cost_.size(), 0);
        for (std::size_t j = 0; j < row_of_col_.size(); ++j) {
            out[row_of_col_[j]] = j;
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t i) {
        for (std::size_t j = 0; j < cost_.size(); ++j) {
            if (visited_[j] || cost_(i, j) > threshold_) {
                continue;
            }
            visited_[j] = 1;
            if (row_of_col_[j] == npos || augment(row_of_col_[j])) {
                row_of_col_[j] = i;
                return true;
            }
        }
        return false;
    }

    const CostMatrix& cost_;
    double threshold_;
    std::vector<std::size_t> row_of_col_;
    std::vector<char> visited_;
};

} // namespace detail

/**
 * @brief Minimum-max perfect matching.
 *
 * Binary search over the sorted distinct entries of the cost matrix; each
 * probe asks whether a perfect matching exists using only edges at or below
 * the threshold. The smallest feasible threshold is the bottleneck value.
 */
inline Assignment solve_bottleneck(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    Assignment out;
    if (n == 0) {
        return out;
    }
    std::vector<double> levels(cost.values().begin(), cost.values().end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::size_t lo = 0;
    std::size_t hi = levels.size() - 1; // the largest entry always admits a perfect matching
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        detail::ThresholdMatcher probe(cost, levels[mid]);
        if (probe.perfect()) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    detail::ThresholdMatcher final_match(cost, levels[lo]);
    if (!final_match.perfect()) {
        throw InternalError("bottleneck assignment: no perfect matching at the maximal threshold");
    }
    out.col_of_row = final_match.col_of_row();
    for (std::size_t i = 0; i < n; ++i) {
        out.cost = std::max(out.cost, cost(i, out.col_of_row[i]));
    }
    return out;
}

} // namespace symcover

#endif // SYMCOVER_ASSIGNMENT_HPP
