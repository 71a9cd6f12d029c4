#ifndef SYMCOVER_COVERAGE_HPP
#define SYMCOVER_COVERAGE_HPP

#include "metrics.hpp"
#include "point_cloud.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

/**
 * @file coverage.hpp
 *
 * @brief Coverage of a test set by a train set, greedy epsilon-nets and
 * exact (internal) covering numbers of small point sets.
 */

namespace symcover {

struct Dataset {
    std::vector<PointCloud> items;
    std::string name;
};

struct CoverageReport {
    std::vector<double> q;              ///< nearest eligible train distance per test item
    std::vector<std::size_t> nearest;   ///< index of that train item
    double mean_coverage = 0.0;
    double max_coverage = 0.0;
    MetricKind metric;
};

using DistanceFn = std::function<double(const PointCloud&, const PointCloud&)>;

/**
 * @brief Nearest-train distance for every test item, plus mean and max.
 *
 * With `same_label_only`, only train items carrying the test item's label are
 * scanned. Test items are split across `threads` workers; each worker owns a
 * disjoint block of output slots, so the report does not depend on the thread
 * count.
 */
inline CoverageReport coverage(const Dataset& train, const Dataset& test, const DistanceFn& dist,
                               bool same_label_only, unsigned threads = 1) {
    if (train.items.empty()) {
        throw DomainError("coverage: empty train set");
    }
    const std::size_t nt = test.items.size();
    CoverageReport report;
    report.q.assign(nt, 0.0);
    report.nearest.assign(nt, 0);

    if (same_label_only) {
        for (std::size_t t = 0; t < nt; ++t) {
            const auto& lab = test.items[t].label();
            if (!lab) {
                throw LabelCoverageError("coverage: test item " + std::to_string(t) + " has no label");
            }
            const bool found = std::any_of(train.items.begin(), train.items.end(),
                                           [&](const PointCloud& r) { return r.label() == lab; });
            if (!found) {
                throw LabelCoverageError("coverage: no train item with label " + std::to_string(*lab) +
                                         " (test item " + std::to_string(t) + ")");
            }
        }
    }

    auto scan = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const auto& item = test.items[t];
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (std::size_t r = 0; r < train.items.size(); ++r) {
                if (same_label_only && train.items[r].label() != item.label()) {
                    continue;
                }
                const double v = dist(item, train.items[r]);
                if (v < best) {
                    best = v;
                    arg = r;
                }
            }
            report.q[t] = best;
            report.nearest[t] = arg;
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(nt, 1))));
    if (threads == 1) {
        scan(0, nt);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (nt + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t b = std::min(nt, w * chunk);
            const std::size_t e = std::min(nt, b + chunk);
            pool.emplace_back(scan, b, e);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    double sum = 0.0;
    for (double v : report.q) {
        sum += v;
        report.max_coverage = std::max(report.max_coverage, v);
    }
    report.mean_coverage = nt == 0 ? 0.0 : sum / static_cast<double>(nt);
    return report;
}

inline CoverageReport coverage(const Dataset& train, const Dataset& test, const MetricKind& metric,
                               bool same_label_only, unsigned threads = 1) {
    metric.validate();
    auto report = coverage(
        train, test, [&](const PointCloud& a, const PointCloud& b) { return distance(metric, a, b); },
        same_label_only, threads);
    report.metric = metric;
    return report;
}

// ---- epsilon-nets ----

enum class NetKind { Cover, Packing, ExactCover };

inline const char* to_string(NetKind k) {
    switch (k) {
    case NetKind::Cover:
        return "cover";
    case NetKind::Packing:
        return "packing";
    case NetKind::ExactCover:
        return "exact-cover";
    }
    return "?";
}

/// Centers are indices into the input; all nets here are internal (centers drawn from the input).
struct NetResult {
    std::vector<std::size_t> center_indices;
    std::size_t size = 0;
    double epsilon = 0.0;
    NetKind kind = NetKind::Cover;
};

/**
 * @brief Single pass in input order: a point becomes a center iff it is more
 * than epsilon from every existing center.
 *
 * The result is an epsilon-cover of the input and an epsilon-separated set.
 */
template <class Point, class Dist>
NetResult greedy_net(const std::vector<Point>& points, Dist&& dist, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw DomainError("greedy_net: epsilon must be positive");
    }
    NetResult out;
    out.epsilon = epsilon;
    out.kind = NetKind::Cover;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const bool covered = std::any_of(out.center_indices.begin(), out.center_indices.end(),
                                         [&](std::size_t c) { return dist(points[c], points[i]) <= epsilon; });
        if (!covered) {
            out.center_indices.push_back(i);
        }
    }
    out.size = out.center_indices.size();
    return out;
}

/// Same construction as greedy_net, reported as a packing (centers pairwise > epsilon).
template <class Point, class Dist>
NetResult greedy_packing(const std::vector<Point>& points, Dist&& dist, double epsilon) {
    auto out = greedy_net(points, std::forward<Dist>(dist), epsilon);
    out.kind = NetKind::Packing;
    return out;
}

namespace detail {

class SetCoverSearch {
public:
    SetCoverSearch(std::vector<std::uint32_t> balls, std::uint32_t full) : balls_(std::move(balls)), full_(full) {}

    std::vector<std::size_t> solve(std::vector<std::size_t> incumbent) {
        best_ = std::move(incumbent);
        std::vector<std::size_t> chosen;
        recurse(0u, chosen);
        return best_;
    }

private:
    void recurse(std::uint32_t covered, std::vector<std::size_t>& chosen) {
        if (covered == full_) {
            if (chosen.size() < best_.size()) {
                best_ = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_.size()) {
            return;
        }
        // Lower bound: remaining points / largest ball.
        const std::uint32_t left = full_ & ~covered;
        int widest = 0;
        for (auto b : balls_) {
            widest = std::max(widest, std::popcount(b & left));
        }
        if (widest == 0) {
            return;
        }
        const std::size_t need = (static_cast<std::size_t>(std::popcount(left)) + widest - 1) / widest;
        if (chosen.size() + need >= best_.size()) {
            return;
        }
        // Branch on the centers able to cover the lowest uncovered point.
        const int target = std::countr_zero(left);
        for (std::size_t c = 0; c < balls_.size(); ++c) {
            if ((balls_[c] >> target) & 1u) {
                chosen.push_back(c);
                recurse(covered | balls_[c], chosen);
                chosen.pop_back();
            }
        }
    }

    std::vector<std::uint32_t> balls_;
    std::uint32_t full_;
    std::vector<std::size_t> best_;
};

} // namespace detail

/**
 * @brief Minimum number of input points whose closed epsilon-balls cover the input.
 *
 * Exhaustive set cover with branch and bound; at most 20 points.
 */
template <class Point, class Dist>
NetResult exact_cover(const std::vector<Point>& points, Dist&& dist, double epsilon) {
    if (points.size() > 20) {
        throw SizeError("exact_cover_number: " + std::to_string(points.size()) + " points exceeds 20");
    }
    NetResult out;
    out.epsilon = epsilon;
    out.kind = NetKind::ExactCover;
    if (points.empty()) {
        return out;
    }
    const std::size_t n = points.size();
    std::vector<std::uint32_t> balls(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(points[c], points[i]) <= epsilon) {
                balls[c] |= std::uint32_t{1} << i;
            }
        }
    }
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
    auto greedy = greedy_net(points, dist, epsilon);
    detail::SetCoverSearch search(std::move(balls), full);
    out.center_indices = search.solve(greedy.center_indices);
    std::sort(out.center_indices.begin(), out.center_indices.end());
    out.size = out.center_indices.size();
    return out;
}

template <class Point, class Dist>
std::size_t exact_cover_number(const std::vector<Point>& points, Dist&& dist, double epsilon) {
    return exact_cover(points, std::forward<Dist>(dist), epsilon).size;
}

/// MetricKind adapter for the net routines on point clouds.
inline auto metric_fn(const MetricKind& kind) {
    kind.validate();
    return [kind](const PointCloud& a, const PointCloud& b) { return distance(kind, a, b); };
}

/// True when every point is within epsilon of some listed center.
template <class Point, class Dist>
bool is_cover(const std::vector<Point>& points, const std::vector<std::size_t>& centers, Dist&& dist,
              double epsilon) {
    for (const auto& p : points) {
        const bool ok = std::any_of(centers.begin(), centers.end(),
                                    [&](std::size_t c) { return dist(points[c], p) <= epsilon; });
        if (!ok) {
            return false;
        }
    }
    return true;
}

/// True when listed centers are pairwise more than epsilon apart.
template <class Point, class Dist>
bool is_separated(const std::vector<Point>& points, const std::vector<std::size_t>& centers, Dist&& dist,
                  double epsilon) {
    for (std::size_t a = 0; a < centers.size(); ++a) {
        for (std::size_t b = a + 1; b < centers.size(); ++b) {
            if (dist(points[centers[a]], points[centers[b]]) <= epsilon) {
                return false;
            }
        }
    }
    return true;
}

} // namespace symcover

#endif // SYMCOVER_COVERAGE_HPP
