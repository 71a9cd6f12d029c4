#ifndef SYMCOVER_SYNTH_HPP
#define SYMCOVER_SYNTH_HPP

#include "coverage.hpp"
#include "point_cloud.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace symcover::synth {

/// Clustered point clouds in [0,1]^{d x n}, a small stand-in for labelled shape datasets.
struct ClusterConfig {
    std::size_t clusters = 3;
    std::size_t train_per_cluster = 10;
    std::size_t test_per_cluster = 0;
    std::size_t train_total = 0;    ///< if nonzero, overrides train_per_cluster; spread as evenly as possible
    std::size_t test_total = 0;     ///< likewise for test_per_cluster
    std::size_t dim = 3;
    std::size_t points = 32;
    double sigma = 0.05;            ///< per-coordinate Gaussian noise around the cluster template
    bool shuffle_columns = true;    ///< present each item in a random point order
    std::uint64_t seed = 0;
};

struct SplitDataset {
    Dataset train;
    Dataset test;
};

/**
 * @brief Draws one template cloud per cluster, then noisy copies of it.
 *
 * Noise is clamped into [0,1]; labels are cluster ids. All randomness comes
 * from one generator seeded with `seed`, consumed cluster by cluster, so
 * output depends only on the config.
 */
inline SplitDataset make_clusters(const ClusterConfig& cfg) {
    if (cfg.clusters == 0 || cfg.dim == 0 || cfg.points == 0) {
        throw DomainError("make_clusters: sizes must be positive");
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, cfg.sigma);

    SplitDataset out;
    out.train.name = "train";
    out.test.name = "test";
    std::vector<std::size_t> order(cfg.points);

    auto share = [&](std::size_t total, std::size_t per, std::size_t c) {
        if (total == 0) {
            return per;
        }
        return total / cfg.clusters + (c < total % cfg.clusters ? 1 : 0);
    };

    for (std::size_t c = 0; c < cfg.clusters; ++c) {
        PointCloud center(cfg.dim, cfg.points);
        for (double& v : center.values()) {
            v = unit(rng);
        }
        auto draw = [&]() {
            PointCloud item = center;
            for (double& v : item.values()) {
                v = std::clamp(v + noise(rng), 0.0, 1.0);
            }
            if (cfg.shuffle_columns) {
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::shuffle(order.begin(), order.end(), rng);
                item = permute_columns(item, order);
            }
            item.set_label(c);
            return item;
        };
        const std::size_t n_train = share(cfg.train_total, cfg.train_per_cluster, c);
        const std::size_t n_test = share(cfg.test_total, cfg.test_per_cluster, c);
        for (std::size_t i = 0; i < n_train; ++i) {
            out.train.items.push_back(draw());
        }
        for (std::size_t i = 0; i < n_test; ++i) {
            out.test.items.push_back(draw());
        }
    }
    return out;
}

/// Uniform random cloud in [0,1]^{d x n}.
template <class Rng>
PointCloud uniform_cloud(std::size_t d, std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PointCloud x(d, n);
    for (double& v : x.values()) {
        v = unit(rng);
    }
    return x;
}

/// Random permutation of {0, ..., n-1}.
template <class Rng>
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace symcover::synth

#endif // SYMCOVER_SYNTH_HPP
