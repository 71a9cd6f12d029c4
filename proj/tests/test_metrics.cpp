#include <symcover/assignment.hpp>
#include <symcover/metrics.hpp>
#include <symcover/synth.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace symcover;

namespace {

constexpr double tol = 1e-9;

// Unimodal minimization on [lo, hi] by golden-section search.
template <class F>
double golden_min(F f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
        const double c = b - phi * (b - a), d = a + phi * (b - a);
        if (f(c) < f(d)) b = d; else a = c;
    }
    return f(0.5 * (a + b));
}

// Numerical translation quotient: the Frobenius objective separates by row.
double searched_translation(const PointCloud& x, const PointCloud& y) {
    double total = 0.0;
    for (std::size_t r = 0; r < x.dim(); ++r) {
        auto f = [&](double t) {
            double s = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double e = x(r, j) - y(r, j) - t;
                s += e * e;
            }
            return s;
        };
        total += golden_min(f, -4.0, 4.0);
    }
    return std::sqrt(total);
}

std::vector<MetricKind> all_kinds() {
    return {MetricKind::inf(),       MetricKind::frobenius(),       MetricKind::l1(),
            MetricKind::mean_euclidean(), MetricKind::perm_sum(),   MetricKind::perm_bottleneck(),
            MetricKind::translation(), MetricKind::sign(BaseMetric::Inf), MetricKind::sign(BaseMetric::Frobenius),
            MetricKind::sign(BaseMetric::L1), MetricKind::sign(BaseMetric::MeanEuclidean)};
}

} // namespace

TEST(BaseMetric, Examples) {
    const auto a = PointCloud::from_rows({{0, 1}});
    const auto b = PointCloud::from_rows({{0.5, 0.2}});
    EXPECT_DOUBLE_EQ(dist_inf(a, b), 0.8);
    EXPECT_EQ(dist_inf(a, a), 0.0);
    EXPECT_EQ(dist_mean_euclidean(PointCloud::from_vector({0, 0}), PointCloud::from_vector({1, 3})), 2.0);
    EXPECT_EQ(dist_frobenius(PointCloud::from_rows({{3}, {4}}), PointCloud(2, 1)), 5.0);
    EXPECT_THROW(dist_inf(a, PointCloud(1, 3)), DomainError);
}

TEST(BaseMetric, CommonColumnLeavesFrobeniusUnchanged) {
    const auto x = PointCloud::from_rows({{1, 2}, {3, 4}});
    const auto y = PointCloud::from_rows({{0, 2}, {1, 1}});
    const auto xe = PointCloud::from_rows({{1, 2, 7}, {3, 4, -1}});
    const auto ye = PointCloud::from_rows({{0, 2, 7}, {1, 1, -1}});
    EXPECT_DOUBLE_EQ(dist_frobenius(x, y), dist_frobenius(xe, ye));
}

TEST(Wasserstein, ExampleAgainstAllPermutations) {
    const std::vector<double> x{3, 1, 2}, y{0, 2, 5};
    EXPECT_EQ(wasserstein_1d(x, y, 1.0), 3.0);
    EXPECT_EQ(brute_perm_quotient(PointCloud::from_vector(x), PointCloud::from_vector(y), MetricKind::l1()), 3.0);
    EXPECT_EQ(wasserstein_1d(x, {2, 3, 1}, 2.0), 0.0);
    EXPECT_THROW(wasserstein_1d(x, {1, 2}, 1.0), DomainError);
}

TEST(Wasserstein, EqualsBruteQuotientForSmallN) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> nsize(1, 6);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = nsize(rng);
        const auto x = synth::uniform_cloud(1, n, rng);
        const auto y = synth::uniform_cloud(1, n, rng);
        EXPECT_NEAR(wasserstein_1d(x.row(0), y.row(0), 1.0), brute_perm_quotient(x, y, MetricKind::l1()), tol);
        EXPECT_NEAR(wasserstein_1d(x.row(0), y.row(0), 2.0), brute_perm_quotient(x, y, MetricKind::frobenius()), tol);
        EXPECT_NEAR(wasserstein_1d(x.row(0), y.row(0), std::numeric_limits<double>::infinity()),
                    brute_perm_quotient(x, y, MetricKind::inf()), tol);
    }
}

TEST(PermQuotient, ZeroOnOrbit) {
    std::mt19937_64 rng(1);
    const auto x = synth::uniform_cloud(3, 12, rng);
    const auto y = permute_columns(x, synth::random_permutation(12, rng));
    EXPECT_NEAR(perm_quotient_sum(x, y), 0.0, 1e-15);
    EXPECT_EQ(perm_quotient_bottleneck(x, y), 0.0);
    EXPECT_EQ(perm_quotient_sum(PointCloud::from_vector({0, 1}), PointCloud::from_vector({1, 0})), 0.0);
}

TEST(PermQuotient, MatchesBruteForce) {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> nsize(1, 7), dsize(1, 3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = dsize(rng), n = nsize(rng);
        const auto x = synth::uniform_cloud(d, n, rng);
        const auto y = synth::uniform_cloud(d, n, rng);
        ASSERT_NEAR(perm_quotient_sum(x, y), brute_perm_quotient(x, y, MetricKind::mean_euclidean()), tol);
        ASSERT_NEAR(perm_quotient_bottleneck(x, y), brute_perm_quotient(x, y, MetricKind::inf()), tol);
    }
}

TEST(PermQuotient, BottleneckBeatsSumAssignment) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const auto x = synth::uniform_cloud(3, 10, rng);
        const auto y = synth::uniform_cloud(3, 10, rng);
        CostMatrix cost(10);
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j < 10; ++j) cost(i, j) = column_euclidean(x.column(i), y.column(j));
        const auto a = solve_min_sum(cost);
        double worst = 0.0;
        for (std::size_t i = 0; i < 10; ++i) worst = std::max(worst, column_inf(x.column(i), y.column(a.col_of_row[i])));
        EXPECT_LE(perm_quotient_bottleneck(x, y), worst + tol);
    }
}

TEST(PermQuotient, BruteRejectsLargeN) {
    EXPECT_THROW(brute_perm_quotient(PointCloud(1, 9), PointCloud(1, 9), MetricKind::inf()), SizeError);
    EXPECT_EQ(brute_perm_quotient(PointCloud::from_vector({1}), PointCloud::from_vector({4}), MetricKind::inf()), 3.0);
}

TEST(SignQuotient, ExamplesAndOracle) {
    EXPECT_EQ(sign_quotient(PointCloud::from_vector({1, 2}), PointCloud::from_vector({-1, -2}), BaseMetric::Inf), 0.0);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> dsize(1, 4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = dsize(rng);
        PointCloud x(d, 5), y(d, 5);
        for (double& v : x.values()) v = u(rng);
        for (double& v : y.values()) v = u(rng);
        for (BaseMetric b : {BaseMetric::Inf, BaseMetric::Frobenius, BaseMetric::L1, BaseMetric::MeanEuclidean}) {
            ASSERT_NEAR(sign_quotient(x, y, b), brute_sign_quotient(x, y, b), tol);
        }
        const auto orbit = sign_orbit(x);
        EXPECT_NEAR(sign_quotient(x, orbit[t % orbit.size()], BaseMetric::Frobenius), 0.0, tol);
    }
    EXPECT_THROW(sign_quotient(PointCloud(21, 1), PointCloud(21, 1), BaseMetric::Inf), SizeError);
}

TEST(TranslationQuotient, MatchesNumericalSearch) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        const auto x = synth::uniform_cloud(3, 6, rng);
        const auto y = synth::uniform_cloud(3, 6, rng);
        EXPECT_NEAR(translation_quotient(x, y), searched_translation(x, y), 1e-6);
        const std::vector<double> shift{0.25, -1.5, 3.0};
        EXPECT_NEAR(translation_quotient(apply_shift(x, shift), apply_shift(y, shift)), translation_quotient(x, y), tol);
        EXPECT_NEAR(translation_quotient(x, apply_shift(x, shift)), 0.0, tol);
    }
}

TEST(MetricAxioms, SymmetryAndTriangle) {
    std::mt19937_64 rng(53);
    for (const auto& kind : all_kinds()) {
        for (int t = 0; t < 1000; ++t) {
            const auto x = synth::uniform_cloud(2, 5, rng);
            const auto y = synth::uniform_cloud(2, 5, rng);
            const auto z = synth::uniform_cloud(2, 5, rng);
            const double xy = distance(kind, x, y), yx = distance(kind, y, x);
            ASSERT_NEAR(xy, yx, tol) << kind.to_string();
            ASSERT_LE(distance(kind, x, z), xy + distance(kind, y, z) + tol) << kind.to_string();
            ASSERT_GE(xy, 0.0);
        }
    }
}

TEST(MetricAxioms, BaseMetricsAreGroupInvariant) {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto x = synth::uniform_cloud(3, 8, rng);
    const auto y = synth::uniform_cloud(3, 8, rng);
    for (int g = 0; g < 100; ++g) {
        const auto perm = synth::random_permutation(8, rng);
        EXPECT_NEAR(dist_inf(permute_columns(x, perm), permute_columns(y, perm)), dist_inf(x, y), tol);
        EXPECT_NEAR(dist_mean_euclidean(permute_columns(x, perm), permute_columns(y, perm)), dist_mean_euclidean(x, y), tol);
        std::vector<int> signs(3);
        for (int& s : signs) s = coin(rng) ? 1 : -1;
        EXPECT_NEAR(dist_inf(apply_signs(x, signs), apply_signs(y, signs)), dist_inf(x, y), tol);
        EXPECT_NEAR(dist_l1(apply_signs(x, signs), apply_signs(y, signs)), dist_l1(x, y), tol);
        EXPECT_NEAR(dist_frobenius(apply_signs(x, signs), apply_signs(y, signs)), dist_frobenius(x, y), tol);
        std::vector<double> shift{u(rng), u(rng), u(rng)};
        EXPECT_NEAR(dist_frobenius(apply_shift(x, shift), apply_shift(y, shift)), dist_frobenius(x, y), tol);
    }
}

TEST(MetricKindText, RoundTripAndCompatibility) {
    for (const auto& kind : all_kinds()) {
        EXPECT_EQ(MetricKind::parse(kind.to_string()), kind);
    }
    EXPECT_EQ(MetricKind::parse("euclidean"), MetricKind::mean_euclidean());
    EXPECT_EQ(MetricKind::parse("wasserstein-1d:2").p, 2.0);
    EXPECT_TRUE(std::isinf(MetricKind::parse("wasserstein-1d:inf").p));
    EXPECT_THROW(MetricKind::parse("wasserstein-1d:3"), DomainError);
    EXPECT_THROW(MetricKind::parse("hamming"), DomainError);
    EXPECT_THROW(MetricKind::parse("sign:wasserstein-1d:1"), DomainError);
    EXPECT_THROW((MetricKind{BaseMetric::Inf, Quotient::PermSum, 0.0}.validate()), DomainError);
    EXPECT_THROW((MetricKind{BaseMetric::L1, Quotient::Translation, 0.0}.validate()), DomainError);
}

TEST(Assignment, SolversOnHandInstance) {
    CostMatrix c(3);
    const double v[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = v[i][j];
    // Best sum 1 + 2 + 2 = 5 (rows -> cols 1, 0, 2); best bottleneck 2 from the same assignment.
    const auto s = solve_min_sum(c);
    EXPECT_EQ(s.cost, 5.0);
    EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_EQ(solve_bottleneck(c).cost, 2.0);
}
