#ifndef SYMCOVER_VERIFY_HPP
#define SYMCOVER_VERIFY_HPP

#include "bounds.hpp"
#include "canonize.hpp"
#include "coverage.hpp"
#include "hilbert.hpp"
#include "metrics.hpp"
#include "synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

/**
 * @file verify.hpp
 *
 * @brief Named property suites: each checks an invariant of one module on
 * exhaustive or seeded random inputs and reports pass/fail with a short
 * detail string.
 */

namespace symcover::verify {

struct PropertyResult {
    std::string suite;
    std::string property;
    bool passed = false;
    std::string detail;
};

using Results = std::vector<PropertyResult>;

inline constexpr double tol = 1e-9;

// ---- fixed demonstration sets ----

/// Ten points: five evenly spaced samples of each interval [-0.6,-0.4] and [0.4,0.6].
inline std::vector<double> c1_demo_points() {
    std::vector<double> out;
    for (double center : {-0.5, 0.5}) {
        for (int j = -2; j <= 2; ++j) {
            out.push_back(center + 0.05 * j);
        }
    }
    return out;
}

struct CoverTriple {
    std::size_t raw = 0;
    std::size_t canonized = 0;
    std::size_t quotient = 0;
};

/// Exact internal covering numbers of the c1 demo set before and after c1, and modulo sign.
inline CoverTriple c1_demo(double epsilon = 0.1) {
    const auto pts = c1_demo_points();
    std::vector<double> canon;
    for (double t : pts) {
        canon.push_back(canon_c1(t));
    }
    auto absdiff = [](double a, double b) { return std::abs(a - b); };
    auto signq = [](double a, double b) { return std::min(std::abs(a - b), std::abs(a + b)); };
    return {exact_cover_number(pts, absdiff, epsilon), exact_cover_number(canon, absdiff, epsilon),
            exact_cover_number(pts, signq, epsilon)};
}

/// Pair whose first rows tie exactly in X but not in Y, so lexsort swaps the columns of Y only.
inline std::pair<PointCloud, PointCloud> lexsort_witness() {
    return {PointCloud::from_rows({{0.5, 0.5}, {0.0, 1.0}}), PointCloud::from_rows({{0.51, 0.5}, {0.0, 1.0}})};
}

// ---- suites ----

inline Results suite_hilbert(std::uint64_t seed) {
    Results out;
    auto add = [&](std::string prop, bool ok, std::string detail) {
        out.push_back({"hilbert", std::move(prop), ok, std::move(detail)});
    };

    std::size_t bij_fail = 0, adj_fail = 0, nest_fail = 0, cells = 0;
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned m = 1; m <= 4; ++m) {
            const hilbert::Params p(d, m);
            std::set<hilbert::Cell> seen;
            hilbert::Cell prev;
            for (hilbert::Index k = 0; k < p.num_cells(); ++k) {
                const auto c = hilbert::decode(p, k);
                ++cells;
                if (hilbert::encode(p, c) != k || !seen.insert(c).second) {
                    ++bij_fail;
                }
                if (k > 0) {
                    std::uint64_t l1 = 0;
                    for (unsigned i = 0; i < d; ++i) {
                        l1 += c[i] > prev[i] ? c[i] - prev[i] : prev[i] - c[i];
                    }
                    adj_fail += l1 != 1;
                }
                prev = c;
            }
            if (m <= 3) {
                const hilbert::Params child(d, m + 1);
                for (hilbert::Index k = 0; k < child.num_cells(); ++k) {
                    auto c = hilbert::decode(child, k);
                    for (auto& v : c) v /= 2;
                    nest_fail += c != hilbert::decode(p, k >> d);
                }
            }
        }
    }
    add("bijection", bij_fail == 0, std::to_string(cells) + " cells, " + std::to_string(bij_fail) + " failures");
    add("adjacency", adj_fail == 0, std::to_string(adj_fail) + " non-adjacent steps");
    add("nesting", nest_fail == 0, std::to_string(nest_fail) + " violations");

    auto holder_violation = [](const hilbert::Params& p, hilbert::Index a, hilbert::Index b) {
        const double x = hilbert::interval_centroid(p, a);
        const double y = hilbert::interval_centroid(p, b);
        const auto ca = hilbert::centroid(p, hilbert::decode(p, a));
        const auto cb = hilbert::centroid(p, hilbert::decode(p, b));
        double lhs = 0.0;
        for (std::size_t i = 0; i < ca.size(); ++i) lhs = std::max(lhs, std::abs(ca[i] - cb[i]));
        const double rhs = 4.0 * std::pow(std::abs(x - y), 1.0 / static_cast<double>(p.dim));
        return lhs > rhs * (1.0 + 1e-12);
    };
    std::size_t pairs = 0, holder_fail = 0;
    for (unsigned m = 1; m <= 4; ++m) {
        const hilbert::Params p(2, m);
        for (hilbert::Index a = 0; a < p.num_cells(); ++a) {
            for (hilbert::Index b = a + 1; b < p.num_cells(); ++b) {
                ++pairs;
                holder_fail += holder_violation(p, a, b);
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (unsigned m = 1; m <= 3; ++m) {
        const hilbert::Params p(3, m);
        std::uniform_int_distribution<hilbert::Index> pick(0, p.num_cells() - 1);
        for (int t = 0; t < 100000; ++t) {
            const auto a = pick(rng), b = pick(rng);
            if (a == b) continue;
            ++pairs;
            holder_fail += holder_violation(p, a, b);
        }
    }
    add("holder", holder_fail == 0, std::to_string(pairs) + " pairs, " + std::to_string(holder_fail) + " violations");
    return out;
}

inline Results suite_isometry(std::uint64_t seed) {
    Results out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> size(1, 64);

    double worst_sort = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = size(rng);
        const double p = t % 2 == 0 ? 1.0 : 2.0;
        auto x = synth::uniform_cloud(1, n, rng);
        auto y = synth::uniform_cloud(1, n, rng);
        const double lhs = wasserstein_1d(x.row(0), y.row(0), p);
        const double rhs = n <= 8 ? brute_perm_quotient(x, y, p == 1.0 ? MetricKind::l1() : MetricKind::frobenius())
                                  : perm_quotient_lp(x, y, p);
        worst_sort = std::max(worst_sort, std::abs(lhs - rhs));
    }
    out.push_back({"isometry", "sort", worst_sort <= tol, "max |W - quotient| = " + std::to_string(worst_sort)});

    double worst_center = 0.0;
    for (int t = 0; t < 200; ++t) {
        auto x = synth::uniform_cloud(3, 8, rng);
        auto y = synth::uniform_cloud(3, 8, rng);
        const double via_canon = dist_frobenius(canon_centralize(x).cloud, canon_centralize(y).cloud);
        // Closed-form minimizer t = mean(X) - mean(Y).
        const auto mx = column_mean(x), my = column_mean(y);
        std::vector<double> shift(3);
        for (int r = 0; r < 3; ++r) shift[r] = mx[r] - my[r];
        const double direct = dist_frobenius(apply_shift(x, shift), y);
        worst_center = std::max(worst_center, std::abs(via_canon - direct));
    }
    out.push_back({"isometry", "centralize", worst_center <= tol, "max gap " + std::to_string(worst_center)});

    double worst_abs = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const double a = unit(rng), b = unit(rng);
        const double quotient = std::min(std::abs(a - b), std::abs(-a - b));
        worst_abs = std::max(worst_abs, std::abs(std::abs(canon_abs(a) - canon_abs(b)) - quotient));
    }
    out.push_back({"isometry", "abs", worst_abs <= tol, "max gap " + std::to_string(worst_abs)});
    return out;
}

inline Results suite_poor_c1(std::uint64_t) {
    const auto c = c1_demo();
    std::ostringstream s;
    s << "raw=" << c.raw << " c1=" << c.canonized << " quotient=" << c.quotient;
    return {{"poor-c1", "cover-numbers-2-2-1", c.raw == 2 && c.canonized == 2 && c.quotient == 1, s.str()}};
}

/// Haar-ish random orthogonal matrix: Gram-Schmidt on Gaussian columns.
template <class Rng>
SquareMatrix random_orthogonal(std::size_t d, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SquareMatrix q(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t r = 0; r < d; ++r) q(r, k) = gauss(rng);
        for (std::size_t prev = 0; prev < k; ++prev) {
            double dot = 0.0;
            for (std::size_t r = 0; r < d; ++r) dot += q(r, k) * q(r, prev);
            for (std::size_t r = 0; r < d; ++r) q(r, k) -= dot * q(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < d; ++r) norm += q(r, k) * q(r, k);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < d; ++r) q(r, k) /= norm;
    }
    return q;
}

inline bool is_orthogonal(const SquareMatrix& q, double tolerance) {
    for (std::size_t a = 0; a < q.n; ++a) {
        for (std::size_t b = 0; b < q.n; ++b) {
            double dot = 0.0;
            for (std::size_t r = 0; r < q.n; ++r) dot += q(r, a) * q(r, b);
            if (std::abs(dot - (a == b ? 1.0 : 0.0)) > tolerance) return false;
        }
    }
    return true;
}

inline Results suite_canon(std::uint64_t seed) {
    Results out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nsize(1, 12);
    std::uniform_int_distribution<std::size_t> dsize(1, 4);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    struct Perm {
        std::string name;
        std::function<CanonResult(const PointCloud&)> fn;
        bool one_row;
    };
    const std::vector<Perm> perms = {
        {"sort", [](const PointCloud& x) { return canon_sort(x); }, true},
        {"lexsort", [](const PointCloud& x) { return canon_lexsort(x); }, false},
        {"hilbert", [](const PointCloud& x) { return canon_hilbert(x, 4); }, false},
    };
    for (const auto& c : perms) {
        std::size_t idem = 0, member = 0, invariant = 0, fidelity = 0;
        for (int t = 0; t < 1000; ++t) {
            const std::size_t d = c.one_row ? 1 : dsize(rng);
            auto x = synth::uniform_cloud(d, nsize(rng), rng);
            if (t % 3 == 0 && x.size() > 1) {
                // Force duplicate columns and a shared first coordinate.
                for (std::size_t r = 0; r < d; ++r) x(r, 1) = x(r, 0);
            }
            const auto cx = c.fn(x);
            idem += !(c.fn(cx.cloud).cloud == cx.cloud);
            fidelity += !(apply_group_element(x, cx) == cx.cloud);
            auto cols = [](const PointCloud& z) {
                std::multiset<std::vector<double>> s;
                for (std::size_t j = 0; j < z.size(); ++j) s.insert({z.column(j).begin(), z.column(j).end()});
                return s;
            };
            member += cols(x) != cols(cx.cloud);
            for (int g = 0; g < 100; ++g) {
                invariant += !(c.fn(permute_columns(x, synth::random_permutation(x.size(), rng))).cloud == cx.cloud);
            }
        }
        out.push_back({"canon", c.name + ".idempotent", idem == 0, std::to_string(idem) + " failures"});
        out.push_back({"canon", c.name + ".orbit-membership", member == 0, std::to_string(member) + " failures"});
        out.push_back({"canon", c.name + ".orbit-invariance", invariant == 0, std::to_string(invariant) + " failures"});
        out.push_back({"canon", c.name + ".group-element", fidelity == 0, std::to_string(fidelity) + " failures"});
    }

    std::size_t scalar_fail = 0;
    for (int t = 0; t < 1000; ++t) {
        const double v = sym(rng);
        scalar_fail += canon_abs(canon_abs(v)) != canon_abs(v) || canon_abs(-v) != canon_abs(v);
        scalar_fail += canon_c1(canon_c1(v)) != canon_c1(v) || canon_c1(-v) != canon_c1(v);
        scalar_fail += std::abs(canon_c1(v)) != std::abs(v);
    }
    out.push_back({"canon", "abs-c1.axioms", scalar_fail == 0, std::to_string(scalar_fail) + " failures"});

    std::size_t skew_fail = 0, center_fail = 0;
    for (int t = 0; t < 1000; ++t) {
        auto x = synth::uniform_cloud(dsize(rng), nsize(rng), rng);
        const auto cx = canon_centralize(x);
        const auto again = canon_centralize(cx.cloud);
        center_fail += dist_inf(again.cloud, cx.cloud) > 1e-12;
        const auto centered = cx.cloud;
        const auto sx = canon_skewness_sign(centered);
        skew_fail += !(canon_skewness_sign(sx.cloud).cloud == sx.cloud);
        skew_fail += !(apply_group_element(centered, sx) == sx.cloud);
        const auto orbit = sign_orbit(centered);
        const auto& g = orbit[std::uniform_int_distribution<std::size_t>(0, orbit.size() - 1)(rng)];
        bool separated = true;
        for (std::size_t r = 0; r < centered.dim(); ++r) {
            double m3 = 0.0;
            for (double v : centered.row(r)) m3 += v * v * v;
            separated = separated && std::abs(m3) > 1e-9;
        }
        if (separated) {
            skew_fail += !(canon_skewness_sign(g).cloud == sx.cloud);
        }
    }
    out.push_back({"canon", "centralize.idempotent", center_fail == 0, std::to_string(center_fail) + " failures (tol 1e-12)"});
    out.push_back({"canon", "skewness.axioms", skew_fail == 0, std::to_string(skew_fail) + " failures"});

    // Translation orbit for centralize: c(X + t) = c(X) and c(X) = X - t_X.
    std::size_t center_orbit = 0;
    for (int t = 0; t < 1000; ++t) {
        auto x = synth::uniform_cloud(dsize(rng), nsize(rng), rng);
        std::vector<double> shift(x.dim());
        for (double& v : shift) v = 4.0 * sym(rng);
        const auto cx = canon_centralize(x);
        center_orbit += dist_inf(canon_centralize(apply_shift(x, shift)).cloud, cx.cloud) > 1e-12;
        center_orbit += dist_inf(apply_shift(x, cx.shift), cx.cloud) != 0.0;
    }
    out.push_back({"canon", "centralize.orbit", center_orbit == 0, std::to_string(center_orbit) + " failures (tol 1e-12)"});

    // pca-skew over the rigid motions; inputs with a small spectral gap or a near-zero third moment are skipped.
    std::size_t pca_fail = 0, pca_skipped = 0;
    std::uniform_int_distribution<std::size_t> psize(8, 24);
    std::uniform_int_distribution<std::size_t> pdim(2, 3);
    for (int t = 0; t < 1000; ++t) {
        auto x = synth::uniform_cloud(pdim(rng), psize(rng), rng);
        PcaResult px;
        try {
            px = canon_pca_skew(x);
        } catch (const DegenerateSpectrumError&) {
            ++pca_skipped;
            continue;
        }
        bool well_posed = true;
        for (std::size_t k = 0; k + 1 < x.dim(); ++k) {
            well_posed = well_posed && px.variances[k] - px.variances[k + 1] > 1e-2 * px.variances[0];
        }
        for (std::size_t r = 0; r < x.dim(); ++r) {
            double m3 = 0.0;
            for (double v : px.cloud.row(r)) m3 += v * v * v;
            well_posed = well_posed && std::abs(m3) > 1e-3;
        }
        if (!well_posed) {
            ++pca_skipped;
            continue;
        }
        const auto q = random_orthogonal(x.dim(), rng);
        std::vector<double> shift(x.dim());
        for (double& v : shift) v = sym(rng);
        const auto moved = apply_shift(rotate_into(x, q), shift);
        pca_fail += dist_inf(canon_pca_skew(moved).cloud, px.cloud) > tol;
        pca_fail += dist_inf(canon_pca_skew(px.cloud).cloud, px.cloud) > tol;
        pca_fail += dist_inf(rotate_into(apply_shift(x, px.shift), px.frame), px.cloud) > tol;
        pca_fail += !is_orthogonal(px.frame, tol);
    }
    out.push_back({"canon", "pca-skew.axioms", pca_fail == 0,
                   std::to_string(pca_fail) + " failures, " + std::to_string(pca_skipped) + " ill-conditioned inputs skipped"});
    return out;
}

inline Results suite_assignment(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nsize(1, 7);
    std::uniform_int_distribution<std::size_t> dsize(1, 3);
    double worst_sum = 0.0, worst_bottle = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = dsize(rng), n = nsize(rng);
        auto x = synth::uniform_cloud(d, n, rng);
        auto y = synth::uniform_cloud(d, n, rng);
        worst_sum = std::max(worst_sum,
                             std::abs(perm_quotient_sum(x, y) - brute_perm_quotient(x, y, MetricKind::mean_euclidean())));
        worst_bottle = std::max(worst_bottle,
                                std::abs(perm_quotient_bottleneck(x, y) - brute_perm_quotient(x, y, MetricKind::inf())));
    }
    return {{"assignment", "perm-sum-vs-brute", worst_sum <= tol, "max gap " + std::to_string(worst_sum)},
            {"assignment", "perm-bottleneck-vs-brute", worst_bottle <= tol, "max gap " + std::to_string(worst_bottle)}};
}

inline Results suite_lower_bound(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nsize(1, 16);
    std::size_t lex = 0, hil = 0, srt = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = nsize(rng);
        auto x = synth::uniform_cloud(3, n, rng);
        auto y = synth::uniform_cloud(3, n, rng);
        const double qb = perm_quotient_bottleneck(x, y);
        const double qs = perm_quotient_sum(x, y);
        const auto lx = canon_lexsort(x).cloud, ly = canon_lexsort(y).cloud;
        const auto hx = canon_hilbert(x, 6).cloud, hy = canon_hilbert(y, 6).cloud;
        lex += qb > dist_inf(lx, ly) + tol || qs > dist_mean_euclidean(lx, ly) + tol;
        hil += qb > dist_inf(hx, hy) + tol || qs > dist_mean_euclidean(hx, hy) + tol;
        auto a = synth::uniform_cloud(1, n, rng);
        auto b = synth::uniform_cloud(1, n, rng);
        srt += perm_quotient_lp(a, b, 1.0) > dist_l1(canon_sort(a).cloud, canon_sort(b).cloud) + tol;
    }
    const auto [wx, wy] = lexsort_witness();
    const double gap = dist_inf(canon_lexsort(wx).cloud, canon_lexsort(wy).cloud) - perm_quotient_bottleneck(wx, wy);
    return {{"lower-bound", "lexsort", lex == 0, std::to_string(lex) + " violations"},
            {"lower-bound", "hilbert-m6", hil == 0, std::to_string(hil) + " violations"},
            {"lower-bound", "sort-d1", srt == 0, std::to_string(srt) + " violations"},
            {"lower-bound", "lexsort-non-isometry-witness", gap >= 0.1, "gap " + std::to_string(gap)}};
}

/// Number of distinct multisets of size n over m symbols, by enumerating sorted tuples.
inline std::uint64_t brute_multiset_classes(unsigned n, unsigned m) {
    std::set<std::vector<unsigned>> classes;
    std::vector<unsigned> tuple(n, 0);
    while (true) {
        auto s = tuple;
        std::sort(s.begin(), s.end());
        classes.insert(s);
        std::size_t i = 0;
        while (i < n && ++tuple[i] == m) {
            tuple[i++] = 0;
        }
        if (i == n) break;
    }
    return classes.size();
}

inline Results suite_combinatorics(std::uint64_t) {
    std::size_t fail = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = 1; m <= 6; ++m) {
            fail += bounds::multiset_count(n, m) != brute_multiset_classes(n, m);
        }
    }
    return {{"combinatorics", "multiset-count", fail == 0, std::to_string(fail) + " mismatches over n,m <= 6"}};
}

/// The published table, d=3, eps=1/6: {n, {quotient, hilbert, lexsort, hypercube}} as "m.me+X".
inline const std::map<std::uint64_t, std::array<std::string, 4>>& reference_table() {
    static const std::map<std::uint64_t, std::array<std::string, 4>> table = {
        {250, {"2.1e+36", "5.3e+193", "1.1e+239", "6.9e+357"}},
        {500, {"7.4e+43", "7.9e+278", "4.0e+477", "4.8e+715"}},
        {750, {"2.2e+48", "5.0e+336", "1.4e+716", "3.3e+1073"}},
        {1000, {"3.5e+51", "5.0e+380", "5.2e+954", "2.3e+1431"}},
        {2000, {"2.0e+59", "4.4e+494", "9.2e+1908", "5.3e+2862"}},
    };
    return table;
}

/// Curve order at which the Hilbert column of the reference table is reproduced.
inline constexpr unsigned reference_table_order = 10;

inline Results suite_bounds(std::uint64_t) {
    std::vector<std::uint64_t> ns;
    for (const auto& [n, _] : reference_table()) ns.push_back(n);
    const auto rows = bounds::bounds_table(ns, 3, bounds::Epsilon::ratio(1, 6), reference_table_order);
    std::size_t matched = 0;
    std::string mismatch;
    for (const auto& row : rows) {
        const auto& ref = reference_table().at(row.n);
        const std::array<std::string, 4> got = {row.quotient.scientific(), row.hilbert.scientific(),
                                                row.lexsort.scientific(), row.hypercube.scientific()};
        for (int c = 0; c < 4; ++c) {
            if (got[c] == ref[c]) {
                ++matched;
            } else {
                mismatch += " n=" + std::to_string(row.n) + ":" + got[c] + "!=" + ref[c];
            }
        }
    }
    Results out{{"bounds", "table-reproduction", matched == 20, std::to_string(matched) + "/20 cells" + mismatch}};

    std::size_t order_fail = 0;
    for (const auto& row : rows) {
        order_fail += !(row.quotient.log10 <= row.hilbert.log10 && row.hilbert.log10 <= row.hypercube.log10);
    }
    out.push_back({"bounds", "quotient<=hilbert<=hypercube", order_fail == 0, std::to_string(order_fail) + " rows out of order"});
    return out;
}

inline Results suite_coverage(std::uint64_t seed) {
    synth::ClusterConfig cfg;
    cfg.clusters = 3;
    cfg.train_per_cluster = 20;
    cfg.test_per_cluster = 10;
    cfg.points = 16;
    cfg.seed = seed;
    const auto data = synth::make_clusters(cfg);
    auto canonized = [](const Dataset& ds, auto&& fn) {
        Dataset out = ds;
        for (auto& x : out.items) {
            auto lab = x.label();
            x = fn(x).cloud;
            x.set_label(lab);
        }
        return out;
    };
    const auto hil = [](const PointCloud& x) { return canon_hilbert(x, 8); };
    const auto lex = [](const PointCloud& x) { return canon_lexsort(x); };
    const auto q = coverage(data.train, data.test, MetricKind::perm_sum(), true);
    const auto h = coverage(canonized(data.train, hil), canonized(data.test, hil), MetricKind::mean_euclidean(), true);
    const auto l = coverage(canonized(data.train, lex), canonized(data.test, lex), MetricKind::mean_euclidean(), true);
    std::size_t fail = 0;
    for (std::size_t t = 0; t < q.q.size(); ++t) {
        fail += q.q[t] > h.q[t] + tol || q.q[t] > l.q[t] + tol;
    }
    return {{"coverage", "quotient-dominates-canonized", fail == 0, std::to_string(fail) + " items violate"}};
}

inline const std::map<std::string, std::function<Results(std::uint64_t)>>& suites() {
    static const std::map<std::string, std::function<Results(std::uint64_t)>> all = {
        {"hilbert", suite_hilbert},         {"isometry", suite_isometry},     {"poor-c1", suite_poor_c1},
        {"canon", suite_canon},             {"assignment", suite_assignment}, {"lower-bound", suite_lower_bound},
        {"combinatorics", suite_combinatorics}, {"bounds", suite_bounds},     {"coverage", suite_coverage},
    };
    return all;
}

/// Runs one suite by name, or every suite for "all".
inline Results run(const std::string& name, std::uint64_t seed) {
    if (name == "all") {
        Results out;
        for (const auto& [_, fn] : suites()) {
            auto r = fn(seed);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    auto it = suites().find(name);
    if (it == suites().end()) {
        throw DomainError("unknown suite '" + name + "'");
    }
    return it->second(seed);
}

} // namespace symcover::verify

#endif // SYMCOVER_VERIFY_HPP
