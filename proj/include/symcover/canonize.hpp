#ifndef SYMCOVER_CANONIZE_HPP
#define SYMCOVER_CANONIZE_HPP

#include "hilbert.hpp"
#include "jacobi.hpp"
#include "point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

/**
 * @file canonize.hpp
 *
 * @brief Canonizations: maps that pick one representative from each group
 * orbit, together with the group element that produced it.
 *
 * Permutation canonizations (sort, lexsort, Hilbert) act on columns; sign
 * canonizations act on rows or scalars; centralization removes translations.
 */

namespace symcover {

/**
 * @brief Canonical representative plus the group element applied to the input.
 *
 * Only the fields relevant to the group are filled: `perm` for permutations,
 * `signs` for sign flips, `shift` for translations.
 */
struct CanonResult {
    PointCloud cloud;
    std::vector<std::size_t> perm;
    std::vector<int> signs;
    std::vector<double> shift;
};

/// Re-applies the group element recorded in `result` to `input`.
inline PointCloud apply_group_element(const PointCloud& input, const CanonResult& result) {
    PointCloud out = input;
    if (!result.shift.empty()) {
        out = apply_shift(out, result.shift);
    }
    if (!result.signs.empty()) {
        out = apply_signs(out, result.signs);
    }
    if (!result.perm.empty()) {
        out = permute_columns(out, result.perm);
    }
    return out;
}

// ---- scalar sign group {-1, +1} ----

inline double canon_abs(double t) { return std::abs(t); }

/// |t| outside [-1/2, 1/2], -|t| inside. Discontinuous at |t| = 1/2.
inline double canon_c1(double t) {
    const double a = std::abs(t);
    return a > 0.5 ? a : -a;
}

/**
 * @brief Exact rational, optionally standing in for an irrational number.
 *
 * Floating-point values carry no notion of rationality, so the c-infinity
 * canonization is defined over this symbolic type instead.
 */
struct ExactReal {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool irrational = false;

    friend bool operator==(const ExactReal&, const ExactReal&) = default;

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline ExactReal exact_abs(ExactReal t) {
    if (t.den < 0) {
        t.num = -t.num;
        t.den = -t.den;
    }
    t.num = t.num < 0 ? -t.num : t.num;
    return t;
}

/// |t| for rationals, -|t| for irrationals.
inline ExactReal canon_cinf(ExactReal t) {
    if (t.den == 0) {
        throw DomainError("canon_cinf: zero denominator");
    }
    ExactReal out = exact_abs(t);
    if (out.irrational) {
        out.num = -out.num;
    }
    return out;
}

// ---- permutation group on vectors / columns ----

inline std::vector<double> canon_sort(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    return x;
}

namespace detail {

// Exact lexicographic order on columns; row 0 is the primary key.
inline bool column_less(const PointCloud& x, std::size_t a, std::size_t b) {
    auto ca = x.column(a);
    auto cb = x.column(b);
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

inline std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return perm;
}

} // namespace detail

/// Sorts a d=1 cloud's single row, recording the permutation (ties by original index).
inline CanonResult canon_sort(const PointCloud& x) {
    if (x.dim() != 1) {
        throw DomainError("canon_sort: expects a one-row cloud, got d=" + std::to_string(x.dim()));
    }
    auto perm = detail::identity_perm(x.size());
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return x(0, a) < x(0, b); });
    CanonResult out{permute_columns(x, perm), std::move(perm), {}, {}};
    return out;
}

/// Orders columns lexicographically (row 0 first, later rows break ties, then original index).
inline CanonResult canon_lexsort(const PointCloud& x) {
    auto perm = detail::identity_perm(x.size());
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return detail::column_less(x, a, b); });
    return CanonResult{permute_columns(x, perm), std::move(perm), {}, {}};
}

/**
 * @brief Hilbert-curve canonization of order m.
 *
 * Each column is rounded to its grid cell, columns are ordered by the curve
 * index of their cells, and columns sharing a cell are ordered
 * lexicographically (then by original index). The permutation is applied to
 * the original, unrounded columns.
 */
inline CanonResult canon_hilbert(const PointCloud& x, unsigned order) {
    const hilbert::Params params(static_cast<unsigned>(x.dim()), order);
    std::vector<hilbert::Index> keys(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        keys[j] = hilbert::index_of(params, x.column(j));
    }
    auto perm = detail::identity_perm(x.size());
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) {
            return keys[a] < keys[b];
        }
        return detail::column_less(x, a, b);
    });
    return CanonResult{permute_columns(x, perm), std::move(perm), {}, {}};
}

// ---- translations ----

inline std::vector<double> column_mean(const PointCloud& x) {
    std::vector<double> mean(x.dim(), 0.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t r = 0; r < x.dim(); ++r) {
            mean[r] += x(r, j);
        }
    }
    for (auto& m : mean) {
        m /= static_cast<double>(x.size());
    }
    return mean;
}

/// Subtracts the column mean so that the columns sum to zero.
inline CanonResult canon_centralize(const PointCloud& x) {
    auto shift = column_mean(x);
    return CanonResult{apply_shift(x, shift), {}, {}, std::move(shift)};
}

// ---- PCA frame and sign fixing ----

struct PcaResult {
    PointCloud cloud;
    SquareMatrix frame;          ///< column k is the k-th principal axis, in input coordinates
    std::vector<double> shift;   ///< mean removed before rotating
    std::vector<double> variances;
};

/// Covariance (1/n) X X^T of a cloud, assumed centered.
inline SquareMatrix covariance(const PointCloud& x) {
    const std::size_t d = x.dim();
    SquareMatrix c(d);
    for (std::size_t j = 0; j < x.size(); ++j) {
        auto col = x.column(j);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a; b < d; ++b) {
                c(a, b) += col[a] * col[b];
            }
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            c(a, b) /= static_cast<double>(x.size());
            c(b, a) = c(a, b);
        }
    }
    return c;
}

/// Expresses every column of `x` in the basis given by the columns of `frame`.
inline PointCloud rotate_into(const PointCloud& x, const SquareMatrix& frame) {
    const std::size_t d = x.dim();
    PointCloud out(d, x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        auto col = x.column(j);
        for (std::size_t k = 0; k < d; ++k) {
            double acc = 0.0;
            for (std::size_t r = 0; r < d; ++r) {
                acc += frame(r, k) * col[r];
            }
            out(k, j) = acc;
        }
    }
    out.set_label(x.label());
    return out;
}

/**
 * @brief Centers the cloud and rotates it into its principal axes, largest variance first.
 *
 * The frame is unique only up to one sign per axis; see canon_skewness_sign.
 */
inline PcaResult pca_align(const PointCloud& x, double gap_tol = 1e-6) {
    const std::size_t d = x.dim();
    if (d > 8) {
        throw SizeError("pca_align: d=" + std::to_string(d) + " exceeds 8");
    }
    auto centered = canon_centralize(x);
    auto eig = jacobi_eigen(covariance(centered.cloud));

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eig.values[a] > eig.values[b]; });

    PcaResult out;
    out.shift = centered.shift;
    out.frame = SquareMatrix(d);
    out.variances.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        out.variances[k] = eig.values[order[k]];
        for (std::size_t r = 0; r < d; ++r) {
            out.frame(r, k) = eig.vectors(r, order[k]);
        }
    }

    const double top = std::max(std::abs(out.variances.front()), std::numeric_limits<double>::min());
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (out.variances[k] - out.variances[k + 1] <= gap_tol * top) {
            throw DegenerateSpectrumError("pca_align: eigenvalues " + std::to_string(out.variances[k]) + " and " +
                                          std::to_string(out.variances[k + 1]) + " are not separated");
        }
    }
    if (d == 1 && out.variances[0] <= 0.0) {
        throw DegenerateSpectrumError("pca_align: zero variance");
    }

    out.cloud = rotate_into(centered.cloud, out.frame);
    return out;
}

/// Negates each row whose sum of cubes is negative; zero keeps sign +1.
inline CanonResult canon_skewness_sign(const PointCloud& x) {
    std::vector<int> signs(x.dim(), 1);
    for (std::size_t r = 0; r < x.dim(); ++r) {
        double third = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double v = x(r, j);
            third += v * v * v;
        }
        if (third < 0.0) {
            signs[r] = -1;
        }
    }
    return CanonResult{apply_signs(x, signs), {}, signs, {}};
}

/// PCA alignment followed by skewness sign fixing; the frame absorbs the signs.
inline PcaResult canon_pca_skew(const PointCloud& x) {
    auto aligned = pca_align(x);
    auto fixed = canon_skewness_sign(aligned.cloud);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        if (fixed.signs[k] < 0) {
            for (std::size_t r = 0; r < x.dim(); ++r) {
                aligned.frame(r, k) = -aligned.frame(r, k);
            }
        }
    }
    aligned.cloud = std::move(fixed.cloud);
    return aligned;
}

/**
 * @brief All 2^d row-sign variants of a cloud.
 *
 * Element s negates row r iff bit r of s is set, so element 0 is the input.
 */
inline std::vector<PointCloud> sign_orbit(const PointCloud& x) {
    if (x.dim() > 20) {
        throw SizeError("sign_orbit: d=" + std::to_string(x.dim()) + " exceeds 20");
    }
    const std::size_t count = std::size_t{1} << x.dim();
    std::vector<PointCloud> out;
    out.reserve(count);
    std::vector<int> signs(x.dim());
    for (std::size_t s = 0; s < count; ++s) {
        for (std::size_t r = 0; r < x.dim(); ++r) {
            signs[r] = ((s >> r) & 1u) ? -1 : 1;
        }
        out.push_back(apply_signs(x, signs));
    }
    return out;
}

} // namespace symcover

#endif // SYMCOVER_CANONIZE_HPP
