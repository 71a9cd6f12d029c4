#ifndef SYMCOVER_POINT_CLOUD_HPP
#define SYMCOVER_POINT_CLOUD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * @file point_cloud.hpp
 *
 * @brief Point-cloud matrix type and the error hierarchy shared by all modules.
 */

namespace symcover {

/**
 * @brief Base class for every error raised by the library.
 */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad shape, out-of-range value, malformed text).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Problem size exceeds what an exhaustive routine supports.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Covariance spectrum has (nearly) repeated eigenvalues, so the PCA frame is not unique.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// A hypothesis required by a bound formula is not met.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Some test item has no eligible training item with the same label.
class LabelCoverageError : public Error {
public:
    using Error::Error;
};

/// A computed quantity violates an invariant it must satisfy by construction.
class InternalError : public Error {
public:
    using Error::Error;
};

/**
 * @brief A d-by-n real matrix whose columns are points.
 *
 * Storage is column-major, so the coordinates of one point are contiguous.
 * An optional non-negative class label travels with the cloud.
 */
class PointCloud {
public:
    PointCloud() = default;

    PointCloud(std::size_t dim, std::size_t npoints, double fill = 0.0)
        : dim_(dim), npoints_(npoints), values_(dim * npoints, fill) {
        check_shape();
    }

    /**
     * @param dim Number of rows (coordinates per point).
     * @param npoints Number of columns (points).
     * @param values Column-major values of length `dim * npoints`.
     */
    PointCloud(std::size_t dim, std::size_t npoints, std::vector<double> values)
        : dim_(dim), npoints_(npoints), values_(std::move(values)) {
        check_shape();
        if (values_.size() != dim_ * npoints_) {
            throw DomainError("point cloud: expected " + std::to_string(dim_ * npoints_) + " values, got " +
                              std::to_string(values_.size()));
        }
    }

    /// Builds a cloud from row vectors, i.e. `rows[r][j]` is coordinate r of point j.
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty() || rows.front().empty()) {
            throw DomainError("point cloud: need at least one row and one column");
        }
        const std::size_t d = rows.size();
        const std::size_t n = rows.front().size();
        PointCloud out(d, n);
        for (std::size_t r = 0; r < d; ++r) {
            if (rows[r].size() != n) {
                throw DomainError("point cloud: ragged rows");
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(r, j) = rows[r][j];
            }
        }
        return out;
    }

    /// Builds a d=1 cloud from a vector of scalars.
    static PointCloud from_vector(const std::vector<double>& x) {
        return PointCloud(1, x.size(), x);
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return npoints_; }

    double& operator()(std::size_t row, std::size_t col) { return values_[col * dim_ + row]; }
    double operator()(std::size_t row, std::size_t col) const { return values_[col * dim_ + row]; }

    std::span<double> column(std::size_t col) { return {values_.data() + col * dim_, dim_}; }
    std::span<const double> column(std::size_t col) const { return {values_.data() + col * dim_, dim_}; }

    std::vector<double> row(std::size_t r) const {
        std::vector<double> out(npoints_);
        for (std::size_t j = 0; j < npoints_; ++j) {
            out[j] = (*this)(r, j);
        }
        return out;
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    const std::optional<std::uint64_t>& label() const { return label_; }
    void set_label(std::optional<std::uint64_t> label) { label_ = label; }

    bool same_shape(const PointCloud& other) const { return dim_ == other.dim_ && npoints_ == other.npoints_; }

    /// True when every entry lies in [0, 1].
    bool in_unit_cube() const {
        for (double v : values_) {
            if (!(v >= 0.0 && v <= 1.0)) {
                return false;
            }
        }
        return true;
    }

    /// Coordinates are compared exactly; labels are ignored.
    friend bool operator==(const PointCloud& a, const PointCloud& b) {
        return a.dim_ == b.dim_ && a.npoints_ == b.npoints_ && a.values_ == b.values_;
    }

private:
    void check_shape() const {
        if (dim_ == 0 || npoints_ == 0) {
            throw DomainError("point cloud: dimension and point count must be at least 1");
        }
    }

    std::size_t dim_ = 0;
    std::size_t npoints_ = 0;
    std::vector<double> values_;
    std::optional<std::uint64_t> label_;
};

inline void require_same_shape(const PointCloud& x, const PointCloud& y, const char* what) {
    if (!x.same_shape(y)) {
        throw DomainError(std::string(what) + ": shape mismatch (" + std::to_string(x.dim()) + "x" +
                          std::to_string(x.size()) + " vs " + std::to_string(y.dim()) + "x" +
                          std::to_string(y.size()) + ")");
    }
}

/// Column permutation: output column j is input column `perm[j]`.
inline PointCloud permute_columns(const PointCloud& x, std::span<const std::size_t> perm) {
    if (perm.size() != x.size()) {
        throw DomainError("permute_columns: permutation length does not match point count");
    }
    PointCloud out(x.dim(), x.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        auto src = x.column(perm[j]);
        auto dst = out.column(j);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    out.set_label(x.label());
    return out;
}

/// Negates row r wherever `signs[r] < 0`.
inline PointCloud apply_signs(const PointCloud& x, std::span<const int> signs) {
    if (signs.size() != x.dim()) {
        throw DomainError("apply_signs: sign vector length does not match dimension");
    }
    PointCloud out = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t r = 0; r < x.dim(); ++r) {
            if (signs[r] < 0) {
                out(r, j) = -x(r, j);
            }
        }
    }
    return out;
}

/// Subtracts `shift` from every column.
inline PointCloud apply_shift(const PointCloud& x, std::span<const double> shift) {
    if (shift.size() != x.dim()) {
        throw DomainError("apply_shift: shift length does not match dimension");
    }
    PointCloud out = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t r = 0; r < x.dim(); ++r) {
            out(r, j) = x(r, j) - shift[r];
        }
    }
    return out;
}

} // namespace symcover

#endif // SYMCOVER_POINT_CLOUD_HPP
