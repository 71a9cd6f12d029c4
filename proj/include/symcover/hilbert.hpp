#ifndef SYMCOVER_HILBERT_HPP
#define SYMCOVER_HILBERT_HPP

#include "point_cloud.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

/**
 * @file hilbert.hpp
 *
 * @brief Order-m Hilbert curve in d dimensions as a bijection between curve
 * indices in [0, 2^{dm}) and cells of the 2^m x ... x 2^m grid.
 *
 * The construction is Skilling's transpose form: the index is held as d
 * interleaved m-bit words, converted to axes by a Gray decode followed by
 * per-level exchanges and inversions. This orientation satisfies adjacency
 * (consecutive indices are L1-neighbours) and nesting (cell of index k' at
 * order m+1 lies inside the cell of k'>>d at order m).
 */

namespace symcover::hilbert {

/// Curve dimension and order.
struct Params {
    unsigned dim = 2;
    unsigned order = 1;

    Params() = default;
    Params(unsigned d, unsigned m) : dim(d), order(m) { validate(); }

    void validate() const {
        if (dim < 1 || order < 1) {
            throw DomainError("hilbert: dimension and order must be at least 1");
        }
        if (static_cast<unsigned long>(dim) * order > 62) {
            throw DomainError("hilbert: d*m = " + std::to_string(dim * order) + " exceeds the 62-bit index limit");
        }
    }

    std::uint64_t side() const { return std::uint64_t{1} << order; }
    std::uint64_t num_cells() const { return std::uint64_t{1} << (dim * order); }
};

using Cell = std::vector<std::uint64_t>;
using Index = std::uint64_t;

namespace detail {

inline void check_cell(const Params& p, std::span<const std::uint64_t> cell) {
    if (cell.size() != p.dim) {
        throw DomainError("hilbert: cell has " + std::to_string(cell.size()) + " coordinates, expected " +
                          std::to_string(p.dim));
    }
    for (auto c : cell) {
        if (c >= p.side()) {
            throw DomainError("hilbert: cell coordinate " + std::to_string(c) + " outside [0, " +
                              std::to_string(p.side()) + ")");
        }
    }
}

// In place: axes -> transposed index.
inline void axes_to_transpose(std::span<std::uint64_t> x, unsigned bits) {
    const std::size_t n = x.size();
    const std::uint64_t top = std::uint64_t{1} << (bits - 1);

    for (std::uint64_t q = top; q > 1; q >>= 1) {
        const std::uint64_t p = q - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] & q) {
                x[0] ^= p; // invert
            } else {
                const std::uint64_t t = (x[0] ^ x[i]) & p; // exchange
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }

    // Gray encode
    for (std::size_t i = 1; i < n; ++i) {
        x[i] ^= x[i - 1];
    }
    std::uint64_t t = 0;
    for (std::uint64_t q = top; q > 1; q >>= 1) {
        if (x[n - 1] & q) {
            t ^= q - 1;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        x[i] ^= t;
    }
}

// In place: transposed index -> axes.
inline void transpose_to_axes(std::span<std::uint64_t> x, unsigned bits) {
    const std::size_t n = x.size();
    const std::uint64_t limit = std::uint64_t{2} << (bits - 1);

    // Gray decode
    std::uint64_t t = x[n - 1] >> 1;
    for (std::size_t i = n - 1; i > 0; --i) {
        x[i] ^= x[i - 1];
    }
    x[0] ^= t;

    for (std::uint64_t q = 2; q != limit; q <<= 1) {
        const std::uint64_t p = q - 1;
        for (std::size_t i = n - 1; i > 0; --i) {
            if (x[i] & q) {
                x[0] ^= p;
            } else {
                t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
        if (x[0] & q) {
            x[0] ^= p;
        }
    }
}

} // namespace detail

/// Curve position of a grid cell.
inline Index encode(const Params& p, std::span<const std::uint64_t> cell) {
    detail::check_cell(p, cell);
    if (p.dim == 1) {
        return cell[0];
    }
    Cell x(cell.begin(), cell.end());
    detail::axes_to_transpose(x, p.order);

    // Interleave: the most significant bit of x[0] is the index's top bit.
    Index h = 0;
    for (int bit = static_cast<int>(p.order) - 1; bit >= 0; --bit) {
        for (unsigned i = 0; i < p.dim; ++i) {
            h = (h << 1) | ((x[i] >> bit) & 1u);
        }
    }
    return h;
}

/// Grid cell at a curve position.
inline Cell decode(const Params& p, Index index) {
    if (index >= p.num_cells()) {
        throw DomainError("hilbert: index " + std::to_string(index) + " outside [0, " +
                          std::to_string(p.num_cells()) + ")");
    }
    if (p.dim == 1) {
        return Cell{index};
    }
    Cell x(p.dim, 0);
    unsigned shift = p.dim * p.order;
    for (int bit = static_cast<int>(p.order) - 1; bit >= 0; --bit) {
        for (unsigned i = 0; i < p.dim; ++i) {
            --shift;
            x[i] |= ((index >> shift) & 1u) << bit;
        }
    }
    detail::transpose_to_axes(x, p.order);
    return x;
}

/**
 * @brief Cell containing a point of [0,1]^d.
 *
 * Intervals are half-open except the last, which is closed, so a coordinate
 * equal to 1 lands in cell 2^m - 1.
 */
inline Cell cell_of(const Params& p, std::span<const double> point) {
    if (point.size() != p.dim) {
        throw DomainError("hilbert: point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(p.dim));
    }
    const double scale = std::ldexp(1.0, static_cast<int>(p.order));
    Cell out(p.dim);
    for (unsigned i = 0; i < p.dim; ++i) {
        const double x = point[i];
        if (!(x >= 0.0 && x <= 1.0)) {
            throw DomainError("hilbert: coordinate " + std::to_string(x) + " outside [0, 1]");
        }
        // x * 2^m is exact (power-of-two scaling), so floor is exact too.
        auto c = static_cast<std::uint64_t>(std::floor(x * scale));
        out[i] = c >= p.side() ? p.side() - 1 : c;
    }
    return out;
}

/// Centroid of a grid cell: (2c + 1) / 2^{m+1} per coordinate.
inline std::vector<double> centroid(const Params& p, std::span<const std::uint64_t> cell) {
    detail::check_cell(p, cell);
    const double denom = std::ldexp(1.0, static_cast<int>(p.order) + 1);
    std::vector<double> out(p.dim);
    for (unsigned i = 0; i < p.dim; ++i) {
        out[i] = (2.0 * static_cast<double>(cell[i]) + 1.0) / denom;
    }
    return out;
}

/// Centroid of curve interval k in [0,1]: (2k + 1) / 2^{dm+1}.
inline double interval_centroid(const Params& p, Index index) {
    if (index >= p.num_cells()) {
        throw DomainError("hilbert: index outside range");
    }
    return (2.0 * static_cast<double>(index) + 1.0) / std::ldexp(1.0, static_cast<int>(p.dim * p.order) + 1);
}

/// Curve position of the cell containing a point.
inline Index index_of(const Params& p, std::span<const double> point) {
    const Cell c = cell_of(p, point);
    return encode(p, c);
}

} // namespace symcover::hilbert

#endif // SYMCOVER_HILBERT_HPP
