#ifndef SYMCOVER_JACOBI_HPP
#define SYMCOVER_JACOBI_HPP

#include "point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <cstddef>
#include <vector>

namespace symcover {

/// Dense row-major square matrix, only as much as the eigensolver needs.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size, double fill = 0.0) : n(size), a(size * size, fill) {}

    static SquareMatrix identity(std::size_t size) {
        SquareMatrix out(size);
        for (std::size_t i = 0; i < size; ++i) {
            out(i, i) = 1.0;
        }
        return out;
    }

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct EigenDecomposition {
    std::vector<double> values;  ///< unsorted, in the order of the columns of `vectors`
    SquareMatrix vectors;        ///< column k is the unit eigenvector for values[k]
    int sweeps = 0;
};

/**
 * @brief Cyclic Jacobi eigensolver for small symmetric matrices.
 *
 * Sweeps over all (p,q) pairs, annihilating each off-diagonal entry with a
 * plane rotation, until the off-diagonal Frobenius mass drops below
 * `tol * max(1, |S|_F)`.
 */
inline EigenDecomposition jacobi_eigen(SquareMatrix s, double tol = 1e-12, int max_sweeps = 100) {
    const std::size_t n = s.n;
    EigenDecomposition out;
    out.vectors = SquareMatrix::identity(n);

    auto off_mass = [&]() {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    sum += s(i, j) * s(i, j);
                }
            }
        }
        return std::sqrt(sum);
    };

    double scale = 0.0;
    for (double v : s.a) {
        scale += v * v;
    }
    tol *= std::max(1.0, std::sqrt(scale));

    while (out.sweeps < max_sweeps && off_mass() > tol) {
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s(k, p);
                    const double skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s(p, k);
                    const double sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = out.vectors(k, p);
                    const double vkq = out.vectors(k, q);
                    out.vectors(k, p) = c * vkp - sn * vkq;
                    out.vectors(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
    if (off_mass() > tol) {
        throw InternalError("jacobi: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    }

    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = s(i, i);
    }
    return out;
}

} // namespace symcover

#endif // SYMCOVER_JACOBI_HPP
