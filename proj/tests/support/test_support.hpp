#pragma once

// Shared generators and comparisons for the unit and acceptance suites.
// Nothing here calls into the kernel: helpers are written against array-core
// only so they can serve as independent checks.

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moa/array.hpp"
#include "moa/op_pair.hpp"

namespace moa::testing {

using Rng = std::mt19937_64;

inline index_t uniform_int(Rng& rng, index_t lo, index_t hi) {
    return std::uniform_int_distribution<index_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Shape random_shape(Rng& rng, index_t min_rank, index_t max_rank, index_t min_extent, index_t max_extent) {
    const index_t rank = uniform_int(rng, min_rank, max_rank);
    std::vector<index_t> extents(static_cast<std::size_t>(rank));
    for (auto& e : extents) {
        e = uniform_int(rng, min_extent, max_extent);
    }
    return Shape(std::move(extents));
}

inline MoaArray random_array(Rng& rng, Shape shape, double lo = -2.0, double hi = 2.0) {
    std::vector<double> data(static_cast<std::size_t>(shape.element_count()));
    for (auto& x : data) {
        x = uniform_real(rng, lo, hi);
    }
    return MoaArray(std::move(shape), std::move(data));
}

/// Shape with `first` prepended.
inline Shape with_leading(index_t first, const Shape& rest) { return Shape{first}.concat(rest); }

/// A pair of shapes valid for an inner product: ranks in [1, max_rank],
/// extents in [min_extent, max_extent], A's last extent equal to B's first.
inline std::pair<Shape, Shape> random_inner_shapes(Rng& rng, index_t max_rank, index_t min_extent,
                                                   index_t max_extent) {
    const index_t contraction = uniform_int(rng, min_extent, max_extent);
    const Shape a_free = random_shape(rng, 0, max_rank - 1, min_extent, max_extent);
    const Shape b_free = random_shape(rng, 0, max_rank - 1, min_extent, max_extent);
    return {a_free.concat(Shape{contraction}), with_leading(contraction, b_free)};
}

inline std::vector<OpPair> all_op_pairs() {
    std::vector<OpPair> out;
    for (const Combine c : all_combines) {
        for (const Reduce r : all_reduces) {
            out.push_back(OpPair{c, r});
        }
    }
    return out;
}

inline bool same_bits(double x, double y) noexcept {
    return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
}

/// |x - y| <= tol * max(|x|, |y|); equal infinities and NaN pairs match.
inline bool relative_close(double x, double y, double tol) noexcept {
    if (std::isnan(x) || std::isnan(y)) {
        return std::isnan(x) && std::isnan(y);
    }
    if (x == y) {
        return true;
    }
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

/// Empty when the arrays agree (same shape; elements relatively close, or
/// bitwise equal when tol < 0). Otherwise a description of the first mismatch.
inline std::optional<std::string> compare_arrays(const MoaArray& got, const MoaArray& want, double tol) {
    if (got.shape() != want.shape()) {
        return "shape " + to_string(got.shape()) + " != " + to_string(want.shape());
    }
    for (index_t k = 0; k < got.size(); ++k) {
        const double x = got.flat(k);
        const double y = want.flat(k);
        const bool ok = tol < 0 ? same_bits(x, y) : relative_close(x, y, tol);
        if (!ok) {
            std::ostringstream os;
            os.precision(17);
            os << "element " << k << ": " << x << " vs " << y;
            return os.str();
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> compare_bitwise(const MoaArray& got, const MoaArray& want) {
    return compare_arrays(got, want, -1.0);
}

/// Textbook i-j-p triple loop on row-major rank-2 data.
inline std::vector<double> textbook_matmul(const std::vector<double>& a, const std::vector<double>& b, index_t m,
                                           index_t k, index_t n) {
    std::vector<double> c(static_cast<std::size_t>(m * n), 0.0);
    for (index_t i = 0; i < m; ++i) {
        for (index_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (index_t p = 0; p < k; ++p) {
                sum += a[static_cast<std::size_t>(i * k + p)] * b[static_cast<std::size_t>(p * n + j)];
            }
            c[static_cast<std::size_t>(i * n + j)] = sum;
        }
    }
    return c;
}

/// A = [[1,2,3],[4,5,6]] and B = 0..11 as a 3x4 matrix.
inline MoaArray example_a() { return MoaArray(Shape{2, 3}, {1, 2, 3, 4, 5, 6}); }
inline MoaArray example_b() { return MoaArray::iota(Shape{3, 4}); }

} // namespace moa::testing
