#pragma once

#include <vector>

#include "moa/array.hpp"

namespace moa::gemm {

/// Dense column-major matrix: element (i, j) lives at data[i + j * rows].
/// Private layout of the baseline; convert at the boundary with
/// from_row_major / to_row_major.
struct ColMajorMatrix {
    index_t rows = 0;
    index_t cols = 0;
    std::vector<double> data;

    ColMajorMatrix() = default;
    ColMajorMatrix(index_t r, index_t c, double fill = 0.0);

    double& operator()(index_t i, index_t j) noexcept { return data[static_cast<std::size_t>(i + j * rows)]; }
    double operator()(index_t i, index_t j) const noexcept { return data[static_cast<std::size_t>(i + j * rows)]; }

    friend bool operator==(const ColMajorMatrix&, const ColMajorMatrix&) = default;
};

/// Rank-2 MoaArray to column-major; throws RankError for other ranks.
ColMajorMatrix from_row_major(const MoaArray& a);
MoaArray to_row_major(const ColMajorMatrix& m);

/// C = alpha * A * B + beta * C, with C m x n, A m x k, B k x n.
struct GemmParams {
    double alpha = 1.0;
    double beta = 0.0;
    index_t m = 0;
    index_t n = 0;
    index_t k = 0;
    /// Skip column updates where B(L,J) is exactly zero, as the reference
    /// loop does. Turning it off changes only the work done.
    bool skip_zero_b = true;
};

/// The reference dgemm loop nest (J, L, I): per column J, zero or scale C by
/// beta, then for each L with B(L,J) != 0 add alpha*B(L,J)*A(:,L) into C(:,J).
/// Throws ShapeError when operand dimensions disagree with params.
void gemm_baseline(const GemmParams& params, const ColMajorMatrix& a, const ColMajorMatrix& b, ColMajorMatrix& c);

/// Same update with columns J dealt round-robin to `workers` threads
/// (fork-join). Deterministic: each column is computed exactly as in
/// gemm_baseline. Throws ArgumentError when workers < 1.
void gemm_parallel(const GemmParams& params, const ColMajorMatrix& a, const ColMajorMatrix& b, ColMajorMatrix& c,
                   index_t workers);

/// Row-major convenience: returns alpha*A*B for rank-2 A, B (beta = 0).
MoaArray matmul(const MoaArray& a, const MoaArray& b);

} // namespace moa::gemm
