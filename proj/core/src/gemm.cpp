#include "moa/gemm.hpp"

#include <thread>

#include "moa/error.hpp"

namespace moa::gemm {

namespace {

std::size_t checked_size(index_t r, index_t c) {
    if (r < 0 || c < 0) {
        throw ShapeError("negative matrix dimension " + std::to_string(r) + "x" + std::to_string(c));
    }
    return static_cast<std::size_t>(checked_mul(r, c));
}

} // namespace

ColMajorMatrix::ColMajorMatrix(index_t r, index_t c, double fill) : rows(r), cols(c), data(checked_size(r, c), fill) {}

ColMajorMatrix from_row_major(const MoaArray& a) {
    if (a.rank() != 2) {
        throw RankError("baseline gemm works on rank-2 arrays, got shape " + to_string(a.shape()));
    }
    const index_t rows = a.shape().extent(0);
    const index_t cols = a.shape().extent(1);
    ColMajorMatrix out(rows, cols);
    const auto src = a.data();
    for (index_t i = 0; i < rows; ++i) {
        for (index_t j = 0; j < cols; ++j) {
            out(i, j) = src[static_cast<std::size_t>(i * cols + j)];
        }
    }
    return out;
}

MoaArray to_row_major(const ColMajorMatrix& m) {
    std::vector<double> data(static_cast<std::size_t>(m.rows * m.cols));
    for (index_t i = 0; i < m.rows; ++i) {
        for (index_t j = 0; j < m.cols; ++j) {
            data[static_cast<std::size_t>(i * m.cols + j)] = m(i, j);
        }
    }
    return MoaArray(Shape{m.rows, m.cols}, std::move(data));
}

namespace {

void check_dims(const GemmParams& p, const ColMajorMatrix& a, const ColMajorMatrix& b, const ColMajorMatrix& c) {
    auto dims = [](const ColMajorMatrix& x) { return std::to_string(x.rows) + "x" + std::to_string(x.cols); };
    if (p.m < 0 || p.n < 0 || p.k < 0) {
        throw ShapeError("gemm dimensions must be non-negative");
    }
    if (a.rows != p.m || a.cols != p.k) {
        throw ShapeError("gemm A is " + dims(a) + ", expected " + std::to_string(p.m) + "x" + std::to_string(p.k));
    }
    if (b.rows != p.k || b.cols != p.n) {
        throw ShapeError("gemm B is " + dims(b) + ", expected " + std::to_string(p.k) + "x" + std::to_string(p.n));
    }
    if (c.rows != p.m || c.cols != p.n) {
        throw ShapeError("gemm C is " + dims(c) + ", expected " + std::to_string(p.m) + "x" + std::to_string(p.n));
    }
}

// Columns first_col, first_col + col_step, ... of the update.
void update_columns(const GemmParams& p, const ColMajorMatrix& a, const ColMajorMatrix& b, ColMajorMatrix& c,
                    index_t first_col, index_t col_step) {
    const index_t m = p.m;
    const double* const a_data = a.data.data();
    for (index_t j = first_col; j < p.n; j += col_step) {
        double* const c_col = c.data.data() + j * m;
        if (p.beta == 0.0) {
            for (index_t i = 0; i < m; ++i) {
                c_col[i] = 0.0;
            }
        } else if (p.beta != 1.0) {
            for (index_t i = 0; i < m; ++i) {
                c_col[i] = p.beta * c_col[i];
            }
        }
        for (index_t l = 0; l < p.k; ++l) {
            const double blj = b(l, j);
            if (!p.skip_zero_b || blj != 0.0) {
                const double temp = p.alpha * blj;
                const double* const a_col = a_data + l * m;
                for (index_t i = 0; i < m; ++i) {
                    c_col[i] = c_col[i] + temp * a_col[i];
                }
            }
        }
    }
}

} // namespace

void gemm_baseline(const GemmParams& params, const ColMajorMatrix& a, const ColMajorMatrix& b, ColMajorMatrix& c) {
    check_dims(params, a, b, c);
    update_columns(params, a, b, c, 0, 1);
}

void gemm_parallel(const GemmParams& params, const ColMajorMatrix& a, const ColMajorMatrix& b, ColMajorMatrix& c,
                   index_t workers) {
    if (workers < 1) {
        throw ArgumentError("worker count must be >= 1, got " + std::to_string(workers));
    }
    check_dims(params, a, b, c);
    const index_t active = params.n < workers ? params.n : workers;
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(active > 0 ? active - 1 : 0));
    for (index_t k = 1; k < active; ++k) {
        pool.emplace_back([&, k] { update_columns(params, a, b, c, k, workers); });
    }
    if (active > 0) {
        update_columns(params, a, b, c, 0, workers);
    }
}

MoaArray matmul(const MoaArray& a, const MoaArray& b) {
    const ColMajorMatrix lhs = from_row_major(a);
    const ColMajorMatrix rhs = from_row_major(b);
    GemmParams params;
    params.m = lhs.rows;
    params.k = lhs.cols;
    params.n = rhs.cols;
    ColMajorMatrix out(params.m, params.n);
    gemm_baseline(params, lhs, rhs, out);
    return to_row_major(out);
}

} // namespace moa::gemm
