#pragma once

#include <span>

#include "moa/shape.hpp"

namespace moa::detail {

/// The unified product loop nest over the result rows first_row,
/// first_row + row_step, ... < noproc.
///
/// Order is (i, l, j): one element of A's row i is combined with the whole
/// contiguous row l of B and folded into the contiguous result row i.
/// `result` must already hold the reduce identity.
template <typename CombineFn, typename ReduceFn>
void accumulate_rows(index_t noproc, index_t rowsinred, index_t elsinop, index_t lstride, index_t rstride,
                     index_t restride, std::span<const double> lhs, std::span<const double> rhs,
                     std::span<double> result, index_t first_row, index_t row_step, CombineFn combine,
                     ReduceFn reduce) {
    const double* const left = lhs.data();
    const double* const right = rhs.data();
    double* const res = result.data();
    for (index_t i = first_row; i < noproc; i += row_step) {
        double* const out = res + i * restride;
        const double* const lrow = left + i * lstride;
        for (index_t l = 0; l < rowsinred; ++l) {
            const double lval = lrow[l];
            const double* const rrow = right + l * rstride;
            for (index_t j = 0; j < elsinop; ++j) {
                out[j] = reduce(out[j], combine(lval, rrow[j]));
            }
        }
    }
}

} // namespace moa::detail
