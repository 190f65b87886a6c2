#pragma once

#include <vector>

#include "moa/kernel.hpp"

namespace moa {

/// Round-robin ownership of result rows: worker k owns every row i with
/// i % workers == k.
struct PartitionSpec {
    index_t workers = 1;

    /// Throws ArgumentError unless workers >= 1.
    explicit PartitionSpec(index_t w);

    [[nodiscard]] index_t owner(index_t row) const noexcept { return row % workers; }
    [[nodiscard]] std::vector<index_t> rows_owned_by(index_t worker, index_t noproc) const;
    /// Workers that own at least one of noproc rows.
    [[nodiscard]] index_t active_workers(index_t noproc) const noexcept {
        return noproc < workers ? noproc : workers;
    }
};

/// Fork-join execution of plan across `workers` threads.
///
/// Each worker runs the sequential (i, l, j) loop nest restricted to the
/// rows it owns, so every row is reduced in the same order as in
/// execute_sequential and the result is bitwise identical. Workers without
/// rows are not started. Throws ArgumentError when workers < 1.
MoaArray execute_parallel(const KernelPlan& plan, const MoaArray& a, const MoaArray& b, const OpPair& ops,
                          index_t workers);

} // namespace moa
