#include "moa/parallel.hpp"

#include <thread>

#include "moa/error.hpp"

namespace moa {

PartitionSpec::PartitionSpec(index_t w) : workers(w) {
    if (w < 1) {
        throw ArgumentError("worker count must be >= 1, got " + std::to_string(w));
    }
}

std::vector<index_t> PartitionSpec::rows_owned_by(index_t worker, index_t noproc) const {
    std::vector<index_t> rows;
    for (index_t i = worker; i < noproc; i += workers) {
        rows.push_back(i);
    }
    return rows;
}

MoaArray execute_parallel(const KernelPlan& plan, const MoaArray& a, const MoaArray& b, const OpPair& ops,
                          index_t workers) {
    const PartitionSpec partition(workers);
    validate_plan(plan, a, b);

    std::vector<double> out(static_cast<std::size_t>(plan.result_shape.element_count()), ops.reduce_identity());
    const index_t active = partition.active_workers(plan.noproc);

    visit_ops(ops, [&](auto combine, auto reduce) {
        auto run_worker = [&, combine, reduce](index_t k) {
            detail::accumulate_rows(plan.noproc, plan.rowsinred, plan.elsinop, plan.lstride, plan.rstride,
                                    plan.restride, a.data(), b.data(), std::span<double>(out), k,
                                    partition.workers, combine, reduce);
        };
        {
            std::vector<std::jthread> pool;
            pool.reserve(static_cast<std::size_t>(active > 0 ? active - 1 : 0));
            for (index_t k = 1; k < active; ++k) {
                pool.emplace_back(run_worker, k);
            }
            if (active > 0) {
                run_worker(0);
            }
        } // join
    });
    return MoaArray(plan.result_shape, std::move(out));
}

} // namespace moa
