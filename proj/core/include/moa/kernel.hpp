#pragma once

#include <iosfwd>
#include <vector>

#include "moa/array.hpp"
#include "moa/detail/row_loops.hpp"
#include "moa/op_pair.hpp"

namespace moa {

enum class ProductMode { Inner, Outer };

/// Loop bounds and strides for one product invocation.
///
/// Inner mode contracts the last axis of A with the first axis of B. Outer
/// mode is the same loop nest with a contraction length of one.
struct KernelPlan {
    ProductMode mode = ProductMode::Inner;
    Shape result_shape;

    index_t noproc = 0;    ///< result rows: product of A's free extents
    index_t rowsinred = 0; ///< contraction length
    index_t elsinop = 0;   ///< result row length: product of B's free extents
    index_t lstride = 0;   ///< between consecutive rows of flattened A
    index_t rstride = 0;   ///< between consecutive contraction slices of B
    index_t restride = 0;  ///< between consecutive result rows

    friend bool operator==(const KernelPlan&, const KernelPlan&) = default;
};

std::ostream& operator<<(std::ostream& os, const KernelPlan& plan);

/// Plan for the inner product over (last axis of A, first axis of B).
/// Result shape is drop-last(A) ++ drop-first(B).
///
/// Throws RankError for a rank-0 operand and ShapeError when the
/// contracted extents differ.
KernelPlan plan_inner(const Shape& a, const Shape& b);

/// Plan for the outer product; result shape is A ++ B. Any ranks.
KernelPlan plan_outer(const Shape& a, const Shape& b);

KernelPlan plan_product(ProductMode mode, const Shape& a, const Shape& b);

/// Throws ConsistencyError if executing plan on (a, b) could read or write
/// out of range or would not produce plan.result_shape.
void validate_plan(const KernelPlan& plan, const MoaArray& a, const MoaArray& b);

/// Runs the unified loop nest with arbitrary combine/reduce callables.
/// `identity` must be an identity of `reduce`.
template <typename CombineFn, typename ReduceFn>
MoaArray execute_sequential(const KernelPlan& plan, const MoaArray& a, const MoaArray& b, CombineFn combine,
                            ReduceFn reduce, double identity) {
    validate_plan(plan, a, b);
    std::vector<double> out(static_cast<std::size_t>(plan.result_shape.element_count()), identity);
    detail::accumulate_rows(plan.noproc, plan.rowsinred, plan.elsinop, plan.lstride, plan.rstride, plan.restride,
                            a.data(), b.data(), out, 0, 1, combine, reduce);
    return MoaArray(plan.result_shape, std::move(out));
}

/// Sequential execution with one of the built-in operation pairs.
MoaArray execute_sequential(const KernelPlan& plan, const MoaArray& a, const MoaArray& b, const OpPair& ops = {});

/// Convenience wrappers: plan then execute sequentially.
MoaArray inner_product(const MoaArray& a, const MoaArray& b, const OpPair& ops = {});
MoaArray outer_product(const MoaArray& a, const MoaArray& b, const OpPair& ops = {});

} // namespace moa
