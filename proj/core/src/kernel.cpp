#include "moa/kernel.hpp"

#include <ostream>
#include <sstream>

#include "moa/error.hpp"

namespace moa {

std::ostream& operator<<(std::ostream& os, const KernelPlan& plan) {
    return os << (plan.mode == ProductMode::Inner ? "inner" : "outer") << " plan -> " << plan.result_shape
              << " noproc=" << plan.noproc << " rowsinred=" << plan.rowsinred << " elsinop=" << plan.elsinop
              << " lstride=" << plan.lstride << " rstride=" << plan.rstride << " restride=" << plan.restride;
}

KernelPlan plan_inner(const Shape& a, const Shape& b) {
    if (a.rank() == 0 || b.rank() == 0) {
        throw RankError("inner product needs operands of rank >= 1, got " + to_string(a) + " and " + to_string(b));
    }
    const index_t contracted_a = a.extent(a.rank() - 1);
    const index_t contracted_b = b.extent(0);
    if (contracted_a != contracted_b) {
        throw ShapeError("inner product contraction mismatch: last extent of A is " + std::to_string(contracted_a) +
                         ", first extent of B is " + std::to_string(contracted_b));
    }
    const Shape free_a = a.drop_last();
    const Shape free_b = b.drop_first();

    KernelPlan plan;
    plan.mode = ProductMode::Inner;
    plan.result_shape = free_a.concat(free_b);
    plan.noproc = free_a.element_count();
    plan.rowsinred = contracted_a;
    plan.elsinop = free_b.element_count();
    plan.lstride = plan.rowsinred;
    plan.rstride = plan.elsinop;
    plan.restride = plan.elsinop;
    checked_mul(plan.noproc, plan.elsinop);
    return plan;
}

KernelPlan plan_outer(const Shape& a, const Shape& b) {
    KernelPlan plan;
    plan.mode = ProductMode::Outer;
    plan.result_shape = a.concat(b);
    plan.noproc = a.element_count();
    plan.rowsinred = 1;
    plan.elsinop = b.element_count();
    plan.lstride = 1;
    plan.rstride = plan.elsinop;
    plan.restride = plan.elsinop;
    checked_mul(plan.noproc, plan.elsinop);
    return plan;
}

KernelPlan plan_product(ProductMode mode, const Shape& a, const Shape& b) {
    return mode == ProductMode::Inner ? plan_inner(a, b) : plan_outer(a, b);
}

void validate_plan(const KernelPlan& plan, const MoaArray& a, const MoaArray& b) {
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "kernel plan inconsistent with operands " << a.shape() << ", " << b.shape() << ": " << what << " ["
           << plan << "]";
        throw ConsistencyError(os.str());
    };
    if (plan.noproc < 0 || plan.rowsinred < 0 || plan.elsinop < 0 || plan.lstride < 0 || plan.rstride < 0 ||
        plan.restride < 0) {
        fail("negative loop bound or stride");
    }
    if (a.size() != checked_mul(plan.noproc, plan.lstride)) {
        fail("A holds " + std::to_string(a.size()) + " elements, plan expects noproc*lstride");
    }
    if (b.size() != checked_mul(plan.rowsinred, plan.rstride)) {
        fail("B holds " + std::to_string(b.size()) + " elements, plan expects rowsinred*rstride");
    }
    if (plan.result_shape.element_count() != checked_mul(plan.noproc, plan.restride)) {
        fail("result shape does not hold noproc*restride elements");
    }
    if (plan.noproc > 0 && plan.rowsinred > plan.lstride) {
        fail("rowsinred exceeds lstride");
    }
    if (plan.rowsinred > 0 && plan.elsinop > plan.rstride) {
        fail("elsinop exceeds rstride");
    }
    if (plan.noproc > 0 && plan.elsinop > plan.restride) {
        fail("elsinop exceeds restride");
    }
}

MoaArray execute_sequential(const KernelPlan& plan, const MoaArray& a, const MoaArray& b, const OpPair& ops) {
    return visit_ops(ops, [&](auto combine, auto reduce) {
        return execute_sequential(plan, a, b, combine, reduce, ops.reduce_identity());
    });
}

MoaArray inner_product(const MoaArray& a, const MoaArray& b, const OpPair& ops) {
    return execute_sequential(plan_inner(a.shape(), b.shape()), a, b, ops);
}

MoaArray outer_product(const MoaArray& a, const MoaArray& b, const OpPair& ops) {
    return execute_sequential(plan_outer(a.shape(), b.shape()), a, b, ops);
}

} // namespace moa
