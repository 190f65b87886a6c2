#include "moa/oracle.hpp"

#include "moa/error.hpp"

namespace moa::oracle {

bool next_index(IndexVector& idx, const Shape& shape) {
    for (index_t k = shape.rank(); k-- > 0;) {
        auto& c = idx.components[static_cast<std::size_t>(k)];
        if (c + 1 < shape.extent(k)) {
            ++c;
            return true;
        }
        c = 0;
    }
    return false;
}

namespace {

IndexVector concat(const IndexVector& lhs, const IndexVector& rhs) {
    IndexVector out = lhs;
    out.components.insert(out.components.end(), rhs.components.begin(), rhs.components.end());
    return out;
}

IndexVector zeros(index_t rank) { return IndexVector(std::vector<index_t>(static_cast<std::size_t>(rank), 0)); }

// Calls fn(idx) for every index of shape in row-major order.
template <typename Fn>
void for_each_index(const Shape& shape, Fn&& fn) {
    if (shape.element_count() == 0) {
        return;
    }
    IndexVector idx = zeros(shape.rank());
    do {
        fn(idx);
    } while (next_index(idx, shape));
}

} // namespace

MoaArray inner(const MoaArray& a, const MoaArray& b, const OpPair& ops) {
    if (a.rank() == 0 || b.rank() == 0) {
        throw RankError("oracle inner product needs operands of rank >= 1");
    }
    const index_t contraction = a.shape().extent(a.rank() - 1);
    if (contraction != b.shape().extent(0)) {
        throw ShapeError("oracle inner product contraction mismatch: " + std::to_string(contraction) + " vs " +
                         std::to_string(b.shape().extent(0)));
    }
    const Shape free_a = a.shape().drop_last();
    const Shape free_b = b.shape().drop_first();
    const Shape result_shape = free_a.concat(free_b);

    std::vector<double> out(static_cast<std::size_t>(result_shape.element_count()));
    for_each_index(free_a, [&](const IndexVector& u) {
        for_each_index(free_b, [&](const IndexVector& v) {
            double acc = ops.reduce_identity();
            for (index_t p = 0; p < contraction; ++p) {
                const double lhs = a.at(concat(u, IndexVector{p}));
                const double rhs = b.at(concat(IndexVector{p}, v));
                acc = ops.reduce_values(acc, ops.combine_values(lhs, rhs));
            }
            out[static_cast<std::size_t>(row_major_offset(concat(u, v), result_shape))] = acc;
        });
    });
    return MoaArray(result_shape, std::move(out));
}

MoaArray outer(const MoaArray& a, const MoaArray& b, const OpPair& ops) {
    const Shape result_shape = a.shape().concat(b.shape());
    std::vector<double> out(static_cast<std::size_t>(result_shape.element_count()));
    for_each_index(a.shape(), [&](const IndexVector& u) {
        for_each_index(b.shape(), [&](const IndexVector& v) {
            out[static_cast<std::size_t>(row_major_offset(concat(u, v), result_shape))] =
                ops.combine_values(a.at(u), b.at(v));
        });
    });
    return MoaArray(result_shape, std::move(out));
}

} // namespace moa::oracle
