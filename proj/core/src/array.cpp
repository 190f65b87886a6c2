#include "moa/array.hpp"

#include <numeric>

#include "moa/error.hpp"

namespace moa {

MoaArray::MoaArray() : data_(1, 0.0) {}

MoaArray::MoaArray(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<index_t>(data_.size()) != shape_.element_count()) {
        throw ShapeError("array of shape " + to_string(shape_) + " needs " + std::to_string(shape_.element_count()) +
                         " elements, got " + std::to_string(data_.size()));
    }
}

MoaArray MoaArray::filled(Shape shape, double value) {
    const auto count = static_cast<std::size_t>(shape.element_count());
    return MoaArray(std::move(shape), std::vector<double>(count, value));
}

MoaArray MoaArray::iota(Shape shape) {
    std::vector<double> data(static_cast<std::size_t>(shape.element_count()));
    std::iota(data.begin(), data.end(), 0.0);
    return MoaArray(std::move(shape), std::move(data));
}

MoaArray MoaArray::scalar(double value) { return MoaArray(Shape{}, {value}); }

double MoaArray::at(const IndexVector& idx) const {
    return data_[static_cast<std::size_t>(row_major_offset(idx, shape_))];
}

MoaArray psi_select(const IndexVector& idx, const MoaArray& a) {
    check_index(idx, a.shape(), false);
    if (idx.size() == 0) {
        return a;
    }
    Shape result_shape = a.shape().drop_first(idx.size());
    if (result_shape.element_count() == 0) {
        return MoaArray(std::move(result_shape), {});
    }
    const auto strides = a.shape().strides();
    index_t start = 0;
    for (index_t k = 0; k < idx.size(); ++k) {
        start += idx.components[static_cast<std::size_t>(k)] * strides[static_cast<std::size_t>(k)];
    }
    const auto first = a.data().begin() + start;
    return MoaArray(result_shape, std::vector<double>(first, first + result_shape.element_count()));
}

MoaArray reshape(const MoaArray& a, Shape shape) {
    if (shape.element_count() != a.shape().element_count()) {
        throw ShapeError("cannot reshape " + to_string(a.shape()) + " (" + std::to_string(a.shape().element_count()) +
                         " elements) to " + to_string(shape) + " (" + std::to_string(shape.element_count()) +
                         " elements)");
    }
    return MoaArray(std::move(shape), std::vector<double>(a.data().begin(), a.data().end()));
}

} // namespace moa
