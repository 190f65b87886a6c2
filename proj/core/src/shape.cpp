#include "moa/shape.hpp"

#include <ostream>
#include <sstream>

#include "moa/error.hpp"

namespace moa {

index_t checked_mul(index_t lhs, index_t rhs) {
    index_t out = 0;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw ShapeError("index arithmetic overflow: " + std::to_string(lhs) + " * " + std::to_string(rhs));
    }
    return out;
}

Shape::Shape(std::initializer_list<index_t> extents) : Shape(std::vector<index_t>(extents)) {}

Shape::Shape(std::vector<index_t> extents) : extents_(std::move(extents)) {
    // A zero extent makes the count 0 regardless of overflow in the others,
    // but the shape is still rejected if its non-zero extents overflow so that
    // strides stay representable.
    index_t nonzero = 1;
    bool empty = false;
    for (std::size_t k = 0; k < extents_.size(); ++k) {
        if (extents_[k] < 0) {
            throw ShapeError("negative extent " + std::to_string(extents_[k]) + " on axis " + std::to_string(k));
        }
        if (extents_[k] == 0) {
            empty = true;
        } else {
            nonzero = checked_mul(nonzero, extents_[k]);
        }
    }
    count_ = empty ? 0 : nonzero;
}

index_t Shape::extent(index_t axis) const {
    if (axis < 0 || axis >= rank()) {
        throw BoundsError("axis " + std::to_string(axis) + " out of range for shape " + to_string(*this));
    }
    return extents_[static_cast<std::size_t>(axis)];
}

std::vector<index_t> Shape::strides() const {
    std::vector<index_t> out(extents_.size(), 1);
    index_t running = 1;
    for (std::size_t k = extents_.size(); k-- > 0;) {
        out[k] = running;
        running *= extents_[k] == 0 ? 1 : extents_[k];
    }
    return out;
}

Shape Shape::drop_first(index_t k) const {
    if (k < 0 || k > rank()) {
        throw RankError("cannot drop " + std::to_string(k) + " leading axes from " + to_string(*this));
    }
    return Shape(std::vector<index_t>(extents_.begin() + k, extents_.end()));
}

Shape Shape::drop_last(index_t k) const {
    if (k < 0 || k > rank()) {
        throw RankError("cannot drop " + std::to_string(k) + " trailing axes from " + to_string(*this));
    }
    return Shape(std::vector<index_t>(extents_.begin(), extents_.end() - k));
}

Shape Shape::concat(const Shape& other) const {
    std::vector<index_t> out(extents_);
    out.insert(out.end(), other.extents_.begin(), other.extents_.end());
    return Shape(std::move(out));
}

void check_index(const IndexVector& idx, const Shape& shape, bool require_full_rank) {
    if (idx.size() > shape.rank()) {
        throw BoundsError("index " + to_string(idx) + " has " + std::to_string(idx.size()) +
                          " components but shape " + to_string(shape) + " has rank " + std::to_string(shape.rank()));
    }
    if (require_full_rank && idx.size() != shape.rank()) {
        throw BoundsError("index " + to_string(idx) + " is not full rank for shape " + to_string(shape));
    }
    for (index_t k = 0; k < idx.size(); ++k) {
        const index_t c = idx.components[static_cast<std::size_t>(k)];
        if (c < 0 || c >= shape.extent(k)) {
            throw BoundsError("index component " + std::to_string(c) + " out of bounds on axis " + std::to_string(k) +
                              " (extent " + std::to_string(shape.extent(k)) + ")");
        }
    }
}

index_t row_major_offset(const IndexVector& idx, const Shape& shape) {
    check_index(idx, shape, true);
    const auto strides = shape.strides();
    index_t offset = 0;
    for (std::size_t k = 0; k < strides.size(); ++k) {
        offset += idx.components[k] * strides[k];
    }
    return offset;
}

namespace {

std::string bracketed(std::span<const index_t> values) {
    std::ostringstream os;
    os << '<';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k != 0) {
            os << ' ';
        }
        os << values[k];
    }
    os << '>';
    return os.str();
}

} // namespace

std::string to_string(const Shape& shape) { return bracketed(shape.extents()); }
std::string to_string(const IndexVector& idx) { return bracketed(idx.components); }

std::ostream& operator<<(std::ostream& os, const Shape& shape) { return os << to_string(shape); }

} // namespace moa
