#pragma once

#include <span>
#include <vector>

#include "moa/shape.hpp"

namespace moa {

/// A shape plus its elements, stored flat in row-major order.
///
/// Arrays are values: nothing mutates one after construction, so sharing
/// across threads for reading is safe.
class MoaArray {
  public:
    /// A rank-0 array holding 0.0.
    MoaArray();
    /// Throws ShapeError when data.size() differs from the element count.
    MoaArray(Shape shape, std::vector<double> data);

    static MoaArray filled(Shape shape, double value);
    /// Elements 0, 1, 2, ... in row-major order.
    static MoaArray iota(Shape shape);
    static MoaArray scalar(double value);

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] index_t rank() const noexcept { return shape_.rank(); }
    [[nodiscard]] index_t size() const noexcept { return static_cast<index_t>(data_.size()); }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    /// Element at a full-rank index.
    [[nodiscard]] double at(const IndexVector& idx) const;
    /// Element at a flat row-major offset.
    [[nodiscard]] double flat(index_t offset) const { return data_.at(static_cast<std::size_t>(offset)); }

    friend bool operator==(const MoaArray&, const MoaArray&) = default;

  private:
    Shape shape_;
    std::vector<double> data_;
};

/// psi selection: `idx psi a`.
///
/// The result drops the first idx.size() axes of a and holds the contiguous
/// slice of a's data that those leading components address. A full-rank idx
/// yields a rank-0 scalar and an empty idx returns a unchanged. Over-long
/// indices are rejected, not truncated.
MoaArray psi_select(const IndexVector& idx, const MoaArray& a);

/// Same data, new shape. Throws ShapeError reporting both element counts.
MoaArray reshape(const MoaArray& a, Shape shape);

} // namespace moa
