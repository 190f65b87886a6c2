#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace moa {

/// Signed 64-bit index type used for extents, indices and flat offsets.
/// Signed so that negative input can be detected and rejected.
using index_t = std::int64_t;
static_assert(sizeof(index_t) * 8 >= 64);

/// Multiply two non-negative indices, throwing ShapeError on overflow.
index_t checked_mul(index_t lhs, index_t rhs);

/// The shape (rho) of an array: an ordered list of non-negative extents.
///
/// Rank 0 is a scalar with one element. A zero extent anywhere gives an
/// empty array.
class Shape {
  public:
    Shape() = default;
    Shape(std::initializer_list<index_t> extents);
    explicit Shape(std::vector<index_t> extents);

    [[nodiscard]] index_t rank() const noexcept { return static_cast<index_t>(extents_.size()); }
    [[nodiscard]] index_t extent(index_t axis) const;
    [[nodiscard]] std::span<const index_t> extents() const noexcept { return extents_; }

    /// Product of the extents, 1 for rank 0. Cached at construction.
    [[nodiscard]] index_t element_count() const noexcept { return count_; }

    /// Row-major strides: stride[k] is the product of the extents after k.
    [[nodiscard]] std::vector<index_t> strides() const;

    [[nodiscard]] Shape drop_first(index_t k = 1) const;
    [[nodiscard]] Shape drop_last(index_t k = 1) const;
    [[nodiscard]] Shape concat(const Shape& other) const;

    friend bool operator==(const Shape&, const Shape&) = default;

  private:
    std::vector<index_t> extents_;
    index_t count_ = 1;
};

/// Free-function form of Shape::element_count.
inline index_t element_count(const Shape& shape) noexcept { return shape.element_count(); }

/// An index vector into an array; may be shorter than the rank (partial index).
struct IndexVector {
    std::vector<index_t> components;

    IndexVector() = default;
    IndexVector(std::initializer_list<index_t> c) : components(c) {}
    explicit IndexVector(std::vector<index_t> c) : components(std::move(c)) {}

    [[nodiscard]] index_t size() const noexcept { return static_cast<index_t>(components.size()); }
    friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

/// Row-major flat offset of a full-rank index. Throws BoundsError naming the
/// offending axis when the index is out of range or has the wrong length.
index_t row_major_offset(const IndexVector& idx, const Shape& shape);

/// Checks that idx is a valid (possibly partial) index into shape.
void check_index(const IndexVector& idx, const Shape& shape, bool require_full_rank);

/// "<2 3>" notation, used in error messages and printing.
std::string to_string(const Shape& shape);
std::string to_string(const IndexVector& idx);
std::ostream& operator<<(std::ostream& os, const Shape& shape);

} // namespace moa
