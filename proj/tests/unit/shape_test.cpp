#include <gtest/gtest.h>

#include <set>

#include "moa/error.hpp"
#include "moa/shape.hpp"
#include "test_support.hpp"

namespace moa {
namespace {

// Enumerates every full index of `shape` in row-major order by nested
// counting, independent of the stride formula.
std::vector<IndexVector> enumerate_row_major(const Shape& shape) {
    std::vector<IndexVector> out;
    if (shape.element_count() == 0) {
        return out;
    }
    std::vector<index_t> idx(static_cast<std::size_t>(shape.rank()), 0);
    while (true) {
        out.emplace_back(idx);
        index_t axis = shape.rank() - 1;
        while (axis >= 0) {
            auto& c = idx[static_cast<std::size_t>(axis)];
            if (++c < shape.extent(axis)) {
                break;
            }
            c = 0;
            --axis;
        }
        if (axis < 0) {
            return out;
        }
    }
}

TEST(Shape, ElementCount) {
    EXPECT_EQ(element_count(Shape{2, 3}), 6);
    EXPECT_EQ(element_count(Shape{}), 1);
    EXPECT_EQ(element_count(Shape{4, 0, 7}), 0);
    EXPECT_EQ(Shape{}.rank(), 0);
}

TEST(Shape, RejectsNegativeExtent) {
    EXPECT_THROW(Shape({2, -1}), ShapeError);
}

TEST(Shape, RejectsOverflowingCount) {
    const index_t big = index_t{1} << 40;
    EXPECT_THROW(Shape({big, big}), ShapeError);
    // A zero extent does not excuse overflow in the rest.
    EXPECT_THROW(Shape({big, 0, big}), ShapeError);
}

TEST(Shape, StridesAndSlicing) {
    const Shape s{2, 3, 4};
    EXPECT_EQ(s.strides(), (std::vector<index_t>{12, 4, 1}));
    EXPECT_EQ(s.drop_first(), (Shape{3, 4}));
    EXPECT_EQ(s.drop_last(), (Shape{2, 3}));
    EXPECT_EQ(s.drop_first(3), Shape{});
    EXPECT_EQ((Shape{2}).concat(Shape{3, 4}), s);
    EXPECT_THROW(s.drop_first(4), RankError);
    EXPECT_EQ(to_string(s), "<2 3 4>");
}

TEST(RowMajorOffset, Examples) {
    EXPECT_EQ(row_major_offset({0, 0}, Shape{2, 3}), 0);
    EXPECT_EQ(row_major_offset({1, 2}, Shape{2, 3}), 5);

    // Position of <1 0 2> in the brute-force enumeration of <2 3 4>.
    const auto all = enumerate_row_major(Shape{2, 3, 4});
    const auto it = std::find(all.begin(), all.end(), IndexVector{1, 0, 2});
    ASSERT_NE(it, all.end());
    const auto position = static_cast<index_t>(it - all.begin());
    EXPECT_EQ(position, 14);
    EXPECT_EQ(row_major_offset({1, 0, 2}, Shape{2, 3, 4}), 14);
}

TEST(RowMajorOffset, ScalarHasOffsetZero) { EXPECT_EQ(row_major_offset({}, Shape{}), 0); }

TEST(RowMajorOffset, ErrorsNameTheAxis) {
    try {
        row_major_offset({1, 3}, Shape{2, 3});
        FAIL() << "expected BoundsError";
    } catch (const BoundsError& e) {
        EXPECT_NE(std::string(e.what()).find("axis 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(row_major_offset({1}, Shape{2, 3}), BoundsError);
    EXPECT_THROW(row_major_offset({0, 0, 0}, Shape{2, 3}), BoundsError);
    EXPECT_THROW(row_major_offset({-1, 0}, Shape{2, 3}), BoundsError);
}

TEST(RowMajorOffset, BijectionOntoFlatRange) {
    testing::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Shape s = testing::random_shape(rng, 0, 4, 0, 5);
        const auto all = enumerate_row_major(s);
        ASSERT_EQ(static_cast<index_t>(all.size()), s.element_count());
        std::set<index_t> seen;
        for (std::size_t pos = 0; pos < all.size(); ++pos) {
            const index_t off = row_major_offset(all[pos], s);
            ASSERT_GE(off, 0);
            ASSERT_LT(off, s.element_count());
            EXPECT_EQ(off, static_cast<index_t>(pos));
            seen.insert(off);
        }
        EXPECT_EQ(static_cast<index_t>(seen.size()), s.element_count());
    }
}

} // namespace
} // namespace moa
