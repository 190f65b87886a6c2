#include <gtest/gtest.h>

#include "moa/error.hpp"
#include "moa/oracle.hpp"
#include "test_support.hpp"

namespace moa {
namespace {

TEST(OracleNextIndex, EnumeratesRowMajor) {
    const Shape s{2, 3};
    IndexVector idx{0, 0};
    std::vector<IndexVector> seen{idx};
    while (oracle::next_index(idx, s)) {
        seen.push_back(idx);
    }
    ASSERT_EQ(seen.size(), 6u);
    EXPECT_EQ(seen[4], (IndexVector{1, 1}));
    EXPECT_EQ(idx, (IndexVector{0, 0}));

    IndexVector scalar;
    EXPECT_FALSE(oracle::next_index(scalar, Shape{}));
}

TEST(OracleInner, MatrixExample) {
    const MoaArray d = oracle::inner(testing::example_a(), testing::example_b());
    EXPECT_EQ(d, MoaArray(Shape{2, 4}, {32, 38, 44, 50, 68, 83, 98, 113}));
}

TEST(OracleInner, EmptyContraction) {
    const OpPair ops{Combine::Add, Reduce::Max};
    const MoaArray d = oracle::inner(MoaArray::filled(Shape{3, 0}, 0), MoaArray::filled(Shape{0, 2}, 0), ops);
    EXPECT_EQ(d, MoaArray::filled(Shape{3, 2}, ops.reduce_identity()));
}

TEST(OracleInner, Singleton) {
    const OpPair ops{Combine::Subtract, Reduce::Multiply};
    const MoaArray d = oracle::inner(MoaArray(Shape{1, 1}, {7}), MoaArray(Shape{1, 1}, {2}), ops);
    EXPECT_EQ(d, MoaArray(Shape{1, 1}, {ops.reduce_values(ops.reduce_identity(), 5.0)}));
}

TEST(OracleInner, Errors) {
    EXPECT_THROW(oracle::inner(MoaArray::scalar(1), MoaArray::iota(Shape{1})), RankError);
    EXPECT_THROW(oracle::inner(MoaArray::iota(Shape{2}), MoaArray::iota(Shape{3})), ShapeError);
}

TEST(OracleInner, AgreesWithTextbookMatmul) {
    testing::Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const index_t m = testing::uniform_int(rng, 1, 8);
        const index_t k = testing::uniform_int(rng, 1, 8);
        const index_t n = testing::uniform_int(rng, 1, 8);
        const MoaArray a = testing::random_array(rng, Shape{m, k});
        const MoaArray b = testing::random_array(rng, Shape{k, n});
        const auto want = testing::textbook_matmul({a.data().begin(), a.data().end()},
                                                   {b.data().begin(), b.data().end()}, m, k, n);
        EXPECT_FALSE(testing::compare_arrays(oracle::inner(a, b), MoaArray(Shape{m, n}, want), 1e-12));
    }
}

TEST(OracleOuter, Examples) {
    EXPECT_EQ(oracle::outer(MoaArray(Shape{2}, {1, 2}), MoaArray(Shape{2}, {10, 20})),
              MoaArray(Shape{2, 2}, {10, 20, 20, 40}));
    const OpPair sub{Combine::Subtract, Reduce::Add};
    EXPECT_EQ(oracle::outer(MoaArray::scalar(5), MoaArray::scalar(3), sub), MoaArray::scalar(2));
}

TEST(OracleOuter, SubtractSelfVanishesOnDiagonal) {
    const OpPair sub{Combine::Subtract, Reduce::Add};
    const MoaArray a = MoaArray(Shape{2, 3}, {0.5, -1, 3, 7, 2.25, 9});
    const MoaArray c = oracle::outer(a, a, sub);
    ASSERT_EQ(c.shape(), (Shape{2, 3, 2, 3}));
    for (index_t i = 0; i < 2; ++i) {
        for (index_t j = 0; j < 3; ++j) {
            EXPECT_EQ(c.at({i, j, i, j}), 0.0);
        }
    }
}

} // namespace
} // namespace moa
