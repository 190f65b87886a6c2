#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace moa {

/// Element-combine operations (the generalized "*").
enum class Combine { Add, Subtract, Multiply, Divide, Min, Max };

/// Reduction operations (the generalized "+"), each associative with an identity.
enum class Reduce { Add, Multiply, Min, Max };

// Operation functors. The kernel instantiates its loop nest on these so the
// inner loop sees a direct call; the oracle goes through OpPair::combine_values
// and OpPair::reduce_values instead.
//
// min/max are written so that `op(identity, x) == x` also holds for NaN x.
namespace ops {
struct Add {
    double operator()(double a, double b) const noexcept { return a + b; }
};
struct Subtract {
    double operator()(double a, double b) const noexcept { return a - b; }
};
struct Multiply {
    double operator()(double a, double b) const noexcept { return a * b; }
};
struct Divide {
    double operator()(double a, double b) const noexcept { return a / b; }
};
struct Min {
    double operator()(double a, double b) const noexcept { return a < b ? a : b; }
};
struct Max {
    double operator()(double a, double b) const noexcept { return a > b ? a : b; }
};
} // namespace ops

/// A combine operation plus a reduce operation with its identity element.
/// The default is the ordinary (multiply, add, 0) inner product.
struct OpPair {
    Combine combine = Combine::Multiply;
    Reduce reduce = Reduce::Add;

    [[nodiscard]] constexpr double reduce_identity() const noexcept {
        switch (reduce) {
        case Reduce::Add:
            return 0.0;
        case Reduce::Multiply:
            return 1.0;
        case Reduce::Min:
            return std::numeric_limits<double>::infinity();
        case Reduce::Max:
            return -std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }

    [[nodiscard]] double combine_values(double a, double b) const noexcept;
    [[nodiscard]] double reduce_values(double acc, double x) const noexcept;

    friend bool operator==(const OpPair&, const OpPair&) = default;
};

inline constexpr Combine all_combines[] = {Combine::Add, Combine::Subtract, Combine::Multiply,
                                           Combine::Divide, Combine::Min, Combine::Max};
inline constexpr Reduce all_reduces[] = {Reduce::Add, Reduce::Multiply, Reduce::Min, Reduce::Max};

std::string_view to_string(Combine c) noexcept;
std::string_view to_string(Reduce r) noexcept;
std::string to_string(const OpPair& ops);

/// Accepts "add", "sub", "mul", "div", "min", "max" (and long forms
/// "subtract", "multiply", "divide"); throws ArgumentError otherwise.
Combine parse_combine(std::string_view name);
/// Accepts "add", "mul", "min", "max" (and "multiply").
Reduce parse_reduce(std::string_view name);

/// Calls fn(combine_functor, reduce_functor) with the functors selected by ops.
template <typename Fn>
decltype(auto) visit_ops(const OpPair& pair, Fn&& fn) {
    auto with_reduce = [&](auto combine) -> decltype(auto) {
        switch (pair.reduce) {
        case Reduce::Multiply:
            return fn(combine, ops::Multiply{});
        case Reduce::Min:
            return fn(combine, ops::Min{});
        case Reduce::Max:
            return fn(combine, ops::Max{});
        case Reduce::Add:
        default:
            return fn(combine, ops::Add{});
        }
    };
    switch (pair.combine) {
    case Combine::Add:
        return with_reduce(ops::Add{});
    case Combine::Subtract:
        return with_reduce(ops::Subtract{});
    case Combine::Divide:
        return with_reduce(ops::Divide{});
    case Combine::Min:
        return with_reduce(ops::Min{});
    case Combine::Max:
        return with_reduce(ops::Max{});
    case Combine::Multiply:
    default:
        return with_reduce(ops::Multiply{});
    }
}

} // namespace moa
