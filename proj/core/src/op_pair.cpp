#include "moa/op_pair.hpp"

#include "moa/error.hpp"

namespace moa {

double OpPair::combine_values(double a, double b) const noexcept {
    switch (combine) {
    case Combine::Add:
        return ops::Add{}(a, b);
    case Combine::Subtract:
        return ops::Subtract{}(a, b);
    case Combine::Multiply:
        return ops::Multiply{}(a, b);
    case Combine::Divide:
        return ops::Divide{}(a, b);
    case Combine::Min:
        return ops::Min{}(a, b);
    case Combine::Max:
        return ops::Max{}(a, b);
    }
    return ops::Multiply{}(a, b);
}

double OpPair::reduce_values(double acc, double x) const noexcept {
    switch (reduce) {
    case Reduce::Add:
        return ops::Add{}(acc, x);
    case Reduce::Multiply:
        return ops::Multiply{}(acc, x);
    case Reduce::Min:
        return ops::Min{}(acc, x);
    case Reduce::Max:
        return ops::Max{}(acc, x);
    }
    return ops::Add{}(acc, x);
}

std::string_view to_string(Combine c) noexcept {
    switch (c) {
    case Combine::Add:
        return "add";
    case Combine::Subtract:
        return "sub";
    case Combine::Multiply:
        return "mul";
    case Combine::Divide:
        return "div";
    case Combine::Min:
        return "min";
    case Combine::Max:
        return "max";
    }
    return "?";
}

std::string_view to_string(Reduce r) noexcept {
    switch (r) {
    case Reduce::Add:
        return "add";
    case Reduce::Multiply:
        return "mul";
    case Reduce::Min:
        return "min";
    case Reduce::Max:
        return "max";
    }
    return "?";
}

std::string to_string(const OpPair& pair) {
    return "(" + std::string(to_string(pair.combine)) + "," + std::string(to_string(pair.reduce)) + ")";
}

Combine parse_combine(std::string_view name) {
    if (name == "add") return Combine::Add;
    if (name == "sub" || name == "subtract") return Combine::Subtract;
    if (name == "mul" || name == "multiply") return Combine::Multiply;
    if (name == "div" || name == "divide") return Combine::Divide;
    if (name == "min") return Combine::Min;
    if (name == "max") return Combine::Max;
    throw ArgumentError("unknown combine operation '" + std::string(name) + "'");
}

Reduce parse_reduce(std::string_view name) {
    if (name == "add") return Reduce::Add;
    if (name == "mul" || name == "multiply") return Reduce::Multiply;
    if (name == "min") return Reduce::Min;
    if (name == "max") return Reduce::Max;
    throw ArgumentError("unknown reduce operation '" + std::string(name) + "'");
}

} // namespace moa
