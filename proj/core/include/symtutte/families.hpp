#pragma once

#include "symtutte/symmetric_engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symtutte {

/// A sequence of symmetric arrangements (A_n)_{n >= min_n} sharing representative equations.
struct Family {
    std::string name;
    std::string description;
    std::size_t min_n = 2;
    std::vector<RepEquation> representatives;

    /// Throws InvalidArgument when n < min_n.
    Arrangement build(std::size_t n) const;
};

/// weyl-a, catalan, shi-threshold, i-arrangement.
const std::vector<Family>& builtin_families();

/// Throws InvalidArgument for an unknown name.
const Family& family_by_name(std::string_view name);

}  // namespace symtutte
