#include "symtutte/families.hpp"

#include "symtutte/error.hpp"

namespace symtutte {
namespace {

RepEquation eq(std::vector<long> coeffs, long rhs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return RepEquation(std::move(c), Rational(rhs));
}

std::vector<Family> make_families() {
    return {
        {"weyl-a", "x_i - x_j = 0 (braid arrangement A_{n-1})", 2, {eq({1, -1}, 0)}},
        {"catalan", "x_i - x_j in {-1, 0, 1}", 2, {eq({1, -1}, 0), eq({1, -1}, 1)}},
        {"shi-threshold", "x_i + x_j in {0, 1}", 2, {eq({1, 1}, 0), eq({1, 1}, 1)}},
        {"i-arrangement", "x_i in {0, 1} and x_i + x_j = 1", 2, {eq({1}, 0), eq({1}, 1), eq({1, 1}, 1)}},
    };
}

}  // namespace

Arrangement Family::build(std::size_t n) const {
    if (n < min_n) {
        throw InvalidArgument("families", name + " is defined for n >= " + std::to_string(min_n));
    }
    return symmetric_arrangement(n, representatives);
}

const std::vector<Family>& builtin_families() {
    static const std::vector<Family> families = make_families();
    return families;
}

const Family& family_by_name(std::string_view name) {
    for (const auto& f : builtin_families()) {
        if (f.name == name) return f;
    }
    throw InvalidArgument("families", "unknown family '" + std::string(name) + "'");
}

}  // namespace symtutte
