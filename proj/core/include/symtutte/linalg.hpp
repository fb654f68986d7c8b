#pragma once

#include "symtutte/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symtutte::linalg {

/// Row-echelon basis over the rationals, grown and shrunk one row at a time.
/// Rows are kept fraction-free and primitive (content 1). Entries are int64
/// with overflow detection; the mpz variant is used as a fallback.
template <class Int>
class RationalEchelon {
public:
    explicit RationalEchelon(std::size_t width) : width_(width) {}

    /// Reduces `row` against the basis. If independent, appends it and returns true;
    /// otherwise leaves the basis unchanged and returns false.
    bool insert(std::span<const Int> row);
    void pop();
    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t width() const noexcept { return width_; }
    void clear();

private:
    std::size_t width_;
    std::vector<Int> rows_;  // rank() * width_, row major
    std::vector<std::size_t> pivots_;
    std::vector<Int> scratch_;
};

extern template class RationalEchelon<std::int64_t>;
extern template class RationalEchelon<Integer>;

/// Same contract as RationalEchelon, over the prime field F_p.
class ModularEchelon {
public:
    ModularEchelon(std::size_t width, std::uint32_t p) : width_(width), p_(p) {}

    bool insert(std::span<const std::uint32_t> row);
    void pop();
    std::size_t rank() const noexcept { return pivots_.size(); }
    void clear();

private:
    std::size_t width_;
    std::uint32_t p_;
    std::vector<std::uint32_t> rows_;  // pivot entries normalized to 1
    std::vector<std::size_t> pivots_;
    std::vector<std::uint32_t> scratch_;
};

/// Rank of a rational matrix given as rows.
std::size_t rank(const std::vector<std::vector<Rational>>& rows, std::size_t width);

/// Multiplies by the lcm of denominators and divides by the gcd of numerators:
/// the coprime integer row proportional to the input.
std::vector<Integer> primitive_integer_row(std::span<const Rational> row);

/// True when every entry fits comfortably in int64 (|x| < 2^31) so the fast
/// echelon path is unlikely to overflow.
bool fits_small(std::span<const Integer> row);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace symtutte::linalg
