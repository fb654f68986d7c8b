#pragma once

// Identities linking the Tutte, coboundary and characteristic polynomials of
// an arrangement, and the region counts derived from the characteristic one.

#include "symtutte/poly.hpp"

#include <cstddef>

namespace symtutte {

/// T(x, y) = (y - 1)^(-rank) * cb((x - 1)(y - 1), y).
/// Throws IntegrityAlarm if the division by (y - 1)^rank leaves a remainder.
TuttePoly tutte_from_coboundary(const CoboundaryPoly& cb, std::size_t rank);

/// chi(q) = q^(n - rank) * cb(q, 0).
CharPoly characteristic_from_coboundary(const CoboundaryPoly& cb, std::size_t n, std::size_t rank);

/// Number of regions, (-1)^n chi(-1). Throws IntegrityAlarm if negative or non-integral.
Integer regions(const CharPoly& chi, std::size_t n);

/// Number of relatively bounded regions, (-1)^rank chi(1).
Integer bounded_regions(const CharPoly& chi, std::size_t rank);

/// Exact quotient of p by (y - 1)^power, the second variable being y.
/// Throws IntegrityAlarm on a nonzero remainder.
TuttePoly divide_by_second_minus_one(const TuttePoly& p, std::size_t power);

}  // namespace symtutte
