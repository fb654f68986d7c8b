#pragma once

// Reconstructs cb_A(q, t) and chi_A(q) as polynomials in q from their values
// at several primes. Lagrange interpolation in exact arithmetic; every
// interpolated coefficient must come out integral.

#include "symtutte/arrangement.hpp"
#include "symtutte/poly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symtutte {

struct PrimeSample {
    std::uint32_t q = 0;
    TPoly value;
};

struct CountSample {
    std::uint32_t q = 0;
    Integer value;
};

/// Lagrange interpolation through (x_i, y_i); degree < points.size().
CharPoly lagrange(std::span<const std::pair<Rational, Rational>> points);

/// Interpolates each t-coefficient as a polynomial of degree <= rank in q.
/// Throws InvalidArgument (too few or repeated primes) or IntegrityAlarm
/// (degree above rank, non-integral coefficient, sample not reproduced).
CoboundaryPoly interpolate_coboundary(std::span<const PrimeSample> samples, std::size_t rank);

/// Interpolates a monic degree-n integer polynomial through point counts.
CharPoly interpolate_characteristic(std::span<const CountSample> samples, std::size_t n);

enum class PointEngine {
    FiniteField,
    ClosedForm,
};

struct InterpolationOptions {
    /// Empty: the smallest certified primes >= 5, as many as needed.
    std::vector<std::uint32_t> primes;
    /// Additional primes beyond the minimum, as an over-determination check.
    std::size_t extra_primes = 0;
    unsigned threads = 1;
    PointEngine engine = PointEngine::FiniteField;
    bool certify = true;  // applies to caller-supplied primes only
};

CoboundaryPoly recover_coboundary(const Arrangement& a, const InterpolationOptions& options = {});
CharPoly recover_characteristic(const Arrangement& a, const InterpolationOptions& options = {});

}  // namespace symtutte
