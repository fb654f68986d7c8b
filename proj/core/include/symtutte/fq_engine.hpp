#pragma once

// Finite-field point counting: for a prime q that reduces A correctly,
//   q^(n - r(A)) * cb_A(q, t) = sum over y in F_q^n of t^h(y),
// where h(y) is the number of reduced hyperplanes containing y.

#include "symtutte/arrangement.hpp"
#include "symtutte/poly.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symtutte {

struct IntegerHyperplane {
    std::vector<Integer> coeffs;
    Integer rhs;

    std::string to_string() const;
    friend bool operator==(const IntegerHyperplane&, const IntegerHyperplane&) = default;
};

struct IntegerArrangement {
    std::size_t dim = 0;
    std::vector<IntegerHyperplane> hyperplanes;
};

/// Scales every hyperplane to coprime integer coefficients (same hyperplanes).
IntegerArrangement clear_denominators(const Arrangement& a);

bool is_prime(std::uint64_t q);

/// A point of F_q^n.
struct FqPoint {
    std::vector<std::uint32_t> coords;
    std::uint32_t q = 0;
};

/// The arrangement reduced modulo a prime q, with duplicates removed.
class ReducedArrangement {
public:
    /// Throws InvalidArgument if q is not prime.
    ReducedArrangement(const IntegerArrangement& source, std::uint32_t q);

    std::uint32_t modulus() const noexcept { return q_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return count_; }
    std::size_t source_size() const noexcept { return source_size_; }
    /// Row i as (a_1, ..., a_n, b) mod q.
    std::span<const std::uint32_t> row(std::size_t i) const {
        return {rows_.data() + i * (dim_ + 1), dim_ + 1};
    }
    /// No collisions and no hyperplane whose normal vanishes mod q.
    bool faithful() const noexcept { return count_ == source_size_ && !degenerate_; }

private:
    std::uint32_t q_;
    std::size_t dim_;
    std::size_t count_ = 0;
    std::size_t source_size_ = 0;
    bool degenerate_ = false;
    std::vector<std::uint32_t> rows_;
};

/// Number of reduced hyperplanes containing y. Throws InvalidArgument on a modulus
/// or dimension mismatch.
unsigned h_count(const ReducedArrangement& reduced, const FqPoint& y);

struct CertificationReport {
    bool certified = false;
    std::string reason;
    /// Indices of hyperplanes whose rank or centrality changes mod q (empty when certified).
    std::vector<std::size_t> witness;
};

/// Decides whether q reduces A correctly: the reduction has no collisions, and
/// every subset has the same coefficient rank and augmented rank over Q and over
/// F_q. The check walks only rationally independent row sets, which is
/// equivalent to checking all subsets. Throws InvalidArgument if q is not prime.
CertificationReport certify(const Arrangement& a, std::uint32_t q);
bool certify_prime(const Arrangement& a, std::uint32_t q);

/// The `count` smallest primes >= start that certify for A.
std::vector<std::uint32_t> certified_primes(const Arrangement& a, std::size_t count, std::uint32_t start = 5);

struct FqOptions {
    unsigned threads = 1;
    /// When false the prime is used as given (the result is then only the
    /// reduced arrangement's point count, which may differ from cb_A).
    bool certify = true;
};

/// hist[k] = number of points of F_q^n lying on exactly k reduced hyperplanes.
std::vector<Integer> h_histogram(const ReducedArrangement& reduced, unsigned threads = 1);

/// sum_y t^h(y)
TPoly point_count_polynomial(const Arrangement& a, std::uint32_t q, const FqOptions& options = {});

/// Divides a point-count polynomial by q^codim. Throws IntegrityAlarm when the
/// division is not exact.
TPoly coboundary_from_point_count(const TPoly& counts, std::uint32_t q, std::size_t codim);

/// cb_A(q, t) for this prime. Throws CertificationError for an uncertified prime
/// (unless options.certify is false) and IntegrityAlarm on non-exact division.
TPoly coboundary_at_prime(const Arrangement& a, std::uint32_t q, const FqOptions& options = {});

/// chi_A(q) = |F_q^n minus the reduced arrangement|.
Integer characteristic_at_prime(const Arrangement& a, std::uint32_t q, const FqOptions& options = {});

}  // namespace symtutte
