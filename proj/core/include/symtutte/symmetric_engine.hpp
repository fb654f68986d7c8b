#pragma once

// Closed-form coboundary polynomial of a symmetric arrangement, computed from
// its representative equations. For a prime q that reduces A correctly,
//
//   cb_A(q, t) = q^(r(A) - n) * sum over weak compositions a of n into q parts of
//                multinomial(n; a) * t^( sum_x prod_{k in S(x)} C(a_k, o_k(x)) ),
//
// where x runs over the canonical solutions mod q of every representative
// equation, S(x) is the set of residues in x and o_k(x) counts residue k in x.

#include "symtutte/arrangement.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/poly.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symtutte {

/// a_1 x_1 + ... + a_j x_j = b with every a_i nonzero: one S_n-orbit of hyperplanes.
class RepEquation {
public:
    /// Throws InvalidArgument if a coefficient is zero or there are none.
    RepEquation(std::vector<Rational> coeffs, Rational rhs);
    /// Relabels the support of h onto x_1..x_j.
    static RepEquation from_hyperplane(const Hyperplane& h);

    std::size_t arity() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& rhs() const noexcept { return rhs_; }

    /// The hyperplane in R^n (n >= arity) on the first arity() variables.
    Hyperplane hyperplane(std::size_t n) const;
    std::string to_string() const { return hyperplane(arity()).to_string(); }

    friend bool operator==(const RepEquation&, const RepEquation&) = default;

private:
    std::vector<Rational> coeffs_;
    Rational rhs_;
};

/// Permutations pi of the arity() positions with pi . E the same hyperplane as E.
class Stabilizer {
public:
    /// Computes the group and verifies it contains the identity and is closed.
    static Stabilizer of(const RepEquation& e);

    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(const Permutation& p) const;

private:
    std::vector<Permutation> elements_;
};

struct CanonicalSolution {
    std::size_t equation = 0;
    /// Lexicographically least member of its stabilizer orbit.
    std::vector<std::uint32_t> tuple;
    /// S(x): distinct residues, increasing.
    std::vector<std::uint32_t> support;
    /// (k, o_k(x)) for k in S(x).
    std::vector<std::pair<std::uint32_t, unsigned>> occurrences;
    /// Number of ordered solutions in the stabilizer orbit.
    std::size_t orbit_size = 0;

    std::string to_string() const;
};

struct IndicePartition {
    struct Block {
        std::vector<std::uint32_t> support;
        std::vector<CanonicalSolution> members;
    };
    std::uint32_t q = 0;
    /// Ordered by smallest residue of the block support.
    std::vector<Block> blocks;

    /// Residues in no block support.
    std::vector<std::uint32_t> free_residues() const;
};

/// Splits a symmetric arrangement into S_n-orbits and returns one representative
/// equation per orbit, sorted by (arity, coefficients, rhs). Throws
/// InvalidArgument if some orbit is only partly present.
std::vector<RepEquation> extract_representatives(const Arrangement& a);

/// The union of the S_n-orbits of the representatives, in R^n.
Arrangement symmetric_arrangement(std::size_t n, std::span<const RepEquation> representatives);

/// Solutions of E mod q up to the stabilizer. Throws CertificationError if a
/// coefficient vanishes mod q or a denominator is not invertible.
std::vector<CanonicalSolution> solutions_mod_q(const RepEquation& e, std::uint32_t q, std::size_t equation_index = 0);

/// Number of ordered solutions of E in F_q^arity, by direct enumeration.
std::size_t raw_solution_count(const RepEquation& e, std::uint32_t q);

/// Throws Unsupported unless every canonical solution x has exactly prod_k o_k(x)!
/// stabilizer elements fixing it, the condition under which the binomial
/// counting of hyperplanes through a point is exact.
void require_binomial_counting(const RepEquation& e, const Stabilizer& stabilizer,
                               std::span<const CanonicalSolution> solutions);

/// h(y) from the solution sets: sum_x prod_{k in S(x)} C(|A_k(y)|, o_k(x)),
/// with A_k(y) = {i : y_i = k}.
std::uint64_t h_symbolic(std::span<const CanonicalSolution> solutions, const FqPoint& y);

/// Connected components of the solutions under "supports share a residue".
IndicePartition indice_partition(std::vector<CanonicalSolution> solutions, std::uint32_t q);

/// Exponent of t for one composition of n, i.e. sum over solutions of
/// prod_k C(a_k, o_k(x)).
std::uint64_t composition_exponent(const IndicePartition& partition, std::span<const unsigned> parts);

/// sum over weak compositions a of n into q parts of multinomial(n; a) t^exponent(a).
/// For a correctly reducing prime this is q^(n - r(A)) cb_A(q, t).
TPoly composition_sum(const IndicePartition& partition, std::size_t n, unsigned threads = 1);

/// Everything the closed form needs at one prime.
struct SymmetricAnalysis {
    std::uint32_t q = 0;
    std::vector<RepEquation> representatives;
    std::vector<Stabilizer> stabilizers;
    std::vector<CanonicalSolution> solutions;
    IndicePartition partition;
};

/// Builds the solution data for the given representatives and checks the
/// binomial counting condition for each.
SymmetricAnalysis analyze_representatives(std::vector<RepEquation> representatives, std::uint32_t q);

struct ClosedFormOptions {
    unsigned threads = 1;
    bool certify = true;
};

/// cb_A(q, t) by the closed form. Throws InvalidArgument (not symmetric),
/// CertificationError (bad prime), Unsupported (binomial counting fails) or
/// IntegrityAlarm (non-exact division by q^(n - r)).
TPoly coboundary_closed_form(const Arrangement& a, std::uint32_t q, const ClosedFormOptions& options = {});

}  // namespace symtutte
