#pragma once

#include "symtutte/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symtutte {

/// An affine hyperplane {a_1 x_1 + ... + a_n x_n = b} over the rationals, stored
/// scaled so that the first nonzero coefficient is +1. Two equations that differ
/// by a nonzero factor therefore compare equal.
class Hyperplane {
public:
    /// Throws InvalidArgument when every coefficient is zero.
    static Hyperplane canonical(std::vector<Rational> coeffs, Rational rhs);

    std::size_t dim() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& rhs() const noexcept { return rhs_; }

    /// Positions (0-based) of the nonzero coefficients, increasing.
    std::vector<std::size_t> support() const;

    /// Same hyperplane viewed in R^n for n >= dim(), padding with zero coefficients.
    Hyperplane embedded(std::size_t n) const;

    /// "x_1 - x_2 = 1"
    std::string to_string() const;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend std::strong_ordering operator<=>(const Hyperplane& a, const Hyperplane& b);

private:
    Hyperplane(std::vector<Rational> coeffs, Rational rhs)
        : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {}

    std::vector<Rational> coeffs_;
    Rational rhs_;
};

Hyperplane canonicalize(std::vector<Rational> coeffs, Rational rhs);

/// A permutation of {0, ..., n-1}; perm[i] is the image of i.
class Permutation {
public:
    /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    /// (this * other)(i) = this(other(i))
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// A finite deduplicated set of hyperplanes in R^dim with its cached rank.
class Arrangement {
public:
    /// Duplicates (after canonicalization) are dropped, keeping first occurrences.
    /// Throws InvalidArgument on a dimension mismatch.
    Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);
    explicit Arrangement(std::size_t dim) : Arrangement(dim, {}) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    bool empty() const noexcept { return hyperplanes_.empty(); }
    std::size_t rank() const noexcept { return rank_; }

    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

    /// Coprime integer rows (a_1, ..., a_n, b) proportional to each hyperplane.
    const std::vector<std::vector<Integer>>& integer_rows() const noexcept { return integer_rows_; }

    bool contains(const Hyperplane& h) const;

    /// The image of the whole arrangement under a coordinate permutation, as a sorted list.
    std::vector<Hyperplane> permuted(const Permutation& sigma) const;

    /// Hyperplanes as a sorted list; two arrangements are equal iff these agree.
    std::vector<Hyperplane> sorted() const;

private:
    std::size_t dim_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<std::vector<Integer>> integer_rows_;
    std::size_t rank_ = 0;
};

/// A subset of an arrangement given by strictly increasing indices.
class Subarrangement {
public:
    /// Throws InvalidArgument on out-of-range or non-increasing indices.
    Subarrangement(const Arrangement& parent, std::vector<std::size_t> members);
    static Subarrangement full(const Arrangement& parent);
    static Subarrangement from_mask(const Arrangement& parent, std::uint64_t mask);

    const Arrangement& parent() const noexcept { return *parent_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

private:
    const Arrangement* parent_;
    std::vector<std::size_t> members_;
};

/// sigma . H: coefficient a_i moves onto variable x_{sigma(i)}.
Hyperplane act(const Permutation& sigma, const Hyperplane& h);

/// The S_n-orbit of `h` embedded in R^n, sorted. Enumerates injective placements
/// of the support rather than all of S_n.
std::vector<Hyperplane> orbit(const Hyperplane& h, std::size_t n);

/// Nonempty common intersection. The empty subarrangement is central.
bool is_central(const Subarrangement& b);

/// Rank of the coefficient matrix of `b`. For central b this is n - dim(cap b);
/// for noncentral b it coincides with the largest rank of a central subset,
/// since any linearly independent family of equations is consistent.
std::size_t rank_of(const Subarrangement& b);

}  // namespace symtutte
