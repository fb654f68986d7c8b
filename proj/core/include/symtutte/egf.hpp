#pragma once

// Exponential generating functions sum u_n z^n / n! truncated at a fixed order,
// with coefficients in Q[t], and the factorization of multinomial sums over
// blocks of disjoint indices into products of per-block EGFs.

#include "symtutte/families.hpp"
#include "symtutte/poly.hpp"
#include "symtutte/symmetric_engine.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace symtutte {

/// Coefficients u_0..u_N (the numerators of z^n / n!).
class TruncatedEGF {
public:
    explicit TruncatedEGF(std::size_t order) : coeffs_(order + 1) {}
    explicit TruncatedEGF(std::vector<TPoly> coeffs);

    /// 1
    static TruncatedEGF one(std::size_t order);
    /// exp(z): every u_n = 1.
    static TruncatedEGF exponential(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const TPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    TPoly& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<TPoly>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

    std::string to_string() const;

private:
    std::vector<TPoly> coeffs_;
};

/// Binomial convolution: w_n = sum_k C(n, k) u_k v_(n-k). Throws InvalidArgument
/// on an order mismatch.
TruncatedEGF egf_mul(const TruncatedEGF& u, const TruncatedEGF& v);
TruncatedEGF egf_pow(const TruncatedEGF& u, std::size_t k);

/// A group of `parts` indices with a weight p(a_1, ..., a_parts) in Q[t].
struct ConvolutionBlock {
    std::size_t parts = 1;
    std::function<TPoly(std::span<const unsigned>)> weight;
};

using DirectTerm = std::function<TPoly(std::span<const unsigned>)>;

/// v_n = sum over compositions a of n into block.parts parts of multinomial(n; a) p(a).
TruncatedEGF block_series(const ConvolutionBlock& block, std::size_t order);

/// u_n = sum over compositions of n into all the blocks' parts (concatenated) of
/// multinomial(n; a) * term(a). With no term, the product of the block weights.
TruncatedEGF direct_series(std::span<const ConvolutionBlock> blocks, std::size_t order, const DirectTerm& term = {});

/// True iff the direct multinomial sum equals the product of the block series up to `order`.
bool generalized_convolution_check(std::span<const ConvolutionBlock> blocks, std::size_t order,
                                   const DirectTerm& term = {});

/// The block of an indice partition as a convolution block over its support residues.
ConvolutionBlock indice_block(const IndicePartition::Block& block);

/// Product over the partition's blocks, times exp(z) for each residue in no block.
/// Its n-th coefficient is the composition sum of the closed form at n.
TruncatedEGF partition_egf(const IndicePartition& partition, std::size_t order);

struct EgfOptions {
    /// Require q to reduce A_n correctly for every n in [min_n, order].
    bool certify = true;
};

/// Raw u(z) for a family at prime q; for certified n >= min_n,
/// u_n = q^(n - r(A_n)) cb_{A_n}(q, t). Throws CertificationError when
/// options.certify and some A_n is not certified.
TruncatedEGF family_egf(const Family& family, std::uint32_t q, std::size_t order, const EgfOptions& options = {});

}  // namespace symtutte
