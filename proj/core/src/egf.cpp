#include "symtutte/egf.hpp"

#include "symtutte/error.hpp"
#include "symtutte/fq_engine.hpp"

#include <algorithm>

namespace symtutte {
namespace {

constexpr const char* kModule = "egf";

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Calls visit(parts, multinomial) for every weak composition of n into k parts.
template <class Visit>
void for_each_composition(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<unsigned> parts(k, 0);
    auto rec = [&](auto&& self, std::size_t index, std::size_t remaining, const Integer& multinomial) -> void {
        if (index + 1 == k) {
            parts[index] = static_cast<unsigned>(remaining);
            visit(std::span<const unsigned>(parts), multinomial);
            return;
        }
        for (std::size_t a = 0; a <= remaining; ++a) {
            parts[index] = static_cast<unsigned>(a);
            self(self, index + 1, remaining - a, multinomial * Integer(std::to_string(choose(remaining, a))));
        }
    };
    if (k == 0) {
        if (n == 0) visit(std::span<const unsigned>(parts), Integer(1));
        return;
    }
    rec(rec, 0, n, Integer(1));
}

}  // namespace

TruncatedEGF::TruncatedEGF(std::vector<TPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument(kModule, "an EGF needs at least the constant coefficient");
}

TruncatedEGF TruncatedEGF::one(std::size_t order) {
    TruncatedEGF out(order);
    out.coeffs_[0] = TPoly(1);
    return out;
}

TruncatedEGF TruncatedEGF::exponential(std::size_t order) {
    return TruncatedEGF(std::vector<TPoly>(order + 1, TPoly(1)));
}

std::string TruncatedEGF::to_string() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        out += "u_" + std::to_string(n) + " = " + coeffs_[n].to_string() + "\n";
    }
    return out;
}

TruncatedEGF egf_mul(const TruncatedEGF& u, const TruncatedEGF& v) {
    if (u.order() != v.order()) {
        throw InvalidArgument(kModule, "truncation orders differ (" + std::to_string(u.order()) + " vs " +
                                           std::to_string(v.order()) + ")");
    }
    TruncatedEGF out(u.order());
    for (std::size_t n = 0; n <= u.order(); ++n) {
        TPoly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            if (u[k].is_zero() || v[n - k].is_zero()) continue;
            acc += Rational(binomial(n, k)) * (u[k] * v[n - k]);
        }
        out[n] = std::move(acc);
    }
    return out;
}

TruncatedEGF egf_pow(const TruncatedEGF& u, std::size_t k) {
    TruncatedEGF out = TruncatedEGF::one(u.order());
    for (std::size_t i = 0; i < k; ++i) out = egf_mul(out, u);
    return out;
}

TruncatedEGF block_series(const ConvolutionBlock& block, std::size_t order) {
    TruncatedEGF out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        TPoly acc;
        for_each_composition(n, block.parts, [&](std::span<const unsigned> parts, const Integer& multinomial) {
            acc += Rational(multinomial) * block.weight(parts);
        });
        out[n] = std::move(acc);
    }
    return out;
}

TruncatedEGF direct_series(std::span<const ConvolutionBlock> blocks, std::size_t order, const DirectTerm& term) {
    std::size_t total_parts = 0;
    for (const auto& b : blocks) total_parts += b.parts;
    TruncatedEGF out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        TPoly acc;
        for_each_composition(n, total_parts, [&](std::span<const unsigned> parts, const Integer& multinomial) {
            TPoly value;
            if (term) {
                value = term(parts);
            } else {
                value = TPoly(1);
                std::size_t offset = 0;
                for (const auto& b : blocks) {
                    value *= b.weight(parts.subspan(offset, b.parts));
                    offset += b.parts;
                }
            }
            acc += Rational(multinomial) * value;
        });
        out[n] = std::move(acc);
    }
    return out;
}

bool generalized_convolution_check(std::span<const ConvolutionBlock> blocks, std::size_t order,
                                   const DirectTerm& term) {
    TruncatedEGF product = TruncatedEGF::one(order);
    for (const auto& b : blocks) product = egf_mul(product, block_series(b, order));
    return product == direct_series(blocks, order, term);
}

ConvolutionBlock indice_block(const IndicePartition::Block& block) {
    // Map each solution's residues to positions within the block support.
    std::vector<std::vector<std::pair<std::size_t, unsigned>>> local;
    for (const auto& s : block.members) {
        std::vector<std::pair<std::size_t, unsigned>> occ;
        for (const auto& [k, o] : s.occurrences) {
            const auto it = std::lower_bound(block.support.begin(), block.support.end(), k);
            occ.emplace_back(static_cast<std::size_t>(it - block.support.begin()), o);
        }
        local.push_back(std::move(occ));
    }
    ConvolutionBlock out;
    out.parts = block.support.size();
    out.weight = [local = std::move(local)](std::span<const unsigned> parts) {
        std::uint64_t exponent = 0;
        for (const auto& occ : local) {
            std::uint64_t term = 1;
            for (const auto& [index, o] : occ) term *= choose(parts[index], o);
            exponent += term;
        }
        return TPoly::monomial(1, exponent);
    };
    return out;
}

TruncatedEGF partition_egf(const IndicePartition& partition, std::size_t order) {
    TruncatedEGF out = TruncatedEGF::one(order);
    for (const auto& block : partition.blocks) out = egf_mul(out, block_series(indice_block(block), order));
    const auto free = partition.free_residues();
    if (!free.empty()) out = egf_mul(out, egf_pow(TruncatedEGF::exponential(order), free.size()));
    return out;
}

TruncatedEGF family_egf(const Family& family, std::uint32_t q, std::size_t order, const EgfOptions& options) {
    if (!is_prime(q)) throw InvalidArgument(kModule, std::to_string(q) + " is not prime");
    if (options.certify) {
        for (std::size_t n = family.min_n; n <= order; ++n) {
            const auto report = certify(family.build(n), q);
            if (!report.certified) {
                throw CertificationError(kModule, "prime " + std::to_string(q) + " does not reduce " + family.name +
                                                      " at n = " + std::to_string(n) + ": " + report.reason);
            }
        }
    }
    const auto analysis = analyze_representatives(family.representatives, q);
    return partition_egf(analysis.partition, order);
}

}  // namespace symtutte
