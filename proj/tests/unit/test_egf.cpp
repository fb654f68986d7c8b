#include "support.hpp"
#include "symtutte/egf.hpp"
#include "symtutte/error.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/symmetric_engine.hpp"

#include <doctest.h>

using namespace symtutte;

namespace {

const TPoly t = TPoly::variable();

TruncatedEGF weyl_factor(std::size_t order) {
    TruncatedEGF v(order);
    for (std::size_t n = 0; n <= order; ++n) v[n] = TPoly::monomial(1, n * (n - (n > 0 ? 1 : 0)) / 2);
    return v;
}

TruncatedEGF random_egf(std::mt19937_64& rng, std::size_t order) {
    TruncatedEGF v(order);
    for (std::size_t n = 0; n <= order; ++n) {
        for (int k = 0; k < 3; ++k) v[n] += TPoly::monomial(testing::frac(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3), rng() % 4);
    }
    return v;
}

ConvolutionBlock power_block(std::size_t parts, unsigned j) {
    return ConvolutionBlock{parts, [j](std::span<const unsigned> a) {
                                std::size_t prod = 1;
                                for (auto v : a) prod *= v;
                                return TPoly::monomial(1, j * prod);
                            }};
}

}  // namespace

TEST_CASE("egf_mul examples") {
    const auto e = TruncatedEGF::exponential(6);
    const auto sq = egf_mul(e, e);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(sq[n] == TPoly(Rational(1L << n)));
    const auto u = weyl_factor(6);
    CHECK(egf_mul(u, TruncatedEGF::one(6)) == u);
    CHECK(egf_mul(u, u)[2] == 2 * t + 2);
    CHECK_THROWS_AS(egf_mul(u, TruncatedEGF::one(5)), InvalidArgument);
}

TEST_CASE("egf_pow") {
    const auto u = weyl_factor(4);
    CHECK(egf_pow(u, 0) == TruncatedEGF::one(4));
    CHECK(egf_pow(u, 3) == egf_mul(u, egf_mul(u, u)));
}

TEST_CASE("generalized convolution: worked example and controls") {
    // q = 2 blocks with one index each, weight t^(j * a)
    const std::vector<ConvolutionBlock> blocks{power_block(1, 1), power_block(1, 2)};
    CHECK(generalized_convolution_check(blocks, 4));
    const std::vector<ConvolutionBlock> wider{power_block(2, 1), power_block(3, 2)};
    CHECK(generalized_convolution_check(wider, 5));
    const std::vector<ConvolutionBlock> single{power_block(2, 1)};
    CHECK(generalized_convolution_check(single, 5));
    // an exponent that couples the blocks cannot factor
    const DirectTerm coupled = [](std::span<const unsigned> a) { return TPoly::monomial(1, a[0] * a[1]); };
    CHECK_FALSE(generalized_convolution_check(blocks, 4, coupled));
}

TEST_CASE("family_egf examples") {
    const auto w = family_egf(family_by_name("weyl-a"), 3, 3, EgfOptions{false});
    CHECK(w == egf_pow(weyl_factor(3), 3));
    CHECK(w[2] == 3 * t + 6);
    const auto c = family_egf(family_by_name("catalan"), 5, 4);
    CHECK(c[2] == 15 * t + 10);
    for (const auto& name : testing::family_names()) CHECK(family_egf(family_by_name(name), 7, 3)[0] == TPoly(1));
    CHECK_THROWS_AS(family_by_name("braid"), InvalidArgument);
    CHECK_THROWS_AS(family_egf(family_by_name("catalan"), 5, 6), CertificationError);
}

TEST_CASE("property: egf_mul is associative and commutative") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_egf(rng, 6), b = random_egf(rng, 6), c = random_egf(rng, 6);
        CHECK(egf_mul(a, b) == egf_mul(b, a));
        CHECK(egf_mul(egf_mul(a, b), c) == egf_mul(a, egf_mul(b, c)));
    }
}

TEST_CASE("property: family egf coefficients at t = 1 are q^n") {
    for (const auto& name : testing::family_names()) {
        for (std::uint32_t q : {5u, 7u}) {
            const auto u = family_egf(family_by_name(name), q, 8, EgfOptions{false});
            Rational power = 1;
            for (std::size_t n = 0; n <= 8; ++n) {
                CHECK(u[n](1) == power);
                power *= q;
            }
        }
    }
}

TEST_CASE("property: partition egf reproduces the composition sum") {
    for (const auto& name : testing::family_names()) {
        for (std::uint32_t q : {5u, 7u, 11u}) {
            const auto analysis = analyze_representatives(family_by_name(name).representatives, q);
            const auto u = partition_egf(analysis.partition, 7);
            for (std::size_t n = 1; n <= 7; ++n) CHECK(u[n] == composition_sum(analysis.partition, n));
        }
    }
    // residues outside every block contribute exp(z) factors
    const auto lone = analyze_representatives({RepEquation({1}, 0)}, 5);
    const auto u = partition_egf(lone.partition, 4);
    CHECK(u[1] == t + 4);
}
