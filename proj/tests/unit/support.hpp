#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the unit tests.
// The oracles deliberately avoid the library's own elimination code.

#include "symtutte/arrangement.hpp"
#include "symtutte/families.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using symtutte::Arrangement;
using symtutte::Hyperplane;
using symtutte::Rational;

// mpq_class(num, den) does not canonicalize.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Hyperplane hp(std::vector<long> coeffs, long rhs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return Hyperplane::canonical(std::move(c), Rational(rhs));
}

inline Arrangement arr(std::size_t dim, std::vector<Hyperplane> hs) { return Arrangement(dim, std::move(hs)); }

inline Arrangement family(const std::string& name, std::size_t n) { return symtutte::family_by_name(name).build(n); }

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"weyl-a", "catalan", "shi-threshold", "i-arrangement"};
    return names;
}

// Plain Gaussian elimination over Q.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

inline std::size_t oracle_coeff_rank(const Arrangement& a, std::uint64_t mask) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask >> i & 1) rows.push_back(a[i].coeffs());
    }
    return oracle_rank(rows);
}

inline bool oracle_central(const Arrangement& a, std::uint64_t mask) {
    std::vector<std::vector<Rational>> coeff, aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        coeff.push_back(a[i].coeffs());
        aug.push_back(a[i].coeffs());
        aug.back().push_back(a[i].rhs());
    }
    return oracle_rank(coeff) == oracle_rank(aug);
}

// r(B) as the largest rank of a central subset of B.
inline std::size_t oracle_rank_by_definition(const Arrangement& a, std::uint64_t mask) {
    std::size_t best = 0;
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        if (oracle_central(a, sub)) best = std::max(best, oracle_coeff_rank(a, sub));
        if (sub == 0) break;
    }
    return best;
}

// Small random arrangements with coefficients in [-2, 2] and rhs in [-2, 2].
// In dimension 1 there are only 7 distinct such hyperplanes.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
    if (dim == 1) count = std::min<std::size_t>(count, 7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Hyperplane> hs;
    while (hs.size() < count) {
        std::vector<Rational> c(dim);
        bool nonzero = false;
        for (auto& v : c) {
            v = coeff(rng);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) continue;
        hs.push_back(Hyperplane::canonical(std::move(c), Rational(coeff(rng))));
        Arrangement probe(dim, hs);
        if (probe.size() != hs.size()) hs.pop_back();
    }
    return Arrangement(dim, std::move(hs));
}

inline symtutte::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return symtutte::Permutation(std::move(images));
}

}  // namespace testing
