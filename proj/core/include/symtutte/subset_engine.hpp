#pragma once

// Tutte and coboundary polynomials straight from their defining sums over
// central subarrangements. Exponential in |A|; serves as the reference oracle.

#include "symtutte/arrangement.hpp"
#include "symtutte/poly.hpp"

#include <cstdint>
#include <vector>

namespace symtutte {

enum class SubsetStrategy {
    /// Recomputes centrality and rank from scratch for each of the 2^|A| subsets.
    Naive,
    /// Depth-first include/exclude walk that maintains the echelon basis
    /// incrementally and prunes noncentral branches.
    Incremental,
};

struct SubsetOptions {
    std::size_t cap = 22;
    unsigned threads = 1;
    SubsetStrategy strategy = SubsetStrategy::Incremental;
};

/// counts[r][k]: number of central subarrangements of rank r with k hyperplanes.
struct CentralSubsetCounts {
    std::size_t dim = 0;
    std::size_t arrangement_rank = 0;
    std::vector<std::vector<std::uint64_t>> counts;

    friend bool operator==(const CentralSubsetCounts&, const CentralSubsetCounts&) = default;
};

/// Throws Unsupported when |A| exceeds options.cap.
CentralSubsetCounts count_central_subsets(const Arrangement& a, const SubsetOptions& options = {});

TuttePoly tutte_from_counts(const CentralSubsetCounts& counts);
CoboundaryPoly coboundary_from_counts(const CentralSubsetCounts& counts);

TuttePoly tutte_by_definition(const Arrangement& a, const SubsetOptions& options = {});
CoboundaryPoly coboundary_by_definition(const Arrangement& a, const SubsetOptions& options = {});

}  // namespace symtutte
