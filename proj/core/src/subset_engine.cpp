#include "symtutte/subset_engine.hpp"

#include "parallel.hpp"
#include "symtutte/error.hpp"
#include "symtutte/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace symtutte {
namespace {

using Counts = std::vector<std::vector<std::uint64_t>>;

template <class Int>
std::vector<std::vector<Int>> convert_rows(const Arrangement& a) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(a.size());
    for (const auto& row : a.integer_rows()) {
        std::vector<Int> out;
        out.reserve(row.size());
        for (const auto& v : row) {
            if constexpr (std::is_same_v<Int, std::int64_t>) {
                if (!v.fits_slong_p()) throw std::overflow_error("coefficient too large for int64");
                out.push_back(v.get_si());
            } else {
                out.push_back(v);
            }
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

template <class Int>
class Walker {
public:
    Walker(const std::vector<std::vector<Int>>& rows, std::size_t dim, Counts& counts)
        : rows_(rows), dim_(dim), coef_(dim), aug_(dim + 1), counts_(counts) {}

    /// Adds row i; returns false (and leaves the state untouched) if the result is noncentral.
    bool include(std::size_t i) {
        const std::span<const Int> row(rows_[i]);
        const bool coef_grew = coef_.insert(row.first(dim_));
        const bool aug_grew = aug_.insert(row);
        if (aug_grew && !coef_grew) {
            aug_.pop();
            return false;
        }
        history_.push_back(coef_grew);
        ++size_;
        return true;
    }

    void exclude_last() {
        if (history_.back()) {
            coef_.pop();
            aug_.pop();
        }
        history_.pop_back();
        --size_;
    }

    void walk(std::size_t next) {
        if (next == rows_.size()) {
            ++counts_[coef_.rank()][size_];
            return;
        }
        walk(next + 1);
        if (include(next)) {
            walk(next + 1);
            exclude_last();
        }
    }

private:
    const std::vector<std::vector<Int>>& rows_;
    std::size_t dim_;
    linalg::RationalEchelon<Int> coef_;
    linalg::RationalEchelon<Int> aug_;
    std::vector<bool> history_;
    std::size_t size_ = 0;
    Counts& counts_;
};

Counts empty_counts(const Arrangement& a) {
    return Counts(a.rank() + 1, std::vector<std::uint64_t>(a.size() + 1, 0));
}

void merge(Counts& into, const Counts& part) {
    for (std::size_t r = 0; r < into.size(); ++r) {
        for (std::size_t k = 0; k < into[r].size(); ++k) into[r][k] += part[r][k];
    }
}

template <class Int>
Counts incremental(const Arrangement& a, unsigned threads) {
    const auto rows = convert_rows<Int>(a);
    const std::size_t m = a.size();
    const unsigned workers = detail::resolve_threads(threads);
    std::size_t prefix = 0;
    while (prefix < m && (std::size_t{1} << prefix) < 8U * workers && workers > 1) ++prefix;

    auto parts = detail::run_tasks<Counts>(std::size_t{1} << prefix, threads, [&](std::size_t task) {
        Counts counts = empty_counts(a);
        Walker<Int> walker(rows, a.dim(), counts);
        for (std::size_t i = 0; i < prefix; ++i) {
            if ((task >> i & 1U) && !walker.include(i)) return counts;
        }
        walker.walk(prefix);
        return counts;
    });
    Counts total = empty_counts(a);
    for (const auto& p : parts) merge(total, p);
    return total;
}

template <class Int>
Counts naive(const Arrangement& a, unsigned threads) {
    const auto rows = convert_rows<Int>(a);
    const std::size_t m = a.size();
    const std::size_t n = a.dim();
    const std::uint64_t subsets = std::uint64_t{1} << m;
    const std::size_t chunks = std::min<std::uint64_t>(subsets, 64);

    auto parts = detail::run_tasks<Counts>(chunks, threads, [&](std::size_t chunk) {
        Counts counts = empty_counts(a);
        const std::uint64_t begin = subsets * chunk / chunks;
        const std::uint64_t end = subsets * (chunk + 1) / chunks;
        linalg::RationalEchelon<Int> coef(n);
        linalg::RationalEchelon<Int> aug(n + 1);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            coef.clear();
            aug.clear();
            for (std::size_t i = 0; i < m; ++i) {
                if (!(mask >> i & 1U)) continue;
                coef.insert(std::span<const Int>(rows[i]).first(n));
                aug.insert(rows[i]);
            }
            if (coef.rank() == aug.rank()) ++counts[coef.rank()][std::popcount(mask)];
        }
        return counts;
    });
    Counts total = empty_counts(a);
    for (const auto& p : parts) merge(total, p);
    return total;
}

template <class Int>
Counts dispatch(const Arrangement& a, const SubsetOptions& options) {
    return options.strategy == SubsetStrategy::Naive ? naive<Int>(a, options.threads)
                                                     : incremental<Int>(a, options.threads);
}

}  // namespace

CentralSubsetCounts count_central_subsets(const Arrangement& a, const SubsetOptions& options) {
    if (a.size() > options.cap || a.size() > 62) {
        throw Unsupported("subset-engine", "arrangement has " + std::to_string(a.size()) +
                                               " hyperplanes, above the enumeration cap of " +
                                               std::to_string(options.cap));
    }
    CentralSubsetCounts out;
    out.dim = a.dim();
    out.arrangement_rank = a.rank();
    try {
        out.counts = dispatch<std::int64_t>(a, options);
    } catch (const std::overflow_error&) {
        out.counts = dispatch<Integer>(a, options);
    }
    return out;
}

CoboundaryPoly coboundary_from_counts(const CentralSubsetCounts& counts) {
    const std::size_t total_rank = counts.arrangement_rank;
    const std::size_t max_size = counts.counts.empty() ? 0 : counts.counts.front().size();
    const CoboundaryPoly t_minus_one = CoboundaryPoly::second_var() - CoboundaryPoly(1);
    std::vector<CoboundaryPoly> t_powers{CoboundaryPoly(1)};
    for (std::size_t k = 1; k < max_size; ++k) t_powers.push_back(t_powers.back() * t_minus_one);

    CoboundaryPoly out;
    for (std::size_t r = 0; r < counts.counts.size(); ++r) {
        for (std::size_t k = 0; k < counts.counts[r].size(); ++k) {
            const std::uint64_t c = counts.counts[r][k];
            if (c == 0) continue;
            const Rational coeff{Integer(std::to_string(c))};
            out += CoboundaryPoly::monomial(coeff, static_cast<unsigned>(total_rank - r), 0) * t_powers[k];
        }
    }
    return out;
}

TuttePoly tutte_from_counts(const CentralSubsetCounts& counts) {
    const std::size_t total_rank = counts.arrangement_rank;
    const TuttePoly x_minus_one = TuttePoly::first_var() - TuttePoly(1);
    const TuttePoly y_minus_one = TuttePoly::second_var() - TuttePoly(1);

    TuttePoly out;
    for (std::size_t r = 0; r < counts.counts.size(); ++r) {
        for (std::size_t k = 0; k < counts.counts[r].size(); ++k) {
            const std::uint64_t c = counts.counts[r][k];
            if (c == 0) continue;
            if (k < r) throw IntegrityAlarm("subset-engine", "central subset smaller than its rank");
            const Rational coeff{Integer(std::to_string(c))};
            out += TuttePoly(coeff) * pow(x_minus_one, static_cast<unsigned>(total_rank - r)) *
                   pow(y_minus_one, static_cast<unsigned>(k - r));
        }
    }
    return out;
}

TuttePoly tutte_by_definition(const Arrangement& a, const SubsetOptions& options) {
    return tutte_from_counts(count_central_subsets(a, options));
}

CoboundaryPoly coboundary_by_definition(const Arrangement& a, const SubsetOptions& options) {
    return coboundary_from_counts(count_central_subsets(a, options));
}

}  // namespace symtutte
