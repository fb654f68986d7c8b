#include "symtutte/symmetric_engine.hpp"

#include "parallel.hpp"
#include "symtutte/error.hpp"
#include "symtutte/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace symtutte {
namespace {

constexpr const char* kModule = "symmetric-engine";

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::vector<std::uint32_t> apply_positions(const std::vector<std::uint32_t>& x, const Permutation& pi) {
    std::vector<std::uint32_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[pi(i)];
    return out;
}

std::uint64_t factorial(unsigned k) {
    std::uint64_t out = 1;
    for (unsigned i = 2; i <= k; ++i) out *= i;
    return out;
}

__extension__ typedef unsigned __int128 u128;

Integer from_u128(u128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    Integer lo(static_cast<unsigned long>(v & ~std::uint64_t{0}));
    return (hi << 64) + lo;
}

}  // namespace

RepEquation::RepEquation(std::vector<Rational> coeffs, Rational rhs) : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {
    if (coeffs_.empty()) throw InvalidArgument(kModule, "representative equation needs at least one variable");
    for (const auto& c : coeffs_) {
        if (sgn(c) == 0) throw InvalidArgument(kModule, "representative equation coefficients must be nonzero");
    }
}

RepEquation RepEquation::from_hyperplane(const Hyperplane& h) {
    std::vector<Rational> coeffs;
    for (auto i : h.support()) coeffs.push_back(h.coeffs()[i]);
    return RepEquation(std::move(coeffs), h.rhs());
}

Hyperplane RepEquation::hyperplane(std::size_t n) const {
    if (n < arity()) throw InvalidArgument(kModule, "dimension smaller than the equation arity");
    std::vector<Rational> coeffs(n);
    std::copy(coeffs_.begin(), coeffs_.end(), coeffs.begin());
    return Hyperplane::canonical(std::move(coeffs), rhs_);
}

Stabilizer Stabilizer::of(const RepEquation& e) {
    const std::size_t j = e.arity();
    const Hyperplane h = e.hyperplane(j);
    Stabilizer out;
    std::vector<std::size_t> images(j);
    std::iota(images.begin(), images.end(), 0);
    do {
        Permutation pi(images);
        if (act(pi, h) == h) out.elements_.push_back(std::move(pi));
    } while (std::next_permutation(images.begin(), images.end()));

    if (!out.contains(Permutation::identity(j))) throw IntegrityAlarm(kModule, "stabilizer lacks the identity");
    for (const auto& a : out.elements_) {
        for (const auto& b : out.elements_) {
            if (!out.contains(a * b)) throw IntegrityAlarm(kModule, "stabilizer is not closed under composition");
        }
    }
    return out;
}

bool Stabilizer::contains(const Permutation& p) const {
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

std::string CanonicalSolution::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

std::vector<std::uint32_t> IndicePartition::free_residues() const {
    std::vector<bool> used(q, false);
    for (const auto& block : blocks) {
        for (auto k : block.support) used[k] = true;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < q; ++k) {
        if (!used[k]) out.push_back(k);
    }
    return out;
}

std::vector<RepEquation> extract_representatives(const Arrangement& a) {
    const std::size_t n = a.dim();
    std::set<Hyperplane> present(a.hyperplanes().begin(), a.hyperplanes().end());
    std::set<Hyperplane> assigned;
    std::vector<std::pair<Hyperplane, RepEquation>> reps;

    for (const auto& h : a.sorted()) {
        if (assigned.count(h) != 0) continue;
        const auto members = orbit(h, n);
        std::size_t found = 0;
        for (const auto& m : members) found += present.count(m);
        if (found != members.size()) {
            throw InvalidArgument(kModule, "arrangement is not symmetric: the orbit of " + h.to_string() + " has " +
                                               std::to_string(members.size()) + " hyperplanes, " +
                                               std::to_string(found) + " of them in the arrangement");
        }
        assigned.insert(members.begin(), members.end());

        // Among orbit members supported on x_1..x_j, take the largest (coefficients, rhs).
        const std::size_t j = h.support().size();
        const Hyperplane* best = nullptr;
        for (const auto& m : members) {
            const auto support = m.support();
            if (support.back() + 1 != j) continue;
            if (best == nullptr || *best < m) best = &m;
        }
        reps.emplace_back(*best, RepEquation::from_hyperplane(*best));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
        if (x.second.arity() != y.second.arity()) return x.second.arity() < y.second.arity();
        return x.first < y.first;
    });
    std::vector<RepEquation> out;
    out.reserve(reps.size());
    for (auto& r : reps) out.push_back(std::move(r.second));
    return out;
}

Arrangement symmetric_arrangement(std::size_t n, std::span<const RepEquation> representatives) {
    std::vector<Hyperplane> all;
    for (const auto& e : representatives) {
        auto members = orbit(e.hyperplane(n), n);
        all.insert(all.end(), members.begin(), members.end());
    }
    const std::size_t requested = all.size();
    Arrangement out(n, std::move(all));
    if (out.size() != requested) {
        throw InvalidArgument(kModule, "representative equations are not pairwise inequivalent");
    }
    return out;
}

namespace {

std::vector<std::uint32_t> reduced_equation(const RepEquation& e, std::uint32_t q) {
    std::vector<Rational> row = e.coeffs();
    row.push_back(e.rhs());
    const auto integral = linalg::primitive_integer_row(row);
    std::vector<std::uint32_t> out;
    out.reserve(integral.size());
    for (const auto& v : integral) out.push_back(residue(v, q));
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i] == 0) {
            throw CertificationError(kModule, "coefficient of x_" + std::to_string(i + 1) + " in " + e.to_string() +
                                                  " vanishes modulo " + std::to_string(q));
        }
    }
    return out;
}

}  // namespace

std::vector<CanonicalSolution> solutions_mod_q(const RepEquation& e, std::uint32_t q, std::size_t equation_index) {
    if (!is_prime(q)) throw InvalidArgument(kModule, std::to_string(q) + " is not prime");
    const std::size_t j = e.arity();
    const auto eq = reduced_equation(e, q);
    const Stabilizer stabilizer = Stabilizer::of(e);
    const std::uint64_t pinned_inverse = linalg::inverse_mod(eq[j - 1], q);

    std::vector<CanonicalSolution> out;
    std::vector<std::uint32_t> x(j, 0);
    for (;;) {
        // Solve for the last variable given the free ones.
        std::uint64_t acc = eq[j];
        for (std::size_t i = 0; i + 1 < j; ++i) acc = (acc + std::uint64_t{q - eq[i]} * x[i]) % q;
        x[j - 1] = static_cast<std::uint32_t>(acc * pinned_inverse % q);

        std::set<std::vector<std::uint32_t>> images;
        for (const auto& pi : stabilizer.elements()) images.insert(apply_positions(x, pi));
        if (*images.begin() == x) {
            CanonicalSolution s;
            s.equation = equation_index;
            s.tuple = x;
            std::map<std::uint32_t, unsigned> occ;
            for (auto v : x) ++occ[v];
            for (const auto& [k, o] : occ) {
                s.support.push_back(k);
                s.occurrences.emplace_back(k, o);
            }
            s.orbit_size = images.size();
            out.push_back(std::move(s));
        }

        std::size_t k = j - 1;
        while (k > 0) {
            if (++x[k - 1] < q) break;
            x[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
    return out;
}

std::size_t raw_solution_count(const RepEquation& e, std::uint32_t q) {
    const std::size_t j = e.arity();
    std::vector<Rational> row = e.coeffs();
    row.push_back(e.rhs());
    const auto integral = linalg::primitive_integer_row(row);
    std::vector<std::uint32_t> eq;
    for (const auto& v : integral) eq.push_back(residue(v, q));

    std::size_t count = 0;
    std::vector<std::uint32_t> x(j, 0);
    for (;;) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < j; ++i) acc = (acc + std::uint64_t{eq[i]} * x[i]) % q;
        if (acc == eq[j]) ++count;
        std::size_t k = j;
        while (k > 0) {
            if (++x[k - 1] < q) break;
            x[k - 1] = 0;
            --k;
        }
        if (k == 0) return count;
    }
}

void require_binomial_counting(const RepEquation& e, const Stabilizer& stabilizer,
                               std::span<const CanonicalSolution> solutions) {
    for (const auto& s : solutions) {
        std::uint64_t fixers = 0;
        for (const auto& pi : stabilizer.elements()) fixers += apply_positions(s.tuple, pi) == s.tuple;
        std::uint64_t expected = 1;
        for (const auto& [k, o] : s.occurrences) expected *= factorial(o);
        if (fixers != expected) {
            throw Unsupported(kModule, "binomial hyperplane counting does not apply to " + e.to_string() +
                                           ": solution " + s.to_string() + " is fixed by " + std::to_string(fixers) +
                                           " stabilizer elements, expected " + std::to_string(expected));
        }
    }
}

std::uint64_t h_symbolic(std::span<const CanonicalSolution> solutions, const FqPoint& y) {
    std::vector<std::uint64_t> class_size(y.q, 0);
    for (auto v : y.coords) {
        if (v >= y.q) throw InvalidArgument(kModule, "coordinate out of range");
        ++class_size[v];
    }
    std::uint64_t h = 0;
    for (const auto& s : solutions) {
        std::uint64_t term = 1;
        for (const auto& [k, o] : s.occurrences) {
            if (k >= y.q) throw InvalidArgument(kModule, "solution residue exceeds the point modulus");
            term *= choose(class_size[k], o);
            if (term == 0) break;
        }
        h += term;
    }
    return h;
}

IndicePartition indice_partition(std::vector<CanonicalSolution> solutions, std::uint32_t q) {
    std::vector<std::uint32_t> parent(q);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& s : solutions) {
        for (auto k : s.support) {
            if (k >= q) throw InvalidArgument(kModule, "solution residue exceeds the modulus");
            parent[find(k)] = find(s.support.front());
        }
    }

    std::map<std::uint32_t, IndicePartition::Block> by_root;
    for (auto& s : solutions) {
        auto& block = by_root[find(s.support.front())];
        block.support.insert(block.support.end(), s.support.begin(), s.support.end());
        block.members.push_back(std::move(s));
    }
    IndicePartition out;
    out.q = q;
    for (auto& [root, block] : by_root) {
        std::sort(block.support.begin(), block.support.end());
        block.support.erase(std::unique(block.support.begin(), block.support.end()), block.support.end());
        out.blocks.push_back(std::move(block));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.support.front() < b.support.front(); });
    return out;
}

std::uint64_t composition_exponent(const IndicePartition& partition, std::span<const unsigned> parts) {
    if (parts.size() != partition.q) throw InvalidArgument(kModule, "composition must have q parts");
    std::uint64_t exponent = 0;
    for (const auto& block : partition.blocks) {
        for (const auto& s : block.members) {
            std::uint64_t term = 1;
            for (const auto& [k, o] : s.occurrences) {
                term *= choose(parts[k], o);
                if (term == 0) break;
            }
            exponent += term;
        }
    }
    return exponent;
}

TPoly composition_sum(const IndicePartition& partition, std::size_t n, unsigned threads) {
    const std::uint32_t q = partition.q;
    if (n > 33) throw Unsupported(kModule, "n above 33 overflows the multinomial accumulator");
    if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > 125.0) {
        throw Unsupported(kModule, "q^n too large for the exponent histogram");
    }

    std::uint64_t max_exponent = 0;
    for (const auto& block : partition.blocks) {
        for (const auto& s : block.members) {
            std::uint64_t term = 1;
            for (const auto& [k, o] : s.occurrences) term *= choose(n, o);
            max_exponent += term;
        }
    }
    if (max_exponent > (1U << 24)) throw Unsupported(kModule, "t-degree bound too large");

    using Histogram = std::vector<u128>;
    // Task a0 fixes the first part; the remaining parts are enumerated depth first
    // while carrying the running multinomial coefficient.
    auto parts_hist = detail::run_tasks<Histogram>(n + 1, threads, [&](std::size_t a0) {
        Histogram hist(max_exponent + 1, 0);
        std::vector<unsigned> parts(q, 0);
        parts[0] = static_cast<unsigned>(a0);
        const u128 first = choose(n, a0);
        auto fill = [&](auto&& self, std::size_t index, std::size_t remaining, u128 multinomial) -> void {
            if (index + 1 == q) {
                parts[index] = static_cast<unsigned>(remaining);
                hist[composition_exponent(partition, parts)] += multinomial;
                return;
            }
            for (std::size_t a = 0; a <= remaining; ++a) {
                parts[index] = static_cast<unsigned>(a);
                self(self, index + 1, remaining - a, multinomial * choose(remaining, a));
            }
            parts[index] = 0;
        };
        if (q == 1) {
            if (a0 == n) hist[composition_exponent(partition, parts)] += first;
        } else {
            fill(fill, 1, n - a0, first);
        }
        return hist;
    });

    std::vector<Rational> coeffs(max_exponent + 1);
    for (const auto& hist : parts_hist) {
        for (std::size_t e = 0; e < hist.size(); ++e) {
            if (hist[e] != 0) coeffs[e] += Rational(from_u128(hist[e]));
        }
    }
    return TPoly(std::move(coeffs));
}

SymmetricAnalysis analyze_representatives(std::vector<RepEquation> representatives, std::uint32_t q) {
    SymmetricAnalysis out;
    out.q = q;
    std::vector<CanonicalSolution> all;
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        const auto& e = representatives[i];
        auto stabilizer = Stabilizer::of(e);
        auto solutions = solutions_mod_q(e, q, i);
        require_binomial_counting(e, stabilizer, solutions);
        all.insert(all.end(), solutions.begin(), solutions.end());
        out.stabilizers.push_back(std::move(stabilizer));
    }
    out.representatives = std::move(representatives);
    out.solutions = all;
    out.partition = indice_partition(std::move(all), q);
    return out;
}

TPoly coboundary_closed_form(const Arrangement& a, std::uint32_t q, const ClosedFormOptions& options) {
    auto representatives = extract_representatives(a);
    if (!is_prime(q)) throw InvalidArgument(kModule, std::to_string(q) + " is not prime");
    if (options.certify) {
        const auto report = certify(a, q);
        if (!report.certified) {
            throw CertificationError(kModule, "prime " + std::to_string(q) +
                                                  " does not reduce the arrangement correctly: " + report.reason);
        }
    }
    const auto analysis = analyze_representatives(std::move(representatives), q);
    const TPoly numerator = composition_sum(analysis.partition, a.dim(), options.threads);
    try {
        return coboundary_from_point_count(numerator, q, a.dim() - a.rank());
    } catch (const IntegrityAlarm& alarm) {
        throw IntegrityAlarm(kModule, alarm.what());
    }
}

}  // namespace symtutte
