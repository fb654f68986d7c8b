#include "symtutte/fq_engine.hpp"

#include "parallel.hpp"
#include "symtutte/error.hpp"
#include "symtutte/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace symtutte {

std::string IntegerHyperplane::to_string() const {
    std::vector<Rational> coeffs(this->coeffs.begin(), this->coeffs.end());
    // Integer rows are printed without re-normalizing the leading coefficient.
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        detail::append_term(out, coeffs[i], "x_" + std::to_string(i + 1));
    }
    return out + " = " + rhs.get_str();
}

IntegerArrangement clear_denominators(const Arrangement& a) {
    IntegerArrangement out;
    out.dim = a.dim();
    out.hyperplanes.reserve(a.size());
    for (const auto& row : a.integer_rows()) {
        IntegerHyperplane h;
        h.coeffs.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        h.rhs = row.back();
        out.hyperplanes.push_back(std::move(h));
    }
    return out;
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

namespace {

void require_prime(std::uint32_t q, const char* module) {
    if (!is_prime(q)) throw InvalidArgument(module, std::to_string(q) + " is not prime");
}

std::vector<std::uint32_t> reduce_row(const std::vector<Integer>& coeffs, const Integer& rhs, std::uint32_t q) {
    std::vector<std::uint32_t> out;
    out.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) out.push_back(residue(c, q));
    out.push_back(residue(rhs, q));
    return out;
}

}  // namespace

ReducedArrangement::ReducedArrangement(const IntegerArrangement& source, std::uint32_t q)
    : q_(q), dim_(source.dim), source_size_(source.hyperplanes.size()) {
    require_prime(q, "fq-engine");
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& h : source.hyperplanes) {
        if (h.coeffs.size() != dim_) throw InvalidArgument("fq-engine", "hyperplane dimension mismatch");
        auto row = reduce_row(h.coeffs, h.rhs, q);
        // Normalize so the first nonzero coefficient is 1; proportional rows then coincide.
        std::size_t lead = 0;
        while (lead < dim_ && row[lead] == 0) ++lead;
        if (lead == dim_) {
            degenerate_ = true;
        } else {
            const std::uint64_t inv = linalg::inverse_mod(row[lead], q);
            for (auto& v : row) v = static_cast<std::uint32_t>(v * inv % q);
        }
        if (seen.insert(row).second) {
            rows_.insert(rows_.end(), row.begin(), row.end());
            ++count_;
        }
    }
}

unsigned h_count(const ReducedArrangement& reduced, const FqPoint& y) {
    if (y.q != reduced.modulus()) throw InvalidArgument("fq-engine", "point modulus does not match the arrangement");
    if (y.coords.size() != reduced.dim()) throw InvalidArgument("fq-engine", "point dimension mismatch");
    const std::uint64_t q = reduced.modulus();
    unsigned h = 0;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        const auto row = reduced.row(i);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < reduced.dim(); ++k) {
            if (y.coords[k] >= q) throw InvalidArgument("fq-engine", "coordinate out of range");
            acc = (acc + std::uint64_t{row[k]} * y.coords[k]) % q;
        }
        if (acc == row[reduced.dim()]) ++h;
    }
    return h;
}

namespace {

// Walks every rationally independent subset of `rows`; fails as soon as one of
// them is dependent mod q. Rows dependent over Q stay dependent mod q, so the
// remaining subsets cannot change rank. `Exact` decides independence over Q.
template <class Exact, class Elem>
class IndependenceWalk {
public:
    IndependenceWalk(const std::vector<std::vector<Elem>>& exact, const std::vector<std::vector<std::uint32_t>>& modular,
                     std::size_t width, Exact over_q, std::uint32_t q)
        : exact_(exact), modular_(modular), width_(width), over_q_(std::move(over_q)), over_fq_(width, q) {}

    bool run() { return walk(0); }
    const std::vector<std::size_t>& witness() const noexcept { return stack_; }

private:
    bool walk(std::size_t start) {
        if (over_q_.rank() == width_) return true;
        for (std::size_t i = start; i < exact_.size(); ++i) {
            if (!over_q_.insert(std::span<const Elem>(exact_[i]).first(width_))) continue;
            stack_.push_back(i);
            if (!over_fq_.insert(std::span<const std::uint32_t>(modular_[i]).first(width_))) return false;
            if (!walk(i + 1)) return false;
            over_fq_.pop();
            over_q_.pop();
            stack_.pop_back();
        }
        return true;
    }

    const std::vector<std::vector<Elem>>& exact_;
    const std::vector<std::vector<std::uint32_t>>& modular_;
    std::size_t width_;
    Exact over_q_;
    linalg::ModularEchelon over_fq_;
    std::vector<std::size_t> stack_;
};

// Runs the coefficient walk then the augmented walk; make(width) builds the exact echelon.
template <class Elem, class Make>
CertificationReport run_walks(const std::vector<std::vector<Elem>>& exact,
                              const std::vector<std::vector<std::uint32_t>>& modular, std::size_t dim, std::uint32_t q,
                              Make make) {
    CertificationReport report;
    {
        IndependenceWalk coef(exact, modular, dim, make(dim), q);
        if (!coef.run()) {
            report.reason = "coefficient rank drops modulo " + std::to_string(q);
            report.witness = coef.witness();
            return report;
        }
    }
    {
        IndependenceWalk aug(exact, modular, dim + 1, make(dim + 1), q);
        if (!aug.run()) {
            report.reason = "augmented rank drops modulo " + std::to_string(q) + " (centrality changes)";
            report.witness = aug.witness();
            return report;
        }
    }
    report.certified = true;
    return report;
}

template <class Int>
CertificationReport certify_with(const Arrangement& a, const std::vector<std::vector<std::uint32_t>>& modular,
                                 std::uint32_t q) {
    std::vector<std::vector<Int>> exact;
    exact.reserve(a.size());
    for (const auto& row : a.integer_rows()) {
        std::vector<Int> r;
        for (const auto& v : row) {
            if constexpr (std::is_same_v<Int, std::int64_t>) {
                if (!v.fits_slong_p()) throw std::overflow_error("coefficient too large for int64");
                r.push_back(v.get_si());
            } else {
                r.push_back(v);
            }
        }
        exact.push_back(std::move(r));
    }
    return run_walks(exact, modular, a.dim(), q, [](std::size_t w) { return linalg::RationalEchelon<Int>(w); });
}

// When every minor is below a prime P in absolute value, rank over Q equals
// rank mod P for every subset, so the exact side can run modulo P.
constexpr std::uint32_t kProxyPrime = 2147483647u;

CertificationReport certify_by_proxy(const Arrangement& a, const std::vector<std::vector<std::uint32_t>>& modular,
                                     std::uint32_t q) {
    std::vector<std::vector<std::uint32_t>> exact;
    exact.reserve(a.size());
    for (const auto& row : a.integer_rows()) {
        exact.push_back(reduce_row(std::vector<Integer>(row.begin(), row.end() - 1), row.back(), kProxyPrime));
    }
    return run_walks(exact, modular, a.dim(), q,
                     [](std::size_t w) { return linalg::ModularEchelon(w, kProxyPrime); });
}

// Hadamard: every square submatrix of `rows` (restricted to the first `width`
// columns) has |det| <= product of the largest row norms. Returns the squared bound.
Integer hadamard_bound_squared(const std::vector<std::vector<Integer>>& rows, std::size_t width) {
    std::vector<Integer> norms;
    norms.reserve(rows.size());
    for (const auto& row : rows) {
        Integer s = 0;
        for (std::size_t i = 0; i < width; ++i) s += row[i] * row[i];
        norms.push_back(s);
    }
    std::sort(norms.begin(), norms.end(), [](const Integer& x, const Integer& y) { return x > y; });
    Integer out = 1;
    for (std::size_t k = 0; k < std::min(width, norms.size()); ++k) out *= norms[k];
    return out;
}

CertificationReport certify_uncached(const Arrangement& a, std::uint32_t q);

}  // namespace

CertificationReport certify(const Arrangement& a, std::uint32_t q) {
    require_prime(q, "fq-engine");
    // Certification is pure and the walk is exponential; repeated queries on the
    // same arrangement are common (interpolation, EGF checks), so keep results.
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::vector<std::vector<Integer>>>, CertificationReport> cache;
    auto key = std::make_pair(q, a.integer_rows());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto report = certify_uncached(a, q);
    std::lock_guard lock(mutex);
    if (cache.size() > 512) cache.clear();
    cache.emplace(std::move(key), report);
    return report;
}

namespace {

CertificationReport certify_uncached(const Arrangement& a, std::uint32_t q) {
    std::vector<std::vector<std::uint32_t>> modular;
    modular.reserve(a.size());
    for (const auto& row : a.integer_rows()) {
        modular.push_back(reduce_row(std::vector<Integer>(row.begin(), row.end() - 1), row.back(), q));
    }

    const ReducedArrangement reduced(clear_denominators(a), q);
    if (!reduced.faithful()) {
        CertificationReport report;
        report.reason = "hyperplanes collide or degenerate modulo " + std::to_string(q);
        // Locate a colliding pair for the diagnostic.
        for (std::size_t i = 0; i < a.size() && report.witness.empty(); ++i) {
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                linalg::ModularEchelon e(a.dim() + 1, q);
                e.insert(modular[i]);
                if (!e.insert(modular[j])) {
                    report.witness = {i, j};
                    break;
                }
            }
        }
        return report;
    }
    // Every nonzero minor is smaller than q: nothing can vanish mod q.
    const Integer q2 = Integer(q) * q;
    if (q2 > hadamard_bound_squared(a.integer_rows(), a.dim() + 1) &&
        q2 > hadamard_bound_squared(a.integer_rows(), a.dim())) {
        CertificationReport report;
        report.certified = true;
        return report;
    }
    const Integer p2 = Integer(kProxyPrime) * kProxyPrime;
    if (p2 > hadamard_bound_squared(a.integer_rows(), a.dim() + 1) &&
        p2 > hadamard_bound_squared(a.integer_rows(), a.dim())) {
        return certify_by_proxy(a, modular, q);
    }
    try {
        return certify_with<std::int64_t>(a, modular, q);
    } catch (const std::overflow_error&) {
        return certify_with<Integer>(a, modular, q);
    }
}

}  // namespace

bool certify_prime(const Arrangement& a, std::uint32_t q) { return certify(a, q).certified; }

std::vector<std::uint32_t> certified_primes(const Arrangement& a, std::size_t count, std::uint32_t start) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = std::max<std::uint32_t>(start, 2); out.size() < count; ++q) {
        if (is_prime(q) && certify_prime(a, q)) out.push_back(q);
        if (q > (1U << 20)) throw CertificationError("fq-engine", "no certified primes found below 2^20");
    }
    return out;
}

std::vector<Integer> h_histogram(const ReducedArrangement& reduced, unsigned threads) {
    const std::size_t n = reduced.dim();
    const std::size_t m = reduced.size();
    const std::uint32_t q = reduced.modulus();
    double log_points = static_cast<double>(n) * std::log2(static_cast<double>(q));
    if (log_points > 60.0) throw Unsupported("fq-engine", "q^n too large to enumerate");

    if (n == 0) {
        std::vector<Integer> hist(m + 1);
        unsigned h = 0;
        for (std::size_t i = 0; i < m; ++i) h += reduced.row(i)[0] == 0;
        hist[h] = 1;
        return hist;
    }

    // Task k fixes the first coordinate to k; the rest is an odometer walk in which
    // every step on coordinate i adds a_i to each hyperplane's value (wraps included).
    auto parts = detail::run_tasks<std::vector<std::uint64_t>>(q, threads, [&](std::size_t first) {
        std::vector<std::uint64_t> hist(m + 1, 0);
        std::vector<std::uint32_t> value(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto row = reduced.row(i);
            value[i] = static_cast<std::uint32_t>((std::uint64_t{row[0]} * first + q - row[n]) % q);
        }
        std::vector<std::uint32_t> coords(n, 0);
        for (;;) {
            unsigned h = 0;
            for (std::size_t i = 0; i < m; ++i) h += value[i] == 0;
            ++hist[h];
            std::size_t k = n;
            for (;;) {
                if (--k == 0) return hist;
                for (std::size_t i = 0; i < m; ++i) {
                    const std::uint32_t v = value[i] + reduced.row(i)[k];
                    value[i] = v >= q ? v - q : v;
                }
                if (++coords[k] < q) break;
                coords[k] = 0;
            }
        }
    });
    std::vector<Integer> hist(m + 1);
    for (const auto& part : parts) {
        for (std::size_t k = 0; k <= m; ++k) hist[k] += Integer(std::to_string(part[k]));
    }
    return hist;
}

namespace {

void require_certified(const Arrangement& a, std::uint32_t q, const FqOptions& options) {
    if (!options.certify) {
        require_prime(q, "fq-engine");
        return;
    }
    const auto report = certify(a, q);
    if (!report.certified) {
        throw CertificationError("fq-engine", "prime " + std::to_string(q) + " does not reduce the arrangement correctly: " +
                                                  report.reason);
    }
}

}  // namespace

TPoly point_count_polynomial(const Arrangement& a, std::uint32_t q, const FqOptions& options) {
    require_certified(a, q, options);
    const ReducedArrangement reduced(clear_denominators(a), q);
    const auto hist = h_histogram(reduced, options.threads);
    return TPoly(std::vector<Rational>(hist.begin(), hist.end()));
}

TPoly coboundary_from_point_count(const TPoly& counts, std::uint32_t q, std::size_t codim) {
    Integer divisor;
    mpz_ui_pow_ui(divisor.get_mpz_t(), q, codim);
    std::vector<Rational> out;
    out.reserve(counts.coefficients().size());
    for (const auto& c : counts.coefficients()) {
        if (!is_integer(c) || c.get_num() % divisor != 0) {
            throw IntegrityAlarm("fq-engine", "point count " + c.get_str() + " is not divisible by " + std::to_string(q) +
                                                  "^" + std::to_string(codim));
        }
        out.emplace_back(c.get_num() / divisor);
    }
    return TPoly(std::move(out));
}

TPoly coboundary_at_prime(const Arrangement& a, std::uint32_t q, const FqOptions& options) {
    return coboundary_from_point_count(point_count_polynomial(a, q, options), q, a.dim() - a.rank());
}

Integer characteristic_at_prime(const Arrangement& a, std::uint32_t q, const FqOptions& options) {
    require_certified(a, q, options);
    const ReducedArrangement reduced(clear_denominators(a), q);
    return h_histogram(reduced, options.threads).front();
}

}  // namespace symtutte
