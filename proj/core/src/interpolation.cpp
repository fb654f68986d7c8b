#include "symtutte/interpolation.hpp"

#include "symtutte/error.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/symmetric_engine.hpp"

#include <algorithm>
#include <set>

namespace symtutte {
namespace {

constexpr const char* kModule = "q-interpolation";

void require_distinct(std::span<const std::uint32_t> primes) {
    std::set<std::uint32_t> seen(primes.begin(), primes.end());
    if (seen.size() != primes.size()) throw InvalidArgument(kModule, "interpolation primes must be distinct");
}

std::vector<std::uint32_t> choose_primes(const Arrangement& a, std::size_t needed, const InterpolationOptions& options) {
    if (!options.primes.empty()) {
        if (options.primes.size() < needed) {
            throw InvalidArgument(kModule, "need at least " + std::to_string(needed) + " primes, got " +
                                               std::to_string(options.primes.size()));
        }
        require_distinct(options.primes);
        for (auto q : options.primes) {
            if (!is_prime(q)) throw InvalidArgument(kModule, std::to_string(q) + " is not prime");
            if (!options.certify) continue;
            const auto report = certify(a, q);
            if (!report.certified) {
                throw CertificationError(kModule, "prime " + std::to_string(q) + " is not certified: " + report.reason);
            }
        }
        return options.primes;
    }
    return certified_primes(a, needed + options.extra_primes);
}

}  // namespace

CharPoly lagrange(std::span<const std::pair<Rational, Rational>> points) {
    CharPoly out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        CharPoly basis(1);
        Rational denominator = 1;
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k == i) continue;
            basis *= CharPoly::variable() - CharPoly(points[k].first);
            denominator *= points[i].first - points[k].first;
        }
        if (sgn(denominator) == 0) throw InvalidArgument(kModule, "interpolation nodes must be distinct");
        out += basis * (points[i].second / denominator);
    }
    return out;
}

CoboundaryPoly interpolate_coboundary(std::span<const PrimeSample> samples, std::size_t rank) {
    if (samples.size() < rank + 1) {
        throw InvalidArgument(kModule, "need at least rank + 1 = " + std::to_string(rank + 1) + " primes");
    }
    std::vector<std::uint32_t> primes;
    long max_t = -1;
    for (const auto& s : samples) {
        primes.push_back(s.q);
        max_t = std::max(max_t, s.value.degree());
    }
    require_distinct(primes);

    CoboundaryPoly out;
    for (long j = 0; j <= max_t; ++j) {
        std::vector<std::pair<Rational, Rational>> points;
        for (const auto& s : samples) points.emplace_back(Rational(s.q), s.value.coeff(static_cast<std::size_t>(j)));
        const CharPoly in_q = lagrange(points);
        if (in_q.degree() > static_cast<long>(rank)) {
            throw IntegrityAlarm(kModule, "coefficient of t^" + std::to_string(j) + " has degree " +
                                              std::to_string(in_q.degree()) + " in q, above the rank " +
                                              std::to_string(rank));
        }
        for (std::size_t i = 0; i < in_q.coefficients().size(); ++i) {
            const Rational& c = in_q.coefficients()[i];
            if (!is_integer(c)) {
                throw IntegrityAlarm(kModule, "non-integral interpolated coefficient " + to_string(c) + " at q^" +
                                                  std::to_string(i) + " t^" + std::to_string(j));
            }
            out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), c);
        }
    }
    for (const auto& s : samples) {
        if (out.at_first(Rational(s.q)) != s.value) {
            throw IntegrityAlarm(kModule, "interpolated polynomial does not reproduce the sample at q = " +
                                              std::to_string(s.q));
        }
    }
    return out;
}

CharPoly interpolate_characteristic(std::span<const CountSample> samples, std::size_t n) {
    if (samples.size() < n + 1) {
        throw InvalidArgument(kModule, "need at least n + 1 = " + std::to_string(n + 1) + " primes");
    }
    std::vector<std::uint32_t> primes;
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& s : samples) {
        primes.push_back(s.q);
        points.emplace_back(Rational(s.q), Rational(s.value));
    }
    require_distinct(primes);
    const CharPoly chi = lagrange(points);
    if (chi.degree() != static_cast<long>(n) || chi.coeff(n) != 1) {
        throw IntegrityAlarm(kModule, "interpolated characteristic polynomial " + chi.to_string() +
                                          " is not monic of degree " + std::to_string(n));
    }
    if (!chi.has_integer_coefficients()) {
        throw IntegrityAlarm(kModule, "interpolated characteristic polynomial has non-integral coefficients");
    }
    return chi;
}

namespace {

TPoly numerator_at(const Arrangement& a, std::uint32_t q, const InterpolationOptions& options) {
    if (options.engine == PointEngine::ClosedForm) {
        ClosedFormOptions closed;
        closed.threads = options.threads;
        closed.certify = false;  // certified by choose_primes
        return coboundary_closed_form(a, q, closed);
    }
    FqOptions fq;
    fq.threads = options.threads;
    fq.certify = false;
    return coboundary_at_prime(a, q, fq);
}

}  // namespace

CoboundaryPoly recover_coboundary(const Arrangement& a, const InterpolationOptions& options) {
    const auto primes = choose_primes(a, a.rank() + 1, options);
    std::vector<PrimeSample> samples;
    for (auto q : primes) samples.push_back({q, numerator_at(a, q, options)});
    return interpolate_coboundary(samples, a.rank());
}

CharPoly recover_characteristic(const Arrangement& a, const InterpolationOptions& options) {
    const std::size_t n = a.dim();
    const auto primes = choose_primes(a, n + 1, options);
    std::vector<CountSample> samples;
    for (auto q : primes) {
        Integer count;
        if (options.engine == PointEngine::ClosedForm) {
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), q, n - a.rank());
            const Rational value = numerator_at(a, q, options).coeff(0) * Rational(scale);
            count = value.get_num();
        } else {
            FqOptions fq;
            fq.threads = options.threads;
            fq.certify = false;
            count = characteristic_at_prime(a, q, fq);
        }
        samples.push_back({q, count});
    }
    return interpolate_characteristic(samples, n);
}

}  // namespace symtutte
