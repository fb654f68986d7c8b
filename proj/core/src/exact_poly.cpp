#include "symtutte/exact_poly.hpp"

#include "symtutte/error.hpp"

#include <map>

namespace symtutte {

TuttePoly divide_by_second_minus_one(const TuttePoly& p, std::size_t power) {
    // Group by exponent of x, giving univariate polynomials in y.
    std::map<unsigned, std::vector<Rational>> by_x;
    for (const auto& [e, c] : p.terms()) {
        auto& row = by_x[e.first];
        if (row.size() <= e.second) row.resize(e.second + 1);
        row[e.second] = c;
    }
    TuttePoly out;
    for (auto& [xe, coeffs] : by_x) {
        for (std::size_t step = 0; step < power; ++step) {
            // Synthetic division by (y - 1): b_{k-1} = a_k + b_k, remainder = a_0 + b_0.
            if (coeffs.empty()) break;
            std::vector<Rational> quotient(coeffs.size() > 1 ? coeffs.size() - 1 : 0);
            Rational carry = 0;
            for (std::size_t k = coeffs.size(); k-- > 1;) {
                carry += coeffs[k];
                quotient[k - 1] = carry;
            }
            const Rational remainder = coeffs[0] + carry;
            if (sgn(remainder) != 0) {
                throw IntegrityAlarm("exact-poly",
                                     "division by (y - 1)^" + std::to_string(power) +
                                         " is not exact; input is not a valid (coboundary, rank) pair");
            }
            coeffs = std::move(quotient);
        }
        for (std::size_t j = 0; j < coeffs.size(); ++j) out.add_term(xe, static_cast<unsigned>(j), coeffs[j]);
    }
    return out;
}

TuttePoly tutte_from_coboundary(const CoboundaryPoly& cb, std::size_t rank) {
    const TuttePoly x_minus_one = TuttePoly::first_var() - TuttePoly(1);
    const TuttePoly y = TuttePoly::second_var();
    const TuttePoly q_image = x_minus_one * (y - TuttePoly(1));

    // Cache powers of the substituted variables.
    std::vector<TuttePoly> q_powers{TuttePoly(1)};
    std::vector<TuttePoly> t_powers{TuttePoly(1)};
    TuttePoly substituted;
    for (const auto& [e, c] : cb.terms()) {
        while (q_powers.size() <= e.first) q_powers.push_back(q_powers.back() * q_image);
        while (t_powers.size() <= e.second) t_powers.push_back(t_powers.back() * y);
        substituted += TuttePoly(c) * q_powers[e.first] * t_powers[e.second];
    }
    return divide_by_second_minus_one(substituted, rank);
}

CharPoly characteristic_from_coboundary(const CoboundaryPoly& cb, std::size_t n, std::size_t rank) {
    if (rank > n) throw InvalidArgument("exact-poly", "rank exceeds the ambient dimension");
    return cb.at_second(0) * CharPoly::monomial(1, n - rank);
}

namespace {

Integer checked_count(const Rational& value, const char* what) {
    if (!is_integer(value) || sgn(value) < 0) {
        throw IntegrityAlarm("exact-poly", std::string(what) + " evaluated to " + to_string(value) +
                                               "; input is not a characteristic polynomial");
    }
    return value.get_num();
}

}  // namespace

Integer regions(const CharPoly& chi, std::size_t n) {
    Rational value = chi(Rational(-1));
    if (n % 2 == 1) value = -value;
    return checked_count(value, "region count");
}

Integer bounded_regions(const CharPoly& chi, std::size_t rank) {
    Rational value = chi(Rational(1));
    if (rank % 2 == 1) value = -value;
    return checked_count(value, "bounded region count");
}

}  // namespace symtutte
