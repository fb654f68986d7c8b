#pragma once

#include "symtutte/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symtutte {

// Variable labels. Polynomials over different labels are distinct types, so a
// (q,t) coboundary polynomial can never be added to an (x,y) Tutte polynomial.
struct VarX { static constexpr const char* name = "x"; };
struct VarY { static constexpr const char* name = "y"; };
struct VarQ { static constexpr const char* name = "q"; };
struct VarT { static constexpr const char* name = "t"; };
struct VarZ { static constexpr const char* name = "z"; };

template <class First, class Second>
struct VarPair {
    using first = First;
    using second = Second;
};
using XY = VarPair<VarX, VarY>;
using QT = VarPair<VarQ, VarT>;

namespace detail {

// Appends "c*m" with sign handling: first term carries "-" only, later terms " + "/" - ".
inline void append_term(std::string& out, const Rational& coeff, const std::string& monomial) {
    const bool negative = sgn(coeff) < 0;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = abs(coeff);
    if (monomial.empty()) {
        out += mag.get_str();
        return;
    }
    if (mag != 1) out += is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    out += monomial;
}

inline std::string power(const char* var, unsigned e) {
    if (e == 0) return {};
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Dense univariate polynomial with exact rational coefficients; trailing zeros trimmed.
template <class Var>
class UniPoly {
public:
    using Variable = Var;

    UniPoly() = default;
    UniPoly(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT(implicit)
    UniPoly(long constant) : UniPoly(Rational(constant)) {}           // NOLINT(implicit)
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> coeffs(degree + 1);
        coeffs[degree] = c;
        return UniPoly(std::move(coeffs));
    }
    static UniPoly variable() { return monomial(1, 1); }

    static constexpr const char* name() { return Var::name; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool has_integer_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(UniPoly a, long s) { return a *= Rational(s); }
    friend UniPoly operator*(long s, UniPoly a) { return a *= Rational(s); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Descending powers: "q^2 - 3q", "3t + 2", "0".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (sgn(coeffs_[i]) == 0) continue;
            detail::append_term(out, coeffs_[i], detail::power(Var::name, static_cast<unsigned>(i)));
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

template <class Var>
UniPoly<Var> pow(const UniPoly<Var>& base, unsigned e) {
    UniPoly<Var> out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

/// Sparse bivariate polynomial with exact rational coefficients, iterated in
/// graded-lex order (total degree descending, then first exponent descending).
template <class Vars>
class BiPoly {
public:
    using First = typename Vars::first;
    using Second = typename Vars::second;
    using Exponent = std::pair<unsigned, unsigned>;

    struct GradedLex {
        bool operator()(const Exponent& a, const Exponent& b) const {
            const unsigned da = a.first + a.second;
            const unsigned db = b.first + b.second;
            if (da != db) return da > db;
            return a.first > b.first;
        }
    };
    using TermMap = std::map<Exponent, Rational, GradedLex>;

    BiPoly() = default;
    BiPoly(const Rational& constant) { add_term(0, 0, constant); }  // NOLINT(implicit)
    BiPoly(long constant) : BiPoly(Rational(constant)) {}           // NOLINT(implicit)

    static BiPoly monomial(const Rational& c, unsigned i, unsigned j) {
        BiPoly p;
        p.add_term(i, j, c);
        return p;
    }
    static BiPoly first_var() { return monomial(1, 1, 0); }
    static BiPoly second_var() { return monomial(1, 0, 1); }

    static BiPoly from_first(const UniPoly<First>& p) {
        BiPoly out;
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) out.add_term(static_cast<unsigned>(i), 0, p.coefficients()[i]);
        return out;
    }
    static BiPoly from_second(const UniPoly<Second>& p) {
        BiPoly out;
        for (std::size_t j = 0; j < p.coefficients().size(); ++j) out.add_term(0, static_cast<unsigned>(j), p.coefficients()[j]);
        return out;
    }

    /// Adds c * first^i * second^j, dropping the entry if it cancels.
    void add_term(unsigned i, unsigned j, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(unsigned i, unsigned j) const {
        auto it = terms_.find(Exponent{i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    unsigned degree_first() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    unsigned degree_second() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }
    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
    }

    Rational eval_at(const Rational& a, const Rational& b) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) acc += c * rational_pow(a, e.first) * rational_pow(b, e.second);
        return acc;
    }
    /// Fixes the first variable, leaving a polynomial in the second.
    UniPoly<Second> at_first(const Rational& a) const {
        std::vector<Rational> out(degree_second() + 1);
        for (const auto& [e, c] : terms_) out[e.second] += c * rational_pow(a, e.first);
        return UniPoly<Second>(std::move(out));
    }
    /// Fixes the second variable, leaving a polynomial in the first.
    UniPoly<First> at_second(const Rational& b) const {
        std::vector<Rational> out(degree_first() + 1);
        for (const auto& [e, c] : terms_) out[e.first] += c * rational_pow(b, e.second);
        return UniPoly<First>(std::move(out));
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
        return out;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// "x^2 + x + y", "q + 3t - 3", "2q*t^2 - 1"
    std::string to_string() const {
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono = detail::power(First::name, e.first);
            const std::string second = detail::power(Second::name, e.second);
            if (!mono.empty() && !second.empty()) mono += "*";
            mono += second;
            detail::append_term(out, c, mono);
        }
        return out.empty() ? "0" : out;
    }

private:
    static Rational rational_pow(const Rational& base, unsigned e) {
        Rational out = 1;
        for (unsigned i = 0; i < e; ++i) out *= base;
        return out;
    }

    TermMap terms_;
};

template <class Vars>
BiPoly<Vars> pow(const BiPoly<Vars>& base, unsigned e) {
    BiPoly<Vars> out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

using TuttePoly = BiPoly<XY>;
using CoboundaryPoly = BiPoly<QT>;
using CharPoly = UniPoly<VarQ>;
using TPoly = UniPoly<VarT>;

}  // namespace symtutte
