#include "symtutte/rational.hpp"

#include "symtutte/error.hpp"

#include <cctype>

namespace symtutte {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidArgument("rational", "malformed rational '" + std::string(text) + "'");
    }
    Integer d(std::string(den), 10);
    if (d == 0) throw InvalidArgument("rational", "zero denominator in '" + std::string(text) + "'");
    Rational value(Integer(std::string(num), 10), d);
    value.canonicalize();
    if (!text.empty() && text.front() == '-') value = -value;
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::uint32_t residue(const Integer& value, std::uint32_t q) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), q));
}

}  // namespace symtutte
