#pragma once

// Plain-text arrangement files and structured (JSON) polynomial output.
//
//   # Catalan arrangement in R^2
//   dim 2
//   1 -1 = 0
//   1 -1 = 1
//   1 -1 = -1
//
// or a single line naming a built-in family:
//
//   family catalan n=3
//
// Coefficients are integers or p/q rationals; '#' starts a comment.

#include "symtutte/arrangement.hpp"
#include "symtutte/error.hpp"
#include "symtutte/poly.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace symtutte {

class ParseError : public InvalidArgument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InvalidArgument("cli", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct FamilySpec {
    std::string name;
    std::size_t n = 0;
};

using ArrangementSource = std::variant<Arrangement, FamilySpec>;

/// Throws ParseError.
ArrangementSource parse_arrangement(std::string_view text);
/// Throws InvalidArgument if the file cannot be read, ParseError on bad content.
ArrangementSource parse_arrangement_file(const std::filesystem::path& path);

/// Renders an arrangement in the text format (round-trips through parse_arrangement).
std::string format_arrangement(const Arrangement& a);

/// {"variables": [...], "terms": [{"exp": [...], "coeff": "..."}]}; exact values as strings.
std::string to_json(const TuttePoly& p);
std::string to_json(const CoboundaryPoly& p);
std::string to_json(const CharPoly& p);
std::string to_json(const TPoly& p);

}  // namespace symtutte
