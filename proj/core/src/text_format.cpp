#include "symtutte/text_format.hpp"

#include "symtutte/families.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace symtutte {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_count(const Token& token, std::size_t line, const char* what) {
    std::size_t value = 0;
    if (token.text.empty()) throw ParseError(line, token.column, std::string("expected ") + what);
    for (char c : token.text) {
        if (c < '0' || c > '9') throw ParseError(line, token.column, std::string("expected ") + what);
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 1'000'000) throw ParseError(line, token.column, std::string(what) + " too large");
    }
    return value;
}

Rational parse_number(const Token& token, std::size_t line) {
    try {
        return parse_rational(token.text);
    } catch (const InvalidArgument&) {
        throw ParseError(line, token.column, "malformed rational '" + std::string(token.text) + "'");
    }
}

}  // namespace

ArrangementSource parse_arrangement(std::string_view text) {
    std::optional<std::size_t> dim;
    std::vector<Hyperplane> hyperplanes;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }

        if (!dim) {
            if (tokens[0].text == "family") {
                if (tokens.size() != 3) throw ParseError(line_no, tokens[0].column, "expected 'family <name> n=<k>'");
                const Token& arg = tokens[2];
                if (arg.text.substr(0, 2) != "n=") throw ParseError(line_no, arg.column, "expected n=<k>");
                const Token value{arg.text.substr(2), arg.column + 2};
                FamilySpec spec{std::string(tokens[1].text), parse_count(value, line_no, "family size")};
                try {
                    const auto& family = family_by_name(spec.name);
                    if (spec.n < family.min_n) {
                        throw ParseError(line_no, value.column,
                                         spec.name + " needs n >= " + std::to_string(family.min_n));
                    }
                } catch (const ParseError&) {
                    throw;
                } catch (const InvalidArgument&) {
                    throw ParseError(line_no, tokens[1].column, "unknown family '" + spec.name + "'");
                }
                // Nothing but comments may follow.
                for (std::size_t rest = pos; rest < text.size();) {
                    const std::size_t e = std::min(text.find('\n', rest), text.size());
                    ++line_no;
                    const auto extra = tokenize(text.substr(rest, e - rest));
                    if (!extra.empty()) throw ParseError(line_no, extra[0].column, "unexpected content after family line");
                    rest = e + 1;
                }
                return spec;
            }
            if (tokens[0].text != "dim" || tokens.size() != 2) {
                throw ParseError(line_no, tokens[0].column, "expected 'dim <n>' or 'family <name> n=<k>'");
            }
            dim = parse_count(tokens[1], line_no, "dimension");
            if (*dim == 0) throw ParseError(line_no, tokens[1].column, "dimension must be positive");
        } else {
            // c_1 ... c_n = b
            std::size_t eq = 0;
            while (eq < tokens.size() && tokens[eq].text != "=") ++eq;
            const std::string expected = "expected " + std::to_string(*dim) + " coefficients";
            if (eq == tokens.size()) {
                const Token& last = tokens.back();
                throw ParseError(line_no, last.column + last.text.size(), "missing '= <rhs>'");
            }
            if (eq < *dim) throw ParseError(line_no, tokens[eq].column, expected + ", found " + std::to_string(eq));
            if (eq > *dim) throw ParseError(line_no, tokens[*dim].column, expected + ", found " + std::to_string(eq));
            if (tokens.size() != eq + 2) {
                const Token& at = tokens.size() == eq + 1 ? tokens[eq] : tokens[eq + 2];
                throw ParseError(line_no, at.column, "expected a single right-hand side");
            }
            std::vector<Rational> coeffs;
            coeffs.reserve(*dim);
            for (std::size_t i = 0; i < *dim; ++i) coeffs.push_back(parse_number(tokens[i], line_no));
            Rational rhs = parse_number(tokens[*dim + 1], line_no);
            try {
                hyperplanes.push_back(Hyperplane::canonical(std::move(coeffs), std::move(rhs)));
            } catch (const InvalidArgument&) {
                throw ParseError(line_no, tokens[0].column, "not a hyperplane: all coefficients are zero");
            }
        }
        if (end == text.size()) break;
    }
    if (!dim) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'dim <n>' header");
    return Arrangement(*dim, std::move(hyperplanes));
}

ArrangementSource parse_arrangement_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cli", "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_arrangement(buffer.str());
}

std::string format_arrangement(const Arrangement& a) {
    std::string out = "dim " + std::to_string(a.dim()) + "\n";
    for (const auto& h : a.hyperplanes()) {
        for (const auto& c : h.coeffs()) out += to_string(c) + " ";
        out += "= " + to_string(h.rhs()) + "\n";
    }
    return out;
}

namespace {

template <class Vars>
std::string bi_json(const BiPoly<Vars>& p) {
    nlohmann::ordered_json doc;
    doc["variables"] = {Vars::first::name, Vars::second::name};
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        doc["terms"].push_back({{"exp", {e.first, e.second}}, {"coeff", to_string(c)}});
    }
    return doc.dump();
}

template <class Var>
std::string uni_json(const UniPoly<Var>& p) {
    nlohmann::ordered_json doc;
    doc["variables"] = {Var::name};
    doc["terms"] = nlohmann::ordered_json::array();
    const auto& coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (sgn(coeffs[i]) == 0) continue;
        doc["terms"].push_back({{"exp", {i}}, {"coeff", to_string(coeffs[i])}});
    }
    return doc.dump();
}

}  // namespace

std::string to_json(const TuttePoly& p) { return bi_json(p); }
std::string to_json(const CoboundaryPoly& p) { return bi_json(p); }
std::string to_json(const CharPoly& p) { return uni_json(p); }
std::string to_json(const TPoly& p) { return uni_json(p); }

}  // namespace symtutte
