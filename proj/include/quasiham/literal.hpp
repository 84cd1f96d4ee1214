#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/rational.hpp"

namespace quasiham::literal {

/// Formats sum_k coeffs[k] * units[k]; units[0] is the empty (real) label.
/// Unit coefficients of +-1 are written without the digit: `1-2i+k`.
inline std::string format_components(const std::vector<Rational>& coeffs, const std::vector<std::string>& units) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = c.to_string();
        } else if (c == Rational(1)) {
            term = units[k];
        } else if (c == Rational(-1)) {
            term = "-" + units[k];
        } else {
            term = c.to_string() + units[k];
        }
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

/// Inverse of format_components, also accepting explicit zero and one
/// coefficients (`3/2+1i+0j-2k`) and repeated units (summed).
inline std::vector<Rational> parse_components(std::string_view text, const std::vector<std::string>& units) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty literal");
    std::vector<Rational> coeffs(units.size(), Rational(0));
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        const std::size_t cstart = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        const std::string coeff_text = s.substr(cstart, pos - cstart);
        const std::size_t ustart = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string unit = s.substr(ustart, pos - ustart);
        if (!unit.empty() && unit.front() == '*') unit.erase(0, 1);
        if (coeff_text.empty() && unit.empty()) throw parse_error("malformed literal '" + std::string(text) + "'");
        Rational c = coeff_text.empty() ? Rational(1) : Rational::parse(coeff_text);
        if (negative) c = -c;
        std::size_t k = 0;
        for (; k < units.size(); ++k)
            if (units[k] == unit) break;
        if (k == units.size()) throw parse_error("unknown unit '" + unit + "' in literal '" + std::string(text) + "'");
        coeffs[k] += c;
    }
    return coeffs;
}

}  // namespace quasiham::literal
