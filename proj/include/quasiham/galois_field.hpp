#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/prime_field.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

/// Element of GF(p^k), stored as the index sum c_i p^i of its coefficient
/// vector. Index order is the coefficient tuple read from the top degree down.
struct GfElement {
    std::uint32_t index = 0;
    friend auto operator<=>(const GfElement&, const GfElement&) = default;
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // low degree first

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b over F_p.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace detail

/// GF(p^k) = F_p[t]/(f) for an irreducible f, with full operation tables.
class GaloisField {
public:
    using value_type = GfElement;
    using subfield_type = PrimeField;

    static constexpr std::size_t max_order = 1024;

    /// `poly` lists coefficients low degree first; it is made monic and checked
    /// for irreducibility by trial division against every monic polynomial of
    /// degree at most half its own.
    GaloisField(std::uint32_t p, std::vector<std::uint32_t> poly) : base_(p) {
        for (auto& c : poly) c %= p;
        detail::trim(poly);
        if (poly.size() < 2) throw invalid_parameter("galois-field polynomial must have degree >= 1");
        const std::uint32_t lead_inv = base_.inverse({poly.back()}).value;
        for (auto& c : poly) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv % p);
        modulus_ = poly;
        degree_ = poly.size() - 1;
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < degree_; ++i) {
            q *= p;
            if (q > max_order) throw invalid_parameter("galois field order exceeds " + std::to_string(max_order));
        }
        q_ = static_cast<std::uint32_t>(q);
        if (!irreducible()) throw invalid_parameter("polynomial " + format_poly(modulus_) + " is reducible over F_" + std::to_string(p));
        build_tables();
    }

    static GaloisField gf4() { return GaloisField(2, {1, 1, 1}); }
    static GaloisField gf8() { return GaloisField(2, {1, 1, 0, 1}); }
    static GaloisField gf9() { return GaloisField(3, {1, 0, 1}); }
    static GaloisField gf25() { return GaloisField(5, {2, 1, 1}); }

    std::uint32_t characteristic() const { return base_.characteristic(); }
    std::size_t degree() const { return degree_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    GfElement zero() const { return {0}; }
    GfElement one() const { return {1}; }
    /// The class of t.
    GfElement generator() const { return from_coefficients({0, 1}); }
    bool is_zero(const GfElement& x) const { check(x); return x.index == 0; }

    GfElement add(const GfElement& a, const GfElement& b) const { check(a); check(b); return {add_[a.index * q_ + b.index]}; }
    GfElement neg(const GfElement& a) const { check(a); return {neg_[a.index]}; }
    GfElement sub(const GfElement& a, const GfElement& b) const { return add(a, neg(b)); }
    GfElement mul(const GfElement& a, const GfElement& b) const { check(a); check(b); return {mul_[a.index * q_ + b.index]}; }
    GfElement inverse(const GfElement& a) const {
        if (is_zero(a)) throw domain_error("inverse of zero in " + name());
        return {inv_[a.index]};
    }
    GfElement solve_left(const GfElement& a, const GfElement& c) const {
        if (is_zero(a)) throw domain_error("solve_left with zero coefficient");
        return mul(inverse(a), c);
    }
    GfElement solve_right(const GfElement& b, const GfElement& c) const {
        if (is_zero(b)) throw domain_error("solve_right with zero coefficient");
        return mul(c, inverse(b));
    }

    std::optional<GfElement> right_unit() const { return one(); }
    std::optional<GfElement> left_unit() const { return one(); }
    bool is_associative() const { return true; }
    bool is_commutative() const { return true; }
    bool is_finite() const { return true; }
    std::size_t order() const { return q_; }

    std::vector<GfElement> elements() const {
        std::vector<GfElement> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
        return out;
    }
    std::vector<GfElement> probe_elements() const {
        auto all = elements();
        all.erase(all.begin());
        return all;
    }
    GfElement random_element(Rng& rng) const { return {static_cast<std::uint32_t>(uniform_index(rng, q_))}; }
    GfElement random_nonzero(Rng& rng) const { return {static_cast<std::uint32_t>(1 + uniform_index(rng, q_ - 1))}; }

    std::vector<std::uint32_t> coefficients(const GfElement& x) const {
        check(x);
        std::vector<std::uint32_t> c(degree_);
        std::uint32_t v = x.index;
        for (std::size_t i = 0; i < degree_; ++i) {
            c[i] = v % characteristic();
            v /= characteristic();
        }
        return c;
    }
    GfElement from_coefficients(const std::vector<std::uint32_t>& c) const {
        detail::Poly reduced = detail::poly_mod(c, modulus_, characteristic());
        std::uint32_t idx = 0;
        for (std::size_t i = reduced.size(); i-- > 0;) idx = idx * characteristic() + reduced[i] % characteristic();
        return {idx};
    }

    /// Polynomial in t, top degree first: `2t^2+t+1`, `t`, `0`.
    std::string format(const GfElement& x) const { return format_poly(coefficients(x)); }

    GfElement parse(std::string_view text) const {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
        if (s.empty()) throw parse_error("empty " + name() + " literal");
        std::vector<long long> coeffs;
        std::size_t pos = 0;
        while (pos < s.size()) {
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            }
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long long c = 1;
            const bool has_digits = pos > start;
            if (has_digits) c = std::stoll(s.substr(start, pos - start));
            std::size_t exponent = 0;
            if (pos < s.size() && s[pos] == '*') ++pos;
            if (pos < s.size() && s[pos] == 't') {
                ++pos;
                exponent = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::size_t es = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == es) throw parse_error("missing exponent in '" + std::string(text) + "'");
                    exponent = std::stoul(s.substr(es, pos - es));
                }
            } else if (!has_digits) {
                throw parse_error("malformed " + name() + " literal '" + std::string(text) + "'");
            }
            if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
                throw parse_error("malformed " + name() + " literal '" + std::string(text) + "'");
            if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
            coeffs[exponent] += sign * c;
        }
        std::vector<std::uint32_t> reduced(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) reduced[i] = base_.from_integer(coeffs[i]).value;
        return from_coefficients(reduced);
    }

    PrimeField subfield() const { return base_; }
    std::size_t dimension() const { return degree_; }
    std::vector<GfElement> basis() const {
        std::vector<GfElement> out;
        for (std::size_t i = 0; i < degree_; ++i) {
            std::vector<std::uint32_t> c(degree_, 0);
            c[i] = 1;
            out.push_back(from_coefficients(c));
        }
        return out;
    }
    std::vector<std::string> basis_labels() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < degree_; ++i) out.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
        return out;
    }
    std::vector<Residue> expand(const GfElement& x) const {
        std::vector<Residue> out;
        for (auto c : coefficients(x)) out.push_back({c});
        return out;
    }
    GfElement recombine(const std::vector<Residue>& c) const {
        if (c.size() != degree_) throw domain_error("recombine expects " + std::to_string(degree_) + " coefficients");
        std::vector<std::uint32_t> raw;
        for (auto r : c) raw.push_back(r.value);
        return from_coefficients(raw);
    }

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.characteristic() == b.characteristic() && a.modulus_ == b.modulus_;
    }

private:
    void check(const GfElement& x) const {
        if (x.index >= q_) throw domain_error("index " + std::to_string(x.index) + " is not an element of " + name());
    }

    static std::string format_poly(std::vector<std::uint32_t> c) {
        detail::trim(c);
        if (c.empty()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
            } else {
                if (c[i] != 1) out += std::to_string(c[i]);
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    bool irreducible() const {
        const std::uint32_t p = characteristic();
        for (std::size_t d = 1; d <= degree_ / 2; ++d) {
            // every monic polynomial of degree d
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                detail::Poly divisor(d + 1, 0);
                std::uint64_t v = code;
                for (std::size_t i = 0; i < d; ++i) {
                    divisor[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                divisor[d] = 1;
                if (detail::poly_mod(modulus_, divisor, p).empty()) return false;
            }
        }
        return true;
    }

    void build_tables() {
        const std::uint32_t p = characteristic();
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        std::vector<std::vector<std::uint32_t>> coeff(q_);
        for (std::uint32_t i = 0; i < q_; ++i) {
            std::vector<std::uint32_t> c(degree_);
            std::uint32_t v = i;
            for (std::size_t k = 0; k < degree_; ++k) {
                c[k] = v % p;
                v /= p;
            }
            coeff[i] = c;
        }
        auto encode = [&](const detail::Poly& c) {
            std::uint32_t idx = 0;
            for (std::size_t k = c.size(); k-- > 0;) idx = idx * p + c[k];
            return idx;
        };
        for (std::uint32_t a = 0; a < q_; ++a) {
            detail::Poly n(degree_);
            for (std::size_t k = 0; k < degree_; ++k) n[k] = (p - coeff[a][k]) % p;
            neg_[a] = encode(n);
            for (std::uint32_t b = 0; b < q_; ++b) {
                detail::Poly s(degree_);
                for (std::size_t k = 0; k < degree_; ++k) s[k] = (coeff[a][k] + coeff[b][k]) % p;
                add_[a * q_ + b] = encode(s);
                detail::Poly prod(2 * degree_, 0);
                for (std::size_t i = 0; i < degree_; ++i)
                    for (std::size_t j = 0; j < degree_; ++j)
                        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(coeff[a][i]) * coeff[b][j]) % p);
                mul_[a * q_ + b] = encode(detail::poly_mod(prod, modulus_, p));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }

    PrimeField base_;
    std::vector<std::uint32_t> modulus_;
    std::size_t degree_ = 1;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace quasiham
