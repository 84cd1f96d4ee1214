#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

struct Residue {
    std::uint32_t value = 0;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Parses an optionally signed decimal integer; throws parse_error otherwise.
inline long long parse_integer(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(0, 1);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw parse_error("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw parse_error("malformed integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') throw parse_error("malformed integer literal '" + s + "'");
    }
    return std::stoll(s);
}

/// The prime field F_p.
class PrimeField {
public:
    using value_type = Residue;
    using subfield_type = PrimeField;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw invalid_parameter("prime-field modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const { return "F_" + std::to_string(p_); }

    Residue zero() const { return {0}; }
    Residue one() const { return {1 % p_}; }
    Residue from_integer(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }
    bool is_zero(const Residue& x) const { check(x); return x.value == 0; }

    Residue add(const Residue& a, const Residue& b) const {
        check(a); check(b);
        return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + b.value) % p_)};
    }
    Residue neg(const Residue& a) const {
        check(a);
        return {a.value == 0 ? 0 : p_ - a.value};
    }
    Residue sub(const Residue& a, const Residue& b) const { return add(a, neg(b)); }
    Residue mul(const Residue& a, const Residue& b) const {
        check(a); check(b);
        return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) * b.value) % p_)};
    }
    Residue inverse(const Residue& a) const {
        if (is_zero(a)) throw domain_error("inverse of zero in " + name());
        // a^(p-2)
        std::uint64_t base = a.value, result = 1, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return {static_cast<std::uint32_t>(result)};
    }
    Residue solve_left(const Residue& a, const Residue& c) const {
        if (is_zero(a)) throw domain_error("solve_left with zero coefficient");
        return mul(inverse(a), c);
    }
    Residue solve_right(const Residue& b, const Residue& c) const {
        if (is_zero(b)) throw domain_error("solve_right with zero coefficient");
        return mul(c, inverse(b));
    }

    std::optional<Residue> right_unit() const { return one(); }
    std::optional<Residue> left_unit() const { return one(); }
    bool is_associative() const { return true; }
    bool is_commutative() const { return true; }
    bool is_finite() const { return true; }
    std::size_t order() const { return p_; }

    std::vector<Residue> elements() const {
        std::vector<Residue> out;
        out.reserve(p_);
        for (std::uint32_t i = 0; i < p_; ++i) out.push_back({i});
        return out;
    }
    std::vector<Residue> probe_elements() const {
        auto all = elements();
        all.erase(all.begin());
        return all;
    }
    Residue random_element(Rng& rng) const { return {static_cast<std::uint32_t>(uniform_index(rng, p_))}; }
    Residue random_nonzero(Rng& rng) const { return {static_cast<std::uint32_t>(1 + uniform_index(rng, p_ - 1))}; }

    std::string format(const Residue& x) const { check(x); return std::to_string(x.value); }
    Residue parse(std::string_view text) const { return from_integer(parse_integer(text)); }

    // Degree-one algebra over itself.
    PrimeField subfield() const { return *this; }
    std::size_t dimension() const { return 1; }
    std::vector<Residue> basis() const { return {one()}; }
    std::vector<std::string> basis_labels() const { return {"1"}; }
    std::vector<Residue> expand(const Residue& x) const { check(x); return {x}; }
    Residue recombine(const std::vector<Residue>& c) const {
        if (c.size() != 1) throw domain_error("recombine expects 1 coefficient");
        return c[0];
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    void check(const Residue& x) const {
        if (x.value >= p_) throw domain_error("residue " + std::to_string(x.value) + " is not an element of " + name());
    }

    std::uint32_t p_;
};

}  // namespace quasiham
