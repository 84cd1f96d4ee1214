#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/rational.hpp"

namespace quasiham {

/// The field Q with arbitrary-precision numerators and denominators.
class Rationals {
public:
    using value_type = Rational;
    using subfield_type = Rationals;

    /// `height` bounds numerators and denominators of random samples.
    explicit Rationals(long height = 10) : height_(height) {}

    std::string name() const { return "Q"; }
    long sample_height() const { return height_; }

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    bool is_zero(const Rational& x) const { return x.is_zero(); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational inverse(const Rational& a) const {
        if (a.is_zero()) throw domain_error("inverse of zero in Q");
        return Rational(1) / a;
    }
    Rational solve_left(const Rational& a, const Rational& c) const {
        if (a.is_zero()) throw domain_error("solve_left with zero coefficient");
        return c / a;
    }
    Rational solve_right(const Rational& b, const Rational& c) const {
        if (b.is_zero()) throw domain_error("solve_right with zero coefficient");
        return c / b;
    }

    std::optional<Rational> right_unit() const { return one(); }
    std::optional<Rational> left_unit() const { return one(); }
    bool is_associative() const { return true; }
    bool is_commutative() const { return true; }
    bool is_finite() const { return false; }

    Rational random_element(Rng& rng) const { return Rational::random(rng, height_); }
    Rational random_nonzero(Rng& rng) const {
        Rational r;
        do {
            r = Rational::random(rng, height_);
        } while (r.is_zero());
        return r;
    }
    std::vector<Rational> probe_elements() const { return {Rational(1), Rational(-1), Rational(2), Rational(1, 2)}; }

    std::string format(const Rational& x) const { return x.to_string(); }
    Rational parse(std::string_view text) const { return Rational::parse(text); }

    Rationals subfield() const { return *this; }
    std::size_t dimension() const { return 1; }
    std::vector<Rational> basis() const { return {one()}; }
    std::vector<std::string> basis_labels() const { return {"1"}; }
    std::vector<Rational> expand(const Rational& x) const { return {x}; }
    Rational recombine(const std::vector<Rational>& c) const {
        if (c.size() != 1) throw domain_error("recombine expects 1 coefficient");
        return c[0];
    }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }

private:
    long height_;
};

}  // namespace quasiham
