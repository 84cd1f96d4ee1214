#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "quasiham/error.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

/// Exact rational number. Always reduced with a positive denominator.
///
/// The total order is NOT the numeric order: values compare by (numerator,
/// denominator). Every map keyed on scalars therefore iterates in the same
/// order regardless of how the value was produced.
class Rational {
public:
    Rational() = default;
    Rational(long num) : q_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    int sign() const noexcept { return sgn(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw domain_error("division by zero rational");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_.get_num(), b.q_.get_num());
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        const int d = cmp(a.q_.get_den(), b.q_.get_den());
        if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Numeric comparison, for the few places that need magnitude.
    friend bool numerically_less(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Accepts `n`, `-n`, `n/d`, `+n/d`.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (!s.empty() && s.front() == '+') s.erase(0, 1);
        if (s.empty()) throw parse_error("empty rational literal");
        const auto slash = s.find('/');
        auto parse_int = [&](const std::string& part) {
            mpz_class z;
            std::string digits = part;
            if (digits.empty() || digits == "-") throw parse_error("malformed rational literal '" + std::string(text) + "'");
            for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i) {
                if (digits[i] < '0' || digits[i] > '9')
                    throw parse_error("malformed rational literal '" + std::string(text) + "'");
            }
            z.set_str(digits, 10);
            return z;
        };
        if (slash == std::string::npos) return Rational(parse_int(s), mpz_class(1));
        const mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(s.substr(0, slash)), den);
    }

    /// Random rational with |numerator| <= height and 1 <= denominator <= height.
    static Rational random(Rng& rng, long height) {
        const long num = static_cast<long>(uniform_int(rng, -height, height));
        const long den = static_cast<long>(uniform_int(rng, 1, height));
        return Rational(num, den);
    }

    std::size_t hash() const {
        const std::hash<std::string> h;
        return h(q_.get_num().get_str(16)) * 1000003u ^ h(q_.get_den().get_str(16));
    }

private:
    mpq_class q_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace quasiham
