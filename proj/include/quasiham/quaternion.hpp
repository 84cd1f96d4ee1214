#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/literal.hpp"
#include "quasiham/rational.hpp"
#include "quasiham/rationals.hpp"

namespace quasiham {

/// Rational quaternion a + b i + c j + d k.
struct Quaternion {
    std::array<Rational, 4> c{};

    static Quaternion real(const Rational& r) { return {{r, Rational(0), Rational(0), Rational(0)}}; }
    static Quaternion unit(std::size_t k) {
        Quaternion q;
        q.c[k] = Rational(1);
        return q;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
    Rational norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}};
    }
    Quaternion operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        const auto& [a1, b1, c1, d1] = x.c;
        const auto& [a2, b2, c2, d2] = y.c;
        return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                 a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                 a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                 a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
    }
    Quaternion scaled(const Rational& r) const { return {{c[0] * r, c[1] * r, c[2] * r, c[3] * r}}; }
    Quaternion inverse() const {
        if (is_zero()) throw domain_error("inverse of zero quaternion");
        return conj().scaled(Rational(1) / norm());
    }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    friend auto operator<=>(const Quaternion&, const Quaternion&) = default;
};

/// Rational octonion as a Cayley-Dickson pair of quaternions (lo, hi), with
/// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)). Basis e0..e3 = (1,i,j,k; 0),
/// e4..e7 = (0; 1,i,j,k).
struct Octonion {
    Quaternion lo{}, hi{};

    static Octonion real(const Rational& r) { return {Quaternion::real(r), Quaternion{}}; }
    static Octonion unit(std::size_t k) {
        Octonion o;
        if (k < 4) o.lo.c[k] = Rational(1);
        else o.hi.c[k - 4] = Rational(1);
        return o;
    }
    const Rational& component(std::size_t k) const { return k < 4 ? lo.c[k] : hi.c[k - 4]; }
    Rational& component(std::size_t k) { return k < 4 ? lo.c[k] : hi.c[k - 4]; }

    bool is_zero() const { return lo.is_zero() && hi.is_zero(); }
    Octonion conj() const { return {lo.conj(), -hi}; }
    Rational norm() const { return lo.norm() + hi.norm(); }

    friend Octonion operator+(const Octonion& x, const Octonion& y) { return {x.lo + y.lo, x.hi + y.hi}; }
    friend Octonion operator-(const Octonion& x, const Octonion& y) { return {x.lo - y.lo, x.hi - y.hi}; }
    Octonion operator-() const { return {-lo, -hi}; }
    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        return {x.lo * y.lo - y.hi.conj() * x.hi, y.hi * x.lo + x.hi * y.lo.conj()};
    }
    Octonion scaled(const Rational& r) const { return {lo.scaled(r), hi.scaled(r)}; }
    Octonion inverse() const {
        if (is_zero()) throw domain_error("inverse of zero octonion");
        return conj().scaled(Rational(1) / norm());
    }

    friend bool operator==(const Octonion&, const Octonion&) = default;
    friend auto operator<=>(const Octonion&, const Octonion&) = default;
};

namespace detail {

/// Shared implementation of the two normed division algebras over Q. Solving
/// uses the norm inverse: a^{-1}(a c) = c holds in both by alternativity.
template <class T, std::size_t Dim>
class NormedAlgebra {
public:
    using value_type = T;
    using subfield_type = Rationals;

    explicit NormedAlgebra(long height) : height_(height) {}

    T zero() const { return T{}; }
    T one() const { return T::real(Rational(1)); }
    bool is_zero(const T& x) const { return x.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T neg(const T& a) const { return -a; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T conjugate(const T& a) const { return a.conj(); }
    T inverse(const T& a) const { return a.inverse(); }
    T solve_left(const T& a, const T& c) const {
        if (a.is_zero()) throw domain_error("solve_left with zero coefficient");
        return a.inverse() * c;
    }
    T solve_right(const T& b, const T& c) const {
        if (b.is_zero()) throw domain_error("solve_right with zero coefficient");
        return c * b.inverse();
    }

    std::optional<T> right_unit() const { return one(); }
    std::optional<T> left_unit() const { return one(); }
    bool is_commutative() const { return false; }
    bool is_finite() const { return false; }

    T random_element(Rng& rng) const {
        T x;
        for (std::size_t k = 0; k < Dim; ++k) component(x, k) = Rational::random(rng, height_);
        return x;
    }
    T random_nonzero(Rng& rng) const {
        T x;
        do {
            x = random_element(rng);
        } while (x.is_zero());
        return x;
    }
    /// Basis units and their negatives, 1 first.
    std::vector<T> probe_elements() const {
        std::vector<T> out;
        for (std::size_t k = 0; k < Dim; ++k) out.push_back(T::unit(k));
        for (std::size_t k = 0; k < Dim; ++k) out.push_back(-T::unit(k));
        return out;
    }

    Rationals subfield() const { return Rationals(height_); }
    std::size_t dimension() const { return Dim; }
    std::vector<T> basis() const {
        std::vector<T> out;
        for (std::size_t k = 0; k < Dim; ++k) out.push_back(T::unit(k));
        return out;
    }
    std::vector<Rational> expand(const T& x) const {
        std::vector<Rational> out;
        for (std::size_t k = 0; k < Dim; ++k) out.push_back(component(x, k));
        return out;
    }
    T recombine(const std::vector<Rational>& c) const {
        if (c.size() != Dim) throw domain_error("recombine expects " + std::to_string(Dim) + " coefficients");
        T x;
        for (std::size_t k = 0; k < Dim; ++k) component(x, k) = c[k];
        return x;
    }
    long sample_height() const { return height_; }

protected:
    static const Rational& component(const T& x, std::size_t k) {
        if constexpr (Dim == 4) return x.c[k];
        else return x.component(k);
    }
    static Rational& component(T& x, std::size_t k) {
        if constexpr (Dim == 4) return x.c[k];
        else return x.component(k);
    }

    long height_;
};

}  // namespace detail

class Quaternions : public detail::NormedAlgebra<Quaternion, 4> {
public:
    explicit Quaternions(long height = 10) : NormedAlgebra(height) {}
    std::string name() const { return "H(Q)"; }
    bool is_associative() const { return true; }
    std::vector<std::string> basis_labels() const { return {"1", "i", "j", "k"}; }
    std::string format(const Quaternion& x) const {
        return literal::format_components({x.c[0], x.c[1], x.c[2], x.c[3]}, units());
    }
    Quaternion parse(std::string_view text) const {
        const auto v = literal::parse_components(text, units());
        return {{v[0], v[1], v[2], v[3]}};
    }
    friend bool operator==(const Quaternions&, const Quaternions&) { return true; }

private:
    static std::vector<std::string> units() { return {"", "i", "j", "k"}; }
};

class Octonions : public detail::NormedAlgebra<Octonion, 8> {
public:
    explicit Octonions(long height = 10) : NormedAlgebra(height) {}
    std::string name() const { return "O(Q)"; }
    bool is_associative() const { return false; }
    std::vector<std::string> basis_labels() const { return {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}; }
    std::string format(const Octonion& x) const {
        std::vector<Rational> c;
        for (std::size_t k = 0; k < 8; ++k) c.push_back(x.component(k));
        return literal::format_components(c, units());
    }
    Octonion parse(std::string_view text) const {
        const auto v = literal::parse_components(text, units());
        Octonion o;
        for (std::size_t k = 0; k < 8; ++k) o.component(k) = v[k];
        return o;
    }
    friend bool operator==(const Octonions&, const Octonions&) { return true; }

private:
    static std::vector<std::string> units() { return {"", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}; }
};

}  // namespace quasiham
