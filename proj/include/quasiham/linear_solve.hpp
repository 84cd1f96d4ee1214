#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/error.hpp"
#include "quasiham/rational.hpp"
#include "quasiham/rationals.hpp"

namespace quasiham {

template <class V>
using Matrix = std::vector<std::vector<V>>;

namespace detail {

template <Quasifield F>
void require_field(const F& field) {
    if (!field.is_associative() || !field.is_commutative() || !field.left_unit())
        throw unsupported_error("linear solving needs a commutative field, got " + field.name());
}

/// Reduced row echelon form in place; returns pivot columns.
template <Quasifield F>
std::vector<std::size_t> row_reduce(const F& field, Matrix<scalar_t<F>>& a) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field.is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const auto inv = field.solve_left(a[r][c], *field.left_unit());
        for (auto& v : a[r]) v = field.mul(inv, v);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field.is_zero(a[i][c])) continue;
            const auto f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = field.sub(a[i][j], field.mul(f, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// A nonzero solution of M x = 0 over a commutative field, or nullopt when the
/// kernel is trivial. The solution sets the first free variable to 1.
template <Quasifield F>
std::optional<std::vector<scalar_t<F>>> nullspace_vector(const F& field, Matrix<scalar_t<F>> m, std::size_t cols) {
    detail::require_field(field);
    const auto pivots = detail::row_reduce(field, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == cols) return std::nullopt;
    std::vector<scalar_t<F>> x(cols, field.zero());
    x[free] = *field.left_unit();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(m[r][free]);
    return x;
}

/// Fraction-free (Bareiss) elimination over Z after clearing denominators row
/// by row; every intermediate entry is an integer minor, so no rational
/// arithmetic happens until the final back substitution.
inline std::optional<std::vector<Rational>> nullspace_vector(const Rationals&, const Matrix<Rational>& m, std::size_t cols) {
    const std::size_t rows = m.size();
    Matrix<mpz_class> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].numerator() * (l / m[i][j].denominator());
    }
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == cols) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = Rational(1);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        mpq_class acc = 0;
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (a[k][j] == 0 || x[j].is_zero()) continue;
            acc += mpq_class(a[k][j]) * x[j].value();
        }
        x[pc] = Rational(mpq_class(-acc / mpq_class(a[k][pc])));
    }
    return x;
}

template <Quasifield F>
std::size_t rank(const F& field, Matrix<scalar_t<F>> m) {
    detail::require_field(field);
    return detail::row_reduce(field, m).size();
}

/// Inverse of a square matrix over a commutative field, or nullopt if singular.
template <Quasifield F>
std::optional<Matrix<scalar_t<F>>> inverse(const F& field, const Matrix<scalar_t<F>>& m) {
    detail::require_field(field);
    const std::size_t n = m.size();
    Matrix<scalar_t<F>> aug(n, std::vector<scalar_t<F>>(2 * n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw domain_error("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = *field.left_unit();
    }
    const auto pivots = detail::row_reduce(field, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<scalar_t<F>> out(n, std::vector<scalar_t<F>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

/// y = M x for a column vector x.
template <Quasifield F>
std::vector<scalar_t<F>> apply(const F& field, const Matrix<scalar_t<F>>& m, const std::vector<scalar_t<F>>& x) {
    std::vector<scalar_t<F>> y(m.size(), field.zero());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = field.add(y[i], field.mul(m[i][j], x[j]));
    return y;
}

}  // namespace quasiham
