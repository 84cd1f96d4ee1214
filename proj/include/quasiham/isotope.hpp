#pragma once

#include <string>
#include <vector>

#include "quasiham/cayley_table.hpp"
#include "quasiham/error.hpp"
#include "quasiham/galois_field.hpp"
#include "quasiham/linear_solve.hpp"

namespace quasiham {

/// The linear data behind an isotope x o y = U^{-1}((U x)(V y)), as matrices
/// over the prime field acting on coefficient columns (low degree first).
struct IsotopeData {
    GaloisField base;
    GfElement a;
    Matrix<Residue> u, u_inverse, v;
};

namespace detail {

inline std::vector<Residue> coords(const GaloisField& f, GfElement x) { return f.expand(x); }

inline Matrix<Residue> identity_matrix(const PrimeField& fp, std::size_t n) {
    Matrix<Residue> m(n, std::vector<Residue>(n, fp.zero()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = fp.one();
    return m;
}

inline Matrix<Residue> multiply(const PrimeField& fp, const Matrix<Residue>& a, const Matrix<Residue>& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix<Residue> out(n, std::vector<Residue>(m, fp.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] = fp.add(out[i][j], fp.mul(a[i][l], b[l][j]));
    return out;
}

}  // namespace detail

/// Builds the linear maps for the isotope of `base` along `a`. U swaps 1 and a
/// and fixes the remaining vectors of a basis completed greedily from the
/// standard basis 1, t, t^2, ...; V defaults to the identity.
inline IsotopeData isotope_data(const GaloisField& base, GfElement a, std::optional<Matrix<Residue>> v = std::nullopt) {
    const PrimeField fp = base.subfield();
    const std::size_t k = base.degree();
    if (base.mul(a, a) == base.one())
        throw degenerate_construction("isotope parameter a = " + base.format(a) + " satisfies a^2 = 1; the right unit would also be a left unit");
    const auto ca = detail::coords(base, a);
    bool in_prime_subfield = true;
    for (std::size_t i = 1; i < k; ++i) in_prime_subfield = in_prime_subfield && ca[i].value == 0;
    if (in_prime_subfield) throw invalid_parameter("isotope parameter a = " + base.format(a) + " lies in the prime subfield");

    Matrix<Residue> vm = v ? *v : detail::identity_matrix(fp, k);
    if (vm.size() != k) throw invalid_parameter("V must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
    for (const auto& row : vm)
        if (row.size() != k) throw invalid_parameter("V must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
    if (!inverse(fp, vm)) throw invalid_parameter("V is not invertible");
    if (apply(fp, vm, detail::coords(base, base.one())) != detail::coords(base, base.one()))
        throw invalid_parameter("V must fix 1");
    if (apply(fp, vm, ca) != ca) throw invalid_parameter("V must fix a");

    // Columns of P: the new basis 1, a, then standard vectors that keep it independent.
    std::vector<std::vector<Residue>> basis{detail::coords(base, base.one()), ca};
    for (std::size_t i = 0; i < k && basis.size() < k; ++i) {
        std::vector<Residue> e(k, fp.zero());
        e[i] = fp.one();
        auto trial = basis;
        trial.push_back(e);
        if (rank(fp, trial) == trial.size()) basis = std::move(trial);
    }
    Matrix<Residue> p(k, std::vector<Residue>(k));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t row = 0; row < k; ++row) p[row][col] = basis[col][row];
    Matrix<Residue> swap = detail::identity_matrix(fp, k);
    std::swap(swap[0], swap[1]);
    const auto p_inv = *inverse(fp, p);
    Matrix<Residue> u = detail::multiply(fp, detail::multiply(fp, p, swap), p_inv);
    auto u_inv = *inverse(fp, u);
    return IsotopeData{base, a, std::move(u), std::move(u_inv), std::move(vm)};
}

/// x o y = U^{-1}((U x)(V y)) evaluated directly in the base field.
inline GfElement isotope_product(const IsotopeData& d, GfElement x, GfElement y) {
    const PrimeField fp = d.base.subfield();
    const GfElement ux = d.base.recombine(apply(fp, d.u, d.base.expand(x)));
    const GfElement vy = d.base.recombine(apply(fp, d.v, d.base.expand(y)));
    return d.base.recombine(apply(fp, d.u_inverse, d.base.expand(d.base.mul(ux, vy))));
}

/// Tabulates the isotope as a Cayley-table quasifield. Element indices and
/// literals are those of the base field; 1 is a right unit and not a left unit.
inline CayleyTable make_isotope(const IsotopeData& d) {
    const auto n = static_cast<std::uint32_t>(d.base.order());
    IndexTable add(n, std::vector<std::uint32_t>(n)), mul(n, std::vector<std::uint32_t>(n));
    std::vector<std::string> names(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        names[x] = d.base.format({x});
        for (std::uint32_t y = 0; y < n; ++y) {
            add[x][y] = d.base.add({x}, {y}).index;
            mul[x][y] = isotope_product(d, {x}, {y}).index;
        }
    }
    return CayleyTable(std::move(add), std::move(mul), std::move(names),
                       "isotope(" + d.base.name() + ", a=" + d.base.format(d.a) + ")");
}

inline CayleyTable make_isotope(const GaloisField& base, GfElement a, std::optional<Matrix<Residue>> v = std::nullopt) {
    return make_isotope(isotope_data(base, a, std::move(v)));
}

}  // namespace quasiham
