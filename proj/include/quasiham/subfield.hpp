#pragma once

#include <string>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

/// Coordinates of an algebra over a central subfield F0: basis i_1..i_s and
/// structure constants with i_p i_q = sum_r c[r][p][q] i_r.
template <SubfieldAlgebra A>
struct SubfieldStructure {
    using base_type = typename A::subfield_type;
    using base_value = scalar_t<base_type>;

    base_type base;
    std::size_t dimension;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<base_value>>> constants;  // [r][p][q]

    explicit SubfieldStructure(const A& alg) : base(alg.subfield()), dimension(alg.dimension()), labels(alg.basis_labels()) {
        const auto b = alg.basis();
        constants.assign(dimension, std::vector<std::vector<base_value>>(dimension, std::vector<base_value>(dimension, base.zero())));
        for (std::size_t p = 0; p < dimension; ++p)
            for (std::size_t q = 0; q < dimension; ++q) {
                const auto coeffs = alg.expand(alg.mul(b[p], b[q]));
                for (std::size_t r = 0; r < dimension; ++r) constants[r][p][q] = coeffs[r];
            }
    }

    /// Product computed purely from coordinates and structure constants.
    std::vector<base_value> multiply(const std::vector<base_value>& x, const std::vector<base_value>& y) const {
        std::vector<base_value> out(dimension, base.zero());
        for (std::size_t r = 0; r < dimension; ++r)
            for (std::size_t p = 0; p < dimension; ++p) {
                if (base.is_zero(x[p])) continue;
                for (std::size_t q = 0; q < dimension; ++q) {
                    if (base.is_zero(constants[r][p][q]) || base.is_zero(y[q])) continue;
                    out[r] = base.add(out[r], base.mul(base.mul(x[p], y[q]), constants[r][p][q]));
                }
            }
        return out;
    }
};

template <SubfieldAlgebra A>
std::vector<scalar_t<typename A::subfield_type>> expand_scalar(const A& alg, const scalar_t<A>& x) {
    return alg.expand(x);
}

template <SubfieldAlgebra A>
scalar_t<A> recombine_scalar(const A& alg, const std::vector<scalar_t<typename A::subfield_type>>& c) {
    return alg.recombine(c);
}

/// Exhaustive over basis pairs: the structure-constant product agrees with
/// the algebra's own multiplication.
template <SubfieldAlgebra A>
bool structure_constants_consistent(const A& alg, const SubfieldStructure<A>& st) {
    const auto b = alg.basis();
    for (std::size_t p = 0; p < st.dimension; ++p)
        for (std::size_t q = 0; q < st.dimension; ++q)
            if (st.multiply(alg.expand(b[p]), alg.expand(b[q])) != alg.expand(alg.mul(b[p], b[q]))) return false;
    return true;
}

/// F0 (embedded as multiples of the first basis vector, which is 1) commutes
/// with every basis element; `trials` random F0 elements are tried.
template <SubfieldAlgebra A>
bool subfield_is_central(const A& alg, Rng& rng, std::size_t trials) {
    const auto base = alg.subfield();
    const auto b = alg.basis();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<scalar_t<typename A::subfield_type>> c(alg.dimension(), base.zero());
        c[0] = base.random_element(rng);
        const auto f = alg.recombine(c);
        for (const auto& e : b)
            if (alg.mul(f, e) != alg.mul(e, f)) return false;
    }
    return true;
}

}  // namespace quasiham
