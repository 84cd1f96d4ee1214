#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/random.hpp"

namespace quasiham {

/// A quasifield: an additive abelian group with a multiplication that
/// distributes on both sides and whose nonzero elements form a quasigroup.
/// Associativity and units are properties to be queried, not assumed.
///
/// Values are plain regular types ordered by a fixed total order; the algebra
/// object supplies every operation, so runtime-parameterised algebras (a prime
/// modulus, a Cayley table) share one interface with the fixed ones.
template <class A>
concept Quasifield = requires(const A& alg, const typename A::value_type& x, Rng& rng, std::string_view text) {
    typename A::value_type;
    requires std::regular<typename A::value_type>;
    requires std::totally_ordered<typename A::value_type>;
    { alg.name() } -> std::convertible_to<std::string>;
    { alg.zero() } -> std::same_as<typename A::value_type>;
    { alg.is_zero(x) } -> std::same_as<bool>;
    { alg.add(x, x) } -> std::same_as<typename A::value_type>;
    { alg.neg(x) } -> std::same_as<typename A::value_type>;
    { alg.sub(x, x) } -> std::same_as<typename A::value_type>;
    { alg.mul(x, x) } -> std::same_as<typename A::value_type>;
    { alg.solve_left(x, x) } -> std::same_as<typename A::value_type>;
    { alg.solve_right(x, x) } -> std::same_as<typename A::value_type>;
    { alg.right_unit() } -> std::same_as<std::optional<typename A::value_type>>;
    { alg.left_unit() } -> std::same_as<std::optional<typename A::value_type>>;
    { alg.is_associative() } -> std::same_as<bool>;
    { alg.is_commutative() } -> std::same_as<bool>;
    { alg.is_finite() } -> std::same_as<bool>;
    { alg.format(x) } -> std::convertible_to<std::string>;
    { alg.parse(text) } -> std::same_as<typename A::value_type>;
    { alg.random_element(rng) } -> std::same_as<typename A::value_type>;
    { alg.random_nonzero(rng) } -> std::same_as<typename A::value_type>;
    { alg.probe_elements() } -> std::same_as<std::vector<typename A::value_type>>;
};

/// Finite quasifields additionally enumerate their elements (zero first).
template <class A>
concept FiniteQuasifield = Quasifield<A> && requires(const A& alg) {
    { alg.order() } -> std::same_as<std::size_t>;
    { alg.elements() } -> std::same_as<std::vector<typename A::value_type>>;
};

/// Finite-dimensional algebras over a central subfield F0: expose a basis and
/// coordinates, which is everything the linearisation of dependence problems needs.
template <class A>
concept SubfieldAlgebra = Quasifield<A> && requires(const A& alg, const typename A::value_type& x,
                                                    const std::vector<typename A::subfield_type::value_type>& coeffs) {
    typename A::subfield_type;
    requires Quasifield<typename A::subfield_type>;
    { alg.subfield() } -> std::same_as<typename A::subfield_type>;
    { alg.dimension() } -> std::same_as<std::size_t>;
    { alg.basis() } -> std::same_as<std::vector<typename A::value_type>>;
    { alg.basis_labels() } -> std::same_as<std::vector<std::string>>;
    { alg.expand(x) } -> std::same_as<std::vector<typename A::subfield_type::value_type>>;
    { alg.recombine(coeffs) } -> std::same_as<typename A::value_type>;
};

template <class A>
using scalar_t = typename A::value_type;

}  // namespace quasiham
