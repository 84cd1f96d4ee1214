#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/error.hpp"
#include "quasiham/finvec.hpp"
#include "quasiham/hamming.hpp"
#include "quasiham/linear_solve.hpp"
#include "quasiham/random.hpp"
#include "quasiham/subfield.hpp"

namespace quasiham {

// ---- certificates ----------------------------------------------------------

/// Line-oriented result of a classification check.
struct Certificate {
    std::string claim;
    bool verdict = false;
    std::string mode;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;

    void count(const std::string& key, std::uint64_t value) { counts.emplace_back(key, value); }

    std::string to_text() const {
        std::ostringstream os;
        os << "claim: " << claim << "\n";
        os << "verdict: " << (verdict ? "pass" : "fail") << "\n";
        os << "mode: " << mode << "\n";
        if (seed) os << "seed: " << *seed << "\n";
        for (const auto& [k, v] : counts) os << "count." << k << ": " << v << "\n";
        for (const auto& n : notes) os << "note: " << n << "\n";
        os << "witnesses: [";
        for (std::size_t i = 0; i < witnesses.size(); ++i) os << (i ? "; " : "") << witnesses[i];
        os << "]\n";
        return os.str();
    }
};

template <Quasifield A>
std::string format_dense(const A& alg, const DenseVec<scalar_t<A>>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + alg.format(v[i]);
    return out + ")";
}

/// Single-line rendering of a FinVec: {col: value, ...}.
template <Quasifield A>
std::string format_inline(const A& alg, const FinVec<scalar_t<A>>& x) {
    std::string out = "{";
    bool first = true;
    for (const auto& [c, v] : x) {
        out += (first ? "" : ", ") + format_column(alg, c) + ": " + alg.format(v);
        first = false;
    }
    return out + "}";
}

/// Quaternion/octonion conjugation; other algebras have none.
template <Quasifield A>
scalar_t<A> conjugate(const A& alg, const scalar_t<A>& x) {
    if constexpr (requires { alg.conjugate(x); }) {
        return alg.conjugate(x);
    } else {
        throw unsupported_error("conjugation is defined for quaternions and octonions, not " + alg.name());
    }
}

// ---- isometries ------------------------------------------------------------

/// x_i e_i  |->  value_map(x_i) alpha_i e_{pi(i)}. Explicit entries take
/// precedence over the rule; without either a column is fixed with alpha = 1.
template <class V>
struct LinearIsometry {
    std::map<Column<V>, std::pair<Column<V>, V>> table;
    std::function<std::pair<Column<V>, V>(const Column<V>&)> rule;
    std::function<V(const V&)> value_map;
    V default_alpha{};

    std::pair<Column<V>, V> image(const Column<V>& c) const {
        if (auto it = table.find(c); it != table.end()) return it->second;
        if (rule) return rule(c);
        return {c, default_alpha};
    }
};

template <Quasifield A>
LinearIsometry<scalar_t<A>> identity_isometry(const A& alg) {
    const auto unit = alg.right_unit();
    if (!unit) throw unsupported_error(alg.name() + " has no right unit for the default multiplier");
    LinearIsometry<scalar_t<A>> iso;
    iso.default_alpha = *unit;
    return iso;
}

template <Quasifield A>
FinVec<scalar_t<A>> apply_isometry(const A& alg, const LinearIsometry<scalar_t<A>>& iso, const FinVec<scalar_t<A>>& x) {
    FinVec<scalar_t<A>> out;
    for (const auto& [c, v] : x) {
        const auto [target, alpha] = iso.image(c);
        if (alg.is_zero(alpha)) throw invalid_isometry("zero multiplier at " + format_column(alg, c));
        if (out.contains_column(target))
            throw invalid_isometry("two coordinates map to " + format_column(alg, target));
        const auto value = iso.value_map ? iso.value_map(v) : v;
        out.set(alg, target, alg.mul(value, alpha));
    }
    return out;
}

// ---- choice functions -------------------------------------------------------

/// Representative c_a * a of each line; unlisted lines use c_a = 1.
template <class V>
struct ChoiceFunction {
    std::map<Column<V>, V> representative;
};

template <Quasifield A>
scalar_t<A> choice_coefficient(const A& alg, const ChoiceFunction<scalar_t<A>>& e, const Column<scalar_t<A>>& c) {
    if (auto it = e.representative.find(c); it != e.representative.end()) {
        if (alg.is_zero(it->second)) throw invalid_parameter("choice function picks the zero vector on " + format_column(alg, c));
        return it->second;
    }
    const auto unit = alg.right_unit();
    if (!unit) throw unsupported_error(alg.name() + " has no unit for the default representative");
    return *unit;
}

/// sum_a x_a (c_a a): zero exactly on the code built from the choice function.
template <Quasifield A>
DenseVec<scalar_t<A>> choice_syndrome(const HammingCode<A>& code, const ChoiceFunction<scalar_t<A>>& e, const FinVec<scalar_t<A>>& x) {
    detail::require_canonical_keys(code, x);
    const auto& alg = code.algebra();
    DenseVec<scalar_t<A>> z(code.rows(), alg.zero());
    for (const auto& [c, v] : x) {
        const auto rep = scale_left(alg, choice_coefficient(alg, e, c), c.entries);
        for (std::size_t g = 0; g < z.size(); ++g) z[g] = alg.add(z[g], alg.mul(v, rep[g]));
    }
    return z;
}

template <Quasifield A>
bool choice_contains(const HammingCode<A>& code, const ChoiceFunction<scalar_t<A>>& e, const FinVec<scalar_t<A>>& x) {
    return is_zero_vector(code.algebra(), choice_syndrome(code, e, x));
}

/// Every vector of F^n, n = number of columns, as a FinVec; requires q^n <= budget.
template <Quasifield A>
std::vector<FinVec<scalar_t<A>>> enumerate_ambient(const HammingCode<A>& code, std::uint64_t budget = std::uint64_t{1} << 20) {
    if constexpr (FiniteQuasifield<A>) {
        const auto& alg = code.algebra();
        const auto cols = enumerate_columns(code);
        const auto elems = alg.elements();
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (total > budget / elems.size()) throw unsupported_error("ambient space exceeds budget " + std::to_string(budget));
            total *= elems.size();
        }
        std::vector<FinVec<scalar_t<A>>> out;
        out.reserve(total);
        std::vector<std::size_t> digits(cols.size(), 0);
        for (std::uint64_t i = 0; i < total; ++i) {
            FinVec<scalar_t<A>> x;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (digits[k]) x.set(alg, cols[k], elems[digits[k]]);
            out.push_back(std::move(x));
            for (std::size_t k = 0; k < cols.size() && ++digits[k] == elems.size(); ++k) digits[k] = 0;
        }
        return out;
    } else {
        throw unsupported_error("cannot enumerate the ambient space over an infinite algebra");
    }
}

/// All codewords of the code built from the choice function, in FinVec order.
template <Quasifield A>
std::set<FinVec<scalar_t<A>>> enumerate_choice_code(const HammingCode<A>& code, const ChoiceFunction<scalar_t<A>>& e,
                                                    std::uint64_t budget = std::uint64_t{1} << 20) {
    std::set<FinVec<scalar_t<A>>> out;
    for (auto& x : enumerate_ambient(code, budget))
        if (choice_contains(code, e, x)) out.insert(std::move(x));
    return out;
}

/// pi = identity and alpha_a = c1_a (c2_a)^{-1}: then x_a c1_a = (x_a alpha_a) c2_a,
/// so x satisfies the E1 equations iff its image satisfies the E2 equations.
template <Quasifield A>
LinearIsometry<scalar_t<A>> choice_isomorphism(const HammingCode<A>& code, const ChoiceFunction<scalar_t<A>>& e1,
                                               const ChoiceFunction<scalar_t<A>>& e2) {
    const auto& alg = code.algebra();
    if (!alg.is_associative()) throw unsupported_error("choice isomorphisms need an associative algebra; " + alg.name() + " is not");
    auto iso = identity_isometry(alg);
    std::set<Column<scalar_t<A>>> touched;
    for (const auto& [c, _] : e1.representative) touched.insert(c);
    for (const auto& [c, _] : e2.representative) touched.insert(c);
    for (const auto& c : touched) {
        if (!is_canonical_column(code, c)) throw domain_error(format_column(alg, c) + " is not a canonical column");
        const auto alpha = alg.solve_right(choice_coefficient(alg, e2, c), choice_coefficient(alg, e1, c));
        iso.table.emplace(c, std::make_pair(c, alpha));
    }
    return iso;
}

// ---- basis changes ----------------------------------------------------------

/// Invertible matrix acting on row vectors, x |-> x M, built from elementary
/// row operations.
template <class V>
struct BasisChange {
    Matrix<V> matrix;
    std::vector<std::string> provenance;
};

template <Quasifield A>
BasisChange<scalar_t<A>> basis_identity(const A& alg, std::size_t m) {
    const auto unit = alg.left_unit();
    if (!unit) throw unsupported_error(alg.name() + " has no unit");
    BasisChange<scalar_t<A>> b;
    b.matrix.assign(m, std::vector<scalar_t<A>>(m, alg.zero()));
    for (std::size_t i = 0; i < m; ++i) b.matrix[i][i] = *unit;
    return b;
}

template <Quasifield A>
void basis_swap(const A&, BasisChange<scalar_t<A>>& b, std::size_t r1, std::size_t r2) {
    if (r1 >= b.matrix.size() || r2 >= b.matrix.size() || r1 == r2) throw invalid_parameter("swap needs two distinct rows in range");
    std::swap(b.matrix[r1], b.matrix[r2]);
    b.provenance.push_back("swap(" + std::to_string(r1) + "," + std::to_string(r2) + ")");
}

/// row r <- lambda * row r
template <Quasifield A>
void basis_scale(const A& alg, BasisChange<scalar_t<A>>& b, std::size_t r, const scalar_t<A>& lambda) {
    if (r >= b.matrix.size()) throw invalid_parameter("row out of range");
    if (alg.is_zero(lambda)) throw invalid_parameter("scaling by zero is not invertible");
    for (auto& v : b.matrix[r]) v = alg.mul(lambda, v);
    b.provenance.push_back("scale(" + std::to_string(r) + "," + alg.format(lambda) + ")");
}

/// row dst <- row dst + lambda * row src
template <Quasifield A>
void basis_add(const A& alg, BasisChange<scalar_t<A>>& b, std::size_t dst, std::size_t src, const scalar_t<A>& lambda) {
    if (dst >= b.matrix.size() || src >= b.matrix.size() || dst == src) throw invalid_parameter("add needs two distinct rows in range");
    for (std::size_t j = 0; j < b.matrix.size(); ++j) b.matrix[dst][j] = alg.add(b.matrix[dst][j], alg.mul(lambda, b.matrix[src][j]));
    b.provenance.push_back("add(" + std::to_string(dst) + "," + std::to_string(src) + "," + alg.format(lambda) + ")");
}

template <Quasifield A>
BasisChange<scalar_t<A>> random_basis_change(const A& alg, std::size_t m, std::size_t ops, Rng& rng) {
    auto b = basis_identity(alg, m);
    for (std::size_t k = 0; k < ops; ++k) {
        const std::size_t r1 = uniform_index(rng, m);
        std::size_t r2 = uniform_index(rng, m - 1);
        if (r2 >= r1) ++r2;
        switch (uniform_index(rng, 3)) {
            case 0: basis_swap(alg, b, r1, r2); break;
            case 1: basis_scale(alg, b, r1, alg.random_nonzero(rng)); break;
            default: basis_add(alg, b, r1, r2, alg.random_nonzero(rng)); break;
        }
    }
    return b;
}

/// (x M)_j = sum_i x_i M_ij
template <Quasifield A>
DenseVec<scalar_t<A>> row_times(const A& alg, const DenseVec<scalar_t<A>>& x, const Matrix<scalar_t<A>>& m) {
    DenseVec<scalar_t<A>> out(m.empty() ? 0 : m[0].size(), alg.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (alg.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = alg.add(out[j], alg.mul(x[i], m[i][j]));
    }
    return out;
}

/// Each column a goes to the normalisation y_a pi(a) of a M, with alpha_a = y_a:
/// sum x_a a = 0 gives sum (x_a y_a) pi(a) = 0 by associativity. Finite
/// algebras get an explicit table; infinite ones a lazy rule.
template <Quasifield A>
LinearIsometry<scalar_t<A>> basis_change_isomorphism(const HammingCode<A>& code, const BasisChange<scalar_t<A>>& b) {
    const auto& alg = code.algebra();
    if (!alg.is_associative()) throw unsupported_error("basis-change isomorphisms need an associative algebra; " + alg.name() + " is not");
    if (b.matrix.size() != code.rows()) throw invalid_parameter("basis change has the wrong size");
    auto iso = identity_isometry(alg);
    auto rule = [code, m = b.matrix](const Column<scalar_t<A>>& c) {
        const auto& alg = code.algebra();
        const auto z = row_times(alg, c.entries, m);
        if (is_zero_vector(alg, z)) throw invalid_parameter("singular basis change: " + format_column(alg, c) + " maps to 0");
        const auto n = normalize(code, z);
        return std::make_pair(n.column, n.scalar);
    };
    if constexpr (FiniteQuasifield<A>) {
        std::set<Column<scalar_t<A>>> targets;
        for (const auto& c : enumerate_columns(code)) {
            auto img = rule(c);
            if (!targets.insert(img.first).second) throw invalid_parameter("basis change is not injective on columns");
            iso.table.emplace(c, std::move(img));
        }
    } else {
        iso.rule = rule;
    }
    return iso;
}

// ---- isometry checks -----------------------------------------------------

/// The E-codeword whose rescaling (x_a c_a)_a is the plain codeword c.
template <Quasifield A>
FinVec<scalar_t<A>> choice_codeword_from(const HammingCode<A>& code, const ChoiceFunction<scalar_t<A>>& e, const FinVec<scalar_t<A>>& c) {
    const auto& alg = code.algebra();
    FinVec<scalar_t<A>> x;
    for (const auto& [col, v] : c) x.set(alg, col, alg.solve_right(choice_coefficient(alg, e, col), v));
    return x;
}

template <Quasifield A>
ChoiceFunction<scalar_t<A>> random_choice_function(const HammingCode<A>& code, const std::vector<Column<scalar_t<A>>>& cols, Rng& rng) {
    ChoiceFunction<scalar_t<A>> e;
    for (const auto& c : cols)
        if (coin(rng, 1, 2)) e.representative[c] = code.algebra().random_nonzero(rng);
    return e;
}

/// Codes from different choice functions are linearly isomorphic. Finite
/// codes with few choice functions are compared as full codeword sets for
/// every ordered pair; otherwise random pairs are checked on random codewords
/// in both directions.
template <Quasifield A>
Certificate choice_isomorphism_check(const HammingCode<A>& code, std::size_t trials = 100, std::uint64_t seed = 1,
                                     std::uint64_t budget = std::uint64_t{1} << 20, std::uint64_t max_functions = 64) {
    using V = scalar_t<A>;
    const auto& alg = code.algebra();
    Certificate cert;
    cert.claim = "Hamming codes over " + alg.name() + " from different choice functions are linearly isomorphic";
    std::uint64_t pairs = 0, failures = 0;
    auto fail = [&](const std::string& w) {
        if (failures++ == 0) cert.witnesses.push_back(w);
    };
    if constexpr (FiniteQuasifield<A>) {
        const auto cols = enumerate_columns(code);
        const auto nonzero = alg.probe_elements();
        std::uint64_t functions = 1, ambient = 1;
        bool small = true;
        for (std::size_t k = 0; k < cols.size() && small; ++k) {
            if (functions > max_functions / nonzero.size() || ambient > budget / alg.order()) small = false;
            functions *= nonzero.size();
            ambient *= alg.order();
        }
        if (small) {
            cert.mode = "exhaustive";
            std::vector<ChoiceFunction<V>> all;
            std::vector<std::size_t> digits(cols.size(), 0);
            for (std::uint64_t i = 0; i < functions; ++i) {
                ChoiceFunction<V> e;
                for (std::size_t k = 0; k < cols.size(); ++k) e.representative[cols[k]] = nonzero[digits[k]];
                all.push_back(std::move(e));
                for (std::size_t k = 0; k < cols.size() && ++digits[k] == nonzero.size(); ++k) digits[k] = 0;
            }
            std::vector<std::set<FinVec<V>>> codes;
            for (const auto& e : all) codes.push_back(enumerate_choice_code(code, e, budget));
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < all.size(); ++j) {
                    ++pairs;
                    const auto iso = choice_isomorphism(code, all[i], all[j]);
                    std::set<FinVec<V>> image;
                    for (const auto& x : codes[i]) image.insert(apply_isometry(alg, iso, x));
                    if (image != codes[j]) fail("choice functions #" + std::to_string(i) + " -> #" + std::to_string(j));
                }
            cert.count("choice_functions", all.size());
            cert.count("codewords_per_code", codes.empty() ? 0 : codes[0].size());
            cert.count("pairs", pairs);
            cert.count("failures", failures);
            cert.verdict = failures == 0;
            return cert;
        }
    }
    cert.mode = "sampled";
    cert.seed = seed;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Column<V>> cols;
        while (cols.size() < 4) {
            auto c = random_column(code, rng);
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(std::move(c));
        }
        const auto e1 = random_choice_function(code, cols, rng), e2 = random_choice_function(code, cols, rng);
        const auto fwd = choice_isomorphism(code, e1, e2), back = choice_isomorphism(code, e2, e1);
        ++pairs;
        for (int k = 0; k < 4; ++k) {
            const auto c = random_codeword(code, rng, 1 + uniform_index(rng, 3));
            const auto x1 = choice_codeword_from(code, e1, c), x2 = choice_codeword_from(code, e2, c);
            const auto y = apply_isometry(alg, fwd, x1), z = apply_isometry(alg, back, x2);
            if (!choice_contains(code, e1, x1) || !choice_contains(code, e2, y) || !choice_contains(code, e1, z) ||
                apply_isometry(alg, back, y) != x1)
                fail(format_inline(alg, c));
        }
    }
    cert.count("pairs", pairs);
    cert.count("failures", failures);
    cert.verdict = failures == 0;
    return cert;
}

/// Random elementary compositions B induce isometries mapping the code onto
/// itself: checked as full codeword sets when the ambient space fits the
/// budget, otherwise on random codewords.
template <Quasifield A>
Certificate basis_change_check(const HammingCode<A>& code, std::size_t changes = 20, std::size_t ops = 6, std::uint64_t seed = 1,
                               std::uint64_t budget = std::uint64_t{1} << 20, std::size_t samples = 100) {
    using V = scalar_t<A>;
    const auto& alg = code.algebra();
    Certificate cert;
    cert.claim = "basis changes of " + alg.name() + "^" + std::to_string(code.rows()) + " induce automorphisms of the Hamming code";
    cert.seed = seed;
    Rng rng(seed);
    std::optional<std::set<FinVec<V>>> full;
    if constexpr (FiniteQuasifield<A>) {
        try {
            full = enumerate_choice_code(code, ChoiceFunction<V>{}, budget);
        } catch (const unsupported_error&) {
        }
    }
    cert.mode = full ? "exhaustive" : "sampled";
    std::uint64_t failures = 0, mapped = 0;
    for (std::size_t t = 0; t < changes; ++t) {
        const auto b = random_basis_change(alg, code.rows(), ops, rng);
        const auto iso = basis_change_isomorphism(code, b);
        bool ok = true;
        if (full) {
            std::set<FinVec<V>> image;
            for (const auto& x : *full) image.insert(apply_isometry(alg, iso, x));
            mapped += full->size();
            ok = image == *full;
        } else {
            for (std::size_t k = 0; k < samples && ok; ++k) {
                const auto c = random_codeword(code, rng, 1 + uniform_index(rng, 3));
                ++mapped;
                ok = contains(code, apply_isometry(alg, iso, c));
            }
        }
        if (!ok && failures++ == 0) {
            std::string prov;
            for (const auto& p : b.provenance) prov += (prov.empty() ? "" : " ") + p;
            cert.witnesses.push_back(prov);
        }
    }
    cert.count("basis_changes", changes);
    cert.count("codewords_mapped", mapped);
    cert.count("failures", failures);
    cert.verdict = failures == 0;
    return cert;
}

// ---- dependence of column sets -------------------------------------------------

namespace detail {

/// Linearise sum_n x_n a_n = 0 over F0: unknown (n, p) is the i_p coefficient of
/// x_n; equation (l, r) collects sum_q c^r_{p,q} a_{l,n}^{(q)}.
template <SubfieldAlgebra A>
std::optional<FinVec<scalar_t<A>>> support_witness_linearized(const HammingCode<A>& code, const std::vector<Column<scalar_t<A>>>& s) {
    const auto& alg = code.algebra();
    const SubfieldStructure<A> st(alg);
    const std::size_t dim = st.dimension, m = code.rows(), cols = s.size() * dim;
    Matrix<scalar_t<typename A::subfield_type>> eq(m * dim, std::vector<scalar_t<typename A::subfield_type>>(cols, st.base.zero()));
    for (std::size_t n = 0; n < s.size(); ++n)
        for (std::size_t l = 0; l < m; ++l) {
            const auto a = alg.expand(s[n][l]);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t p = 0; p < dim; ++p) {
                    auto acc = st.base.zero();
                    for (std::size_t q = 0; q < dim; ++q)
                        acc = st.base.add(acc, st.base.mul(st.constants[r][p][q], a[q]));
                    eq[l * dim + r][n * dim + p] = acc;
                }
        }
    const auto sol = nullspace_vector(st.base, eq, cols);
    if (!sol) return std::nullopt;
    FinVec<scalar_t<A>> x;
    for (std::size_t n = 0; n < s.size(); ++n)
        x.set(alg, s[n], alg.recombine(std::vector<scalar_t<typename A::subfield_type>>(sol->begin() + n * dim, sol->begin() + (n + 1) * dim)));
    return x;
}

template <FiniteQuasifield A>
std::optional<FinVec<scalar_t<A>>> support_witness_brute(const HammingCode<A>& code, const std::vector<Column<scalar_t<A>>>& s,
                                                         std::uint64_t budget) {
    const auto& alg = code.algebra();
    const auto elems = alg.elements();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (total > budget / elems.size()) throw unsupported_error("column set too large for brute-force dependence search");
        total *= elems.size();
    }
    std::vector<std::size_t> digits(s.size(), 0);
    for (std::uint64_t i = 1; i < total; ++i) {
        for (std::size_t k = 0; k < s.size() && ++digits[k] == elems.size(); ++k) digits[k] = 0;
        FinVec<scalar_t<A>> x;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (digits[k]) x.set(alg, s[k], elems[digits[k]]);
        if (contains(code, x)) return x;
    }
    return std::nullopt;
}

}  // namespace detail

/// A nonzero codeword supported inside S, or nullopt when the columns of S are
/// left-independent.
template <Quasifield A>
std::optional<FinVec<scalar_t<A>>> support_witness(const HammingCode<A>& code, const std::vector<Column<scalar_t<A>>>& s,
                                                   std::uint64_t budget = std::uint64_t{1} << 20) {
    std::set<Column<scalar_t<A>>> distinct(s.begin(), s.end());
    if (distinct.size() != s.size()) throw invalid_parameter("column set has repeated columns");
    for (const auto& c : s)
        if (!is_canonical_column(code, c)) throw domain_error(format_column(code.algebra(), c) + " is not a canonical column");
    std::optional<FinVec<scalar_t<A>>> x;
    if constexpr (SubfieldAlgebra<A>) {
        x = detail::support_witness_linearized(code, s);
    } else if constexpr (FiniteQuasifield<A>) {
        x = detail::support_witness_brute(code, s, budget);
    } else {
        throw unsupported_error("no subfield structure for " + code.algebra().name());
    }
    if (x && (x->empty() || !contains(code, *x))) throw inconsistency_error("dependence solver returned a non-codeword");
    return x;
}

template <Quasifield A>
Certificate distinguish_invariant(const HammingCode<A>& code_a, const HammingCode<A>& code_b, std::size_t samples = 100,
                                  std::uint64_t seed = 1, std::uint64_t enumerate_limit = 20000) {
    const auto& alg = code_a.algebra();
    const std::size_t m1 = code_a.rows(), m2 = code_b.rows();
    if (m1 >= m2) throw invalid_parameter("distinguish_invariant needs m1 < m2");
    Certificate cert;
    cert.claim = "H^(" + std::to_string(m1) + ") and H^(" + std::to_string(m2) + ") over " + alg.name() + " are not equivalent";

    // (i) the identity columns of the larger code carry no nonzero codeword
    const auto ident = identity_columns(code_b);
    const auto indep = support_witness(code_b, ident);
    std::string ident_text;
    for (const auto& c : ident) ident_text += format_column(alg, c);
    if (indep) cert.witnesses.push_back("H^(" + std::to_string(m2) + ") identity columns dependent: " + format_inline(alg, *indep));
    else cert.witnesses.push_back("H^(" + std::to_string(m2) + ") independent set " + ident_text);

    // (ii) every m2 columns of the smaller code carry one
    std::uint64_t tested = 0, dependent = 0;
    std::optional<std::string> failure;
    auto test_set = [&](const std::vector<Column<scalar_t<A>>>& s) {
        ++tested;
        if (support_witness(code_a, s)) ++dependent;
        else if (!failure) {
            std::string t;
            for (const auto& c : s) t += format_column(alg, c);
            failure = t;
        }
    };
    bool exhaustive = false;
    if constexpr (FiniteQuasifield<A>) {
        const auto cols = enumerate_columns(code_a);
        // C(n, m2)
        std::uint64_t subsets = 1;
        for (std::size_t k = 0; k < m2 && subsets <= enumerate_limit; ++k) subsets = subsets * (cols.size() - k) / (k + 1);
        if (m2 <= cols.size() && subsets <= enumerate_limit) {
            exhaustive = true;
            std::vector<std::size_t> idx(m2);
            for (std::size_t k = 0; k < m2; ++k) idx[k] = k;
            while (true) {
                std::vector<Column<scalar_t<A>>> s;
                for (auto i : idx) s.push_back(cols[i]);
                test_set(s);
                std::size_t k = m2;
                while (k > 0 && idx[k - 1] == cols.size() - m2 + k - 1) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (std::size_t j = k; j < m2; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (!exhaustive) {
        cert.seed = seed;
        Rng rng(seed);
        for (std::size_t t = 0; t < samples; ++t) {
            std::vector<Column<scalar_t<A>>> s;
            while (s.size() < m2) {
                auto c = random_column(code_a, rng);
                if (std::find(s.begin(), s.end(), c) == s.end()) s.push_back(std::move(c));
            }
            test_set(s);
        }
    }
    cert.mode = exhaustive ? "exhaustive" : "sampled";
    cert.count("sets_tested", tested);
    cert.count("sets_dependent", dependent);
    if (failure) cert.witnesses.push_back("H^(" + std::to_string(m1) + ") independent set " + *failure);
    cert.verdict = !indep && dependent == tested && tested > 0;
    return cert;
}

// ---- nonassociative scalars break left linearity ------------

template <class V>
struct NonassocWitness {
    V a, b, c;
    FinVec<V> codeword;            // y = e_i1 + c e_i2 + d e_i3
    FinVec<V> violation;           // a(b y) - (ab) y
    std::vector<std::string> escapes;  // scaled vectors found outside the code
};

template <Quasifield A>
std::optional<std::array<scalar_t<A>, 3>> find_nonassociative_triple(const A& alg) {
    const auto probe = alg.probe_elements();
    for (const auto& a : probe)
        for (const auto& b : probe)
            for (const auto& c : probe)
                if (alg.mul(a, alg.mul(b, c)) != alg.mul(alg.mul(a, b), c)) return std::array<scalar_t<A>, 3>{a, b, c};
    return std::nullopt;
}

/// With a(bc) != (ab)c, decode e_i1 + c e_i2 to y = e_i1 + c e_i2 + d e_i3. If
/// the code were left-linear, both a(by) and (ab)y would be codewords, but
/// their difference vanishes at i1 (right unit) and is nonzero at i2, so it has
/// weight 1 or 2.
template <Quasifield A>
std::pair<std::optional<NonassocWitness<scalar_t<A>>>, Certificate> nonassoc_witness(const HammingCode<A>& code) {
    const auto& alg = code.algebra();
    Certificate cert;
    cert.claim = "the Hamming code over " + alg.name() + " is not left-linear";
    cert.mode = "scan";
    const auto unit = alg.right_unit();
    if (!unit) throw unsupported_error(alg.name() + " has no right unit");
    const auto triple = find_nonassociative_triple(alg);
    cert.count("probe_elements", alg.probe_elements().size());
    if (!triple) {
        cert.claim = alg.name() + " is associative - no witness";
        cert.verdict = alg.is_associative();
        return {std::nullopt, cert};
    }
    const auto& [a, b, c] = *triple;
    const auto ident = identity_columns(code);
    FinVec<scalar_t<A>> x;
    x.set(alg, ident[0], *unit);
    x.set(alg, ident[1], c);
    const auto y = decode(code, x);
    const auto by = scalar_mul_left(alg, b, y);
    const auto a_by = scalar_mul_left(alg, a, by);
    const auto ab_y = scalar_mul_left(alg, alg.mul(a, b), y);
    NonassocWitness<scalar_t<A>> w{a, b, c, y, vec_sub(alg, a_by, ab_y), {}};
    if (!contains(code, by)) w.escapes.push_back("b*y");
    if (!contains(code, a_by)) w.escapes.push_back("a*(b*y)");
    if (!contains(code, ab_y)) w.escapes.push_back("(a*b)*y");
    const bool verified = contains(code, y) && y.size() == 3 && !w.violation.empty() && w.violation.size() <= 2 &&
                          !contains(code, w.violation) && !w.escapes.empty();
    cert.verdict = verified;
    cert.witnesses.push_back("(a, b, c) = (" + alg.format(a) + ", " + alg.format(b) + ", " + alg.format(c) + ")");
    cert.witnesses.push_back("y = " + format_inline(alg, y));
    cert.witnesses.push_back("a(by) - (ab)y = " + format_inline(alg, w.violation));
    std::string esc;
    for (std::size_t i = 0; i < w.escapes.size(); ++i) esc += (i ? ", " : "") + w.escapes[i];
    cert.witnesses.push_back("outside the code: " + esc);
    cert.count("violation_weight", w.violation.size());
    return {w, cert};
}

// ---- right scaling ------------------------------------------

template <class V>
struct RightScalingWitness {
    FinVec<V> codeword;
    V alpha;
};

/// Commutative algebras: every generator stays a codeword after right scaling
/// by each probe scalar and satisfies the right-action equations. Otherwise
/// the generators decode(e_0 + s e_1) are scanned for a right multiple that
/// leaves the code.
template <Quasifield A>
std::pair<std::optional<RightScalingWitness<scalar_t<A>>>, Certificate> right_linearity_witness(const HammingCode<A>& code,
                                                                                                  std::size_t trials = 1000,
                                                                                                  std::uint64_t seed = 1) {
    const auto& alg = code.algebra();
    if (!alg.is_associative()) throw unsupported_error("right-linearity test needs an associative algebra; " + alg.name() + " is not");
    Certificate cert;
    const auto probe = alg.probe_elements();
    if (alg.is_commutative()) {
        cert.claim = "the Hamming code over " + alg.name() + " is also right-linear";
        std::vector<FinVec<scalar_t<A>>> gens;
        if constexpr (FiniteQuasifield<A>) {
            cert.mode = "exhaustive";
            gens = weight3_generators(code);
        } else {
            cert.mode = "sampled";
            cert.seed = seed;
            Rng rng(seed);
            for (std::size_t t = 0; t < trials; ++t) gens.push_back(random_weight3_codeword(code, rng));
        }
        std::uint64_t checked = 0;
        for (const auto& g : gens)
            for (const auto& alpha : probe) {
                ++checked;
                const auto scaled = scalar_mul_right(alg, g, alpha);
                if (!contains(code, scaled) || !contains_right(code, g)) {
                    cert.witnesses.push_back(format_inline(alg, g) + " * " + alg.format(alpha));
                    cert.count("generators", gens.size());
                    cert.count("checked", checked);
                    return {RightScalingWitness<scalar_t<A>>{g, alpha}, cert};
                }
            }
        cert.count("generators", gens.size());
        cert.count("checked", checked);
        cert.verdict = true;
        return {std::nullopt, cert};
    }
    cert.claim = "the Hamming code over " + alg.name() + " is not right-linear";
    cert.mode = "scan";
    const auto ident = identity_columns(code);
    const auto unit = alg.right_unit();
    if (!unit) throw unsupported_error(alg.name() + " has no right unit");
    std::uint64_t checked = 0;
    for (const auto& s : probe) {
        FinVec<scalar_t<A>> x;
        x.set(alg, ident[0], *unit);
        x.set(alg, ident[1], s);
        const auto g = decode(code, x);
        for (const auto& alpha : probe) {
            ++checked;
            const auto scaled = scalar_mul_right(alg, g, alpha);
            if (!contains(code, scaled)) {
                cert.verdict = contains(code, g);
                cert.count("checked", checked);
                cert.witnesses.push_back("c = " + format_inline(alg, g));
                cert.witnesses.push_back("alpha = " + alg.format(alpha));
                cert.witnesses.push_back("syndrome(c*alpha) = " + format_dense(alg, syndrome(code, scaled)));
                return {RightScalingWitness<scalar_t<A>>{g, alpha}, cert};
            }
        }
    }
    cert.count("checked", checked);
    cert.notes.push_back("no right-scaling escape among probe generators");
    return {std::nullopt, cert};
}

// ---- conjugation onto the right code ------------------------

/// x |-> x' with x'_{a'} = y conj(x_a), where conj(a) = a' y is the right
/// normalisation. Conjugating sum x_a a = 0 gives sum conj(a) conj(x_a) = 0.
template <Quasifield A>
FinVec<scalar_t<A>> conjugate_image(const HammingCode<A>& code, const FinVec<scalar_t<A>>& x) {
    const auto& alg = code.algebra();
    FinVec<scalar_t<A>> out;
    for (const auto& [c, v] : x) {
        DenseVec<scalar_t<A>> cc;
        for (const auto& e : c.entries) cc.push_back(conjugate(alg, e));
        const auto n = normalize_right(code, cc);
        if (out.contains_column(n.column)) throw invalid_isometry("conjugation collided at " + format_column(alg, n.column));
        out.set(alg, n.column, alg.mul(n.scalar, conjugate(alg, v)));
    }
    return out;
}

/// The conjugation map as an isometry with a value bijection; valid when every
/// pivot is self-conjugate, in which case the right normalisation is a
/// conjugate column with y = 1.
template <Quasifield A>
LinearIsometry<scalar_t<A>> conjugation_isometry(const HammingCode<A>& code) {
    const auto& alg = code.algebra();
    for (const auto& b : code.pivots())
        if (conjugate(alg, b) != b) throw invalid_parameter("conjugation isometry needs self-conjugate pivots");
    auto iso = identity_isometry(alg);
    iso.rule = [code](const Column<scalar_t<A>>& c) {
        const auto& alg = code.algebra();
        DenseVec<scalar_t<A>> cc;
        for (const auto& e : c.entries) cc.push_back(conjugate(alg, e));
        const auto n = normalize_right(code, cc);
        return std::make_pair(n.column, n.scalar);
    };
    iso.value_map = [alg](const scalar_t<A>& v) { return conjugate(alg, v); };
    return iso;
}

template <Quasifield A>
Certificate conjugate_code_check(const HammingCode<A>& code, std::size_t trials = 1000, std::uint64_t seed = 1, std::size_t terms = 3) {
    const auto& alg = code.algebra();
    if constexpr (!requires { alg.conjugate(std::declval<scalar_t<A>>()); }) {
        throw unsupported_error("conjugate_code_check needs quaternions, got " + alg.name());
    } else {
        if (!alg.is_associative()) throw unsupported_error("conjugate_code_check needs an associative algebra");
        Certificate cert;
        cert.claim = "conjugation maps the left Hamming code over " + alg.name() + " onto the right Hamming code";
        cert.mode = "sampled";
        cert.seed = seed;
        Rng rng(seed);
        std::uint64_t pass = 0, fail = 0;
        auto check = [&](const FinVec<scalar_t<A>>& x) {
            const auto img = conjugate_image(code, x);
            if (contains_right(code, img) && img.size() == x.size()) ++pass;
            else if (fail++ == 0) cert.witnesses.push_back(format_inline(alg, x));
        };
        check(FinVec<scalar_t<A>>{});
        for (std::size_t t = 0; t < trials; ++t) check(random_codeword(code, rng, 1 + uniform_index(rng, terms)));
        cert.count("pass", pass);
        cert.count("fail", fail);
        cert.verdict = fail == 0;
        return cert;
    }
}

}  // namespace quasiham
