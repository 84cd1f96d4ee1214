#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace quasiham;
using testutil::col;
using testutil::vec;

namespace {

CayleyTable isotope() {
    const auto f = GaloisField::gf9();
    return make_isotope(f, f.generator());
}

/// Monomial isometry on a finite column list: a random permutation and random
/// nonzero right multipliers.
template <class A>
LinearIsometry<scalar_t<A>> random_monomial(const A& alg, const std::vector<Column<scalar_t<A>>>& cols, Rng& rng) {
    auto perm = cols;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto iso = identity_isometry(alg);
    for (std::size_t k = 0; k < cols.size(); ++k) iso.table.emplace(cols[k], std::make_pair(perm[k], alg.random_nonzero(rng)));
    return iso;
}

template <class A>
LinearIsometry<scalar_t<A>> inverse_monomial(const A& alg, const LinearIsometry<scalar_t<A>>& iso) {
    auto inv = identity_isometry(alg);
    for (const auto& [c, img] : iso.table) inv.table.emplace(img.first, std::make_pair(c, alg.solve_right(img.second, *alg.right_unit())));
    return inv;
}

/// Does some nonzero vector supported inside S satisfy the membership predicate?
template <class A, class Pred>
bool brute_dependent(const A& alg, const std::vector<Column<scalar_t<A>>>& s, Pred in_code) {
    for (const auto& x : testutil::all_vectors(alg, s))
        if (!x.empty() && in_code(x)) return true;
    return false;
}

template <class V>
std::vector<std::vector<Column<V>>> subsets(const std::vector<Column<V>>& cols, std::size_t k) {
    std::vector<std::vector<Column<V>>> out;
    std::vector<bool> pick(cols.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<Column<V>> s;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (pick[i]) s.push_back(cols[i]);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace

// ---- isometries --------------------------------------------------------------

TEST(ApplyIsometry, Examples) {
    const PrimeField f3(3);
    const HammingCode<PrimeField> code(f3, 2);
    const auto x = vec(f3, "(1,0) := 1\n(1,1) := 1\n(1,2) := 1\n");
    ASSERT_TRUE(contains(code, x));
    EXPECT_EQ(apply_isometry(f3, identity_isometry(f3), x), x);
    auto twice = identity_isometry(f3);
    twice.default_alpha = f3.from_integer(2);
    const auto y = apply_isometry(f3, twice, x);
    EXPECT_EQ(y, vec(f3, "(1,0) := 2\n(1,1) := 2\n(1,2) := 2\n"));
    EXPECT_TRUE(contains(code, y));
    EXPECT_EQ(hamming_norm(y), hamming_norm(x));
}

TEST(ApplyIsometry, RejectsCollisionsAndZeroMultipliers) {
    const PrimeField f3(3);
    auto iso = identity_isometry(f3);
    iso.table.emplace(col(f3, "(1,0)"), std::make_pair(col(f3, "(0,1)"), f3.one()));
    EXPECT_THROW(apply_isometry(f3, iso, vec(f3, "(1,0) := 1\n(0,1) := 1\n")), invalid_isometry);
    EXPECT_NO_THROW(apply_isometry(f3, iso, vec(f3, "(1,0) := 1\n(1,1) := 1\n")));
    auto zero = identity_isometry(f3);
    zero.default_alpha = f3.zero();
    EXPECT_THROW(apply_isometry(f3, zero, vec(f3, "(1,0) := 1\n")), invalid_isometry);
}

TEST(ApplyIsometry, PreservesDistance) {
    auto run = [](const auto& code, std::uint64_t seed) {
        const auto& alg = code.algebra();
        using V = scalar_t<std::decay_t<decltype(alg)>>;
        Rng rng(seed);
        std::vector<Column<V>> pool;
        while (pool.size() < 5) {
            auto c = random_column(code, rng);
            if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
        }
        const auto iso = random_monomial(alg, pool, rng);
        for (int t = 0; t < 10000; ++t) {
            FinVec<V> x, y;
            for (int k = 0; k < 4; ++k) {
                x.set(alg, pool[uniform_index(rng, pool.size())], alg.random_element(rng));
                y.set(alg, pool[uniform_index(rng, pool.size())], alg.random_element(rng));
            }
            ASSERT_EQ(hamming_distance(alg, apply_isometry(alg, iso, x), apply_isometry(alg, iso, y)), hamming_distance(alg, x, y));
        }
    };
    run(HammingCode<PrimeField>(PrimeField(5), 2), 1);
    run(HammingCode<GaloisField>(GaloisField::gf9(), 2), 2);
    run(HammingCode<Quaternions>(Quaternions(), 2), 3);
    run(HammingCode<CayleyTable>(isotope(), 2), 4);
}

// ---- choice functions --------------------------------------------------------

TEST(ChoiceIsomorphism, Examples) {
    const PrimeField f3(3);
    const HammingCode<PrimeField> code(f3, 2);
    const ChoiceFunction<Residue> plain;
    const auto same = choice_isomorphism(code, plain, plain);
    for (const auto& c : enumerate_columns(code)) EXPECT_EQ(same.image(c), std::make_pair(c, f3.one()));
    ChoiceFunction<Residue> flipped;
    flipped.representative[col(f3, "(1,1)")] = f3.from_integer(2);
    const auto iso = choice_isomorphism(code, plain, flipped);
    EXPECT_EQ(iso.image(col(f3, "(1,1)")).second, f3.from_integer(2));
    EXPECT_EQ(iso.image(col(f3, "(1,0)")).second, f3.one());

    Quaternions h;
    const HammingCode<Quaternions> ch(h, 2);
    ChoiceFunction<Quaternion> times_i;
    times_i.representative[col(h, "(1,j)")] = h.parse("i");
    EXPECT_EQ(choice_isomorphism(ch, ChoiceFunction<Quaternion>{}, times_i).image(col(h, "(1,j)")).second, h.parse("-i"));

    EXPECT_THROW(choice_isomorphism(HammingCode<Octonions>(Octonions(), 2), ChoiceFunction<Octonion>{}, ChoiceFunction<Octonion>{}),
                 unsupported_error);
    ChoiceFunction<Residue> bad;
    bad.representative[col(f3, "(1,1)")] = f3.zero();
    EXPECT_THROW(choice_isomorphism(code, plain, bad), invalid_parameter);
}

TEST(ChoiceIsomorphism, AllSixteenChoicesOverF3) {
    const PrimeField f3(3);
    const HammingCode<PrimeField> code(f3, 2);
    const auto cols = enumerate_columns(code);
    std::vector<ChoiceFunction<Residue>> all;
    for (int mask = 0; mask < 16; ++mask) {
        ChoiceFunction<Residue> e;
        for (std::size_t k = 0; k < 4; ++k) e.representative[cols[k]] = f3.from_integer((mask >> k) & 1 ? 2 : 1);
        all.push_back(e);
    }
    // codes from the defining equations, independent of the library's enumerator
    const auto ambient = testutil::all_vectors(f3, cols);
    std::vector<std::set<FinVec<Residue>>> codes;
    for (const auto& e : all) {
        std::set<FinVec<Residue>> c;
        for (const auto& x : ambient) {
            DenseVec<Residue> z{f3.zero(), f3.zero()};
            for (const auto& [column, v] : x)
                for (std::size_t r = 0; r < 2; ++r)
                    z[r] = f3.add(z[r], f3.mul(v, f3.mul(e.representative.at(column), column[r])));
            if (is_zero_vector(f3, z)) c.insert(x);
        }
        ASSERT_EQ(c.size(), 9u);
        codes.push_back(c);
    }
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            const auto iso = choice_isomorphism(code, all[i], all[j]);
            std::set<FinVec<Residue>> image;
            for (const auto& x : codes[i]) image.insert(apply_isometry(f3, iso, x));
            ASSERT_EQ(image, codes[j]) << i << " -> " << j;
        }
    const auto cert = choice_isomorphism_check(code);
    EXPECT_TRUE(cert.verdict) << cert.to_text();
    EXPECT_EQ(cert.mode, "exhaustive");
}

TEST(ChoiceIsomorphism, SampledQuaternions) {
    const auto cert = choice_isomorphism_check(HammingCode<Quaternions>(Quaternions(), 2), 50, 3);
    EXPECT_TRUE(cert.verdict) << cert.to_text();
    EXPECT_EQ(cert.mode, "sampled");
}

// ---- basis changes -----------------------------------------------------------

TEST(BasisChange, Examples) {
    const PrimeField f3(3);
    const HammingCode<PrimeField> code(f3, 2);
    auto b = basis_identity(f3, 2);
    for (const auto& c : enumerate_columns(code)) EXPECT_EQ(basis_change_isomorphism(code, b).image(c), std::make_pair(c, f3.one()));
    basis_add(f3, b, 0, 1, f3.one());  // [[1,1],[0,1]]
    EXPECT_EQ(b.matrix, (Matrix<Residue>{{f3.one(), f3.one()}, {f3.zero(), f3.one()}}));
    const auto iso = basis_change_isomorphism(code, b);
    EXPECT_EQ(iso.image(col(f3, "(1,0)")).first, col(f3, "(1,1)"));
    EXPECT_EQ(iso.image(col(f3, "(1,2)")).first, col(f3, "(1,0)"));
    EXPECT_EQ(iso.image(col(f3, "(0,1)")).first, col(f3, "(0,1)"));
    EXPECT_EQ(iso.image(col(f3, "(1,1)")).first, col(f3, "(1,2)"));
    EXPECT_EQ(b.provenance, std::vector<std::string>{"add(0,1,1)"});
}

TEST(BasisChange, InvalidInputs) {
    const PrimeField f3(3);
    const HammingCode<PrimeField> code(f3, 2);
    auto b = basis_identity(f3, 2);
    EXPECT_THROW(basis_scale(f3, b, 0, f3.zero()), invalid_parameter);
    EXPECT_THROW(basis_swap(f3, b, 1, 1), invalid_parameter);
    BasisChange<Residue> singular{{{f3.one(), f3.one()}, {f3.one(), f3.one()}}, {}};
    EXPECT_THROW(basis_change_isomorphism(code, singular), invalid_parameter);
    EXPECT_THROW(basis_change_isomorphism(HammingCode<CayleyTable>(isotope(), 2), BasisChange<TableElement>{}), unsupported_error);
}

TEST(BasisChange, SwapOnSevenFourCodeFixesTheCode) {
    const PrimeField f2(2);
    const HammingCode<PrimeField> code(f2, 3);
    auto b = basis_identity(f2, 3);
    basis_swap(f2, b, 0, 1);
    const auto iso = basis_change_isomorphism(code, b);
    std::set<FinVec<Residue>> words, image;
    for (const auto& x : testutil::all_vectors(f2, enumerate_columns(code)))
        if (contains(code, x)) words.insert(x);
    for (const auto& x : words) image.insert(apply_isometry(f2, iso, x));
    EXPECT_EQ(words.size(), 16u);
    EXPECT_EQ(image, words);
    EXPECT_EQ(iso.image(col(f2, "(1,0,0)")).first, col(f2, "(0,1,0)"));
}

TEST(BasisChange, GeneratorImagesAreCodewords) {
    auto run = [](const auto& code, std::uint64_t seed) {
        const auto& alg = code.algebra();
        Rng rng(seed);
        const auto gens = weight3_generators(code);
        for (int t = 0; t < 10; ++t) {
            const auto iso = basis_change_isomorphism(code, random_basis_change(alg, code.rows(), 6, rng));
            for (const auto& g : gens) ASSERT_TRUE(contains(code, apply_isometry(alg, iso, g)));
        }
    };
    run(HammingCode<PrimeField>(PrimeField(2), 3), 1);
    run(HammingCode<PrimeField>(PrimeField(3), 2), 2);
    run(HammingCode<PrimeField>(PrimeField(3), 3), 3);
    run(HammingCode<GaloisField>(GaloisField::gf4(), 2), 4);
}

TEST(BasisChange, SeededCompositionsOverSevenFour) {
    const auto cert = basis_change_check(HammingCode<PrimeField>(PrimeField(2), 3), 20, 6, 1);
    EXPECT_TRUE(cert.verdict) << cert.to_text();
    const auto q = basis_change_check(HammingCode<Quaternions>(Quaternions(), 2), 5, 4, 2);
    EXPECT_TRUE(q.verdict) << q.to_text();
}

// ---- support witnesses -------------------------------------------------------

TEST(SupportWitness, Examples) {
    const PrimeField f2(2);
    const HammingCode<PrimeField> c2(f2, 2);
    const auto w = support_witness(c2, enumerate_columns(c2));
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, vec(f2, "(1,0) := 1\n(1,1) := 1\n(0,1) := 1\n"));
    const HammingCode<PrimeField> c3(f2, 3);
    EXPECT_FALSE(support_witness(c3, identity_columns(c3)));

    Quaternions h;
    const HammingCode<Quaternions> ch(h, 2);
    const auto a = col(h, "(1,0)"), b = col(h, "(0,1)"), c = col(h, "(1,1)");
    const auto wq = support_witness(ch, {a, b, c});
    ASSERT_TRUE(wq);
    EXPECT_EQ(wq->get(h, a), wq->get(h, b));
    EXPECT_EQ(wq->get(h, c), h.neg(wq->get(h, a)));
    EXPECT_FALSE(support_witness(ch, {a, b}));
    EXPECT_THROW(support_witness(ch, {a, a, b}), invalid_parameter);
}

TEST(SupportWitness, AnswersMatchBruteForce) {
    auto run = [](const auto& code, std::size_t k) {
        const auto& alg = code.algebra();
        for (const auto& s : subsets(enumerate_columns(code), k)) {
            const auto w = support_witness(code, s);
            if (w) {
                ASSERT_TRUE(contains(code, *w));
                ASSERT_FALSE(w->empty());
                for (const auto& [c, v] : *w) ASSERT_NE(std::find(s.begin(), s.end(), c), s.end());
            }
            ASSERT_EQ(w.has_value(), brute_dependent(alg, s, [&](const auto& x) { return contains(code, x); }));
        }
    };
    run(HammingCode<PrimeField>(PrimeField(3), 3), 3);
    run(HammingCode<GaloisField>(GaloisField::gf4(), 2), 2);
    run(HammingCode<GaloisField>(GaloisField::gf4(), 2), 3);
    run(HammingCode<CayleyTable>(isotope(), 2), 2);
    run(HammingCode<CayleyTable>(isotope(), 2), 3);
}

TEST(SupportWitness, InfiniteAlgebrasReturnCodewords) {
    auto run = [](const auto& code, std::uint64_t seed) {
        Rng rng(seed);
        for (int t = 0; t < 30; ++t) {
            std::vector<Column<scalar_t<std::decay_t<decltype(code.algebra())>>>> s;
            while (s.size() < code.rows() + 1) {
                auto c = random_column(code, rng);
                if (std::find(s.begin(), s.end(), c) == s.end()) s.push_back(c);
            }
            const auto w = support_witness(code, s);
            ASSERT_TRUE(w);
            ASSERT_TRUE(contains(code, *w));
        }
    };
    run(HammingCode<Rationals>(Rationals(), 3), 1);
    run(HammingCode<Quaternions>(Quaternions(), 2), 2);
    run(HammingCode<Octonions>(Octonions(), 2), 3);
}

// ---- distinguishing invariant ------------------------------------------------

TEST(Distinguish, SmallFieldsAndQuaternions) {
    const auto f2 = distinguish_invariant(HammingCode<PrimeField>(PrimeField(2), 2), HammingCode<PrimeField>(PrimeField(2), 3));
    EXPECT_TRUE(f2.verdict) << f2.to_text();
    EXPECT_EQ(f2.mode, "exhaustive");
    const auto f3 = distinguish_invariant(HammingCode<PrimeField>(PrimeField(3), 2), HammingCode<PrimeField>(PrimeField(3), 3));
    EXPECT_TRUE(f3.verdict) << f3.to_text();
    const auto q = distinguish_invariant(HammingCode<Quaternions>(Quaternions(), 2), HammingCode<Quaternions>(Quaternions(), 3), 100, 5);
    EXPECT_TRUE(q.verdict) << q.to_text();
    EXPECT_EQ(q.mode, "sampled");
    EXPECT_EQ(q.counts, (std::vector<std::pair<std::string, std::uint64_t>>{{"sets_tested", 100}, {"sets_dependent", 100}}));
    EXPECT_THROW(distinguish_invariant(HammingCode<PrimeField>(PrimeField(2), 3), HammingCode<PrimeField>(PrimeField(2), 2)),
                 invalid_parameter);
}

TEST(Distinguish, StableUnderIsometry) {
    // brute-force both halves of the invariant on codes moved by a random monomial map
    const PrimeField f3(3);
    const HammingCode<PrimeField> small(f3, 2), large(f3, 3);
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
        const auto cols_a = enumerate_columns(small);
        const auto iso_a = random_monomial(f3, cols_a, rng);
        const auto back_a = inverse_monomial(f3, iso_a);
        auto in_a = [&](const FinVec<Residue>& y) { return contains(small, apply_isometry(f3, back_a, y)); };
        for (const auto& s : subsets(cols_a, 3)) ASSERT_TRUE(brute_dependent(f3, s, in_a));

        const auto cols_b = enumerate_columns(large);
        const auto iso_b = random_monomial(f3, cols_b, rng);
        const auto back_b = inverse_monomial(f3, iso_b);
        auto in_b = [&](const FinVec<Residue>& y) { return contains(large, apply_isometry(f3, back_b, y)); };
        std::vector<Column<Residue>> moved;
        for (const auto& c : identity_columns(large)) moved.push_back(iso_b.image(c).first);
        ASSERT_FALSE(brute_dependent(f3, moved, in_b));
    }
}

// ---- nonassociative witnesses ------------------------------------------------

TEST(NonassocWitness, IsotopeAndOctonions) {
    auto check = [](const auto& code) {
        const auto& alg = code.algebra();
        const auto [w, cert] = nonassoc_witness(code);
        ASSERT_TRUE(w) << cert.to_text();
        EXPECT_TRUE(cert.verdict);
        EXPECT_NE(alg.mul(w->a, alg.mul(w->b, w->c)), alg.mul(alg.mul(w->a, w->b), w->c));
        EXPECT_TRUE(contains(code, w->codeword));
        EXPECT_EQ(w->codeword.size(), 3u);
        EXPECT_GE(w->violation.size(), 1u);
        EXPECT_LE(w->violation.size(), 2u);
        EXPECT_FALSE(contains(code, w->violation));
        EXPECT_FALSE(w->escapes.empty());
    };
    check(HammingCode<CayleyTable>(isotope(), 2));
    check(HammingCode<Octonions>(Octonions(), 2));
    const Octonions o;
    const auto w = nonassoc_witness(HammingCode<Octonions>(o, 2)).first;
    EXPECT_EQ(w->a, o.parse("e1"));
    EXPECT_EQ(w->b, o.parse("e2"));
    EXPECT_EQ(w->c, o.parse("e4"));
}

TEST(NonassocWitness, AssociativeAlgebrasHaveNone) {
    auto check = [](const auto& code) {
        const auto [w, cert] = nonassoc_witness(code);
        EXPECT_FALSE(w);
        EXPECT_TRUE(cert.verdict);
        EXPECT_NE(cert.claim.find("associative"), std::string::npos);
    };
    check(HammingCode<PrimeField>(PrimeField(2), 2));
    check(HammingCode<PrimeField>(PrimeField(3), 2));
    check(HammingCode<PrimeField>(PrimeField(5), 2));
    check(HammingCode<Quaternions>(Quaternions(), 2));
}

// ---- right scaling -----------------------------------------------------------

TEST(RightLinearity, CommutativeFieldsConfirm) {
    for (std::uint32_t p : {3u, 5u}) {
        const auto [w, cert] = right_linearity_witness(HammingCode<PrimeField>(PrimeField(p), 2));
        EXPECT_FALSE(w);
        EXPECT_TRUE(cert.verdict);
        EXPECT_EQ(cert.mode, "exhaustive");
    }
    const auto [w, cert] = right_linearity_witness(HammingCode<Rationals>(Rationals(), 2), 200, 4);
    EXPECT_FALSE(w);
    EXPECT_TRUE(cert.verdict);
}

TEST(RightLinearity, QuaternionEscape) {
    const Quaternions h;
    const HammingCode<Quaternions> code(h, 2);
    const auto [w, cert] = right_linearity_witness(code);
    ASSERT_TRUE(w);
    EXPECT_TRUE(cert.verdict);
    EXPECT_TRUE(contains(code, w->codeword));
    EXPECT_FALSE(contains(code, scalar_mul_right(h, w->codeword, w->alpha)));
    EXPECT_THROW(right_linearity_witness(HammingCode<Octonions>(Octonions(), 2)), unsupported_error);
}

// ---- conjugation -------------------------------------------------------------

TEST(Conjugation, LeftCodeMapsIntoRightCode) {
    const Quaternions h;
    const HammingCode<Quaternions> code(h, 2);
    EXPECT_TRUE(conjugate_image(code, FinVec<Quaternion>{}).empty());
    const auto g = decode(code, vec(h, "(1,0) := 1\n(0,1) := i\n"));
    ASSERT_TRUE(contains(code, g));
    EXPECT_TRUE(contains_right(code, conjugate_image(code, g)));
    const auto cert = conjugate_code_check(code, 1000, 1);
    EXPECT_TRUE(cert.verdict) << cert.to_text();
    EXPECT_EQ(cert.counts, (std::vector<std::pair<std::string, std::uint64_t>>{{"pass", 1001}, {"fail", 0}}));
    EXPECT_THROW(conjugate_code_check(HammingCode<PrimeField>(PrimeField(3), 2)), unsupported_error);
    EXPECT_THROW(conjugate_code_check(HammingCode<Octonions>(Octonions(), 2)), unsupported_error);
}

TEST(Conjugation, IsometryFormAgreesAndPreservesDistance) {
    const Quaternions h;
    const HammingCode<Quaternions> code(h, 3);
    const auto iso = conjugation_isometry(code);
    Rng rng(9);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_codeword(code, rng, 2), y = random_codeword(code, rng, 2);
        ASSERT_EQ(apply_isometry(h, iso, x), conjugate_image(code, x));
        ASSERT_EQ(hamming_distance(h, conjugate_image(code, x), conjugate_image(code, y)), hamming_distance(h, x, y));
        ASSERT_TRUE(contains_right(code, conjugate_image(code, vec_add(h, x, y))));
    }
}
