#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace quasiham;
using testutil::col;
using testutil::vec;

TEST(FinVec, ZeroWritesEraseCoordinates) {
    PrimeField f3(3);
    FinVec<Residue> x;
    x.set(f3, col(f3, "(1,0)"), f3.from_integer(2));
    EXPECT_EQ(x.size(), 1u);
    x.set(f3, col(f3, "(1,0)"), f3.zero());
    EXPECT_TRUE(x.empty());
    EXPECT_EQ(x.get(f3, col(f3, "(0,1)")), f3.zero());
}

TEST(FinVec, MixedRowCountsAreRejected) {
    PrimeField f2(2);
    FinVec<Residue> x;
    x.set(f2, col(f2, "(1,0)"), f2.one());
    EXPECT_THROW(x.set(f2, col(f2, "(1,0,0)"), f2.one()), domain_error);
    const auto y = unit_vector(f2, col(f2, "(1,0,0)"), f2.one());
    EXPECT_THROW(vec_add(f2, x, y), domain_error);
    EXPECT_THROW(hamming_distance(f2, x, y), domain_error);
}

TEST(VecAdd, Examples) {
    PrimeField f2(2);
    const auto e = unit_vector(f2, col(f2, "(1,1,0)"), f2.one());
    EXPECT_TRUE(vec_add(f2, e, e).empty());
    Quaternions h;
    const auto x = vec(h, "(1,0) := i\n(0,1) := 3/2-k\n");
    EXPECT_EQ(vec_add(h, x, FinVec<Quaternion>{}), x);
    EXPECT_TRUE(vec_add(h, x, vec_neg(h, x)).empty());
    EXPECT_TRUE(vec_sub(h, x, x).empty());
}

TEST(ScalarMul, Examples) {
    Quaternions h;
    const auto c = col(h, "(1,i)");
    EXPECT_EQ(scalar_mul_left(h, h.parse("i"), unit_vector(h, c, h.parse("j"))), unit_vector(h, c, h.parse("k")));
    EXPECT_EQ(scalar_mul_right(h, unit_vector(h, c, h.parse("j")), h.parse("i")), unit_vector(h, c, h.parse("-k")));
    EXPECT_TRUE(scalar_mul_left(h, h.zero(), unit_vector(h, c, h.parse("j"))).empty());
    const auto x = vec(h, "(1,0) := 2i\n(0,1) := 1+j\n");
    EXPECT_EQ(scalar_mul_left(h, h.one(), x), x);
}

TEST(HammingDistance, Examples) {
    PrimeField f3(3);
    const auto x = vec(f3, "(1,0) := 1\n(1,1) := 2\n");
    const auto y = vec(f3, "(1,1) := 2\n(1,2) := 1\n");
    EXPECT_EQ(hamming_distance(f3, x, y), 2u);
    EXPECT_EQ(hamming_distance(f3, x, x), 0u);
    EXPECT_EQ(hamming_norm(FinVec<Residue>{}), 0u);
    EXPECT_EQ(hamming_distance(f3, x, y), hamming_norm(vec_sub(f3, x, y)));
}

TEST(TextFormat, RoundTripAndErrors) {
    Quaternions h;
    const std::string text = "(1, 0) := 3/2+i-2k\n(1, i) := -j\n";
    const auto x = vec(h, text);
    EXPECT_EQ(format_finvec(h, x), text);
    EXPECT_EQ(vec(h, "# comment\n\n(1,0) := i\n(1,0) := -i\n"), FinVec<Quaternion>{});
    try {
        vec(h, "(1,0) := i\n(1,0) = i\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(vec(h, "1,0 := i\n"), parse_error);
    EXPECT_THROW(vec(h, "(1,q) := i\n"), parse_error);
}

TEST(ColumnOrder, LexicographicByScalarOrder) {
    PrimeField f3(3);
    EXPECT_LT(col(f3, "(0,1)"), col(f3, "(1,0)"));
    EXPECT_LT(col(f3, "(1,1)"), col(f3, "(1,2)"));
    Rationals q;
    // (num, den) order: 1/2 before 1/3
    EXPECT_LT(col(q, "(1,1/2)"), col(q, "(1,1/3)"));
}

// ---- properties --------------------------------------------------------------

namespace {

template <class A>
FinVec<scalar_t<A>> random_vector(const A& alg, Rng& rng, std::size_t m, std::size_t pool) {
    // coordinates from a small pool so supports overlap
    const auto probe = alg.probe_elements();
    FinVec<scalar_t<A>> x;
    for (std::size_t k = 0; k < 3; ++k) {
        Column<scalar_t<A>> c;
        c.entries.assign(m, alg.zero());
        c.entries[0] = *alg.right_unit();
        c.entries[1] = probe[uniform_index(rng, std::min(pool, probe.size()))];
        x.set(alg, c, alg.random_element(rng));
    }
    return x;
}

template <class A>
void metric_properties(const A& alg, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 10000; ++t) {
        const auto x = random_vector(alg, rng, 2, 4), y = random_vector(alg, rng, 2, 4), z = random_vector(alg, rng, 2, 4);
        ASSERT_LE(hamming_distance(alg, x, z), hamming_distance(alg, x, y) + hamming_distance(alg, y, z));
        ASSERT_EQ(hamming_distance(alg, x, y), hamming_distance(alg, y, x));
        ASSERT_EQ(hamming_distance(alg, x, y) == 0, x == y);
        const auto a = alg.random_nonzero(rng);
        ASSERT_EQ(scalar_mul_left(alg, a, x).support(), x.support());
        ASSERT_EQ(scalar_mul_right(alg, x, a).support(), x.support());
    }
}

template <class A>
void distributivity_exhaustive(const A& alg) {
    // all vectors over two columns at m = 2
    const std::vector<Column<scalar_t<A>>> cols{col(alg, "(1,0)"), col(alg, "(0,1)")};
    const auto vs = testutil::all_vectors(alg, cols);
    for (const auto& a : alg.elements())
        for (const auto& x : vs) {
            for (const auto& y : vs)
                ASSERT_EQ(scalar_mul_left(alg, a, vec_add(alg, x, y)), vec_add(alg, scalar_mul_left(alg, a, x), scalar_mul_left(alg, a, y)));
            for (const auto& b : alg.elements())
                ASSERT_EQ(scalar_mul_left(alg, alg.add(a, b), x), vec_add(alg, scalar_mul_left(alg, a, x), scalar_mul_left(alg, b, x)));
        }
}

}  // namespace

TEST(FinVecProperties, MetricAndSupportPreservation) {
    metric_properties(PrimeField(3), 1);
    metric_properties(GaloisField::gf9(), 2);
    metric_properties(Rationals(), 3);
    metric_properties(Quaternions(), 4);
    metric_properties(Octonions(), 5);
    const auto f = GaloisField::gf9();
    metric_properties(make_isotope(f, f.generator()), 6);
}

TEST(FinVecProperties, ScalarDistributivityExhaustive) {
    distributivity_exhaustive(PrimeField(2));
    distributivity_exhaustive(PrimeField(3));
    distributivity_exhaustive(PrimeField(5));
    distributivity_exhaustive(GaloisField::gf4());
    const auto f = GaloisField::gf9();
    distributivity_exhaustive(make_isotope(f, f.generator()));
}
