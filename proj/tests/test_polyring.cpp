#include "kflag/errors.hpp"
#include "kflag/polyring.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace kflag;

namespace {

PolyElem x(int v, int e = 1) { return PolyElem::monomial(mono_var(v, e)); }
PolyElem one() { return PolyElem::constant(1); }

PolyElem random_poly(std::mt19937& rng, int N, int terms, int max_exp) {
    std::uniform_int_distribution<int> ex(0, max_exp), co(-5, 5);
    PolyElem p;
    for (int t = 0; t < terms; ++t) {
        Mono m = 0;
        for (int v = 1; v <= N; ++v) m += mono_var(v, ex(rng));
        p.add_term(m, oracle::frac(co(rng), 1 + std::abs(co(rng))));
    }
    return p;
}

std::vector<int> swap_perm(int N, int j) {
    std::vector<int> w(N);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[j - 1], w[j]);
    return w;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}

TEST(PolyElem, ArithmeticDropsZeros) {
    PolyElem p = x(1) + x(2);
    p -= x(2);
    EXPECT_EQ(p, x(1));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(mul_raw(x(1) + one(), x(1) - one()), x(1, 2) - one());
}

TEST(PolyElem, TextRoundTrip) {
    PolyElem p = x(1, 2) * Rational(-3, 4) + x(2) + one() * Rational(5);
    PolyElem q = parse_poly(format_poly(p), 3);
    EXPECT_EQ(p, q);
    EXPECT_EQ(format_rational(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(parse_poly("1 + -1 * x1", 2), one() - x(1));
    EXPECT_THROW(parse_poly("x5", 2), InvalidParameter);
    EXPECT_THROW(parse_poly("", 2), InvalidParameter);
}

TEST(Ring, FromAMonomialExamples) {
    Ring r2(2);
    EXPECT_EQ(r2.from_a_monomial({1, 1}), one());
    EXPECT_EQ(r2.from_a_monomial({-1, 0}), one() - x(1));
    for (int N = 2; N <= 4; ++N) EXPECT_EQ(Ring(N).from_a_monomial(std::vector<int>(N, 0)), one());
}

TEST(Ring, NormalFormExamples) {
    Ring r2(2);
    EXPECT_TRUE(r2.normal_form(x(1, 2)).is_zero());
    EXPECT_TRUE(r2.normal_form(x(1) + x(2) - x(2) - x(1)).is_zero());
    EXPECT_TRUE(r2.normal_form(PolyElem::monomial(mono_var(1) + mono_var(2))).is_zero());
    EXPECT_EQ(r2.normal_form(x(2)), x(1) * Rational(-1));
}

TEST(Ring, PermuteExamples) {
    Ring r2(2);
    EXPECT_EQ(r2.permute(x(1), {2, 1}), x(1) * Rational(-1));
    Ring r3(3);
    for (auto w : {std::vector<int>{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) EXPECT_EQ(r3.permute(one(), w), one());
    PolyElem p = PolyElem::monomial(mono_var(1) + mono_var(2, 2));
    EXPECT_EQ(r3.permute(p, {2, 1, 3}), r3.normal_form(PolyElem::monomial(mono_var(2) + mono_var(1, 2))));
    EXPECT_THROW(r3.permute(p, {1, 1, 3}), InvalidParameter);
    EXPECT_THROW(r3.permute(p, {1, 2}), InvalidParameter);
}

TEST(Ring, StaircaseDimensionIsFactorial) {
    for (int N = 1; N <= 6; ++N) {
        Ring r(N);
        EXPECT_EQ(r.dim(), factorial(N));
        for (Mono m : r.staircase()) EXPECT_TRUE(r.is_standard(m));
    }
}

TEST(Ring, VariablesAreNilpotentOfOrderN) {
    for (int N = 2; N <= 6; ++N) {
        Ring r(N);
        for (int j = 1; j <= N; ++j) {
            EXPECT_TRUE(r.normal_form(x(j, N)).is_zero()) << N << " " << j;
            if (N <= 4) EXPECT_TRUE(oracle::in_ideal(x(j, N), N));
        }
    }
    // x_1^{N-1} survives
    EXPECT_FALSE(Ring(4).normal_form(x(1, 3)).is_zero());
}

TEST(Ring, NormalFormAgreesWithIdealMembershipOracle) {
    std::mt19937 rng(7);
    for (int N = 2; N <= 4; ++N) {
        Ring r(N);
        for (int t = 0; t < 25; ++t) {
            PolyElem p = random_poly(rng, N, 5, N);
            PolyElem q = r.normal_form(p);
            for (auto& [m, c] : q.terms) EXPECT_TRUE(r.is_standard(m));
            EXPECT_TRUE(oracle::congruent(p, q, N)) << format_poly(p);
        }
        // standard monomials stay independent modulo the ideal
        for (Mono m : r.staircase()) {
            if (m == 0) continue;
            EXPECT_FALSE(oracle::in_ideal(PolyElem::monomial(m), N));
        }
    }
}

TEST(Ring, NormalFormRespectsMultiplication) {
    std::mt19937 rng(11);
    for (int N = 2; N <= 5; ++N) {
        Ring r(N);
        for (int t = 0; t < 30; ++t) {
            PolyElem p = random_poly(rng, N, 4, N);
            PolyElem q = random_poly(rng, N, 4, N);
            EXPECT_EQ(r.normal_form(mul_raw(p, q)), r.normal_form(mul_raw(r.normal_form(p), r.normal_form(q))));
            EXPECT_EQ(r.mul(p, q), r.normal_form(mul_raw(p, q)));
        }
    }
}

TEST(Ring, UnitCheck) {
    for (int N = 2; N <= 5; ++N) {
        Ring r(N);
        std::vector<int> c(N, -3);
        const int bound = N <= 4 ? 3 : 2;
        std::fill(c.begin(), c.end(), -bound);
        while (true) {
            std::vector<int> neg(N);
            for (int j = 0; j < N; ++j) neg[j] = -c[j];
            ASSERT_EQ(r.mul(r.from_a_monomial(c), r.from_a_monomial(neg)), one());
            int j = 0;
            while (j < N && c[j] == bound) c[j++] = -bound;
            if (j == N) break;
            ++c[j];
        }
    }
}

TEST(Ring, UnitCheckFullRangeSampled) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    Ring r(5);
    for (int t = 0; t < 400; ++t) {
        std::vector<int> c(5), neg(5);
        for (int j = 0; j < 5; ++j) neg[j] = -(c[j] = d(rng));
        ASSERT_EQ(r.mul(r.from_a_monomial(c), r.from_a_monomial(neg)), one());
    }
}

TEST(Ring, IdealStableUnderTranspositions) {
    for (int N = 2; N <= 5; ++N) {
        Ring r(N);
        for (int i = 1; i <= N; ++i) {
            PolyElem g = r.groebner_generator(i);
            EXPECT_TRUE(r.normal_form(g).is_zero());
            if (N <= 4) EXPECT_TRUE(oracle::in_ideal(g, N));
            for (int j = 1; j < N; ++j) EXPECT_TRUE(r.normal_form(swap_raw(g, j)).is_zero());
        }
    }
}

TEST(Ring, PermuteIsAGroupAction) {
    std::mt19937 rng(5);
    for (int N = 2; N <= 4; ++N) {
        Ring r(N);
        std::vector<int> u(N), v(N), vu(N);
        std::iota(u.begin(), u.end(), 1);
        std::iota(v.begin(), v.end(), 1);
        for (int t = 0; t < 10; ++t) {
            std::shuffle(u.begin(), u.end(), rng);
            std::shuffle(v.begin(), v.end(), rng);
            for (int j = 0; j < N; ++j) vu[j] = v[u[j] - 1];
            PolyElem p = r.normal_form(random_poly(rng, N, 4, N - 1));
            EXPECT_EQ(r.permute(r.permute(p, u), v), r.permute(p, vu));
            EXPECT_EQ(r.permute(r.mul(p, p), u), r.mul(r.permute(p, u), r.permute(p, u)));
        }
    }
}

TEST(Ring, DualExamplesAndProperties) {
    Ring r2(2);
    EXPECT_EQ(r2.dual(one()), one());
    EXPECT_EQ(r2.dual(r2.a_power(1, 1)), one() - x(1));
    PolyElem s = r2.normal_form(r2.a_power(1, 1) + r2.a_power(2, 1));
    EXPECT_EQ(r2.dual(s), s);
    EXPECT_EQ(s, one() * Rational(2));
    std::mt19937 rng(9);
    for (int N = 2; N <= 4; ++N) {
        Ring r(N);
        for (int t = 0; t < 10; ++t) {
            PolyElem p = r.normal_form(random_poly(rng, N, 4, N - 1));
            PolyElem q = r.normal_form(random_poly(rng, N, 4, N - 1));
            EXPECT_EQ(r.dual(r.dual(p)), p);
            EXPECT_EQ(r.dual(r.mul(p, q)), r.mul(r.dual(p), r.dual(q)));
        }
    }
}

TEST(Ring, DenseRoundTrip) {
    Ring r(3);
    PolyElem p = r.normal_form(x(1, 2) + x(2) * Rational(1, 3) + one());
    EXPECT_EQ(r.from_dense(r.dense(p)), p);
}

TEST(WeightBasis, SizesMatchMultinomial) {
    for (int N = 2; N <= 5; ++N) {
        Ring r(N);
        for (int n = 2; n <= 4; ++n)
            for (auto& k : compositions(n, N)) {
                auto b = invariant_basis(r, k);
                EXPECT_EQ(b.size(), multinomial(k)) << k.str();
                // every element invariant under transpositions inside each block
                for (int i = 1; i <= n; ++i)
                    for (int j = k.block_lo(i); j < k.block_hi(i); ++j)
                        for (auto& e : b.elements) EXPECT_EQ(r.permute(e, swap_perm(N, j)), e);
            }
    }
}

TEST(WeightBasis, Examples) {
    Ring r2(2);
    EXPECT_EQ(invariant_basis(r2, Composition({1, 1})).size(), 2);
    auto b = invariant_basis(r2, Composition({0, 2}));
    ASSERT_EQ(b.size(), 1);
    EXPECT_EQ(b.elements[0], one());
    EXPECT_EQ(invariant_basis(Ring(3), Composition({1, 1, 1})).size(), 6);
}

TEST(Coordinates, Examples) {
    Ring r2(2);
    auto b = invariant_basis(r2, Composition({1, 1}));
    ASSERT_EQ(b.elements[0], one());
    ASSERT_EQ(b.elements[1], x(1));
    EXPECT_EQ(coordinates(r2, PolyElem(), b), (std::vector<Rational>{0, 0}));
    EXPECT_EQ(coordinates(r2, r2.a_power(1, 1), b), (std::vector<Rational>{1, 1}));
    Ring r3(3);
    auto b3 = invariant_basis(r3, Composition({1, 2}));
    for (int j = 0; j < b3.size(); ++j) {
        auto c = coordinates(r3, b3.elements[j], b3);
        for (int t = 0; t < b3.size(); ++t) EXPECT_EQ(c[t], t == j ? 1 : 0);
    }
    // x_2 is not symmetric in x_2, x_3
    EXPECT_THROW(coordinates(r3, x(2), b3), InternalError);
}
