#include "kflag/errors.hpp"
#include "kflag/weights.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace kflag;

namespace {

long long brute_count(int n, int N) {
    std::function<long long(int, int)> rec = [&](int parts, int left) -> long long {
        if (parts == 1) return 1;
        long long c = 0;
        for (int v = 0; v <= left; ++v) c += rec(parts - 1, left - v);
        return c;
    };
    return rec(n, N);
}

long long choose(int a, int b) {
    long long r = 1;
    for (int j = 1; j <= b; ++j) r = r * (a - b + j) / j;
    return r;
}

}

TEST(Compositions, SmallEnumeration) {
    auto c = compositions(2, 2);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].parts(), (std::vector<int>{2, 0}));
    EXPECT_EQ(c[1].parts(), (std::vector<int>{1, 1}));
    EXPECT_EQ(c[2].parts(), (std::vector<int>{0, 2}));
    EXPECT_EQ(compositions(2, 3).size(), 4u);
    EXPECT_EQ(compositions(3, 3).size(), 10u);
}

TEST(Compositions, CountMatchesStarsAndBars) {
    for (int n = 2; n <= 5; ++n)
        for (int N = 2; N <= 7; ++N) {
            auto c = compositions(n, N);
            EXPECT_EQ(static_cast<long long>(c.size()), choose(N + n - 1, n - 1)) << n << " " << N;
            EXPECT_EQ(static_cast<long long>(c.size()), brute_count(n, N));
            for (auto& k : c) EXPECT_EQ(k.N(), N);
        }
}

TEST(Compositions, RejectsTinyParameters) {
    EXPECT_THROW(compositions(1, 3), InvalidParameter);
    EXPECT_THROW(compositions(3, 1), InvalidParameter);
}

TEST(Composition, StringRoundTrip) {
    Composition k({1, 1, 2});
    EXPECT_EQ(k.str(), "1,1,2");
    EXPECT_EQ(Composition::parse("1,1,2"), k);
    EXPECT_EQ(k.partial(2), 2);
    EXPECT_EQ(k.block_lo(3), 3);
    EXPECT_EQ(k.block_hi(3), 4);
    EXPECT_THROW(Composition::parse("1,-1"), InvalidParameter);
    EXPECT_THROW(Composition::parse("a,b"), InvalidParameter);
}

TEST(ShiftByRoot, Examples) {
    EXPECT_EQ(shift_by_root(Composition({1, 1}), 1, +1), Composition({0, 2}));
    EXPECT_FALSE(shift_by_root(Composition({0, 2}), 1, +1).has_value());
    EXPECT_EQ(shift_by_root(Composition({1, 1, 2}), 2, +1), Composition({1, 0, 3}));
    EXPECT_EQ(shift_by_root(Composition({1, 1}), 1, -1), Composition({2, 0}));
}

TEST(Refinement, EExamples) {
    auto a = refinement_for_E(Composition({1, 1}), 1);
    EXPECT_EQ(a.parts, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(a.singleton_pos, 1);
    EXPECT_EQ(a.merge_lo, 1);
    EXPECT_EQ(a.merge_hi, 2);
    auto b = refinement_for_E(Composition({2, 2}), 1);
    EXPECT_EQ(b.parts, (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(b.singleton_pos, 2);
    EXPECT_EQ(b.merge_lo, 2);
    EXPECT_EQ(b.merge_hi, 4);
    auto c = refinement_for_E(Composition({2, 0}), 1);
    EXPECT_EQ(c.parts, (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(c.singleton_pos, 2);
    EXPECT_EQ(c.merge_lo, 2);
    EXPECT_EQ(c.merge_hi, 2);
    EXPECT_THROW(refinement_for_E(Composition({0, 2}), 1), InvalidParameter);
}

TEST(Refinement, FExamples) {
    auto a = refinement_for_F(Composition({1, 1}), 1);
    EXPECT_EQ(a.parts, (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(a.singleton_pos, 2);
    EXPECT_EQ(a.merge_lo, 1);
    EXPECT_EQ(a.merge_hi, 2);
    auto b = refinement_for_F(Composition({0, 2}), 1);
    EXPECT_EQ(b.parts, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(b.singleton_pos, 1);
    EXPECT_EQ(b.merge_lo, 1);
    EXPECT_EQ(b.merge_hi, 1);
    auto c = refinement_for_F(Composition({2, 2}), 1);
    EXPECT_EQ(c.parts, (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(c.singleton_pos, 3);
    EXPECT_EQ(c.merge_lo, 1);
    EXPECT_EQ(c.merge_hi, 3);
}

TEST(Refinement, EAndFDescribeTheSameCorrespondence) {
    for (int n = 2; n <= 4; ++n)
        for (int N = 2; N <= 5; ++N)
            for (auto& k : compositions(n, N))
                for (int i = 1; i < n; ++i) {
                    auto down = shift_by_root(k, i, -1);
                    if (!down) continue;
                    auto e = refinement_for_E(*down, i);
                    auto f = refinement_for_F(k, i);
                    EXPECT_EQ(e.parts, f.parts) << k.str() << " i=" << i;
                    EXPECT_EQ(e.singleton_pos, f.singleton_pos);
                }
}

TEST(Multinomial, Values) {
    EXPECT_EQ(multinomial(Composition({1, 1})), 2);
    EXPECT_EQ(multinomial(Composition({0, 2})), 1);
    EXPECT_EQ(multinomial(Composition({1, 1, 1})), 6);
    EXPECT_EQ(multinomial(Composition({2, 2})), 6);
    EXPECT_EQ(multinomial(Composition({1, 2, 1})), 12);
}
