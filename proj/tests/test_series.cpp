#include "kflag/series.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace kflag;

TEST(Modes, RecursionMatchesGeometricTwists) {
    for (int N = 2; N <= 4; ++N) {
        Model M(N);
        ModeTable tab(M);
        for (int n = 2; n <= 3; ++n)
            for (auto& k : compositions(n, N))
                for (int i = 1; i < n; ++i)
                    for (int r = -6; r <= 6; ++r) {
                        if (auto t = label_target(E(i, r), k)) {
                            auto m = tab.mode({ModeKind::e, i, r}, k);
                            ASSERT_TRUE(m.has_value());
                            EXPECT_EQ(*m, M.generator_matrix(E(i, r), k)) << k.str() << " e r=" << r;
                        } else {
                            EXPECT_FALSE(tab.mode({ModeKind::e, i, r}, k).has_value());
                        }
                        if (auto t = label_target(F(i, r), k)) {
                            auto m = tab.mode({ModeKind::f, i, r}, k);
                            ASSERT_TRUE(m.has_value());
                            EXPECT_EQ(*m, M.generator_matrix(F(i, r), k)) << k.str() << " f r=" << r;
                        }
                    }
    }
}

TEST(Modes, PsiSupports) {
    for (int N = 2; N <= 4; ++N) {
        Model M(N);
        ModeTable tab(M);
        for (auto& k : compositions(2, N)) {
            EXPECT_EQ(*tab.mode({ModeKind::psi_plus, 1, k[2]}, k), M.generator_matrix(PsiP(1), k));
            EXPECT_EQ(*tab.mode({ModeKind::psi_minus, 1, -k[1]}, k), M.generator_matrix(PsiM(1), k));
            for (int r = k[2] - 4; r < k[2]; ++r) EXPECT_TRUE(tab.mode({ModeKind::psi_plus, 1, r}, k)->is_zero());
            for (int r = -k[1] + 1; r <= -k[1] + 4; ++r) EXPECT_TRUE(tab.mode({ModeKind::psi_minus, 1, r}, k)->is_zero());
        }
    }
}

TEST(Modes, LeadingPsiPlusIsACommutator) {
    Model M(3);
    ModeTable tab(M);
    for (auto& k : compositions(2, 3)) {
        const int b = k[2] + 1;
        for (int r = k[2] + 1; r <= k[2] + 4; ++r) {
            Expr c{{1, {E(1, r - b), F(1, b)}}, {-1, {F(1, b), E(1, r - b)}}};
            EXPECT_EQ(*tab.mode({ModeKind::psi_plus, 1, r}, k), M.expr_matrix(c, k).m) << k.str() << " r=" << r;
        }
    }
}

TEST(Modes, EModeOneOnProjectiveLine) {
    Model M(2);
    ModeTable tab(M);
    Composition k({1, 1});
    auto m = tab.mode({ModeKind::e, 1, 1}, k);
    ASSERT_TRUE(m.has_value());
    auto direct = M.map_matrix(k, Composition({0, 2}), [&](const PolyElem& f) {
        return demazure_T(M.ring(), 1, M.ring().mul(f, M.ring().a_power(2, -1)));
    });
    EXPECT_EQ(*m, direct);
}

TEST(Appendix, SmallWindowsPass) {
    for (auto [n, N, w] : {std::tuple{2, 2, 3}, std::tuple{2, 3, 2}}) {
        auto rep = conjecture_report(n, N, w, 2);
        EXPECT_EQ(rep.note, "evidence, not proof");
        EXPECT_TRUE(rep.ok()) << report_text(rep);
        EXPECT_GT(rep.checked(), 0);
    }
}
