#include "kflag/series.hpp"

namespace kflag {

std::string ModeLetter::str() const {
    const char* name = kind == ModeKind::e ? "e" : kind == ModeKind::f ? "f" : kind == ModeKind::psi_plus ? "psi+" : "psi-";
    return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(r) + "]";
}

std::string mode_expr_str(const ModeExpr& e) {
    std::string out;
    for (auto& t : e) {
        if (t.coef == 0) continue;
        if (!out.empty()) out += " + ";
        if (t.coef != 1) out += "(" + format_rational(t.coef) + ")";
        if (t.word.empty()) out += "1";
        for (size_t j = 0; j < t.word.size(); ++j) out += (j ? "*" : "") + t.word[j].str();
    }
    return out.empty() ? "0" : out;
}

namespace {

std::optional<Composition> mode_target(const ModeLetter& g, const Composition& k) {
    if (g.i < 1 || g.i >= k.n()) throw InvalidParameter("node index out of range: " + g.str());
    if (g.kind == ModeKind::e) return shift_by_root(k, g.i, +1);
    if (g.kind == ModeKind::f) return shift_by_root(k, g.i, -1);
    return k;
}

std::vector<int> formal_target(const ModeWord& w, const Composition& k) {
    std::vector<int> p = k.parts();
    for (auto& g : w) {
        if (g.kind == ModeKind::e) --p[g.i - 1], ++p[g.i];
        if (g.kind == ModeKind::f) ++p[g.i - 1], --p[g.i];
    }
    return p;
}

}

std::optional<Matrix> ModeTable::mode(const ModeLetter& g, const Composition& k) const {
    auto t = mode_target(g, k);
    if (!t) return std::nullopt;
    auto key = std::make_tuple(static_cast<int>(g.kind), g.i, g.r, k.parts());
    {
        std::lock_guard lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto m = std::make_shared<const Matrix>(compute(g, k, *t));
    std::lock_guard lock(mu_);
    return *cache_.try_emplace(key, m).first->second;
}

Matrix ModeTable::compute(const ModeLetter& g, const Composition& k, const Composition& t) const {
    const int i = g.i, r = g.r;
    auto gen = [&](const GeneratorLabel& l, const Composition& w) { return model_.generator_matrix(l, w); };
    // commutator [e_a, f_b] at k; missing intermediate weights contribute zero
    auto bracket = [&](int a, int b) {
        const int d = model_.basis(k).size();
        Matrix out(d, d);
        if (auto lo = shift_by_root(k, i, -1)) out += *mode({ModeKind::e, i, a}, *lo) * *mode({ModeKind::f, i, b}, k);
        if (auto hi = shift_by_root(k, i, +1)) out -= *mode({ModeKind::f, i, b}, *hi) * *mode({ModeKind::e, i, a}, k);
        return out;
    };
    switch (g.kind) {
    case ModeKind::e:
        if (r > 0) return gen(PsiP(i, 1), t) * *mode({ModeKind::e, i, r - 1}, k) * gen(PsiP(i, -1), k) * Rational(-1);
        if (r < -k[i] - 1) return gen(PsiP(i, -1), t) * *mode({ModeKind::e, i, r + 1}, k) * gen(PsiP(i, 1), k) * Rational(-1);
        return gen(E(i, r), k);
    case ModeKind::f:
        if (r > k[i + 1] + 1) return gen(PsiP(i, -1), t) * *mode({ModeKind::f, i, r - 1}, k) * gen(PsiP(i, 1), k) * Rational(-1);
        if (r < 0) return gen(PsiP(i, 1), t) * *mode({ModeKind::f, i, r + 1}, k) * gen(PsiP(i, -1), k) * Rational(-1);
        return gen(F(i, r), k);
    case ModeKind::psi_plus:
        if (r > k[i + 1]) return bracket(r - k[i + 1] - 1, k[i + 1] + 1);
        if (r == k[i + 1]) return gen(PsiP(i, 1), k);
        return Matrix(model_.basis(k).size(), model_.basis(k).size());
    case ModeKind::psi_minus:
        if (r < -k[i]) return bracket(r, 0) * Rational(-1);
        if (r == -k[i]) return gen(PsiM(i, 1), k);
        return Matrix(model_.basis(k).size(), model_.basis(k).size());
    }
    throw InternalError("unknown mode kind");
}

OpMatrix ModeTable::expr_matrix(const ModeExpr& e, const Composition& k) const {
    OpMatrix out;
    out.source = k;
    bool first = true;
    for (auto& term : e) {
        std::vector<int> fp = formal_target(term.word, k);
        std::optional<Composition> tgt;
        if (std::all_of(fp.begin(), fp.end(), [](int x) { return x >= 0; })) tgt = Composition(fp);
        if (first) {
            out.target = tgt;
            if (tgt) out.m = Matrix(model_.basis(*tgt).size(), model_.basis(k).size());
            first = false;
        } else if (tgt != out.target) {
            throw InternalError("series relation terms land in different weights");
        }
        if (!tgt || term.coef == 0) continue;
        Composition cur = k;
        Matrix acc = Matrix::identity(model_.basis(k).size());
        bool zero = false;
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
            auto nxt = mode_target(*it, cur);
            if (!nxt) {
                zero = true;
                break;
            }
            acc = *mode(*it, cur) * acc;
            cur = *nxt;
        }
        if (!zero) out.m += acc * term.coef;
    }
    return out;
}

namespace {

// binds one mode table to whichever model runs the instances
struct SharedTable {
    std::mutex mu;
    const Model* model = nullptr;
    std::unique_ptr<ModeTable> table;

    const ModeTable& get(const Model& m) {
        std::lock_guard lock(mu);
        if (model != &m) {
            table = std::make_unique<ModeTable>(m);
            model = &m;
        }
        return *table;
    }
};

using Shared = std::shared_ptr<SharedTable>;

ModeLetter e_(int i, int r) { return {ModeKind::e, i, r}; }
ModeLetter f_(int i, int r) { return {ModeKind::f, i, r}; }
ModeLetter pp(int i, int r) { return {ModeKind::psi_plus, i, r}; }
ModeLetter pm(int i, int r) { return {ModeKind::psi_minus, i, r}; }

struct Builder {
    std::vector<RelationInstance>& out;
    Shared shared;
    Composition k;

    void add(const std::string& rel, Json p, ModeExpr lhs, ModeExpr rhs) {
        // zero-coefficient anchors keep the target weight known for empty sums
        if (!rhs.empty()) lhs.push_back({0, rhs.front().word});
        if (!lhs.empty()) rhs.push_back({0, lhs.front().word});
        p["k"] = k.str();
        p["lhs"] = mode_expr_str(lhs);
        p["rhs"] = mode_expr_str(rhs);
        out.push_back({rel, std::move(p), [sh = shared, k = k, lhs = std::move(lhs), rhs = std::move(rhs)](const Model& m) {
                           const ModeTable& t = sh->get(m);
                           return compare_sides(m, t.expr_matrix(lhs, k), t.expr_matrix(rhs, k));
                       }});
    }
};

Json ij(int i, int j, int a, int b) {
    Json p;
    p["i"] = i;
    p["j"] = j;
    p["a"] = a;
    p["b"] = b;
    return p;
}

}

std::vector<RelationInstance> appendix_instances(int n, int N, int window) {
    if (window < 1) throw InvalidParameter("appendix suite needs window >= 1");
    std::vector<RelationInstance> out;
    Shared shared = std::make_shared<SharedTable>();
    const int W = window;
    for (const Composition& k : compositions(n, N)) {
        Builder b{out, shared, k};
        for (int i = 1; i < n; ++i) {
            // recursion modes against the direct twisted pushforwards
            for (int r = -k[i] - 1 - W; r <= W; ++r) {
                if (!shift_by_root(k, i, +1)) break;
                Json p;
                p["i"] = i;
                p["r"] = r;
                p["k"] = k.str();
                out.push_back({"mode-e", p, [shared, k, i, r](const Model& m) {
                                   auto mode = shared->get(m).mode(e_(i, r), k);
                                   Composition t = *shift_by_root(k, i, +1);
                                   return compare_sides(m, OpMatrix{k, t, *mode}, OpMatrix{k, t, m.generator_matrix(E(i, r), k)});
                               }});
            }
            for (int r = -W; r <= k[i + 1] + 1 + W; ++r) {
                if (!shift_by_root(k, i, -1)) break;
                Json p;
                p["i"] = i;
                p["r"] = r;
                p["k"] = k.str();
                out.push_back({"mode-f", p, [shared, k, i, r](const Model& m) {
                                   auto mode = shared->get(m).mode(f_(i, r), k);
                                   Composition t = *shift_by_root(k, i, -1);
                                   return compare_sides(m, OpMatrix{k, t, *mode}, OpMatrix{k, t, m.generator_matrix(F(i, r), k)});
                               }});
            }
        }
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int A = -W; A <= W; ++A)
                    for (int B = -W; B <= W; ++B) {
                        Json p = ij(i, j, A, B);
                        if (i == j) {
                            b.add("ee-same", p, {{1, {e_(i, A + 1), e_(i, B)}}}, {{-1, {e_(i, B + 1), e_(i, A)}}});
                            b.add("ff-same", p, {{1, {f_(i, A), f_(i, B + 1)}}}, {{-1, {f_(i, B), f_(i, A + 1)}}});
                        } else if (j == i + 1) {
                            b.add("ee-adjacent", p, {{1, {e_(i, A), e_(j, B + 1)}}},
                                  {{1, {e_(j, B + 1), e_(i, A)}}, {-1, {e_(j, B), e_(i, A + 1)}}});
                            b.add("ff-adjacent", p, {{1, {f_(i, A), f_(j, B + 1)}}, {-1, {f_(i, A + 1), f_(j, B)}}},
                                  {{1, {f_(j, B + 1), f_(i, A)}}});
                        } else if (j > i + 1 || j < i - 1) {
                            b.add("ee-far", p, {{1, {e_(i, A + 1), e_(j, B)}}, {-1, {e_(i, A), e_(j, B + 1)}}},
                                  {{1, {e_(j, B), e_(i, A + 1)}}, {-1, {e_(j, B + 1), e_(i, A)}}});
                            b.add("ff-far", p, {{1, {f_(i, A + 1), f_(j, B)}}, {-1, {f_(i, A), f_(j, B + 1)}}},
                                  {{1, {f_(j, B), f_(i, A + 1)}}, {-1, {f_(j, B + 1), f_(i, A)}}});
                        }
                        // e-f delta relation
                        ModeExpr lhs = {{1, {e_(i, A), f_(j, B)}}, {-1, {f_(j, B), e_(i, A)}}};
                        ModeExpr rhs = {{0, lhs.front().word}};
                        if (i == j) rhs = {{1, {pp(i, A + B)}}, {-1, {pm(i, A + B)}}};
                        b.add("ef-delta", p, lhs, rhs);
                    }
        // psi relations: psi indices offset from the leading mode at k
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int a = -W; a <= W; ++a)
                    for (int B = -W; B <= W; ++B) {
                        const int Ap = k[i + 1] + a;   // psi+ mode index
                        const int Am = -k[i] + a;      // psi- mode index
                        Json pP = ij(i, j, Ap, B), pM = ij(i, j, Am, B);
                        if (j == i) {
                            b.add("psi+-e", pP, {{1, {pp(i, Ap + 1), e_(i, B)}}}, {{-1, {e_(i, B + 1), pp(i, Ap)}}});
                            b.add("psi--e", pM, {{1, {pm(i, Am + 1), e_(i, B)}}}, {{-1, {e_(i, B + 1), pm(i, Am)}}});
                            b.add("psi+-f", pP, {{-1, {pp(i, Ap), f_(i, B + 1)}}}, {{1, {f_(i, B), pp(i, Ap + 1)}}});
                            b.add("psi--f", pM, {{-1, {pm(i, Am), f_(i, B + 1)}}}, {{1, {f_(i, B), pm(i, Am + 1)}}});
                        } else if (j == i + 1) {
                            ModeExpr l1;
                            for (int s = 1; s <= Ap - k[i + 1] + 1; ++s) l1.push_back({-1, {pp(i, Ap - s), e_(j, B + s)}});
                            b.add("psi+-e", pP, l1, {{1, {e_(j, B), pp(i, Ap)}}});
                            ModeExpr l2;
                            for (int s = 0; s <= -k[i] - Am; ++s) l2.push_back({1, {pm(i, Am + s), e_(j, B - s)}});
                            b.add("psi--e", pM, l2, {{1, {e_(j, B), pm(i, Am)}}});
                            ModeExpr r3;
                            for (int s = 1; s <= Ap - k[i + 1]; ++s) r3.push_back({-1, {f_(j, B + s), pp(i, Ap - s)}});
                            b.add("psi+-f", pP, {{1, {pp(i, Ap), f_(j, B)}}}, r3);
                            ModeExpr r4;
                            for (int s = 0; s <= -k[i] - Am; ++s) r4.push_back({1, {f_(j, B - s), pm(i, Am + s)}});
                            b.add("psi--f", pM, {{1, {pm(i, Am), f_(j, B)}}}, r4);
                        } else if (j == i - 1) {
                            ModeExpr r1;
                            for (int s = 0; s <= Ap - k[i + 1]; ++s) r1.push_back({1, {e_(j, B + s), pp(i, Ap - s)}});
                            b.add("psi+-e", pP, {{1, {pp(i, Ap), e_(j, B)}}}, r1);
                            ModeExpr r2;
                            for (int s = 1; s <= -k[i] - Am; ++s) r2.push_back({-1, {e_(j, B - s), pm(i, Am + s)}});
                            b.add("psi--e", pM, {{1, {pm(i, Am), e_(j, B)}}}, r2);
                            ModeExpr l3;
                            for (int s = 0; s <= Ap - k[i + 1]; ++s) l3.push_back({1, {pp(i, Ap - s), f_(j, B + s)}});
                            b.add("psi+-f", pP, l3, {{1, {f_(j, B), pp(i, Ap)}}});
                            ModeExpr l4;
                            for (int s = 1; s <= -k[i] + 1 - Am; ++s) l4.push_back({-1, {pm(i, Am + s), f_(j, B - s)}});
                            b.add("psi--f", pM, l4, {{1, {f_(j, B), pm(i, Am)}}});
                        } else {
                            b.add("psi+-e", pP, {{1, {pp(i, Ap), e_(j, B)}}}, {{1, {e_(j, B), pp(i, Ap)}}});
                            b.add("psi--e", pM, {{1, {pm(i, Am), e_(j, B)}}}, {{1, {e_(j, B), pm(i, Am)}}});
                            b.add("psi+-f", pP, {{1, {pp(i, Ap), f_(j, B)}}}, {{1, {f_(j, B), pp(i, Ap)}}});
                            b.add("psi--f", pM, {{1, {pm(i, Am), f_(j, B)}}}, {{1, {f_(j, B), pm(i, Am)}}});
                        }
                    }
        // psi modes commute among themselves
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int a = 0; a <= W; ++a)
                    for (int c = 0; c <= W; ++c) {
                        std::vector<ModeLetter> xs = {pp(i, k[i + 1] + a), pm(i, -k[i] - a)};
                        std::vector<ModeLetter> ys = {pp(j, k[j + 1] + c), pm(j, -k[j] - c)};
                        for (auto& x : xs)
                            for (auto& y : ys) {
                                Json p;
                                p["x"] = x.str();
                                p["y"] = y.str();
                                b.add("psi-psi", p, {{1, {x, y}}}, {{1, {y, x}}});
                            }
                    }
    }
    return out;
}

RelationReport conjecture_report(int n, int N, int window, int jobs) { return run_suite("appendix", n, N, window, jobs); }

}
