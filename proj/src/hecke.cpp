#include "kflag/hecke.hpp"

namespace kflag {

Composition full_flag_weight(int N) { return Composition(std::vector<int>(N, 1)); }

Matrix hecke_T(const Model& model, int i) {
    Composition k = full_flag_weight(model.N());
    return model.map_matrix(k, k, [&](const PolyElem& f) { return demazure_T(model.ring(), i, f); });
}

Matrix hecke_T_geometric(const Model& model, int i, bool e_after_f) {
    Composition k = full_flag_weight(model.N());
    Word w = e_after_f ? Word{E(i, 0), F(i, 0)} : Word{F(i, 0), E(i, 0)};
    return model.word_matrix(w, k).m;
}

Matrix hecke_X(const Model& model, int j, int p) {
    Composition k = full_flag_weight(model.N());
    std::vector<int> e(model.N(), 0);
    e[j - 1] = p;
    PolyElem a = model.ring().from_a_monomial(e);
    return model.map_matrix(k, k, [&](const PolyElem& f) { return model.ring().mul(f, a); });
}

namespace {

// a product of Hecke letters, leftmost acts last; 'T' index, 'X' index and power
struct HLetter {
    char kind;
    int idx;
    int p = 1;
};
using HWord = std::vector<HLetter>;
using HExpr = std::vector<std::pair<int, HWord>>;

std::string hword_str(const HWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (auto& l : w) {
        if (!out.empty()) out += "*";
        out += std::string(1, l.kind) + std::to_string(l.idx);
        if (l.kind == 'X' && l.p != 1) out += "^" + std::to_string(l.p);
    }
    return out;
}

std::string hexpr_str(const HExpr& e) {
    std::string out;
    for (auto& [c, w] : e) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        out += hword_str(w);
    }
    return out;
}

Matrix eval(const Model& m, const HExpr& e) {
    const int d = m.basis(full_flag_weight(m.N())).size();
    Matrix acc(d, d);
    for (auto& [c, w] : e) {
        Matrix t = Matrix::identity(d);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            t = (it->kind == 'T' ? hecke_T(m, it->idx) : hecke_X(m, it->idx, it->p)) * t;
        acc += t * Rational(c);
    }
    return acc;
}

RelationInstance hecke_identity(std::string rel, Json p, HExpr lhs, HExpr rhs) {
    p["lhs"] = hexpr_str(lhs);
    p["rhs"] = hexpr_str(rhs);
    return {std::move(rel), std::move(p), [lhs, rhs](const Model& m) {
                Composition k = full_flag_weight(m.N());
                return compare_sides(m, OpMatrix{k, k, eval(m, lhs)}, OpMatrix{k, k, eval(m, rhs)});
            }};
}

HLetter T(int i) { return {'T', i}; }
HLetter X(int j, int p = 1) { return {'X', j, p}; }

}

std::vector<RelationInstance> hecke_instances(int N) {
    std::vector<RelationInstance> out;
    Composition k = full_flag_weight(N);
    auto P = [](std::initializer_list<std::pair<const char*, int>> kv) {
        Json p;
        for (auto& [key, v] : kv) p[key] = v;
        return p;
    };
    for (int i = 1; i < N; ++i) out.push_back(hecke_identity("T-idempotent", P({{"i", i}}), {{1, {T(i), T(i)}}}, {{1, {T(i)}}}));
    for (int i = 1; i < N; ++i)
        for (int j = i + 2; j < N; ++j)
            out.push_back(hecke_identity("T-far-commute", P({{"i", i}, {"j", j}}), {{1, {T(i), T(j)}}}, {{1, {T(j), T(i)}}}));
    for (int i = 1; i + 1 < N; ++i)
        out.push_back(hecke_identity("T-braid", P({{"i", i}}), {{1, {T(i), T(i + 1), T(i)}}}, {{1, {T(i + 1), T(i), T(i + 1)}}}));
    for (int j = 1; j <= N; ++j)
        for (int p : {1, -1})
            out.push_back(hecke_identity("X-inverse", P({{"j", j}, {"power", p}}), {{1, {X(j, p), X(j, -p)}}}, {{1, {}}}));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int p : {1, -1})
                for (int q : {1, -1})
                    out.push_back(hecke_identity("X-commute", P({{"i", i}, {"j", j}, {"p", p}, {"q", q}}),
                                                 {{1, {X(i, p), X(j, q)}}}, {{1, {X(j, q), X(i, p)}}}));
    for (int i = 1; i < N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (j == i || j == i + 1) continue;
            for (int p : {1, -1})
                out.push_back(hecke_identity("TX-far-commute", P({{"i", i}, {"j", j}, {"power", p}}),
                                             {{1, {T(i), X(j, p)}}}, {{1, {X(j, p), T(i)}}}));
        }
    for (int i = 1; i < N; ++i) {
        out.push_back(hecke_identity("XT-triangle-left", P({{"i", i}}), {{1, {X(i + 1), T(i)}}},
                                     {{1, {T(i), X(i)}}, {1, {X(i + 1)}}}));
        out.push_back(hecke_identity("XT-triangle-right", P({{"i", i}}), {{1, {T(i), X(i + 1)}}},
                                     {{1, {X(i), T(i)}}, {1, {X(i + 1)}}}));
    }
    for (int i = 1; i < N; ++i)
        for (bool ef : {true, false}) {
            Json p = P({{"i", i}});
            p["route"] = ef ? "E*F" : "F*E";
            out.push_back({"T-routes", p, [i, ef](const Model& m) {
                               Composition k = full_flag_weight(m.N());
                               return compare_sides(m, OpMatrix{k, k, hecke_T(m, i)},
                                                    OpMatrix{k, k, hecke_T_geometric(m, i, ef)});
                           }});
        }
    for (int j = 1; j <= N; ++j) {
        Word w;
        if (j >= 2) w = {PsiP(j - 1, 1)};
        for (int pass = 0; pass < 2; ++pass) {
            if (pass == 1) {
                if (j == N) break;
                w = {PsiM(j, -1)};
            }
            if (w.empty()) continue;
            Json p = P({{"j", j}});
            p["route"] = word_str(w);
            out.push_back({"X-routes", p, [j, w, k](const Model& m) {
                               return compare_sides(m, OpMatrix{k, k, hecke_X(m, j, 1)}, m.word_matrix(w, k));
                           }});
        }
    }
    return out;
}

RelationReport verify_hecke(int N, int jobs) { return run_suite("hecke", N, N, 0, jobs); }

}
