#include "kflag/relations.hpp"

#include "kflag/hecke.hpp"
#include "kflag/series.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace kflag {

const char* status_str(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    }
    return "?";
}

int RelationReport::count(Status s) const {
    return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                          [s](const InstanceResult& r) { return r.status == s; }));
}

const std::vector<std::string>& relation_suites() {
    static const std::vector<std::string> s = {"defn", "commutator", "ee-ff", "mixed", "serre",
                                               "idempotent", "adjunction", "hecke", "appendix"};
    return s;
}

bool is_relation_suite(const std::string& suite) {
    auto& s = relation_suites();
    return std::find(s.begin(), s.end(), suite) != s.end();
}

namespace {

std::string label_of(const WeightBasis& b, int idx) {
    std::string out = "[";
    for (size_t j = 0; j < b.labels[idx].size(); ++j) {
        if (j) out += ",";
        out += std::to_string(b.labels[idx][j]);
    }
    return out + "]";
}

}

CheckResult compare_sides(const Model& model, const OpMatrix& lhs, const OpMatrix& rhs) {
    if (!lhs.target || !rhs.target) {
        if (lhs.target || rhs.target) throw InternalError("relation sides disagree on absolute zero");
        return {Status::Skip, nullptr};
    }
    if (*lhs.target != *rhs.target || lhs.source != rhs.source)
        throw InternalError("relation sides act between different weights");
    auto d = first_difference(lhs.m, rhs.m);
    if (!d) return {Status::Pass, nullptr};
    const WeightBasis& src = model.basis(lhs.source);
    const WeightBasis& dst = model.basis(*lhs.target);
    Json w;
    w["row"] = d->row;
    w["col"] = d->col;
    w["row_label"] = label_of(dst, d->row);
    w["col_label"] = label_of(src, d->col);
    w["lhs"] = format_rational(d->lhs);
    w["rhs"] = format_rational(d->rhs);
    return {Status::Fail, w};
}

CheckResult check_identity(const Model& model, const Composition& k, const Expr& lhs, const Expr& rhs) {
    return compare_sides(model, model.expr_matrix(lhs, k), model.expr_matrix(rhs, k));
}

RelationInstance identity_instance(std::string relation, Json params, Composition k, Expr lhs, Expr rhs) {
    params["in_range"] = within_generator_ranges(lhs, k) && within_generator_ranges(rhs, k);
    params["lhs"] = expr_str(lhs);
    params["rhs"] = expr_str(rhs);
    return {std::move(relation), std::move(params),
            [k = std::move(k), lhs = std::move(lhs), rhs = std::move(rhs)](const Model& m) {
                return check_identity(m, k, lhs, rhs);
            }};
}

bool within_generator_ranges(const Expr& e, const Composition& k) {
    for (auto& t : e) {
        std::optional<Composition> cur = k;
        for (auto it = t.word.rbegin(); it != t.word.rend() && cur; ++it) {
            const Composition& w = *cur;
            if (it->kind == Kind::E && (it->r < -w[it->i] - 1 || it->r > 0)) return false;
            if (it->kind == Kind::F && (it->r < 0 || it->r > w[it->i + 1] + 1)) return false;
            cur = label_target(*it, w);
        }
    }
    return true;
}

namespace {

struct Range {
    int lo, hi;
};

Range e_range(const Composition& w, int i, int win) { return {-w[i] - 1 - win, win}; }
Range f_range(const Composition& w, int i, int win) { return {-win, w[i + 1] + 1 + win}; }

Json base_params(const Composition& k, int i) {
    Json p;
    p["k"] = k.str();
    p["i"] = i;
    return p;
}

Expr zero_on(const Word& w) { return {{Rational(0), w}}; }
Expr one(const Word& w) { return {{Rational(1), w}}; }
Expr neg(const Word& w) { return {{Rational(-1), w}}; }

using Sink = std::vector<RelationInstance>;

void idempotent_bookkeeping(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i) {
        std::vector<GeneratorLabel> letters;
        for (int r = e_range(k, i, win).lo; r <= e_range(k, i, win).hi; ++r) letters.push_back(E(i, r));
        for (int s = f_range(k, i, win).lo; s <= f_range(k, i, win).hi; ++s) letters.push_back(F(i, s));
        for (int p : {1, -1}) {
            letters.push_back(PsiP(i, p));
            letters.push_back(PsiM(i, p));
            letters.push_back(H(i, p));
        }
        for (auto& g : letters) {
            Json p = base_params(k, i);
            p["op"] = g.str();
            p["in_range"] = within_generator_ranges({{1, {g}}}, k);
            out.push_back({"weight-bookkeeping", p, [k, g](const Model& m) -> CheckResult {
                               std::optional<Composition> declared = k;
                               if (g.kind == Kind::E) declared = shift_by_root(k, g.i, +1);
                               if (g.kind == Kind::F) declared = shift_by_root(k, g.i, -1);
                               auto tgt = m.word_target({g}, k);
                               if (tgt != declared) {
                                   Json w;
                                   w["declared"] = declared ? declared->str() : "none";
                                   w["threaded"] = tgt ? tgt->str() : "none";
                                   return {Status::Fail, w};
                               }
                               if (!tgt) return {Status::Skip, nullptr};
                               const Matrix& M = m.generator_matrix(g, k);
                               if (M.rows() != m.basis(*tgt).size() || M.cols() != m.basis(k).size()) {
                                   Json w;
                                   w["shape"] = std::to_string(M.rows()) + "x" + std::to_string(M.cols());
                                   return {Status::Fail, w};
                               }
                               return {Status::Pass, nullptr};
                           }});
        }
    }
}

void cartan_commute(Sink& out, const Composition& k) {
    std::vector<GeneratorLabel> letters;
    for (int i = 1; i < k.n(); ++i)
        for (int p : {1, -1}) {
            letters.push_back(PsiP(i, p));
            letters.push_back(PsiM(i, p));
            letters.push_back(H(i, p));
        }
    for (size_t a = 0; a < letters.size(); ++a)
        for (size_t b = a + 1; b < letters.size(); ++b) {
            Json p;
            p["k"] = k.str();
            p["x"] = letters[a].str();
            p["y"] = letters[b].str();
            out.push_back(identity_instance("cartan-commute", p, k, one({letters[a], letters[b]}),
                                            one({letters[b], letters[a]})));
        }
}

void psi_inverse(Sink& out, const Composition& k) {
    for (int i = 1; i < k.n(); ++i)
        for (int p : {1, -1}) {
            Json q = base_params(k, i);
            q["power"] = p;
            out.push_back(identity_instance("psi+-inverse", q, k, one({PsiP(i, p), PsiP(i, -p)}), one({})));
            out.push_back(identity_instance("psi--inverse", q, k, one({PsiM(i, p), PsiM(i, -p)}), one({})));
        }
}

const char* shape(int i, int j) {
    if (i == j) return "j=i";
    if (j == i + 1) return "j=i+1";
    if (j == i - 1) return "j=i-1";
    return "far";
}

void ee_relations(Sink& out, const Composition& k, int win) {
    for (int j = 1; j < k.n(); ++j) {
        auto mid = shift_by_root(k, j, +1);
        if (!mid) continue;
        for (int i = 1; i < k.n(); ++i)
            for (int s = e_range(k, j, win).lo; s <= e_range(k, j, win).hi; ++s)
                for (int r = e_range(*mid, i, win).lo; r <= e_range(*mid, i, win).hi; ++r) {
                    Expr lhs = one({E(i, r), E(j, s)});
                    Expr rhs;
                    if (j == i) rhs = neg({E(i, s + 1), E(i, r - 1)});
                    else if (j == i + 1) rhs = {{1, {E(i + 1, s), E(i, r)}}, {-1, {E(i + 1, s - 1), E(i, r + 1)}}};
                    else if (j == i - 1) rhs = {{1, {E(i, r + 1), E(i - 1, s - 1)}}, {-1, {E(i - 1, s - 1), E(i, r + 1)}}};
                    else rhs = one({E(j, s), E(i, r)});
                    Json p = base_params(k, i);
                    p["j"] = j;
                    p["r"] = r;
                    p["s"] = s;
                    p["case"] = shape(i, j);
                    out.push_back(identity_instance("ee", p, k, lhs, rhs));
                }
    }
}

void ff_relations(Sink& out, const Composition& k, int win) {
    for (int j = 1; j < k.n(); ++j) {
        auto mid = shift_by_root(k, j, -1);
        if (!mid) continue;
        for (int i = 1; i < k.n(); ++i)
            for (int s = f_range(k, j, win).lo; s <= f_range(k, j, win).hi; ++s)
                for (int r = f_range(*mid, i, win).lo; r <= f_range(*mid, i, win).hi; ++r) {
                    Expr lhs = one({F(i, r), F(j, s)});
                    Expr rhs;
                    if (j == i) rhs = neg({F(i, s - 1), F(i, r + 1)});
                    else if (j == i + 1) rhs = {{1, {F(i, r - 1), F(i + 1, s + 1)}}, {-1, {F(i + 1, s + 1), F(i, r - 1)}}};
                    else if (j == i - 1) rhs = {{1, {F(i - 1, s), F(i, r)}}, {-1, {F(i - 1, s + 1), F(i, r - 1)}}};
                    else rhs = one({F(j, s), F(i, r)});
                    Json p = base_params(k, i);
                    p["j"] = j;
                    p["r"] = r;
                    p["s"] = s;
                    p["case"] = shape(i, j);
                    out.push_back(identity_instance("ff", p, k, lhs, rhs));
                }
    }
}

void psi_conjugation(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i)
        for (int j = 1; j < k.n(); ++j) {
            for (int r = e_range(k, j, win).lo; r <= e_range(k, j, win).hi; ++r) {
                // psi+ e_{j,r} = c e_{j,r'} psi+
                int rp = r, rm = r, cp = 1, cm = 1;
                if (j == i) rp = r + 1, cp = -1, rm = r + 1, cm = -1;
                else if (j == i + 1) rp = r - 1, cp = -1, rm = r;
                else if (j == i - 1) rm = r - 1, cm = -1;
                Json p = base_params(k, i);
                p["j"] = j;
                p["r"] = r;
                p["case"] = shape(i, j);
                out.push_back(identity_instance("psi+-e", p, k, one({PsiP(i), E(j, r)}), {{cp, {E(j, rp), PsiP(i)}}}));
                out.push_back(identity_instance("psi--e", p, k, one({PsiM(i), E(j, r)}), {{cm, {E(j, rm), PsiM(i)}}}));
            }
            for (int r = f_range(k, j, win).lo; r <= f_range(k, j, win).hi; ++r) {
                int rp = r, rm = r, cp = 1, cm = 1;
                if (j == i) rp = r - 1, cp = -1, rm = r - 1, cm = -1;
                else if (j == i + 1) rp = r + 1, cp = -1, rm = r;
                else if (j == i - 1) rm = r + 1, cm = -1;
                Json p = base_params(k, i);
                p["j"] = j;
                p["r"] = r;
                p["case"] = shape(i, j);
                out.push_back(identity_instance("psi+-f", p, k, one({PsiP(i), F(j, r)}), {{cp, {F(j, rp), PsiP(i)}}}));
                out.push_back(identity_instance("psi--f", p, k, one({PsiM(i), F(j, r)}), {{cm, {F(j, rm), PsiM(i)}}}));
            }
        }
}

void h_commutators(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i)
        for (int j = 1; j < k.n(); ++j)
            for (int sg : {1, -1}) {
                for (int r = e_range(k, j, win).lo; r <= e_range(k, j, win).hi; ++r) {
                    Expr lhs = {{1, {H(i, sg), E(j, r)}}, {-1, {E(j, r), H(i, sg)}}};
                    Expr rhs = zero_on({E(j, r)});
                    if (j == i + 1) rhs = neg({E(i + 1, r + sg)});
                    if (j == i - 1) rhs = one({E(i - 1, r + sg)});
                    Json p = base_params(k, i);
                    p["j"] = j;
                    p["r"] = r;
                    p["h"] = sg;
                    p["case"] = shape(i, j);
                    out.push_back(identity_instance("h-e", p, k, lhs, rhs));
                }
                for (int r = f_range(k, j, win).lo; r <= f_range(k, j, win).hi; ++r) {
                    Expr lhs = {{1, {H(i, sg), F(j, r)}}, {-1, {F(j, r), H(i, sg)}}};
                    Expr rhs = zero_on({F(j, r)});
                    if (j == i + 1) rhs = one({F(i + 1, r + sg)});
                    if (j == i - 1) rhs = neg({F(i - 1, r + sg)});
                    Json p = base_params(k, i);
                    p["j"] = j;
                    p["r"] = r;
                    p["h"] = sg;
                    p["case"] = shape(i, j);
                    out.push_back(identity_instance("h-f", p, k, lhs, rhs));
                }
            }
}

// [e_{i,r}, f_{i,s}] by the band containing r+s; none outside the five bands
std::optional<std::pair<std::string, Expr>> ef_band(const Composition& k, int i, int r, int s) {
    const int t = r + s, top = k[i + 1], bot = -k[i];
    if (t == top + 1) return std::make_pair(std::string("top"), one({PsiP(i), H(i, 1)}));
    // both blocks empty: the psi+ and psi- bands coincide and contribute together
    if (t == top && t == bot) return std::make_pair(std::string("psi+psi-"), Expr{{1, {PsiP(i)}}, {-1, {PsiM(i)}}});
    if (t == top) return std::make_pair(std::string("psi+"), one({PsiP(i)}));
    if (t >= bot + 1 && t <= top - 1) return std::make_pair(std::string("band"), zero_on({}));
    if (t == bot) return std::make_pair(std::string("psi-"), neg({PsiM(i)}));
    if (t == bot - 1) return std::make_pair(std::string("bottom"), neg({PsiM(i), H(i, -1)}));
    return std::nullopt;
}

void ef_relations(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i)
        for (int j = 1; j < k.n(); ++j)
            for (int r = e_range(k, i, win).lo; r <= e_range(k, i, win).hi; ++r)
                for (int s = f_range(k, j, win).lo; s <= f_range(k, j, win).hi; ++s) {
                    Expr lhs = {{1, {E(i, r), F(j, s)}}, {-1, {F(j, s), E(i, r)}}};
                    Json p = base_params(k, i);
                    p["j"] = j;
                    p["r"] = r;
                    p["s"] = s;
                    if (i != j) {
                        p["case"] = "i!=j";
                        out.push_back(identity_instance("ef", p, k, lhs, zero_on({E(i, r), F(j, s)})));
                        continue;
                    }
                    auto band = ef_band(k, i, r, s);
                    if (!band) continue;
                    p["case"] = band->first;
                    out.push_back(identity_instance("ef", p, k, lhs, band->second));
                }
}

void commutator_table(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i)
        for (int r = -win; r <= win; ++r)
            for (int s = -k[i] - 1 - r; s <= k[i + 1] + 1 - r; ++s) {
                auto band = ef_band(k, i, r, s);
                Expr lhs = {{1, {E(i, r), F(i, s)}}, {-1, {F(i, s), E(i, r)}}};
                Json p = base_params(k, i);
                p["r"] = r;
                p["s"] = s;
                out.push_back(identity_instance("commutator-" + band->first, p, k, lhs, band->second));
            }
}

void serre(Sink& out, const Composition& k) {
    for (int i = 1; i + 1 < k.n(); ++i) {
        const int j = i + 1;
        Json p = base_params(k, i);
        out.push_back(identity_instance("serre-e-outer", p, k, one({E(j, 0), E(i, 0), E(j, 0)}), one({E(j, 0), E(j, 0), E(i, 0)})));
        out.push_back(identity_instance("serre-e-inner", p, k, one({E(i, 0), E(j, 0), E(i, 0)}), one({E(j, 0), E(i, 0), E(i, 0)})));
        out.push_back(identity_instance("serre-f-outer", p, k, one({F(j, 0), F(i, 0), F(j, 0)}), one({F(i, 0), F(j, 0), F(j, 0)})));
        out.push_back(identity_instance("serre-f-inner", p, k, one({F(i, 0), F(j, 0), F(i, 0)}), one({F(i, 0), F(i, 0), F(j, 0)})));
    }
}

void idempotent(Sink& out, const Composition& k) {
    for (int i = 1; i < k.n(); ++i) {
        Json p = base_params(k, i);
        Word fe = {F(i, 0), E(i, 0)}, ef = {E(i, 0), F(i, 0)};
        Word fefe = {F(i, 0), E(i, 0), F(i, 0), E(i, 0)}, efef = {E(i, 0), F(i, 0), E(i, 0), F(i, 0)};
        if (k[i] == 1) out.push_back(identity_instance("idempotent-fe-one", p, k, one(fefe), one(fe)));
        if (k[i + 1] == 1) out.push_back(identity_instance("idempotent-ef-one", p, k, one(efef), one(ef)));
        if (k[i] == 0) out.push_back(identity_instance("idempotent-ef-zero", p, k, one(efef), one(ef)));
        if (k[i + 1] == 0) out.push_back(identity_instance("idempotent-fe-zero", p, k, one(fefe), one(fe)));
    }
}

CheckResult gram_identity(const Model& m, const Matrix& lhs, const Matrix& rhs, const Composition& src,
                          const Composition& dst) {
    OpMatrix a{src, dst, lhs}, b{src, dst, rhs};
    return compare_sides(m, a, b);
}

// right adjoint R of X: k -> t satisfies X^T G_t = G_k R
CheckResult check_right_adjoint(const Model& m, const GeneratorLabel& g, const Composition& k, const Expr& R) {
    auto t = label_target(g, k);
    if (!t) return {Status::Skip, nullptr};
    OpMatrix r = m.expr_matrix(R, *t);
    if (!r.target || *r.target != k) throw InternalError("adjoint lands in the wrong weight");
    const Matrix& X = m.generator_matrix(g, k);
    return gram_identity(m, X.transpose() * m.gram(*t), m.gram(k) * r.m, *t, k);
}

// left adjoint L of X: k -> t satisfies L^T G_k = G_t X
CheckResult check_left_adjoint(const Model& m, const GeneratorLabel& g, const Composition& k, const Expr& L) {
    auto t = label_target(g, k);
    if (!t) return {Status::Skip, nullptr};
    OpMatrix l = m.expr_matrix(L, *t);
    if (!l.target || *l.target != k) throw InternalError("adjoint lands in the wrong weight");
    const Matrix& X = m.generator_matrix(g, k);
    return gram_identity(m, l.m.transpose() * m.gram(k), m.gram(*t) * X, k, *t);
}

void adjunctions(Sink& out, const Composition& k, int win) {
    for (int i = 1; i < k.n(); ++i) {
        if (shift_by_root(k, i, +1))
            for (int r = e_range(k, i, win).lo; r <= e_range(k, i, win).hi; ++r) {
                Json p = base_params(k, i);
                p["r"] = r;
                p["in_range"] = r <= 0 && r >= -k[i] - 1;
                Expr R = right_adjoint_E(i, r, k), L = left_adjoint_E(i, r, k);
                p["adjoint"] = expr_str(R);
                out.push_back({"adj-right-E", p, [=](const Model& m) { return check_right_adjoint(m, E(i, r), k, R); }});
                p["adjoint"] = expr_str(L);
                out.push_back({"adj-left-E", p, [=](const Model& m) { return check_left_adjoint(m, E(i, r), k, L); }});
            }
        if (shift_by_root(k, i, -1))
            for (int s = f_range(k, i, win).lo; s <= f_range(k, i, win).hi; ++s) {
                Json p = base_params(k, i);
                p["s"] = s;
                p["in_range"] = s >= 0 && s <= k[i + 1] + 1;
                Expr R = right_adjoint_F(i, s, k), L = left_adjoint_F(i, s, k);
                p["adjoint"] = expr_str(R);
                out.push_back({"adj-right-F", p, [=](const Model& m) { return check_right_adjoint(m, F(i, s), k, R); }});
                p["adjoint"] = expr_str(L);
                out.push_back({"adj-left-F", p, [=](const Model& m) { return check_left_adjoint(m, F(i, s), k, L); }});
            }
        Json p = base_params(k, i);
        p["in_range"] = true;
        Expr hm = one({H(i, -1)});
        out.push_back({"adj-right-H", p, [=](const Model& m) { return check_right_adjoint(m, H(i, 1), k, hm); }});
        out.push_back({"adj-left-H", p, [=](const Model& m) { return check_left_adjoint(m, H(i, 1), k, hm); }});
    }
}

}

std::vector<RelationInstance> enumerate_instances(const std::string& suite, int n, int N, int window) {
    if (window < 0) throw InvalidParameter("window must be non-negative");
    if (suite == "hecke") return hecke_instances(N);
    if (suite == "appendix") return appendix_instances(n, N, window);
    if (!is_relation_suite(suite)) throw InvalidParameter("unknown suite '" + suite + "'");
    Sink out;
    for (const Composition& k : compositions(n, N)) {
        if (suite == "defn") {
            idempotent_bookkeeping(out, k, window);
            cartan_commute(out, k);
            psi_inverse(out, k);
        }
        if (suite == "defn" || suite == "ee-ff") {
            ee_relations(out, k, window);
            ff_relations(out, k, window);
        }
        if (suite == "defn" || suite == "mixed") {
            psi_conjugation(out, k, window);
            h_commutators(out, k, window);
        }
        if (suite == "defn") ef_relations(out, k, window);
        if (suite == "commutator") commutator_table(out, k, window);
        if (suite == "serre") serre(out, k);
        if (suite == "idempotent") idempotent(out, k);
        if (suite == "adjunction") adjunctions(out, k, window);
    }
    return out;
}

std::vector<InstanceResult> run_instances(const Model& model, const std::vector<RelationInstance>& insts, int jobs) {
    std::vector<InstanceResult> res(insts.size());
    auto run_one = [&](size_t j) {
        res[j] = {insts[j].relation, insts[j].params, Status::Pass, nullptr};
        CheckResult c = insts[j].check(model);
        res[j].status = c.status;
        res[j].witness = std::move(c.witness);
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || insts.size() < 2) {
        for (size_t j = 0; j < insts.size(); ++j) run_one(j);
        return res;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t j; (j = next++) < insts.size();) {
                try {
                    run_one(j);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return res;
}

RelationReport run_suite(const std::string& suite, int n, int N, int window, int jobs) {
    if (suite == "hecke") n = N;
    if (suite == "appendix" && window < 1) throw InvalidParameter("appendix suite needs window >= 1");
    RelationReport rep;
    rep.suite = suite;
    rep.n = n;
    rep.N = N;
    rep.window = window;
    if (suite == "appendix") rep.note = "evidence, not proof";
    Model model(N);
    rep.instances = run_instances(model, enumerate_instances(suite, n, N, window), jobs);
    return rep;
}

}
