#include "kflag/generators.hpp"

#include <cctype>

namespace kflag {

std::string GeneratorLabel::str() const {
    const std::string si = std::to_string(i);
    switch (kind) {
    case Kind::E: return "E[" + si + "," + std::to_string(r) + "]";
    case Kind::F: return "F[" + si + "," + std::to_string(r) + "]";
    case Kind::PsiPlus: return "Psi+[" + si + "]^" + std::to_string(r);
    case Kind::PsiMinus: return "Psi-[" + si + "]^" + std::to_string(r);
    case Kind::HPlus: return "H[" + si + ",+1]";
    case Kind::HMinus: return "H[" + si + ",-1]";
    case Kind::Id: return "Id";
    }
    return "?";
}

std::string word_str(const Word& w) {
    if (w.empty()) return "Id";
    std::string out;
    for (size_t j = 0; j < w.size(); ++j) {
        if (j) out += "*";
        out += w[j].str();
    }
    return out;
}

std::string expr_str(const Expr& e) {
    if (e.empty()) return "0";
    std::string out;
    for (size_t j = 0; j < e.size(); ++j) {
        if (j) out += " + ";
        if (e[j].coef != 1) out += "(" + format_rational(e[j].coef) + ")";
        out += word_str(e[j].word);
    }
    return out;
}

ParseError::ParseError(const std::string& msg, size_t p)
    : InvalidParameter(msg + " at position " + std::to_string(p)), pos(p) {}

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(const std::string& t) {
        skip();
        if (s.compare(p, t.size(), t) == 0) {
            p += t.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& t) {
        if (!eat(t)) throw ParseError("expected '" + t + "'", p);
    }
    int integer() {
        skip();
        size_t start = p;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
        size_t digits = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == digits) throw ParseError("expected integer", start);
        try {
            return std::stoi(s.substr(start, p - start));
        } catch (const std::exception&) {
            throw ParseError("integer out of range", start);
        }
    }
    GeneratorLabel label() {
        skip();
        size_t start = p;
        GeneratorLabel g;
        if (eat("Psi+") || eat("Psi-")) {
            g.kind = s[p - 1] == '+' ? Kind::PsiPlus : Kind::PsiMinus;
            expect("[");
            g.i = integer();
            expect("]");
            g.r = 1;
            if (eat("^")) g.r = integer();
            if (g.r == 0) g = GeneratorLabel{};
        } else if (eat("E[") || eat("F[")) {
            g.kind = s[p - 2] == 'E' ? Kind::E : Kind::F;
            g.i = integer();
            expect(",");
            g.r = integer();
            expect("]");
        } else if (eat("H[")) {
            g.i = integer();
            expect(",");
            int sign = integer();
            if (sign != 1 && sign != -1) throw ParseError("H power must be +1 or -1", start);
            expect("]");
            g = H(g.i, sign);
        } else if (eat("Id")) {
            g = GeneratorLabel{};
        } else {
            throw ParseError("unknown generator", start);
        }
        if (g.kind != Kind::Id && g.i < 1) throw ParseError("node index must be positive", start);
        return g;
    }
};

}

Word parse_word(const std::string& text) {
    Parser ps{text};
    Word w;
    while (true) {
        GeneratorLabel g = ps.label();
        if (g.kind != Kind::Id) w.push_back(g);
        if (!ps.eat("*")) break;
    }
    ps.skip();
    if (ps.p != text.size()) throw ParseError("trailing input", ps.p);
    return w;
}

namespace {

bool formal_step(std::vector<int>& parts, const GeneratorLabel& g) {
    if (g.kind == Kind::Id) return true;
    if (g.i < 1 || g.i >= static_cast<int>(parts.size())) throw InvalidParameter("node index out of range: " + g.str());
    if (g.kind == Kind::E) {
        parts[g.i - 1] -= 1;
        parts[g.i] += 1;
    } else if (g.kind == Kind::F) {
        parts[g.i - 1] += 1;
        parts[g.i] -= 1;
    }
    for (int x : parts)
        if (x < 0) return false;
    return true;
}

}

std::optional<Composition> label_target(const GeneratorLabel& g, const Composition& k) {
    std::vector<int> p = k.parts();
    if (!formal_step(p, g)) return std::nullopt;
    return Composition(p);
}

Model::Model(int N) : ring_(N) {}

const WeightBasis& Model::basis(const Composition& k) const {
    {
        std::lock_guard lock(mu_);
        auto it = bases_.find(k.parts());
        if (it != bases_.end()) return *it->second;
    }
    auto b = std::make_shared<const WeightBasis>(invariant_basis(ring_, k));
    std::lock_guard lock(mu_);
    return *bases_.try_emplace(k.parts(), b).first->second;
}

PolyElem Model::multiplier(const GeneratorLabel& g, const Composition& k) const {
    std::vector<int> e(N(), 0);
    const int i = g.i;
    switch (g.kind) {
    case Kind::PsiPlus: {
        for (int v = k.block_lo(i + 1); v <= k.block_hi(i + 1); ++v) e[v - 1] = g.r;
        PolyElem m = ring_.from_a_monomial(e);
        if (((1 - k[i + 1]) * g.r) % 2) m *= Rational(-1);
        return m;
    }
    case Kind::PsiMinus: {
        for (int v = k.block_lo(i); v <= k.block_hi(i); ++v) e[v - 1] = -g.r;
        PolyElem m = ring_.from_a_monomial(e);
        if (((1 - k[i]) * g.r) % 2) m *= Rational(-1);
        return m;
    }
    case Kind::HPlus:
    case Kind::HMinus: {
        PolyElem m;
        for (int v = k.block_lo(i); v <= k.block_hi(i + 1); ++v) m += ring_.a_power(v, g.r);
        return ring_.normal_form(m);
    }
    case Kind::Id: return PolyElem::constant(1);
    default: throw InvalidParameter("not a multiplication operator: " + g.str());
    }
}

PolyElem Model::apply(const GeneratorLabel& g, const Composition& k, const PolyElem& f) const {
    if (g.kind != Kind::Id && (g.i < 1 || g.i >= k.n())) throw InvalidParameter("node index out of range: " + g.str());
    if (g.kind == Kind::E || g.kind == Kind::F) {
        if (!label_target(g, k)) return PolyElem();
        RefinedComposition rc = g.kind == Kind::E ? refinement_for_E(k, g.i) : refinement_for_F(k, g.i);
        ParabolicRange J(rc.merge_lo, rc.merge_hi);
        return parabolic_push(ring_, J, ring_.mul(f, ring_.a_power(rc.singleton_pos, g.r)));
    }
    return ring_.mul(f, multiplier(g, k));
}

std::optional<Composition> Model::word_target(const Word& w, const Composition& k) const {
    std::vector<int> p = k.parts();
    for (auto it = w.rbegin(); it != w.rend(); ++it) formal_step(p, *it);
    for (int x : p)
        if (x < 0) return std::nullopt;
    return Composition(p);
}

WordValue Model::evaluate_word(const Word& w, const Composition& k, const PolyElem& f) const {
    WordValue out;
    out.weight = word_target(w, k);
    if (!out.weight) return out;
    Composition cur = k;
    PolyElem v = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto nxt = label_target(*it, cur);
        if (!nxt) return out;
        v = apply(*it, cur, v);
        cur = *nxt;
    }
    out.value = std::move(v);
    return out;
}

std::vector<Rational> Model::coords(const Composition& k, const PolyElem& f) const {
    return coordinates(ring_, f, basis(k));
}

Matrix Model::map_matrix(const Composition& src, const Composition& dst,
                         const std::function<PolyElem(const PolyElem&)>& fn) const {
    const WeightBasis& S = basis(src);
    const WeightBasis& D = basis(dst);
    Matrix m(D.size(), S.size());
    for (int c = 0; c < S.size(); ++c) {
        auto col = coords(dst, fn(S.elements[c]));
        for (int r = 0; r < D.size(); ++r) m(r, c) = col[r];
    }
    return m;
}

const Matrix& Model::generator_matrix(const GeneratorLabel& g, const Composition& k) const {
    auto key = std::make_tuple(g, k.parts());
    {
        std::lock_guard lock(mu_);
        auto it = mats_.find(key);
        if (it != mats_.end()) return *it->second;
    }
    auto tgt = label_target(g, k);
    if (!tgt) throw InternalError("generator matrix requested with out-of-range target: " + g.str());
    auto m = std::make_shared<Matrix>(map_matrix(k, *tgt, [&](const PolyElem& f) { return apply(g, k, f); }));
    std::lock_guard lock(mu_);
    return *mats_.try_emplace(key, std::move(m)).first->second;
}

OpMatrix Model::word_matrix(const Word& w, const Composition& k) const {
    OpMatrix out;
    out.source = k;
    out.target = word_target(w, k);
    if (!out.target) return out;
    const int rows = basis(*out.target).size();
    Composition cur = k;
    Matrix acc = Matrix::identity(basis(k).size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto nxt = label_target(*it, cur);
        if (!nxt) {
            out.m = Matrix(rows, basis(k).size());
            return out;
        }
        if (it->kind != Kind::Id) acc = generator_matrix(*it, cur) * acc;
        cur = *nxt;
    }
    out.m = std::move(acc);
    return out;
}

OpMatrix Model::expr_matrix(const Expr& e, const Composition& k) const {
    OpMatrix out;
    out.source = k;
    bool first = true;
    for (auto& t : e) {
        OpMatrix w = word_matrix(t.word, k);
        if (first) {
            out.target = w.target;
            if (w.target) out.m = Matrix(basis(*w.target).size(), basis(k).size());
            first = false;
        } else if (w.target != out.target) {
            throw InternalError("terms of a relation side land in different weights");
        }
        if (w.target && t.coef != 0) out.m += w.m * t.coef;
    }
    if (first) throw InternalError("empty expression has no target weight");
    return out;
}

Rational Model::euler(const PolyElem& f) const {
    std::shared_ptr<const std::vector<Rational>> chi;
    {
        std::lock_guard lock(mu_);
        chi = chi_;
    }
    if (!chi) {
        auto v = std::make_shared<std::vector<Rational>>();
        for (Mono m : ring_.staircase()) v->push_back(point_euler(ring_, PolyElem::monomial(m)));
        std::lock_guard lock(mu_);
        if (!chi_) chi_ = v;
        chi = chi_;
    }
    Rational s = 0;
    for (auto& [m, c] : f.terms) {
        int idx = ring_.staircase_index(m);
        if (idx < 0) throw InternalError("euler(): class not in normal form");
        s += c * (*chi)[idx];
    }
    return s;
}

Rational Model::euler_pairing(const Composition& k, const PolyElem& f, const PolyElem& g) const {
    (void)k;
    return euler(ring_.mul(ring_.dual(f), g));
}

const Matrix& Model::gram(const Composition& k) const {
    {
        std::lock_guard lock(mu_);
        auto it = grams_.find(k.parts());
        if (it != grams_.end()) return *it->second;
    }
    const WeightBasis& B = basis(k);
    auto G = std::make_shared<Matrix>(B.size(), B.size());
    for (int a = 0; a < B.size(); ++a)
        for (int b = 0; b < B.size(); ++b) (*G)(a, b) = euler_pairing(k, B.elements[a], B.elements[b]);
    std::lock_guard lock(mu_);
    return *grams_.try_emplace(k.parts(), std::move(G)).first->second;
}

namespace {
Rational sign(int m) { return (m % 2) ? Rational(-1) : Rational(1); }
}

Expr right_adjoint_E(int i, int r, const Composition& k) {
    return {{sign(-r - 1), {PsiP(i, r + 1), F(i, k[i + 1] + 2), PsiP(i, -r - 2)}}};
}

Expr left_adjoint_E(int i, int r, const Composition& k) {
    return {{sign(r + k[i]), {PsiM(i, r + k[i] - 1), F(i, 0), PsiM(i, -r - k[i])}}};
}

Expr right_adjoint_F(int i, int s, const Composition& k) {
    return {{sign(s - 1), {PsiM(i, -s + 1), E(i, -k[i] - 2), PsiM(i, s - 2)}}};
}

Expr left_adjoint_F(int i, int s, const Composition& k) {
    return {{sign(-s + k[i + 1]), {PsiP(i, -s + k[i + 1] - 1), E(i, 0), PsiP(i, s - k[i + 1])}}};
}

}
