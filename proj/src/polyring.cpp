#include "kflag/polyring.hpp"

#include "kflag/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kflag {

int mono_degree(Mono m) {
    int d = 0;
    for (; m; m >>= 8) d += static_cast<int>(m & 0xff);
    return d;
}

Mono mono_from(const std::vector<int>& exps) {
    if (exps.size() > static_cast<size_t>(kMaxVars)) throw InvalidParameter("too many variables");
    Mono m = 0;
    for (size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] < 0 || exps[j] > 255) throw InvalidParameter("exponent out of range");
        m |= static_cast<Mono>(exps[j]) << (8 * j);
    }
    return m;
}

std::vector<int> mono_exps(Mono m, int N) {
    std::vector<int> e(N);
    for (int j = 1; j <= N; ++j) e[j - 1] = mono_exp(m, j);
    return e;
}

PolyElem PolyElem::constant(const Rational& c) { return monomial(0, c); }

PolyElem PolyElem::monomial(Mono m, const Rational& c) {
    PolyElem p;
    if (c != 0) p.terms.emplace(m, c);
    return p;
}

void PolyElem::add_term(Mono m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational PolyElem::coeff(Mono m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

int PolyElem::degree() const {
    int d = -1;
    for (auto& [m, c] : terms) d = std::max(d, mono_degree(m));
    return d;
}

PolyElem& PolyElem::operator+=(const PolyElem& o) {
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

PolyElem& PolyElem::operator-=(const PolyElem& o) {
    for (auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

PolyElem& PolyElem::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

PolyElem mul_raw(const PolyElem& a, const PolyElem& b) {
    PolyElem out;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) out.add_term(ma + mb, ca * cb);
    return out;
}

PolyElem swap_raw(const PolyElem& p, int j) {
    PolyElem out;
    const int sa = 8 * (j - 1), sb = 8 * j;
    for (auto& [m, c] : p.terms) {
        Mono ea = (m >> sa) & 0xff, eb = (m >> sb) & 0xff;
        Mono r = m & ~((Mono(0xff) << sa) | (Mono(0xff) << sb));
        out.terms.emplace(r | (eb << sa) | (ea << sb), c);
    }
    return out;
}

std::string format_rational(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string format_poly(const PolyElem& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms) {
        if (!first) out += " + ";
        first = false;
        out += format_rational(c);
        if (m == 0) continue;
        out += " *";
        for (int v = 1; v <= kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (!e) continue;
            out += " x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InvalidParameter("bad rational '" + s + "'");
    if (q.get_den() == 0) throw InvalidParameter("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Mono parse_monomial(const std::string& s, int N) {
    std::vector<int> e(N, 0);
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || tok[0] != 'x') throw InvalidParameter("bad variable '" + tok + "'");
        auto caret = tok.find('^');
        int var = 0, pw = 1;
        try {
            var = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            if (caret != std::string::npos) pw = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw InvalidParameter("bad variable '" + tok + "'");
        }
        if (var < 1 || var > N || pw < 0) throw InvalidParameter("bad variable '" + tok + "'");
        e[var - 1] += pw;
    }
    return mono_from(e);
}

}

PolyElem parse_poly(const std::string& text, int N) {
    PolyElem p;
    std::string t = trim(text);
    if (t.empty()) throw InvalidParameter("empty polynomial");
    size_t start = 0;
    while (true) {
        size_t pos = t.find(" + ", start);
        std::string term = trim(t.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        auto star = term.find('*');
        if (star != std::string::npos) {
            p.add_term(parse_monomial(term.substr(star + 1), N), parse_rational(trim(term.substr(0, star))));
        } else if (!term.empty() && term[0] == 'x') {
            p.add_term(parse_monomial(term, N), 1);
        } else {
            p.add_term(0, parse_rational(term));
        }
        if (pos == std::string::npos) break;
        start = pos + 3;
    }
    return p;
}

PolyElem complete_homogeneous(int d, const std::vector<int>& vars) {
    PolyElem out;
    if (d < 0) return out;
    if (d == 0) return PolyElem::constant(1);
    std::function<void(size_t, int, Mono)> rec = [&](size_t pos, int left, Mono m) {
        if (pos + 1 == vars.size()) {
            out.add_term(m + mono_var(vars[pos], left), 1);
            return;
        }
        for (int e = 0; e <= left; ++e) rec(pos + 1, left - e, m + mono_var(vars[pos], e));
    };
    if (!vars.empty()) rec(0, d, 0);
    return out;
}

Ring::Ring(int N) : N_(N) {
    if (N < 1 || N > kMaxVars) throw InvalidParameter("N out of supported range");
    std::vector<int> e(N, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == N) {
            staircase_.push_back(mono_from(e));
            return;
        }
        for (int c = 0; c <= N - 1 - v; ++c) {
            e[v] = c;
            rec(v + 1);
        }
        e[v] = 0;
    };
    rec(0);
    // basis order: by degree, then by packed value
    std::sort(staircase_.begin(), staircase_.end(), [](Mono a, Mono b) {
        int da = mono_degree(a), db = mono_degree(b);
        return da != db ? da < db : a < b;
    });
    for (size_t j = 0; j < staircase_.size(); ++j) index_[staircase_[j]] = static_cast<int>(j);
}

int Ring::staircase_index(Mono m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

bool Ring::is_standard(Mono m) const {
    for (int i = 1; i <= N_; ++i)
        if (mono_exp(m, i) > N_ - i) return false;
    return (m >> (8 * N_)) == 0;
}

std::shared_ptr<const PolyElem> Ring::nf_mono(Mono m) const {
    {
        std::lock_guard lock(mu_);
        auto it = nf_cache_.find(m);
        if (it != nf_cache_.end()) return it->second;
    }
    PolyElem out;
    if (mono_degree(m) <= top_degree()) {
        int i = 0;
        for (int v = N_; v >= 1; --v)
            if (mono_exp(m, v) > N_ - v) {
                i = v;
                break;
            }
        if (i == 0) {
            out.add_term(m, 1);
        } else {
            // x_i^d = -sum_{j<d} x_i^j h_{d-j}(x_1..x_{i-1}),  d = N-i+1
            const int d = N_ - i + 1;
            Mono rest = m - mono_var(i, d);
            std::vector<int> lower;
            for (int v = 1; v < i; ++v) lower.push_back(v);
            for (int j = 0; j < d; ++j) {
                PolyElem h = complete_homogeneous(d - j, lower);
                for (auto& [hm, hc] : h.terms) {
                    auto sub = nf_mono(rest + mono_var(i, j) + hm);
                    for (auto& [sm, sc] : sub->terms) out.add_term(sm, -hc * sc);
                }
            }
        }
    }
    auto ptr = std::make_shared<const PolyElem>(std::move(out));
    std::lock_guard lock(mu_);
    return nf_cache_.try_emplace(m, ptr).first->second;
}

PolyElem Ring::normal_form(const PolyElem& p) const {
    PolyElem out;
    for (auto& [m, c] : p.terms) {
        if (is_standard(m)) {
            out.add_term(m, c);
            continue;
        }
        auto r = nf_mono(m);
        for (auto& [rm, rc] : r->terms) out.add_term(rm, c * rc);
    }
    return out;
}

PolyElem Ring::mul(const PolyElem& a, const PolyElem& b) const {
    PolyElem raw;
    const int top = top_degree();
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            Mono m = ma + mb;
            if (mono_degree(m) > top) continue;
            raw.add_term(m, ca * cb);
        }
    return normal_form(raw);
}

PolyElem Ring::a_power(int var, int e) const {
    // (1+x)^e truncated at x^N, valid since x_j^N lies in the ideal
    PolyElem out;
    Rational c = 1;
    for (int m = 0; m < N_; ++m) {
        if (c == 0) break;
        out.add_term(mono_var(var, m), c);
        c = c * Rational(e - m) / Rational(m + 1);
    }
    return out;
}

PolyElem Ring::from_a_monomial(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != N_) throw InvalidParameter("exponent vector length must equal N");
    PolyElem acc = PolyElem::constant(1);
    for (int v = 1; v <= N_; ++v)
        if (exps[v - 1] != 0) acc = mul_raw(acc, a_power(v, exps[v - 1]));
    return normal_form(acc);
}

PolyElem Ring::permute(const PolyElem& p, const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != N_) throw InvalidParameter("permutation length must equal N");
    std::vector<int> seen(N_, 0);
    for (int x : w) {
        if (x < 1 || x > N_ || seen[x - 1]++) throw InvalidParameter("not a permutation");
    }
    PolyElem raw;
    for (auto& [m, c] : p.terms) {
        Mono r = 0;
        for (int v = 1; v <= N_; ++v) r += mono_var(w[v - 1], mono_exp(m, v));
        raw.add_term(r, c);
    }
    return normal_form(raw);
}

PolyElem Ring::dual(const PolyElem& p) const {
    PolyElem out;
    for (auto& [m, c] : p.terms) {
        std::shared_ptr<const PolyElem> img;
        {
            std::lock_guard lock(mu_);
            auto it = dual_cache_.find(m);
            if (it != dual_cache_.end()) img = it->second;
        }
        if (!img) {
            // x_j -> a_j^{-1} - 1
            PolyElem acc = PolyElem::constant(1);
            for (int v = 1; v <= N_; ++v) {
                PolyElem xv = a_power(v, -1) - PolyElem::constant(1);
                for (int e = 0; e < mono_exp(m, v); ++e) acc = mul(acc, xv);
            }
            img = std::make_shared<const PolyElem>(normal_form(acc));
            std::lock_guard lock(mu_);
            img = dual_cache_.try_emplace(m, img).first->second;
        }
        for (auto& [im, ic] : img->terms) out.add_term(im, c * ic);
    }
    return out;
}

std::vector<Rational> Ring::dense(const PolyElem& nf) const {
    std::vector<Rational> v(staircase_.size());
    for (auto& [m, c] : nf.terms) {
        int idx = staircase_index(m);
        if (idx < 0) throw InternalError("dense(): polynomial not in normal form");
        v[idx] = c;
    }
    return v;
}

PolyElem Ring::from_dense(const std::vector<Rational>& v) const {
    PolyElem p;
    for (size_t j = 0; j < v.size(); ++j) p.add_term(staircase_[j], v[j]);
    return p;
}

PolyElem Ring::groebner_generator(int i) const {
    std::vector<int> vars;
    for (int v = 1; v <= i; ++v) vars.push_back(v);
    return complete_homogeneous(N_ - i + 1, vars);
}

namespace {

// distinct rearrangements of an exponent vector within each block
void block_orbit(const std::vector<int>& e, const Composition& k, PolyElem& out) {
    std::vector<int> cur = e;
    std::function<void(int)> rec = [&](int b) {
        if (b > k.n()) {
            out.add_term(mono_from(cur), 1);
            return;
        }
        int lo = k.block_lo(b) - 1, hi = k.block_hi(b);
        std::vector<int> seg(cur.begin() + lo, cur.begin() + hi);
        std::sort(seg.begin(), seg.end());
        do {
            std::copy(seg.begin(), seg.end(), cur.begin() + lo);
            rec(b + 1);
        } while (std::next_permutation(seg.begin(), seg.end()));
    };
    rec(1);
}

}

WeightBasis invariant_basis(const Ring& ring, const Composition& k) {
    if (k.N() != ring.N()) throw InvalidParameter("composition does not match ring size");
    WeightBasis B;
    B.weight = k;
    const long long target = multinomial(k);
    const int D = ring.dim();
    // incremental echelon form: rows reduced against earlier pivots
    std::vector<std::vector<Rational>> echelon;
    std::vector<int> echelon_pivot;
    for (Mono m : ring.staircase()) {
        if (static_cast<long long>(B.elements.size()) == target) break;
        std::vector<int> e = mono_exps(m, ring.N());
        bool canonical = true;
        for (int b = 1; b <= k.n() && canonical; ++b)
            for (int v = k.block_lo(b); v < k.block_hi(b); ++v)
                if (e[v - 1] < e[v]) canonical = false;
        // one representative per orbit: weakly decreasing inside each block
        if (!canonical) continue;
        PolyElem orbit;
        block_orbit(e, k, orbit);
        PolyElem f = ring.normal_form(orbit);
        if (f.is_zero()) continue;
        std::vector<Rational> row = ring.dense(f);
        for (size_t r = 0; r < echelon.size(); ++r) {
            const Rational& c = row[echelon_pivot[r]];
            if (c == 0) continue;
            Rational factor = c;
            for (int j = 0; j < D; ++j)
                if (echelon[r][j] != 0) row[j] -= factor * echelon[r][j];
        }
        int piv = -1;
        for (int j = 0; j < D; ++j)
            if (row[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        Rational inv = 1 / row[piv];
        for (auto& x : row) x *= inv;
        for (size_t r = 0; r < echelon.size(); ++r) {
            Rational c = echelon[r][piv];
            if (c == 0) continue;
            for (int j = 0; j < D; ++j)
                if (row[j] != 0) echelon[r][j] -= c * row[j];
        }
        echelon.push_back(std::move(row));
        echelon_pivot.push_back(piv);
        B.elements.push_back(f);
        B.labels.push_back(e);
        B.dense.push_back(ring.dense(f));
    }
    if (static_cast<long long>(B.elements.size()) != target)
        throw InternalError("invariant basis has rank " + std::to_string(B.elements.size()) +
                            ", expected " + std::to_string(target));

    // coordinates: invert the basis restricted to the pivot columns
    const int d = B.size();
    B.pivots = echelon_pivot;
    std::sort(B.pivots.begin(), B.pivots.end());
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(2 * d));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) A[r][c] = B.dense[c][B.pivots[r]];
        A[r][d + r] = 1;
    }
    for (int c = 0; c < d; ++c) {
        int p = c;
        while (p < d && A[p][c] == 0) ++p;
        if (p == d) throw InternalError("singular pivot block in invariant basis");
        std::swap(A[p], A[c]);
        Rational inv = 1 / A[c][c];
        for (auto& x : A[c]) x *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (int j = 0; j < 2 * d; ++j)
                if (A[c][j] != 0) A[r][j] -= f * A[c][j];
        }
    }
    B.pivot_inverse.assign(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) B.pivot_inverse[r][c] = A[r][d + c];
    return B;
}

std::vector<Rational> coordinates(const Ring& ring, const PolyElem& f, const WeightBasis& basis) {
    const int d = basis.size();
    std::vector<Rational> dv = ring.dense(f);
    std::vector<Rational> c(d);
    for (int r = 0; r < d; ++r)
        for (int j = 0; j < d; ++j) {
            const Rational& x = dv[basis.pivots[j]];
            if (x != 0 && basis.pivot_inverse[r][j] != 0) c[r] += basis.pivot_inverse[r][j] * x;
        }
    for (int j = 0; j < d; ++j)
        if (c[j] != 0)
            for (size_t t = 0; t < dv.size(); ++t)
                if (basis.dense[j][t] != 0) dv[t] -= c[j] * basis.dense[j][t];
    for (auto& x : dv)
        if (x != 0) throw InternalError("class is not in the span of the weight basis");
    return c;
}

}
