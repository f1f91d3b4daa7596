#include "kflag/demazure.hpp"

#include "kflag/errors.hpp"

#include <algorithm>

namespace kflag {

ParabolicRange::ParabolicRange(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo < 1 || hi < lo) throw InvalidParameter("bad parabolic range");
    // (s_lo)(s_{lo+1} s_lo)(s_{lo+2} s_{lo+1} s_lo)...
    for (int top = lo; top < hi; ++top)
        for (int j = top; j >= lo; --j) reduced_word.push_back(j);
}

ParabolicRange ParabolicRange::reverse_sweep(int lo, int hi) {
    ParabolicRange J(lo, hi);
    J.reduced_word.clear();
    for (int bot = hi - 1; bot >= lo; --bot)
        for (int j = bot; j < hi; ++j) J.reduced_word.push_back(j);
    return J;
}

PolyElem demazure_T(const Ring& ring, int j, const PolyElem& f) {
    const int N = ring.N();
    if (j < 1 || j >= N) throw InvalidParameter("Demazure index out of range");
    const int a = j, b = j + 1;
    PolyElem num = mul_raw(PolyElem::constant(1) + PolyElem::monomial(mono_var(b)), f);
    num -= mul_raw(PolyElem::constant(1) + PolyElem::monomial(mono_var(a)), swap_raw(f, j));

    // exact division by (x_b - x_a), peeling powers of x_b from the top
    const int sb = 8 * (b - 1);
    int top = 0;
    for (auto& [m, c] : num.terms) top = std::max(top, mono_exp(m, b));
    std::vector<PolyElem> bucket(top + 1);
    for (auto& [m, c] : num.terms) {
        int e = mono_exp(m, b);
        bucket[e].terms.emplace(m & ~(Mono(0xff) << sb), c);
    }
    PolyElem quot;
    for (int p = top; p >= 1; --p) {
        for (auto& [rest, c] : bucket[p].terms) {
            quot.add_term(rest + mono_var(b, p - 1), c);
            bucket[p - 1].add_term(rest + mono_var(a), c);
        }
    }
    if (!bucket[0].is_zero())
        throw InternalError("Demazure numerator not divisible by x_" + std::to_string(b) + " - x_" +
                            std::to_string(a));
    return ring.normal_form(quot);
}

PolyElem parabolic_push(const Ring& ring, const ParabolicRange& J, const PolyElem& f) {
    if (J.hi > ring.N()) throw InvalidParameter("parabolic range exceeds N");
    PolyElem g = f;
    for (auto it = J.reduced_word.rbegin(); it != J.reduced_word.rend(); ++it) {
        if (g.is_zero()) break;
        g = demazure_T(ring, *it, g);
    }
    return g;
}

PolyElem line_power_push(const Ring& ring, const ParabolicRange& J, int b_pos, int r, const PolyElem& f) {
    if (b_pos < J.lo || b_pos > J.hi) throw InvalidParameter("distinguished variable outside range");
    return parabolic_push(ring, J, ring.mul(f, ring.a_power(b_pos, r)));
}

PolyElem line_power_push_closed(const Ring& ring, const ParabolicRange& J, int r, const PolyElem& f) {
    const int m = J.size() - 1;
    std::vector<PolyElem> a, ainv;
    for (int v = J.lo; v <= J.hi; ++v) {
        a.push_back(ring.a_power(v, 1));
        ainv.push_back(ring.a_power(v, -1));
    }
    // h_d of the given classes via h_d(y_1..y_t) = sum_e y_t^e h_{d-e}(y_1..y_{t-1})
    auto h = [&](int d, const std::vector<PolyElem>& ys) {
        std::vector<PolyElem> prev(d + 1);
        prev[0] = PolyElem::constant(1);
        for (auto& y : ys) {
            std::vector<PolyElem> cur(d + 1);
            for (int t = 0; t <= d; ++t) {
                PolyElem acc = prev[t];
                if (t > 0) acc += ring.mul(y, cur[t - 1]);
                cur[t] = acc;
            }
            prev = std::move(cur);
        }
        return prev[d];
    };
    if (r <= 0) return ring.mul(f, h(-r, ainv));
    if (r <= m) return PolyElem();
    PolyElem det = PolyElem::constant(1);
    for (auto& x : a) det = ring.mul(det, x);
    PolyElem out = ring.mul(f, ring.mul(det, h(r - m - 1, a)));
    if (m % 2) out *= Rational(-1);
    return out;
}

Rational point_euler(const Ring& ring, const PolyElem& f) {
    PolyElem g = parabolic_push(ring, ParabolicRange(1, ring.N()), f);
    for (auto& [m, c] : g.terms)
        if (m != 0) throw InternalError("full symmetrization left a non-constant class");
    return g.constant_term();
}

}
