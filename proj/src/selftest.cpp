#include "kflag/selftest.hpp"

#include "kflag/demazure.hpp"
#include "kflag/errors.hpp"

#include <functional>

namespace kflag {

namespace {

std::vector<std::vector<int>> small_exponents(int N, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(N, -bound);
    while (true) {
        out.push_back(e);
        int v = 0;
        while (v < N && e[v] == bound) e[v++] = -bound;
        if (v == N) break;
        ++e[v];
    }
    return out;
}

}

std::vector<SelftestCheck> run_selftest(int max_N) {
    std::vector<SelftestCheck> out;
    auto record = [&](const std::string& name, int N, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const InternalError&) {
            throw;
        } catch (const std::exception& ex) {
            detail = ex.what();
        }
        out.push_back({name, N, detail.empty(), detail});
    };
    for (int N = 2; N <= max_N; ++N) {
        Ring ring(N);
        long long fact = 1;
        for (int j = 2; j <= N; ++j) fact *= j;
        record("coinvariant-dimension", N, [&]() -> std::string {
            return ring.dim() == fact ? "" : "dimension " + std::to_string(ring.dim());
        });
        record("nilpotent-variables", N, [&]() -> std::string {
            for (int v = 1; v <= N; ++v)
                if (!ring.normal_form(PolyElem::monomial(mono_var(v, N))).is_zero()) return "x" + std::to_string(v) + "^N != 0";
            return "";
        });
        record("ideal-stable", N, [&]() -> std::string {
            for (int i = 1; i <= N; ++i) {
                PolyElem g = ring.groebner_generator(i);
                if (!ring.normal_form(g).is_zero()) return "generator not reduced to zero";
                for (int j = 1; j < N; ++j)
                    if (!ring.normal_form(swap_raw(g, j)).is_zero()) return "ideal not stable under s" + std::to_string(j);
            }
            return "";
        });
        record("unit-inverse", N, [&]() -> std::string {
            int bound = N <= 3 ? 3 : (N == 4 ? 2 : 1);
            for (auto& c : small_exponents(N, bound)) {
                std::vector<int> m(c.size());
                for (size_t j = 0; j < c.size(); ++j) m[j] = -c[j];
                if (!(ring.mul(ring.from_a_monomial(c), ring.from_a_monomial(m)) == PolyElem::constant(1)))
                    return "a^c * a^-c != 1";
            }
            return "";
        });
        record("T-idempotent", N, [&]() -> std::string {
            for (Mono m : ring.staircase())
                for (int j = 1; j < N; ++j) {
                    PolyElem t = demazure_T(ring, j, PolyElem::monomial(m));
                    if (!(demazure_T(ring, j, t) == t)) return "T" + std::to_string(j) + " not idempotent";
                }
            return "";
        });
        record("T-braid", N, [&]() -> std::string {
            for (Mono m : ring.staircase()) {
                PolyElem f = PolyElem::monomial(m);
                for (int j = 1; j + 1 < N; ++j) {
                    PolyElem a = demazure_T(ring, j, demazure_T(ring, j + 1, demazure_T(ring, j, f)));
                    PolyElem b = demazure_T(ring, j + 1, demazure_T(ring, j, demazure_T(ring, j + 1, f)));
                    if (!(a == b)) return "braid fails at s" + std::to_string(j);
                }
                for (int i = 1; i < N; ++i)
                    for (int j = i + 2; j < N; ++j)
                        if (!(demazure_T(ring, i, demazure_T(ring, j, f)) == demazure_T(ring, j, demazure_T(ring, i, f))))
                            return "far commutation fails";
            }
            return "";
        });
        record("reduced-word-independence", N, [&]() -> std::string {
            for (int lo = 1; lo <= N; ++lo)
                for (int hi = lo; hi <= N && hi - lo + 1 <= 4; ++hi) {
                    ParabolicRange a(lo, hi), b = ParabolicRange::reverse_sweep(lo, hi);
                    for (Mono m : ring.staircase()) {
                        PolyElem f = PolyElem::monomial(m);
                        if (!(parabolic_push(ring, a, f) == parabolic_push(ring, b, f))) return "words disagree";
                    }
                }
            return "";
        });
        record("projective-bundle-table", N, [&]() -> std::string {
            for (int lo = 1; lo <= N; ++lo)
                for (int hi = lo + 1; hi <= N && hi - lo + 1 <= 4; ++hi) {
                    ParabolicRange J(lo, hi);
                    std::vector<PolyElem> fs = {PolyElem::constant(1)};
                    PolyElem e1;
                    for (int v = lo; v <= hi; ++v) e1.add_term(mono_var(v), 1);
                    fs.push_back(ring.normal_form(e1));
                    if (lo > 1) fs.push_back(ring.a_power(lo - 1, 2));
                    // the distinguished line sits at the low end of the range
                    for (auto& f : fs)
                        for (int r = -8; r <= 8; ++r)
                            if (!(line_power_push(ring, J, lo, r, f) == line_power_push_closed(ring, J, r, f)))
                                return "closed form disagrees at r=" + std::to_string(r);
                }
            return "";
        });
    }
    return out;
}

}
