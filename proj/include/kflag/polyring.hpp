#pragma once

#include "kflag/weights.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace kflag {

using Rational = mpq_class;

constexpr int kMaxVars = 8;

// exponent vector packed one byte per variable, x_1 in the low byte;
// integer order on the packing is lex with x_N > ... > x_1
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int var) { return static_cast<int>((m >> (8 * (var - 1))) & 0xff); }
inline Mono mono_var(int var, int e = 1) { return static_cast<Mono>(e) << (8 * (var - 1)); }
int mono_degree(Mono m);
Mono mono_from(const std::vector<int>& exps);
std::vector<int> mono_exps(Mono m, int N);

struct PolyElem {
    std::map<Mono, Rational> terms;

    PolyElem() = default;
    static PolyElem constant(const Rational& c);
    static PolyElem monomial(Mono m, const Rational& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(Mono m, const Rational& c);
    Rational coeff(Mono m) const;
    Rational constant_term() const { return coeff(0); }
    int degree() const;

    PolyElem& operator+=(const PolyElem& o);
    PolyElem& operator-=(const PolyElem& o);
    PolyElem& operator*=(const Rational& c);
    friend PolyElem operator+(PolyElem a, const PolyElem& b) { return a += b; }
    friend PolyElem operator-(PolyElem a, const PolyElem& b) { return a -= b; }
    friend PolyElem operator*(PolyElem a, const Rational& c) { return a *= c; }
    friend PolyElem operator-(PolyElem a) { return a *= Rational(-1); }
    bool operator==(const PolyElem& o) const { return terms == o.terms; }
};

// product without any reduction
PolyElem mul_raw(const PolyElem& a, const PolyElem& b);
// swap variables j and j+1 without reduction
PolyElem swap_raw(const PolyElem& p, int j);

std::string format_rational(const Rational& q);
std::string format_poly(const PolyElem& p);
PolyElem parse_poly(const std::string& text, int N);

// The coinvariant quotient Q[x_1..x_N]/(e_1..e_N), a_i = 1 + x_i.
class Ring {
public:
    explicit Ring(int N);

    int N() const { return N_; }
    int top_degree() const { return N_ * (N_ - 1) / 2; }
    int dim() const { return static_cast<int>(staircase_.size()); }

    const std::vector<Mono>& staircase() const { return staircase_; }
    int staircase_index(Mono m) const;
    bool is_standard(Mono m) const;

    PolyElem normal_form(const PolyElem& p) const;
    PolyElem mul(const PolyElem& a, const PolyElem& b) const;
    PolyElem from_a_monomial(const std::vector<int>& exps) const;
    PolyElem a_power(int var, int e) const;
    PolyElem permute(const PolyElem& p, const std::vector<int>& w) const;
    PolyElem dual(const PolyElem& p) const;

    std::vector<Rational> dense(const PolyElem& nf) const;
    PolyElem from_dense(const std::vector<Rational>& v) const;

    // Groebner generator h_{N-i+1}(x_1..x_i)
    PolyElem groebner_generator(int i) const;

private:
    std::shared_ptr<const PolyElem> nf_mono(Mono m) const;

    int N_;
    std::vector<Mono> staircase_;
    std::unordered_map<Mono, int> index_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Mono, std::shared_ptr<const PolyElem>> nf_cache_;
    mutable std::unordered_map<Mono, std::shared_ptr<const PolyElem>> dual_cache_;
};

// complete homogeneous polynomial h_d in the given variables, as raw polynomial
PolyElem complete_homogeneous(int d, const std::vector<int>& vars);

struct KClass {
    Composition weight;
    PolyElem rep;
};

struct WeightBasis {
    Composition weight;
    std::vector<PolyElem> elements;
    std::vector<std::vector<int>> labels;
    std::vector<std::vector<Rational>> dense;
    std::vector<int> pivots;
    std::vector<std::vector<Rational>> pivot_inverse;

    int size() const { return static_cast<int>(elements.size()); }
};

WeightBasis invariant_basis(const Ring& ring, const Composition& k);

std::vector<Rational> coordinates(const Ring& ring, const PolyElem& f, const WeightBasis& basis);

}
