#pragma once

#include "kflag/demazure.hpp"
#include "kflag/errors.hpp"
#include "kflag/matrix.hpp"
#include "kflag/polyring.hpp"
#include "kflag/weights.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kflag {

enum class Kind { E, F, PsiPlus, PsiMinus, HPlus, HMinus, Id };

struct GeneratorLabel {
    Kind kind = Kind::Id;
    int i = 1;
    int r = 0;  // mode for E/F, power for Psi, +-1 for H

    std::string str() const;
    auto operator<=>(const GeneratorLabel&) const = default;
};

inline GeneratorLabel E(int i, int r) { return {Kind::E, i, r}; }
inline GeneratorLabel F(int i, int s) { return {Kind::F, i, s}; }
inline GeneratorLabel PsiP(int i, int p = 1) { return p ? GeneratorLabel{Kind::PsiPlus, i, p} : GeneratorLabel{}; }
inline GeneratorLabel PsiM(int i, int p = 1) { return p ? GeneratorLabel{Kind::PsiMinus, i, p} : GeneratorLabel{}; }
inline GeneratorLabel H(int i, int sign) { return {sign > 0 ? Kind::HPlus : Kind::HMinus, i, sign > 0 ? 1 : -1}; }

// leftmost letter acts last
using Word = std::vector<GeneratorLabel>;

struct Term {
    Rational coef;
    Word word;
};
using Expr = std::vector<Term>;

std::string word_str(const Word& w);
std::string expr_str(const Expr& e);

// "E[1,0]*Psi+[1]^-1"; throws ParseError
struct ParseError : InvalidParameter {
    ParseError(const std::string& msg, size_t pos);
    size_t pos;
};
Word parse_word(const std::string& text);

// formal weight after applying the letter, none if a part goes negative
std::optional<Composition> label_target(const GeneratorLabel& g, const Composition& k);

struct WordValue {
    std::optional<Composition> weight;  // none: absolute zero
    PolyElem value;
};

struct OpMatrix {
    Composition source;
    std::optional<Composition> target;  // none: absolute zero
    Matrix m;
};

class Model {
public:
    explicit Model(int N);

    int N() const { return ring_.N(); }
    const Ring& ring() const { return ring_; }
    const WeightBasis& basis(const Composition& k) const;

    PolyElem apply(const GeneratorLabel& g, const Composition& k, const PolyElem& f) const;
    PolyElem multiplier(const GeneratorLabel& g, const Composition& k) const;

    WordValue evaluate_word(const Word& w, const Composition& k, const PolyElem& f) const;

    const Matrix& generator_matrix(const GeneratorLabel& g, const Composition& k) const;
    OpMatrix word_matrix(const Word& w, const Composition& k) const;
    OpMatrix expr_matrix(const Expr& e, const Composition& k) const;
    std::optional<Composition> word_target(const Word& w, const Composition& k) const;

    PolyElem dual_class(const PolyElem& f) const { return ring_.dual(f); }
    Rational euler(const PolyElem& f) const;
    Rational euler_pairing(const Composition& k, const PolyElem& f, const PolyElem& g) const;
    const Matrix& gram(const Composition& k) const;

    std::vector<Rational> coords(const Composition& k, const PolyElem& f) const;
    Matrix map_matrix(const Composition& src, const Composition& dst,
                      const std::function<PolyElem(const PolyElem&)>& fn) const;

private:
    Ring ring_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, std::shared_ptr<const WeightBasis>> bases_;
    mutable std::map<std::tuple<GeneratorLabel, std::vector<int>>, std::shared_ptr<const Matrix>> mats_;
    mutable std::map<std::vector<int>, std::shared_ptr<const Matrix>> grams_;
    mutable std::shared_ptr<const std::vector<Rational>> chi_;
};

// adjoint composites, as operators from the target weight of the original back to k
Expr right_adjoint_E(int i, int r, const Composition& k);
Expr left_adjoint_E(int i, int r, const Composition& k);
Expr right_adjoint_F(int i, int s, const Composition& k);
Expr left_adjoint_F(int i, int s, const Composition& k);

}
