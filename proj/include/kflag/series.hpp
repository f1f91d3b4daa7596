#pragma once

#include "kflag/relations.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace kflag {

enum class ModeKind { e, f, psi_plus, psi_minus };

struct ModeLetter {
    ModeKind kind;
    int i;
    int r;
    std::string str() const;
};

using ModeWord = std::vector<ModeLetter>;  // leftmost acts last
struct ModeTerm {
    Rational coef;
    ModeWord word;
};
using ModeExpr = std::vector<ModeTerm>;

// Modes of the unbounded presentation, built by the inductive definitions
// from the bounded generators and memoized per weight.
class ModeTable {
public:
    explicit ModeTable(const Model& model) : model_(model) {}

    // none if the target weight is out of range
    std::optional<Matrix> mode(const ModeLetter& g, const Composition& k) const;
    OpMatrix expr_matrix(const ModeExpr& e, const Composition& k) const;

private:
    Matrix compute(const ModeLetter& g, const Composition& k, const Composition& t) const;

    const Model& model_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int, std::vector<int>>, std::shared_ptr<const Matrix>> cache_;
};

std::string mode_expr_str(const ModeExpr& e);

std::vector<RelationInstance> appendix_instances(int n, int N, int window);

RelationReport conjecture_report(int n, int N, int window, int jobs = 1);

}
