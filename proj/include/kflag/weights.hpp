#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kflag {

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int n() const { return static_cast<int>(parts_.size()); }
    int N() const { return N_; }
    int operator[](int i) const { return parts_[i - 1]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }

    // K_i = k_1 + ... + k_i, K_0 = 0
    int partial(int i) const;
    // 1-based variable positions of block i
    int block_lo(int i) const { return partial(i - 1) + 1; }
    int block_hi(int i) const { return partial(i); }

    std::string str() const;
    static Composition parse(const std::string& text);

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int N_ = 0;
};

struct RefinedComposition {
    std::vector<int> parts;
    int singleton_pos = 0;
    int merge_lo = 0;
    int merge_hi = 0;
};

std::vector<Composition> compositions(int n, int N);

std::optional<Composition> shift_by_root(const Composition& k, int i, int sign);

RefinedComposition refinement_for_E(const Composition& k, int i);
RefinedComposition refinement_for_F(const Composition& k, int i);

long long multinomial(const Composition& k);

}
