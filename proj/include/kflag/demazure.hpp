#pragma once

#include "kflag/polyring.hpp"

#include <vector>

namespace kflag {

struct ParabolicRange {
    int lo = 1;
    int hi = 1;
    std::vector<int> reduced_word;  // leftmost letter is applied last

    ParabolicRange() = default;
    ParabolicRange(int lo, int hi);
    static ParabolicRange reverse_sweep(int lo, int hi);
    int size() const { return hi - lo + 1; }
};

PolyElem demazure_T(const Ring& ring, int j, const PolyElem& f);

PolyElem parabolic_push(const Ring& ring, const ParabolicRange& J, const PolyElem& f);

PolyElem line_power_push(const Ring& ring, const ParabolicRange& J, int b_pos, int r, const PolyElem& f);

// three-branch closed form of the projective bundle pushforward
PolyElem line_power_push_closed(const Ring& ring, const ParabolicRange& J, int r, const PolyElem& f);

Rational point_euler(const Ring& ring, const PolyElem& f);

}
