#include "kflag/weights.hpp"

#include "kflag/errors.hpp"

#include <numeric>
#include <sstream>

namespace kflag {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw InvalidParameter("composition needs at least two parts");
    for (int p : parts_)
        if (p < 0) throw InvalidParameter("composition parts must be non-negative");
    N_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (N_ < 2) throw InvalidParameter("composition must sum to at least 2");
}

int Composition::partial(int i) const {
    int s = 0;
    for (int j = 0; j < i; ++j) s += parts_[j];
    return s;
}

std::string Composition::str() const {
    std::string out;
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(parts_[j]);
    }
    return out;
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("bad composition '" + text + "'");
        }
        if (used != item.size()) throw InvalidParameter("bad composition '" + text + "'");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

std::vector<Composition> compositions(int n, int N) {
    if (n < 2 || N < 2) throw InvalidParameter("compositions need n >= 2 and N >= 2");
    std::vector<Composition> out;
    std::vector<int> cur(n, 0);
    // lexicographically decreasing first part, matching (2,0),(1,1),(0,2)
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, N);
    return out;
}

std::optional<Composition> shift_by_root(const Composition& k, int i, int sign) {
    if (i < 1 || i > k.n() - 1) throw InvalidParameter("root index out of range");
    std::vector<int> p = k.parts();
    p[i - 1] -= sign;
    p[i] += sign;
    if (p[i - 1] < 0 || p[i] < 0) return std::nullopt;
    return Composition(std::move(p));
}

RefinedComposition refinement_for_E(const Composition& k, int i) {
    if (!shift_by_root(k, i, +1)) throw InvalidParameter("E target weight out of range");
    RefinedComposition rc;
    for (int j = 1; j <= k.n(); ++j) {
        if (j == i) {
            rc.parts.push_back(k[j] - 1);
            rc.parts.push_back(1);
        } else {
            rc.parts.push_back(k[j]);
        }
    }
    rc.singleton_pos = k.partial(i);
    rc.merge_lo = k.partial(i);
    rc.merge_hi = k.partial(i + 1);
    return rc;
}

RefinedComposition refinement_for_F(const Composition& k, int i) {
    if (!shift_by_root(k, i, -1)) throw InvalidParameter("F target weight out of range");
    RefinedComposition rc;
    for (int j = 1; j <= k.n(); ++j) {
        if (j == i + 1) {
            rc.parts.push_back(1);
            rc.parts.push_back(k[j] - 1);
        } else {
            rc.parts.push_back(k[j]);
        }
    }
    rc.singleton_pos = k.partial(i) + 1;
    rc.merge_lo = k.partial(i - 1) + 1;
    rc.merge_hi = k.partial(i) + 1;
    return rc;
}

long long multinomial(const Composition& k) {
    long long r = 1;
    int acc = 0;
    for (int p : k.parts()) {
        for (int j = 1; j <= p; ++j) {
            ++acc;
            r = r * acc / j;
        }
    }
    return r;
}

}
