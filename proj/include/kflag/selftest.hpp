#pragma once

#include <string>
#include <vector>

namespace kflag {

struct SelftestCheck {
    std::string name;
    int N;
    bool ok;
    std::string detail;
};

std::vector<SelftestCheck> run_selftest(int max_N);

}
