#include "graydbl/search.hpp"

#include <cstdlib>

namespace gd {

std::uint64_t Budget::defaultLimit() {
    if (const char* env = std::getenv("GRAYDBL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 10'000'000ULL;
}

void Backtracker::run(Budget& budget, const std::function<bool(const Assignment&)>& onSolution) const {
    const int n = size();
    Assignment asg(n, -1);
    if (n == 0) {
        onSolution(asg);
        return;
    }
    std::vector<std::vector<int>> doms(n);
    std::vector<std::size_t> pos(n, 0);
    int var = 0;
    doms[0].clear();
    if (domains_[0]) domains_[0](asg, doms[0]);
    while (var >= 0) {
        if (pos[var] >= doms[var].size()) {
            asg[var] = -1;
            --var;
            if (var >= 0) ++pos[var];
            continue;
        }
        budget.tick();
        asg[var] = doms[var][pos[var]];
        bool good = true;
        for (const auto& c : checks_[var]) {
            if (!c(asg)) {
                good = false;
                break;
            }
        }
        if (!good) {
            ++pos[var];
            continue;
        }
        if (var == n - 1) {
            if (!onSolution(asg)) return;
            ++pos[var];
            continue;
        }
        ++var;
        doms[var].clear();
        pos[var] = 0;
        if (domains_[var]) domains_[var](asg, doms[var]);
    }
}

}  // namespace gd
