#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gd {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cap on the number of candidate assignments tried by any enumeration.
// Exceeding it throws; results are never silently truncated.
class Budget {
public:
    explicit Budget(std::uint64_t limit = defaultLimit()) : limit_(limit) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw ResourceError("enumeration budget of " + std::to_string(limit_) +
                                " candidates exceeded");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    // 10^7 unless GRAYDBL_BUDGET is set.
    static std::uint64_t defaultLimit();

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Depth-first search over variables 0..n-1 in order. The domain of a
// variable may depend on earlier assignments and is tried in the order
// given, so solutions come out lexicographically when domains are sorted.
// A check registered at variable i runs once variables 0..i are assigned.
class Backtracker {
public:
    using Assignment = std::vector<int>;
    using DomainFn = std::function<void(const Assignment&, std::vector<int>&)>;
    using CheckFn = std::function<bool(const Assignment&)>;

    explicit Backtracker(int n) : domains_(n), checks_(n) {}

    int size() const { return static_cast<int>(domains_.size()); }
    void setDomain(int var, DomainFn f) { domains_[var] = std::move(f); }
    void addCheck(int var, CheckFn f) { checks_[var].push_back(std::move(f)); }

    // onSolution returns false to stop the search early.
    void run(Budget& budget, const std::function<bool(const Assignment&)>& onSolution) const;

private:
    std::vector<DomainFn> domains_;
    std::vector<std::vector<CheckFn>> checks_;
};

}  // namespace gd
