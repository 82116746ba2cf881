#include "fk/interval.hpp"

#include <algorithm>

namespace fk {

bool Family::operator==(const Family& other) const {
    return n_ == other.n_ && same_multiset(members_, other.members_);
}

CoverageProfile coverage(const Family& family) {
    // Difference array over the ground set, then prefix sums.
    std::vector<int> diff(static_cast<std::size_t>(family.ground_size()) + 1, 0);
    for (const Interval& f : family.members()) {
        ++diff[static_cast<std::size_t>(f.lo)];
        --diff[static_cast<std::size_t>(f.hi)];
    }
    CoverageProfile profile;
    profile.counts.resize(static_cast<std::size_t>(family.ground_size()));
    int running = 0;
    for (std::size_t x = 0; x < profile.counts.size(); ++x) {
        running += diff[x];
        profile.counts[x] = running;
    }
    return profile;
}

Family restrict_to(const Family& family, Interval window) {
    if (window.hi > family.ground_size())
        throw std::invalid_argument("restrict_to: window exceeds the ground set");
    std::vector<Interval> kept;
    for (const Interval& f : family.members())
        if (window.contains(f))
            kept.push_back(f);
    return Family(family.ground_size(), std::move(kept));
}

std::vector<Interval> union_support(const Family& family) {
    CoverageProfile profile = coverage(family);
    std::vector<Interval> runs;
    int start = -1;
    for (int x = 0; x < family.ground_size(); ++x) {
        bool covered = profile.counts[static_cast<std::size_t>(x)] > 0;
        if (covered && start < 0)
            start = x;
        if (!covered && start >= 0) {
            runs.emplace_back(start, x);
            start = -1;
        }
    }
    if (start >= 0)
        runs.emplace_back(start, family.ground_size());
    return runs;
}

Interval mirror_interval(Interval f, int n) {
    return Interval(n - f.hi, n - f.lo);
}

Family mirror(const Family& family) {
    std::vector<Interval> flipped;
    flipped.reserve(family.size());
    for (const Interval& f : family.members())
        flipped.push_back(mirror_interval(f, family.ground_size()));
    return Family(family.ground_size(), std::move(flipped));
}

bool same_multiset(std::vector<Interval> a, std::vector<Interval> b) {
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<Interval> sorted_by_hi_lo(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), by_hi_lo);
    return v;
}

}  // namespace fk
