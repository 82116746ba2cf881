#include "fk/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "fk/analysis.hpp"
#include "fk/error.hpp"

namespace fk {

std::vector<Interval> maximal_intervals(const Family& family, Interval s) {
    std::vector<Interval> inside;
    for (const Interval& f : family.members())
        if (s.contains(f))
            inside.push_back(f);
    // Ascending lo, descending hi: an interval is then properly contained in
    // an earlier one exactly when its hi does not exceed the running maximum.
    std::sort(inside.begin(), inside.end(), [](Interval a, Interval b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
    });
    std::vector<Interval> maximal;
    int max_hi = 0;
    for (const Interval& f : inside) {
        if (f.hi > max_hi) {
            maximal.push_back(f);
            max_hi = f.hi;
        }
    }
    // Distinct maximal intervals form an antichain: both endpoints ascend.
    return maximal;
}

Family reduce(const Family& family, Interval s) {
    if (is_good(family, s))
        throw std::invalid_argument("reduce: interval is good for the family");
    std::vector<Interval> maximal = maximal_intervals(family, s);
    for (std::size_t j = 0; j + 1 < maximal.size(); ++j)
        if (maximal[j + 1].lo >= maximal[j].hi)
            throw std::invalid_argument("reduce: maximal intervals do not overlap");

    // Remove one occurrence of each maximal interval in a single pass over
    // the members; maximal intervals are distinct and sorted.
    std::vector<char> removed(maximal.size(), 0);
    std::vector<Interval> members;
    members.reserve(family.size() - 1);
    for (const Interval& f : family.members()) {
        auto it = std::lower_bound(maximal.begin(), maximal.end(), f);
        std::size_t idx = static_cast<std::size_t>(it - maximal.begin());
        if (it != maximal.end() && *it == f && !removed[idx])
            removed[idx] = 1;
        else
            members.push_back(f);
    }
    for (std::size_t j = 0; j + 1 < maximal.size(); ++j)
        members.emplace_back(maximal[j + 1].lo, maximal[j].hi);
    return Family(family.ground_size(), std::move(members));
}

Family reduce_checked(const Family& family, Interval s) {
    Family reduced = reduce(family, s);
    CoverageProfile before = coverage(family);
    CoverageProfile after = coverage(reduced);
    for (int x = 0; x < family.ground_size(); ++x) {
        int expected = before.counts[static_cast<std::size_t>(x)] - (s.contains(x) ? 1 : 0);
        if (after.counts[static_cast<std::size_t>(x)] != expected)
            throw InternalError("reduce_checked: incidence identity violated at point " +
                                std::to_string(x));
    }
    return reduced;
}

std::optional<Interval> next_bad_with_right_end(const Family& family, int v) {
    if (v < 1 || v > family.ground_size())
        throw std::invalid_argument("next_bad_with_right_end: endpoint out of range");

    // Left endpoints of members grouped by right endpoint.
    std::vector<std::vector<int>> lefts_by_right(static_cast<std::size_t>(family.ground_size()) + 1);
    for (const Interval& f : family.members())
        lefts_by_right[static_cast<std::size_t>(f.hi)].push_back(f.lo);

    // count[x]: members seen so far (right endpoint in (u, v]) with left
    // endpoint x. coverage: those with x in [t, u), all of which contain the
    // point u-1. potential: those reaching left of t.
    std::vector<int> count(static_cast<std::size_t>(family.ground_size()) + 1, 0);
    int coverage = 0;
    int potential = 0;
    int t = v - 1;
    for (int u = v; u > t; --u) {
        coverage -= count[static_cast<std::size_t>(u)];
        for (int lo : lefts_by_right[static_cast<std::size_t>(u)]) {
            ++count[static_cast<std::size_t>(lo)];
            if (lo >= t)
                ++coverage;
            else
                ++potential;
        }
        if (coverage + potential < 2)
            return std::nullopt;  // the point u-1 can never be doubly covered
        while (coverage < 2) {
            --t;
            assert(t >= 0);
            coverage += count[static_cast<std::size_t>(t)];
            potential -= count[static_cast<std::size_t>(t)];
        }
    }
    return Interval(t, v);
}

ReductionResult fk_run(const Family& family, const ReductionChecks& checks) {
    Family working = family;
    std::vector<Interval> reduced_intervals;

    for (int v = 1; v <= family.ground_size(); ++v) {
        while (std::optional<Interval> s = next_bad_with_right_end(working, v)) {
            working = reduce_checked(working, *s);
            reduced_intervals.push_back(*s);

            if (checks.goodness_preservation) {
                for (int b = 1; b < v; ++b)
                    for (int a = 0; a < b; ++a)
                        if (!is_good(working, Interval(a, b)))
                            throw InternalError("fk_run: reduction spoiled a good interval");
            }
        }
    }
    return ReductionResult{std::move(working), std::move(reduced_intervals)};
}

}  // namespace fk
