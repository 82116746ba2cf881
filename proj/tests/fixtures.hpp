#ifndef FK_TESTS_FIXTURES_HPP
#define FK_TESTS_FIXTURES_HPP

// Shared fixtures and naive reference implementations. The naive versions
// deliberately recount point memberships one by one so they stay independent
// of the difference-array code paths they are used to check.

#include <optional>
#include <vector>

#include "fk/gen.hpp"
#include "fk/interval.hpp"

namespace fkt {

// Six intervals on nine points; the family is redundant while both
// five-member subfamilies used in the tests are irredundant.
inline fk::Family six_family() {
    return fk::Family(9, {fk::Interval(0, 8), fk::Interval(0, 7), fk::Interval(1, 6),
                          fk::Interval(1, 5), fk::Interval(3, 9), fk::Interval(2, 9)});
}

inline std::vector<int> naive_coverage(const fk::Family& family) {
    std::vector<int> counts(static_cast<std::size_t>(family.ground_size()), 0);
    for (int x = 0; x < family.ground_size(); ++x)
        for (const fk::Interval& f : family.members())
            if (f.lo <= x && x < f.hi)
                ++counts[static_cast<std::size_t>(x)];
    return counts;
}

// Point counts of members contained in s, on the points of s.
inline std::vector<int> naive_restricted_counts(const fk::Family& family, fk::Interval s) {
    std::vector<int> counts(static_cast<std::size_t>(s.length()), 0);
    for (int x = s.lo; x < s.hi; ++x)
        for (const fk::Interval& f : family.members())
            if (s.lo <= f.lo && f.hi <= s.hi && f.lo <= x && x < f.hi)
                ++counts[static_cast<std::size_t>(x - s.lo)];
    return counts;
}

inline bool naive_is_bad(const fk::Family& family, fk::Interval s) {
    for (int c : naive_restricted_counts(family, s))
        if (c <= 1)
            return false;
    return true;
}

inline std::vector<fk::Interval> naive_bad_intervals(const fk::Family& family) {
    std::vector<fk::Interval> bad;
    for (int b = 1; b <= family.ground_size(); ++b)
        for (int a = 0; a < b; ++a)
            if (naive_is_bad(family, fk::Interval(a, b)))
                bad.emplace_back(a, b);
    return bad;
}

// Replays the definition of an irredundant ordering: every entry must
// contain a point missed by all earlier entries.
inline bool replay_order(int n, const std::vector<fk::Interval>& order) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const fk::Interval& f : order) {
        bool owns = false;
        for (int x = f.lo; x < f.hi; ++x)
            owns = owns || !seen[static_cast<std::size_t>(x)];
        if (!owns)
            return false;
        for (int x = f.lo; x < f.hi; ++x)
            seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

inline fk::Family trial_family(std::uint64_t seed, int max_m, int max_n) {
    return fk::random_family_up_to(max_m, max_n, seed);
}

}  // namespace fkt

#endif
