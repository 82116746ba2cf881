#include "fk/analysis.hpp"

#include <algorithm>

namespace fk {

namespace {

// Incidence counts of members contained in s, over the points of s.
std::vector<int> counts_within(const Family& family, Interval s) {
    std::vector<int> diff(static_cast<std::size_t>(s.length()) + 1, 0);
    for (const Interval& f : family.members()) {
        if (!s.contains(f))
            continue;
        ++diff[static_cast<std::size_t>(f.lo - s.lo)];
        --diff[static_cast<std::size_t>(f.hi - s.lo)];
    }
    std::vector<int> counts(static_cast<std::size_t>(s.length()));
    int running = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        running += diff[i];
        counts[i] = running;
    }
    return counts;
}

}  // namespace

bool is_good(const Family& family, Interval s) {
    if (s.hi > family.ground_size())
        throw std::invalid_argument("is_good: interval exceeds the ground set");
    for (int c : counts_within(family, s))
        if (c <= 1)
            return true;
    return false;
}

bool is_irredundant(const Family& family) {
    int n = family.ground_size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!is_good(family, Interval(a, b)))
                return false;
    return true;
}

std::optional<std::vector<Interval>> irredundant_order(const Family& family) {
    std::vector<Interval> remaining = family.members();
    std::vector<Interval> order(remaining.size(), Interval(0, 1));
    std::size_t next_slot = remaining.size();

    while (!remaining.empty()) {
        // A member is eligible when it owns a point no other remaining
        // member covers.
        std::vector<int> diff(static_cast<std::size_t>(family.ground_size()) + 1, 0);
        for (const Interval& f : remaining) {
            ++diff[static_cast<std::size_t>(f.lo)];
            --diff[static_cast<std::size_t>(f.hi)];
        }
        std::vector<int> counts(static_cast<std::size_t>(family.ground_size()), 0);
        int running = 0;
        for (std::size_t x = 0; x < counts.size(); ++x) {
            running += diff[x];
            counts[x] = running;
        }

        std::size_t chosen = remaining.size();
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            bool owns_point = false;
            for (int x = remaining[i].lo; x < remaining[i].hi && !owns_point; ++x)
                owns_point = counts[static_cast<std::size_t>(x)] == 1;
            if (!owns_point)
                continue;
            if (chosen == remaining.size() || remaining[i].hi > remaining[chosen].hi ||
                (remaining[i].hi == remaining[chosen].hi && remaining[i].lo < remaining[chosen].lo))
                chosen = i;
        }
        if (chosen == remaining.size())
            return std::nullopt;

        order[--next_slot] = remaining[chosen];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return order;
}

bool generates(const Family& candidate, const Family& family) {
    if (candidate.ground_size() != family.ground_size())
        throw std::invalid_argument("generates: ground set sizes differ");
    for (const Interval& f : family.members()) {
        // f must be exactly the union of candidate members inside f, which
        // for intervals means candidate|f covers every point of f.
        std::vector<int> counts = counts_within(candidate, f);
        if (std::any_of(counts.begin(), counts.end(), [](int c) { return c == 0; }))
            return false;
    }
    return true;
}

std::vector<Interval> all_bad_intervals(const Family& family) {
    std::vector<Interval> bad;
    int n = family.ground_size();
    for (int b = 1; b <= n; ++b)
        for (int a = 0; a < b; ++a)
            if (!is_good(family, Interval(a, b)))
                bad.emplace_back(a, b);
    return bad;
}

std::vector<Interval> minimal_bad_intervals(const Family& family) {
    std::vector<Interval> bad = all_bad_intervals(family);
    std::vector<Interval> minimal;
    for (const Interval& s : bad) {
        bool has_bad_proper_sub = std::any_of(bad.begin(), bad.end(), [&](Interval t) {
            return t != s && s.contains(t);
        });
        if (!has_bad_proper_sub)
            minimal.push_back(s);
    }
    return minimal;
}

}  // namespace fk
