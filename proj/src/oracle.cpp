#include "fk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "fk/analysis.hpp"
#include "fk/gen.hpp"

namespace fk {

BruteMaxResult brute_max_irredundant(const Family& family) {
    std::size_t m = family.size();
    if (m > kBruteMaxMemberCap)
        throw std::invalid_argument("brute_max_irredundant: family exceeds the member cap");

    for (std::size_t k = m; k > 0; --k) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k)
                continue;
            std::vector<Interval> subset;
            subset.reserve(k);
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i))
                    subset.push_back(family.members()[i]);
            Family candidate(family.ground_size(), std::move(subset));
            if (is_irredundant(candidate))
                return BruteMaxResult{k, std::move(candidate)};
        }
    }
    return BruteMaxResult{0, Family(family.ground_size())};
}

namespace {

std::vector<Interval> generator_candidates(const Family& family) {
    std::set<int> los;
    std::set<int> his;
    for (const Interval& f : family.members()) {
        los.insert(f.lo);
        his.insert(f.hi);
    }
    std::vector<Interval> candidates;
    for (int a : los) {
        for (int b : his) {
            if (a >= b)
                continue;
            Interval candidate(a, b);
            bool inside_some_member =
                std::any_of(family.members().begin(), family.members().end(),
                            [&](Interval f) { return f.contains(candidate); });
            if (inside_some_member)
                candidates.push_back(candidate);
        }
    }
    return candidates;
}

// Exact minimum cover search: every member must be fully covered by chosen
// candidates lying inside it. Branches on the leftmost uncovered point of
// the first uncovered member, over the candidates that supply it.
struct MinGeneratingSearch {
    const Family& family;
    const std::vector<Interval>& candidates;
    std::vector<char> chosen;

    bool covered(const Interval& member, int& first_uncovered) const {
        std::vector<int> diff(static_cast<std::size_t>(member.length()) + 1, 0);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!chosen[c] || !member.contains(candidates[c]))
                continue;
            ++diff[static_cast<std::size_t>(candidates[c].lo - member.lo)];
            --diff[static_cast<std::size_t>(candidates[c].hi - member.lo)];
        }
        int running = 0;
        for (int x = member.lo; x < member.hi; ++x) {
            running += diff[static_cast<std::size_t>(x - member.lo)];
            if (running == 0) {
                first_uncovered = x;
                return false;
            }
        }
        return true;
    }

    bool feasible_with(std::size_t budget) {
        int uncovered_point = 0;
        const Interval* uncovered_member = nullptr;
        for (const Interval& member : family.members()) {
            if (!covered(member, uncovered_point)) {
                uncovered_member = &member;
                break;
            }
        }
        if (!uncovered_member)
            return true;
        if (budget == 0)
            return false;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (chosen[c] || !uncovered_member->contains(candidates[c]) ||
                !candidates[c].contains(uncovered_point))
                continue;
            chosen[c] = 1;
            if (feasible_with(budget - 1))
                return true;
            chosen[c] = 0;
        }
        return false;
    }
};

}  // namespace

std::size_t brute_min_generating(const Family& family) {
    if (family.empty())
        return 0;
    std::vector<Interval> candidates = generator_candidates(family);
    if (candidates.size() > kGeneratorCandidateCap)
        throw std::invalid_argument("brute_min_generating: candidate set exceeds the cap");

    MinGeneratingSearch search{family, candidates, std::vector<char>(candidates.size(), 0)};
    for (std::size_t budget = 0; budget <= family.size(); ++budget) {
        std::fill(search.chosen.begin(), search.chosen.end(), 0);
        if (search.feasible_with(budget))
            return budget;
    }
    // The distinct members themselves generate the family.
    return family.size();
}

ReductionResult randomized_fk(const Family& family, std::uint64_t seed) {
    Prng rng{seed};
    Family working = family;
    std::vector<Interval> reduced_intervals;
    while (true) {
        std::vector<Interval> minimal = minimal_bad_intervals(working);
        if (minimal.empty())
            break;
        Interval s = minimal[static_cast<std::size_t>(rng.next() % minimal.size())];
        working = reduce_checked(working, s);
        reduced_intervals.push_back(s);
    }
    return ReductionResult{std::move(working), std::move(reduced_intervals)};
}

}  // namespace fk
