#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "fk/interval.hpp"

using fk::Family;
using fk::Interval;

TEST_CASE("interval construction enforces 0 <= lo < hi") {
    CHECK_THROWS_AS(Interval(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(Interval(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(-1, 2), std::invalid_argument);
    CHECK(Interval(0, 1).length() == 1);
}

TEST_CASE("family rejects members beyond the ground set") {
    CHECK_THROWS_AS(Family(4, {Interval(2, 5)}), std::invalid_argument);
    CHECK_NOTHROW(Family(4, {Interval(2, 4)}));
}

TEST_CASE("coverage matches a direct membership count") {
    Family f = fkt::six_family();
    fk::CoverageProfile profile = fk::coverage(f);
    CHECK(profile.counts == std::vector<int>{2, 4, 5, 6, 6, 5, 4, 3, 2});
    CHECK(profile.counts == fkt::naive_coverage(f));
}

TEST_CASE("coverage of the empty family is all zeros") {
    CHECK(fk::coverage(Family(5)).counts == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("a duplicated member doubles its coverage") {
    Family f(4, {Interval(1, 3), Interval(1, 3)});
    CHECK(fk::coverage(f).counts == std::vector<int>{0, 2, 2, 0});
}

TEST_CASE("coverage total equals the sum of member lengths") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Family f = fkt::trial_family(seed, 8, 10);
        long total = 0;
        for (int c : fk::coverage(f).counts)
            total += c;
        long lengths = 0;
        for (const Interval& member : f.members())
            lengths += member.length();
        CHECK(total == lengths);
    }
}

TEST_CASE("restriction keeps exactly the members inside the window") {
    Family f = fkt::six_family();
    Family inside = fk::restrict_to(f, Interval(1, 6));
    CHECK(inside == Family(9, {Interval(1, 6), Interval(1, 5)}));
    CHECK(fk::restrict_to(f, Interval(0, 9)) == f);
}

TEST_CASE("restriction composes through window intersection") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        Family f = fkt::trial_family(seed, 8, 10);
        int n = f.ground_size();
        fk::Prng rng{seed};
        for (int round = 0; round < 5; ++round) {
            int s_lo = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int s_hi = s_lo + 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - s_lo));
            int t_lo = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int t_hi = t_lo + 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - t_lo));
            Interval s(s_lo, s_hi);
            Interval t(t_lo, t_hi);
            Family two_step = fk::restrict_to(fk::restrict_to(f, s), t);
            int cap_lo = std::max(s.lo, t.lo);
            int cap_hi = std::min(s.hi, t.hi);
            if (cap_lo < cap_hi)
                CHECK(two_step == fk::restrict_to(f, Interval(cap_lo, cap_hi)));
            else
                CHECK(two_step.empty());
        }
    }
}

TEST_CASE("restriction never grows and stays inside the window") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        Family f = fkt::trial_family(seed, 8, 10);
        Interval s = f.full_range();
        Family inside = fk::restrict_to(f, s);
        CHECK(inside.size() <= f.size());
        for (const Interval& member : inside.members())
            CHECK(s.contains(member));
    }
}

TEST_CASE("union support lists maximal covered runs") {
    CHECK(fk::union_support(fkt::six_family()) == std::vector<Interval>{Interval(0, 9)});
    Family gaps(6, {Interval(0, 2), Interval(4, 6)});
    CHECK(fk::union_support(gaps) == std::vector<Interval>{Interval(0, 2), Interval(4, 6)});
    CHECK(fk::union_support(Family(4)).empty());
}

TEST_CASE("mirror reflects endpoints and is an involution") {
    CHECK(fk::mirror_interval(Interval(0, 8), 9) == Interval(1, 9));
    CHECK(fk::mirror_interval(Interval(3, 9), 9) == Interval(0, 6));

    Family f = fkt::six_family();
    Family reflected = fk::mirror(f);
    CHECK(reflected == Family(9, {Interval(1, 9), Interval(2, 9), Interval(3, 8), Interval(4, 8),
                                  Interval(0, 6), Interval(0, 7)}));
    CHECK(fk::mirror(reflected) == f);

    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        Family g = fkt::trial_family(seed, 8, 10);
        CHECK(fk::mirror(fk::mirror(g)) == g);
        std::vector<int> flipped = fk::coverage(fk::mirror(g)).counts;
        std::vector<int> straight = fk::coverage(g).counts;
        std::reverse(straight.begin(), straight.end());
        CHECK(flipped == straight);
    }
}

TEST_CASE("adding a member raises coverage exactly on its points") {
    for (std::uint64_t seed = 400; seed < 420; ++seed) {
        Family f = fkt::trial_family(seed, 8, 10);
        if (f.ground_size() < 2)
            continue;
        Interval extra(0, f.ground_size());
        std::vector<Interval> members = f.members();
        members.push_back(extra);
        Family grown(f.ground_size(), std::move(members));
        std::vector<int> before = fk::coverage(f).counts;
        std::vector<int> after = fk::coverage(grown).counts;
        for (int x = 0; x < f.ground_size(); ++x)
            CHECK(after[static_cast<std::size_t>(x)] ==
                  before[static_cast<std::size_t>(x)] + (extra.contains(x) ? 1 : 0));
    }
}

TEST_CASE("family equality is multiset equality") {
    Family a(5, {Interval(0, 2), Interval(1, 4), Interval(0, 2)});
    Family b(5, {Interval(1, 4), Interval(0, 2), Interval(0, 2)});
    Family c(5, {Interval(1, 4), Interval(0, 2)});
    CHECK(a == b);
    CHECK(a != c);
}
