#ifndef FK_INTERVAL_HPP
#define FK_INTERVAL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fk {

// Half-open integer interval [lo, hi) over a ground set of points 0..n-1.
// Intervals are never empty: construction requires 0 <= lo < hi.
struct Interval {
    int lo;
    int hi;

    Interval(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (lo_ < 0 || lo_ >= hi_)
            throw std::invalid_argument("Interval: need 0 <= lo < hi, got lo=" +
                                        std::to_string(lo_) + " hi=" + std::to_string(hi_));
    }

    bool contains(int x) const { return lo <= x && x < hi; }
    bool contains(Interval other) const { return lo <= other.lo && other.hi <= hi; }
    int length() const { return hi - lo; }

    // Ordered by the (lo, hi) pair.
    auto operator<=>(const Interval&) const = default;
};

// Canonical output order: ascending right endpoint, then left endpoint.
inline bool by_hi_lo(Interval a, Interval b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
}

// A multiset of intervals over the ground set [0, n). The same interval may
// occur more than once and cardinality counts multiplicity. Members are kept
// in insertion order; equality is multiset equality.
class Family {
public:
    Family() = default;
    explicit Family(int n) : n_(check_ground(n)) {}
    Family(int n, std::vector<Interval> members) : n_(check_ground(n)), members_(std::move(members)) {
        for (const Interval& f : members_)
            if (f.hi > n_)
                throw std::invalid_argument("Family: member [" + std::to_string(f.lo) + ", " +
                                            std::to_string(f.hi) + ") exceeds ground set size " +
                                            std::to_string(n_));
    }

    int ground_size() const { return n_; }
    const std::vector<Interval>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    Interval full_range() const { return Interval(0, n_); }

    bool operator==(const Family& other) const;

private:
    static int check_ground(int n) {
        if (n < 0)
            throw std::invalid_argument("Family: ground set size must be nonnegative");
        return n;
    }

    int n_ = 0;
    std::vector<Interval> members_;
};

// Per-point incidence counts: counts[x] is the number of members containing
// the point x, with multiplicity.
struct CoverageProfile {
    std::vector<int> counts;

    int at(int x) const { return counts.at(static_cast<std::size_t>(x)); }
    std::size_t size() const { return counts.size(); }

    bool operator==(const CoverageProfile&) const = default;
};

CoverageProfile coverage(const Family& family);

// The sub-multiset of members contained in the window (same ground set).
Family restrict_to(const Family& family, Interval window);

// Maximal runs of covered points, disjoint and ascending.
std::vector<Interval> union_support(const Family& family);

// Left-right reflection: each member [a, b) becomes [n-b, n-a).
Family mirror(const Family& family);
Interval mirror_interval(Interval f, int n);

bool same_multiset(std::vector<Interval> a, std::vector<Interval> b);
std::vector<Interval> sorted_by_hi_lo(std::vector<Interval> v);

}  // namespace fk

#endif
