#ifndef FK_ANALYSIS_HPP
#define FK_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "fk/interval.hpp"

namespace fk {

// An interval s is good for F when some point of s lies in at most one
// member of F restricted to s; otherwise s is bad (every point of s is
// doubly covered inside s).
bool is_good(const Family& family, Interval s);

// A family is irredundant exactly when every interval of the ground set is
// good for it. O(n^2) goodness tests; intended as a checking oracle, not as
// the main algorithm.
bool is_irredundant(const Family& family);

// If the family is irredundant, an ordering of its members such that each
// one contains a point absent from all earlier ones; otherwise nullopt.
// Built greedily from the back: among members owning a point covered by no
// other remaining member, pick the one with the largest right endpoint,
// then the smallest left endpoint.
std::optional<std::vector<Interval>> irredundant_order(const Family& family);

// True when every member of `family` is a union of members of `candidate`,
// i.e. every point of each member f is covered by candidate-members inside f.
bool generates(const Family& candidate, const Family& family);

// Bad intervals in ascending (hi, lo) order, and the bad intervals none of
// whose proper subintervals is bad.
std::vector<Interval> all_bad_intervals(const Family& family);
std::vector<Interval> minimal_bad_intervals(const Family& family);

}  // namespace fk

#endif
