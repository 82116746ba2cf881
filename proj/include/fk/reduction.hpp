#ifndef FK_REDUCTION_HPP
#define FK_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fk/interval.hpp"

namespace fk {

// Output of the reduction loop: the final irredundant generating family and
// the minimal bad intervals that were reduced, in reduction order. The
// multiset of reduced intervals is canonical (independent of the reduction
// order), and generating.size() + reduced.size() equals the input size.
struct ReductionResult {
    Family generating;
    std::vector<Interval> reduced;

    std::size_t reductions() const { return reduced.size(); }
};

// The distinct members of family|s not properly contained in another such
// member, ascending by left endpoint (right endpoints then ascend too).
std::vector<Interval> maximal_intervals(const Family& family, Interval s);

// The family reduced in s: one occurrence of each maximal interval
// [a_1,b_1),...,[a_k,b_k) of family|s is removed and the k-1 staggered
// overlaps [a_2,b_1),...,[a_k,b_{k-1}) are inserted. Requires s bad for the
// family and a_{j+1} < b_j throughout (always true when s is a minimal bad
// interval); throws std::invalid_argument otherwise.
Family reduce(const Family& family, Interval s);

// reduce() plus verification of the incidence identity
// N_x(reduced) = N_x(family) - [x in s]; throws InternalError on mismatch.
Family reduce_checked(const Family& family, Interval s);

// The bad interval [u, v) with the largest u, or nullopt if no bad interval
// ends at v. When every interval ending before v is good, the result is a
// minimal bad interval. Single right-to-left sweep, O(m + n).
std::optional<Interval> next_bad_with_right_end(const Family& family, int v);

struct ReductionChecks {
    // Re-verify after each reduction that intervals ending before the sweep
    // position stayed good. O(n^2 (m+n)) per reduction; small inputs only.
    bool goodness_preservation = false;
};

// The full reduction loop: sweep right endpoints in ascending order,
// reducing minimal bad intervals until none remain. The input family is not
// modified. The incidence identity is verified after every reduction.
ReductionResult fk_run(const Family& family, const ReductionChecks& checks = {});

}  // namespace fk

#endif
