#ifndef FK_ORACLE_HPP
#define FK_ORACLE_HPP

#include <cstddef>
#include <cstdint>

#include "fk/interval.hpp"
#include "fk/reduction.hpp"

namespace fk {

// Exhaustive-search ground truth for small instances. These exist to certify
// the reduction pipeline, not to scale.

inline constexpr std::size_t kBruteMaxMemberCap = 12;
inline constexpr std::size_t kGeneratorCandidateCap = 64;

struct BruteMaxResult {
    std::size_t size;
    Family witness;
};

// Largest irredundant sub-multiset, by enumerating subsets in decreasing
// size order (ties broken by ascending membership mask). Throws
// std::invalid_argument beyond kBruteMaxMemberCap members.
BruteMaxResult brute_max_irredundant(const Family& family);

// Smallest generating family size. Candidate generators are the nonempty
// intersections of members, i.e. intervals [a, b) with a a member left
// endpoint, b a member right endpoint, contained in some member; a minimum
// generating family can always be drawn from these. Throws
// std::invalid_argument beyond kGeneratorCandidateCap candidates.
std::size_t brute_min_generating(const Family& family);

// The reduction loop driven by a seeded random choice of minimal bad
// interval at every step, for confluence testing against fk_run.
ReductionResult randomized_fk(const Family& family, std::uint64_t seed);

}  // namespace fk

#endif
