#ifndef FK_GEN_HPP
#define FK_GEN_HPP

#include <cstddef>
#include <cstdint>

#include "fk/interval.hpp"

namespace fk {

// splitmix64: identical streams for identical seeds on every platform.
struct Prng {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// m random members over the n+1 endpoints 0..n: each member draws an
// endpoint pair, rerolling the pair while the two are equal. Duplicate
// members are kept.
Family random_family(std::size_t m, int n, std::uint64_t seed);

// Test-instance sampler: draws m in [0, max_m] and n in [1, max_n] from the
// seed, then a family of that shape.
Family random_family_up_to(int max_m, int max_n, std::uint64_t seed);

}  // namespace fk

#endif
