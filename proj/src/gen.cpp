#include "fk/gen.hpp"

#include <algorithm>

namespace fk {

Family random_family(std::size_t m, int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_family: ground set must have at least one point");
    Prng rng{seed};
    std::uint64_t endpoints = static_cast<std::uint64_t>(n) + 1;
    std::vector<Interval> members;
    members.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        int a;
        int b;
        do {
            a = static_cast<int>(rng.next() % endpoints);
            b = static_cast<int>(rng.next() % endpoints);
        } while (a == b);
        members.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Family(n, std::move(members));
}

Family random_family_up_to(int max_m, int max_n, std::uint64_t seed) {
    if (max_m < 0 || max_n < 1)
        throw std::invalid_argument("random_family_up_to: need max_m >= 0 and max_n >= 1");
    Prng rng{seed};
    std::size_t m = rng.next() % (static_cast<std::uint64_t>(max_m) + 1);
    int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n));
    return random_family(m, n, rng.next());
}

}  // namespace fk
