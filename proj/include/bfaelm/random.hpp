#pragma once

#include <cstdint>
#include <string_view>

namespace bfaelm {

// Deterministic 64-bit PRNG (splitmix64-seeded xoshiro256**). Identical seeds
// give identical sequences on every platform. Child streams are derived from
// (seed, label) so independent workers never share state.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // Uniform draw in [lo, hi). Throws if lo >= hi.
    double uniform(double lo, double hi);

    // Box-Muller gaussian; two uniform draws per call, no cached spare.
    double gaussian(double mean, double sd);

    // Uniform integer in [0, n). Throws if n == 0.
    std::uint64_t below(std::uint64_t n);

    RandomStream child(std::string_view label) const;
    RandomStream child(std::string_view label, std::uint64_t a) const;
    RandomStream child(std::string_view label, std::uint64_t a, std::uint64_t b) const;
    RandomStream child(std::string_view label, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) const;

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace bfaelm
