#pragma once

#include <cstdint>
#include <random>

namespace hprod {

/// Seeded randomness handle passed explicitly to every randomized operation.
///
/// Per-trial streams are derived with `Rng::derive(master, index)`, which mixes
/// the pair through SplitMix64; results therefore do not depend on the order
/// in which trials run or on how they are split across workers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static Rng derive(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(splitmix64(master_seed ^ splitmix64(index)));
    }

    /// Uniform integer in [0, bound) by rejection, independent of the standard
    /// library's distribution implementation.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hprod
