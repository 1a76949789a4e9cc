#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "disjdom/graph.hpp"

namespace disjdom {

// Exhaustive generation of connected graphs up to isomorphism, with optional
// minimum-degree-2 and claw-free filters, or seeded random sampling.
struct GenSpec {
    int n = 0;
    bool connected = true;        // exhaustive mode requires this
    bool min_degree2 = false;
    bool claw_free = false;

    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;

    // random mode
    std::uint64_t seed = 0;
    int count = 0;
    int edges_min = 0;  // edges per sample drawn uniformly from [edges_min, edges_max]
    int edges_max = 0;

    int hard_cap = 10;  // exhaustive order cap
};

// Emits one representative per isomorphism class (exhaustive) or `count`
// samples (random). Emission order is an implementation detail.
void enumerate(const GenSpec& spec, const std::function<void(const Graph&)>& sink);

// Connected graph with minimum degree 2 and exactly m edges, deterministic
// per seed. Throws when (n, m) is infeasible.
Graph random_min_deg2(int n, int m, std::uint64_t seed);

// Deterministic splittable PRNG used everywhere randomness is needed; avoids
// std distributions so seeds reproduce across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace disjdom
