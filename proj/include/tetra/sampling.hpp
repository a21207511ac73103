#pragma once

#include "tetra/lhat.hpp"

#include <cstdint>
#include <random>

namespace tetra {

// Deterministic source for the randomized suites; all draws go through
// next_below so results are stable for a given seed across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    // uniform-ish value in [0, n)
    uint64_t next_below(uint64_t n) { return eng_() % n; }
    long range(long lo, long hi);  // inclusive bounds

private:
    std::mt19937_64 eng_;
};

Scalar random_scalar(Rng& rng);                       // small nonzero rational
AElem random_aelem(Rng& rng, unsigned max_degree);    // sparse, degree <= max_degree
Sl2Vec random_sl2(Rng& rng);
LElem random_lelem(Rng& rng, unsigned max_degree);
LHatElem random_lhat(Rng& rng, unsigned max_degree);

}  // namespace tetra
