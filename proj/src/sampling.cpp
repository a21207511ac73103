#include "tetra/sampling.hpp"

namespace tetra {

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<uint64_t>(hi - lo + 1)));
}

Scalar random_scalar(Rng& rng) {
    long num = rng.range(-9, 9);
    if (num == 0)
        num = 1;
    const long den = rng.range(1, 3);
    return Scalar(num, den);
}

AElem random_aelem(Rng& rng, unsigned max_degree) {
    AElem a;
    if (rng.next_below(2) == 0)
        a += AElem(random_scalar(rng));
    for (unsigned k = 1; k <= max_degree; ++k) {
        if (rng.next_below(3) == 0)
            a += random_scalar(rng) * AElem::t_power(static_cast<int>(k));
        if (rng.next_below(3) == 0)
            a += random_scalar(rng) * AElem::t_power(-static_cast<int>(k));
        if (rng.next_below(3) == 0)
            a += random_scalar(rng) * AElem::pole1_power(k);
    }
    return a;
}

Sl2Vec random_sl2(Rng& rng) {
    return {random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

LElem random_lelem(Rng& rng, unsigned max_degree) {
    return {random_aelem(rng, max_degree), random_aelem(rng, max_degree),
            random_aelem(rng, max_degree)};
}

LHatElem random_lhat(Rng& rng, unsigned max_degree) {
    return {random_lelem(rng, max_degree),
            CentralVec{random_scalar(rng), random_scalar(rng)}};
}

}  // namespace tetra
