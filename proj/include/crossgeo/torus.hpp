#pragma once

#include "crossgeo/states.hpp"

#include <vector>

namespace crossgeo {

// Pinch-move trajectory of a torus knot T(p,q) with pq even, run all the way
// down to the meridian-stage unknot.
struct PinchSequence {
    std::vector<std::pair<long long, long long>> steps; // (p,q), (r,s), ...
    int first_unknot_index = 0; // first step with min(p,q) <= 1
};

// One pinch move: (p,q) -> (|p-2t|, |q-2h|) with t = -q^{-1} mod p and
// h = p^{-1} mod q taken in [1, p) and [1, q).
std::pair<long long, long long> pinch_step(long long p, long long q);

PinchSequence pinch_sequence(long long p, long long q);

// Spanning surface from pinching down to the meridian and capping.
SurfacePoint pinch_surface_3(long long p, long long q);
// Filling from pinching to the first unknot and capping in the 4-ball.
SurfacePoint pinch_surface_4(long long p, long long q);

} // namespace crossgeo
