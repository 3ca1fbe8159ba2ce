#include "crossgeo/torus.hpp"

#include <numeric>

namespace crossgeo {

namespace {

long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) fail(ErrorCode::NotCoprime, "no modular inverse");
    return ((t % m) + m) % m;
}

void check_pinchable(long long p, long long q) {
    if (p < 0 || q < 0) fail(ErrorCode::BadParameter, "torus parameters must be nonnegative");
    if (std::gcd(p, q) != 1) fail(ErrorCode::NotCoprime, "pinch moves need coprime parameters");
    if ((p * q) % 2 != 0) fail(ErrorCode::OddProduct, "pinch construction needs pq even");
}

bool is_unknot_pair(long long p, long long q) { return std::min(p, q) <= 1; }

} // namespace

std::pair<long long, long long> pinch_step(long long p, long long q) {
    check_pinchable(p, q);
    if (p < 2 || q < 2) fail(ErrorCode::BadParameter, "pinch step needs p, q >= 2");
    long long t = ((-mod_inverse(q, p)) % p + p) % p; // canonical residue in [1, p)
    long long h = mod_inverse(p, q);                  // canonical residue in [1, q)
    long long r = std::llabs(p - 2 * t);
    long long s = std::llabs(q - 2 * h);
    return {r, s};
}

PinchSequence pinch_sequence(long long p, long long q) {
    check_pinchable(p, q);
    PinchSequence seq;
    seq.steps.push_back({p, q});
    long long a = p, b = q;
    while (!is_unknot_pair(a, b)) {
        auto [r, s] = pinch_step(a, b);
        seq.steps.push_back({r, s});
        a = r; b = s;
    }
    seq.first_unknot_index = (int)seq.steps.size() - 1;

    // T(k,1) with k even pinches down to the meridian two at a time.
    long long k = std::max(a, b);
    if (std::min(a, b) == 1 && k >= 2) {
        if (k % 2 != 0) fail(ErrorCode::Internal, "odd unknot stage from an even product");
        bool k_first = a >= b;
        while (k > 0) {
            k -= 2;
            seq.steps.push_back(k_first ? std::make_pair(k, 1ll) : std::make_pair(1ll, k));
        }
    }
    return seq;
}

SurfacePoint pinch_surface_3(long long p, long long q) {
    PinchSequence seq = pinch_sequence(p, q);
    SurfacePoint f;
    f.b1 = (int)seq.steps.size() - 1; // one band per move, meridian capped by a disk
    f.e = -(p * q);
    f.orientable = f.b1 == 0;
    f.provenance = Provenance::Pinch;
    return f;
}

SurfacePoint pinch_surface_4(long long p, long long q) {
    PinchSequence seq = pinch_sequence(p, q);
    SurfacePoint f;
    f.b1 = seq.first_unknot_index;
    auto [a, b] = seq.steps[seq.first_unknot_index];
    long long m = (a == 0 || b == 0) ? 0 : std::max(a, b); // the unknot reached is T(m,1)
    f.e = m - p * q;
    f.orientable = f.b1 == 0 && f.e == 0;
    f.provenance = Provenance::Pinch;
    return f;
}

} // namespace crossgeo
