#pragma once

#include "crossgeo/diagram.hpp"
#include "crossgeo/rational.hpp"
#include "crossgeo/states.hpp"

#include <optional>
#include <vector>

namespace crossgeo {

// Integer wedge in the (e, b) plane: lattice points with the surface parity
// e = 2b mod 4 above the apex cone.
struct Wedge {
    long long apex_e = 0;
    int apex_b = 0;

    Wedge() = default;
    Wedge(long long e, int b);

    bool contains(long long e, long long b) const;
    bool contains(const Wedge& other) const { return contains(other.apex_e, other.apex_b); }

    friend bool operator==(const Wedge& a, const Wedge& b) {
        return a.apex_e == b.apex_e && a.apex_b == b.apex_b;
    }
    friend bool operator<(const Wedge& a, const Wedge& b) {
        return a.apex_e != b.apex_e ? a.apex_e < b.apex_e : a.apex_b < b.apex_b;
    }
};

// Union of wedges, stored as the dominance-minimal apex set together with the
// generating surface points it was built from.
struct GeographyRegion {
    std::vector<Wedge> apexes;              // normalized: no apex inside another wedge
    std::vector<SurfacePoint> generators;   // the surfaces handed to the builder

    bool contains(long long e, long long b) const;
};

struct RationalWedge {
    Rational apex_u;
    Rational apex_v;
    bool contains(const Rational& e, const Rational& b) const;
};

struct GammaPair {
    Rational plus;
    Rational minus;

    friend bool operator==(const GammaPair& a, const GammaPair& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

GammaPair gamma(const Rational& e, const Rational& b1, const Rational& sigma);
GammaPair gamma(const SurfacePoint& p, long long sigma);

// Gamma is unchanged when a matching-sign twisted band is added; exposed as a
// reusable property check.
bool gamma_invariant_under_twist(const SurfacePoint& p, int sign, long long sigma, int max_k = 5);

std::vector<Wedge> normalize_apexes(std::vector<Wedge> ws);

// Region generated by a family of surfaces: non-orientable members directly,
// orientable ones through a single twisted band of either sign.
GeographyRegion region_from_surfaces(const std::vector<SurfacePoint>& surfaces);

// Basic state surfaces generate the geography of a reduced alternating
// diagram; errors otherwise.
GeographyRegion alternating_region(const KnotDiagram& d, int cap = 24);

int gamma3_from_region(const GeographyRegion& r);

GammaPair gamma_hat_from_surfaces(const std::vector<SurfacePoint>& surfaces, long long sigma);

int turaev_genus_diagram(const KnotDiagram& d);

Wedge gl_wedge(long long sigma);
Wedge upsilon_wedge(long long upsilon);

// Slice-torus wedge gap bounds: lower bounds for gamma-hat-4 plus/minus.
std::pair<long long, long long> oss_sg_bounds(long long sigma, long long upsilon);
Rational oss_gamma4_bound(long long sigma, long long upsilon);

GammaPair rational_wedge_bound(const std::vector<std::pair<Rational, Rational>>& candidates,
                               long long sigma);

GammaPair connected_sum_gamma(const GammaPair& g1, const GammaPair& g2);

// Normal Euler number of the cobordism a flat band move traces between two
// diagrams, read off the blackboard framing: writhe(before) - writhe(after).
long long band_move_euler(const KnotDiagram& before, const KnotDiagram& after);

} // namespace crossgeo
