#pragma once

#include "crossgeo/diagram.hpp"
#include "crossgeo/rational.hpp"

#include <vector>

namespace crossgeo {

// Goeritz matrix of a checkerboard surface together with the correction term.
// The matrix is indexed by the regions of the opposite color, minus one; its
// signature is the signature of the Gordon-Litherland form of the surface.
struct GoeritzData {
    std::vector<std::vector<long long>> matrix;
    long long correction = 0; // mu: signed count over type-II crossings
    int sigma_surface = 0;    // signature of the matrix
    long long sigma_k = 0;    // sigma_surface - correction
};

// Signature of a symmetric rational matrix by exact congruence
// diagonalization. Zero diagonals with nonzero off-diagonal entries are
// handled as hyperbolic pairs contributing zero.
int symmetric_signature(std::vector<std::vector<Rational>> m);
int symmetric_signature_int(const std::vector<std::vector<long long>>& m);

GoeritzData gl_checkerboard_form(const KnotDiagram& d, RegionColor surface_color);

long long goeritz_signature(const KnotDiagram& d);

// Traczyk's closed form for reduced alternating diagrams.
long long traczyk_signature(const KnotDiagram& d);

// Closed-form signature of P(-k, r, -r-1) for odd positive k, r; refuses the
// excluded value k = r(r+1).
long long pretzel_gap_signature(long long k, long long r);

} // namespace crossgeo
