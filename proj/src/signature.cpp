#include "crossgeo/signature.hpp"

#include "crossgeo/states.hpp"

#include <algorithm>

namespace crossgeo {

int symmetric_signature(std::vector<std::vector<Rational>> m) {
    const int n = (int)m.size();
    for (int i = 0; i < n; ++i)
        if ((int)m[i].size() != n) fail(ErrorCode::BadParameter, "matrix not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) fail(ErrorCode::BadParameter, "matrix not symmetric");

    std::vector<int> live(n);
    for (int i = 0; i < n; ++i) live[i] = i;
    int sig = 0;

    while (!live.empty()) {
        // Prefer a nonzero diagonal pivot.
        int pi = -1;
        for (int i : live)
            if (!m[i][i].is_zero()) { pi = i; break; }
        if (pi >= 0) {
            sig += m[pi][pi].sign();
            Rational piv = m[pi][pi];
            std::vector<int> rest;
            for (int i : live)
                if (i != pi) rest.push_back(i);
            for (int i : rest)
                for (int j : rest)
                    m[i][j] -= m[i][pi] * m[pi][j] / piv;
            live = std::move(rest);
            continue;
        }
        // All diagonals zero: find a hyperbolic pair (contributes 0).
        int a = -1, b = -1;
        for (size_t i = 0; i < live.size() && a < 0; ++i)
            for (size_t j = i + 1; j < live.size(); ++j)
                if (!m[live[i]][live[j]].is_zero()) { a = live[i]; b = live[j]; break; }
        if (a < 0) break; // zero matrix remains
        Rational p = m[a][b];
        std::vector<int> rest;
        for (int i : live)
            if (i != a && i != b) rest.push_back(i);
        for (int i : rest)
            for (int j : rest)
                m[i][j] -= (m[i][a] * m[b][j] + m[i][b] * m[a][j]) / p;
        live = std::move(rest);
    }
    return sig;
}

int symmetric_signature_int(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<Rational>> q(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) q[i].push_back(Rational(v));
    return symmetric_signature(std::move(q));
}

GoeritzData gl_checkerboard_form(const KnotDiagram& d, RegionColor surface_color) {
    CheckerboardColoring cb = checkerboard(d);
    const int c = d.crossing_count();
    const RegionColor index_color =
        surface_color == RegionColor::White ? RegionColor::Black : RegionColor::White;

    // Compact ids for the indexing regions.
    std::vector<int> idx(cb.faces.n_faces, -1);
    int m = 0;
    for (int f = 0; f < cb.faces.n_faces; ++f)
        if (cb.color[f] == index_color) idx[f] = m++;
    if (m < 1) fail(ErrorCode::Internal, "no regions of the indexing color");

    std::vector<std::vector<long long>> pre(m, std::vector<long long>(m, 0));
    long long mu = 0;
    for (int x = 0; x < c; ++x) {
        bool index_on_a = (index_color == RegionColor::White) == cb.white_on_a_corners[x];
        // Goeritz sign of the crossing relative to the indexing color.
        int eta = index_on_a ? +1 : -1;
        int k0 = index_on_a ? 1 : 0; // corners of the indexing color: k0 and k0+2
        int f1 = cb.faces.face_at_corner[x][k0];
        int f2 = cb.faces.face_at_corner[x][k0 + 2];
        int i = idx[f1], j = idx[f2];
        if (i != j) {
            pre[i][j] -= eta;
            pre[j][i] -= eta;
            pre[i][i] += eta;
            pre[j][j] += eta;
        }

        // Correction term: a crossing is type II for the surface when both
        // strands run the same way across its band. With the under-strand
        // pointing up and the band on the surface-color diagonal, that happens
        // for negative crossings on the A-diagonal and positive ones on the
        // B-diagonal.
        bool surface_on_a = !index_on_a;
        bool type2 = surface_on_a ? d.crossings()[x].sign < 0 : d.crossings()[x].sign > 0;
        if (type2) mu += eta;
    }

    GoeritzData out;
    out.correction = mu;
    // Delete the last row/column; for a connected diagram the signature does
    // not depend on which one goes.
    out.matrix.assign(m - 1, std::vector<long long>(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j) out.matrix[i][j] = pre[i][j];
    out.sigma_surface = symmetric_signature_int(out.matrix);
    out.sigma_k = out.sigma_surface - out.correction;
    return out;
}

long long goeritz_signature(const KnotDiagram& d) {
    return gl_checkerboard_form(d, RegionColor::Black).sigma_k;
}

long long traczyk_signature(const KnotDiagram& d) {
    if (!is_alternating(d)) fail(ErrorCode::NotAlternating, "Traczyk formula needs an alternating diagram");
    if (!is_reduced(d)) fail(ErrorCode::NotReduced, "Traczyk formula needs a reduced diagram");
    const std::uint64_t all_b = d.crossing_count() >= 64
                                    ? ~0ull
                                    : (1ull << d.crossing_count()) - 1;
    State sa = resolve(d, 0ull);
    State sb = resolve(d, all_b);
    long long twice = -d.writhe() + sa.n_circles - sb.n_circles;
    if (twice % 2 != 0) fail(ErrorCode::Internal, "Traczyk value is not an integer");
    return twice / 2;
}

long long pretzel_gap_signature(long long k, long long r) {
    if (k == r * (r + 1)) fail(ErrorCode::Undefined, "signature undefined at k = r(r+1)");
    if (k <= 0 || r <= 0 || k % 2 == 0 || r % 2 == 0)
        fail(ErrorCode::BadParameter, "parameters must be odd and positive");
    return k < r * (r + 1) ? k - r : k - r - 2;
}

} // namespace crossgeo
