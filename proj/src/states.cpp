#include "crossgeo/states.hpp"

#include <algorithm>
#include <numeric>

namespace crossgeo {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[b] = a;
    }
};

// The two pairs of edge labels an A- or B-resolution joins. A joins the arcs
// through the SW and NE corners (ports 0-3 and 1-2), B the other two.
void resolution_pairs(const Crossing& cr, bool a_res, std::array<std::pair<int, int>, 2>& out) {
    const auto& e = cr.edges;
    if (a_res) out = {std::make_pair(e[0], e[3]), std::make_pair(e[1], e[2])};
    else out = {std::make_pair(e[0], e[1]), std::make_pair(e[2], e[3])};
}

} // namespace

std::string State::choice_word() const {
    std::string w;
    const int c = diagram->crossing_count();
    w.reserve(c);
    for (int i = 0; i < c; ++i) w.push_back(is_a(i) ? 'A' : 'B');
    return w;
}

State resolve(const KnotDiagram& d, std::uint64_t choices) {
    const int c = d.crossing_count();
    const int n = d.edge_count();
    State s;
    s.diagram = &d;
    s.choices = choices;

    DisjointSet uf(n + 1);
    std::array<std::pair<int, int>, 2> pr;
    for (int x = 0; x < c; ++x) {
        resolution_pairs(d.crossings()[x], (choices >> x & 1u) == 0, pr);
        uf.unite(pr[0].first, pr[0].second);
        uf.unite(pr[1].first, pr[1].second);
    }

    // Canonical circle ids in order of smallest member label.
    std::vector<int> id_of_root(n + 1, -1);
    s.circle_of_edge.assign(n + 1, -1);
    for (int e = 1; e <= n; ++e) {
        int r = uf.find(e);
        if (id_of_root[r] == -1) id_of_root[r] = s.n_circles++;
        s.circle_of_edge[e] = id_of_root[r];
    }

    s.bands.resize(c);
    s.basic = true;
    for (int x = 0; x < c; ++x) {
        resolution_pairs(d.crossings()[x], s.is_a(x), pr);
        int c1 = s.circle_of_edge[pr[0].first];
        int c2 = s.circle_of_edge[pr[1].first];
        s.bands[x] = {c1, c2};
        if (c1 == c2) s.basic = false;
        if (s.is_a(x)) ++s.a_count; else ++s.b_count;
    }

    // Nesting: merge the diagram faces across each smoothed crossing's channel,
    // then read depths off the face/circle incidence tree rooted at the outer
    // face. An A-smoothing merges the corners at indices 0 and 2, B the others.
    PlanarFaces pf = planar_faces(d);
    DisjointSet fuf(pf.n_faces);
    for (int x = 0; x < c; ++x) {
        if (s.is_a(x)) fuf.unite(pf.face_at_corner[x][0], pf.face_at_corner[x][2]);
        else fuf.unite(pf.face_at_corner[x][1], pf.face_at_corner[x][3]);
    }
    std::vector<int> fid(pf.n_faces, -1);
    int n_state_faces = 0;
    for (int f = 0; f < pf.n_faces; ++f) {
        int r = fuf.find(f);
        if (fid[r] == -1) fid[r] = n_state_faces++;
        fid[f] = fid[r];
    }
    if (n_state_faces != s.n_circles + 1)
        fail(ErrorCode::Internal, "state face count disagrees with circle count");

    // Each circle borders exactly two state faces; collect them from the arcs.
    std::vector<std::array<int, 2>> sides(s.n_circles, {-1, -1});
    for (int e = 1; e <= n; ++e) {
        int circ = s.circle_of_edge[e];
        const auto& two = d.ends_of(e);
        // faces flanking the arc: the corners on either side of its head port
        auto [x, p] = two[0];
        int fa = fid[pf.face_at_corner[x][p]];
        int fb = fid[pf.face_at_corner[x][(p + 3) % 4]];
        for (int f : {fa, fb}) {
            if (sides[circ][0] == f || sides[circ][1] == f) continue;
            if (sides[circ][0] == -1) sides[circ][0] = f;
            else if (sides[circ][1] == -1) sides[circ][1] = f;
            else fail(ErrorCode::Internal, "state circle borders more than two faces");
        }
    }

    for (int circ = 0; circ < s.n_circles; ++circ)
        if (sides[circ][1] == -1) fail(ErrorCode::Internal, "state circle with a single side");

    // BFS on the bipartite face/circle tree from the outer face.
    int outer = fid[pf.outer_face];
    std::vector<int> face_level(n_state_faces, -1);
    s.nesting_depth.assign(s.n_circles, -1);
    std::vector<std::vector<int>> circles_of_face(n_state_faces);
    for (int circ = 0; circ < s.n_circles; ++circ) {
        circles_of_face[sides[circ][0]].push_back(circ);
        circles_of_face[sides[circ][1]].push_back(circ);
    }
    std::vector<int> queue{outer};
    face_level[outer] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int f = queue[qi];
        for (int circ : circles_of_face[f]) {
            if (s.nesting_depth[circ] != -1) continue;
            s.nesting_depth[circ] = face_level[f];
            int g = sides[circ][0] == f ? sides[circ][1] : sides[circ][0];
            if (face_level[g] == -1) {
                face_level[g] = face_level[f] + 1;
                queue.push_back(g);
            }
        }
    }
    for (int circ = 0; circ < s.n_circles; ++circ)
        if (s.nesting_depth[circ] == -1) fail(ErrorCode::Internal, "circle unreachable in nesting tree");

    return s;
}

State resolve(const KnotDiagram& d, const std::string& word) {
    if ((int)word.size() != d.crossing_count())
        fail(ErrorCode::BadParameter, "choice word length does not match crossing count");
    std::uint64_t mask = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        char ch = word[i];
        if (ch == 'B' || ch == 'b') mask |= 1ull << i;
        else if (ch != 'A' && ch != 'a') fail(ErrorCode::BadParameter, "choice word must be A/B");
    }
    return resolve(d, mask);
}

std::uint64_t seifert_choices(const KnotDiagram& d) {
    // Orientation-respecting smoothing: A at positive crossings, B at negative.
    std::uint64_t mask = 0;
    for (int x = 0; x < d.crossing_count(); ++x)
        if (d.crossings()[x].sign < 0) mask |= 1ull << x;
    return mask;
}

std::vector<State> enumerate_states(const KnotDiagram& d, bool basic_only, int cap) {
    const int c = d.crossing_count();
    if (c > cap || c > 62)
        fail(ErrorCode::TooManyCrossings,
             std::to_string(c) + " crossings exceeds enumeration cap " + std::to_string(cap));

    std::vector<State> out;
    if (!basic_only) {
        out.reserve(std::size_t(1) << c);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c); ++mask)
            out.push_back(resolve(d, mask));
        return out;
    }

    // Depth-first over crossings with a rollback union-find; a branch dies as
    // soon as any resolved crossing's two strips lie on one circle.
    const int n = d.edge_count();
    std::vector<int> parent(n + 1), rank_(n + 1, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> undo; // roots whose parent we set

    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a]; // no path compression: rollback-friendly
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a == b) { undo.push_back(-1); return; }
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a]; // rank inflation is harmless on rollback
        undo.push_back(b);
    };
    auto rollback = [&](size_t mark) {
        while (undo.size() > mark) {
            int b = undo.back();
            undo.pop_back();
            if (b >= 0) parent[b] = b;
        }
    };

    std::array<std::pair<int, int>, 2> pr;
    std::vector<std::pair<int, int>> strip_reps; // one entry per resolved crossing
    std::uint64_t mask = 0;

    auto rec = [&](auto&& self, int x) -> void {
        if (x == c) {
            out.push_back(resolve(d, mask));
            return;
        }
        for (int choice = 0; choice < 2; ++choice) {
            size_t mark = undo.size();
            bool a_res = choice == 0;
            resolution_pairs(d.crossings()[x], a_res, pr);
            unite(pr[0].first, pr[0].second);
            unite(pr[1].first, pr[1].second);
            strip_reps.push_back({pr[0].first, pr[1].first});
            bool ok = true;
            for (const auto& [u, v] : strip_reps)
                if (find(u) == find(v)) { ok = false; break; }
            if (ok) {
                if (!a_res) mask |= 1ull << x;
                self(self, x + 1);
                if (!a_res) mask &= ~(1ull << x);
            }
            strip_reps.pop_back();
            rollback(mark);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const State& a, const State& b) { return a.choices < b.choices; });
    return out;
}

bool orientability(const State& s) {
    // Propagate disk orientations through the half-twisted bands: a band flips
    // unless it steps one nesting level. Orientable iff no cycle flips.
    const int k = s.n_circles;
    std::vector<int> parent(k), par(k, 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        int p = 0;
        while (parent[a] != a) { p ^= par[a]; a = parent[a]; }
        return std::make_pair(a, p);
    };
    for (const auto& [u, v] : s.bands) {
        int depth_diff = std::abs(s.nesting_depth[u] - s.nesting_depth[v]) & 1;
        int bit = 1 ^ depth_diff;
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) {
            if ((pu ^ pv) != bit) return false;
        } else {
            parent[ru] = rv;
            par[ru] = pu ^ pv ^ bit;
        }
    }
    return true;
}

StateSurface state_surface(const State& s) {
    StateSurface f;
    f.b1 = 1 + s.diagram->crossing_count() - s.n_circles;
    f.e = (long long)s.a_count - s.b_count - s.diagram->writhe();
    f.orientable = orientability(s);
    return f;
}

SurfacePoint surface_point(const State& s) {
    StateSurface f = state_surface(s);
    return SurfacePoint{f.e, f.b1, f.orientable, Provenance::StateSurface};
}

SurfacePoint add_twisted_band(const SurfacePoint& p, int sign, int k) {
    if (k < 1) fail(ErrorCode::BadParameter, "twisted band count must be >= 1");
    if (sign != 1 && sign != -1) fail(ErrorCode::BadParameter, "twist sign must be +1 or -1");
    return SurfacePoint{p.e + 2ll * sign * k, p.b1 + k, false, Provenance::Twisted};
}

} // namespace crossgeo
