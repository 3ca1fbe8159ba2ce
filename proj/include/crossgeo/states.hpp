#pragma once

#include "crossgeo/diagram.hpp"
#include "crossgeo/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crossgeo {

// A Kauffman state: one A/B choice per crossing plus the derived circle
// structure. Choices are a bitmask keyed to crossing order, bit set = B.
struct State {
    const KnotDiagram* diagram = nullptr;
    std::uint64_t choices = 0;

    int n_circles = 0;
    int a_count = 0;
    int b_count = 0;
    std::vector<int> circle_of_edge;            // 1-based edge label -> circle id
    std::vector<std::pair<int, int>> bands;     // per crossing: the two circles it joins
    std::vector<int> nesting_depth;             // per circle, rooted at the outer face
    bool basic = false;

    bool is_a(int crossing) const { return (choices >> crossing & 1u) == 0; }
    std::string choice_word() const;
};

State resolve(const KnotDiagram& d, std::uint64_t choices);
State resolve(const KnotDiagram& d, const std::string& word); // e.g. "ABBA"
// States keep a reference to their diagram; temporaries would dangle.
State resolve(KnotDiagram&&, std::uint64_t) = delete;
State resolve(KnotDiagram&&, const std::string&) = delete;

// All 2^c states in bitmask order, or only the basic ones (no band joining a
// circle to itself). Basic-only enumeration prunes whole subtrees as soon as a
// resolved crossing's two strips merge.
std::vector<State> enumerate_states(const KnotDiagram& d, bool basic_only, int cap = 24);
std::vector<State> enumerate_states(KnotDiagram&&, bool, int cap = 24) = delete;

std::uint64_t seifert_choices(const KnotDiagram& d);

bool orientability(const State& s);

struct StateSurface {
    int b1 = 0;
    long long e = 0;
    bool orientable = false;
};

StateSurface state_surface(const State& s);

enum class Provenance { StateSurface, Twisted, Pinch, Edgepath, BandMove, External };

// A point of the (e, b1) plane tagged with how it was obtained.
struct SurfacePoint {
    long long e = 0;
    int b1 = 0;
    bool orientable = false;
    Provenance provenance = Provenance::External;

    friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
        return a.e == b.e && a.b1 == b.b1;
    }
    friend bool operator<(const SurfacePoint& a, const SurfacePoint& b) {
        return a.e != b.e ? a.e < b.e : a.b1 < b.b1;
    }
};

SurfacePoint surface_point(const State& s);
SurfacePoint add_twisted_band(const SurfacePoint& p, int sign, int k = 1);

} // namespace crossgeo
