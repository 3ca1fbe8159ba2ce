#pragma once

#include "crossgeo/error.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace crossgeo {

// A crossing X(a,b,c,d): edge labels counterclockwise starting at the incoming
// under-strand edge. The under-strand runs port 0 -> port 2; the over-strand
// occupies ports 1 and 3, its direction recovered from the global edge order.
// sign is +1 when the over-strand runs from port 1 to port 3.
struct Crossing {
    std::array<int, 4> edges;
    int sign = 0;
};

// Faces of the 4-valent planar map, extracted from the rotation system alone.
// Corner k of a crossing is the region between ports k and k+1 (mod 4).
struct PlanarFaces {
    int n_faces = 0;
    std::vector<std::array<int, 4>> face_at_corner; // [crossing][corner] -> face id
    int outer_face = 0;                             // canonical root, corner 3 of crossing 0
};

enum class RegionColor { Black, White };

struct CheckerboardColoring {
    PlanarFaces faces;
    std::vector<RegionColor> color; // per face id
    // True when the white regions sit at corners 1 and 3 of the crossing;
    // this is the orientation the A-resolution strips occupy.
    std::vector<bool> white_on_a_corners; // per crossing
    int n_white = 0;
    int n_black = 0;
};

class KnotDiagram {
  public:
    KnotDiagram() = default;
    // Validates everything: label counts, connectivity, single component,
    // coherent edge ordering; computes crossing signs.
    explicit KnotDiagram(std::vector<std::array<int, 4>> tuples, std::string label = "");

    int crossing_count() const { return (int)crossings_.size(); }
    int edge_count() const { return 2 * (int)crossings_.size(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    long long writhe() const;
    int positive_crossings() const;
    int negative_crossings() const;

    // Both occurrences of an edge label as (crossing, port) pairs.
    const std::array<std::pair<int, int>, 2>& ends_of(int edge_label) const;

    KnotDiagram mirror() const;

    std::string pd_code() const;

  private:
    std::vector<Crossing> crossings_;
    std::string label_;
    std::vector<std::array<std::pair<int, int>, 2>> edge_ends_; // 1-based label -> ends

    void validate_and_orient();
};

KnotDiagram parse_pd(const std::string& text);

bool is_alternating(const KnotDiagram& d);
bool is_reduced(const KnotDiagram& d);

PlanarFaces planar_faces(const KnotDiagram& d);
CheckerboardColoring checkerboard(const KnotDiagram& d);

// Generators. Both emit diagrams that round-trip through parse_pd.
KnotDiagram pretzel_diagram(const std::vector<int>& params);
KnotDiagram torus_diagram(int p, int q);
KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2);

} // namespace crossgeo
