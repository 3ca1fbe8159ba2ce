#include "crossgeo/svg.hpp"

#include <algorithm>
#include <sstream>

namespace crossgeo {

namespace {
constexpr int kUnit = 20; // pixels per lattice step
}

std::string region_svg(const GeographyRegion& region,
                       const std::vector<SurfacePoint>& open_dots,
                       std::optional<long long> sigma,
                       const std::string& title) {
    long long e_min = 0, e_max = 0;
    long long b_max = 1;
    for (const auto& w : region.apexes) {
        e_min = std::min(e_min, w.apex_e);
        e_max = std::max(e_max, w.apex_e);
        b_max = std::max(b_max, (long long)w.apex_b);
    }
    for (const auto& p : open_dots) {
        e_min = std::min(e_min, p.e);
        e_max = std::max(e_max, p.e);
        b_max = std::max(b_max, (long long)p.b1);
    }
    if (sigma) {
        e_min = std::min(e_min, 2 * *sigma);
        e_max = std::max(e_max, 2 * *sigma);
    }
    e_min -= 4;
    e_max += 4;
    b_max += 3;

    const long long width = (e_max - e_min) * kUnit + 2 * kUnit;
    const long long height = (b_max + 1) * kUnit + 2 * kUnit;
    auto X = [&](long long e) { return (e - e_min) * kUnit + kUnit; };
    auto Y = [&](long long b) { return height - kUnit - (b + 1) * kUnit; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "<!-- crossgeo geography v1 -->\n";
    if (!title.empty()) s << "<title>" << title << "</title>\n";

    // axes
    s << "<line x1=\"" << X(e_min) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(e_max) << "\" y2=\""
      << Y(0) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-1) << "\" x2=\"" << X(0) << "\" y2=\""
      << Y(b_max) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    // signature wedge boundary
    if (sigma) {
        long long se = 2 * *sigma;
        s << "<path d=\"M " << X(se - 2 * b_max) << ' ' << Y(b_max) << " L " << X(se) << ' '
          << Y(0) << " L " << X(se + 2 * b_max) << ' ' << Y(b_max)
          << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    // realizable lattice points (surface parity only)
    for (long long b = 0; b <= b_max; ++b)
        for (long long e = e_min; e <= e_max; ++e)
            if (region.contains(e, b))
                s << "<circle cx=\"" << X(e) << "\" cy=\"" << Y(b)
                  << "\" r=\"2.5\" fill=\"#2a6\"/>\n";

    // wedge boundaries and apex markers
    for (const auto& w : region.apexes) {
        s << "<path d=\"M " << X(w.apex_e - 2 * (b_max - w.apex_b)) << ' ' << Y(b_max) << " L "
          << X(w.apex_e) << ' ' << Y(w.apex_b) << " L " << X(w.apex_e + 2 * (b_max - w.apex_b))
          << ' ' << Y(b_max) << "\" fill=\"none\" stroke=\"#26c\" stroke-width=\"1\"/>\n";
        s << "<circle cx=\"" << X(w.apex_e) << "\" cy=\"" << Y(w.apex_b)
          << "\" r=\"4\" fill=\"#125\"/>\n";
        s << "<text x=\"" << X(w.apex_e) + 6 << "\" y=\"" << Y(w.apex_b) + 12
          << "\" font-size=\"10\" fill=\"#125\">(" << w.apex_e << ',' << w.apex_b
          << ")</text>\n";
    }
    for (const auto& p : open_dots)
        s << "<circle cx=\"" << X(p.e) << "\" cy=\"" << Y(p.b1)
          << "\" r=\"4\" fill=\"white\" stroke=\"#125\" stroke-width=\"1.5\"/>\n";

    // axis labels
    s << "<text x=\"" << X(e_max) - 8 << "\" y=\"" << Y(0) + 14
      << "\" font-size=\"10\" fill=\"#444\">e</text>\n";
    s << "<text x=\"" << X(0) + 5 << "\" y=\"" << Y(b_max) + 4
      << "\" font-size=\"10\" fill=\"#444\">b</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace crossgeo
