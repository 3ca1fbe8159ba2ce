#pragma once

#include "crossgeo/diagram.hpp"
#include "crossgeo/error.hpp"

#include <functional>

namespace fixtures {

inline const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline const char* kFiveTwoPd = "X(1,5,2,4) X(3,9,4,8) X(5,1,6,10) X(9,7,10,6) X(7,3,8,2)";
// Trefoil with one positive kink spliced into edge 1.
inline const char* kKinkedTrefoilPd = "X(3,6,4,7) X(5,8,6,1) X(7,4,8,5) X(1,2,2,3)";

inline crossgeo::KnotDiagram trefoil() { return crossgeo::parse_pd(kTrefoilPd); }
inline crossgeo::KnotDiagram five_two() { return crossgeo::parse_pd(kFiveTwoPd); }

inline bool fails_with(crossgeo::ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const crossgeo::Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace fixtures
