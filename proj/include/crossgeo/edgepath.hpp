#pragma once

#include "crossgeo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crossgeo {

// Vertex of the edgepath diagram: <p/q> at (1 - 1/q, p/q), its horizontal
// companion <p/q>^o at (1, p/q), and <1/0> at (-1, 0).
struct PathVertex {
    enum class Kind { Interior, Horizontal, Infinity };
    Kind kind = Kind::Interior;
    long long p = 0;
    long long q = 1;

    static PathVertex interior(long long p, long long q);
    static PathVertex infinity();

    Rational u() const;
    Rational v() const;
    bool is_integer() const { return kind == Kind::Interior && q == 1; }

    friend bool operator==(const PathVertex& a, const PathVertex& b) {
        return a.kind == b.kind && a.p == b.p && a.q == b.q;
    }
    std::string str() const;
};

// One edge of an edgepath, stored right-to-left (from = right endpoint).
struct PathEdge {
    enum class Kind { Complete, Partial, Vertical, Infinity };
    Kind kind = Kind::Complete;
    PathVertex from;
    PathVertex to;
    Rational fraction{1}; // Partial: remaining part k/(k+l) adjacent to `from`
    int direction = 0;    // Vertical: +1 up, -1 down

    Rational length() const; // contribution to |Lambda|
    int sign() const;        // epsilon
    Rational twist() const;  // tau = -2 epsilon |e| on u >= 0, 0 on integer-><1/0>
};

struct Edgepath {
    std::vector<PathEdge> edges; // right to left
    PathVertex start;            // right endpoint

    PathVertex end() const { return edges.empty() ? start : edges.back().to; }
    Rational length() const;
    Rational twist() const;
};

enum class PathShape { Sigma, Rho };

// sigma_{+-p} = <0> - <+-1/p>; rho_{+-p} = <+-1> - <+-1/2> - ... - <+-1/|p|>.
Edgepath basic_edgepath(long long param, PathShape shape);

// Structural validity: monotone right-to-left, no retracing, never two sides
// of one diagram triangle in succession.
void validate_edgepath(const Edgepath& path);

enum class SystemType { Basic, I, II, III };

struct EdgepathSystem {
    SystemType type = SystemType::Basic;
    int index = -1; // k in II_k / III_k; -1 for Type I
    std::vector<Edgepath> paths;
    long long sheets = 1;
    Rational u0; // Type I only

    std::string name() const;
};

// All 2^N sigma/rho assignments, indexed with the first strand as the most
// significant bit.
std::vector<EdgepathSystem> enumerate_basic_systems(const std::vector<long long>& params);

std::vector<EdgepathSystem> complete_type_I(const std::vector<EdgepathSystem>& basic,
                                            const std::vector<long long>& params);
std::vector<EdgepathSystem> complete_type_II(const std::vector<EdgepathSystem>& basic);
std::vector<EdgepathSystem> complete_type_III(const std::vector<EdgepathSystem>& basic);

Rational system_length(const EdgepathSystem& sys);
Rational system_twist(const EdgepathSystem& sys);
Rational euler_characteristic(const EdgepathSystem& sys);

// e(Lambda) = tau(Lambda_S) - tau(Lambda) against the given reference system.
Rational normal_euler(const EdgepathSystem& sys, const EdgepathSystem& seifert_system);

struct CandidateSurface {
    EdgepathSystem system;
    Rational chi;
    Rational b1;
    Rational e;
    Rational gamma_plus;
    Rational gamma_minus;
    // Second evaluation of the Type I row's Gamma-minus from its closed form;
    // differs from the definitional value by 1/2 and is the conservative pick
    // when forming lower bounds.
    std::optional<Rational> gamma_minus_alt;
};

// The 17 candidate surfaces of P(-3,3,n): the unique Type I system plus the
// eight Type II and eight Type III completions, with sigma supplied.
std::vector<CandidateSurface> candidate_table(long long n, long long sigma);

} // namespace crossgeo
