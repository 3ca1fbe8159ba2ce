#include "crossgeo/edgepath.hpp"

#include "crossgeo/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crossgeo {

PathVertex PathVertex::interior(long long p, long long q) {
    if (q < 1) fail(ErrorCode::BadParameter, "vertex denominator must be positive");
    if (std::gcd(p < 0 ? -p : p, q) != 1) fail(ErrorCode::BadParameter, "vertex fraction must be reduced");
    return PathVertex{Kind::Interior, p, q};
}

PathVertex PathVertex::infinity() { return PathVertex{Kind::Infinity, 1, 0}; }

Rational PathVertex::u() const {
    switch (kind) {
        case Kind::Interior: return Rational(q - 1, q);
        case Kind::Horizontal: return Rational(1);
        case Kind::Infinity: return Rational(-1);
    }
    return Rational(0);
}

Rational PathVertex::v() const {
    if (kind == Kind::Infinity) return Rational(0);
    return Rational(p, q);
}

std::string PathVertex::str() const {
    if (kind == Kind::Infinity) return "<1/0>";
    std::string s = "<" + std::to_string(p);
    if (q != 1) s += "/" + std::to_string(q);
    s += ">";
    if (kind == Kind::Horizontal) s += "o";
    return s;
}

Rational PathEdge::length() const {
    switch (kind) {
        case Kind::Complete: return Rational(1);
        case Kind::Partial: return fraction;
        case Kind::Vertical: return Rational(1);
        case Kind::Infinity: return Rational(0); // lies left of u = 0
    }
    return Rational(0);
}

int PathEdge::sign() const {
    if (kind == Kind::Vertical) return direction;
    if (kind == Kind::Infinity) return 0;
    // epsilon = ps - qr for the edge <p/q> - <r/s> written left-to-right.
    long long val = to.p * from.q - to.q * from.p;
    if (val > 0) return 1;
    if (val < 0) return -1;
    fail(ErrorCode::Internal, "degenerate edge has no sign");
}

Rational PathEdge::twist() const {
    if (kind == Kind::Infinity) {
        if (!from.is_integer())
            fail(ErrorCode::BadParameter, "twist of a non-integer edge to <1/0> is out of scope");
        return Rational(0);
    }
    return Rational(-2) * Rational(sign()) * length();
}

Rational Edgepath::length() const {
    Rational t(0);
    for (const auto& e : edges) t += e.length();
    return t;
}

Rational Edgepath::twist() const {
    Rational t(0);
    for (const auto& e : edges) t += e.twist();
    return t;
}

namespace {

bool vertices_adjacent(const PathVertex& a, const PathVertex& b) {
    if (a.kind == PathVertex::Kind::Horizontal || b.kind == PathVertex::Kind::Horizontal)
        return false;
    if (a.kind == PathVertex::Kind::Infinity) return b.is_integer();
    if (b.kind == PathVertex::Kind::Infinity) return a.is_integer();
    long long det = a.p * b.q - b.p * a.q;
    return det == 1 || det == -1;
}

} // namespace

void validate_edgepath(const Edgepath& path) {
    const PathVertex* prev_far = nullptr;
    PathVertex at = path.start;
    for (const auto& e : path.edges) {
        if (!(e.from == at)) fail(ErrorCode::Internal, "edgepath edges are not chained");
        if (e.kind != PathEdge::Kind::Vertical && e.kind != PathEdge::Kind::Partial) {
            if (e.to.u() > e.from.u()) fail(ErrorCode::Internal, "edgepath not monotone right-to-left");
        }
        if (prev_far) {
            if (*prev_far == e.to) fail(ErrorCode::Internal, "edgepath retraces an edge");
            if (vertices_adjacent(*prev_far, e.to))
                fail(ErrorCode::Internal, "edgepath runs along two sides of a triangle");
        }
        prev_far = &e.from;
        at = e.to;
    }
}

Edgepath basic_edgepath(long long param, PathShape shape) {
    if (param == 0 || std::llabs(param) < 2)
        fail(ErrorCode::BadParameter, "basic edgepath needs |parameter| >= 2");
    const long long ap = std::llabs(param);
    const long long sgn = param > 0 ? 1 : -1;
    Edgepath path;
    if (shape == PathShape::Sigma) {
        path.start = PathVertex::interior(sgn, ap);
        path.edges.push_back(PathEdge{PathEdge::Kind::Complete, path.start,
                                      PathVertex::interior(0, 1), Rational(1), 0});
    } else {
        path.start = PathVertex::interior(sgn, ap);
        PathVertex at = path.start;
        for (long long q = ap - 1; q >= 1; --q) {
            PathVertex next = PathVertex::interior(sgn, q);
            path.edges.push_back(PathEdge{PathEdge::Kind::Complete, at, next, Rational(1), 0});
            at = next;
        }
    }
    validate_edgepath(path);
    return path;
}

std::string EdgepathSystem::name() const {
    switch (type) {
        case SystemType::Basic: return "basic_" + std::to_string(index);
        case SystemType::I: return "I";
        case SystemType::II: return "II_" + std::to_string(index);
        case SystemType::III: return "III_" + std::to_string(index);
    }
    return "?";
}

std::vector<EdgepathSystem> enumerate_basic_systems(const std::vector<long long>& params) {
    const int N = (int)params.size();
    if (N < 2) fail(ErrorCode::BadParameter, "need at least two strands");
    std::vector<EdgepathSystem> out;
    out.reserve(std::size_t(1) << N);
    for (int mask = 0; mask < (1 << N); ++mask) {
        EdgepathSystem sys;
        sys.type = SystemType::Basic;
        sys.index = mask;
        for (int i = 0; i < N; ++i) {
            bool rho = (mask >> (N - 1 - i)) & 1;
            sys.paths.push_back(basic_edgepath(params[i], rho ? PathShape::Rho : PathShape::Sigma));
        }
        out.push_back(std::move(sys));
    }
    return out;
}

namespace {

// Appending a vertical or <1/0> edge must not run along two sides of a
// triangle with the path's final edge.
bool can_append(const Edgepath& path, const PathVertex& target) {
    if (path.edges.empty()) return true;
    const PathVertex& far = path.edges.back().from;
    if (far == target) return false;
    return !vertices_adjacent(far, target);
}

// Piecewise-linear height of a basic path extended rightward to u = 1.
Rational path_value(const Edgepath& path, const Rational& u) {
    if (u >= path.start.u()) return path.start.v();
    PathVertex right = path.start;
    for (const auto& e : path.edges) {
        const PathVertex& left = e.to;
        if (u >= left.u()) {
            Rational du = right.u() - left.u();
            if (du.is_zero()) return left.v();
            Rational t = (u - left.u()) / du;
            return left.v() + (right.v() - left.v()) * t;
        }
        right = left;
    }
    return path.end().v();
}

Edgepath truncate_at(const Edgepath& path, const Rational& u0, Rational& fraction_out,
                     bool& has_partial) {
    Edgepath out;
    out.start = path.start;
    has_partial = false;
    fraction_out = Rational(1);
    for (const auto& e : path.edges) {
        Rational ur = e.from.u();
        Rational ul = e.to.u();
        if (ul >= u0) {
            out.edges.push_back(e);
            continue;
        }
        if (ur <= u0) break;
        // Cut strictly inside this edge: keep the part next to the right
        // endpoint. Solve u0 = (k(q-1) + l(s-1)) / (kq + ls) for k : l.
        long long q = e.to.q, s = e.from.q;
        long long alpha = u0.num(), beta = u0.den();
        long long k = alpha * s - (s - 1) * beta;
        long long l = (q - 1) * beta - alpha * q;
        if (k < 0) { k = -k; l = -l; }
        if (k <= 0 || l <= 0) fail(ErrorCode::Internal, "partial edge fraction out of range");
        long long g = std::gcd(k, l);
        k /= g; l /= g;
        PathEdge cut = e;
        cut.kind = PathEdge::Kind::Partial;
        cut.fraction = Rational(k, k + l);
        out.edges.push_back(cut);
        has_partial = true;
        fraction_out = cut.fraction;
        break;
    }
    return out;
}

} // namespace

std::vector<EdgepathSystem> complete_type_I(const std::vector<EdgepathSystem>& basic,
                                            const std::vector<long long>& params) {
    std::vector<EdgepathSystem> out;
    Rational max_u0(1);
    for (long long p : params) {
        Rational su(std::llabs(p) - 1, std::llabs(p));
        if (su < max_u0) max_u0 = su;
    }

    for (const auto& sys : basic) {
        // Breakpoints of the summed piecewise-linear height.
        std::vector<Rational> us{Rational(0), Rational(1)};
        for (const auto& path : sys.paths) {
            us.push_back(path.start.u());
            for (const auto& e : path.edges) us.push_back(e.to.u());
        }
        std::sort(us.begin(), us.end());
        us.erase(std::unique(us.begin(), us.end()), us.end());

        auto total = [&](const Rational& u) {
            Rational t(0);
            for (const auto& path : sys.paths) t += path_value(path, u);
            return t;
        };

        std::vector<Rational> roots;
        for (size_t i = 0; i + 1 < us.size(); ++i) {
            Rational a = us[i], b = us[i + 1];
            Rational fa = total(a), fb = total(b);
            if (fa.is_zero() && fb.is_zero())
                fail(ErrorCode::Internal, "degenerate zero segment in type I root search");
            if (fa.is_zero()) roots.push_back(a);
            else if (fa.sign() * fb.sign() < 0)
                roots.push_back(a + (b - a) * fa / (fa - fb));
        }
        if (!us.empty() && total(us.back()).is_zero()) roots.push_back(us.back());
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

        for (const Rational& u0 : roots) {
            if (!(Rational(0) < u0) || u0 > max_u0) continue;
            EdgepathSystem t;
            t.type = SystemType::I;
            t.index = sys.index;
            t.u0 = u0;
            long long sheets = 1;
            for (const auto& path : sys.paths) {
                Rational frac;
                bool partial = false;
                Edgepath cut = truncate_at(path, u0, frac, partial);
                validate_edgepath(cut);
                if (partial) sheets = std::lcm(sheets, frac.den());
                t.paths.push_back(std::move(cut));
            }
            t.sheets = sheets;
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<EdgepathSystem> complete_type_II(const std::vector<EdgepathSystem>& basic) {
    std::vector<EdgepathSystem> out;
    for (const auto& sys : basic) {
        EdgepathSystem t;
        t.type = SystemType::II;
        t.index = sys.index;
        t.paths = sys.paths;

        long long sum = 0;
        for (const auto& path : t.paths) {
            PathVertex e = path.end();
            if (!e.is_integer()) fail(ErrorCode::Internal, "type II endpoint is not an integer vertex");
            sum += e.p;
        }
        int dir = sum > 0 ? -1 : +1;
        long long need = sum < 0 ? -sum : sum;
        if (need > 0) {
            // Minimal completion: all verticals share one direction; attach the
            // run to the first path that legally accepts it.
            size_t host = t.paths.size();
            for (size_t i = 0; i < t.paths.size(); ++i) {
                PathVertex at = t.paths[i].end();
                PathVertex nxt = PathVertex::interior(at.p + dir, 1);
                if (can_append(t.paths[i], nxt)) { host = i; break; }
            }
            if (host == t.paths.size())
                fail(ErrorCode::Internal, "no legal vertical placement for type II completion");
            for (long long j = 0; j < need; ++j) {
                PathVertex at = t.paths[host].end();
                PathVertex nxt = PathVertex::interior(at.p + dir, 1);
                t.paths[host].edges.push_back(
                    PathEdge{PathEdge::Kind::Vertical, at, nxt, Rational(1), dir});
            }
            validate_edgepath(t.paths[host]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<EdgepathSystem> complete_type_III(const std::vector<EdgepathSystem>& basic) {
    std::vector<EdgepathSystem> out;
    for (const auto& sys : basic) {
        EdgepathSystem t;
        t.type = SystemType::III;
        t.index = sys.index;
        t.paths = sys.paths;
        for (auto& path : t.paths) {
            PathVertex at = path.end();
            if (!can_append(path, PathVertex::infinity()))
                fail(ErrorCode::Internal, "illegal type III completion");
            path.edges.push_back(
                PathEdge{PathEdge::Kind::Infinity, at, PathVertex::infinity(), Rational(1), 0});
            validate_edgepath(path);
        }
        out.push_back(std::move(t));
    }
    return out;
}

Rational system_length(const EdgepathSystem& sys) {
    Rational t(0);
    for (const auto& p : sys.paths) t += p.length();
    return t;
}

Rational system_twist(const EdgepathSystem& sys) {
    Rational t(0);
    for (const auto& p : sys.paths) t += p.twist();
    return t;
}

Rational euler_characteristic(const EdgepathSystem& sys) {
    const Rational len = system_length(sys);
    const long long N = (long long)sys.paths.size();
    switch (sys.type) {
        case SystemType::II: return Rational(2) - len;
        case SystemType::III: return -len;
        case SystemType::I: {
            Rational per_sheet = -len + Rational(N) - Rational(N - 2) / (Rational(1) - sys.u0);
            return Rational(sys.sheets) * per_sheet;
        }
        case SystemType::Basic:
            fail(ErrorCode::BadParameter, "Euler characteristic needs a completed system");
    }
    return Rational(0);
}

Rational normal_euler(const EdgepathSystem& sys, const EdgepathSystem& seifert_system) {
    return system_twist(seifert_system) - system_twist(sys);
}

std::vector<CandidateSurface> candidate_table(long long n, long long sigma) {
    if (n < 3 || n % 2 == 0) fail(ErrorCode::BadParameter, "table needs odd n >= 3");
    const std::vector<long long> params{-3, 3, n};
    auto basic = enumerate_basic_systems(params);

    auto type1 = complete_type_I(basic, params);
    if (type1.size() != 1)
        fail(ErrorCode::Internal, "expected a unique type I system, found " +
                                      std::to_string(type1.size()));
    auto type2 = complete_type_II(basic);
    auto type3 = complete_type_III(basic);

    // The all-sigma type II system is the Seifert system; its twist anchors
    // the boundary-slope differences.
    const EdgepathSystem& seifert = type2[0];

    std::vector<CandidateSurface> rows;
    auto push = [&](const EdgepathSystem& sys) {
        CandidateSurface cs;
        cs.system = sys;
        cs.chi = euler_characteristic(sys);
        cs.b1 = Rational(1) - cs.chi;
        cs.e = normal_euler(sys, seifert);
        Rational half_e = cs.e / Rational(2);
        cs.gamma_plus = cs.b1 + Rational(sigma) - half_e;
        cs.gamma_minus = cs.b1 - Rational(sigma) + half_e;
        if (sys.type == SystemType::I) {
            // Closed form in n for this row's Gamma-minus; sits 1/2 below the
            // definitional value and is the conservative choice for bounds.
            cs.gamma_minus_alt = Rational(n + 2, 2) - Rational(4) / Rational(n + 1);
        }
        rows.push_back(std::move(cs));
    };

    push(type1[0]);
    for (const auto& s : type2) push(s);
    for (const auto& s : type3) push(s);
    return rows;
}

} // namespace crossgeo
