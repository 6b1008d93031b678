#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bg/sturmian.hpp"
#include "bg/tuple.hpp"

namespace bg {

struct Rectangle {
    CircleInterval I, J;
    bool empty_interior() const { return I.empty() || J.empty(); }
    bool contains(const TorusPoint& p) const { return I.contains(p.x) && J.contains(p.y); }
};

// The closure of the orbit when alpha, beta, 1 are rationally dependent:
// {(x,y) : p x + q y = c (mod 1)}, gcd(p,q) = 1, with the start point kept
// as parameter origin (the set is the closed geodesic through base with
// direction (-q, p)).
struct LineSpec {
    long long p = 0, q = 0;
    Real c;           // {p*gamma + q*delta}
    TorusPoint base;  // on the line; parametrization L(t) = ({x0 - q t}, {y0 + p t})
};

struct TorusAnswer {
    enum class Verdict { Hit, NoHit, BoundaryIndeterminate };
    enum class Case { Dense, Line };
    Verdict verdict;
    Case orbit_case;
    std::optional<long long> witness;  // least index found (Hit)
    std::string note;
    bool hit() const { return verdict == Verdict::Hit; }
};

// Decides whether some R^i(gamma, delta), i >= from_index, lies in rect.
// Dense case (no dependence witness): hit iff the rectangle is nonempty, and
// a forward scan reports the least witness. Line case: exact geometry of
// line vs rectangle; isolated boundary points are resolved by solving the
// one-dimensional rotation on the line exactly when the values admit radical
// coordinates, else BoundaryIndeterminate.
TorusAnswer orbit_hits(const Tuple4& t, const Rectangle& rect, long long from_index,
                       long long scan_budget = 0 /* 0 = configured default */);

// Same decision for an arbitrary rotation pair and start point.
TorusAnswer orbit_hits(const Real& alpha, const Real& beta, const TorusPoint& start,
                       const Rectangle& rect, long long from_index, long long scan_budget = 0);

LineSpec line_closure(const Real& alpha, const Real& beta, const TorusPoint& start);

struct LineRectIntersection {
    enum class Kind { Arc, FinitePoints, Empty };
    Kind kind = Kind::Empty;
    // open-core parameter arcs (t0, t0+len) of positive length, t0 in [0,1)
    std::vector<std::pair<Real, Real>> arcs;
    // isolated parameters with their torus coordinates
    std::vector<std::pair<Real, TorusPoint>> points;
    // arc list capped (the classification itself is always exact)
    bool truncated = false;
};

// Exact classification of the intersection of the closed geodesic with the
// (half-open) rectangle, honoring which edges are included.
LineRectIntersection rect_line_intersect(const LineSpec& line, const Rectangle& rect);

}  // namespace bg
