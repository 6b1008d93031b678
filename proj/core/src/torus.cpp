#include "bg/torus.hpp"

#include <algorithm>
#include <array>

#include "bg/errors.hpp"
#include "bg/scan.hpp"

namespace bg {

namespace {

// One coordinate condition on the line parameter: {coef*t + phase} in arc.
// Normalized to positive coefficient N and the open-core form
// {N*t + chi} in (0, L); the closed endpoint of each t-window sits at the
// left end when coef > 0 and at the right end when coef < 0.
struct AxisCondition {
    long long N = 0;   // |coef|
    Real chi;          // normalized offset
    Real L;            // arc length, 0 < L < 1
    bool left_closed;  // coef > 0
};

AxisCondition normalize_axis(long long coef, const Real& phase, const CircleInterval& arc) {
    AxisCondition c;
    c.N = std::llabs(coef);
    c.L = arc.length();
    if (coef > 0) {
        c.chi = (phase - arc.lo()).frac();
        c.left_closed = true;
    } else {
        c.chi = (arc.lo() + arc.length() - phase).frac();
        c.left_closed = false;
    }
    return c;
}

// Smallest integer strictly greater than x.
mpz_class next_integer_above(const Real& x) { return x.floor() + 1; }

struct Bezout {
    long long a, b;  // ny*a - nx*b = 1
};

Bezout solve_unit(long long ny, long long nx) {
    long long old_r = ny, r = nx, old_u = 1, u = 0, old_v = 0, v = 1;
    while (r != 0) {
        long long k = old_r / r;
        long long t;
        t = old_r - k * r; old_r = r; r = t;
        t = old_u - k * u; old_u = u; u = t;
        t = old_v - k * v; old_v = v; v = t;
    }
    // old_u*ny + old_v*nx = old_r = +-1
    if (old_r < 0) {
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_u, -old_v};
}

TorusPoint line_point(const LineSpec& line, const Real& t) {
    return {(line.base.x - Real(mpz_ll(line.q)) * t).frac(),
            (line.base.y + Real(mpz_ll(line.p)) * t).frac()};
}

Real line_step_param(const LineSpec& line, const Real& alpha, const Real& beta) {
    // p*t_v = beta (mod 1) and q*t_v = -alpha (mod 1); with u*p + v*q = 1
    // this pins t_v = {u*beta - v*alpha}.
    Bezout bz = solve_unit(line.p, -line.q);  // p*a - (-q)*b = 1 -> a*p + b*q = 1
    long long u = bz.a, v = bz.b;
    return (Real(mpz_ll(u)) * beta - Real(mpz_ll(v)) * alpha).frac();
}

struct SolveResult {
    bool supported = true;
    std::optional<long long> index;
};

// Least integer i >= from with {i*step} = target, decided from radical
// coordinates; unsupported when either value has no normal form.
SolveResult solve_rotation_hit(const Real& step, const Real& target, long long from) {
    SolveResult res;
    auto cs = step.radical_coordinates();
    auto ct = target.radical_coordinates();
    if (!cs || !ct) {
        res.supported = false;
        return res;
    }
    std::optional<mpq_class> cand;
    for (const auto& [rad, coeff] : *cs) {
        if (rad == 1) continue;
        mpq_class tc = 0;
        if (auto it = ct->find(rad); it != ct->end()) tc = it->second;
        mpq_class i = tc / coeff;
        if (cand && *cand != i) return res;
        cand = i;
    }
    for (const auto& [rad, coeff] : *ct) {
        if (rad == 1) continue;
        if (!cs->count(rad)) return res;
    }
    if (!cand) {
        res.supported = false;  // rational step: not an irrational rotation
        return res;
    }
    if (cand->get_den() != 1 || *cand < 0) return res;
    mpz_class num = cand->get_num();
    if (!num.fits_slong_p()) return res;
    long long i = num.get_si();
    if (i < from) return res;
    Real check = Real(mpz_ll(i)) * step - target;
    if (!check.frac().is_zero()) return res;
    res.index = i;
    return res;
}

TorusAnswer scan_for_witness(const Real& alpha, const Real& beta, const TorusPoint& start,
                             const Rectangle& rect, long long from_index, long long budget,
                             TorusAnswer::Case cs) {
    RotationScanner sx(alpha, start.x), sy(beta, start.y);
    sx.seek((std::uint64_t)from_index);
    sy.seek((std::uint64_t)from_index);
    FixArc ax = FixArc::from(rect.I.lo(), rect.I.length());
    FixArc ay = FixArc::from(rect.J.lo(), rect.J.length());
    auto exact_member = [&](long long i) {
        TorusPoint p{(start.x + Real(mpz_ll(i)) * alpha).frac(),
                     (start.y + Real(mpz_ll(i)) * beta).frac()};
        return rect.contains(p);
    };
    for (long long n = 0; n < budget; ++n) {
        Tri mx = arc_member(sx.position(), sx.margin(), ax);
        if (mx != Tri::Out) {
            Tri my = arc_member(sy.position(), sy.margin(), ay);
            if (my != Tri::Out) {
                long long i = (long long)sx.index();
                if (exact_member(i)) return {TorusAnswer::Verdict::Hit, cs, i, ""};
            }
        }
        sx.step();
        sy.step();
    }
    throw ScanBudgetExceeded("no orbit witness within " + std::to_string(budget) +
                             " iterations despite guaranteed existence");
}

}  // namespace

LineSpec line_closure(const Real& alpha, const Real& beta, const TorusPoint& start) {
    auto dep = rational_dependence(alpha, beta);
    if (!dep) throw NotDependent("alpha, beta, 1 are rationally independent");
    LineSpec line;
    line.p = (long long)(*dep)[0].get_si();
    line.q = (long long)(*dep)[1].get_si();
    line.base = {start.x.frac(), start.y.frac()};
    line.c = (Real((*dep)[0]) * start.x + Real((*dep)[1]) * start.y).frac();
    return line;
}

namespace {

struct WindowGeometry {
    AxisCondition cx, cy;
    Real W, lo_bound, hi_bound;
    Bezout bz;

    std::array<Real, 4> window_pair(const mpz_class& g) const {
        // k = g*a, l = g*b satisfies Ny*k - Nx*l = g
        Real k = Real(mpz_class(g * mpz_ll(bz.a)));
        Real l = Real(mpz_class(g * mpz_ll(bz.b)));
        Real sx = (k - cx.chi) / Real(mpz_ll(cx.N));
        Real ex = sx + cx.L / Real(mpz_ll(cx.N));
        Real sy = (l - cy.chi) / Real(mpz_ll(cy.N));
        Real ey = sy + cy.L / Real(mpz_ll(cy.N));
        return {sx, ex, sy, ey};
    }
};

WindowGeometry make_geometry(const LineSpec& line, const Rectangle& rect) {
    WindowGeometry geo;
    geo.cx = normalize_axis(-line.q, line.base.x, rect.I);
    geo.cy = normalize_axis(line.p, line.base.y, rect.J);
    // X-windows ((k-chi_x)/Nx, ...+Lx/Nx), Y-windows ((l-chi_y)/Ny, ...);
    // with gcd(Nx,Ny)=1 the offset g = Ny*k - Nx*l sweeps all integers, so a
    // positive-length overlap exists iff some integer lies in the open
    // interval (W - Ny*Lx, W + Nx*Ly), W = Ny*chi_x - Nx*chi_y.
    geo.W = Real(mpz_ll(geo.cy.N)) * geo.cx.chi - Real(mpz_ll(geo.cx.N)) * geo.cy.chi;
    geo.lo_bound = geo.W - Real(mpz_ll(geo.cy.N)) * geo.cx.L;
    geo.hi_bound = geo.W + Real(mpz_ll(geo.cx.N)) * geo.cy.L;
    geo.bz = solve_unit(geo.cy.N, geo.cx.N);  // Ny*a - Nx*b = 1
    return geo;
}

// Isolated touch points (a window start meeting a window end, both closed);
// only meaningful when no integer lies strictly between the bounds.
void collect_touch_points(const LineSpec& line, const WindowGeometry& geo,
                          LineRectIntersection& out) {
    auto try_touch = [&](const Real& gval, bool x_start_meets_y_end) {
        Real frac = gval.frac();  // PrecisionExhausted propagates: undecidable touch
        if (!frac.is_zero()) return;
        bool closed = x_start_meets_y_end ? (geo.cx.left_closed && !geo.cy.left_closed)
                                          : (!geo.cx.left_closed && geo.cy.left_closed);
        if (!closed) return;
        mpz_class g = gval.floor();
        auto wp = geo.window_pair(g);
        Real t = (x_start_meets_y_end ? wp[0] : wp[2]).frac();
        for (const auto& [tt, pt] : out.points) {
            if (tt == t) return;
        }
        out.points.emplace_back(t, line_point(line, t));
    };
    try_touch(geo.hi_bound, true);   // g = W + Nx*Ly: s_x = e_y
    try_touch(geo.lo_bound, false);  // g = W - Ny*Lx: e_x = s_y
}

// Classification without arc enumeration: O(1) exact decision.
LineRectIntersection classify_line_rect(const LineSpec& line, const Rectangle& rect) {
    LineRectIntersection out;
    if (rect.I.empty() || rect.J.empty()) return out;
    if (rect.I.is_full() || rect.J.is_full()) {
        out.kind = LineRectIntersection::Kind::Arc;
        return out;
    }
    WindowGeometry geo = make_geometry(line, rect);
    mpz_class g_first = next_integer_above(geo.lo_bound);
    if (Real(g_first) < geo.hi_bound) {
        out.kind = LineRectIntersection::Kind::Arc;
        return out;
    }
    collect_touch_points(line, geo, out);
    out.kind = out.points.empty() ? LineRectIntersection::Kind::Empty
                                  : LineRectIntersection::Kind::FinitePoints;
    return out;
}

}  // namespace

LineRectIntersection rect_line_intersect(const LineSpec& line, const Rectangle& rect) {
    LineRectIntersection out;
    if (rect.I.empty() || rect.J.empty()) return out;
    if (rect.I.is_full() && rect.J.is_full()) {
        out.kind = LineRectIntersection::Kind::Arc;
        out.arcs.emplace_back(Real(0), Real(1));
        return out;
    }
    // One unconstrained axis: the other axis alone cuts positive-length
    // windows; report the k = 0 representative.
    if (rect.I.is_full() || rect.J.is_full()) {
        out.kind = LineRectIntersection::Kind::Arc;
        if (rect.I.is_full()) {
            AxisCondition cy = normalize_axis(line.p, line.base.y, rect.J);
            Real s = (Real(0) - cy.chi) / Real(mpz_ll(cy.N));
            out.arcs.emplace_back(s.frac(), s.frac() + cy.L / Real(mpz_ll(cy.N)));
            out.truncated = cy.N > 1;
        } else {
            AxisCondition cx = normalize_axis(-line.q, line.base.x, rect.I);
            Real s = (Real(0) - cx.chi) / Real(mpz_ll(cx.N));
            out.arcs.emplace_back(s.frac(), s.frac() + cx.L / Real(mpz_ll(cx.N)));
            out.truncated = cx.N > 1;
        }
        return out;
    }
    WindowGeometry geo = make_geometry(line, rect);
    mpz_class g_first = next_integer_above(geo.lo_bound);
    constexpr long long kMaxExplicitArcs = 1024;
    long long emitted = 0;
    for (mpz_class g = g_first; Real(g) < geo.hi_bound; ++g) {
        if (emitted >= kMaxExplicitArcs) {
            out.truncated = true;
            break;
        }
        auto wp = geo.window_pair(g);
        Real s = std::max(wp[0], wp[2]);
        Real e = std::min(wp[1], wp[3]);
        out.arcs.emplace_back(s.frac(), s.frac() + (e - s));
        ++emitted;
    }
    if (!out.arcs.empty() || out.truncated) {
        out.kind = LineRectIntersection::Kind::Arc;
        return out;
    }
    collect_touch_points(line, geo, out);
    out.kind = out.points.empty() ? LineRectIntersection::Kind::Empty
                                  : LineRectIntersection::Kind::FinitePoints;
    return out;
}

TorusAnswer orbit_hits(const Real& alpha, const Real& beta, const TorusPoint& start,
                       const Rectangle& rect, long long from_index, long long scan_budget) {
    if (scan_budget <= 0) scan_budget = Config::scan_budget();
    std::optional<std::array<mpz_class, 3>> dep;
    if (alpha.classify().kind == AlgebraicClass::Kind::Quadratic &&
        beta.classify().kind == AlgebraicClass::Kind::Quadratic) {
        dep = rational_dependence(alpha, beta);
    }
    TorusPoint s0{start.x.frac(), start.y.frac()};
    if (!dep) {
        // Orbit dense in the torus: any nonempty rectangle is hit.
        if (rect.empty_interior()) {
            return {TorusAnswer::Verdict::NoHit, TorusAnswer::Case::Dense, std::nullopt,
                    "rectangle has empty interior"};
        }
        return scan_for_witness(alpha, beta, s0, rect, from_index, scan_budget,
                                TorusAnswer::Case::Dense);
    }
    LineSpec line = line_closure(alpha, beta, s0);
    LineRectIntersection isect;
    try {
        isect = classify_line_rect(line, rect);
    } catch (const PrecisionExhausted&) {
        return {TorusAnswer::Verdict::BoundaryIndeterminate, TorusAnswer::Case::Line,
                std::nullopt, "line/rectangle geometry unresolved at the precision cap"};
    }
    switch (isect.kind) {
        case LineRectIntersection::Kind::Empty:
            return {TorusAnswer::Verdict::NoHit, TorusAnswer::Case::Line, std::nullopt,
                    "line misses the rectangle"};
        case LineRectIntersection::Kind::Arc:
            return scan_for_witness(alpha, beta, s0, rect, from_index, scan_budget,
                                    TorusAnswer::Case::Line);
        case LineRectIntersection::Kind::FinitePoints: {
            Real step = line_step_param(line, alpha, beta);
            std::optional<long long> best;
            for (const auto& [t, pt] : isect.points) {
                auto res = solve_rotation_hit(step, t, from_index);
                if (!res.supported) {
                    return {TorusAnswer::Verdict::BoundaryIndeterminate, TorusAnswer::Case::Line,
                            std::nullopt,
                            "isolated boundary point outside supported radical fields"};
                }
                if (res.index && (!best || *res.index < *best)) best = res.index;
            }
            if (best) {
                return {TorusAnswer::Verdict::Hit, TorusAnswer::Case::Line, best,
                        "isolated boundary point on the orbit"};
            }
            return {TorusAnswer::Verdict::NoHit, TorusAnswer::Case::Line, std::nullopt,
                    "line meets the rectangle only in isolated points the orbit avoids"};
        }
    }
    return {TorusAnswer::Verdict::NoHit, TorusAnswer::Case::Line, std::nullopt, ""};
}

TorusAnswer orbit_hits(const Tuple4& t, const Rectangle& rect, long long from_index,
                       long long scan_budget) {
    return orbit_hits(t.alpha, t.beta, TorusPoint{t.gamma.frac(), t.delta.frac()}, rect,
                      from_index, scan_budget);
}

}  // namespace bg
