#pragma once

#include <span>
#include <vector>

#include "bg/real.hpp"

namespace bg {

// Point of the torus with exact coordinates in [0,1).
struct TorusPoint {
    Real x, y;
};

// Half-open arc [lo, lo+len) on the circle R/Z, stored as start + length so
// that wrap-around needs no special casing: x is a member iff {x-lo} < len.
// len = 0 is the empty arc, len = 1 the full circle.
class CircleInterval {
public:
    CircleInterval() : lo_(0), len_(0) {}
    CircleInterval(Real lo, Real len);
    // [lo, hi) with endpoints taken mod 1; lo == hi (mod 1) gives the empty
    // arc unless hi - lo is exactly 1 (the full circle).
    static CircleInterval from_bounds(const Real& lo, const Real& hi);
    static CircleInterval full();

    bool empty() const { return len_.is_zero(); }
    bool is_full() const;
    const Real& lo() const { return lo_; }
    const Real& length() const { return len_; }
    Real hi() const { return (lo_ + len_).frac(); }

    bool contains(const Real& x) const;  // exact membership
    CircleInterval shifted(const Real& t) const;

    // Intersection of two arcs: zero, one or two arcs.
    static std::vector<CircleInterval> intersect(const CircleInterval& a, const CircleInterval& b);

private:
    Real lo_, len_;
};

// s_{lambda,rho}(n) = floor((n+1)*lambda + rho) - floor(n*lambda + rho);
// takes exactly the values floor(lambda) and floor(lambda)+1.
long mech_letter(const Real& lambda, const Real& rho, long long n);

// Rotation by lambda: x -> {x + lambda}.
Real rotate(const Real& lambda, const Real& x);
TorusPoint rotate2(const Real& alpha, const Real& beta, const TorusPoint& p);

// Coding intervals of the rotation: the letter floor(lambda) is read on
// [0, 1-{lambda}), the letter floor(lambda)+1 on [1-{lambda}, 1).
CircleInterval letter_interval(const Real& lambda, long letter);

// I_v = I_{v0} ∩ R^-1(I_{v1}) ∩ ... ∩ R^-m(I_{vm}): v occurs at position i
// in s_{lambda,rho} iff R^i(rho) lies in the returned arc (empty when v is
// not a factor of any such word).
CircleInterval factor_interval(std::span<const long> v, const Real& lambda);

enum class Weight { Heavy, Light };

// Heavy factors of length len start on [1-{len*lambda}, 1), light ones on
// [0, 1-{len*lambda}); the two arcs partition the circle.
CircleInterval heavy_light_interval(const Real& lambda, long long len, Weight w);

// ceil(m*{lambda}): the number of large letters in a heavy factor of length m.
long long heavy_letter_count(const Real& lambda, long long m);

// Balance over a 2-letter alphabet: every pair of equal-length factors (up
// to the window) differs by at most 1 in each letter count.
bool is_balanced(std::span<const long> segment, long long window);

}  // namespace bg
