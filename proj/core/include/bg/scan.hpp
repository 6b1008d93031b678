#pragma once

#include <cstdint>

#include "bg/real.hpp"

namespace bg {

// 128-bit fixed-point image of a circle value; 1.0 corresponds to 2^128.
using fix128 = unsigned __int128;

fix128 to_fix128(const Real& x_in_unit);  // x must lie in [0,1)

// Walks x_i = {x0 + i*theta} on the circle in 128-bit fixed point with a
// certified error bound, falling back to exact arithmetic only when a
// comparison lands inside the error margin. Wrap-around of the accumulator
// coincides with reduction mod 1, so stepping is a single addition.
class RotationScanner {
public:
    RotationScanner(const Real& theta, const Real& x0);

    void step() {
        x_ += step_;
        ++i_;
    }
    void seek(std::uint64_t i);
    std::uint64_t index() const { return i_; }
    fix128 position() const { return x_; }
    // error bound (in 2^-128 units) on |position - true value| at the current index
    fix128 margin() const { return (fix128)(2 * i_ + 16); }

    Real exact_point() const;  // frac(x0 + i*theta), exact

private:
    Real theta_, x0_;
    fix128 x0fix_, step_, x_;
    std::uint64_t i_ = 0;
};

// Half-open arc [lo, lo+len) in fixed point, with quantization slack folded
// into membership margins.
struct FixArc {
    fix128 lo;
    fix128 len;
    static FixArc from(const Real& lo, const Real& len);
};

enum class Tri { In, Out, Uncertain };

// Membership of a scanned point in a fixed-point arc; Uncertain whenever the
// verdict could be flipped by the accumulated error.
Tri arc_member(fix128 x, fix128 err, const FixArc& arc);

}  // namespace bg
