#include "bg/scan.hpp"

#include "bg/errors.hpp"

namespace bg {

namespace {

// floor(q * 2^128) for q in [0,1]; clamps 1.0 to 2^128-1.
fix128 fix_from_mpq(const mpq_class& q) {
    if (q <= 0) return 0;
    mpz_class scaled = (q.get_num() << 128) / q.get_den();
    if (mpz_sizeinbase(scaled.get_mpz_t(), 2) > 128) return ~(fix128)0;
    fix128 out = 0;
    mpz_class rem = scaled;
    for (int limb = 0; limb < 2; ++limb) {
        mpz_class low = rem & mpz_class(0xffffffffffffffffUL);
        out |= (fix128)low.get_ui() << (64 * limb);
        rem >>= 64;
    }
    return out;
}

fix128 fix_of_unit_value(const Real& x) {
    auto [lo, hi] = x.tight_enclosure(140);
    if (lo < 0) lo = 0;
    return fix_from_mpq(lo);
}

}  // namespace

fix128 to_fix128(const Real& x_in_unit) { return fix_of_unit_value(x_in_unit); }

RotationScanner::RotationScanner(const Real& theta, const Real& x0)
    : theta_(theta), x0_(x0) {
    x0fix_ = fix_of_unit_value(x0.frac());
    step_ = fix_of_unit_value(theta.frac());
    x_ = x0fix_;
}

void RotationScanner::seek(std::uint64_t i) {
    // mod-2^128 arithmetic agrees with i repeated additions
    x_ = x0fix_ + step_ * (fix128)i;
    i_ = i;
}

Real RotationScanner::exact_point() const {
    return (x0_ + Real(mpz_class((unsigned long)i_)) * theta_).frac();
}

FixArc FixArc::from(const Real& lo, const Real& len) {
    return {fix_of_unit_value(lo), fix_of_unit_value(len)};
}

Tri arc_member(fix128 x, fix128 err, const FixArc& arc) {
    // interval endpoints carry their own quantization slack
    fix128 m = err + 8;
    fix128 d = x - arc.lo;  // wraps: circle distance from lo
    if (d < m) return Tri::Uncertain;
    if (d >= arc.len) {
        // outside, unless within slack of either end
        if (d - arc.len < m) return Tri::Uncertain;
        if (~d < m) return Tri::Uncertain;  // d close to 2^128: just below lo
        return Tri::Out;
    }
    if (arc.len - d <= m) return Tri::Uncertain;
    return Tri::In;
}

}  // namespace bg
