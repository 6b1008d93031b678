#include "bg/sturmian.hpp"

#include <algorithm>
#include <limits>

#include "bg/errors.hpp"

namespace bg {

CircleInterval::CircleInterval(Real lo, Real len) : lo_(lo.frac()), len_(std::move(len)) {
    int s = len_.sign();
    if (s < 0 || (len_ - Real(1)).sign() > 0) {
        throw DomainError("circle interval length outside [0,1]");
    }
    if (s == 0) lo_ = Real(0);  // canonical empty
}

CircleInterval CircleInterval::from_bounds(const Real& lo, const Real& hi) {
    Real diff = hi - lo;
    if (diff == Real(1)) return full();
    return CircleInterval(lo, diff.frac());
}

CircleInterval CircleInterval::full() { return CircleInterval(Real(0), Real(1)); }

bool CircleInterval::is_full() const { return (len_ - Real(1)).is_zero(); }

bool CircleInterval::contains(const Real& x) const {
    if (empty()) return false;
    if (is_full()) return true;
    return (x - lo_).frac() < len_;
}

CircleInterval CircleInterval::shifted(const Real& t) const {
    if (empty()) return *this;
    return CircleInterval(lo_ + t, len_);
}

std::vector<CircleInterval> CircleInterval::intersect(const CircleInterval& a,
                                                      const CircleInterval& b) {
    if (a.empty() || b.empty()) return {};
    if (a.is_full()) return {b};
    if (b.is_full()) return {a};
    // Work in a's frame: a covers [0, la); b starts at s and may wrap.
    Real s = (b.lo() - a.lo()).frac();
    const Real& la = a.length();
    const Real& lb = b.length();
    std::vector<CircleInterval> out;
    auto push = [&](const Real& from, const Real& to) {
        if (from < to) out.emplace_back(a.lo() + from, to - from);
    };
    Real end = s + lb;
    if (end <= Real(1)) {
        // single piece [s, end)
        push(std::min(s, la), std::min(end, la));
    } else {
        // wraps: [s,1) and [0, end-1)
        push(std::min(s, la), la);
        push(Real(0), std::min(end - Real(1), la));
    }
    return out;
}

long mech_letter(const Real& lambda, const Real& rho, long long n) {
    Real hi = Real(mpz_ll(n + 1)) * lambda + rho;
    Real lo = Real(mpz_ll(n)) * lambda + rho;
    mpz_class diff = hi.floor() - lo.floor();
    return (long)diff.get_si();
}

Real rotate(const Real& lambda, const Real& x) { return (x + lambda).frac(); }

TorusPoint rotate2(const Real& alpha, const Real& beta, const TorusPoint& p) {
    return {rotate(alpha, p.x), rotate(beta, p.y)};
}

CircleInterval letter_interval(const Real& lambda, long letter) {
    mpz_class fl = lambda.floor();
    Real cut = Real(1) - lambda.frac();  // 1 - {lambda}
    if (mpz_class(letter) == fl) return CircleInterval(Real(0), cut);
    if (mpz_class(letter) == fl + 1) return CircleInterval(cut, lambda.frac());
    throw DomainError("letter must be floor(lambda) or floor(lambda)+1");
}

CircleInterval factor_interval(std::span<const long> v, const Real& lambda) {
    if (v.empty()) throw DomainError("factor must be nonempty");
    CircleInterval acc = letter_interval(lambda, v[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (acc.empty()) return acc;
        CircleInterval pre =
            letter_interval(lambda, v[k]).shifted(-(Real(mpz_ll((long long)k)) * lambda));
        auto pieces = CircleInterval::intersect(acc, pre);
        if (pieces.empty()) return CircleInterval();
        if (pieces.size() > 1) {
            // cannot happen for rotation codings: the refinement of the
            // two-arc partition stays an arc
            throw DomainError("factor interval split into two arcs");
        }
        acc = pieces[0];
    }
    return acc;
}

CircleInterval heavy_light_interval(const Real& lambda, long long len, Weight w) {
    if (len < 1) throw DomainError("factor length must be >= 1");
    Real f = (Real(mpz_ll(len)) * lambda).frac();  // {len*lambda}
    if (w == Weight::Heavy) return CircleInterval(Real(1) - f, f);
    return CircleInterval(Real(0), Real(1) - f);
}

long long heavy_letter_count(const Real& lambda, long long m) {
    if (m == 0) return 0;
    Real prod = Real(mpz_ll(m)) * lambda.frac();
    mpz_class fl = prod.floor();
    // ceil: {lambda} irrational makes m*{lambda} non-integral for m >= 1,
    // but handle the rational case anyway
    Real rem = prod - Real(fl);
    long long c = (long long)fl.get_si();
    return rem.is_zero() ? c : c + 1;
}

bool is_balanced(std::span<const long> segment, long long window) {
    if (segment.empty()) return true;
    long big = *std::max_element(segment.begin(), segment.end());
    std::vector<int> is_big(segment.size());
    for (std::size_t i = 0; i < segment.size(); ++i) is_big[i] = segment[i] == big ? 1 : 0;
    // prefix sums of the larger letter
    std::vector<long long> pre(segment.size() + 1, 0);
    for (std::size_t i = 0; i < segment.size(); ++i) pre[i + 1] = pre[i] + is_big[i];
    for (long long len = 1; len <= window && len <= (long long)segment.size(); ++len) {
        long long mn = std::numeric_limits<long long>::max(), mx = -1;
        for (std::size_t i = 0; i + len <= segment.size(); ++i) {
            long long cnt = pre[i + len] - pre[i];
            mn = std::min(mn, cnt);
            mx = std::max(mx, cnt);
        }
        if (mx - mn > 1) return false;
    }
    return true;
}

}  // namespace bg
