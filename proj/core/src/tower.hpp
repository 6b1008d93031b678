#pragma once

// Exact arithmetic in Q(sqrt(d1), ..., sqrt(dk)): elements are finite sums
// coeff[r] * sqrt(r) over square-free radicands r (key 1 = rational part).
// Internal to the Real implementation; not installed.

#include <gmpxx.h>

#include <map>
#include <optional>

namespace bg::detail {

using RadicalMap = std::map<unsigned long, mpq_class>;

struct Tower {
    RadicalMap c;  // no zero coefficients stored

    static Tower from_rational(const mpq_class& q);

    bool is_zero() const { return c.empty(); }
    bool is_rational() const { return c.empty() || (c.size() == 1 && c.begin()->first == 1); }
    mpq_class rational_part() const;
    // Number of genuinely irrational basis elements.
    std::size_t radical_count() const { return c.size() - (c.count(1) ? 1 : 0); }

    Tower operator+(const Tower& o) const;
    Tower operator-(const Tower& o) const;
    Tower negate() const;
    // Multiplication / inversion give nullopt when a combined radicand
    // would overflow the supported range.
    static std::optional<Tower> mul(const Tower& a, const Tower& b);
    static std::optional<Tower> inverse(const Tower& a);  // nullopt also for zero
    // sqrt of a rational tower value (>= 0); nullopt when the operand is
    // irrational or the radicand cannot be reduced.
    static std::optional<Tower> sqrt_of(const Tower& a);
};

// Largest-square extraction: n = square * kernel. Returns false when n is
// too large to reduce reliably.
bool squarefree_split(const mpz_class& n, mpz_class& square_root, unsigned long& kernel);

}  // namespace bg::detail
