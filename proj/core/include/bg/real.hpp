#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bg {

namespace detail {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
}  // namespace detail

inline mpz_class mpz_ll(long long v) { return mpz_class(static_cast<long>(v)); }

// Process-wide knobs. Defaults match the documented CLI defaults; every
// value below 256 bits of refinement suffices for the shipped fixtures.
struct Config {
    static long precision_bits();
    static void set_precision_bits(long bits);
    static long long scan_budget();
    static void set_scan_budget(long long budget);
};

// Normal form a + b*sqrt(d) with a,b rational, b != 0, d square-free >= 2.
struct QuadraticForm {
    mpq_class a;
    mpq_class b;
    unsigned long d;
    // Primitive integer polynomial A x^2 + B x + C with A > 0 vanishing at the value.
    std::array<mpz_class, 3> min_poly() const;
};

struct AlgebraicClass {
    enum class Kind { Rational, Quadratic, Other };
    Kind kind;
    std::optional<mpq_class> rational;      // set when kind == Rational
    std::optional<QuadraticForm> quadratic; // set when kind == Quadratic
};

// Exact real: an immutable expression DAG over {rational, +, -, *, /, sqrt}
// with a cached, monotonically shrinking dyadic enclosure and, when the
// radicals normalize, an exact coordinate form over a square-free radical
// basis. Sign, floor and comparisons are exact; they throw
// PrecisionExhausted only when the value has no normal form and refinement
// reaches the configured cap.
class Real {
public:
    Real();  // zero
    Real(long v);
    Real(const mpz_class& v);
    explicit Real(const mpq_class& v);

    static Real sqrt(const Real& x);

    friend Real operator+(const Real& x, const Real& y);
    friend Real operator-(const Real& x, const Real& y);
    friend Real operator*(const Real& x, const Real& y);
    friend Real operator/(const Real& x, const Real& y);
    Real operator-() const;

    // Exact queries.
    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_rational() const;
    bool is_integer() const;
    std::optional<mpq_class> rational_value() const;
    mpz_class floor() const;
    Real frac() const;  // *this - floor(), in [0,1)

    bool operator<(const Real& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Real& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Real& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Real& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const Real& o) const { return (*this - o).sign() == 0; }
    bool operator!=(const Real& o) const { return (*this - o).sign() != 0; }

    AlgebraicClass classify() const;

    // Exact coordinates over a square-free radical basis when the DAG
    // normalizes: radicand -> rational coefficient, key 1 holding the
    // rational part (value = sum coeff[r]*sqrt(r)). nullopt for values
    // outside any supported radical field.
    std::optional<std::map<unsigned long, mpq_class>> radical_coordinates() const;

    // Enclosure [lo, hi] with dyadic endpoints on the 2^-bits grid; contains
    // the exact value and never widens across calls.
    std::pair<mpq_class, mpq_class> enclosure(long bits) const;
    // Enclosure refined until hi - lo <= 2^-bits (throws PrecisionExhausted
    // past the cap).
    std::pair<mpq_class, mpq_class> tight_enclosure(long bits) const;

    // Canonical serialization: radical normal form when available
    // ("399/100 + 1/2*sqrt(5)"), otherwise the expression structure.
    std::string str() const;
    // Deterministic decimal approximation with the given digits, derived
    // from exact floors (round toward -inf).
    std::string decimal(int digits) const;
    double approx() const;  // convenience, not used in any decision

    const detail::NodePtr& node() const { return n_; }

private:
    explicit Real(detail::NodePtr n) : n_(std::move(n)) {}
    detail::NodePtr n_;
    friend Real parse_real(std::string_view);
    friend class RealBuilder;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := rational | 'sqrt(' expr ')' | '(' expr ')' | '-' factor
// Rationals in decimal ("3.99") or fraction ("399/100") form; decimals are
// exact rationals. Throws ParseError with position; DomainError for sqrt of
// a provably negative subexpression or division by exact zero.
Real parse_real(std::string_view text);

// Primitive integer witness (p, q, r) with p*alpha + q*beta = r and p > 0,
// gcd(p, q, r) = 1, when alpha and beta lie in one common quadratic field;
// nullopt otherwise (values of higher degree are rationally independent of
// each other and 1). Both arguments must be irrational.
std::optional<std::array<mpz_class, 3>> rational_dependence(const Real& alpha, const Real& beta);

}  // namespace bg
