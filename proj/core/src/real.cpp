#include "bg/real.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "bg/errors.hpp"
#include "tower.hpp"

namespace bg {

namespace {

std::atomic<long> g_precision_bits{4096};
std::atomic<long long> g_scan_budget{10000000};

}  // namespace

long Config::precision_bits() { return g_precision_bits.load(); }
void Config::set_precision_bits(long bits) { g_precision_bits.store(bits); }
long long Config::scan_budget() { return g_scan_budget.load(); }
void Config::set_scan_budget(long long budget) { g_scan_budget.store(budget); }

namespace detail {

namespace {

// Round a rational outward onto the 2^-bits dyadic grid.
mpq_class dyadic_floor(const mpq_class& x, long bits) {
    mpz_class num = x.get_num() << bits;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    mpq_class r(q);
    r /= mpq_class(mpz_class(1) << bits);
    return r;
}

mpq_class dyadic_ceil(const mpq_class& x, long bits) {
    mpz_class num = x.get_num() << bits;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    mpq_class r(q);
    r /= mpq_class(mpz_class(1) << bits);
    return r;
}

struct QInterval {
    mpq_class lo, hi;
    mpq_class width() const { return hi - lo; }
};

QInterval round_out(const QInterval& iv, long bits) {
    return {dyadic_floor(iv.lo, bits), dyadic_ceil(iv.hi, bits)};
}

// [floor(sqrt(x)), ...] bounds for a non-negative rational at 2^-bits.
mpq_class sqrt_lower(const mpq_class& x, long bits) {
    if (x <= 0) return mpq_class(0);
    mpz_class scaled = (x.get_num() << (2 * bits)) / x.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpq_class r(root);
    r /= mpq_class(mpz_class(1) << bits);
    return r;
}

mpq_class sqrt_upper(const mpq_class& x, long bits) {
    if (x <= 0) return mpq_class(0);
    mpz_class scaled;
    mpz_cdiv_q(scaled.get_mpz_t(), mpz_class(x.get_num() << (2 * bits)).get_mpz_t(),
               x.get_den().get_mpz_t());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    root += 1;
    mpq_class r(root);
    r /= mpq_class(mpz_class(1) << bits);
    return r;
}

}  // namespace

struct Node {
    enum class Op { Lit, Add, Sub, Mul, Div, Sqrt };

    Op op;
    mpq_class lit;
    NodePtr a, b;

    mutable std::mutex mu;
    mutable bool tower_done = false;
    mutable std::optional<Tower> tower;
    mutable long enc_bits = -1;
    mutable QInterval enc;

    explicit Node(mpq_class v) : op(Op::Lit), lit(std::move(v)) {}
    Node(Op o, NodePtr x, NodePtr y) : op(o), a(std::move(x)), b(std::move(y)) {}

    const std::optional<Tower>& tower_form() const {
        {
            std::lock_guard<std::mutex> lk(mu);
            if (tower_done) return tower;
        }
        std::optional<Tower> t = compute_tower();
        std::lock_guard<std::mutex> lk(mu);
        if (!tower_done) {
            tower = std::move(t);
            tower_done = true;
        }
        return tower;
    }

    std::optional<Tower> compute_tower() const {
        switch (op) {
            case Op::Lit:
                return Tower::from_rational(lit);
            case Op::Add: {
                auto ta = a->tower_form(), tb = b->tower_form();
                if (ta && tb) return *ta + *tb;
                return std::nullopt;
            }
            case Op::Sub: {
                auto ta = a->tower_form(), tb = b->tower_form();
                if (ta && tb) return *ta - *tb;
                return std::nullopt;
            }
            case Op::Mul: {
                auto ta = a->tower_form(), tb = b->tower_form();
                if (ta && tb) return Tower::mul(*ta, *tb);
                return std::nullopt;
            }
            case Op::Div: {
                auto ta = a->tower_form(), tb = b->tower_form();
                if (ta && tb) {
                    auto inv = Tower::inverse(*tb);
                    if (inv) return Tower::mul(*ta, *inv);
                }
                return std::nullopt;
            }
            case Op::Sqrt: {
                auto ta = a->tower_form();
                if (ta) return Tower::sqrt_of(*ta);
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    // Enclosure on the 2^-bits grid; nullopt when a division's denominator
    // still straddles zero at this precision (caller refines).
    std::optional<QInterval> eval(long bits) const {
        {
            std::lock_guard<std::mutex> lk(mu);
            if (enc_bits >= bits) return enc;
        }
        std::optional<QInterval> out = eval_fresh(bits);
        if (!out) return std::nullopt;
        std::lock_guard<std::mutex> lk(mu);
        if (enc_bits >= 0) {
            // monotone: never widen a previously published enclosure
            if (out->lo < enc.lo) out->lo = enc.lo;
            if (out->hi > enc.hi) out->hi = enc.hi;
        }
        if (bits >= enc_bits) {
            enc = *out;
            enc_bits = bits;
        }
        return out;
    }

    std::optional<QInterval> eval_fresh(long bits) const {
        const long kb = bits + 4;
        switch (op) {
            case Op::Lit:
                return round_out({lit, lit}, bits);
            case Op::Add: {
                auto ia = a->eval(kb), ib = b->eval(kb);
                if (!ia || !ib) return std::nullopt;
                return round_out({ia->lo + ib->lo, ia->hi + ib->hi}, bits);
            }
            case Op::Sub: {
                auto ia = a->eval(kb), ib = b->eval(kb);
                if (!ia || !ib) return std::nullopt;
                return round_out({ia->lo - ib->hi, ia->hi - ib->lo}, bits);
            }
            case Op::Mul: {
                auto ia = a->eval(kb), ib = b->eval(kb);
                if (!ia || !ib) return std::nullopt;
                mpq_class c1 = ia->lo * ib->lo, c2 = ia->lo * ib->hi;
                mpq_class c3 = ia->hi * ib->lo, c4 = ia->hi * ib->hi;
                mpq_class lo = std::min(std::min(c1, c2), std::min(c3, c4));
                mpq_class hi = std::max(std::max(c1, c2), std::max(c3, c4));
                return round_out({lo, hi}, bits);
            }
            case Op::Div: {
                auto ia = a->eval(kb), ib = b->eval(kb);
                if (!ia || !ib) return std::nullopt;
                if (ib->lo <= 0 && ib->hi >= 0) {
                    auto tb = b->tower_form();
                    if (tb && tb->is_zero()) throw DomainError("division by zero");
                    return std::nullopt;  // denominator unresolved at this precision
                }
                mpq_class c1 = ia->lo / ib->lo, c2 = ia->lo / ib->hi;
                mpq_class c3 = ia->hi / ib->lo, c4 = ia->hi / ib->hi;
                mpq_class lo = std::min(std::min(c1, c2), std::min(c3, c4));
                mpq_class hi = std::max(std::max(c1, c2), std::max(c3, c4));
                return round_out({lo, hi}, bits);
            }
            case Op::Sqrt: {
                auto ia = a->eval(kb);
                if (!ia) return std::nullopt;
                if (ia->hi < 0) throw DomainError("square root of a negative value");
                mpq_class lo = ia->lo < 0 ? mpq_class(0) : ia->lo;
                return QInterval{sqrt_lower(lo, bits), sqrt_upper(ia->hi, bits)};
            }
        }
        return std::nullopt;
    }
};

namespace {

NodePtr make_lit(mpq_class v) {
    v.canonicalize();
    return std::make_shared<Node>(std::move(v));
}

NodePtr make_op(Node::Op op, NodePtr a, NodePtr b) {
    return std::make_shared<Node>(op, std::move(a), std::move(b));
}

// Refine until the enclosure width drops to 2^-bits, doubling the working
// precision; honest failure past the configured cap.
QInterval refine_to(const Node& n, long bits) {
    const long cap = Config::precision_bits();
    mpq_class target(1);
    target /= mpq_class(mpz_class(1) << bits);
    for (long k = std::max<long>(bits + 2, 16);; k *= 2) {
        if (k > std::max(cap, bits + 2)) {
            throw PrecisionExhausted("enclosure did not reach 2^-" + std::to_string(bits) +
                                     " within " + std::to_string(cap) + " bits");
        }
        auto iv = n.eval(k);
        if (iv && iv->width() <= target) return *iv;
    }
}

}  // namespace

}  // namespace detail

using detail::Node;
using detail::NodePtr;
using detail::Tower;

Real::Real() : n_(detail::make_lit(mpq_class(0))) {}
Real::Real(long v) : n_(detail::make_lit(mpq_class(v))) {}
Real::Real(const mpz_class& v) : n_(detail::make_lit(mpq_class(v))) {}
Real::Real(const mpq_class& v) : n_(detail::make_lit(v)) {}

Real Real::sqrt(const Real& x) {
    // Cheap eager check; deep negativity surfaces lazily during refinement.
    auto t = x.n_->tower_form();
    if (t && t->is_rational() && t->rational_part() < 0) {
        throw DomainError("square root of a negative value");
    }
    return Real(detail::make_op(Node::Op::Sqrt, x.n_, nullptr));
}

Real operator+(const Real& x, const Real& y) {
    return Real(detail::make_op(Node::Op::Add, x.n_, y.n_));
}
Real operator-(const Real& x, const Real& y) {
    return Real(detail::make_op(Node::Op::Sub, x.n_, y.n_));
}
Real operator*(const Real& x, const Real& y) {
    return Real(detail::make_op(Node::Op::Mul, x.n_, y.n_));
}
Real operator/(const Real& x, const Real& y) {
    auto t = y.n_->tower_form();
    if (t && t->is_zero()) throw DomainError("division by zero");
    return Real(detail::make_op(Node::Op::Div, x.n_, y.n_));
}
Real Real::operator-() const { return Real(0) - *this; }

int Real::sign() const {
    const auto& t = n_->tower_form();
    if (t) {
        if (t->is_zero()) return 0;
        if (t->is_rational()) return sgn(t->rational_part());
    }
    // Nonzero (or unknown) value: refinement must separate it from zero.
    const long cap = Config::precision_bits();
    for (long k = 16;; k *= 2) {
        if (k > cap) {
            if (t) throw PrecisionExhausted("nonzero value not separated from 0 within cap");
            throw PrecisionExhausted(
                "sign undecided at the precision cap and no radical normal form exists");
        }
        auto iv = n_->eval(k);
        if (iv) {
            if (iv->lo > 0) return 1;
            if (iv->hi < 0) return -1;
        }
    }
}

bool Real::is_rational() const {
    const auto& t = n_->tower_form();
    return t && t->is_rational();
}

bool Real::is_integer() const {
    const auto& t = n_->tower_form();
    if (!t || !t->is_rational()) return false;
    return t->rational_part().get_den() == 1;
}

std::optional<mpq_class> Real::rational_value() const {
    const auto& t = n_->tower_form();
    if (t && t->is_rational()) return t->rational_part();
    return std::nullopt;
}

std::optional<std::map<unsigned long, mpq_class>> Real::radical_coordinates() const {
    const auto& t = n_->tower_form();
    if (!t) return std::nullopt;
    return t->c;
}

mpz_class Real::floor() const {
    const auto& t = n_->tower_form();
    if (t && t->is_rational()) {
        const mpq_class& q = t->rational_part();
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        return f;
    }
    if (t) {
        // Irrational with exact coordinates: narrow to at most two candidates,
        // then settle by an exact comparison.
        auto iv = detail::refine_to(*n_, 2);
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), iv.lo.get_num().get_mpz_t(), iv.lo.get_den().get_mpz_t());
        // floor is k or k+1; x >= k+1 iff sign(x - (k+1)) >= 0
        Real diff = *this - Real(mpz_class(k + 1));
        return diff.sign() >= 0 ? k + 1 : k;
    }
    const long cap = Config::precision_bits();
    for (long k = 16;; k *= 2) {
        if (k > cap) throw PrecisionExhausted("floor straddles an integer at the precision cap");
        auto iv = n_->eval(k);
        if (iv) {
            mpz_class flo, fhi;
            mpz_fdiv_q(flo.get_mpz_t(), iv->lo.get_num().get_mpz_t(), iv->lo.get_den().get_mpz_t());
            mpz_fdiv_q(fhi.get_mpz_t(), iv->hi.get_num().get_mpz_t(), iv->hi.get_den().get_mpz_t());
            if (flo == fhi) return flo;
        }
    }
}

Real Real::frac() const { return *this - Real(floor()); }

AlgebraicClass Real::classify() const {
    const auto& t = n_->tower_form();
    AlgebraicClass out{AlgebraicClass::Kind::Other, std::nullopt, std::nullopt};
    if (!t) return out;
    if (t->is_rational()) {
        out.kind = AlgebraicClass::Kind::Rational;
        out.rational = t->rational_part();
        return out;
    }
    if (t->radical_count() == 1) {
        QuadraticForm qf;
        qf.a = t->rational_part();
        for (const auto& [rad, v] : t->c) {
            if (rad != 1) {
                qf.b = v;
                qf.d = rad;
            }
        }
        out.kind = AlgebraicClass::Kind::Quadratic;
        out.quadratic = std::move(qf);
    }
    return out;
}

std::array<mpz_class, 3> QuadraticForm::min_poly() const {
    // x = a + b sqrt(d)  =>  x^2 - 2a x + (a^2 - b^2 d) = 0, cleared to
    // primitive integers with positive leading coefficient.
    mpq_class B = -2 * a;
    mpq_class C = a * a - b * b * mpq_class(d);
    mpz_class den = 1;
    mpz_lcm(den.get_mpz_t(), B.get_den().get_mpz_t(), C.get_den().get_mpz_t());
    mpz_class A2 = den;
    mpz_class B2 = mpz_class(B.get_num() * (den / B.get_den()));
    mpz_class C2 = mpz_class(C.get_num() * (den / C.get_den()));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A2.get_mpz_t(), B2.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C2.get_mpz_t());
    return {A2 / g, B2 / g, C2 / g};
}

std::pair<mpq_class, mpq_class> Real::enclosure(long bits) const {
    const long cap = Config::precision_bits();
    for (long k = std::max<long>(bits, 16);; k *= 2) {
        if (k > std::max(cap, bits)) {
            throw PrecisionExhausted("enclosure blocked by an unresolved denominator");
        }
        auto iv = n_->eval(k);
        if (iv) return {iv->lo, iv->hi};
    }
}

std::pair<mpq_class, mpq_class> Real::tight_enclosure(long bits) const {
    auto iv = detail::refine_to(*n_, bits);
    return {iv.lo, iv.hi};
}

double Real::approx() const {
    auto [lo, hi] = tight_enclosure(60);
    return (lo.get_d() + hi.get_d()) / 2;
}

std::string Real::decimal(int digits) const {
    mpz_class pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    mpz_class scaled = (*this * Real(pow10)).floor();
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string s = mag.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

namespace {

std::string coeff_str(const mpq_class& q) {
    return q.get_str();
}

std::string tower_str(const Tower& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, v] : t.c) {
        mpq_class mag = v < 0 ? mpq_class(-v) : v;
        std::string term;
        if (rad == 1) {
            term = coeff_str(mag);
        } else if (mag == 1) {
            term = "sqrt(" + std::to_string(rad) + ")";
        } else {
            term = coeff_str(mag) + "*sqrt(" + std::to_string(rad) + ")";
        }
        if (first) {
            out += (v < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (v < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string node_str(const Node& n) {
    switch (n.op) {
        case Node::Op::Lit:
            return n.lit.get_str();
        case Node::Op::Add:
            return "(" + node_str(*n.a) + " + " + node_str(*n.b) + ")";
        case Node::Op::Sub:
            return "(" + node_str(*n.a) + " - " + node_str(*n.b) + ")";
        case Node::Op::Mul:
            return "(" + node_str(*n.a) + "*" + node_str(*n.b) + ")";
        case Node::Op::Div:
            return "(" + node_str(*n.a) + "/" + node_str(*n.b) + ")";
        case Node::Op::Sqrt:
            return "sqrt(" + node_str(*n.a) + ")";
    }
    return "?";
}

}  // namespace

std::string Real::str() const {
    const auto& t = n_->tower_form();
    if (t) return tower_str(*t);
    return node_str(*n_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Real parse_expr() {
        Real v = parse_term();
        for (;;) {
            if (eat('+')) {
                v = v + parse_term();
            } else if (eat('-')) {
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    Real parse_term() {
        Real v = parse_factor();
        for (;;) {
            if (eat('*')) {
                v = v * parse_factor();
            } else if (eat('/')) {
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    Real parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos;
            Real v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (text.substr(pos, 5) == "sqrt(") {
            pos += 5;
            Real v = parse_expr();
            if (!eat(')')) fail("expected ')' after sqrt argument");
            return Real::sqrt(v);
        }
        if (std::isdigit((unsigned char)c) || c == '.') return parse_rational();
        fail("expected a number, 'sqrt(', '(' or '-'");
    }

    Real parse_rational() {
        std::size_t start = pos;
        std::string digits;
        long frac_digits = -1;
        while (pos < text.size() &&
               (std::isdigit((unsigned char)text[pos]) || text[pos] == '.')) {
            if (text[pos] == '.') {
                if (frac_digits >= 0) fail("second '.' in number");
                frac_digits = 0;
            } else {
                digits += text[pos];
                if (frac_digits >= 0) ++frac_digits;
            }
            ++pos;
        }
        if (digits.empty()) {
            pos = start;
            fail("malformed number");
        }
        mpq_class v{mpz_class(digits, 10)};  // explicit base: leading zeros are not octal
        if (frac_digits > 0) {
            mpz_class den = 1;
            for (long i = 0; i < frac_digits; ++i) den *= 10;
            v /= mpq_class(den);
        }
        return Real(v);
    }
};

}  // namespace

Real parse_real(std::string_view text) {
    Parser p{text};
    Real v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

// ---------------------------------------------------------------------------
// Rational dependence

std::optional<std::array<mpz_class, 3>> rational_dependence(const Real& alpha, const Real& beta) {
    AlgebraicClass ca = alpha.classify();
    AlgebraicClass cb = beta.classify();
    if (ca.kind == AlgebraicClass::Kind::Rational || cb.kind == AlgebraicClass::Kind::Rational) {
        throw DomainError("rational_dependence requires irrational arguments");
    }
    if (ca.kind != AlgebraicClass::Kind::Quadratic || cb.kind != AlgebraicClass::Kind::Quadratic) {
        return std::nullopt;  // degree > 2: independent of each other and 1
    }
    if (ca.quadratic->d != cb.quadratic->d) return std::nullopt;
    // p*b_alpha + q*b_beta = 0, smallest integers, then clear r to integers.
    const mpq_class& b1 = ca.quadratic->b;
    const mpq_class& b2 = cb.quadratic->b;
    mpz_class p = b2.get_num() * b1.get_den();
    mpz_class q = -(b1.get_num() * b2.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    p /= g;
    q /= g;
    mpq_class r = mpq_class(p) * ca.quadratic->a + mpq_class(q) * cb.quadratic->a;
    mpz_class den = r.get_den();
    p *= den;
    q *= den;
    mpz_class rn = r.get_num();
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rn.get_mpz_t());
    p /= g;
    q /= g;
    rn /= g;
    if (p < 0) {
        p = -p;
        q = -q;
        rn = -rn;
    }
    // The witness must satisfy the relation exactly.
    Real check = Real(p) * alpha + Real(q) * beta - Real(rn);
    if (!check.is_zero()) return std::nullopt;
    return std::array<mpz_class, 3>{p, q, rn};
}

}  // namespace bg
