#include "tower.hpp"

#include <cstdlib>
#include <numeric>

namespace bg::detail {

namespace {

constexpr unsigned long kRadicandLimit = 1ul << 62;

void set_coeff(RadicalMap& m, unsigned long r, const mpq_class& v) {
    if (v == 0) {
        m.erase(r);
    } else {
        m[r] = v;
    }
}

void add_coeff(RadicalMap& m, unsigned long r, const mpq_class& v) {
    auto it = m.find(r);
    if (it == m.end()) {
        if (v != 0) m.emplace(r, v);
        return;
    }
    it->second += v;
    if (it->second == 0) m.erase(it);
}

}  // namespace

bool squarefree_split(const mpz_class& n, mpz_class& square_root, unsigned long& kernel) {
    if (n <= 0) return false;
    mpz_class rem = n;
    mpz_class sq = 1;
    unsigned long ker = 1;
    auto extract = [&](unsigned long p) {
        unsigned count = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) sq *= p;
        if (count & 1) {
            if (ker > kRadicandLimit / p) return false;
            ker *= p;
        }
        return true;
    };
    if (!extract(2)) return false;
    for (unsigned long p = 3; mpz_cmp_ui(rem.get_mpz_t(), p * p) >= 0 && p <= 1000000; p += 2) {
        if (!extract(p)) return false;
    }
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
            sq *= root;
        } else if (rem.fits_ulong_p()) {
            unsigned long r = rem.get_ui();
            if (ker > kRadicandLimit / r) return false;
            ker *= r;  // not fully factored past the trial bound; sound as an atomic radicand
        } else {
            return false;
        }
    }
    square_root = sq;
    kernel = ker;
    return true;
}

Tower Tower::from_rational(const mpq_class& q) {
    Tower t;
    set_coeff(t.c, 1, q);
    return t;
}

mpq_class Tower::rational_part() const {
    auto it = c.find(1);
    return it == c.end() ? mpq_class(0) : it->second;
}

Tower Tower::operator+(const Tower& o) const {
    Tower r = *this;
    for (const auto& [rad, v] : o.c) add_coeff(r.c, rad, v);
    return r;
}

Tower Tower::operator-(const Tower& o) const { return *this + o.negate(); }

Tower Tower::negate() const {
    Tower r;
    for (const auto& [rad, v] : c) r.c.emplace(rad, -v);
    return r;
}

std::optional<Tower> Tower::mul(const Tower& a, const Tower& b) {
    Tower r;
    for (const auto& [ra, va] : a.c) {
        for (const auto& [rb, vb] : b.c) {
            // sqrt(ra)*sqrt(rb) = g*sqrt(ra*rb/g^2) with g = gcd(ra, rb);
            // square-free inputs keep the product square-free.
            unsigned long g = std::gcd(ra, rb);
            unsigned long s = ra / g, t = rb / g;
            if (s != 0 && t > kRadicandLimit / s) return std::nullopt;
            unsigned long rad = s * t;
            mpq_class term = va * vb * mpq_class(g);
            add_coeff(r.c, rad, term);
        }
    }
    return r;
}

std::optional<Tower> Tower::inverse(const Tower& a) {
    if (a.is_zero()) return std::nullopt;
    if (a.is_rational()) return from_rational(mpq_class(1) / a.rational_part());
    // Pick a prime dividing some radicand; conjugating over it strictly
    // reduces the set of primes under the radical signs.
    unsigned long p = 0;
    for (const auto& [rad, v] : a.c) {
        if (rad == 1) continue;
        unsigned long r = rad;
        for (unsigned long d = 2; d * d <= r; ++d) {
            if (r % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) p = r;  // rad itself prime (or an atomic kernel)
        break;
    }
    Tower with, without;
    for (const auto& [rad, v] : a.c) {
        if (rad % p == 0) {
            with.c.emplace(rad, v);
        } else {
            without.c.emplace(rad, v);
        }
    }
    Tower conj = without - with;  // sigma_p(a)
    auto prod = mul(a, conj);     // a * sigma_p(a): p no longer appears
    if (!prod) return std::nullopt;
    auto prod_inv = inverse(*prod);
    if (!prod_inv) return std::nullopt;
    return mul(conj, *prod_inv);
}

std::optional<Tower> Tower::sqrt_of(const Tower& a) {
    if (!a.is_rational()) return std::nullopt;
    mpq_class q = a.rational_part();
    if (q < 0) return std::nullopt;
    if (q == 0) return Tower{};
    // sqrt(num/den) = sqrt(num*den)/den
    mpz_class n = q.get_num() * q.get_den();
    mpz_class root;
    unsigned long kernel;
    if (!squarefree_split(n, root, kernel)) return std::nullopt;
    Tower t;
    mpq_class coeff(root);
    coeff /= q.get_den();
    set_coeff(t.c, kernel, coeff);
    return t;
}

}  // namespace bg::detail
