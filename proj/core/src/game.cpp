#include "bg/game.hpp"

#include <sstream>

#include "bg/errors.hpp"

namespace bg {

PSet build_pset(const Tuple4& t, long long bound) {
    PSet out;
    out.bound = bound;
    out.partner.assign((std::size_t)bound + 1, 0);
    for (long long n = 1;; ++n) {
        long long a = t.a(n);
        if (a > bound) break;
        long long b = t.b(n);
        if (b <= bound) {
            out.pairs.emplace_back(a, b);
            out.partner[(std::size_t)a] = b;
            out.partner[(std::size_t)b] = a;
        } else {
            // b already exceeds the bound; later n only grow
            break;
        }
    }
    return out;
}

MoveSet::MoveSet(long long n, bool fill)
    : n_(n), bits_(((std::size_t)(n + 1) * (std::size_t)(n + 1) + 63) / 64,
                   fill ? ~0ull : 0ull) {}

void MoveSet::set(long long x, long long y, bool v) {
    std::size_t i = idx(x, y);
    if (v) {
        bits_[i >> 6] |= 1ull << (i & 63);
    } else {
        bits_[i >> 6] &= ~(1ull << (i & 63));
    }
}

long long MoveSet::count() const {
    long long c = 0;
    std::size_t total = (std::size_t)(n_ + 1) * (std::size_t)(n_ + 1);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        if (w == bits_.size() - 1 && total % 64) word &= (1ull << (total % 64)) - 1;
        c += __builtin_popcountll(word);
    }
    return c;
}

MoveSet MoveSet::maximal_from_pset(const PSet& p, long long n) {
    if (p.bound < 2 * n) {
        throw InsufficientPSet("need P-set bound >= 2N = " + std::to_string(2 * n));
    }
    MoveSet m(n, true);
    m.set(0, 0, false);
    // all componentwise differences of prescribed positions, both mirrored
    std::vector<Cell> all;
    all.reserve(p.pairs.size() * 2 + 1);
    all.emplace_back(0, 0);
    for (const auto& [a, b] : p.pairs) {
        all.emplace_back(a, b);
        all.emplace_back(b, a);
    }
    for (const auto& [px, py] : all) {
        for (const auto& [qx, qy] : all) {
            long long dx = px - qx, dy = py - qy;
            if (dx >= 0 && dy >= 0 && dx <= n && dy <= n) m.set(dx, dy, false);
        }
    }
    return m;
}

MoveSet MoveSet::from_moves(std::span<const Cell> moves, long long n) {
    MoveSet m(n, false);
    for (const auto& [x, y] : moves) {
        if (x >= 0 && y >= 0 && x <= n && y <= n && (x || y)) m.set(x, y, true);
    }
    return m;
}

MoveSet MoveSet::nim(long long n) {
    MoveSet m(n, false);
    for (long long k = 1; k <= n; ++k) {
        m.set(k, 0, true);
        m.set(0, k, true);
    }
    return m;
}

MoveSet MoveSet::wythoff(long long n) {
    MoveSet m = nim(n);
    for (long long k = 1; k <= n; ++k) m.set(k, k, true);
    return m;
}

std::vector<Cell> PGrid::p_cells() const {
    std::vector<Cell> out;
    for (long long x = 0; x <= n_; ++x) {
        for (long long y = 0; y <= n_; ++y) {
            if (is_p(x, y)) out.emplace_back(x, y);
        }
    }
    return out;
}

PGrid solve_pgrid(const MoveSet& m, long long n) {
    if (m.bound() < n) throw DomainError("move set bound smaller than grid");
    PGrid g(n);
    std::vector<std::uint8_t> is_n((std::size_t)(n + 1) * (std::size_t)(n + 1), 0);
    auto at = [&](long long x, long long y) -> std::uint8_t& {
        return is_n[(std::size_t)x * (std::size_t)(n + 1) + (std::size_t)y];
    };
    for (long long s = 0; s <= 2 * n; ++s) {
        long long x0 = std::max(0ll, s - n);
        for (long long x = x0; x <= std::min(s, n); ++x) {
            long long y = s - x;
            if (at(x, y)) continue;
            g.set_p(x, y);  // no move reaches an earlier P-cell
            for (long long i = 0; x + i <= n; ++i) {
                for (long long j = 0; y + j <= n; ++j) {
                    if ((i || j) && m.allowed(i, j)) at(x + i, y + j) = 1;
                }
            }
        }
    }
    return g;
}

bool recheck_pgrid(const PGrid& g, const MoveSet& m) {
    long long n = g.bound();
    for (long long x = 0; x <= n; ++x) {
        for (long long y = 0; y <= n; ++y) {
            bool reaches_p = false;
            for (long long i = 0; i <= x && !reaches_p; ++i) {
                for (long long j = 0; j <= y; ++j) {
                    if ((i || j) && m.allowed(i, j) && g.is_p(x - i, y - j)) {
                        reaches_p = true;
                        break;
                    }
                }
            }
            if (g.is_p(x, y) == reaches_p) return false;  // P iff no move to P
        }
    }
    return true;
}

InvarianceReport verify_invariance(const Tuple4& t, long long n) {
    InvarianceReport rep;
    rep.bound = n;
    PSet p = build_pset(t, 2 * n);
    MoveSet m = MoveSet::maximal_from_pset(p, n);
    PGrid g = solve_pgrid(m, n);
    rep.match = true;
    constexpr std::size_t kMismatchSample = 32;
    for (long long s = 0; s <= n; ++s) {
        for (long long x = std::max(0ll, s - n); x <= std::min(s, n); ++x) {
            long long y = s - x;
            bool grid_p = g.is_p(x, y);
            bool presc = p.contains(x, y);
            if (grid_p != presc) {
                if (rep.match) {
                    rep.match = false;
                    rep.first_mismatch = Cell{x, y};
                    rep.mismatch_is_extra_p = grid_p;
                }
                if (rep.mismatches.size() < kMismatchSample) rep.mismatches.emplace_back(x, y);
            }
        }
    }
    return rep;
}

std::string InvarianceReport::to_text() const {
    std::ostringstream os;
    os << "invariance[x+y<=" << bound << "]: " << (match ? "MATCH" : "MISMATCH") << "\n";
    if (first_mismatch) {
        os << "  first mismatch at (" << first_mismatch->first << "," << first_mismatch->second
           << "): " << (mismatch_is_extra_p ? "unreachable non-prescribed position"
                                            : "prescribed position classified N")
           << "\n";
        os << "  mismatch cells:";
        for (const auto& [x, y] : mismatches) os << " (" << x << "," << y << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace bg
