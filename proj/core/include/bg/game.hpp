#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bg/tuple.hpp"

namespace bg {

using Cell = std::pair<long long, long long>;

// Prescribed P-positions {(A_n,B_n)} ∪ {(B_n,A_n)} ∪ {(0,0)} with both
// coordinates <= bound, plus O(1) membership via the partner table (every
// positive integer is A_n or B_n for exactly one n).
struct PSet {
    long long bound = 0;
    std::vector<Cell> pairs;           // (A_n, B_n) with both coords <= bound, n >= 1
    std::vector<long long> partner;    // partner[x] = y iff (x,y) or (y,x) in the set
    bool contains(long long x, long long y) const {
        if (x == 0 && y == 0) return true;
        if (x <= 0 || y <= 0 || x > bound || y > bound) return false;
        return partner[(std::size_t)x] == y;
    }
};

PSet build_pset(const Tuple4& t, long long bound);

// Bitmask over [0,N]^2 marking the allowed moves. The maximal invariant
// candidate is the complement of the difference set of the P-positions.
class MoveSet {
public:
    MoveSet(long long n, bool fill);
    // M = N^2 \ (P - P), restricted to [0,N]^2; requires pset.bound >= 2N so
    // every relevant difference is certified.
    static MoveSet maximal_from_pset(const PSet& p, long long n);
    static MoveSet from_moves(std::span<const Cell> moves, long long n);
    static MoveSet nim(long long n);      // (k,0), (0,k)
    static MoveSet wythoff(long long n);  // (k,0), (0,k), (k,k)

    long long bound() const { return n_; }
    bool allowed(long long x, long long y) const {
        return bits_[idx(x, y)>> 6] >> (idx(x, y) & 63) & 1;
    }
    void set(long long x, long long y, bool v);
    long long count() const;

private:
    std::size_t idx(long long x, long long y) const {
        return (std::size_t)x * (std::size_t)(n_ + 1) + (std::size_t)y;
    }
    long long n_;
    std::vector<std::uint64_t> bits_;
};

// P/N classification of [0,N]^2 under the given move set.
class PGrid {
public:
    PGrid(long long n) : n_(n), p_((std::size_t)(n + 1) * (std::size_t)(n + 1), 0) {}
    long long bound() const { return n_; }
    bool is_p(long long x, long long y) const {
        return p_[(std::size_t)x * (std::size_t)(n_ + 1) + (std::size_t)y] != 0;
    }
    void set_p(long long x, long long y) {
        p_[(std::size_t)x * (std::size_t)(n_ + 1) + (std::size_t)y] = 1;
    }
    std::vector<Cell> p_cells() const;

private:
    long long n_;
    std::vector<std::uint8_t> p_;
};

// Sieve in anti-diagonal order: an unmarked cell is P and marks cell+m as N
// for every move m. Exact inside the grid since moves only decrease
// coordinates.
PGrid solve_pgrid(const MoveSet& m, long long n);

struct InvarianceReport {
    bool match = false;
    long long bound = 0;                  // safe region: x + y <= bound
    std::optional<Cell> first_mismatch;   // anti-diagonal order
    bool mismatch_is_extra_p = false;     // grid-P but not prescribed
    std::vector<Cell> mismatches;         // capped sample
    std::string to_text() const;
};

// Builds the P-set to 2N, the maximal move set and the grid, then compares
// grid P-cells with the prescribed set on {x + y <= N}.
InvarianceReport verify_invariance(const Tuple4& t, long long n);

// Re-check every cell of a solved grid against the defining recursion; true
// when the classification is a fixed point.
bool recheck_pgrid(const PGrid& g, const MoveSet& m);

}  // namespace bg
