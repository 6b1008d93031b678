#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "bg/tuple.hpp"

namespace bg {

// Letters of the pair word over {a,b,c,d,e}. For n >= 1 the letter codes the
// gap pair (A_{n+1}-A_n, B_{n+1}-B_n) = (s_alpha(n), s_beta(n)):
//   a = (1, fb)   b = (1, fb+1)   c = (2, fb)   d = (2, fb+1)
// with fb = floor(beta). Position 0 codes (A_1, B_1); when gamma > 0 and
// B_1 < fb this pair is outside the four-letter alphabet and is written e.
struct ParikhVector {
    long long a = 0, b = 0, c = 0, d = 0;
    bool operator==(const ParikhVector&) const = default;
    ParikhVector operator+(const ParikhVector& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    long long total() const { return a + b + c + d; }
    std::string str() const;
};

// Parikh vector of a word over {a,b,c,d}; throws DomainError on 'e' or any
// other letter.
ParikhVector parikh(std::string_view u);

class ProductWord {
public:
    explicit ProductWord(const Tuple4& t);

    const Tuple4& tuple() const { return t_; }
    bool plus() const { return plus_; }  // sign tag: true for gamma > 0

    char at(long long i);                       // letter at position i (extends lazily)
    std::string prefix(long long len);          // first len letters
    void ensure(long long len);

    int pi1(char letter) const;        // first projection: 1 or 2
    long long pi2(char letter) const;  // second projection: fb, fb+1, or B_1 for e

    // Componentwise letter-pair sum over positions i..j (inclusive); equals
    // (A_{j+1} - A_i, B_{j+1} - B_i).
    std::pair<long long, long long> prefix_sums(long long i, long long j);

    // First position >= from with the given letter, scanning at most limit
    // letters; -1 when not found.
    long long find_letter(char letter, long long from, long long limit);

private:
    Tuple4 t_;
    bool plus_;
};

}  // namespace bg
