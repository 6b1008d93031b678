#include "bg/word.hpp"

#include <sstream>

#include "bg/errors.hpp"

namespace bg {

std::string ParikhVector::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << "," << d << ")";
    return os.str();
}

ParikhVector parikh(std::string_view u) {
    ParikhVector v;
    for (char ch : u) {
        switch (ch) {
            case 'a': ++v.a; break;
            case 'b': ++v.b; break;
            case 'c': ++v.c; break;
            case 'd': ++v.d; break;
            default:
                throw DomainError(std::string("parikh vector undefined for letter '") + ch + "'");
        }
    }
    return v;
}

ProductWord::ProductWord(const Tuple4& t) : t_(t), plus_(t.gamma_sign > 0) {}

void ProductWord::ensure(long long len) { t_.ensure(len); }

char ProductWord::at(long long i) {
    t_.ensure(i + 1);
    long long da = t_.a(i + 1) - t_.a(i);
    long long db = t_.b(i + 1) - t_.b(i);
    if (i == 0 && plus_ && t_.b1 < t_.floor_beta) return 'e';
    if (da == 1 && db == t_.floor_beta) return 'a';
    if (da == 1 && db == t_.floor_beta + 1) return 'b';
    if (da == 2 && db == t_.floor_beta) return 'c';
    if (da == 2 && db == t_.floor_beta + 1) return 'd';
    throw DomainError("gap pair (" + std::to_string(da) + "," + std::to_string(db) +
                      ") at position " + std::to_string(i) + " is outside the alphabet");
}

std::string ProductWord::prefix(long long len) {
    std::string s;
    s.reserve((std::size_t)len);
    for (long long i = 0; i < len; ++i) s += at(i);
    return s;
}

int ProductWord::pi1(char letter) const {
    switch (letter) {
        case 'a':
        case 'b':
        case 'e':
            return 1;
        case 'c':
        case 'd':
            return 2;
    }
    throw DomainError(std::string("unknown letter '") + letter + "'");
}

long long ProductWord::pi2(char letter) const {
    switch (letter) {
        case 'a':
        case 'c':
            return t_.floor_beta;
        case 'b':
        case 'd':
            return t_.floor_beta + 1;
        case 'e':
            return t_.b1;
    }
    throw DomainError(std::string("unknown letter '") + letter + "'");
}

std::pair<long long, long long> ProductWord::prefix_sums(long long i, long long j) {
    if (i > j || i < 0) throw DomainError("need 0 <= i <= j");
    long long s1 = 0, s2 = 0;
    for (long long k = i; k <= j; ++k) {
        char ch = at(k);
        s1 += pi1(ch);
        s2 += pi2(ch);
    }
    return {s1, s2};
}

long long ProductWord::find_letter(char letter, long long from, long long limit) {
    for (long long i = from; i < from + limit; ++i) {
        if (at(i) == letter) return i;
    }
    return -1;
}

}  // namespace bg
