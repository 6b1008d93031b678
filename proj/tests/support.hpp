#pragma once

// Shared fixture tuples used across the test suites.

#include "bg/tuple.hpp"

namespace fixtures {

// gamma < 0, B1 = 3, floor(beta) = 3
inline bg::Tuple4 eq9() {
    return bg::derive_tuple(bg::parse_real("1.99+sqrt(5)/2"), bg::parse_real("-0.2"),
                            std::nullopt);
}

// gamma > 0, B1 = 3, floor(beta) = 9, offsets mixing sqrt(5) and sqrt(7)
inline bg::Tuple4 eq10() {
    return bg::derive_tuple(bg::parse_real("8+(1+sqrt(5))/2"), std::nullopt,
                            bg::parse_real("-5*sqrt(7)/2"));
}

// gamma < 0, B1 = 5 = floor(beta)
inline bg::Tuple4 ex27() {
    return bg::derive_tuple(bg::parse_real("3.99+sqrt(5)/2"), bg::parse_real("-0.2"),
                            std::nullopt);
}

// gamma > 0, B1 = 3 < floor(beta) = 6 (letter e at position 0)
inline bg::Tuple4 ex32() {
    return bg::derive_tuple(bg::parse_real("4.99+sqrt(5)/2"), std::nullopt,
                            bg::parse_real("-1-sqrt(2)"));
}

// beta of degree 4: alpha, beta, 1 rationally independent (dense orbit)
inline bg::Tuple4 deg4() {
    return bg::derive_tuple(bg::parse_real("sqrt(2)+sqrt(3)"), bg::parse_real("-0.2"),
                            std::nullopt);
}

}  // namespace fixtures
