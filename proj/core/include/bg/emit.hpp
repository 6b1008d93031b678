#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bg/game.hpp"
#include "bg/goodness.hpp"
#include "bg/torus.hpp"
#include "bg/tuple.hpp"
#include "bg/word.hpp"

namespace bg {

// (n, A_n, B_n, A_{n+1}-A_n, B_{n+1}-B_n) rows for n = 1..n_max.
void tsv_sequence_table(const Tuple4& t, long long n_max, std::ostream& os);

// Three-row gap/letter layout for n = 0..len-1: A-diffs, B-diffs, letters.
void tsv_word_table(ProductWord& w, long long len, std::ostream& os);

// Structured text record of a tuple: the four expressions (canonical radical
// form), derived integers, dependence witness and validation status.
std::string tuple_record(const Tuple4& t, const ValidationReport& rep);

// Grid dumps.
void pbm_grid(const PGrid& g, std::ostream& os);   // P1 bitmap, P-cells black
void tsv_grid(const PGrid& g, std::ostream& os);

// Unit-square plot of the four coding regions, the first `steps`+1 orbit
// points labeled 0..steps, and the orbit's line closure when alpha, beta, 1
// are rationally dependent.
void svg_torus(const Tuple4& t, long long steps, std::ostream& os);

}  // namespace bg
