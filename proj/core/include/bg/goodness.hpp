#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bg/torus.hpp"
#include "bg/word.hpp"

namespace bg {

enum class Verdict { Good, NotGood, Undecided };

// A located factor supporting an existence claim, re-verified against the
// built word: position -1 marks the combinatorial position-0 candidate.
struct FactorWitness {
    long long position = -1;
    std::string factor;
    std::string parikh_offset;
};

struct PrefixTrace {
    std::string prefix;
    bool eligible = false;   // literal gates passed, tests were run
    bool offending = false;  // bad (gamma > 0) or suffix-bad (gamma < 0)
    std::string gates;       // narration of the gate outcomes
    std::string matched_rule;
    std::vector<FactorWitness> witnesses;
    std::string detail;
};

// Unreachable position predicted from an offending prefix; the game module
// confirms it independently.
struct Obstruction {
    long long x = 0, y = 0;
    std::string shape;  // "(n, B_n - 1)", "(n, B_{n-1} - 1)" or "(n, B_{n-1} + B_1)"
};

struct GoodnessVerdict {
    Verdict verdict = Verdict::Undecided;
    std::vector<PrefixTrace> prefixes;
    std::string blocking_reason;               // set for Undecided
    std::optional<Obstruction> obstruction;    // set for NotGood
    std::string to_text() const;
};

struct BadPrefixCheck {
    bool bad = false;
    PrefixTrace trace;
};

// Bad-prefix test for the prefix w_0 u_1 ... u_n (gamma > 0, 1 <= n <= B1-2):
// literal gates (u in {a,b}*, inner palindrome, 2*B1 within 1 of pi2(u_n)),
// then the heavy/light point test at R^1 and one orbit existence query.
BadPrefixCheck is_bad_prefix(const Tuple4& t, ProductWord& w, long long n);

// Factor properties for gamma < 0 (u a factor of the word in {a,b}*).
bool satisfies_b1(const Tuple4& t, ProductWord& w, std::string_view u, PrefixTrace* trace);
bool satisfies_b2(const Tuple4& t, ProductWord& w, std::string_view u, PrefixTrace* trace);

// All suffixes satisfy (B.1), or the word has length >= 2 and all suffixes of
// length >= 2 satisfy (B.2).
bool is_suffix_bad(const Tuple4& t, ProductWord& w, std::string_view prefix, PrefixTrace* trace);

// Full decision: Undecided when B1 = 2 or any test is blocked
// (BoundaryIndeterminate / precision / scan budget); otherwise Good iff no
// eligible prefix is bad (gamma > 0) / suffix-bad (gamma < 0).
GoodnessVerdict decide_good(const Tuple4& t);

// Word-level variants over an explicit finite word (no tuple, factor search
// in the given text only): lets the properties be exercised directly.
bool word_satisfies_b1(std::string_view word, std::string_view u);
bool word_satisfies_b2(std::string_view word, std::string_view u);
bool word_is_suffix_bad(std::string_view word, std::string_view prefix);

}  // namespace bg
