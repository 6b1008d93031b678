#include "bg/goodness.hpp"

#include <algorithm>
#include <sstream>

#include "bg/errors.hpp"

namespace bg {

namespace {

constexpr long long kWitnessExtractCap = 1000000;

bool in_ab(std::string_view u) {
    return std::all_of(u.begin(), u.end(), [](char c) { return c == 'a' || c == 'b'; });
}

bool is_palindrome(std::string_view u) {
    for (std::size_t i = 0, j = u.size(); i + 1 < j; ++i, --j) {
        if (u[i] != u[j - 1]) return false;
    }
    return true;
}

std::string offset_str(const ParikhVector& off) {
    std::ostringstream os;
    os << "(" << off.a << "," << off.b << "," << off.c << "," << off.d << ")";
    return os.str();
}

// Does v = parikh(u) + off describe a valid Parikh vector of the right length?
std::optional<ParikhVector> apply_offset(const ParikhVector& u, const ParikhVector& off) {
    ParikhVector v = u + off;
    if (v.a < 0 || v.b < 0 || v.c < 0 || v.d < 0) return std::nullopt;
    return v;
}

// Combinatorial position-0 candidate: the stored prefix of the word is the
// one factor the orbit queries (which start at index 1) cannot see.
bool position0_witness(ProductWord& w, long long len, const ParikhVector& u,
                       const std::vector<ParikhVector>& offsets, PrefixTrace* trace) {
    std::string v = w.prefix(len);
    if (v.find('e') != std::string::npos) return false;
    ParikhVector pv = parikh(v);
    for (const auto& off : offsets) {
        auto target = apply_offset(u, off);
        if (target && pv == *target) {
            if (trace) trace->witnesses.push_back({-1, v, offset_str(off)});
            return true;
        }
    }
    return false;
}

// Re-verify a claimed orbit witness by extracting the factor and matching it
// against one of the allowed Parikh offsets.
void verify_witness(ProductWord& w, long long pos, long long len, const ParikhVector& u,
                    const std::vector<ParikhVector>& offsets, PrefixTrace* trace) {
    if (pos + len > kWitnessExtractCap) {
        if (trace) {
            trace->witnesses.push_back({pos, "<beyond extraction cap>", ""});
        }
        return;
    }
    std::string v;
    for (long long i = pos; i < pos + len; ++i) v += w.at(i);
    ParikhVector pv = parikh(v);
    for (const auto& off : offsets) {
        auto target = apply_offset(u, off);
        if (target && pv == *target) {
            if (trace) trace->witnesses.push_back({pos, v, offset_str(off)});
            return;
        }
    }
    throw DomainError("certificate re-verification failed: factor at " + std::to_string(pos) +
                      " (" + v + ") matches no allowed offset");
}

Rectangle weight_rect(const Tuple4& t, long long len, Weight wa, Weight wb) {
    return {heavy_light_interval(t.alpha, len, wa), heavy_light_interval(t.beta, len, wb)};
}

}  // namespace

BadPrefixCheck is_bad_prefix(const Tuple4& t, ProductWord& w, long long n) {
    if (t.gamma_sign <= 0) throw DomainError("bad-prefix test applies to gamma > 0");
    if (n < 1 || n > t.b1 - 2) throw DomainError("need 2 <= |prefix| < B_1");
    BadPrefixCheck out;
    PrefixTrace& tr = out.trace;
    tr.prefix = w.prefix(n + 1);
    std::string u = tr.prefix.substr(1);
    if (!in_ab(u)) {
        tr.gates = "u not in {a,b}*";
        return out;
    }
    if (!is_palindrome(std::string_view(u).substr(0, u.size() - 1))) {
        tr.gates = "inner word not a palindrome";
        return out;
    }
    long long pi2_last = w.pi2(u.back());
    long long diff = 2 * t.b1 - pi2_last;
    if (diff < -1 || diff > 1) {
        tr.gates = "2*B1 = " + std::to_string(2 * t.b1) + " not within 1 of pi2(u_n) = " +
                   std::to_string(pi2_last);
        return out;
    }
    tr.eligible = true;
    // Point test at R^1: the length-n factor starting at position 1 is u
    // itself, so these memberships read off u's heavy/light classes.
    TorusPoint r1{(t.gamma + t.alpha).frac(), (t.delta + t.beta).frac()};
    bool pi1_light = heavy_light_interval(t.alpha, n, Weight::Light).contains(r1.x);
    bool pi2_heavy = heavy_light_interval(t.beta, n, Weight::Heavy).contains(r1.y);
    std::vector<ParikhVector> offsets;
    Rectangle query;
    ParikhVector pu = parikh(u);
    if (diff == 1) {
        // 2*B1 = pi2(u_n) + 1: u light on both projections, witness heavy on both
        tr.matched_rule = "2B1=pi2(last)+1";
        if (pi1_light && !pi2_heavy) {
            offsets = {{-1, 0, 0, 1}, {-2, 1, 1, 0}};
            query = weight_rect(t, n, Weight::Heavy, Weight::Heavy);
        } else {
            tr.gates = "prefix-side point test failed (need light/light)";
            return out;
        }
    } else if (diff == 0) {
        tr.matched_rule = "2B1=pi2(last)";
        if (!pi1_light) {
            tr.gates = "prefix-side point test failed (need pi1 light)";
            return out;
        }
        offsets = {{-1, 0, 1, 0}, {0, -1, 0, 1}};
        query = pi2_heavy ? weight_rect(t, n, Weight::Heavy, Weight::Heavy)
                          : weight_rect(t, n, Weight::Heavy, Weight::Light);
    } else {
        // 2*B1 = pi2(u_n) - 1: u light/heavy, witness heavy/light
        tr.matched_rule = "2B1=pi2(last)-1";
        if (pi1_light && pi2_heavy) {
            offsets = {{0, -1, 1, 0}, {1, -2, 0, 1}};
            query = weight_rect(t, n, Weight::Heavy, Weight::Light);
        } else {
            tr.gates = "prefix-side point test failed (need light/heavy)";
            return out;
        }
    }
    tr.gates = "all gates passed";
    if (position0_witness(w, n, pu, offsets, &tr)) {
        out.bad = true;
        tr.offending = true;
        tr.detail = "witness is the position-0 prefix occurrence";
        return out;
    }
    TorusAnswer ans = orbit_hits(t, query, 1);
    if (ans.verdict == TorusAnswer::Verdict::BoundaryIndeterminate) {
        throw PrecisionExhausted("torus query indeterminate: " + ans.note);
    }
    if (ans.hit()) {
        verify_witness(w, *ans.witness, n, pu, offsets, &tr);
        out.bad = true;
        tr.offending = true;
    } else {
        tr.detail = "orbit never meets " + std::string(ans.note);
    }
    return out;
}

bool satisfies_b1(const Tuple4& t, ProductWord& w, std::string_view u, PrefixTrace* trace) {
    if (!in_ab(u) || u.empty()) return false;
    long long n = (long long)u.size();
    long long b_count = (long long)std::count(u.begin(), u.end(), 'b');
    if (b_count != heavy_letter_count(t.beta, n)) return false;  // pi2(u) light
    // Witness: 1^n on the first projection with a light second projection.
    std::vector<long> ones((std::size_t)n, 1);
    CircleInterval i1n = factor_interval(ones, t.alpha);
    if (i1n.empty()) return false;
    ParikhVector pu = parikh(std::string(u));
    std::vector<ParikhVector> offsets;
    for (long long j = 1; j <= b_count; ++j) offsets.push_back({j, -j, 0, 0});
    if (position0_witness(w, n, pu, offsets, trace)) return true;
    Rectangle query{i1n, heavy_light_interval(t.beta, n, Weight::Light)};
    TorusAnswer ans = orbit_hits(t, query, 1);
    if (ans.verdict == TorusAnswer::Verdict::BoundaryIndeterminate) {
        throw PrecisionExhausted("torus query indeterminate: " + ans.note);
    }
    if (!ans.hit()) return false;
    verify_witness(w, *ans.witness, n, pu, offsets, trace);
    return true;
}

bool satisfies_b2(const Tuple4& t, ProductWord& w, std::string_view u, PrefixTrace* trace) {
    if (!in_ab(u)) return false;
    long long n = (long long)u.size();
    if (n < 2) return false;  // inner word empty: required witness counts impossible
    std::string inner(u.substr(0, (std::size_t)n - 1));
    long long b_count = (long long)std::count(inner.begin(), inner.end(), 'b');
    if (b_count != heavy_letter_count(t.beta, n - 1)) return false;  // pi2 light
    long long alpha_heavy = heavy_letter_count(t.alpha, n - 1);
    if (alpha_heavy > 2) return false;  // every factor carries two or more 2s
    ParikhVector pu = parikh(inner);
    std::vector<ParikhVector> offsets = {{0, -1, 1, 0}, {1, -2, 0, 1}};
    if (position0_witness(w, n - 1, pu, offsets, trace)) return true;
    // A factor with exactly one 2 is heavy when ceil((n-1){alpha}) = 1 and
    // light when it is 2.
    Weight wa = alpha_heavy == 1 ? Weight::Heavy : Weight::Light;
    Rectangle query = weight_rect(t, n - 1, wa, Weight::Light);
    TorusAnswer ans = orbit_hits(t, query, 1);
    if (ans.verdict == TorusAnswer::Verdict::BoundaryIndeterminate) {
        throw PrecisionExhausted("torus query indeterminate: " + ans.note);
    }
    if (!ans.hit()) return false;
    verify_witness(w, *ans.witness, n - 1, pu, offsets, trace);
    return true;
}

bool is_suffix_bad(const Tuple4& t, ProductWord& w, std::string_view prefix, PrefixTrace* trace) {
    if (t.gamma_sign >= 0) throw DomainError("suffix-bad test applies to gamma < 0");
    if (prefix.empty() || !in_ab(prefix)) return false;
    long long n = (long long)prefix.size();
    bool all_b1 = true;
    for (long long j = 0; j < n && all_b1; ++j) {
        all_b1 = satisfies_b1(t, w, prefix.substr((std::size_t)j), trace);
    }
    if (all_b1) {
        if (trace) trace->matched_rule = "(B.1) suffix chain";
        return true;
    }
    if (n < 2) return false;
    if (trace) trace->witnesses.clear();
    bool all_b2 = true;
    for (long long j = 0; j + 2 <= n && all_b2; ++j) {
        all_b2 = satisfies_b2(t, w, prefix.substr((std::size_t)j), trace);
    }
    if (all_b2) {
        if (trace) trace->matched_rule = "(B.2) suffix chain";
        return true;
    }
    if (trace) trace->witnesses.clear();
    return false;
}

GoodnessVerdict decide_good(const Tuple4& t) {
    GoodnessVerdict out;
    if (t.b1 == 2) {
        out.verdict = Verdict::Undecided;
        out.blocking_reason = "B1 = 2: no decision procedure in this regime";
        return out;
    }
    if (t.b1 < 2) throw DomainError("tuple with B1 < 2 is invalid");
    ProductWord w(t);
    bool blocked = false;
    std::string block_note;
    if (t.gamma_sign > 0) {
        for (long long k = 1; k <= t.b1 - 2; ++k) {
            // eligibility: w_1..w_k all in {a,b}; once violated, every longer
            // prefix is ineligible too
            if (char ch = w.at(k); ch != 'a' && ch != 'b') {
                PrefixTrace tr;
                tr.prefix = w.prefix(k + 1);
                tr.gates = std::string("letter '") + ch + "' leaves {a,b}";
                out.prefixes.push_back(std::move(tr));
                break;
            }
            try {
                BadPrefixCheck chk = is_bad_prefix(t, w, k);
                out.prefixes.push_back(chk.trace);
                if (chk.bad) {
                    out.verdict = Verdict::NotGood;
                    long long n = k + 1;  // offending prefix length
                    out.obstruction = Obstruction{n, t.b(n - 1) + t.b1, "(n, B_{n-1} + B_1)"};
                    return out;
                }
            } catch (const PrecisionExhausted& e) {
                blocked = true;
                block_note = e.what();
            } catch (const ScanBudgetExceeded& e) {
                blocked = true;
                block_note = e.what();
            }
        }
    } else {
        for (long long m = 1; m <= t.b1 - 1; ++m) {
            if (char ch = w.at(m - 1); ch != 'a' && ch != 'b') break;
            PrefixTrace tr;
            tr.prefix = w.prefix(m);
            try {
                bool sb = is_suffix_bad(t, w, tr.prefix, &tr);
                tr.eligible = true;
                tr.offending = sb;
                out.prefixes.push_back(tr);
                if (sb) {
                    out.verdict = Verdict::NotGood;
                    Obstruction ob;
                    if (tr.matched_rule == "(B.1) suffix chain") {
                        ob = {m, t.b(m) - 1, "(n, B_n - 1)"};
                    } else {
                        ob = {m, t.b(m - 1) - 1, "(n, B_{n-1} - 1)"};
                    }
                    out.obstruction = ob;
                    return out;
                }
            } catch (const PrecisionExhausted& e) {
                blocked = true;
                block_note = e.what();
                out.prefixes.push_back(tr);
            } catch (const ScanBudgetExceeded& e) {
                blocked = true;
                block_note = e.what();
                out.prefixes.push_back(tr);
            }
        }
    }
    if (blocked) {
        out.verdict = Verdict::Undecided;
        out.blocking_reason = block_note;
    } else {
        out.verdict = Verdict::Good;
    }
    return out;
}

std::string GoodnessVerdict::to_text() const {
    std::ostringstream os;
    os << "verdict: ";
    switch (verdict) {
        case Verdict::Good: os << "GOOD\n"; break;
        case Verdict::NotGood: os << "NOT_GOOD\n"; break;
        case Verdict::Undecided: os << "UNDECIDED\n"; break;
    }
    if (!blocking_reason.empty()) os << "blocked-by: " << blocking_reason << "\n";
    for (const auto& tr : prefixes) {
        os << "prefix \"" << tr.prefix << "\": "
           << (tr.offending ? "OFFENDING" : tr.eligible ? "pass" : "not eligible");
        if (!tr.matched_rule.empty()) os << " rule=" << tr.matched_rule;
        if (!tr.gates.empty()) os << " [" << tr.gates << "]";
        os << "\n";
        for (const auto& fw : tr.witnesses) {
            os << "  witness @" << fw.position << " \"" << fw.factor << "\"";
            if (!fw.parikh_offset.empty()) os << " offset " << fw.parikh_offset;
            os << "\n";
        }
        if (!tr.detail.empty()) os << "  " << tr.detail << "\n";
    }
    if (obstruction) {
        os << "obstruction: (" << obstruction->x << "," << obstruction->y << ") shape "
           << obstruction->shape << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Word-level variants

bool word_satisfies_b1(std::string_view word, std::string_view u) {
    if (u.empty() || !in_ab(u)) return false;
    std::size_t n = u.size();
    long long ub = (long long)std::count(u.begin(), u.end(), 'b');
    for (std::size_t i = 0; i + n <= word.size(); ++i) {
        std::string_view v = word.substr(i, n);
        if (!in_ab(v)) continue;
        if ((long long)std::count(v.begin(), v.end(), 'b') < ub) return true;
    }
    return false;
}

bool word_satisfies_b2(std::string_view word, std::string_view u) {
    if (!in_ab(u) || u.size() < 2) return false;
    std::size_t n = u.size();
    ParikhVector inner = parikh(std::string(u.substr(0, n - 1)));
    std::vector<ParikhVector> offsets = {{0, -1, 1, 0}, {1, -2, 0, 1}};
    for (std::size_t i = 0; i + (n - 1) <= word.size(); ++i) {
        std::string_view v = word.substr(i, n - 1);
        if (v.find('e') != std::string_view::npos) continue;
        ParikhVector pv = parikh(std::string(v));
        for (const auto& off : offsets) {
            auto target = apply_offset(inner, off);
            if (target && pv == *target) return true;
        }
    }
    return false;
}

bool word_is_suffix_bad(std::string_view word, std::string_view prefix) {
    if (prefix.empty() || !in_ab(prefix)) return false;
    std::size_t n = prefix.size();
    bool all_b1 = true;
    for (std::size_t j = 0; j < n && all_b1; ++j) {
        all_b1 = word_satisfies_b1(word, prefix.substr(j));
    }
    if (all_b1) return true;
    if (n < 2) return false;
    bool all_b2 = true;
    for (std::size_t j = 0; j + 2 <= n && all_b2; ++j) {
        all_b2 = word_satisfies_b2(word, prefix.substr(j));
    }
    return all_b2;
}

}  // namespace bg
