#include <doctest.h>

#include <random>

#include "bg/errors.hpp"
#include "bg/sturmian.hpp"
#include "bg/word.hpp"
#include "support.hpp"

using namespace bg;

TEST_CASE("letter tables match the frozen prefixes") {
    ProductWord w27(fixtures::ex27());
    CHECK(w27.prefix(19) == "abaacaaaacbaacaaaca");
    CHECK(!w27.plus());

    ProductWord w32(fixtures::ex32());
    CHECK(w32.prefix(19) == "eacbaaacaaaacbaaaac");
    CHECK(w32.plus());

    ProductWord w10(fixtures::eq10());
    CHECK(w10.prefix(15) == "eadabbababdabba");
}

TEST_CASE("letter projections") {
    ProductWord w(fixtures::eq10());
    CHECK(w.pi1('a') == 1);
    CHECK(w.pi1('b') == 1);
    CHECK(w.pi1('c') == 2);
    CHECK(w.pi1('d') == 2);
    CHECK(w.pi1('e') == 1);
    CHECK(w.pi2('a') == 9);
    CHECK(w.pi2('b') == 10);
    CHECK(w.pi2('c') == 9);
    CHECK(w.pi2('d') == 10);
    CHECK(w.pi2('e') == 3);  // B_1
}

TEST_CASE("the extra letter appears only at position 0, only when needed") {
    // gamma > 0 with B_1 < floor(beta): e at position 0 and nowhere else
    ProductWord w32(fixtures::ex32());
    std::string p = w32.prefix(10000);
    CHECK(p[0] == 'e');
    CHECK(p.find('e', 1) == std::string::npos);
    // gamma > 0 with B_1 = floor(beta): no e at all
    Tuple4 flat = derive_tuple(parse_real("4.99+sqrt(5)/2"), std::nullopt, parse_real("-0.05"));
    CHECK(flat.b1 == flat.floor_beta);
    ProductWord wf(flat);
    CHECK(wf.prefix(5000).find('e') == std::string::npos);
    CHECK(wf.at(0) == 'a');
    // gamma < 0: four-letter alphabet
    ProductWord w9(fixtures::eq9());
    CHECK(w9.prefix(5000).find('e') == std::string::npos);
}

TEST_CASE("parikh vectors") {
    CHECK(parikh("") == ParikhVector{0, 0, 0, 0});
    CHECK(parikh("aab") == ParikhVector{2, 1, 0, 0});
    CHECK(parikh("baacaaaacb") == ParikhVector{6, 2, 2, 0});
    CHECK_THROWS_AS(parikh("ae"), DomainError);
    ParikhVector v = parikh("abcdd");
    CHECK(v.total() == 5);
}

TEST_CASE("prefix sums telescope to sequence differences") {
    ProductWord w10(fixtures::eq10());
    CHECK(w10.prefix_sums(0, 0) == std::pair<long long, long long>{1, 3});
    CHECK(w10.prefix_sums(0, 14) == std::pair<long long, long long>{17, 137});
    ProductWord w27(fixtures::ex27());
    CHECK(w27.prefix_sums(2, 2) == std::pair<long long, long long>{1, 5});

    std::mt19937 rng(23);
    std::uniform_int_distribution<long long> idx(0, 1500);
    for (const Tuple4& t : {fixtures::eq9(), fixtures::eq10(), fixtures::ex32()}) {
        ProductWord w(t);
        for (int rep = 0; rep < 200; ++rep) {
            long long i = idx(rng), j = idx(rng);
            if (i > j) std::swap(i, j);
            auto [s1, s2] = w.prefix_sums(i, j);
            CHECK(s1 == t.a(j + 1) - t.a(i));
            CHECK(s2 == t.b(j + 1) - t.b(i));
        }
    }
}

TEST_CASE("projections agree with the mechanical words off position 0") {
    // gamma < 0: second projection agrees from position 0 on, first differs
    // exactly at 0
    Tuple4 t9 = fixtures::eq9();
    ProductWord w9(t9);
    for (long long n = 0; n < 200; ++n) {
        CHECK(w9.pi2(w9.at(n)) == mech_letter(t9.beta, t9.delta, n));
        if (n >= 1) {
            CHECK(w9.pi1(w9.at(n)) == mech_letter(t9.alpha, t9.gamma, n));
        }
    }
    CHECK(w9.pi1(w9.at(0)) != mech_letter(t9.alpha, t9.gamma, 0));

    // gamma > 0: first projection agrees from 0 on, second differs at 0
    Tuple4 t32 = fixtures::ex32();
    ProductWord w32(t32);
    for (long long n = 0; n < 200; ++n) {
        CHECK(w32.pi1(w32.at(n)) == mech_letter(t32.alpha, t32.gamma, n));
        if (n >= 1) {
            CHECK(w32.pi2(w32.at(n)) == mech_letter(t32.beta, t32.delta, n));
        }
    }
    CHECK(w32.pi2(w32.at(0)) == 3);
    CHECK(mech_letter(t32.beta, t32.delta, 0) == 6);
}

TEST_CASE("find_letter locates first occurrences") {
    ProductWord w27(fixtures::ex27());
    CHECK(w27.find_letter('d', 0, 100000) == 29);
    ProductWord w32(fixtures::ex32());
    CHECK(w32.find_letter('d', 0, 100000) == 161);
    CHECK(w32.find_letter('d', 0, 50) == -1);
}

TEST_CASE("position-0 second projection can disagree even without letter e") {
    // B_1 = floor(beta) = 6 puts position 0 inside the four-letter alphabet,
    // yet the underlying mechanical word still starts with 7
    Tuple4 flat = derive_tuple(parse_real("4.99+sqrt(5)/2"), std::nullopt, parse_real("-0.05"));
    ProductWord w(flat);
    CHECK(w.at(0) == 'a');
    CHECK(w.pi2(w.at(0)) == 6);
    CHECK(mech_letter(flat.beta, flat.delta, 0) == 7);
}
