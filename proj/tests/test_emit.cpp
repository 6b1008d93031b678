#include <doctest.h>

#include <sstream>

#include "bg/emit.hpp"
#include "support.hpp"

using namespace bg;

TEST_CASE("sequence table rows") {
    std::ostringstream os;
    tsv_sequence_table(fixtures::eq10(), 3, os);
    CHECK(os.str() ==
          "n\tA_n\tB_n\tA_diff\tB_diff\n"
          "1\t1\t3\t1\t9\n"
          "2\t2\t12\t2\t10\n"
          "3\t4\t22\t1\t9\n");
}

TEST_CASE("word table layout") {
    ProductWord w(fixtures::eq10());
    std::ostringstream os;
    tsv_word_table(w, 4, os);
    CHECK(os.str() ==
          "n\t0\t1\t2\t3\n"
          "A_diff\t1\t1\t2\t1\n"
          "B_diff\t3\t9\t10\t9\n"
          "letter\te\ta\td\ta\n");
}

TEST_CASE("tuple record carries exact strings and validation") {
    Tuple4 t = fixtures::eq10();
    std::string rec = tuple_record(t, validate_tuple(t));
    CHECK(rec.find("beta: 17/2 + 1/2*sqrt(5)") != std::string::npos);
    CHECK(rec.find("B1: 3") != std::string::npos);
    CHECK(rec.find("never-integral: pass") != std::string::npos);
    // byte-identical on repeated runs
    CHECK(rec == tuple_record(t, validate_tuple(t)));
}

TEST_CASE("grid dumps") {
    PGrid g = solve_pgrid(MoveSet::nim(3), 3);
    std::ostringstream pbm;
    pbm_grid(g, pbm);
    CHECK(pbm.str().substr(0, 7) == "P1\n4 4\n");
    std::ostringstream tsv;
    tsv_grid(g, tsv);
    CHECK(tsv.str().find("0\t0\tP") != std::string::npos);
    CHECK(tsv.str().find("0\t1\tN") != std::string::npos);
}

TEST_CASE("torus plot is well-formed svg with region labels") {
    std::ostringstream os;
    svg_torus(fixtures::ex27(), 5, os);
    std::string svg = os.str();
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (const char* label : {">a<", ">b<", ">c<", ">d<"}) {
        CHECK(svg.find(label) != std::string::npos);
    }
    // 6 orbit points, each labeled
    CHECK(svg.find(">0<") != std::string::npos);
    CHECK(svg.find(">5<") != std::string::npos);
}
