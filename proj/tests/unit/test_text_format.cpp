#include "qeuler/errors.hpp"
#include "qeuler/text_format.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

using namespace qeuler;
using qeuler::testing::Gen;

TEST_CASE("text: polynomial formatting") {
    CHECK(to_string(QPoly{}) == "0");
    CHECK(to_string(QPoly{{Rat(1), Rat(-1, 2), Rat(3)}}) == "3*q^2 - 1/2*q + 1");
    CHECK(to_string(QPoly{{Rat(0), Rat(-1)}}) == "-q");
    CHECK(to_string(RatFunc(ZPoly{1, 1}, ZPoly{1, -1})) == "-q - 1 / q - 1");
    CHECK(to_string(RatFunc(3)) == "3 / 1");
}

TEST_CASE("text: parsing accepts the canonical form and loose spacing") {
    CHECK(parse_qpoly("3*q^2 - 1/2*q + 1") == QPoly{{Rat(1), Rat(-1, 2), Rat(3)}});
    CHECK(parse_qpoly("  -q+q^3 ") == QPoly{{Rat(0), Rat(-1), Rat(0), Rat(1)}});
    CHECK(parse_qpoly("0").is_zero());
    CHECK(parse_ratfunc("-q - 1 / q - 1") == RatFunc(ZPoly{1, 1}, ZPoly{1, -1}));
    CHECK(parse_ratfunc("1/2*q") == RatFunc(ZPoly{0, 1}, ZPoly{2}));
    CHECK(parse_rat("-1/2") == Rat(-1, 2));
}

TEST_CASE("text: malformed input") {
    CHECK_THROWS_AS(parse_qpoly("q^"), ParseError);
    CHECK_THROWS_AS(parse_qpoly("2*x"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1 / 0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_cyclo("1 / 1", CycloRing{3, 1}), ParseError);
}

TEST_CASE("text: random round trips") {
    Gen g(41);
    for (const auto& ring : {CycloRing{3, 0}, CycloRing{3, 1}, CycloRing{5, 1}, CycloRing{3, 2}}) {
        for (int it = 0; it < 50; ++it) {
            const CycloRF a = g.cyclo(ring, 4, 40);
            CHECK(parse_cyclo(to_string(a), ring) == a);
        }
    }
}
