#include "qeuler/errors.hpp"
#include "qeuler/ratfunc.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

using namespace qeuler;
using qeuler::testing::Gen;

TEST_CASE("ratfunc: canonical form is unique") {
    Gen g(21);
    for (int it = 0; it < 100; ++it) {
        const ZPoly n = g.zpoly(5, 10), d = g.nonzero_zpoly(5, 10), c = g.nonzero_zpoly(4, 10);
        const RatFunc a(n, d);
        const RatFunc b(n * c, d * c);
        CHECK(a == b);
        CHECK(a.den().lc() > 0);
        CHECK(gcd(a.num(), a.den()).is_constant());
    }
    CHECK(RatFunc(ZPoly{2, 2}, ZPoly{4}) == RatFunc(ZPoly{1, 1}, ZPoly{2}));
    CHECK(RatFunc(ZPoly{1}, ZPoly{-1, 0}) == RatFunc(-1));
    CHECK(RatFunc(ZPoly{}, ZPoly{3, 1}).den() == ZPoly{1});
}

TEST_CASE("ratfunc: field laws") {
    Gen g(22);
    for (int it = 0; it < 150; ++it) {
        const RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) {
            CHECK((a * b) / b == a);
            CHECK(b * b.inverse() == RatFunc(1));
        }
    }
}

TEST_CASE("ratfunc: evaluation is a homomorphism") {
    Gen g(23);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        const RatFunc a = g.ratfunc(), b = g.ratfunc();
        const Rat x = g.rational(7);
        Rat va, vb;
        try {
            va = a.eval(x);
            vb = b.eval(x);
        } catch (const PoleError&) {
            continue;
        }
        // Oracle: value of num over value of den, from the raw polynomials.
        CHECK(va == a.num().eval(x) / a.den().eval(x));
        CHECK((a + b).eval(x) == va + vb);
        CHECK((a * b).eval(x) == va * vb);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("ratfunc: q -> 1/q") {
    Gen g(24);
    for (int it = 0; it < 100; ++it) {
        const RatFunc a = g.ratfunc(), b = g.ratfunc();
        CHECK(a.subst_q_inverse().subst_q_inverse() == a);
        CHECK((a * b).subst_q_inverse() == a.subst_q_inverse() * b.subst_q_inverse());
        const Rat x = g.rational(5);
        if (x == 0) continue;
        try {
            CHECK(a.subst_q_inverse().eval(x) == a.eval(1 / x));
        } catch (const PoleError&) {
        }
    }
    CHECK(RatFunc::q_power(3).subst_q_inverse() == RatFunc::q_power(-3));
}

TEST_CASE("ratfunc: powers and errors") {
    const RatFunc q(ZPoly{0, 1});
    CHECK(q.pow(3) == RatFunc::q_power(3));
    CHECK(q.pow(-2) == RatFunc::q_power(-2));
    CHECK(RatFunc(ZPoly{1, 1}).pow(0) == RatFunc(1));
    CHECK_THROWS_AS(RatFunc(ZPoly{1}, ZPoly{}), DivisionByZero);
    CHECK_THROWS_AS(RatFunc().inverse(), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(ZPoly{1}, ZPoly{-1, 1}).eval(1), PoleError);
}

TEST_CASE("ratfunc: monic public form") {
    const RatFunc a(ZPoly{1, 2}, ZPoly{3, 6, 2});
    CHECK(a.denominator().coeffs.back() == 1);
    CHECK(a.numerator() == QPoly{{Rat(1, 2), Rat(1)}});
    CHECK(a.denominator() == QPoly{{Rat(3, 2), Rat(3), Rat(1)}});
}
