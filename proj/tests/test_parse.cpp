#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartprod/parse.hpp"
#include "support.hpp"

using namespace cartprod;
using testsupport::Rng;
using testsupport::random_polynomial;

TEST_CASE("parses the sharp-example polynomial") {
    auto uni = Universe::make({"x", "y", "a", "b"});
    Polynomial p = parse_polynomial("x^2+y^2+1-2*a*x-2*b*y", uni, Field::rationals());
    CHECK(p.term_count() == 5);
    CHECK(p.degree() == 2u);
}

TEST_CASE("expansion with cancellation") {
    auto uni = Universe::make({"x", "y", "z", "t"});
    Polynomial p =
        parse_polynomial("(x-z)^2+(y-t)^2+1-z^2-t^2", uni, Field::rationals());
    // z^2 and t^2 both cancel: x^2 - 2xz + y^2 - 2yt + 1
    Polynomial expected(uni, Field::rationals());
    auto add = [&](std::vector<std::uint32_t> e, long c) {
        expected.add_term(Monomial(std::move(e)), Scalar::from_int(Field::rationals(), c));
    };
    add({2, 0, 0, 0}, 1);
    add({0, 2, 0, 0}, 1);
    add({1, 0, 1, 0}, -2);
    add({0, 1, 0, 1}, -2);
    add({0, 0, 0, 0}, 1);
    CHECK(p == expected);
    CHECK(p.term_count() == 5);
}

TEST_CASE("zero polynomial") {
    auto uni = Universe::make({"x"});
    Polynomial p = parse_polynomial("0", uni, Field::rationals());
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(parse_polynomial("x-x", uni, Field::rationals()).is_zero());
}

TEST_CASE("errors carry positions") {
    auto uni = Universe::make({"x", "y"});
    Field q = Field::rationals();
    CHECK_THROWS_AS(parse_polynomial("x+*y", uni, q), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x+w", uni, q), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x^(2)", uni, q), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x+y", uni, q), parse_error);
    try {
        parse_polynomial("x+w", uni, q);
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    // implicit multiplication is rejected
    CHECK_THROWS_AS(parse_polynomial("2x", uni, q), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x y", uni, q), parse_error);
}

TEST_CASE("imaginary unit gating") {
    auto uni = Universe::make({"x"});
    CHECK_THROWS_AS(parse_polynomial("i*x", uni, Field::rationals()), parse_error);
    Polynomial p = parse_polynomial("i*x", uni, Field::gaussian_rationals());
    CHECK(p.term_count() == 1);
    // a universe variable named i would be ambiguous under qi
    auto bad = Universe::make({"i", "x"});
    CHECK_THROWS(parse_polynomial("i", bad, Field::gaussian_rationals()));
    // ... but is a plain variable elsewhere
    CHECK(parse_polynomial("i", bad, Field::rationals()).term_count() == 1);
}

TEST_CASE("print/parse round trip") {
    auto uni = Universe::make({"x", "y", "z"});
    for (Field f : {Field::rationals(), Field::gaussian_rationals(), Field::prime_field(101)}) {
        Rng rng(11);
        for (int t = 0; t < 60; ++t) {
            Polynomial p = random_polynomial(rng, uni, f, 4, 6);
            if (f.tag == FieldTag::QI && t % 2) {
                p = p.scaled(Scalar::complex(f, mpq_class(1, 2), mpq_class(-3, 4)));
            }
            CHECK(parse_polynomial(p.str(), uni, f) == p);
        }
    }
    CHECK(Polynomial::zero(uni, Field::rationals()).str() == "0");
}
