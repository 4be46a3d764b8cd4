#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartprod/scalar.hpp"
#include "support.hpp"

using namespace cartprod;
using testsupport::Rng;
using testsupport::random_scalar;

TEST_CASE("field parsing") {
    CHECK(Field::parse("q").tag == FieldTag::Q);
    CHECK(Field::parse("qi").tag == FieldTag::QI);
    CHECK(Field::parse("gf:101").p == 101);
    CHECK_THROWS(Field::parse("gf:102"));
    CHECK_THROWS(Field::parse("r"));
}

static void field_axioms(const Field& f, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 1000; ++t) {
        Scalar a = random_scalar(rng, f);
        Scalar b = random_scalar(rng, f);
        Scalar c = random_scalar(rng, f);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar::zero(f));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar::one(f));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("field axioms hold exactly") {
    field_axioms(Field::rationals(), 1);
    field_axioms(Field::gaussian_rationals(), 2);
    field_axioms(Field::prime_field(32003), 3);
}

TEST_CASE("gaussian arithmetic") {
    Field f = Field::gaussian_rationals();
    Scalar i = Scalar::imaginary_unit(f);
    CHECK(i * i == -Scalar::one(f));
    Scalar z = Scalar::complex(f, 3, 4);
    CHECK(z * z.inverse() == Scalar::one(f));
    CHECK(z.str() == "3+4*i");
    CHECK((-z).str() == "-3-4*i");
}

TEST_CASE("exact square roots") {
    Field q = Field::rationals();
    CHECK(Scalar::from_mpq(q, mpq_class(9, 4)).sqrt().value() ==
          Scalar::from_mpq(q, mpq_class(3, 2)));
    CHECK(!Scalar::from_int(q, 2).sqrt().has_value());
    CHECK(!Scalar::from_int(q, -1).sqrt().has_value());

    Field qi = Field::gaussian_rationals();
    // (1+i)^2 = 2i
    Scalar s = Scalar::complex(qi, 0, 2).sqrt().value();
    CHECK(s * s == Scalar::complex(qi, 0, 2));
    // -1 has root i
    Scalar r = Scalar::from_int(qi, -1).sqrt().value();
    CHECK(r * r == Scalar::from_int(qi, -1));
    // i itself needs sqrt(1/2), which is not in qi
    CHECK(!Scalar::imaginary_unit(qi).sqrt().has_value());
}

TEST_CASE("imaginary unit requires qi") {
    CHECK_THROWS(Scalar::imaginary_unit(Field::rationals()));
    CHECK_THROWS(Scalar::complex(Field::rationals(), 1, 1));
}

TEST_CASE("prime field reduction") {
    CHECK(mod_reduce(mpq_class(1, 2), 7) == 4); // 2*4 = 8 = 1 mod 7
    CHECK(mod_reduce(mpq_class(-3), 7) == 4);
    CHECK_THROWS(mod_reduce(mpq_class(1, 7), 7));
}
