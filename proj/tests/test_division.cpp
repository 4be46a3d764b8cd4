#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartprod/parse.hpp"
#include "cartprod/polynomial.hpp"
#include "support.hpp"

using namespace cartprod;
using testsupport::Rng;
using testsupport::random_polynomial;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("single linear divisor under lex") {
    auto uni = Universe::make({"x", "z"});
    Polynomial f = parse_polynomial("x*z+1", uni, Q);
    Polynomial g = parse_polynomial("x-2", uni, Q);
    auto res = divide_multi(f, {g}, MonomialOrder::lex());
    CHECK(res.quotients[0] == parse_polynomial("z", uni, Q));
    CHECK(res.remainder == parse_polynomial("2*z+1", uni, Q));
}

TEST_CASE("exact multiples leave no remainder") {
    auto uni = Universe::make({"x", "y"});
    Polynomial g = parse_polynomial("x^2+y", uni, Q);
    Polynomial p = parse_polynomial("x*y-3", uni, Q);
    auto res = divide_multi(g * p, {g}, MonomialOrder::grevlex());
    CHECK(res.remainder.is_zero());
    CHECK(res.quotients[0] == p);
}

TEST_CASE("no division possible") {
    auto uni = Universe::make({"x", "y"});
    Polynomial f = parse_polynomial("y", uni, Q);
    auto res = divide_multi(f, {parse_polynomial("x", uni, Q)}, MonomialOrder::lex());
    CHECK(res.quotients[0].is_zero());
    CHECK(res.remainder == f);
}

TEST_CASE("division identity and reduced remainder on random inputs") {
    auto uni = Universe::make({"x", "y", "z", "w"});
    Rng rng(23);
    for (const auto& order :
         {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
        for (int t = 0; t < 50; ++t) {
            Polynomial f = random_polynomial(rng, uni, Q, 4, 6);
            std::vector<Polynomial> gs;
            std::size_t ng = 1 + rng.below(3);
            for (std::size_t i = 0; i < ng; ++i) gs.push_back(random_polynomial(rng, uni, Q, 2, 3));
            auto res = divide_multi(f, gs, order);
            Polynomial recon = res.remainder;
            for (std::size_t i = 0; i < gs.size(); ++i) recon += res.quotients[i] * gs[i];
            CHECK(recon == f);
            for (const auto& [m, c] : res.remainder.terms()) {
                for (const auto& g : gs) CHECK(!g.leading_term(order).first.divides(m));
            }
        }
    }
}

TEST_CASE("divisor preconditions") {
    auto uni = Universe::make({"x"});
    Polynomial f = parse_polynomial("x", uni, Q);
    CHECK_THROWS(divide_multi(f, {}, MonomialOrder::lex()));
    CHECK_THROWS(divide_multi(f, {Polynomial::zero(uni, Q)}, MonomialOrder::lex()));
}
