#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartprod/groebner.hpp"
#include "cartprod/parse.hpp"
#include "support.hpp"

using namespace cartprod;
using testsupport::Rng;
using testsupport::random_polynomial;

namespace {
const Field Q = Field::rationals();

std::vector<Polynomial> parse_all(const std::vector<std::string>& ss, const UniversePtr& uni,
                                  const Field& f = Q) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, uni, f));
    return out;
}

void check_is_reduced_basis(const GroebnerBasis& gb, Budget& budget) {
    const auto& gens = gb.generators();
    // every S-polynomial reduces to zero
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Polynomial sp = s_polynomial(gens[i], gens[j], gb.order());
            CHECK(normal_form(sp, gb, budget).is_zero());
        }
    // auto-reduced with monic leads
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(gens[i].leading_term(gb.order()).second.is_one());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            auto lm = gens[j].leading_term(gb.order()).first;
            for (const auto& [m, c] : gens[i].terms()) CHECK(!lm.divides(m));
        }
    }
}
} // namespace

TEST_CASE("linear coprime generators are already a basis") {
    auto uni = Universe::make({"x", "z"});
    Budget b;
    auto gb = buchberger(parse_all({"x-2", "z+3"}, uni), MonomialOrder::grevlex(), b);
    CHECK(gb.generators().size() == 2);
    CHECK(gb.generators()[0] == parse_polynomial("z+3", uni, Q));
    CHECK(gb.generators()[1] == parse_polynomial("x-2", uni, Q));
    check_is_reduced_basis(gb, b);
}

TEST_CASE("classic lex reduction") {
    auto uni = Universe::make({"x", "y"});
    Budget b;
    auto gb = buchberger(parse_all({"x*y-1", "y^2-1"}, uni), MonomialOrder::lex(), b);
    REQUIRE(gb.generators().size() == 2);
    CHECK(gb.generators()[0] == parse_polynomial("y^2-1", uni, Q));
    CHECK(gb.generators()[1] == parse_polynomial("x-y", uni, Q));
    check_is_reduced_basis(gb, b);
}

TEST_CASE("unit ideal") {
    auto uni = Universe::make({"x"});
    Budget b;
    auto gb = buchberger(parse_all({"1"}, uni), MonomialOrder::lex(), b);
    CHECK(gb.is_unit_ideal());
    CHECK(buchberger(parse_all({"x", "x-1"}, uni), MonomialOrder::lex(), b).is_unit_ideal());
}

TEST_CASE("zero ideal") {
    auto uni = Universe::make({"x"});
    Budget b;
    auto gb = buchberger({}, MonomialOrder::lex(), b);
    CHECK(gb.is_zero_ideal());
    CHECK(normal_form(parse_polynomial("x+1", uni, Q), gb, b) ==
          parse_polynomial("x+1", uni, Q));
}

TEST_CASE("normal form is idempotent and canonical") {
    auto uni = Universe::make({"x", "y", "z"});
    Budget b;
    Rng rng(5);
    auto gens = parse_all({"x^2-y", "y*z-1"}, uni);
    auto gb = buchberger(gens, MonomialOrder::grevlex(), b);
    check_is_reduced_basis(gb, b);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_polynomial(rng, uni, Q, 4, 5);
        Polynomial nf = normal_form(f, gb, b);
        CHECK(normal_form(nf, gb, b) == nf);
        // member reduces to zero
        Polynomial member = gens[0] * random_polynomial(rng, uni, Q, 2, 3) +
                            gens[1] * random_polynomial(rng, uni, Q, 2, 3);
        CHECK(normal_form(member, gb, b).is_zero());
    }
}

TEST_CASE("fiber polynomial membership") {
    auto uni = Universe::make({"x_1", "x_2", "y_1", "y_2"});
    Budget b;
    auto gens = parse_all({"x_2+1", "y_1"}, uni);
    auto gb = buchberger(gens, MonomialOrder::grevlex(), b);
    Polynomial f = parse_polynomial("x_1*y_1+x_2+1", uni, Q);
    CHECK(normal_form(f, gb, b).is_zero());
}

TEST_CASE("membership with verified witness") {
    auto uni = Universe::make({"x", "z"});
    Budget b;
    Polynomial f = parse_polynomial("x*z+1", uni, Q);
    auto gens = parse_all({"x-2", "z+1/2"}, uni);
    auto res = ideal_member(f, gens, MonomialOrder::grevlex(), b);
    REQUIRE(res.member);
    Polynomial recon(uni, Q);
    for (std::size_t j = 0; j < gens.size(); ++j) recon += res.cofactors[j] * gens[j];
    CHECK(recon == f);

    CHECK(ideal_member(parse_polynomial("x+z", uni, Q), parse_all({"x", "z"}, uni),
                       MonomialOrder::grevlex(), b)
              .member);
    CHECK(!ideal_member(parse_polynomial("z", uni, Q), parse_all({"x"}, uni),
                        MonomialOrder::grevlex(), b)
               .member);
}

TEST_CASE("membership equals normal-form vanishing across orders") {
    auto uni = Universe::make({"x", "y", "z"});
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        std::vector<Polynomial> gens;
        std::size_t ng = 1 + rng.below(2);
        for (std::size_t i = 0; i < ng; ++i) gens.push_back(random_polynomial(rng, uni, Q, 2, 3));
        Polynomial f = random_polynomial(rng, uni, Q, 3, 4);
        if (t % 3 == 0) {
            // plant a member
            f = gens[0] * random_polynomial(rng, uni, Q, 1, 3);
        }
        std::optional<bool> verdict;
        for (const auto& order :
             {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
            Budget b;
            auto gb = buchberger(gens, order, b);
            bool member_nf = normal_form(f, gb, b).is_zero();
            bool member = ideal_member(f, gens, order, b).member;
            CHECK(member == member_nf);
            if (!verdict) verdict = member;
            CHECK(*verdict == member);
        }
    }
}

TEST_CASE("radical pair membership biconditional") {
    // G and H irreducible in disjoint variable pairs make (G, H) radical:
    // f in the ideal iff f^2 is.
    auto uni = Universe::make({"x", "y", "z", "t"});
    auto gens = parse_all({"x^2-y-1", "z^2-t-1"}, uni);
    Budget b;
    auto gb = buchberger(gens, MonomialOrder::grevlex(), b);
    Rng rng(29);
    int members = 0;
    for (int k = 0; k < 100; ++k) {
        Polynomial f = random_polynomial(rng, uni, Q, 3, 5);
        if (k % 4 == 0)
            f = gens[0] * random_polynomial(rng, uni, Q, 1, 2) +
                gens[1] * random_polynomial(rng, uni, Q, 1, 2);
        bool in1 = normal_form(f, gb, b).is_zero();
        bool in2 = normal_form(f * f, gb, b).is_zero();
        CHECK(in1 == in2);
        members += in1;
    }
    CHECK(members > 0);
}

TEST_CASE("consistency over the closure") {
    auto uni = Universe::make({"x", "y"});
    Budget b;
    CHECK(!is_consistent_over_closure(parse_all({"x", "x-1"}, uni), b));
    CHECK(is_consistent_over_closure(parse_all({"x^2+y^2-1"}, uni), b));

    // radical membership through the auxiliary variable: 1 - u(x+z), x, z
    auto uni3 = Universe::make({"x", "z", "u"});
    CHECK(!is_consistent_over_closure(parse_all({"1-u*(x+z)", "x", "z"}, uni3), b));
    // y is not in sqrt((x)):
    auto uni4 = Universe::make({"x", "y", "u"});
    CHECK(is_consistent_over_closure(parse_all({"1-u*y", "x"}, uni4), b));
}

TEST_CASE("elimination") {
    Budget b;
    // twisted cubic: eliminate t from (a - t^2, b - t^3)
    auto uni = Universe::make({"t", "a", "b"});
    auto res = eliminate(parse_all({"a-t^2", "b-t^3"}, uni), {0}, b);
    REQUIRE(res.generators.size() == 1);
    Polynomial rel = res.generators[0];
    CHECK((rel == parse_polynomial("a^3-b^2", uni, Q) ||
           rel == parse_polynomial("b^2-a^3", uni, Q)));
    // check by substitution a = t^2, b = t^3
    std::map<std::size_t, Polynomial> sub;
    sub.emplace(1, parse_polynomial("t^2", uni, Q));
    sub.emplace(2, parse_polynomial("t^3", uni, Q));
    CHECK(rel.substitute(sub).is_zero());

    // empty drop set: reduced basis of the input ideal
    auto res2 = eliminate(parse_all({"a-t^2"}, uni), {}, b);
    CHECK(res2.generators.size() == 1);

    // full projection of a graph is the zero ideal
    auto uni2 = Universe::make({"x", "y"});
    auto res3 = eliminate(parse_all({"x-y"}, uni2), {0}, b);
    CHECK(res3.generators.empty());
}

TEST_CASE("budget exhaustion is loud") {
    auto uni = Universe::make({"x", "y", "z"});
    Budget tiny;
    tiny.max_steps = 3;
    auto gens = parse_all({"x^2*y-z", "y^2*z-x", "z^2*x-y"}, uni);
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), tiny), budget_exhausted);
}

TEST_CASE("random bases satisfy the Buchberger criterion") {
    auto uni = Universe::make({"x", "y", "z"});
    Rng rng(31);
    for (int t = 0; t < 15; ++t) {
        std::vector<Polynomial> gens;
        std::size_t ng = 1 + rng.below(3);
        for (std::size_t i = 0; i < ng; ++i) gens.push_back(random_polynomial(rng, uni, Q, 2, 3));
        Budget b;
        auto gb = buchberger(gens, MonomialOrder::grevlex(), b);
        check_is_reduced_basis(gb, b);
        // inputs reduce to zero
        for (const auto& g : gens) CHECK(normal_form(g, gb, b).is_zero());
    }
}

TEST_CASE("deterministic output") {
    auto uni = Universe::make({"x", "y", "z"});
    auto gens = parse_all({"x^2+y^2+z^2-1", "x*y-z", "x-y+z"}, uni);
    Budget b1, b2;
    auto gb1 = buchberger(gens, MonomialOrder::grevlex(), b1);
    auto gb2 = buchberger(gens, MonomialOrder::grevlex(), b2);
    REQUIRE(gb1.generators().size() == gb2.generators().size());
    for (std::size_t i = 0; i < gb1.generators().size(); ++i)
        CHECK(gb1.generators()[i] == gb2.generators()[i]);
}

TEST_CASE("prime field basis") {
    auto uni = Universe::make({"x", "y"});
    Field gf = Field::prime_field(101);
    Budget b;
    auto gens = parse_all({"x*y-1", "y^2-1"}, uni, gf);
    auto gb = buchberger(gens, MonomialOrder::lex(), b);
    CHECK(gb.generators().size() == 2);
    check_is_reduced_basis(gb, b);
}
