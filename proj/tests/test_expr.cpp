#include <doctest.h>

#include "cls/expr.hpp"
#include "helpers.hpp"

using namespace cls;
using cls::test::P;
using cls::test::random_poly;

TEST_CASE("parse_poly basics") {
    CHECK(P("d + 2*u") == pdel() + pvar(VarId::Lam1).scaled(Rational(2)));
    CHECK(P("c^-2*(d + a*u + b)") ==
          Poly::term(Monomial::var(VarId::ParC, -2), Rational(1)) *
              (pdel() + pvar(VarId::ParA) * pvar(VarId::Lam1) + pvar(VarId::ParB)));
    CHECK(P("3/2") == Poly(frac(3, 2)));
    CHECK(P("-d") == -pdel());
    CHECK(P("0") == Poly());
    CHECK(P("(d + b)^2") == P("d^2 + 2*b*d + b^2"));
}

TEST_CASE("parse_poly errors carry positions") {
    SUBCASE("syntax error at the stray operator") {
        try {
            P("d + * 2");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.line == 1);
            CHECK(e.col == 5);
        }
    }
    CHECK_THROWS_AS(P("d + * 2"), SyntaxError);
    CHECK_THROWS_AS(P("z + 1"), UnknownIdentifier);
    CHECK_THROWS_AS(P("x + 1"), UnknownIdentifier);  // atoms are not poly vars
    CHECK_THROWS_AS(P("d^-1"), IllegalExponent);
    CHECK_THROWS_AS(P("(d + u)^-2"), IllegalExponent);
    CHECK_THROWS_AS(P("d d"), SyntaxError);  // '*' is mandatory
    CHECK_THROWS_AS(P("1/0"), SyntaxError);
    CHECK_NOTHROW(P("c^-2"));
}

TEST_CASE("parse_element in module context") {
    ModuleElement e = parse_module_element("(d + b)*x + y");
    REQUIRE(e.support().size() == 2);
    CHECK(e.support().at(BasisId{BasisKind::x, std::nullopt}) == P("d + b"));
    CHECK(e.support().at(BasisId{BasisKind::y, std::nullopt}) == Poly(1));

    ModuleElement g = parse_module_element("x(0) + 2*x(1)");
    CHECK(g.support().at(BasisId{BasisKind::x, 0}) == Poly(1));
    CHECK(g.support().at(BasisId{BasisKind::x, 1}) == Poly(2));

    CHECK(parse_module_element("0").is_zero());
    CHECK_THROWS_AS(parse_module_element("u*x"), LambdaVariableForbidden);
    CHECK_THROWS_AS(parse_module_element("L(0)"), WrongContext);
    CHECK_THROWS_AS(parse_module_element("x + y(1)"), SyntaxError);  // mixed grading
    CHECK_THROWS_AS(parse_module_element("d + 1"), SyntaxError);    // no atom
}

TEST_CASE("parse_element in algebra context") {
    AlgebraElement e = parse_algebra_element("L(0) - 3*G(2)");
    REQUIRE(e.support().size() == 2);
    CHECK(e.support().at(GenId{GenKind::L, 0}) == Poly(1));
    CHECK(e.support().at(GenId{GenKind::G, 2}) == Poly(-3));

    CHECK(parse_algebra_element("(d + 1)*L(-2)").support().at(GenId{GenKind::L, -2}) == P("d + 1"));
    CHECK_THROWS_AS(parse_algebra_element("x"), WrongContext);
    CHECK_THROWS_AS(parse_algebra_element("u*L(0)"), LambdaVariableForbidden);
    CHECK_THROWS_AS(parse_algebra_element("L"), SyntaxError);
}

TEST_CASE("canonical printing matches the worked examples") {
    CHECK(print_poly(P("d + 2*u")) == "d + 2*u");
    CHECK(print_poly(Poly()) == "0");
    ModuleElement e;
    e.add(BasisId{BasisKind::x, std::nullopt}, P("d + 2"));
    CHECK(print_module_element(e) == "(d + 2)*x");
}

TEST_CASE("print/parse roundtrip on random polynomials") {
    SplitMix64 rng(0x9999);
    const std::vector<VarId> all = {VarId::Del,  VarId::Lam1, VarId::Lam2, VarId::Lam3,
                                    VarId::ParA, VarId::ParB, VarId::ParC};
    for (int n = 0; n < 60; ++n) {
        Poly p = random_poly(rng, all, 3);
        CHECK(P(print_poly(p)) == p);
    }
    // Laurent exponents survive the roundtrip.
    Poly q = Poly::term(Monomial::var(VarId::ParC, -3), frac(-7, 2)) + P("d^2*u");
    CHECK(P(print_poly(q)) == q);
}

TEST_CASE("roundtrip on random module elements") {
    SplitMix64 rng(0xAAAA);
    for (int n = 0; n < 30; ++n) {
        ModuleElement e;
        for (int k = 0; k < 3; ++k) {
            BasisId id{rng.in_range(0, 1) ? BasisKind::y : BasisKind::x, rng.in_range(-2, 2)};
            e.add(id, random_poly(rng, {VarId::Del, VarId::ParB}, 2));
        }
        CHECK(parse_module_element(print_module_element(e)) == e);
    }
}

TEST_CASE("printing is injective on distinct canonical values") {
    SplitMix64 rng(0xBBBB);
    std::vector<Poly> polys;
    for (int n = 0; n < 40; ++n) polys.push_back(random_poly(rng, {VarId::Del, VarId::Lam1}, 3));
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i + 1; j < polys.size(); ++j)
            if (polys[i] != polys[j]) CHECK(print_poly(polys[i]) != print_poly(polys[j]));
}
