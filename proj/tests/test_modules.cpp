#include <doctest.h>

#include "cls/expr.hpp"
#include "cls/modules.hpp"
#include "helpers.hpp"

using namespace cls;
using cls::test::P;

namespace {

const Poly sym_a = pvar(VarId::ParA);
const Poly sym_b = pvar(VarId::ParB);
const Poly sym_c = pvar(VarId::ParC);

ModuleSpec sym_M() { return ModuleSpec::make(tag_ungraded(Family::M, sym_a, sym_b, sym_c)); }
ModuleSpec sym_Mprime() { return ModuleSpec::make(tag_ungraded(Family::Mprime, sym_a, sym_b, sym_c)); }

Poly coeff_at(const LambdaModuleElement& v, BasisId b) {
    auto it = v.support().find(b);
    return it == v.support().end() ? Poly() : it->second;
}

const BasisId ux{BasisKind::x, std::nullopt};
const BasisId uy{BasisKind::y, std::nullopt};

}  // namespace

TEST_CASE("make_module fills the family tables") {
    ModuleSpec m = sym_M();
    CHECK(m.entry(GenKind::G, 0, BasisKind::x) == Poly(1));
    CHECK(m.target_kind(GenKind::G, BasisKind::x) == BasisKind::y);
    CHECK(m.entry(GenKind::L, 0, BasisKind::x) == P("d + a*u + b"));
    CHECK(m.entry(GenKind::L, 2, BasisKind::x) == P("c^2*(d + a*u + b)"));
    CHECK(m.entry(GenKind::G, -1, BasisKind::y) == P("c^-1*(d + 2*a*u + b)"));

    ModuleSpec ma = ModuleSpec::make(tag_pattern(Family::MA, sym_b, Pattern::parse("01", 0)));
    CHECK(ma.entry(GenKind::L, 1, BasisKind::y, 0) == Poly(1));  // case (a_0, a_1) = (0, 1)
    CHECK(ma.entry(GenKind::L, 0, BasisKind::x, 1) == P("d + 1/2*u + b"));
    CHECK(ma.entry(GenKind::G, 1, BasisKind::x, 0) == Poly(1));       // a_{i+j} = 1
    CHECK(ma.entry(GenKind::G, 0, BasisKind::x, 0) == P("d + b"));    // a_{i+j} = 0
    CHECK(ma.entry(GenKind::G, 0, BasisKind::y, 1) == P("d + u + b"));  // a_j = 1

    SUBCASE("constant-zero pattern coincides with V_{0,b}") {
        ModuleSpec va = ModuleSpec::make(tag_pattern(Family::VA, sym_b, Pattern::parse("000", -1)));
        ModuleSpec v0 = ModuleSpec::make(tag_graded(Family::V, Poly(0), sym_b));
        CHECK(tables_equal(va, v0, {-1, 1}));
    }
    SUBCASE("constant-one pattern coincides with V_{1,b}") {
        ModuleSpec va = ModuleSpec::make(tag_pattern(Family::VA, sym_b, Pattern::parse("111", -1)));
        ModuleSpec v1 = ModuleSpec::make(tag_graded(Family::V, Poly(1), sym_b));
        CHECK(tables_equal(va, v1, {-1, 1}));
    }

    CHECK_THROWS_AS(ModuleSpec::make(FamilyTag{Family::MA, Poly(0), sym_b, std::nullopt, std::nullopt}),
                    MissingPattern);
    CHECK_THROWS_AS(ModuleSpec::make(tag_ungraded(Family::M, sym_a, sym_b, Poly(0))), ZeroParameterC);
}

TEST_CASE("G-table entries compose to d + 2a*u + b") {
    // The x-then-y composition of the G entries, with the outer factor
    // shifted by u, is the same quadratic-compatibility polynomial for both
    // loop families.
    const Poly expected = P("d + 2*a*u + b");
    for (Family f : {Family::M, Family::Mprime}) {
        ModuleSpec spec = ModuleSpec::make(tag_ungraded(f, sym_a, sym_b, Poly(1)));
        Poly gx = spec.entry(GenKind::G, 0, BasisKind::x);
        Poly gy = spec.entry(GenKind::G, 0, BasisKind::y);
        CHECK(gx.substituted(VarId::Del, P("d + u")) * gy == expected);
    }
}

TEST_CASE("acting through d shifts the coefficient") {
    const Poly u = pvar(VarId::Lam1);
    ModuleSpec spec = sym_M();
    ModuleElement v = ModuleElement::basis(ux);
    ModuleElement dv = ModuleElement::with_coeff(ux, pdel());
    for (GenKind k : {GenKind::L, GenKind::G}) {
        LambdaModuleElement lhs = spec.act({k, 0}, dv, u);
        LambdaModuleElement rhs = spec.act({k, 0}, v, u).scaled(pdel() + u);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pattern queries outside the window are errors") {
    Pattern p = Pattern::parse("01", 0);
    CHECK(p.bit(0) == 0);
    CHECK(p.bit(1) == 1);
    CHECK_THROWS_AS(p.bit(2), OutOfWindow);
    CHECK_THROWS_AS(p.bit(-1), OutOfWindow);
    CHECK_THROWS_AS(Pattern::parse("", 0), Error);
    CHECK_THROWS_AS(Pattern::parse("012", 0), Error);
}

TEST_CASE("ungraded entries scale by c^i across the whole table") {
    // The closure default generators {L_0, G_0} lean on this.
    for (Family f : {Family::M, Family::Mprime}) {
        ModuleSpec spec = ModuleSpec::make(tag_ungraded(f, Poly(frac(3, 2)), Poly(-1), Poly(frac(2, 5))));
        for (GenKind k : {GenKind::L, GenKind::G})
            for (BasisKind w : {BasisKind::x, BasisKind::y})
                for (int i = -2; i <= 2; ++i)
                    CHECK(spec.entry(k, i, w) ==
                          spec.entry(k, 0, w).scaled(frac(2, 5).pow(i)));
    }
}

TEST_CASE("act applies the sesquilinear shift") {
    const Poly u = pvar(VarId::Lam1);
    SUBCASE("M: G_1 on (d+b)y") {
        LambdaModuleElement out =
            sym_M().act({GenKind::G, 1}, ModuleElement::with_coeff(uy, P("d + b")), u);
        CHECK(coeff_at(out, ux) == P("c*(d + u + b)*(d + 2*a*u + b)"));
    }
    SUBCASE("Mprime with a = 1/2: G_0 on (d+b)y") {
        ModuleSpec spec = ModuleSpec::make(tag_ungraded(Family::Mprime, Poly(frac(1, 2)), sym_b, sym_c));
        LambdaModuleElement out = spec.act({GenKind::G, 0}, ModuleElement::with_coeff(uy, P("d + b")), u);
        CHECK(coeff_at(out, ux) == P("d + u + b"));
        // With a = 1/2 the G-on-x polynomial loses its lambda term.
        CHECK(spec.entry(GenKind::G, 0, BasisKind::x) == P("d + b"));
    }
    SUBCASE("graded V: L_0 on v_3") {
        ModuleSpec v = ModuleSpec::make(tag_graded(Family::V, sym_a, sym_b));
        LambdaModuleElement out =
            v.act({GenKind::L, 0}, ModuleElement::basis(BasisId{BasisKind::x, 3}), u);
        CHECK(coeff_at(out, BasisId{BasisKind::x, 3}) == P("d + a*u + b"));
    }
    SUBCASE("pattern window is hard") {
        ModuleSpec ma = ModuleSpec::make(tag_pattern(Family::MA, sym_b, Pattern::parse("01", 0)));
        CHECK_THROWS_AS(ma.act({GenKind::L, 2}, ModuleElement::basis(BasisId{BasisKind::x, 0}), u),
                        OutOfWindow);
    }
}

TEST_CASE("module axioms hold symbolically for M and Mprime") {
    AxiomReport rm = check_module_axioms(sym_M(), {-2, 2});
    CHECK(rm.all_ok());
    CHECK(rm.checked == 10 * 10 * 2);
    CHECK(rm.skipped == 0);

    AxiomReport rmp = check_module_axioms(sym_Mprime(), {-2, 2});
    CHECK(rmp.all_ok());
}

TEST_CASE("module axioms hold for the graded families") {
    CHECK(check_module_axioms(ModuleSpec::make(tag_graded(Family::Mg, sym_a, sym_b)), {-2, 2}).all_ok());
    CHECK(check_module_axioms(ModuleSpec::make(tag_graded(Family::Mgprime, sym_a, sym_b)), {-2, 2}).all_ok());

    Pattern p = Pattern::parse("0110", -2);
    AxiomReport rma = check_module_axioms(ModuleSpec::make(tag_pattern(Family::MA, Poly(2), p)), {-2, 1});
    CHECK(rma.all_ok());
    CHECK(rma.skipped > 0);  // boundary combinations are skipped, not asserted

    AxiomReport rmap = check_module_axioms(ModuleSpec::make(tag_pattern(Family::MAprime, Poly(2), p)), {-2, 1});
    CHECK(rmap.all_ok());

    // Rank-one families satisfy the L-only axioms as well.
    CHECK(check_module_axioms(ModuleSpec::make(tag_graded(Family::V, sym_a, sym_b)), {-2, 2}).all_ok());
    CHECK(check_module_axioms(ModuleSpec::make(tag_pattern(Family::VA, sym_b, p)), {-2, 1}).all_ok());
}

TEST_CASE("a mutated table fails the axiom check") {
    ModuleSpec broken = sym_M().with_mutation(GenKind::G, BasisKind::y, 0, P("d + 2*a*u - b"));
    AxiomReport r = check_module_axioms(broken, {-1, 1});
    CHECK_FALSE(r.all_ok());
    REQUIRE(r.first_failure() != nullptr);
    CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("restrict_to_clv") {
    SUBCASE("ungraded even part keeps the loop scaling") {
        ModuleSpec even = restrict_to_clv(sym_M(), Parity::even);
        CHECK(even.rank() == 1);
        CHECK_FALSE(even.graded());
        CHECK(even.entry(GenKind::L, 2, BasisKind::x) == P("c^2*(d + a*u + b)"));
        FamilyTag tag = classify_clv(even, {-2, 2});
        CHECK(tag.family == Family::V);
        CHECK(tag.a == sym_a);
        CHECK(tag.b == sym_b);
    }
    SUBCASE("graded families restrict to the asserted rank-one tables") {
        GradeWindow w{-2, 2};
        ModuleSpec mg = ModuleSpec::make(tag_graded(Family::Mg, sym_a, sym_b));
        CHECK(tables_equal(restrict_to_clv(mg, Parity::even),
                           ModuleSpec::make(tag_graded(Family::V, sym_a, sym_b)), w));
        CHECK(tables_equal(restrict_to_clv(mg, Parity::odd),
                           ModuleSpec::make(tag_graded(Family::V, sym_a - Poly(frac(1, 2)), sym_b)), w));

        ModuleSpec mgp = ModuleSpec::make(tag_graded(Family::Mgprime, sym_a, sym_b));
        CHECK(tables_equal(restrict_to_clv(mgp, Parity::odd),
                           ModuleSpec::make(tag_graded(Family::V, sym_a + Poly(frac(1, 2)), sym_b)), w));

        Pattern p = Pattern::parse("0110", -2);
        GradeWindow pw = p.window();
        ModuleSpec ma = ModuleSpec::make(tag_pattern(Family::MA, sym_b, p));
        CHECK(tables_equal(restrict_to_clv(ma, Parity::even),
                           ModuleSpec::make(tag_graded(Family::V, Poly(frac(1, 2)), sym_b)), pw));
        CHECK(tables_equal(restrict_to_clv(ma, Parity::odd),
                           ModuleSpec::make(tag_pattern(Family::VA, sym_b, p)), pw));

        ModuleSpec map = ModuleSpec::make(tag_pattern(Family::MAprime, sym_b, p));
        CHECK(tables_equal(restrict_to_clv(map, Parity::even),
                           ModuleSpec::make(tag_pattern(Family::VA, sym_b, p)), pw));
        CHECK(tables_equal(restrict_to_clv(map, Parity::odd),
                           ModuleSpec::make(tag_graded(Family::V, Poly(frac(1, 2)), sym_b)), pw));
    }
}

TEST_CASE("classify_rank2 reads tags back") {
    SUBCASE("worked example") {
        FamilyTag tag = tag_ungraded(Family::Mprime, Poly(3), Poly(frac(1, 2)), Poly(2));
        CHECK(classify_rank2(ModuleSpec::make(tag)) == tag);
        CHECK(tag.str() == "Mprime a=3 b=1/2 c=2");
    }
    SUBCASE("M at a = 0 is never confused with Mprime") {
        FamilyTag tag = tag_ungraded(Family::M, Poly(0), Poly(5), Poly(3));
        FamilyTag back = classify_rank2(ModuleSpec::make(tag));
        CHECK(back.family == Family::M);
        CHECK(back == tag);
    }
    SUBCASE("odd rescaling is normalized away") {
        FamilyTag tag = tag_ungraded(Family::M, sym_a, sym_b, sym_c);
        CHECK(classify_rank2(ModuleSpec::make(tag).rescale_odd(Rational(5))) == tag);
        FamilyTag tagp = tag_ungraded(Family::Mprime, Poly(frac(-1, 2)), Poly(1), Poly(frac(2, 3)));
        CHECK(classify_rank2(ModuleSpec::make(tagp).rescale_odd(frac(-7, 3))) == tagp);
    }
    SUBCASE("graded families roundtrip") {
        FamilyTag mg = tag_graded(Family::Mg, Poly(frac(1, 2)), Poly(-2));
        CHECK(classify_rank2(ModuleSpec::make(mg).rescale_odd(Rational(3))) == mg);
        FamilyTag mgp = tag_graded(Family::Mgprime, Poly(2), Poly(0));
        CHECK(classify_rank2(ModuleSpec::make(mgp)) == mgp);
        FamilyTag ma = tag_pattern(Family::MA, Poly(2), Pattern::parse("0110", -2));
        CHECK(classify_rank2(ModuleSpec::make(ma).rescale_odd(frac(1, 4))) == ma);
        FamilyTag map = tag_pattern(Family::MAprime, Poly(-1), Pattern::parse("010", 0));
        CHECK(classify_rank2(ModuleSpec::make(map)) == map);
    }
    SUBCASE("random parameter sweeps") {
        SplitMix64 rng(0x31415);
        for (int n = 0; n < 10; ++n) {
            Poly a(Rational(rng.in_range(-4, 4)));
            Poly b(Rational(rng.in_range(-4, 4)));
            Poly c(frac(rng.in_range(1, 5), rng.in_range(1, 3)));
            Rational gamma(rng.in_range(1, 9));
            for (Family f : {Family::M, Family::Mprime}) {
                FamilyTag tag = tag_ungraded(f, a, b, c);
                CHECK(classify_rank2(ModuleSpec::make(tag).rescale_odd(gamma)) == tag);
            }
            for (Family f : {Family::Mg, Family::Mgprime}) {
                FamilyTag tag = tag_graded(f, a, b);
                CHECK(classify_rank2(ModuleSpec::make(tag).rescale_odd(gamma)) == tag);
            }
        }
    }
    SUBCASE("a broken table does not classify") {
        ModuleSpec broken = sym_M().with_mutation(GenKind::L, BasisKind::y, 0, P("d + b"));
        CHECK_THROWS_AS(classify_rank2(broken), NoMatch);
    }
    SUBCASE("constant patterns classify as the uniform family they equal") {
        ModuleSpec ma0 = ModuleSpec::make(tag_pattern(Family::MA, Poly(2), Pattern::parse("000", -1)));
        FamilyTag back = classify_rank2(ma0);
        CHECK(back.family == Family::Mg);
        CHECK(back.a == Poly(frac(1, 2)));
    }
}
