#include <doctest.h>

#include "cls/expr.hpp"
#include "cls/submodules.hpp"
#include "helpers.hpp"

using namespace cls;
using cls::test::P;
using cls::test::random_poly;

namespace {

const ColumnLayout kUngraded{false, GradeWindow{}, 2};

RowVector row2(const Poly& px, const Poly& py) { return {px, py}; }

ModuleSpec numeric(Family f, const Rational& a, const Rational& b, const Rational& c) {
    return ModuleSpec::make(tag_ungraded(f, Poly(a), Poly(b), Poly(c)));
}

ModuleSpec graded(Family f, const Rational& a, const Rational& b) {
    return ModuleSpec::make(tag_graded(f, Poly(a), Poly(b)));
}

ModuleElement elem(const std::string& text) { return parse_module_element(text); }

}  // namespace

TEST_CASE("canonicalize yields Hermite-style pivots") {
    SUBCASE("gcd collapses multiples") {
        auto basis = CanonicalBasis::canonicalize(
            kUngraded, {row2(P("d + 2"), Poly()), row2(Poly(), Poly(1)), row2(P("(d + 2)^2"), Poly())});
        REQUIRE(basis.rows().size() == 2);
        CHECK(basis.rows()[0] == row2(P("d + 2"), Poly()));
        CHECK(basis.rows()[1] == row2(Poly(), Poly(1)));
        CHECK(basis.pivot_columns() == std::vector<int>{0, 1});
    }
    SUBCASE("identity rows are a fixed point") {
        auto basis = CanonicalBasis::canonicalize(kUngraded, {row2(Poly(1), Poly()), row2(Poly(), Poly(1))});
        CHECK(basis.is_full());
        CHECK(basis.str() == "{x, y}");
    }
    SUBCASE("pivots become monic") {
        auto basis = CanonicalBasis::canonicalize(kUngraded, {row2(Poly(3), Poly())});
        REQUIRE(basis.rows().size() == 1);
        CHECK(basis.rows()[0] == row2(Poly(1), Poly()));
    }
    SUBCASE("off-pivot entries are reduced below the pivot degree") {
        // Row 1 carries a y-entry of degree 2; the y-pivot has degree 1.
        auto basis = CanonicalBasis::canonicalize(
            kUngraded, {row2(P("d"), P("d^2 + 1")), row2(Poly(), P("d + 1"))});
        REQUIRE(basis.rows().size() == 2);
        CHECK(basis.rows()[0][1].degree_in(VarId::Del) < 1);
    }
}

TEST_CASE("reduce computes canonical remainders") {
    auto basis = CanonicalBasis::canonicalize(kUngraded, {row2(P("d + 2"), Poly()), row2(Poly(), Poly(1))});
    CHECK(basis.contains(row2(P("(d + 2)^3"), Poly())));
    CHECK(basis.reduce(row2(Poly(1), Poly())) == row2(Poly(1), Poly()));
    CHECK(basis.reduce(row2(Poly(), Poly())) == row2(Poly(), Poly()));
    CHECK_THROWS_AS(basis.reduce(RowVector{Poly(1)}), LayoutMismatch);
}

TEST_CASE("canonical basis is independent of the generating set") {
    SplitMix64 rng(0xD1CE);
    auto basis = CanonicalBasis::canonicalize(
        kUngraded, {row2(P("(d + 2)*(d - 1)"), P("d")), row2(Poly(), P("d^2 + 3"))});
    for (int n = 0; n < 10; ++n) {
        // Mix the rows by random polynomial combinations and re-canonicalize.
        Poly q1 = random_poly(rng, {VarId::Del}, 2);
        Poly q2 = random_poly(rng, {VarId::Del}, 2);
        std::vector<RowVector> mixed = basis.rows();
        RowVector extra = row2(basis.rows()[0][0] * q1 + basis.rows()[1][0] * q2,
                               basis.rows()[0][1] * q1 + basis.rows()[1][1] * q2);
        mixed.push_back(extra);
        CHECK(CanonicalBasis::canonicalize(kUngraded, mixed) == basis);
        CHECK(basis.contains(extra));
    }
}

TEST_CASE("closure reproduces the classified submodules") {
    SUBCASE("M_{0,2,3}: seed (d+2)x") {
        ClosureResult r = close_under_actions(numeric(Family::M, 0, 2, 3), {elem("(d + 2)*x")});
        CHECK(r.basis.str() == "{(d + 2)*x, y}");
        CHECK_FALSE(r.basis.is_full());
    }
    SUBCASE("Mprime_{1/2,2,3}: seed (d+2)y") {
        ClosureResult r =
            close_under_actions(numeric(Family::Mprime, frac(1, 2), 2, 3), {elem("(d + 2)*y")});
        CHECK(r.basis.str() == "{x, (d + 2)*y}");
    }
    SUBCASE("M_{1,0,1}: seed x closes to the full module") {
        ClosureResult r = close_under_actions(numeric(Family::M, 1, 0, 1), {elem("x")});
        CHECK(r.basis.is_full());
    }
    SUBCASE("closure is a fixed point of itself") {
        ModuleSpec spec = numeric(Family::M, 0, 2, 3);
        ClosureResult first = close_under_actions(spec, {elem("(d + 2)*x")});
        std::vector<ModuleElement> regenerate;
        for (const auto& row : first.basis.rows()) regenerate.push_back(row_to_element(kUngraded, row));
        ClosureResult second = close_under_actions(spec, regenerate);
        CHECK(second.basis == first.basis);
        CHECK(second.passes == 1);
    }
    SUBCASE("generators {L_0, G_0} suffice for the loop families") {
        std::vector<GenId> wide;
        for (int i = -2; i <= 2; ++i) {
            wide.push_back({GenKind::L, i});
            wide.push_back({GenKind::G, i});
        }
        for (auto& spec : {numeric(Family::M, 0, 2, 3), numeric(Family::Mprime, frac(1, 2), 2, 3),
                           numeric(Family::M, 2, -1, frac(1, 2))}) {
            for (const char* seed : {"(d + 2)*x", "x + d*y", "(d - 1)*y"}) {
                ClosureResult narrow = close_under_actions(spec, {elem(seed)});
                ClosureResult broad = close_under_actions(spec, {elem(seed)}, wide);
                CHECK(narrow.basis == broad.basis);
            }
        }
    }
    SUBCASE("symbolic parameters are rejected") {
        ModuleSpec sym = ModuleSpec::make(tag_ungraded(Family::M, pvar(VarId::ParA), Poly(0), Poly(1)));
        CHECK_THROWS_AS(close_under_actions(sym, {elem("x")}), Error);
    }
    SUBCASE("graded closure requires a window") {
        CHECK_THROWS_AS(close_under_actions(graded(Family::Mg, 1, 2), {elem("x(0)")}), WindowRequired);
    }
}

TEST_CASE("irreducibility probe") {
    SUBCASE("irreducible cases come back AllFull") {
        ProbeResult r = irreducibility_probe(numeric(Family::M, 1, 0, 1), 20, 3, 7);
        CHECK(r.all_full);
        CHECK(r.proper.empty());
        ProbeResult rp = irreducibility_probe(numeric(Family::Mprime, frac(-1, 2), 1, 2), 20, 3, 7);
        CHECK(rp.all_full);
    }
    SUBCASE("the reducible case finds exactly the classified submodule") {
        ProbeResult r = irreducibility_probe(numeric(Family::M, 0, 2, 3), 20, 3, 11);
        CHECK_FALSE(r.all_full);
        REQUIRE_FALSE(r.proper.empty());
        for (const auto& basis : r.proper) CHECK(basis.str() == "{(d + 2)*x, y}");
    }
    SUBCASE("fixed seeds are reproducible") {
        ProbeResult a = irreducibility_probe(numeric(Family::M, 0, 2, 3), 8, 3, 42);
        ProbeResult b = irreducibility_probe(numeric(Family::M, 0, 2, 3), 8, 3, 42);
        CHECK(a.all_full == b.all_full);
        CHECK(a.proper == b.proper);
    }
}

TEST_CASE("expected graded submodules") {
    GradeWindow w{-4, 4};
    SUBCASE("plain case for Mg with a = 1") {
        ModuleSpec spec = graded(Family::Mg, 1, 2);
        CanonicalBasis expected = expected_graded_submodule(spec, {0, 1}, {Rational(1), Rational(2)}, w);
        // Rows are the shifted copies x_k + 2 x_{k+1} and y_k + 2 y_{k+1}.
        ColumnLayout layout{true, w, 2};
        CHECK(expected.contains(element_to_row(layout, elem("x(0) + 2*x(1)"))));
        CHECK(expected.contains(element_to_row(layout, elem("y(-4) + 2*y(-3)"))));
        CHECK_FALSE(expected.contains(element_to_row(layout, elem("x(0)"))));

        // Action-closed: closing its rows adds nothing.
        std::vector<ModuleElement> rows;
        for (const auto& row : expected.rows()) rows.push_back(row_to_element(layout, row));
        ClosureResult again = close_under_actions(spec, rows, {}, w);
        CHECK(again.basis == expected);
        CHECK(again.passes == 1);

        // The closure of the single interior seed reproduces it.
        ClosureResult closure = close_under_actions(spec, {elem("x(0) + 2*x(1)")}, {}, w);
        CHECK(closure.basis == expected);
    }
    SUBCASE("(d+b)-factored case for Mgprime with a = 0") {
        ModuleSpec spec = graded(Family::Mgprime, 0, 2);
        CanonicalBasis expected = expected_graded_submodule(spec, {0}, {Rational(1)}, w);
        ColumnLayout layout{true, w, 2};
        CHECK(expected.contains(element_to_row(layout, elem("(d + 2)*x(0)"))));
        CHECK(expected.contains(element_to_row(layout, elem("y(3)"))));
        CHECK_FALSE(expected.contains(element_to_row(layout, elem("x(0)"))));

        std::vector<ModuleElement> rows;
        for (const auto& row : expected.rows()) rows.push_back(row_to_element(layout, row));
        ClosureResult again = close_under_actions(spec, rows, {}, w);
        CHECK(again.basis == expected);

        ClosureResult closure = close_under_actions(spec, {elem("(d + 2)*x(0)")}, {}, w);
        CHECK(closure.basis == expected);
    }
    SUBCASE("special case for Mg sits at a = 1/2, not a = 0") {
        // a = 1/2: {X_k, (d+b)Y_k} is closed.
        ModuleSpec half = graded(Family::Mg, frac(1, 2), 2);
        CanonicalBasis expected = expected_graded_submodule(half, {0}, {Rational(1)}, w);
        ColumnLayout layout{true, w, 2};
        CHECK(expected.contains(element_to_row(layout, elem("(d + 2)*y(0)"))));
        CHECK_FALSE(expected.contains(element_to_row(layout, elem("y(0)"))));
        std::vector<ModuleElement> rows;
        for (const auto& row : expected.rows()) rows.push_back(row_to_element(layout, row));
        CHECK(close_under_actions(half, rows, {}, w).basis == expected);

        // a = 0: the would-be {(d+b)X_k, Y_k} candidate is NOT action-closed
        // (G on a plain y-row lands on a plain x-row); its closure is larger.
        ModuleSpec zero = graded(Family::Mg, 0, 2);
        std::vector<ModuleElement> candidate;
        for (int k = w.lo; k <= w.hi; ++k) {
            candidate.push_back(elem("(d + 2)*x(" + std::to_string(k) + ")"));
            candidate.push_back(elem("y(" + std::to_string(k) + ")"));
        }
        ClosureResult closed = close_under_actions(zero, candidate, {}, w);
        ColumnLayout l{true, w, 2};
        CHECK(closed.basis.contains(element_to_row(l, elem("x(0)"))));  // escaped the candidate span
        // And the classified submodule for a = 0 is the plain one.
        CanonicalBasis plain = expected_graded_submodule(zero, {0}, {Rational(1)}, w);
        CHECK(plain.contains(element_to_row(l, elem("x(0)"))));
        std::vector<ModuleElement> rows0;
        for (const auto& row : plain.rows()) rows0.push_back(row_to_element(l, row));
        CHECK(close_under_actions(zero, rows0, {}, w).basis == plain);
    }
    SUBCASE("delta factors for MA") {
        Pattern p = Pattern::parse("01", 0);
        ModuleSpec spec = ModuleSpec::make(tag_pattern(Family::MA, Poly(2), p));
        GradeWindow pw = p.window();
        CanonicalBasis expected = expected_graded_submodule(spec, {0}, {Rational(1)}, pw);
        ColumnLayout layout{true, pw, 2};
        CHECK(expected.contains(element_to_row(layout, elem("x(0)"))));
        CHECK(expected.contains(element_to_row(layout, elem("(d + 2)*y(0)"))));  // delta_0 = d+b
        CHECK(expected.contains(element_to_row(layout, elem("y(1)"))));          // delta_1 = 1
        CHECK_FALSE(expected.contains(element_to_row(layout, elem("y(0)"))));

        std::vector<ModuleElement> rows;
        for (const auto& row : expected.rows()) rows.push_back(row_to_element(layout, row));
        CHECK(close_under_actions(spec, rows, {}, pw).basis == expected);
        CHECK(close_under_actions(spec, {elem("x(0)")}, {}, pw).basis == expected);
    }
    SUBCASE("delta factors for MAprime sit on the x side") {
        Pattern p = Pattern::parse("010", -1);
        ModuleSpec spec = ModuleSpec::make(tag_pattern(Family::MAprime, Poly(3), p));
        GradeWindow pw = p.window();
        CanonicalBasis expected = expected_graded_submodule(spec, {0}, {Rational(1)}, pw);
        ColumnLayout layout{true, pw, 2};
        CHECK(expected.contains(element_to_row(layout, elem("(d + 3)*x(-1)"))));  // bit -1 is 0
        CHECK(expected.contains(element_to_row(layout, elem("x(0)"))));           // bit 0 is 1
        CHECK(expected.contains(element_to_row(layout, elem("y(0)"))));
        CHECK_FALSE(expected.contains(element_to_row(layout, elem("x(-1)"))));

        std::vector<ModuleElement> rows;
        for (const auto& row : expected.rows()) rows.push_back(row_to_element(layout, row));
        CHECK(close_under_actions(spec, rows, {}, pw).basis == expected);
        CHECK(close_under_actions(spec, {elem("y(0)")}, {}, pw).basis == expected);
    }
    SUBCASE("window too small") {
        ModuleSpec spec = graded(Family::Mg, 1, 2);
        CHECK_THROWS_AS(expected_graded_submodule(spec, {0, 7}, {Rational(1), Rational(1)}, {0, 3}),
                        WindowTooSmall);
    }
}

TEST_CASE("closure of any single natural generator row reproduces the expected basis") {
    // Natural rows are the shifted combinations sum_i c_i x_{i+k} (and their
    // y-side partners); echelonized rows spanning the window ends need not
    // regenerate anything, since almost every shift leaves the window.
    GradeWindow w{-3, 3};
    SUBCASE("Mg plain case") {
        ModuleSpec spec = graded(Family::Mg, 1, 2);
        CanonicalBasis expected =
            expected_graded_submodule(spec, {0, 1}, {Rational(1), Rational(2)}, w);
        for (int k = w.lo; k + 1 <= w.hi; ++k) {
            std::string ks = std::to_string(k), k1 = std::to_string(k + 1);
            for (const std::string& seed :
                 {"x(" + ks + ") + 2*x(" + k1 + ")", "y(" + ks + ") + 2*y(" + k1 + ")"}) {
                ClosureResult r = close_under_actions(spec, {elem(seed)}, {}, w);
                CHECK(r.basis == expected);
            }
        }
    }
    SUBCASE("Mgprime (d+b)-factored case") {
        ModuleSpec spec = graded(Family::Mgprime, 0, 2);
        CanonicalBasis expected = expected_graded_submodule(spec, {0}, {Rational(1)}, w);
        for (int k = w.lo; k <= w.hi; ++k) {
            std::string ks = std::to_string(k);
            for (const std::string& seed : {"(d + 2)*x(" + ks + ")", "y(" + ks + ")"}) {
                ClosureResult r = close_under_actions(spec, {elem(seed)}, {}, w);
                CHECK(r.basis == expected);
            }
        }
    }
    SUBCASE("MA delta case") {
        Pattern p = Pattern::parse("01", 0);
        ModuleSpec spec = ModuleSpec::make(tag_pattern(Family::MA, Poly(2), p));
        CanonicalBasis expected = expected_graded_submodule(spec, {0}, {Rational(1)}, p.window());
        for (const char* seed : {"x(0)", "x(1)", "(d + 2)*y(0)", "y(1)"}) {
            ClosureResult r = close_under_actions(spec, {elem(seed)}, {}, p.window());
            CHECK(r.basis == expected);
        }
    }
}

TEST_CASE("canonicalize is idempotent and prints canonically") {
    auto basis = CanonicalBasis::canonicalize(
        kUngraded, {row2(P("2*d + 4"), P("d")), row2(P("d^2"), P("1"))});
    CHECK(CanonicalBasis::canonicalize(kUngraded, basis.rows()) == basis);
    CHECK(CanonicalBasis(kUngraded).str() == "0");
}
