#include "cls/algebra.hpp"

#include <ostream>

#include "cls/expr.hpp"

namespace cls {

std::string gen_name(const GenId& g) {
    return std::string(g.kind == GenKind::L ? "L" : "G") + "(" + std::to_string(g.grade) + ")";
}

AlgebraElement AlgebraElement::with_coeff(GenId g, const Poly& p) {
    AlgebraElement e;
    e.add(g, p);
    return e;
}

void AlgebraElement::add(GenId g, const Poly& p) {
    if (p.contains_lambda_var()) throw Error("lambda variable in algebra element coefficient");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LambdaValued::add(GenId g, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaValued LambdaValued::scaled(const Poly& p) const {
    LambdaValued r;
    for (const auto& [g, c] : terms_) r.add(g, c * p);
    return r;
}

LambdaValued& LambdaValued::operator+=(const LambdaValued& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LambdaValued& LambdaValued::operator-=(const LambdaValued& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LambdaValued LambdaValued::substituted(const std::map<VarId, Poly>& sigma) const {
    LambdaValued r;
    for (const auto& [g, c] : terms_) r.add(g, c.substitute(sigma));
    return r;
}

LambdaValued bracket_basis(GenId x, GenId y, const Poly& lam) {
    const Poly del = pdel();
    GenId out;
    Poly coeff;
    if (x.kind == GenKind::L && y.kind == GenKind::L) {
        out = {GenKind::L, x.grade + y.grade};
        coeff = del + lam.scaled(Rational(2));
    } else if (x.kind == GenKind::L && y.kind == GenKind::G) {
        out = {GenKind::G, x.grade + y.grade};
        coeff = del + lam.scaled(frac(3, 2));
    } else if (x.kind == GenKind::G && y.kind == GenKind::L) {
        out = {GenKind::G, x.grade + y.grade};
        coeff = del.scaled(frac(1, 2)) + lam.scaled(frac(3, 2));
    } else {
        out = {GenKind::L, x.grade + y.grade};
        coeff = Poly(2);
    }
    LambdaValued r;
    r.add(out, coeff);
    return r;
}

namespace {

// A bracket variable that is a plain lambda-variable must not already occur
// in the argument coefficients; composite variables (u+v) follow the inert
// nested-bracket convention instead.
void check_collision(const LambdaValued& arg, const Poly& lam) {
    if (lam.term_count() != 1) return;
    const auto& [m, c] = *lam.terms().begin();
    for (int i = 0; i < kVarCount; ++i) {
        VarId v = static_cast<VarId>(i);
        if (!is_lambda_var(v) || m.exponent(v) != 1 || m.total_degree() != 1) continue;
        for (const auto& [g, coeff] : arg.support())
            if (coeff.contains_var(v))
                throw VariableCollision(std::string("bracket variable ") + var_name(v) +
                                        " already occurs in an argument coefficient");
    }
}

}  // namespace

LambdaValued bracket(const LambdaValued& x, const LambdaValued& y, const Poly& lam) {
    check_collision(x, lam);
    check_collision(y, lam);
    const Poly minus_lam = -lam;
    const Poly del_plus_lam = pdel() + lam;
    LambdaValued result;
    for (const auto& [gx, cx] : x.support()) {
        Poly left = cx.substituted(VarId::Del, minus_lam);
        for (const auto& [gy, cy] : y.support()) {
            Poly right = cy.substituted(VarId::Del, del_plus_lam);
            result += bracket_basis(gx, gy, lam).scaled(left * right);
        }
    }
    return result;
}

LambdaValued bracket(const AlgebraElement& x, const AlgebraElement& y, const Poly& lam) {
    return bracket(LambdaValued(x), LambdaValued(y), lam);
}

LambdaValued check_skew(GenId x, GenId y) {
    const Poly u = pvar(VarId::Lam1);
    const Poly v = pvar(VarId::Lam2);
    LambdaValued lhs = bracket_basis(x, y, u);
    LambdaValued rhs = bracket_basis(y, x, v).substituted({{VarId::Lam2, -u - pdel()}});
    int sign = koszul_sign(x.parity(), y.parity());
    LambdaValued residual = lhs;
    if (sign > 0)
        residual += rhs;
    else
        residual -= rhs;
    return residual;
}

LambdaValued check_jacobi(GenId x, GenId y, GenId z) {
    const Poly u = pvar(VarId::Lam1);
    const Poly v = pvar(VarId::Lam2);
    LambdaValued ex = LambdaValued(AlgebraElement::generator(x));
    LambdaValued ey = LambdaValued(AlgebraElement::generator(y));
    LambdaValued ez = LambdaValued(AlgebraElement::generator(z));

    LambdaValued lhs = bracket(ex, bracket(ey, ez, v), u);
    LambdaValued rhs1 = bracket(bracket(ex, ey, u), ez, u + v);
    LambdaValued rhs2 = bracket(ey, bracket(ex, ez, u), v);

    LambdaValued residual = lhs;
    residual -= rhs1;
    if (koszul_sign(x.parity(), y.parity()) > 0)
        residual -= rhs2;
    else
        residual += rhs2;
    return residual;
}

bool check_grading(GenId x, GenId y) {
    LambdaValued out = bracket_basis(x, y, pvar(VarId::Lam1));
    Parity expected = x.parity() + y.parity();
    for (const auto& [g, c] : out.support()) {
        if (g.grade != x.grade + y.grade) return false;
        if (g.parity() != expected) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const LambdaValued& v) { return os << print_lambda_valued(v); }

}  // namespace cls
