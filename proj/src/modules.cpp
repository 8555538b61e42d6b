#include "cls/modules.hpp"

#include <algorithm>

#include "cls/expr.hpp"

namespace cls {

namespace {

const Poly kDel = pdel();
const Poly kLam = pvar(VarId::Lam1);
const Poly kHalf = Poly(frac(1, 2));

Poly linear(const Poly& lam_coeff, const Poly& const_coeff) {
    return kDel + kLam * lam_coeff + const_coeff;
}

int rule_index(GenKind k, BasisKind w) {
    return 2 * static_cast<int>(k) + static_cast<int>(w);
}

// a and b may be rationals or polynomial expressions in the symbols a, b.
bool is_param_value(const Poly& p) {
    return !p.contains_var(VarId::Del) && !p.contains_lambda_var() && !p.contains_var(VarId::ParC);
}

bool is_c_value(const Poly& p) {
    if (p.is_constant()) return !p.constant_value().is_zero();
    return p == pvar(VarId::ParC);
}

}  // namespace

// ---- Pattern ----

Pattern::Pattern(int lo, std::vector<int> bits) : lo_(lo), bits_(std::move(bits)) {
    if (bits_.empty()) throw Error("empty pattern");
    for (int b : bits_)
        if (b != 0 && b != 1) throw Error("pattern bits must be 0 or 1");
}

Pattern Pattern::parse(const std::string& bits, int lo) {
    std::vector<int> v;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw Error("pattern bits must be 0 or 1");
        v.push_back(ch - '0');
    }
    return Pattern(lo, std::move(v));
}

int Pattern::bit(int i) const {
    if (i < lo() || i > hi())
        throw OutOfWindow("pattern queried at grade " + std::to_string(i) + " outside [" +
                          std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    return bits_[static_cast<size_t>(i - lo_)];
}

bool Pattern::constant() const {
    return std::all_of(bits_.begin(), bits_.end(), [&](int b) { return b == bits_.front(); });
}

std::string Pattern::bits_str() const {
    std::string s;
    for (int b : bits_) s += static_cast<char>('0' + b);
    return s;
}

// ---- Family / FamilyTag ----

std::string family_name(Family f) {
    switch (f) {
        case Family::M: return "M";
        case Family::Mprime: return "Mprime";
        case Family::Mg: return "Mg";
        case Family::Mgprime: return "Mgprime";
        case Family::MA: return "MA";
        case Family::MAprime: return "MAprime";
        case Family::V: return "V";
        case Family::VA: return "VA";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "M") return Family::M;
    if (name == "Mprime") return Family::Mprime;
    if (name == "Mg") return Family::Mg;
    if (name == "Mgprime") return Family::Mgprime;
    if (name == "MA") return Family::MA;
    if (name == "MAprime") return Family::MAprime;
    if (name == "V") return Family::V;
    if (name == "VA") return Family::VA;
    throw Error("unknown family name: " + name);
}

bool family_graded(Family f) {
    return f == Family::Mg || f == Family::Mgprime || f == Family::MA || f == Family::MAprime ||
           f == Family::VA;
}

bool family_patterned(Family f) { return f == Family::MA || f == Family::MAprime || f == Family::VA; }

int family_rank(Family f) { return (f == Family::V || f == Family::VA) ? 1 : 2; }

std::string FamilyTag::str() const {
    std::string s = family_name(family);
    if (!family_patterned(family)) s += " a=" + print_poly(a);
    s += " b=" + print_poly(b);
    if (c) s += " c=" + print_poly(*c);
    if (pattern) s += " pattern=" + pattern->bits_str() + " pattern_lo=" + std::to_string(pattern->lo());
    return s;
}

FamilyTag tag_ungraded(Family f, const Poly& a, const Poly& b, const Poly& c) {
    return FamilyTag{f, a, b, c, std::nullopt};
}

FamilyTag tag_graded(Family f, const Poly& a, const Poly& b) {
    return FamilyTag{f, a, b, std::nullopt, std::nullopt};
}

FamilyTag tag_pattern(Family f, const Poly& b, const Pattern& p) {
    return FamilyTag{f, kHalf, b, std::nullopt, p};
}

// ---- ModuleSpec construction ----

ModuleSpec ModuleSpec::make(const FamilyTag& tag_in) {
    FamilyTag tag = tag_in;
    if (!is_param_value(tag.a)) throw Error("parameter a must be a rational or an expression in a, b");
    if (!is_param_value(tag.b)) throw Error("parameter b must be a rational or an expression in a, b");

    bool needs_c = tag.family == Family::M || tag.family == Family::Mprime;
    if (needs_c || (tag.family == Family::V && tag.c)) {
        if (!tag.c) throw ZeroParameterC("family requires a nonzero parameter c");
        if (!is_c_value(*tag.c)) throw ZeroParameterC("parameter c must be a nonzero rational or the symbol c");
    } else if (!needs_c && tag.family != Family::V) {
        tag.c.reset();
    }

    if (family_patterned(tag.family)) {
        if (!tag.pattern) throw MissingPattern(family_name(tag.family) + " requires a pattern");
        tag.a = kHalf;  // the patterned families fix a = 1/2 on the uniform side
    } else {
        tag.pattern.reset();
    }

    ModuleSpec spec;
    spec.tag_ = tag;
    // V doubles as the graded V_{a,b} (no loop factor) and the ungraded
    // restriction of the loop families (with c).
    spec.graded_ = family_graded(tag.family) || (tag.family == Family::V && !tag.c);
    spec.rank_ = family_rank(tag.family);

    const Poly& a = tag.a;
    const Poly& b = tag.b;
    const Poly one(1);
    const Poly two(2);

    auto uniform = [&](GenKind k, BasisKind w, const Poly& p) {
        Rule& r = spec.rule_mut(k, w);
        r.patterned = false;
        r.cases = {p, p, p, p};
    };
    auto patterned = [&](GenKind k, BasisKind w, std::array<Poly, 4> cases) {
        Rule& r = spec.rule_mut(k, w);
        r.patterned = true;
        r.cases = std::move(cases);
    };

    // The V_{A,b} case table, indexed by 2*a_j + a_{i+j}.
    const Poly pb = kDel + b;
    const Poly plb = kDel + kLam + b;
    const std::array<Poly, 4> va_cases = {pb, one, plb * pb, plb};

    switch (tag.family) {
        case Family::M:
        case Family::Mgprime:
            uniform(GenKind::L, BasisKind::x, linear(a, b));
            uniform(GenKind::L, BasisKind::y, linear(a + kHalf, b));
            uniform(GenKind::G, BasisKind::x, one);
            uniform(GenKind::G, BasisKind::y, linear(a * two, b));
            break;
        case Family::Mprime:
        case Family::Mg:
            uniform(GenKind::L, BasisKind::x, linear(a, b));
            uniform(GenKind::L, BasisKind::y, linear(a - kHalf, b));
            uniform(GenKind::G, BasisKind::x, linear(a * two - one, b));
            uniform(GenKind::G, BasisKind::y, one);
            break;
        case Family::MA:
            uniform(GenKind::L, BasisKind::x, linear(kHalf, b));
            patterned(GenKind::L, BasisKind::y, va_cases);
            // G on x depends on a_{i+j} only; G on y on a_j only.
            patterned(GenKind::G, BasisKind::x, {pb, one, pb, one});
            patterned(GenKind::G, BasisKind::y, {one, one, plb, plb});
            break;
        case Family::MAprime:
            patterned(GenKind::L, BasisKind::x, va_cases);
            uniform(GenKind::L, BasisKind::y, linear(kHalf, b));
            patterned(GenKind::G, BasisKind::x, {one, one, plb, plb});
            patterned(GenKind::G, BasisKind::y, {pb, one, pb, one});
            break;
        case Family::V:
            uniform(GenKind::L, BasisKind::x, linear(a, b));
            break;
        case Family::VA:
            patterned(GenKind::L, BasisKind::x, va_cases);
            break;
    }
    return spec;
}

ModuleSpec::Rule& ModuleSpec::rule_mut(GenKind k, BasisKind w) {
    return rules_[static_cast<size_t>(rule_index(k, w))];
}

const ModuleSpec::Rule& ModuleSpec::rule(GenKind k, BasisKind w) const {
    if (rank_ == 1 && (k == GenKind::G || w == BasisKind::y))
        throw Error("rank-one modules carry only the L action on their generator");
    return rules_[static_cast<size_t>(rule_index(k, w))];
}

bool ModuleSpec::symbolic_params() const {
    if (!tag_.a.is_constant() || !tag_.b.is_constant()) return true;
    return tag_.c && !tag_.c->is_constant();
}

Poly ModuleSpec::case_poly(const Rule& r, int i, int j) const {
    if (!r.patterned) return r.cases[0];
    const Pattern& p = *tag_.pattern;
    return r.cases[static_cast<size_t>(2 * p.bit(j) + p.bit(i + j))];
}

Poly ModuleSpec::entry(GenKind k, int i, BasisKind w, int j) const {
    Poly base = case_poly(rule(k, w), i, j);
    if (!graded_ && tag_.c) {
        if (tag_.c->is_constant())
            return base.scaled(tag_.c->constant_value().pow(i));
        return base * Poly::term(Monomial::var(VarId::ParC, i), Rational(1));
    }
    return base;
}

BasisKind ModuleSpec::target_kind(GenKind k, BasisKind w) const {
    return k == GenKind::G ? flipped(w) : w;
}

LambdaModuleElement ModuleSpec::act(GenId g, const LambdaModuleElement& v, const Poly& lam) const {
    if (rank_ == 1 && g.kind == GenKind::G) throw Error("no G action on a rank-one module");
    LambdaModuleElement out;
    const Poly del_plus_lam = kDel + lam;
    for (const auto& [basis, coeff] : v.support()) {
        if (graded_ && !basis.grade) throw Error("ungraded element acted on by a graded module");
        if (!graded_ && basis.grade) throw Error("graded element acted on by an ungraded module");
        int j = basis.grade.value_or(0);
        if (tag_.pattern) {
            // Pattern families exist only on their window; both the source
            // and the target grade must lie inside it.
            const GradeWindow pw = tag_.pattern->window();
            if (!pw.contains(j) || !pw.contains(g.grade + j))
                throw OutOfWindow("action leaves the pattern window");
        }
        Poly action = entry(g.kind, g.grade, basis.kind, j).substituted(VarId::Lam1, lam);
        BasisId target{target_kind(g.kind, basis.kind),
                       graded_ ? std::optional<int>(g.grade + j) : std::nullopt};
        out.add(target, coeff.substituted(VarId::Del, del_plus_lam) * action);
    }
    return out;
}

LambdaModuleElement ModuleSpec::act(GenId g, const ModuleElement& v, const Poly& lam) const {
    return act(g, LambdaModuleElement(v), lam);
}

ModuleSpec ModuleSpec::with_mutation(GenKind k, BasisKind w, int case_index, const Poly& replacement) const {
    ModuleSpec copy = *this;
    Rule& r = copy.rule_mut(k, w);
    if (case_index < 0 || case_index >= 4) throw Error("mutation case index out of range");
    if (!r.patterned && case_index != 0) throw Error("uniform rules have a single case");
    if (!r.patterned)
        r.cases = {replacement, replacement, replacement, replacement};
    else
        r.cases[static_cast<size_t>(case_index)] = replacement;
    return copy;
}

ModuleSpec ModuleSpec::rescale_odd(const Rational& gamma) const {
    if (gamma.is_zero()) throw Error("odd basis rescale must be nonzero");
    if (rank_ != 2) throw Error("odd rescale applies to rank-two modules");
    ModuleSpec copy = *this;
    Rational inv = gamma.inverse();
    for (Poly& p : copy.rule_mut(GenKind::G, BasisKind::x).cases) p = p.scaled(inv);
    for (Poly& p : copy.rule_mut(GenKind::G, BasisKind::y).cases) p = p.scaled(gamma);
    return copy;
}

bool tables_equal(const ModuleSpec& s1, const ModuleSpec& s2, GradeWindow window) {
    if (s1.rank() != s2.rank() || s1.graded() != s2.graded()) return false;
    std::vector<GenKind> kinds = {GenKind::L};
    if (s1.rank() == 2) kinds.push_back(GenKind::G);
    std::vector<BasisKind> bases = {BasisKind::x};
    if (s1.rank() == 2) bases.push_back(BasisKind::y);

    auto compare_at = [&](int i, int j) {
        for (GenKind k : kinds)
            for (BasisKind w : bases)
                if (s1.entry(k, i, w, j) != s2.entry(k, i, w, j)) return false;
        return true;
    };

    if (!s1.graded()) {
        for (int i = -2; i <= 2; ++i)
            if (!compare_at(i, 0)) return false;
        return true;
    }
    for (int j = window.lo; j <= window.hi; ++j)
        for (int i = window.lo - j; i <= window.hi - j; ++i)
            if (!compare_at(i, j)) return false;
    return true;
}

// ---- axiom checker ----

const CheckItem* AxiomReport::first_failure() const {
    for (const auto& item : items)
        if (!item.ok) return &item;
    return nullptr;
}

AxiomReport check_module_axioms(const ModuleSpec& spec, GradeWindow gen_window) {
    AxiomReport report;
    const Poly u = pvar(VarId::Lam1);
    const Poly v = pvar(VarId::Lam2);
    const Poly uv = u + v;

    std::vector<GenKind> kinds = {GenKind::L};
    if (spec.rank() == 2) kinds.push_back(GenKind::G);
    std::vector<BasisKind> bases = {BasisKind::x};
    if (spec.rank() == 2) bases.push_back(BasisKind::y);

    GradeWindow basis_window = spec.pattern() ? spec.pattern()->window() : gen_window;

    std::vector<std::optional<int>> basis_grades;
    if (spec.graded()) {
        for (int j = basis_window.lo; j <= basis_window.hi; ++j) basis_grades.emplace_back(j);
    } else {
        basis_grades.emplace_back(std::nullopt);
    }

    for (GenKind k1 : kinds)
        for (int i1 = gen_window.lo; i1 <= gen_window.hi; ++i1)
            for (GenKind k2 : kinds)
                for (int i2 = gen_window.lo; i2 <= gen_window.hi; ++i2) {
                    GenId alpha{k1, i1}, beta{k2, i2};
                    for (BasisKind wk : bases)
                        for (const auto& grade : basis_grades) {
                            if (spec.graded()) {
                                int j = *grade;
                                if (!basis_window.contains(j + i1) || !basis_window.contains(j + i2) ||
                                    !basis_window.contains(j + i1 + i2)) {
                                    ++report.skipped;
                                    continue;
                                }
                            }
                            BasisId w{wk, grade};
                            ModuleElement vec = ModuleElement::basis(w);

                            LambdaValued br = bracket_basis(alpha, beta, u);
                            LambdaModuleElement lhs;
                            for (const auto& [gamma, q] : br.support())
                                lhs += spec.act(gamma, vec, uv).scaled(q.substituted(VarId::Del, -uv));

                            LambdaModuleElement rhs = spec.act(alpha, spec.act(beta, vec, v), u);
                            LambdaModuleElement swapped = spec.act(beta, spec.act(alpha, vec, u), v);
                            if (koszul_sign(alpha.parity(), beta.parity()) > 0)
                                rhs -= swapped;
                            else
                                rhs += swapped;

                            LambdaModuleElement residual = lhs;
                            residual -= rhs;

                            ++report.checked;
                            bool ok = residual.is_zero();
                            if (!ok) ++report.failed;
                            report.items.push_back(
                                {"compat(" + gen_name(alpha) + "," + gen_name(beta) + ";" + basis_name(w) + ")",
                                 ok, ok ? "" : print_lambda_module_element(residual)});
                        }
                }
    return report;
}

// ---- restriction ----

ModuleSpec restrict_to_clv(const ModuleSpec& spec, Parity part) {
    if (spec.rank() != 2) throw Error("restriction applies to rank-two modules");
    BasisKind source = part == Parity::even ? BasisKind::x : BasisKind::y;
    const ModuleSpec::Rule& r = spec.rule(GenKind::L, source);

    FamilyTag tag;
    if (r.patterned) {
        tag = tag_pattern(Family::VA, spec.tag().b, *spec.pattern());
    } else {
        const Poly& p = r.cases[0];
        Poly alpha = p.coeff_of(VarId::Lam1, 1);
        Poly beta = p.coeff_of(VarId::Lam1, 0) - pdel();
        tag = FamilyTag{Family::V, alpha, beta,
                        spec.graded() ? std::nullopt : spec.tag().c, std::nullopt};
    }
    ModuleSpec restricted = ModuleSpec::make(tag);
    restricted.rule_mut(GenKind::L, BasisKind::x) = r;
    return restricted;
}

// ---- classification ----

namespace {

struct LinearForm {
    Poly lam_coeff;    // alpha
    Poly const_coeff;  // beta
};

// Matches del + alpha*u + beta with alpha, beta free of del and lambda vars.
std::optional<LinearForm> match_linear(const Poly& p) {
    if (p.degree_in(VarId::Del) != 1) return std::nullopt;
    if (p.coeff_of(VarId::Del, 1) != Poly(1)) return std::nullopt;
    Poly rest = p - pdel();
    Poly alpha = rest.coeff_of(VarId::Lam1, 1);
    Poly beta = rest.coeff_of(VarId::Lam1, 0);
    if (alpha * pvar(VarId::Lam1) + beta != rest) return std::nullopt;
    if (alpha.contains_var(VarId::Del) || alpha.contains_lambda_var()) return std::nullopt;
    if (beta.contains_var(VarId::Del) || beta.contains_lambda_var()) return std::nullopt;
    return LinearForm{alpha, beta};
}

// Either a nonzero rational constant or the Laurent symbol c itself.
std::optional<Poly> match_c_value(const Poly& p) {
    if (p.is_constant()) {
        if (p.constant_value().is_zero()) return std::nullopt;
        return p;
    }
    if (p == pvar(VarId::ParC)) return p;
    return std::nullopt;
}

std::optional<Rational> nonzero_rational(const Poly& p) {
    if (!p.is_constant()) return std::nullopt;
    Rational r = p.constant_value();
    if (r.is_zero()) return std::nullopt;
    return r;
}

struct ClvSide {
    bool patterned = false;
    Poly alpha;
    Poly beta;
    std::optional<Pattern> pattern;
};

// Reads the L-action on one basis kind over the window. The diagonal
// entries L_0 w_j decide the pattern bits when the side is not uniform.
std::optional<ClvSide> read_clv_side(const ModuleSpec& spec, BasisKind w, GradeWindow window) {
    bool uniform = true;
    Poly first = spec.entry(GenKind::L, 0, w, window.lo);
    for (int j = window.lo; j <= window.hi && uniform; ++j)
        for (int i = window.lo - j; i <= window.hi - j && uniform; ++i)
            if (spec.entry(GenKind::L, i, w, j) != first) uniform = false;

    if (uniform) {
        auto lin = match_linear(first);
        if (!lin) return std::nullopt;
        return ClvSide{false, lin->lam_coeff, lin->const_coeff, std::nullopt};
    }

    // Pattern side: bit j comes from L_0 on w_j, which must be (d+beta) or (d+u+beta).
    std::vector<int> bits;
    std::optional<Poly> beta;
    for (int j = window.lo; j <= window.hi; ++j) {
        Poly diag = spec.entry(GenKind::L, 0, w, j);
        auto lin = match_linear(diag);
        if (!lin) return std::nullopt;
        if (lin->lam_coeff == Poly(0))
            bits.push_back(0);
        else if (lin->lam_coeff == Poly(1))
            bits.push_back(1);
        else
            return std::nullopt;
        if (beta && *beta != lin->const_coeff) return std::nullopt;
        beta = lin->const_coeff;
    }
    return ClvSide{true, Poly(), *beta, Pattern(window.lo, bits)};
}

FamilyTag classify_graded(const ModuleSpec& spec, GradeWindow window) {
    auto xside = read_clv_side(spec, BasisKind::x, window);
    auto yside = read_clv_side(spec, BasisKind::y, window);
    if (!xside || !yside) throw NoMatch("L-action does not match any graded family");
    if (xside->patterned && yside->patterned)
        throw NoMatch("both parity parts pattern-dependent; no such family");

    // Odd-basis normalization: the G-on-x entries of every family are monic
    // in del (possibly constant 1), so the leading del-coefficient is 1/gamma.
    Poly gx = spec.entry(GenKind::G, 0, BasisKind::x, window.lo);
    auto inv_gamma = nonzero_rational(gx.coeff_of(VarId::Del, gx.degree_in(VarId::Del)));
    if (!inv_gamma) throw NoMatch("G-on-x entry is not a rational multiple of a monic polynomial");
    Rational gamma = inv_gamma->inverse();

    FamilyTag tag;
    if (!xside->patterned && !yside->patterned) {
        if (yside->beta != xside->beta) throw NoMatch("parity parts disagree on b");
        Poly diff = yside->alpha - xside->alpha;
        if (diff == Poly(frac(-1, 2)))
            tag = tag_graded(Family::Mg, xside->alpha, xside->beta);
        else if (diff == Poly(frac(1, 2)))
            tag = tag_graded(Family::Mgprime, xside->alpha, xside->beta);
        else
            throw NoMatch("parity parts are not a half-step apart");
    } else if (yside->patterned) {
        if (xside->alpha != kHalf) throw NoMatch("uniform part of a patterned family must have a = 1/2");
        if (xside->beta != yside->beta) throw NoMatch("parity parts disagree on b");
        tag = tag_pattern(Family::MA, yside->beta, *yside->pattern);
    } else {
        if (yside->alpha != kHalf) throw NoMatch("uniform part of a patterned family must have a = 1/2");
        if (xside->beta != yside->beta) throw NoMatch("parity parts disagree on b");
        tag = tag_pattern(Family::MAprime, xside->beta, *xside->pattern);
    }

    ModuleSpec expected = ModuleSpec::make(tag).rescale_odd(gamma);
    if (!tables_equal(spec, expected, window)) throw NoMatch("table deviates from the matched family");
    return tag;
}

FamilyTag classify_ungraded(const ModuleSpec& spec) {
    auto lx = match_linear(spec.entry(GenKind::L, 0, BasisKind::x));
    if (!lx) throw NoMatch("L-on-x entry is not del + a*u + b");

    Poly ratio;
    try {
        ratio = spec.entry(GenKind::L, 1, BasisKind::x).div_exact(spec.entry(GenKind::L, 0, BasisKind::x));
    } catch (const NotDivisible&) {
        throw NoMatch("loop scaling of L entries is not by a constant");
    }
    auto c_value = match_c_value(ratio);
    if (!c_value) throw NoMatch("loop scaling is not a nonzero constant");

    Poly gx = spec.entry(GenKind::G, 0, BasisKind::x);
    Poly gy = spec.entry(GenKind::G, 0, BasisKind::y);
    int dx = gx.degree_in(VarId::Del);
    int dy = gy.degree_in(VarId::Del);

    FamilyTag tag;
    Rational gamma;
    if (dx == 0 && dy == 1) {
        auto inv_gamma = nonzero_rational(gx);
        if (!inv_gamma) throw NoMatch("G-on-x entry is not a nonzero rational");
        gamma = inv_gamma->inverse();
        tag = tag_ungraded(Family::M, lx->lam_coeff, lx->const_coeff, *c_value);
    } else if (dx == 1 && dy == 0) {
        auto inv_gamma = nonzero_rational(gx.coeff_of(VarId::Del, 1));
        if (!inv_gamma) throw NoMatch("G-on-x leading coefficient is not a nonzero rational");
        gamma = inv_gamma->inverse();
        tag = tag_ungraded(Family::Mprime, lx->lam_coeff, lx->const_coeff, *c_value);
    } else {
        throw NoMatch("G entries do not have degrees (0,1) or (1,0) in del");
    }

    ModuleSpec expected = ModuleSpec::make(tag).rescale_odd(gamma);
    if (!tables_equal(spec, expected, {-2, 2})) throw NoMatch("table deviates from the matched family");
    return tag;
}

}  // namespace

FamilyTag classify_rank2(const ModuleSpec& table) {
    if (table.rank() != 2) throw Error("classify_rank2 requires a rank-two table");
    if (!table.graded()) return classify_ungraded(table);
    GradeWindow window = table.pattern() ? table.pattern()->window() : GradeWindow{-2, 2};
    return classify_graded(table, window);
}

FamilyTag classify_clv(const ModuleSpec& table, GradeWindow window) {
    if (table.rank() != 1) throw Error("classify_clv requires a rank-one table");

    if (!table.graded()) {
        auto lin = match_linear(table.entry(GenKind::L, 0, BasisKind::x));
        if (!lin) throw NoMatch("L entry is not del + a*u + b");
        Poly ratio;
        try {
            ratio = table.entry(GenKind::L, 1, BasisKind::x).div_exact(table.entry(GenKind::L, 0, BasisKind::x));
        } catch (const NotDivisible&) {
            throw NoMatch("loop scaling of L entries is not by a constant");
        }
        auto c_value = match_c_value(ratio);
        if (!c_value) throw NoMatch("loop scaling is not a nonzero constant");
        FamilyTag tag{Family::V, lin->lam_coeff, lin->const_coeff, *c_value, std::nullopt};
        ModuleSpec expected = ModuleSpec::make(tag);
        if (!tables_equal(table, expected, window)) throw NoMatch("table deviates from V_{a,b}");
        return tag;
    }

    auto side = read_clv_side(table, BasisKind::x, window);
    if (!side) throw NoMatch("L-action does not match V or VA");
    FamilyTag tag = side->patterned ? tag_pattern(Family::VA, side->beta, *side->pattern)
                                    : tag_graded(Family::V, side->alpha, side->beta);
    ModuleSpec expected = ModuleSpec::make(tag);
    if (!tables_equal(table, expected, window)) throw NoMatch("table deviates from the matched rank-one family");
    return tag;
}

}  // namespace cls
