#include "cls/derivations.hpp"

#include <algorithm>

#include "cls/expr.hpp"

namespace cls {

namespace {

const Poly kU = pvar(VarId::Lam1);
const Poly kV = pvar(VarId::Lam2);

GenId target_of(Parity d_parity, GenId x, int degree) {
    GenKind out_kind;
    if (d_parity == Parity::even)
        out_kind = x.kind;
    else
        out_kind = x.kind == GenKind::L ? GenKind::G : GenKind::L;
    return GenId{out_kind, x.grade + degree};
}

void require_seed_vars(const Poly& p) {
    for (int i = 0; i < kVarCount; ++i) {
        VarId v = static_cast<VarId>(i);
        if (v == VarId::Del || v == VarId::Lam1) continue;
        if (p.contains_var(v)) throw Error("derivation coefficients live in d and u only");
    }
}

}  // namespace

GradeWindow DerivationSpec::stored_window() const {
    if (f.empty()) throw Error("derivation with no stored coefficients");
    return {f.begin()->first, f.rbegin()->first};
}

LambdaValued DerivationSpec::apply(GenId x) const {
    if (!defined_at(x.grade))
        throw OutOfWindow("derivation has no coefficient at grade " + std::to_string(x.grade));
    const Poly& coeff = (parity == Parity::even) == (x.kind == GenKind::L) ? f.at(x.grade) : g.at(x.grade);
    LambdaValued out;
    out.add(target_of(parity, x, degree), coeff);
    return out;
}

LambdaValued DerivationSpec::apply(const LambdaValued& v) const {
    const Poly shift = pdel() + kU;
    LambdaValued out;
    for (const auto& [gen, coeff] : v.support()) {
        LambdaValued image = apply(gen);
        out += image.scaled(coeff.substituted(VarId::Del, shift));
    }
    return out;
}

DerivationSpec ad(const AlgebraElement& x, int lo, int hi) {
    if (x.support().size() != 1) throw NotHomogeneous("ad requires a homogeneous nonzero element");
    const auto& [gen, coeff] = *x.support().begin();

    DerivationSpec d;
    d.parity = gen.parity();
    d.degree = gen.grade;
    for (int i = lo; i <= hi; ++i) {
        LambdaValued on_l = bracket(x, AlgebraElement::generator({GenKind::L, i}), kU);
        LambdaValued on_g = bracket(x, AlgebraElement::generator({GenKind::G, i}), kU);
        auto coeff_at = [](const LambdaValued& v, GenId target) {
            auto it = v.support().find(target);
            return it == v.support().end() ? Poly() : it->second;
        };
        if (d.parity == Parity::even) {
            d.f[i] = coeff_at(on_l, {GenKind::L, i + d.degree});
            d.g[i] = coeff_at(on_g, {GenKind::G, i + d.degree});
        } else {
            d.g[i] = coeff_at(on_l, {GenKind::G, i + d.degree});
            d.f[i] = coeff_at(on_g, {GenKind::L, i + d.degree});
        }
    }
    return d;
}

namespace {

// Shared residual loop; `applies` evaluates D on generators/lambda-values.
template <typename ApplyGen, typename ApplyLv, typename DefinedAt>
AxiomReport derivation_residuals(Parity d_parity, GradeWindow pair_window, ApplyGen&& apply_gen,
                                 ApplyLv&& apply_lv, DefinedAt&& defined_at) {
    AxiomReport report;
    const Poly uv = kU + kV;
    for (GenKind k1 : {GenKind::L, GenKind::G})
        for (int i = pair_window.lo; i <= pair_window.hi; ++i)
            for (GenKind k2 : {GenKind::L, GenKind::G})
                for (int j = pair_window.lo; j <= pair_window.hi; ++j) {
                    GenId a{k1, i}, b{k2, j};
                    if (!defined_at(i) || !defined_at(j) || !defined_at(i + j)) {
                        ++report.skipped;
                        continue;
                    }
                    LambdaValued lhs = apply_lv(bracket_basis(a, b, kV));
                    LambdaValued rhs1 =
                        bracket(apply_gen(a), LambdaValued(AlgebraElement::generator(b)), uv);
                    LambdaValued rhs2 = bracket(LambdaValued(AlgebraElement::generator(a)), apply_gen(b), kV);

                    LambdaValued residual = lhs;
                    residual -= rhs1;
                    if (koszul_sign(d_parity, a.parity()) > 0)
                        residual -= rhs2;
                    else
                        residual += rhs2;

                    ++report.checked;
                    bool ok = residual.is_zero();
                    if (!ok) ++report.failed;
                    report.items.push_back({"deriv(" + gen_name(a) + "," + gen_name(b) + ")", ok,
                                            ok ? "" : print_lambda_valued(residual)});
                }
    return report;
}

}  // namespace

AxiomReport check_derivation(const DerivationSpec& d, GradeWindow pair_window) {
    return derivation_residuals(
        d.parity, pair_window, [&](GenId x) { return d.apply(x); },
        [&](const LambdaValued& v) { return d.apply(v); }, [&](int grade) { return d.defined_at(grade); });
}

AxiomReport check_derivation_sum(const std::vector<DerivationSpec>& components, GradeWindow pair_window) {
    if (components.empty()) throw Error("empty derivation sum");
    Parity parity = components.front().parity;
    for (const auto& c : components)
        if (c.parity != parity) throw Error("derivation sum components must share a parity");

    auto apply_gen = [&](GenId x) {
        LambdaValued out;
        for (const auto& c : components) out += c.apply(x);
        return out;
    };
    auto apply_lv = [&](const LambdaValued& v) {
        LambdaValued out;
        for (const auto& c : components) out += c.apply(v);
        return out;
    };
    auto defined = [&](int grade) {
        return std::all_of(components.begin(), components.end(),
                           [&](const DerivationSpec& c) { return c.defined_at(grade); });
    };
    return derivation_residuals(parity, pair_window, apply_gen, apply_lv, defined);
}

DerivationSpec extend_from_seed(Parity parity, int degree, const Poly& seed, int lo, int hi) {
    require_seed_vars(seed);
    Poly at_minus = seed.substituted(VarId::Del, -kU);  // seed(-u, u)
    Poly q;
    try {
        q = at_minus.div_exact(kU);
    } catch (const NotDivisible&) {
        throw SeedNotDivisible("seed(-u, u) is not divisible by u; no derivation has this seed");
    }

    Poly fpoly, gpoly;
    if (parity == Parity::even) {
        fpoly = (pdel() + kU.scaled(Rational(2))) * q;
        gpoly = (pdel() + kU.scaled(frac(3, 2))) * q;
    } else {
        gpoly = (pdel().scaled(frac(1, 2)) + kU.scaled(frac(3, 2))) * q;
        fpoly = q.scaled(Rational(2));
    }

    DerivationSpec d;
    d.parity = parity;
    d.degree = degree;
    for (int i = lo; i <= hi; ++i) {
        d.f[i] = fpoly;
        d.g[i] = gpoly;
    }
    return d;
}

AlgebraElement inner_generator(const DerivationSpec& d) {
    bool even = d.parity == Parity::even;
    const std::map<int, Poly>& seeds = even ? d.f : d.g;
    auto it = seeds.find(0);
    if (it == seeds.end()) throw OutOfWindow("inner generator needs the grade-0 coefficient");

    Poly at_minus = it->second.substituted(VarId::Lam1, -pdel());  // f_0(d, -d) or g_0(d, -d)
    Poly p;
    try {
        p = at_minus.div_exact(-pdel());
    } catch (const NotDivisible&) {
        throw NotInner("grade-0 coefficient at (d, -d) is not divisible by -d");
    }

    AlgebraElement candidate =
        AlgebraElement::with_coeff({even ? GenKind::L : GenKind::G, d.degree}, p);
    if (p.is_zero()) {
        // The zero derivation is trivially inner; anything else with a zero
        // candidate cannot be.
        for (const auto& [i, fi] : d.f)
            if (!fi.is_zero()) throw NotInner("zero candidate for a nonzero derivation");
        for (const auto& [i, gi] : d.g)
            if (!gi.is_zero()) throw NotInner("zero candidate for a nonzero derivation");
        return candidate;
    }
    GradeWindow w = d.stored_window();
    DerivationSpec roundtrip = ad(candidate, w.lo, w.hi);
    if (roundtrip.f != d.f || roundtrip.g != d.g)
        throw NotInner("ad of the recovered generator does not reproduce the derivation");
    return candidate;
}

}  // namespace cls
