#include "cls/poly.hpp"

#include <algorithm>
#include <ostream>

#include "cls/expr.hpp"

namespace cls {

const char* var_name(VarId v) {
    switch (v) {
        case VarId::Del: return "d";
        case VarId::Lam1: return "u";
        case VarId::Lam2: return "v";
        case VarId::Lam3: return "w";
        case VarId::ParA: return "a";
        case VarId::ParB: return "b";
        case VarId::ParC: return "c";
    }
    return "?";
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

bool Poly::contains_var(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) != 0) return true;
    return false;
}

bool Poly::contains_lambda_var() const {
    return contains_var(VarId::Lam1) || contains_var(VarId::Lam2) || contains_var(VarId::Lam3);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e == 0) return Poly(1);
    if (e < 0) {
        // Only a single Laurent-invertible term can be raised to a negative power.
        if (terms_.size() == 1) {
            const auto& [m, c] = *terms_.begin();
            bool laurent_only = true;
            for (int i = 0; i < kVarCount; ++i) {
                VarId v = static_cast<VarId>(i);
                if (v != VarId::ParC && m.exponent(v) != 0) laurent_only = false;
            }
            if (laurent_only) {
                Monomial mi = Monomial::var(VarId::ParC, m.exponent(VarId::ParC) * e);
                return Poly::term(mi, c.pow(e));
            }
        }
        throw Error("negative power of a non-invertible polynomial");
    }
    Poly acc(1);
    Poly base = *this;
    int n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

bool operator<(const Poly& a, const Poly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const auto& x, const auto& y) {
            if (x.first < y.first) return true;
            if (y.first < x.first) return false;
            return x.second < y.second;
        });
}

Poly Poly::substitute(const std::map<VarId, Poly>& sigma) const {
    if (sigma.empty()) return *this;
    if (auto it = sigma.find(VarId::ParC); it != sigma.end()) {
        if (!it->second.is_constant() || it->second.constant_value().is_zero())
            throw IllegalLaurentSubstitution("c may only be evaluated at a nonzero rational");
    }
    Poly result;
    for (const auto& [m, coeff] : terms_) {
        Poly term(coeff);
        Monomial rest;
        for (int i = 0; i < kVarCount; ++i) {
            VarId v = static_cast<VarId>(i);
            int e = m.exponent(v);
            if (e == 0) continue;
            auto it = sigma.find(v);
            if (it == sigma.end()) {
                rest.set(v, e);
            } else if (v == VarId::ParC) {
                term = term.scaled(it->second.constant_value().pow(e));
            } else {
                term *= it->second.pow(e);
            }
        }
        result += term * Poly::term(rest, Rational(1));
    }
    return result;
}

Poly Poly::substituted(VarId v, const Poly& replacement) const {
    return substitute({{v, replacement}});
}

std::vector<std::pair<int, Poly>> Poly::coeffs_in(VarId v) const {
    if (v == VarId::ParC) throw Error("coefficient extraction in the Laurent variable");
    std::map<int, Poly> buckets;
    for (const auto& [m, c] : terms_) {
        int k = m.exponent(v);
        Monomial rest = m;
        rest.set(v, 0);
        buckets[k] += Poly::term(rest, c);
    }
    std::vector<std::pair<int, Poly>> out;
    for (auto& [k, q] : buckets)
        if (!q.is_zero()) out.emplace_back(k, std::move(q));
    return out;
}

Poly Poly::coeff_of(VarId v, int k) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k) continue;
        Monomial rest = m;
        rest.set(v, 0);
        out += Poly::term(rest, c);
    }
    return out;
}

int Poly::degree_in(VarId v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Poly Poly::leading_coeff_in(VarId v) const {
    return coeff_of(v, degree_in(v));
}

namespace {

// Smallest ParC exponent over the terms; 0 for the zero polynomial.
int min_c_exponent(const Poly& p) {
    int m = 0;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        int e = mono.exponent(VarId::ParC);
        m = first ? e : std::min(m, e);
        first = false;
    }
    return m;
}

Poly shift_c(const Poly& p, int by) {
    if (by == 0) return p;
    return p * Poly::term(Monomial::var(VarId::ParC, by), Rational(1));
}

}  // namespace

Poly Poly::div_exact(const Poly& q) const {
    if (q.is_zero()) throw ZeroDivide("exact division by zero polynomial");
    // Normalize Laurent powers so plain monomial division terminates: in a
    // domain the minimal c-degrees of a product add, so q | p in the Laurent
    // ring iff the c-normalized q divides the c-normalized p as ordinary
    // polynomials.
    int ep = min_c_exponent(*this);
    int eq = min_c_exponent(q);
    Poly rem = shift_c(*this, -ep);
    Poly divisor = shift_c(q, -eq);
    Poly quot;
    const auto& [lmq, lcq] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [lm, lc] = *rem.terms_.rbegin();
        if (!lmq.divides(lm)) throw NotDivisible("no exact quotient");
        Poly t = Poly::term(lmq.quotient_into(lm), lc / lcq);
        quot += t;
        rem -= t * divisor;
    }
    return shift_c(quot, ep - eq);
}

Poly Poly::eval_params(const Rational& a, const Rational& b, const Rational& c) const {
    if (c.is_zero()) throw ZeroParameterC("parameter c must be nonzero");
    return substitute({{VarId::ParA, Poly(a)}, {VarId::ParB, Poly(b)}, {VarId::ParC, Poly(c)}});
}

bool Poly::is_univariate_in(VarId v) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kVarCount; ++i) {
            VarId w = static_cast<VarId>(i);
            if (w != v && m.exponent(w) != 0) return false;
        }
    return true;
}

std::pair<Poly, Poly> Poly::divmod_univar(const Poly& p, const Poly& q, VarId v) {
    if (!p.is_univariate_in(v) || !q.is_univariate_in(v))
        throw NotUnivariate("divmod requires univariate operands");
    if (q.is_zero()) throw ZeroDivide("polynomial division by zero");
    Poly quot, rem = p;
    int dq = q.degree_in(v);
    Rational lcq = q.coeff_of(v, dq).constant_value();
    while (!rem.is_zero() && rem.degree_in(v) >= dq) {
        int dr = rem.degree_in(v);
        Rational lcr = rem.coeff_of(v, dr).constant_value();
        Poly t = Poly::term(Monomial::var(v, dr - dq), lcr / lcq);
        quot += t;
        rem -= t * q;
    }
    return {quot, rem};
}

std::tuple<Poly, Poly, Poly> Poly::gcd_ext_univar(const Poly& p, const Poly& q, VarId v) {
    if (!p.is_univariate_in(v) || !q.is_univariate_in(v))
        throw NotUnivariate("extended gcd requires univariate operands");
    // Iterative extended Euclid; invariants r0 = s0*p + t0*q, r1 = s1*p + t1*q.
    Poly r0 = p, r1 = q;
    Poly s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod_univar(r0, r1, v);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - quot * s1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational lc = r0.coeff_of(v, r0.degree_in(v)).constant_value();
    Rational inv = lc.inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::string Poly::str() const { return print_poly(*this); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace cls
