#ifndef CLS_POLY_HPP
#define CLS_POLY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cls/errors.hpp"
#include "cls/rational.hpp"

namespace cls {

/// The seven formal variables of the calculus. Del is the module generator
/// symbol; Lam1..Lam3 are bracket variables; ParA/ParB/ParC are the module
/// parameters. ParC is the only Laurent variable (negative exponents allowed).
enum class VarId : uint8_t { Del = 0, Lam1, Lam2, Lam3, ParA, ParB, ParC };

constexpr int kVarCount = 7;

/// Text spelling used by the expression grammar: d u v w a b c.
const char* var_name(VarId v);

inline bool is_lambda_var(VarId v) { return v == VarId::Lam1 || v == VarId::Lam2 || v == VarId::Lam3; }

/// Exponent vector over the seven variables. Only ParC may be negative.
class Monomial {
public:
    Monomial() { e_.fill(0); }

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        m.set(v, exp);
        return m;
    }

    int exponent(VarId v) const { return e_[static_cast<size_t>(v)]; }
    void set(VarId v, int exp) {
        if (exp < 0 && v != VarId::ParC) throw Error("negative exponent on non-Laurent variable");
        e_[static_cast<size_t>(v)] = checked_exp(exp);
    }

    bool is_one() const {
        for (auto x : e_)
            if (x != 0) return false;
        return true;
    }

    int total_degree() const {
        int d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_exp(e_[i] + o.e_[i]);
        return r;
    }

    /// Componentwise divisibility (all variables, including ParC; callers
    /// normalize Laurent powers away first).
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial quotient_into(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_exp(o.e_[i] - e_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    /// Graded lexicographic order over the fixed VarId order.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return false;
    }

private:
    static int16_t checked_exp(int e) {
        if (e < -20000 || e > 20000) throw Error("monomial exponent out of range");
        return static_cast<int16_t>(e);
    }
    std::array<int16_t, kVarCount> e_;
};

/// Sparse exact-rational polynomial in the seven variables, Laurent in ParC.
/// Canonical form: no zero coefficients, terms ordered by graded lex.
class Poly {
public:
    Poly() = default;
    Poly(long n) {
        if (n != 0) terms_.emplace(Monomial(), Rational(n));
    }
    Poly(const Rational& r) {
        if (!r.is_zero()) terms_.emplace(Monomial(), r);
    }

    static Poly variable(VarId v, int exp = 1) { return Poly::term(Monomial::var(v, exp), Rational(1)); }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    /// Value of a constant polynomial (zero for the zero polynomial).
    Rational constant_value() const;

    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool contains_var(VarId v) const;
    bool contains_lambda_var() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;  // e >= 0 except for single-term Laurent bases

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Arbitrary strict total order (for use as map key in tests/reports).
    friend bool operator<(const Poly& a, const Poly& b);

    /// Simultaneous substitution. ParC may only be mapped to a nonzero
    /// rational constant; other variables may map to arbitrary polynomials.
    Poly substitute(const std::map<VarId, Poly>& sigma) const;

    /// Shorthand for substitute({{v, replacement}}).
    Poly substituted(VarId v, const Poly& replacement) const;

    /// p = sum_k q_k v^k with the q_k free of v; nonzero q_k in ascending k.
    std::vector<std::pair<int, Poly>> coeffs_in(VarId v) const;
    /// Coefficient of v^k (free of v).
    Poly coeff_of(VarId v, int k) const;
    int degree_in(VarId v) const;  // -1 for the zero polynomial

    /// Exact quotient; throws NotDivisible when none exists.
    Poly div_exact(const Poly& q) const;

    /// Evaluates ParA, ParB, ParC; c must be nonzero.
    Poly eval_params(const Rational& a, const Rational& b, const Rational& c) const;

    bool is_univariate_in(VarId v) const;

    /// Quotient/remainder in the named variable; all other variables must be
    /// absent from the divisor's leading coefficient context (both inputs
    /// univariate in v with rational coefficients).
    static std::pair<Poly, Poly> divmod_univar(const Poly& p, const Poly& q, VarId v = VarId::Del);

    /// Extended gcd over the rationals in one variable (default Del):
    /// returns (g, s, t) with g monic (or zero) and g = s*p + t*q.
    static std::tuple<Poly, Poly, Poly> gcd_ext_univar(const Poly& p, const Poly& q, VarId v = VarId::Del);

    /// Leading coefficient in v, viewing the rest as coefficient ring.
    Poly leading_coeff_in(VarId v) const;

    std::string str() const;  // canonical grammar text (see expr)
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// Small builders used throughout.
inline Poly pvar(VarId v) { return Poly::variable(v); }
inline Poly pdel() { return Poly::variable(VarId::Del); }

}  // namespace cls

#endif
