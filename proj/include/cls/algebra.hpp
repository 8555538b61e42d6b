#ifndef CLS_ALGEBRA_HPP
#define CLS_ALGEBRA_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "cls/poly.hpp"

namespace cls {

enum class Parity : uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

enum class GenKind : uint8_t { L = 0, G = 1 };

inline Parity parity(GenKind k) { return k == GenKind::L ? Parity::even : Parity::odd; }

/// Basis symbol L_i or G_i of the graded algebra.
struct GenId {
    GenKind kind;
    int grade;

    Parity parity() const { return cls::parity(kind); }
    friend auto operator<=>(const GenId&, const GenId&) = default;
};

std::string gen_name(const GenId& g);  // "L(0)", "G(-2)"

/// Finite combination of basis symbols with lambda-free coefficients in
/// {del, a, b, c}. Invariant: no zero coefficients stored.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement generator(GenId g) { return with_coeff(g, Poly(1)); }
    static AlgebraElement with_coeff(GenId g, const Poly& p);

    const std::map<GenId, Poly>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(GenId g, const Poly& p);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    std::map<GenId, Poly> terms_;
};

/// Bracket/action output: coefficients may involve the lambda variables.
class LambdaValued {
public:
    LambdaValued() = default;
    explicit LambdaValued(const AlgebraElement& e) : terms_(e.support()) {}

    const std::map<GenId, Poly>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(GenId g, const Poly& p);
    LambdaValued scaled(const Poly& p) const;
    LambdaValued& operator+=(const LambdaValued& o);
    LambdaValued& operator-=(const LambdaValued& o);
    /// Applies a polynomial substitution to every coefficient.
    LambdaValued substituted(const std::map<VarId, Poly>& sigma) const;

    friend bool operator==(const LambdaValued&, const LambdaValued&) = default;

private:
    std::map<GenId, Poly> terms_;
};

/// The lambda-bracket of two basis generators, with the bracket variable
/// given as a polynomial (a plain variable, or lambda+mu for nested use):
///   [L_i L_j] = (del + 2 lam) L_{i+j}
///   [L_i G_j] = (del + 3/2 lam) G_{i+j}
///   [G_i L_j] = (1/2 del + 3/2 lam) G_{i+j}
///   [G_i G_j] = 2 L_{i+j}
LambdaValued bracket_basis(GenId x, GenId y, const Poly& lam);

/// Bilinear extension: left coefficients f(del) become f(-lam), right
/// coefficients become f(del+lam). Pre-existing lambda variables in the
/// coefficients ride along unchanged (nested-bracket convention). Throws
/// VariableCollision when lam is a single lambda-variable already present
/// in an argument's coefficients.
LambdaValued bracket(const LambdaValued& x, const LambdaValued& y, const Poly& lam);
LambdaValued bracket(const AlgebraElement& x, const AlgebraElement& y, const Poly& lam);

/// Residual of skew-symmetry: [x_u y] + (-1)^{|x||y|} [y_v x] |_{v -> -u-d}.
/// Identically zero iff the pair satisfies the axiom.
LambdaValued check_skew(GenId x, GenId y);

/// Residual of the conformal Jacobi identity in (u, v):
/// [x_u [y_v z]] - [[x_u y]_{u+v} z] - (-1)^{|x||y|} [y_v [x_u z]].
LambdaValued check_jacobi(GenId x, GenId y, GenId z);

/// True iff the bracket output is supported only in grade i+j with parity
/// |x|+|y|.
bool check_grading(GenId x, GenId y);

std::ostream& operator<<(std::ostream& os, const LambdaValued& v);

}  // namespace cls

#endif
