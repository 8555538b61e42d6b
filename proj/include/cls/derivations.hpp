#ifndef CLS_DERIVATIONS_HPP
#define CLS_DERIVATIONS_HPP

#include <map>

#include "cls/algebra.hpp"
#include "cls/modules.hpp"

namespace cls {

/// A homogeneous conformal superderivation of fixed degree, stored by its
/// coefficient polynomials on a finite grade window:
///   even: D(L_i) = f_i(d,u) L_{i+c},  D(G_i) = g_i(d,u) G_{i+c}
///   odd:  D(L_i) = g_i(d,u) G_{i+c},  D(G_i) = f_i(d,u) L_{i+c}
struct DerivationSpec {
    Parity parity = Parity::even;
    int degree = 0;
    std::map<int, Poly> f;
    std::map<int, Poly> g;

    bool defined_at(int grade) const { return f.count(grade) && g.count(grade); }
    GradeWindow stored_window() const;

    /// D applied to a basis generator (bracket variable u). Throws
    /// OutOfWindow when the grade has no stored coefficient.
    LambdaValued apply(GenId x) const;
    /// Extension to lambda-valued elements: f(d, mu) -> f(d+u, mu).
    LambdaValued apply(const LambdaValued& v) const;

    friend bool operator==(const DerivationSpec&, const DerivationSpec&) = default;
};

/// Inner derivation ad_x for a homogeneous x = p(d) L_m or p(d) G_m, with
/// coefficients read off the bracket engine on [lo, hi].
DerivationSpec ad(const AlgebraElement& x, int lo, int hi);

/// Residuals of D[a_v b] = [[D a]_{u+v} b] + (-1)^{|D||a|} [a_v [D b]] over
/// basis pairs with grades in the window; pairs needing coefficients outside
/// the stored window are counted as skipped.
AxiomReport check_derivation(const DerivationSpec& d, GradeWindow pair_window);

/// Builds the unique derivation with the given f_0 (even) or g_0 (odd) seed:
///   even: q(u) = seed(-u,u)/u, f_i = (d+2u) q,    g_i = (d+3/2 u) q
///   odd:  r(u) = seed(-u,u)/u, g_i = (1/2 d+3/2 u) r, f_i = 2 r
/// Throws SeedNotDivisible when seed(-u,u) is not divisible by u.
DerivationSpec extend_from_seed(Parity parity, int degree, const Poly& seed, int lo, int hi);

/// Recovers p(d) L_c (even) or p(d) G_c (odd) with ad(result) = D, verified
/// coefficient by coefficient on the stored window; throws NotInner.
AlgebraElement inner_generator(const DerivationSpec& d);

/// Residual check for a finite sum of homogeneous components (distinct
/// degrees); the identity is checked for the summed map.
AxiomReport check_derivation_sum(const std::vector<DerivationSpec>& components, GradeWindow pair_window);

}  // namespace cls

#endif
