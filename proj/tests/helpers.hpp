#ifndef CLS_TESTS_HELPERS_HPP
#define CLS_TESTS_HELPERS_HPP

#include "cls/expr.hpp"
#include "cls/poly.hpp"
#include "cls/submodules.hpp"

namespace cls::test {

inline Poly P(const std::string& text) { return parse_poly(text); }

/// Random polynomial in the given variables, coefficients in [-3, 3].
inline Poly random_poly(SplitMix64& rng, const std::vector<VarId>& vars, int max_deg) {
    Poly p;
    for (int t = rng.in_range(1, 4); t > 0; --t) {
        Monomial m;
        for (VarId v : vars) m.set(v, rng.in_range(0, max_deg));
        int c = rng.in_range(-3, 3);
        if (c != 0) p += Poly::term(m, Rational(c));
    }
    return p;
}

inline Poly random_nonzero_poly(SplitMix64& rng, const std::vector<VarId>& vars, int max_deg) {
    for (;;) {
        Poly p = random_poly(rng, vars, max_deg);
        if (!p.is_zero()) return p;
    }
}

}  // namespace cls::test

#endif
