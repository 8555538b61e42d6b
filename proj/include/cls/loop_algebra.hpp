#ifndef CLS_LOOP_ALGEBRA_HPP
#define CLS_LOOP_ALGEBRA_HPP

#include <map>
#include <string>

#include "cls/algebra.hpp"
#include "cls/rational.hpp"

namespace cls {

/// Basis symbol of the plain loop Lie superalgebra: L with integer weight,
/// G with half-odd-integer weight, both carrying an integer loop index.
struct LoopGenId {
    GenKind kind;
    Rational weight;
    int loop;

    Parity parity() const { return cls::parity(kind); }
    friend bool operator<(const LoopGenId& a, const LoopGenId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.loop < b.loop;
    }
    friend bool operator==(const LoopGenId&, const LoopGenId&) = default;
};

/// Validates the weight lattice: L weights integer, G weights in 1/2 + Z.
bool valid_loop_gen(const LoopGenId& g);
LoopGenId loop_L(long weight, int loop);
LoopGenId loop_G(const Rational& weight, int loop);

std::string loop_gen_name(const LoopGenId& g);  // "L(2, 0)", "G(1/2, -1)"

/// Finite rational combination of loop basis symbols.
class LoopElement {
public:
    LoopElement() = default;
    static LoopElement generator(const LoopGenId& g);

    const std::map<LoopGenId, Rational>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const LoopGenId& g, const Rational& c);
    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    LoopElement scaled(const Rational& c) const;

    friend bool operator==(const LoopElement&, const LoopElement&) = default;

private:
    std::map<LoopGenId, Rational> terms_;
};

/// Structure constants:
///   [L_{a,i}, L_{b,j}] = (a-b) L_{a+b,i+j}
///   [L_{a,i}, G_{m,j}] = (a/2 - m) G_{a+m,i+j}
///   [G_{m,i}, G_{n,j}] = 2 L_{m+n,i+j}
/// with [G, L] fixed by super skew-symmetry.
LoopElement loop_bracket(const LoopGenId& x, const LoopGenId& y);
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

/// [x,y] + (-1)^{|x||y|} [y,x]; zero iff skew holds.
LoopElement loop_skew_residual(const LoopGenId& x, const LoopGenId& y);

/// [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]; zero iff Jacobi holds.
LoopElement loop_jacobi_residual(const LoopGenId& x, const LoopGenId& y, const LoopGenId& z);

std::string print_loop_element(const LoopElement& e);

}  // namespace cls

#endif
