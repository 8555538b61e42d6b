#ifndef CLS_MODULE_ELEMENT_HPP
#define CLS_MODULE_ELEMENT_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "cls/algebra.hpp"
#include "cls/poly.hpp"

namespace cls {

enum class BasisKind : uint8_t { x = 0, y = 1 };

inline Parity parity(BasisKind k) { return k == BasisKind::x ? Parity::even : Parity::odd; }
inline BasisKind flipped(BasisKind k) { return k == BasisKind::x ? BasisKind::y : BasisKind::x; }

/// Basis symbol of a rank-two module: x/y ungraded, or x(j)/y(j) graded.
/// Rank-one modules reuse kind x for their single generator.
struct BasisId {
    BasisKind kind;
    std::optional<int> grade;

    bool graded() const { return grade.has_value(); }
    // Grade-major order so graded rows read (x_k, y_k, x_{k+1}, ...).
    friend bool operator<(const BasisId& a, const BasisId& b) {
        if (a.grade != b.grade) return a.grade < b.grade;
        return a.kind < b.kind;
    }
    friend bool operator==(const BasisId&, const BasisId&) = default;
};

std::string basis_name(const BasisId& b);  // "x", "y(3)"

/// Module element with lambda-free coefficients; no zero coefficients stored.
class ModuleElement {
public:
    ModuleElement() = default;
    static ModuleElement basis(BasisId b) { return with_coeff(b, Poly(1)); }
    static ModuleElement with_coeff(BasisId b, const Poly& p);

    const std::map<BasisId, Poly>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(BasisId b, const Poly& p);
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement scaled(const Poly& p) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    std::map<BasisId, Poly> terms_;
};

/// Action output; coefficients carry the lambda variable.
class LambdaModuleElement {
public:
    LambdaModuleElement() = default;
    explicit LambdaModuleElement(const ModuleElement& e) : terms_(e.support()) {}

    const std::map<BasisId, Poly>& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(BasisId b, const Poly& p);
    LambdaModuleElement scaled(const Poly& p) const;
    LambdaModuleElement& operator+=(const LambdaModuleElement& o);
    LambdaModuleElement& operator-=(const LambdaModuleElement& o);
    LambdaModuleElement substituted(const std::map<VarId, Poly>& sigma) const;

    friend bool operator==(const LambdaModuleElement&, const LambdaModuleElement&) = default;

private:
    std::map<BasisId, Poly> terms_;
};

}  // namespace cls

#endif
