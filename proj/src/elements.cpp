#include "cls/module_element.hpp"

namespace cls {

std::string basis_name(const BasisId& b) {
    std::string base = b.kind == BasisKind::x ? "x" : "y";
    if (b.grade) base += "(" + std::to_string(*b.grade) + ")";
    return base;
}

ModuleElement ModuleElement::with_coeff(BasisId b, const Poly& p) {
    ModuleElement e;
    e.add(b, p);
    return e;
}

void ModuleElement::add(BasisId b, const Poly& p) {
    if (p.contains_lambda_var()) throw Error("lambda variable in module element coefficient");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

ModuleElement ModuleElement::scaled(const Poly& p) const {
    ModuleElement r;
    for (const auto& [b, c] : terms_) r.add(b, c * p);
    return r;
}

void LambdaModuleElement::add(BasisId b, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaModuleElement LambdaModuleElement::scaled(const Poly& p) const {
    LambdaModuleElement r;
    for (const auto& [b, c] : terms_) r.add(b, c * p);
    return r;
}

LambdaModuleElement& LambdaModuleElement::operator+=(const LambdaModuleElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

LambdaModuleElement& LambdaModuleElement::operator-=(const LambdaModuleElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

LambdaModuleElement LambdaModuleElement::substituted(const std::map<VarId, Poly>& sigma) const {
    LambdaModuleElement r;
    for (const auto& [b, c] : terms_) r.add(b, c.substitute(sigma));
    return r;
}

}  // namespace cls
