#ifndef CLS_EXPR_HPP
#define CLS_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "cls/algebra.hpp"
#include "cls/module_element.hpp"
#include "cls/poly.hpp"

namespace cls {

// Text grammar (whitespace-insensitive, '*' mandatory between factors):
//   poly    := ["+"|"-"] term (("+"|"-") term)*
//   term    := factor ("*" factor)*
//   factor  := rational | var | "(" poly ")" | factor "^" int
//   var     := "d"|"u"|"v"|"w"|"a"|"b"|"c"
//   rational:= digits ("/" digits)?
//   element := eterm (("+"|"-") eterm)*        -- or the literal "0"
//   eterm   := [poly "*"] atom
//   atom    := ("L"|"G"|"x"|"y") "(" int ")" | "x" | "y"
// Negative exponents are only legal on c.

struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Parse tree node; every node carries its source position.
struct SourceExpr {
    enum class Kind { Number, Var, Atom, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    SourcePos pos;
    Rational number;                         // Number
    VarId var = VarId::Del;                  // Var
    char atom_kind = 0;                      // Atom: 'L' 'G' 'x' 'y'
    std::optional<int> atom_grade;           // Atom
    int exponent = 0;                        // Pow
    std::vector<SourceExpr> kids;
};

SourceExpr parse_source(const std::string& text);

/// Parses the poly grammar into canonical form.
Poly parse_poly(const std::string& text);

/// Parses an element in algebra context: atoms L(i), G(i).
AlgebraElement parse_algebra_element(const std::string& text);

/// Parses an element in module context: atoms x, y, x(j), y(j).
ModuleElement parse_module_element(const std::string& text);

/// Canonical printers; parse(print(v)) == v on lambda-free values.
std::string print_poly(const Poly& p);
std::string print_element(const std::map<GenId, Poly>& support);
std::string print_element(const std::map<BasisId, Poly>& support);
std::string print_algebra_element(const AlgebraElement& e);
std::string print_module_element(const ModuleElement& e);
std::string print_lambda_valued(const LambdaValued& v);
std::string print_lambda_module_element(const LambdaModuleElement& v);

}  // namespace cls

#endif
