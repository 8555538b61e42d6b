#ifndef CLS_ERRORS_HPP
#define CLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cls {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- poly ----
struct NotDivisible : Error {
    using Error::Error;
};
struct IllegalLaurentSubstitution : Error {
    using Error::Error;
};
struct ZeroParameterC : Error {
    using Error::Error;
};
struct NotUnivariate : Error {
    using Error::Error;
};
struct ZeroDivide : Error {
    using Error::Error;
};

// ---- expr ----
struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line, int col)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};
struct UnknownIdentifier : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct IllegalExponent : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct WrongContext : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct LambdaVariableForbidden : Error {
    using Error::Error;
};

// ---- conformal_core ----
struct VariableCollision : Error {
    using Error::Error;
};

// ---- conformal_modules ----
struct MissingPattern : Error {
    using Error::Error;
};
struct OutOfWindow : Error {
    using Error::Error;
};
struct NoMatch : Error {
    using Error::Error;
};

// ---- submodules ----
struct LayoutMismatch : Error {
    using Error::Error;
};
struct WindowRequired : Error {
    using Error::Error;
};
struct NonTermination : Error {
    using Error::Error;
};
struct WindowTooSmall : Error {
    using Error::Error;
};

// ---- derivations ----
struct NotHomogeneous : Error {
    using Error::Error;
};
struct SeedNotDivisible : Error {
    using Error::Error;
};
struct NotInner : Error {
    using Error::Error;
};

}  // namespace cls

#endif
