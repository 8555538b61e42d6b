#ifndef CLS_RATIONAL_HPP
#define CLS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cls/errors.hpp"

namespace cls {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Arbitrary precision (GMP underneath).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw ZeroDivide("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "n" or "n/d" in decimal.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Fits-in-long integer value; only meaningful when is_integer().
    long to_long() const { return v_.get_num().get_si(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivide("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivide("inverse of zero");
        return Rational(1) / *this;
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    /// "3/4", "-2"; denominator omitted when 1.
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Convenience literal-ish constructor: frac(3, 2) = 3/2.
inline Rational frac(long num, long den) { return Rational(num, den); }

}  // namespace cls

#endif
