#include "cls/rational.hpp"

#include <ostream>

namespace cls {

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(text, 10);
            v.canonicalize();
            return Rational(std::move(v));
        }
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw ZeroDivide("rational with zero denominator: " + text);
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDivide("negative power of zero");
        return Rational(0);
    }
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc(1);
    mpz_pow_ui(acc.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
    mpz_pow_ui(acc.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
    acc.canonicalize();
    return Rational(std::move(acc));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cls
