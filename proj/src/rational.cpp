#include "knutson/rational.hpp"

#include <ostream>

namespace knutson {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(q);
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1)) /= *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace knutson
