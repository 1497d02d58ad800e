#include "xkraw/quasi.hpp"

#include <ostream>

#include "xkraw/errors.hpp"

namespace xkraw {

QuasiPolynomial::QuasiPolynomial(const Rational& base, Polynomial p)
    : base_(base), poly_(std::move(p)) {
    if (base_.is_zero()) throw InvalidParam("QuasiPolynomial: zero base");
    if (poly_.is_zero()) base_ = Rational(1);
}

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.base_ != b.base_)
        throw MixedBase("QuasiPolynomial: adding bases " + a.base_.str() + " and " + b.base_.str());
    return QuasiPolynomial(a.base_, a.poly_ + b.poly_);
}

QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b) { return a + (-b); }

QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QuasiPolynomial();
    return QuasiPolynomial(a.base_ * b.base_, a.poly_ * b.poly_);
}

QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& q) {
    return QuasiPolynomial(q.base_, s * q.poly_);
}

std::string QuasiPolynomial::str() const {
    if (is_plain()) return poly_.str();
    return "(" + base_.str() + ")^x * (" + poly_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuasiPolynomial& q) { return os << q.str(); }

QuasiRational::QuasiRational(const Rational& base, RationalFunction v)
    : base_(base), value_(std::move(v)) {
    if (base_.is_zero()) throw InvalidParam("QuasiRational: zero base");
    normalize();
}

QuasiPolynomial QuasiRational::as_quasi_polynomial() const {
    return QuasiPolynomial(base_, value_.as_polynomial());
}

Polynomial QuasiRational::as_polynomial() const {
    if (base_ != Rational(1))
        throw MixedBase("QuasiRational::as_polynomial: base " + base_.str());
    return value_.as_polynomial();
}

QuasiRational operator+(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.base_ != b.base_)
        throw MixedBase("QuasiRational: adding bases " + a.base_.str() + " and " + b.base_.str());
    return QuasiRational(a.base_, a.value_ + b.value_);
}

QuasiRational operator-(const QuasiRational& a, const QuasiRational& b) { return a + (-b); }

QuasiRational operator*(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero() || b.is_zero()) return QuasiRational();
    return QuasiRational(a.base_ * b.base_, a.value_ * b.value_);
}

QuasiRational operator/(const QuasiRational& a, const QuasiRational& b) {
    if (b.is_zero()) throw InvalidParam("QuasiRational: division by zero");
    if (a.is_zero()) return QuasiRational();
    return QuasiRational(a.base_ / b.base_, a.value_ / b.value_);
}

QuasiRational operator*(const Rational& s, const QuasiRational& q) {
    return QuasiRational(q.base_, RationalFunction(s) * q.value_);
}

std::string QuasiRational::str() const {
    if (base_ == Rational(1)) return value_.str();
    return "(" + base_.str() + ")^x * [" + value_.str() + "]";
}

std::ostream& operator<<(std::ostream& os, const QuasiRational& q) { return os << q.str(); }

} // namespace xkraw
