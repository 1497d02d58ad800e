#include "xkraw/rational_function.hpp"

#include <ostream>

#include "xkraw/errors.hpp"

namespace xkraw {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidParam("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    const Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divide_exact(num_, g);
        den_ = poly_divide_exact(den_, g);
    }
    if (!den_.is_monic()) {
        const Rational inv = Rational(1) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial())
        throw NotDivisible("RationalFunction::as_polynomial: denominator " + den_.str());
    return num_;
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw InvalidParam("RationalFunction::eval: pole at x = " + x.str());
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::shifted(long k) const {
    return RationalFunction(num_.shifted(k), den_.shifted(k));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InvalidParam("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

RationalFunction rf_pochhammer(const Polynomial& z, long k) {
    if (k >= 0) return RationalFunction(pochhammer_poly(z, k));
    // (z)_{-m} = 1 / ((z-m)_m) = 1 / ((z-m)(z-m+1)...(z-1))
    const long m = -k;
    Polynomial den = Polynomial::one();
    for (long i = 1; i <= m; ++i) den = den * (z - Polynomial(Rational(i)));
    return RationalFunction(Polynomial::one(), den);
}

} // namespace xkraw
