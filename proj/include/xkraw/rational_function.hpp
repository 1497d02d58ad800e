#pragma once

#include <iosfwd>
#include <string>

#include "xkraw/polynomial.hpp"

namespace xkraw {

// Quotient of two polynomials, kept coprime with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(const Rational& c) : num_(Polynomial(c)), den_(Polynomial::one()) {}  // NOLINT
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}    // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Valid only when is_polynomial(); throws otherwise.
    Polynomial as_polynomial() const;

    Rational eval(const Rational& x) const;

    // f(x + k).
    RationalFunction shifted(long k) const;

    RationalFunction operator-() const { return with(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    static RationalFunction with(Polynomial n, Polynomial d) {
        return RationalFunction(std::move(n), std::move(d));
    }
    Polynomial num_;
    Polynomial den_;
};

// (z)_k over rational functions: positive k gives the polynomial product,
// negative k the reciprocal continuation 1/((z-1)(z-2)...(z+k)).
RationalFunction rf_pochhammer(const Polynomial& z, long k);

} // namespace xkraw
