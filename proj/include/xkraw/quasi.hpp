#pragma once

#include <iosfwd>
#include <string>

#include "xkraw/rational_function.hpp"

namespace xkraw {

// Quasi-polynomial r^x * P(x) with a nonzero rational base r.  The zero
// element is normalized to base 1 so equality and addition behave.
class QuasiPolynomial {
public:
    QuasiPolynomial() : base_(1) {}
    QuasiPolynomial(Polynomial p) : base_(1), poly_(std::move(p)) {}  // NOLINT
    QuasiPolynomial(const Rational& base, Polynomial p);

    const Rational& base() const { return base_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    // True when the geometric part is trivial (plain polynomial).
    bool is_plain() const { return base_ == Rational(1); }

    Rational eval(long x) const { return pow(base_, x) * poly_.eval(Rational(x)); }

    // Shift operators: T f(x) = f(x+1), T^{-1} f(x) = f(x-1).
    QuasiPolynomial shifted(long k) const {
        return QuasiPolynomial(base_, pow(base_, k) * poly_.shifted(k));
    }

    QuasiPolynomial operator-() const { return QuasiPolynomial(base_, -poly_); }
    // Addition requires matching bases (or a zero side); MixedBase otherwise.
    friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b);
    friend QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& q);

    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.base_ == b.base_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const QuasiPolynomial& a, const QuasiPolynomial& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuasiPolynomial& q);

private:
    Rational base_;
    Polynomial poly_;
};

// Result of a difference operator: r^x * (rational function).  Carries an
// exactness flag -- is_polynomial() -- telling whether the value collapsed
// to a polynomial after reduction.
class QuasiRational {
public:
    QuasiRational() : base_(1) {}
    QuasiRational(RationalFunction v) : base_(1), value_(std::move(v)) { normalize(); }  // NOLINT
    QuasiRational(const Polynomial& p) : base_(1), value_(p) { normalize(); }            // NOLINT
    QuasiRational(const QuasiPolynomial& q) : base_(q.base()), value_(q.poly()) { normalize(); }  // NOLINT
    QuasiRational(const Rational& base, RationalFunction v);

    const Rational& base() const { return base_; }
    const RationalFunction& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_polynomial() const { return value_.is_polynomial(); }

    QuasiPolynomial as_quasi_polynomial() const;
    // Requires base 1 and polynomial value.
    Polynomial as_polynomial() const;

    QuasiRational shifted(long k) const {
        return QuasiRational(base_, RationalFunction(pow(base_, k)) * value_.shifted(k));
    }

    QuasiRational operator-() const { return QuasiRational(base_, -value_); }
    friend QuasiRational operator+(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator-(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator/(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const Rational& s, const QuasiRational& q);

    friend bool operator==(const QuasiRational& a, const QuasiRational& b) {
        return a.base_ == b.base_ && a.value_ == b.value_;
    }
    friend bool operator!=(const QuasiRational& a, const QuasiRational& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuasiRational& q);

private:
    void normalize() {
        if (value_.is_zero()) base_ = Rational(1);
    }
    Rational base_;
    RationalFunction value_;
};

} // namespace xkraw
