#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "xkraw/errors.hpp"

namespace xkraw {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator (GMP canonical form).  Thin value wrapper around
// mpq_class so the rest of the library never touches GMP directly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}               // NOLINT: implicit by design
    Rational(int n) : v_(n) {}                // NOLINT
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw InvalidParam("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "num/den" or "num"; rejects anything else (in particular
    // decimal notation -- exactness demands true fractions).
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // Integer value; caller must ensure is_integer() and fit in long.
    long to_long() const;

    // "num/den", denominator omitted when 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidParam("Rational: division by zero");
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

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// r^e for integer e (negative e requires r != 0).
Rational pow(const Rational& r, long e);

// Pochhammer symbol (a)_n.  For n >= 0 the rising product
// a(a+1)...(a+n-1); for n < 0 the standard continuation
// (a)_{-k} = 1/((a-k)_k), which requires every factor a-1,...,a-k nonzero.
Rational pochhammer(const Rational& a, long n);

// n! and C(n, k) as exact rationals.
Rational factorial(long n);
Rational binomial(long n, long k);

} // namespace xkraw
