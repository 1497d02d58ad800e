#pragma once

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "xkraw/rational.hpp"

namespace xkraw {

// Degree reported for the zero polynomial: ordered below every true degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Dense univariate polynomial with exact rational coefficients, constant
// term first.  Always normalized: no trailing zero coefficients, and the
// zero polynomial is the empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Rational& constant) { c_.push_back(constant); trim(); }

    static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial{Rational(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    const Rational& leading() const;
    // Coefficient of x^k (zero when k exceeds the degree).
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    // P(x + k), exact binomial expansion.
    Polynomial shifted(long k) const { return composed_linear(Rational(k), Rational(1)); }
    // P(c0 + c1*x).
    Polynomial composed_linear(const Rational& c0, const Rational& c1) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return s * std::move(p); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Human-readable form, e.g. "x^2 - 2*x + 1/2".
    std::string str(const std::string& var = "x") const;
    // Coefficient strings, constant term first (the serialization order).
    std::vector<std::string> coeff_strings() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Quotient and remainder of a by b (b nonzero): a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

// Exact quotient; throws NotDivisible (message carries the remainder) when
// the division leaves a nonzero remainder.
Polynomial poly_divide_exact(const Polynomial& a, const Polynomial& b);

// Monic gcd (Euclid); gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// prod_{i=0}^{k-1} (z + i) for k >= 0; the polynomial Pochhammer (z)_k.
Polynomial pochhammer_poly(const Polynomial& z, long k);

// Resultant Res(f, g) via the Sylvester matrix (rows of f coefficients
// first), computed with fraction-free Bareiss elimination over integers.
// Both inputs must be nonzero; a constant f gives f^{deg g} and vice versa.
Rational resultant(const Polynomial& f, const Polynomial& g);

} // namespace xkraw
