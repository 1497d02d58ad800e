#include "xkraw/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "xkraw/errors.hpp"

namespace xkraw {

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw InvalidParam("Polynomial::leading: zero polynomial");
    return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::composed_linear(const Rational& c0, const Rational& c1) const {
    // Accumulate a_j * (c0 + c1 x)^j with an incrementally maintained power.
    Polynomial result;
    Polynomial power = Polynomial::one();
    const Polynomial lin{c0, c1};
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j > 0) power = power * lin;
        result += c_[j] * power;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, Polynomial p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        const Rational mag = a.sign() < 0 ? -a : a;
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == Rational(1) && k > 0;
        if (!unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidParam("poly_divmod: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial::zero(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rational& lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.coeff(i);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw NotDivisible("poly_divide_exact: remainder " + r.str());
    return q;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    auto monic = [](Polynomial p) {
        if (!p.is_zero() && !p.is_monic()) p = (Rational(1) / p.leading()) * p;
        return p;
    };
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

Polynomial pochhammer_poly(const Polynomial& z, long k) {
    if (k < 0) throw InvalidParam("pochhammer_poly: negative length");
    Polynomial acc = Polynomial::one();
    for (long i = 0; i < k; ++i) acc = acc * (z + Polynomial(Rational(i)));
    return acc;
}

namespace {

// Determinant of an integer matrix by Bareiss fraction-free elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

Rational resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw InvalidParam("resultant: zero polynomial");
    const int df = f.degree(), dg = g.degree();
    if (df == 0) return pow(f.coeff(0), dg);
    if (dg == 0) return pow(g.coeff(0), df);

    // Clear denominators row-wise: Res(c*f, g) = c^{deg g} Res(f, g).
    mpz_class fl(1), gl(1);
    for (int i = 0; i <= df; ++i) mpz_lcm(fl.get_mpz_t(), fl.get_mpz_t(), f.coeff(i).den().get_mpz_t());
    for (int i = 0; i <= dg; ++i) mpz_lcm(gl.get_mpz_t(), gl.get_mpz_t(), g.coeff(i).den().get_mpz_t());

    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) {
            const Rational c = Rational(fl) * f.coeff(df - i);
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = c.num();
        }
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) {
            const Rational c = Rational(gl) * g.coeff(dg - i);
            m[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + i)] = c.num();
        }

    const Rational det(bareiss_det(std::move(m)));
    return det / (pow(Rational(fl), dg) * pow(Rational(gl), df));
}

} // namespace xkraw
