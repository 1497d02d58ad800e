#include "xkraw/rational.hpp"

#include <cctype>
#include <ostream>

namespace xkraw {

Rational Rational::parse(const std::string& s) {
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InvalidParam("Rational::parse: not an exact fraction: '" + s + "'");
        return Rational(mpq_class(mpz_class(s)));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw InvalidParam("Rational::parse: not an exact fraction: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw InvalidParam("Rational::parse: zero denominator in '" + s + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer()) throw InvalidParam("Rational::to_long: not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw InvalidParam("Rational::to_long: out of range");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r.is_zero()) {
        if (e < 0) throw InvalidParam("pow: negative power of zero");
        return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1 / r.raw()) : r.raw();
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return Rational(acc);
}

Rational pochhammer(const Rational& a, long n) {
    if (n >= 0) {
        Rational acc(1);
        for (long i = 0; i < n; ++i) acc *= a + Rational(i);
        return acc;
    }
    // (a)_{-k} = 1/((a-k)(a-k+1)...(a-1))
    Rational acc(1);
    for (long i = 1; i <= -n; ++i) {
        const Rational f = a - Rational(i);
        if (f.is_zero()) throw InvalidParam("pochhammer: negative index hits a zero factor");
        acc *= f;
    }
    return Rational(1) / acc;
}

Rational factorial(long n) {
    if (n < 0) throw InvalidParam("factorial: negative argument");
    Rational acc(1);
    for (long i = 2; i <= n; ++i) acc *= Rational(i);
    return acc;
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational acc(1);
    for (long i = 0; i < k; ++i) acc *= Rational(n - i, i + 1);
    return acc;
}

} // namespace xkraw
