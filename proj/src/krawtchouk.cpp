#include "xkraw/krawtchouk.hpp"

#include "xkraw/errors.hpp"

namespace xkraw {

void KrawtchoukParams::validate() const {
    if (N < 1) throw InvalidParam("KrawtchoukParams: N must be a positive integer");
    if (p <= Rational(0) || p >= Rational(1))
        throw InvalidParam("KrawtchoukParams: p must satisfy 0 < p < 1");
}

Polynomial krawtchouk(long n, const Rational& p, const Rational& a) {
    if (n < 0) throw InvalidParam("krawtchouk: negative degree");
    if (p.is_zero()) throw InvalidParam("krawtchouk: p must be nonzero");
    // K_n(x) = sum_{j=0}^{n} (-n)_j (-a+j)_{n-j} / j! * p^{n-j} * (-x)_j
    Polynomial result;
    Polynomial neg_x_poch = Polynomial::one();  // (-x)_j, built incrementally
    const Polynomial minus_x{Rational(0), Rational(-1)};
    for (long j = 0; j <= n; ++j) {
        if (j > 0) neg_x_poch = neg_x_poch * (minus_x + Polynomial(Rational(j - 1)));
        const Rational c = pochhammer(Rational(-n), j) * pochhammer(-a + Rational(j), n - j) /
                           factorial(j) * pow(p, n - j);
        result += c * neg_x_poch;
    }
    return result;
}

Polynomial krawtchouk_by_recurrence(long n, const Rational& p, const Rational& a) {
    if (n < 0) throw InvalidParam("krawtchouk_by_recurrence: negative degree");
    // x K_n = K_{n+1} + (p(a-n) + n(1-p)) K_n + (a+1-n) n p (1-p) K_{n-1}
    Polynomial prev;                      // K_{-1} := 0
    Polynomial cur = Polynomial::one();   // K_0
    const Polynomial x = Polynomial::x();
    const Rational q = Rational(1) - p;
    for (long k = 0; k < n; ++k) {
        const Rational b = p * (a - Rational(k)) + Rational(k) * q;
        const Rational u = (a + Rational(1 - k)) * Rational(k) * p * q;
        Polynomial next = x * cur - b * cur - u * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational weight(long x, const KrawtchoukParams& prm) {
    if (x < 0 || x > prm.N) throw InvalidParam("weight: x outside grid");
    return binomial(prm.N, x) * pow(prm.p, x) * pow(prm.q(), prm.N - x);
}

Rational norm_h(long n, const KrawtchoukParams& prm) {
    if (n < 0) throw InvalidParam("norm_h: negative degree");
    return pow(Rational(-1), n) * pochhammer(Rational(-prm.N), n) * factorial(n) *
           pow(prm.p, n) * pow(prm.q(), n);
}

QuasiRational apply_L(const QuasiRational& f, const KrawtchoukParams& prm) {
    const QuasiRational up = f.shifted(1) - f;     // (T - I) f
    const QuasiRational down = f.shifted(-1) - f;  // (T^{-1} - I) f
    const Polynomial x = Polynomial::x();
    const QuasiRational a(prm.p * (Polynomial(Rational(prm.N)) - x));
    const QuasiRational b(prm.q() * x);
    return a * up + b * down;
}

long eigenvalue(int j, long n, long N) {
    switch (j) {
        case 1: return -n;
        case 2: return -N - n - 1;
        case 3: return -N + n;
        case 4: return n + 1;
        default: throw InvalidParam("eigenvalue: j must be 1..4");
    }
}

EigenPair eigen_pair(int j, long n, const KrawtchoukParams& prm) {
    if (n < 0) throw InvalidParam("eigen_pair: negative index");
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational ratio = (p - Rational(1)) / p;  // base of the odd-gauge solutions
    const Polynomial x = Polynomial::x();
    // (x-N)_{N+1} = x(x-1)...(x-N)
    const Polynomial gauge = pochhammer_poly(x - Polynomial(Rational(N)), N + 1);

    EigenPair e;
    e.j = j;
    e.n = n;
    e.lambda = eigenvalue(j, n, N);
    switch (j) {
        case 1:
            e.xi_base = Rational(1);
            e.xi_poly = Polynomial::one();
            e.P = krawtchouk(n, p, Rational(N));
            e.phi = QuasiPolynomial(e.P);
            break;
        case 2:
            e.xi_base = Rational(1);
            e.xi_poly = gauge;
            e.P = krawtchouk(n, p, Rational(-N - 2)).shifted(-N - 1);
            e.phi = QuasiPolynomial(e.xi_poly * e.P);
            break;
        case 3:
            e.xi_base = ratio;
            e.xi_poly = Polynomial::one();
            e.P = krawtchouk(n, Rational(1) - p, Rational(N));
            e.phi = QuasiPolynomial(ratio, e.P);
            break;
        case 4:
            e.xi_base = ratio;
            e.xi_poly = gauge;
            e.P = krawtchouk(n, Rational(1) - p, Rational(-N - 2)).shifted(-N - 1);
            e.phi = QuasiPolynomial(ratio, e.xi_poly * e.P);
            break;
        default:
            throw InvalidParam("eigen_pair: j must be 1..4");
    }
    return e;
}

Report check_symmetries(const KrawtchoukParams& prm, long n_max) {
    Report rep;
    rep.suite = "symmetries";
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational q = Rational(1) - p;

    for (long n = 0; n <= n_max; ++n) {
        const std::string params = prm.str() + " n=" + std::to_string(n);

        // (1) K_n(x; 1-p, N) = (-1)^n K_n(N - x; p, N), identity in x.
        {
            const Polynomial lhs = krawtchouk(n, q, Rational(N));
            const Polynomial rhs = pow(Rational(-1), n) *
                krawtchouk(n, p, Rational(N)).composed_linear(Rational(N), Rational(-1));
            rep.add_eq("dual.reflect", params, lhs == rhs, lhs.str(), rhs.str());
        }
        if (n > N) continue;  // the grid relations pair n with N-n

        const Polynomial Kn = krawtchouk(n, p, Rational(N));
        const Polynomial KNn = krawtchouk(N - n, p, Rational(N));
        const Polynomial Kn_flip = krawtchouk(n, q, Rational(N));

        for (long x = 0; x <= N; ++x) {
            const std::string px = params + " x=" + std::to_string(x);
            // (2) (-N)_x p^x K_n(x) = (-N)_n p^n K_x(n), self-duality.
            {
                const Rational lhs =
                    pochhammer(Rational(-N), x) * pow(p, x) * Kn.eval(Rational(x));
                const Rational rhs = pochhammer(Rational(-N), n) * pow(p, n) *
                                     krawtchouk(x, p, Rational(N)).eval(Rational(n));
                rep.add_eq("dual.selfdual", px, lhs == rhs, lhs.str(), rhs.str());
            }
            // (3) K_{N-n}(x) = (N-n)!/n! (p-1)^{x-n} (-1)^N p^{N-x-n} K_n(N-x),
            // multiplied through so both sides are plain rationals.
            {
                const Rational lhs = KNn.eval(Rational(x));
                const Rational rhs = factorial(N - n) / factorial(n) *
                                     pow(p - Rational(1), x - n) * pow(Rational(-1), N) *
                                     pow(p, N - x - n) * Kn.eval(Rational(N - x));
                rep.add_eq("dual.reverse", px, lhs == rhs, lhs.str(), rhs.str());
            }
            // (4) ((p-1)/p)^x K_n(x;1-p,N)
            //     = ((1-p)p)^n (-N)_n / (p^N (-N)_{N-n}) K_{N-n}(x;p,N),
            // the gauge form of (1) + (3) combined.
            {
                const Rational lhs =
                    pow((p - Rational(1)) / p, x) * Kn_flip.eval(Rational(x));
                const Rational rhs = pow(q * p, n) * pochhammer(Rational(-N), n) /
                                     (pow(p, N) * pochhammer(Rational(-N), N - n)) *
                                     KNn.eval(Rational(x));
                rep.add_eq("dual.gauge", px, lhs == rhs, lhs.str(), rhs.str());
            }
        }
    }
    return rep;
}

Report check_shift_variants(const KrawtchoukParams& prm, long n_max) {
    Report rep;
    rep.suite = "shift_variants";
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational q = Rational(1) - p;
    const Polynomial x = Polynomial::x();

    for (long n = 0; n <= n_max; ++n) {
        const std::string params = prm.str() + " n=" + std::to_string(n);
        const Polynomial Kn = krawtchouk(n, p, Rational(N));
        const Polynomial Kn1 = krawtchouk(n + 1, p, Rational(N));
        const Polynomial Knm =
            n > 0 ? krawtchouk(n - 1, p, Rational(N)) : Polynomial::zero();

        // (1) (x-N) K_n(x+1;p,N) = K_{n+1} + (2n-N)(1-p) K_n
        //     + n(n-N-1)(1-p)^2 K_{n-1}.
        {
            const Polynomial lhs = (x - Polynomial(Rational(N))) * Kn.shifted(1);
            const Polynomial rhs = Kn1 + (Rational(2 * n - N) * q) * Kn +
                                   (Rational(n) * Rational(n - N - 1) * q * q) * Knm;
            rep.add_eq("shift.updown", params, lhs == rhs, lhs.str(), rhs.str());
        }
        // (2) K_n(x+1;p,N) = K_n(x;p,N) + n K_{n-1}(x;p,N-1).
        {
            const Polynomial lhs = Kn.shifted(1);
            const Polynomial rhs =
                Kn + (n > 0 ? Rational(n) * krawtchouk(n - 1, p, Rational(N - 1))
                            : Polynomial::zero());
            rep.add_eq("shift.gridshrink", params, lhs == rhs, lhs.str(), rhs.str());
        }
        // (3) K_n(x+1;p,N+1) = K_n(x;p,N) + n(1-p) K_{n-1}(x;p,N).
        {
            const Polynomial lhs = krawtchouk(n, p, Rational(N + 1)).shifted(1);
            const Polynomial rhs = Kn + (Rational(n) * q) * Knm;
            rep.add_eq("shift.gridgrow", params, lhs == rhs, lhs.str(), rhs.str());
        }
        // (4) K_n(x;p,N+1) = K_n(x;p,N) - n p K_{n-1}(x;p,N).
        {
            const Polynomial lhs = krawtchouk(n, p, Rational(N + 1));
            const Polynomial rhs = Kn - (Rational(n) * p) * Knm;
            rep.add_eq("shift.gridgrow0", params, lhs == rhs, lhs.str(), rhs.str());
        }
    }
    return rep;
}

std::pair<Polynomial, Polynomial> factorization_Q(long n, const KrawtchoukParams& prm) {
    if (n < prm.N + 1)
        throw InvalidParam("factorization_Q: requires n >= N+1");
    const Polynomial head =
        pochhammer_poly(Polynomial::x() - Polynomial(Rational(prm.N)), prm.N + 1);
    const Polynomial tail =
        krawtchouk(n - prm.N - 1, prm.p, Rational(-prm.N - 2)).shifted(-prm.N - 1);
    return {head, tail};
}

} // namespace xkraw
