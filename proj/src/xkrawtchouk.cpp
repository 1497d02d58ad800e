#include "xkraw/xkrawtchouk.hpp"

#include "xkraw/errors.hpp"

namespace xkraw {

namespace {

// phi^{(j)}_d(x; p, a) as a quasi-rational in x.  For j in {2,4} the gauge
// (x-a)_{a+1} requires integer a; negative a yields the reciprocal
// Pochhammer continuation.
QuasiRational phi_general(int j, long d, const Rational& p, const Rational& a) {
    const Rational ratio = (p - Rational(1)) / p;
    const Polynomial x = Polynomial::x();
    switch (j) {
        case 1:
            return QuasiRational(krawtchouk(d, p, a));
        case 3:
            return QuasiRational(ratio, RationalFunction(krawtchouk(d, Rational(1) - p, a)));
        case 2:
        case 4: {
            if (!a.is_integer())
                throw InvalidParam("phi_general: j in {2,4} requires integer a");
            const long ai = a.to_long();
            const RationalFunction gauge = rf_pochhammer(x - Polynomial(a), ai + 1);
            const Rational pp = j == 2 ? p : Rational(1) - p;
            const Polynomial core = krawtchouk(d, pp, -a - Rational(2)).shifted(-ai - 1);
            const RationalFunction value = gauge * RationalFunction(core);
            return j == 2 ? QuasiRational(value) : QuasiRational(ratio, value);
        }
        default:
            throw InvalidParam("phi_general: j must be 1..4");
    }
}

// eta^{(j)}(x; a), same continuation rule for the (x-a+1)_a factor.
QuasiRational eta_general(int j, const Rational& p, const Rational& a) {
    const Rational ratio = (p - Rational(1)) / p;
    const Polynomial x = Polynomial::x();
    switch (j) {
        case 1:
            return QuasiRational(RationalFunction(Rational(-1)));
        case 3:
            return QuasiRational(ratio, RationalFunction(Rational(1) / p));
        case 2:
        case 4: {
            if (!a.is_integer())
                throw InvalidParam("eta_general: j in {2,4} requires integer a");
            const long ai = a.to_long();
            const RationalFunction rising = rf_pochhammer(x - Polynomial(a - Rational(1)), ai);
            if (j == 2) return QuasiRational(RationalFunction(Rational(-1)) * rising);
            return QuasiRational(ratio, RationalFunction(Rational(1) / p) * rising);
        }
        default:
            throw InvalidParam("eta_general: j must be 1..4");
    }
}

} // namespace

Rational casorati_nu(int j, long d, long n, const Rational& a) {
    switch (j) {
        case 1: return Rational(d - n);
        case 2: return Rational(d - n) + a + Rational(1);
        case 3:
        case 4: return Rational(1);
        default: throw InvalidParam("casorati_nu: j must be 1..4");
    }
}

Rational nu_tilde(int j, long d, long n, long N) {
    switch (j) {
        case 1:
        case 2: return Rational(1);
        case 3: return Rational(eigenvalue(1, n, N) - eigenvalue(3, d, N));  // N - d - n
        case 4: return Rational(eigenvalue(1, n, N) - eigenvalue(4, d, N));  // -(n + d + 1)
        default: throw InvalidParam("nu_tilde: j must be 1..4");
    }
}

long xk_degree(int j, long d, long n) {
    switch (j) {
        case 1: return n + d - 1;
        case 2:
        case 3: return n + d;
        case 4: return n + d + 1;
        default: throw InvalidParam("xk_degree: j must be 1..4");
    }
}

bool is_special_index(int j, long d, long n, long N) {
    return (j == 2 && n == N + d + 1) || (j == 4 && n == -d - 1);
}

bool in_index_set(int j, long d, long n) {
    switch (j) {
        case 1: return n >= 0 && n != d;
        case 2:
        case 3: return n >= 0;
        case 4: return n >= 0 || n == -d - 1;
        default: throw InvalidParam("in_index_set: j must be 1..4");
    }
}

Polynomial xk_general(int j, long d, long n, const Rational& p, const Rational& a) {
    if (d < 0 || n < 0) throw InvalidParam("xk_general: d and n must be >= 0");
    const Rational nu = casorati_nu(j, d, n, a);
    if (nu.is_zero())
        throw SpecialMemberRequired("xk_general: nu = 0 at j=" + std::to_string(j) +
                                    " d=" + std::to_string(d) + " n=" + std::to_string(n));
    const QuasiRational phi = phi_general(j, d, p, a);
    const Polynomial Kn = krawtchouk(n, p, a);
    const QuasiRational num =
        phi * QuasiRational(Kn.shifted(1)) - phi.shifted(1) * QuasiRational(Kn);
    const QuasiRational res = num / (nu * eta_general(j, p, a));
    const Polynomial result = res.as_polynomial();  // base must cancel, value must divide out
    if (!result.is_monic() || result.degree() != xk_degree(j, d, n))
        throw Error("xk_general: normalization invariant violated at j=" + std::to_string(j) +
                    " d=" + std::to_string(d) + " n=" + std::to_string(n));
    return result;
}

Polynomial xk(int j, long d, long n, const KrawtchoukParams& prm) {
    return xk_general(j, d, n, prm.p, Rational(prm.N));
}

Polynomial xk_special(int j, long d, const KrawtchoukParams& prm) {
    if (d < 0) throw InvalidParam("xk_special: d must be >= 0");
    if (j == 4) return Polynomial::one();
    if (j != 2) throw InvalidParam("xk_special: only j in {2,4} have isolated members");

    const long N = prm.N;
    const Rational p = prm.p;
    Polynomial sum;
    for (long k = 0; k <= d; ++k) {
        for (long i = 0; i <= d; ++i) {
            const Rational c = pochhammer(Rational(-d), i) * pochhammer(Rational(-d), k) *
                               pow(p - Rational(1), d - k) * pow(p, d - i) /
                               (factorial(i) * factorial(k)) *
                               pochhammer(Rational(-N - d - 1), d - i) *
                               pochhammer(Rational(-N - d - 1), d - k);
            sum += c * krawtchouk(N + k + i + 1, p, Rational(N + k + i + 1)).shifted(k + 1);
        }
    }
    if (!sum.is_monic() || sum.degree() != N + 2 * d + 1)
        throw Error("xk_special: double sum is not monic of degree N+2d+1");
    // The defining property: B maps it onto K_{N+d+1}.
    const DarbouxSeed seed(2, d, prm);
    const Polynomial image = darboux_backward(seed, QuasiRational(sum)).as_polynomial();
    if (image != krawtchouk(N + d + 1, p, Rational(N)))
        throw Error("xk_special: B-image is not K_{N+d+1}");
    return sum;
}

Polynomial xk_member(int j, long d, long n, const KrawtchoukParams& prm) {
    if (!in_index_set(j, d, n))
        throw InvalidParam("xk_member: no member at j=" + std::to_string(j) +
                           " d=" + std::to_string(d) + " n=" + std::to_string(n));
    if (is_special_index(j, d, n, prm.N)) return xk_special(j, d, prm);
    return xk(j, d, n, prm);
}

QuasiPolynomial kernel_psi(int j, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational neg_ratio = -(Rational(1) - prm.p) / prm.p;
    const Polynomial rising =
        pochhammer_poly(Polynomial::x() - Polynomial(Rational(N - 1)), N);
    switch (j) {
        case 1: return QuasiPolynomial(neg_ratio, rising);
        case 2: return QuasiPolynomial(neg_ratio, Polynomial::one());
        case 3: return QuasiPolynomial(rising);
        case 4: return QuasiPolynomial(Polynomial::one());
        default: throw InvalidParam("kernel_psi: j must be 1..4");
    }
}

Rational type_gamma13(long n, long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational& p = prm.p;
    if (d < 0 || d > N) throw InvalidParam("type_gamma13: requires 0 <= d <= N");
    return pow(p, d - N + 1) * pow(p - Rational(1), d) * pochhammer(Rational(-N), d) /
           (pow(Rational(-1), d) * pochhammer(Rational(-N), N - d)) * Rational(n + d - N);
}

Rational type_gamma24(long n, long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational& p = prm.p;
    if (n < 0 || n > N) throw InvalidParam("type_gamma24: requires 0 <= n <= N");
    return pow(p, n) * pow(p - Rational(1), n - N + 1) * pochhammer(Rational(-N), n) /
           (pow(Rational(-1), d + 1) * pochhammer(Rational(-N), N - n)) * Rational(n + d + 1);
}

Report type_relations_check(long d, const KrawtchoukParams& prm, long n_max) {
    Report rep;
    rep.suite = "type_relations";
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational aN(N);

    // Coincidences across the d -> d+N+1 shift: with the fixed eta
    // normalizations the depth-(d+N+1) members of types 1 and 3 carry the
    // common grid factor (x-N+1)_N on top of the type-2/4 members.
    const Polynomial rising =
        pochhammer_poly(Polynomial::x() - Polynomial(Rational(N - 1)), N);
    for (long n = 0; n <= n_max; ++n) {
        const std::string params = prm.str() + " d=" + std::to_string(d) + " n=" + std::to_string(n);
        if (n != d + N + 1) {
            const Polynomial lhs = xk_general(1, d + N + 1, n, p, aN);
            const Polynomial rhs = rising * xk_general(2, d, n, p, aN);
            rep.add_eq("types.1eq2", params, lhs == rhs, lhs.str(), rhs.str());
        }
        {
            const Polynomial lhs = xk_general(3, d + N + 1, n, p, aN);
            const Polynomial rhs = rising * xk_general(4, d, n, p, aN);
            rep.add_eq("types.3eq4", params, lhs == rhs, lhs.str(), rhs.str());
        }
    }

    // Grid relation xk(3,d,n)(x) = gamma (p/(p-1))^x xk(1,N-d,n)(x)
    // on x in {0..N-1}.
    if (d <= N) {
        for (long n = 0; n <= std::min(n_max, N); ++n) {
            if (n == N - d) continue;
            const Rational gamma = type_gamma13(n, d, prm);
            const Polynomial lhs = xk(3, d, n, prm);
            const Polynomial rhs = xk(1, N - d, n, prm);
            for (long x = 0; x <= N - 1; ++x) {
                const std::string params = prm.str() + " d=" + std::to_string(d) +
                                           " n=" + std::to_string(n) + " x=" + std::to_string(x);
                const Rational l = lhs.eval(Rational(x));
                const Rational r =
                    gamma * pow(p / (p - Rational(1)), x) * rhs.eval(Rational(x));
                rep.add_eq("types.grid13", params, l == r, l.str(), r.str());
            }
        }
    }

    // Grid relation xk(4,d,n)(x) = gamma* p^{-x}(p-1)^x xk(2,d,N-n)(N-x-1).
    for (long n = 0; n <= std::min(n_max, N); ++n) {
        const Rational gamma_star = type_gamma24(n, d, prm);
        const Polynomial lhs = xk(4, d, n, prm);
        const Polynomial rhs = xk_member(2, d, N - n, prm);
        for (long x = 0; x <= N - 1; ++x) {
            const std::string params = prm.str() + " d=" + std::to_string(d) +
                                       " n=" + std::to_string(n) + " x=" + std::to_string(x);
            const Rational u = pow(p, -x) * pow(p - Rational(1), x);
            const Rational l = lhs.eval(Rational(x));
            const Rational r = gamma_star * u * rhs.eval(Rational(N - x - 1));
            rep.add_eq("types.grid24", params, l == r, l.str(), r.str());
        }
    }
    return rep;
}

Report diophantine_check(const KrawtchoukParams& prm, long d_max, long n_max) {
    Report rep;
    rep.suite = "diophantine";
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational a_cont(-N - 2);
    const Polynomial x = Polynomial::x();
    const Polynomial rising_N = pochhammer_poly(x - Polynomial(Rational(N - 1)), N);
    const Polynomial rising_N2 = pochhammer_poly(x - Polynomial(Rational(N)), N + 2);

    auto tag = [&](long d, long n) {
        return prm.str() + " d=" + std::to_string(d) + " n=" + std::to_string(n);
    };

    // n > N: each family factors through its partner at (p, -N-2).
    for (long d = 0; d <= std::min(d_max, N); ++d) {
        for (long n = N + 1; n <= n_max; ++n) {
            {
                const Polynomial lhs = xk(1, d, n, prm);
                const Polynomial rhs =
                    rising_N * xk_general(2, d, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.1to2", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
            if (n != N + d + 1) {
                const Polynomial lhs = xk(2, d, n, prm);
                const Polynomial rhs =
                    rising_N2 * xk_general(1, d, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.2to1", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
            {
                const Polynomial lhs = xk(3, d, n, prm);
                const Polynomial rhs =
                    rising_N * xk_general(4, d, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.3to4", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
            {
                const Polynomial lhs = xk(4, d, n, prm);
                const Polynomial rhs =
                    rising_N2 * xk_general(3, d, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.4to3", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
        }
        // The isolated zero member of type 3.
        {
            const Polynomial lhs = xk(3, d, N - d, prm);
            rep.add_eq("dioph.3fixed", tag(d, N - d), lhs == rising_N, lhs.str(), rising_N.str());
        }
    }

    // d > N: reduction to the partner family at the same grid.
    for (long d = N + 1; d <= d_max; ++d) {
        for (long n = 0; n <= n_max; ++n) {
            if (n != d) {
                const Polynomial lhs = xk(1, d, n, prm);
                const Polynomial rhs = rising_N * xk(2, d - N - 1, n, prm);
                rep.add_eq("dioph.bigd.1to2", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
            {
                const Polynomial lhs = xk(3, d, n, prm);
                const Polynomial rhs = rising_N * xk(4, d - N - 1, n, prm);
                rep.add_eq("dioph.bigd.3to4", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
        }
    }

    // n, d > N: double reduction with the (-x)_N (-1-x)_{N+2} prefactor.
    const Polynomial falling =
        pochhammer_poly(-x, N) * pochhammer_poly(Polynomial{Rational(-1), Rational(-1)}, N + 2);
    for (long d = N + 1; d <= d_max; ++d) {
        for (long n = N + 1; n <= n_max; ++n) {
            if (n != d) {
                const Polynomial lhs = xk(1, d, n, prm);
                const Polynomial rhs =
                    falling * xk_general(1, d - N - 1, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.bigboth.1", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
            {
                const Polynomial lhs = xk(3, d, n, prm);
                const Polynomial rhs =
                    falling * xk_general(3, d - N - 1, n - N - 1, p, a_cont).shifted(-N - 1);
                rep.add_eq("dioph.bigboth.3", tag(d, n), lhs == rhs, lhs.str(), rhs.str());
            }
        }
        // Auxiliary pair entirely at continued parameters (p, -N-2).
        const Polynomial up = pochhammer_poly(x + Polynomial::one(), N + 2);
        for (long m = 0; m <= n_max; ++m) {
            if (m != d - N - 1) {
                const Polynomial lhs = xk_general(2, d, m, p, a_cont);
                const Polynomial rhs = up * xk_general(1, d - N - 1, m, p, a_cont);
                rep.add_eq("dioph.cont.2to1", tag(d, m), lhs == rhs, lhs.str(), rhs.str());
            }
            {
                const Polynomial lhs = xk_general(4, d, m, p, a_cont);
                const Polynomial rhs = up * xk_general(3, d - N - 1, m, p, a_cont);
                rep.add_eq("dioph.cont.4to3", tag(d, m), lhs == rhs, lhs.str(), rhs.str());
            }
        }
    }
    return rep;
}

} // namespace xkraw
