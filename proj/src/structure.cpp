#include "xkraw/structure.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace xkraw {

namespace {

Rational binom_weight(long top, long x, const Rational& p) {
    return binomial(top, x) * pow(p, x) * pow(Rational(1) - p, top - x);
}

void finish_sign_flags(OrthogonalityData& dat) {
    bool pos = true;
    bool neg = true;
    for (const Rational& w : dat.weights) {
        if (w.sign() <= 0) pos = false;
        if (w.sign() >= 0) neg = false;
    }
    dat.weight_positive = pos;
    dat.weight_sign_constant = pos || neg;
    dat.positive_definite = dat.weight_sign_constant;
}

void scan_poles(const Polynomial& P, long x_lo, long x_hi, int j, long d) {
    for (long x = x_lo; x <= x_hi; ++x) {
        if (P.eval(Rational(x)).is_zero())
            throw WeightPole("P^(" + std::to_string(j) + ")_" + std::to_string(d) +
                             " vanishes at x = " + std::to_string(x));
    }
}

OrthogonalityData data_type1(long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational p = prm.p;
    OrthogonalityData dat;
    dat.j = 1;
    dat.d = d;
    dat.p = p;
    dat.N = N;
    dat.x_min = 0;
    dat.x_max = N - 1;
    const Polynomial P = krawtchouk(d, p, Rational(N));
    scan_poles(P, 0, N, 1, d);
    for (long x = 0; x <= N - 1; ++x)
        dat.weights.push_back(binom_weight(N - 1, x, p) /
                              (P.eval(Rational(x)) * P.eval(Rational(x + 1))));
    for (long n = 0; n <= N; ++n) {
        if (n == d) continue;
        dat.index_set.push_back(n);
        dat.norms[n] = norm_h(n, prm) / (Rational(n - d) * Rational(N) * p * prm.q());
    }
    finish_sign_flags(dat);
    return dat;
}

OrthogonalityData data_type2(long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational p = prm.p;
    OrthogonalityData dat;
    dat.j = 2;
    dat.d = d;
    dat.p = p;
    dat.N = N;
    dat.x_min = -1;
    dat.x_max = N;
    const Polynomial P = krawtchouk(d, p, Rational(-N - 2)).shifted(-N - 1);
    scan_poles(P, -1, N + 1, 2, d);
    for (long x = -1; x <= N; ++x)
        dat.weights.push_back(binom_weight(N + 1, x + 1, p) /
                              (P.eval(Rational(x)) * P.eval(Rational(x + 1))));
    for (long n = 0; n <= N; ++n) {
        dat.index_set.push_back(n);
        dat.norms[n] = Rational(N + 1) * norm_h(n, prm) / Rational(N + d + 1 - n);
    }
    // the added state: its norm is the 0/0 continuation of the display above
    dat.index_set.push_back(N + d + 1);
    dat.norms[N + d + 1] = pow(Rational(-1), d) * factorial(d) * factorial(N + 1) *
                           factorial(N + d + 1) * pow(prm.q() * p, N + d + 1);
    finish_sign_flags(dat);
    return dat;
}

// Type 3 lives on the grid of type 1 at depth N-d; members differ by the
// gauge factor (p/(p-1))^x times the constant type_gamma13, so the weight
// absorbs ((p-1)/p)^{2x} and the norms pick up the constant's square.
OrthogonalityData data_type3(long d, const KrawtchoukParams& prm) {
    OrthogonalityData dat = data_type1(prm.N - d, prm);
    dat.j = 3;
    dat.d = d;
    const Rational g2 = pow((prm.p - Rational(1)) / prm.p, 2);
    for (long x = dat.x_min; x <= dat.x_max; ++x)
        dat.weights[static_cast<std::size_t>(x - dat.x_min)] *= pow(g2, x);
    std::map<long, Rational> norms;
    for (long n : dat.index_set) {
        const Rational g = type_gamma13(n, d, prm);
        norms[n] = g * g * dat.norms.at(n);
    }
    dat.norms = std::move(norms);
    finish_sign_flags(dat);
    return dat;
}

// Type 4 transports type 2 through xk(4,d,n)(x) = gamma* u(x) xk(2,d,N-n)(N-1-x)
// with u = p^{-x}(p-1)^x; x -> N-1-x is an involution of the grid {-1..N}.
OrthogonalityData data_type4(long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational p = prm.p;
    const OrthogonalityData base = data_type2(d, prm);
    OrthogonalityData dat;
    dat.j = 4;
    dat.d = d;
    dat.p = p;
    dat.N = N;
    dat.x_min = -1;
    dat.x_max = N;
    for (long x = -1; x <= N; ++x) {
        const Rational u2 = pow((p - Rational(1)) / p, 2 * x);
        dat.weights.push_back(base.weight_at(N - 1 - x) / u2);
    }
    dat.index_set.push_back(-d - 1);
    for (long n = 0; n <= N; ++n) dat.index_set.push_back(n);
    for (long n = 0; n <= N; ++n) {
        const Rational g = type_gamma24(n, d, prm);
        dat.norms[n] = g * g * base.norms.at(N - n);
    }
    // the constant member pairs with the added state of type 2; the closed
    // gamma* expression degenerates there, so the ratio is read off the grid
    // and its constancy asserted
    const Polynomial S = xk_member(2, d, N + d + 1, prm);
    Rational ratio;
    bool have = false;
    for (long x = -1; x <= N; ++x) {
        const Rational u = pow(p, -x) * pow(p - Rational(1), x);
        const Rational den = u * S.eval(Rational(N - 1 - x));
        if (den.is_zero())
            throw Error("type-4 transport: xk(2," + std::to_string(d) + "," +
                        std::to_string(N + d + 1) + ") vanishes at a grid point");
        const Rational r = Rational(1) / den;
        if (!have) {
            ratio = r;
            have = true;
        } else if (r != ratio) {
            throw Error("type-4 transport: member ratio is not constant on the grid");
        }
    }
    dat.norms[-d - 1] = ratio * ratio * base.norms.at(N + d + 1);
    finish_sign_flags(dat);
    return dat;
}

std::string coeff_map_str(const std::map<long, Rational>& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [l, v] : m) {
        if (!out.empty()) out += " ";
        out += "c[" + std::to_string(l) + "]=" + v.str();
    }
    return out;
}

} // namespace

OrthogonalityData orthogonality_data(int j, long d, const KrawtchoukParams& prm) {
    if (d < 0) throw InvalidParam("orthogonality_data: d must be >= 0");
    switch (j) {
        case 1:
            if (d > prm.N) throw InvalidParam("orthogonality_data: j=1 requires d <= N");
            return data_type1(d, prm);
        case 2:
            return data_type2(d, prm);
        case 3:
            if (d > prm.N) throw InvalidParam("orthogonality_data: j=3 requires d <= N");
            return data_type3(d, prm);
        case 4:
            return data_type4(d, prm);
        default:
            throw InvalidParam("orthogonality_data: j must be 1..4");
    }
}

Report verify_orthogonality(const OrthogonalityData& dat, long n_max) {
    Report rep;
    rep.suite = "orthogonality";
    const KrawtchoukParams prm(dat.p, dat.N);
    std::vector<long> idx;
    for (long n : dat.index_set)
        if (n_max < 0 || n <= n_max) idx.push_back(n);
    std::map<long, Polynomial> members;
    for (long n : idx) members[n] = xk_member(dat.j, dat.d, n, prm);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t k = i; k < idx.size(); ++k) {
            const long n = idx[i];
            const long m = idx[k];
            Rational sum;
            for (long x = dat.x_min; x <= dat.x_max; ++x)
                sum += dat.weight_at(x) * members.at(n).eval(Rational(x)) *
                       members.at(m).eval(Rational(x));
            const Rational expect = (n == m) ? dat.norms.at(n) : Rational(0);
            rep.add_eq("ortho.pair",
                       dat.str() + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                       sum == expect, sum.str(), expect.str());
        }
    }
    return rep;
}

bool span_membership(const DarbouxSeed& s, const Polynomial& q) {
    return darboux_backward(s, QuasiRational(q)).is_polynomial();
}

Report polynomiality_equivalence_check(const DarbouxSeed& s, const std::vector<Polynomial>& samples) {
    Report rep;
    rep.suite = "prop54";
    for (const Polynomial& pi : samples) {
        const bool b = darboux_backward(s, QuasiRational(pi)).is_polynomial();
        const bool l = apply_x_operator(s, QuasiRational(pi)).is_polynomial();
        rep.add_eq("prop54.agree", s.str() + " pi=" + pi.str(), b == l,
                   b ? "B polynomial" : "B non-polynomial",
                   l ? "L polynomial" : "L non-polynomial");
    }
    return rep;
}

Polynomial minimal_q_pi(int j, long d, const KrawtchoukParams& prm) {
    const long N = prm.N;
    Polynomial out;
    switch (j) {
        case 1: out = krawtchouk(d + 1, prm.p, Rational(N + 1)).shifted(1); break;
        case 2: out = krawtchouk(d + 1, prm.p, Rational(-N - 1)).shifted(-N); break;
        case 3: out = krawtchouk(d + 1, prm.q(), Rational(N + 1)).shifted(1); break;
        case 4: out = krawtchouk(d + 1, prm.q(), Rational(-N - 1)).shifted(-N); break;
        default: throw InvalidParam("minimal_q_pi: j must be 1..4");
    }
    const DarbouxSeed s(j, d, prm);
    (void)recurrence_pi(s, out);  // must define a polynomial pi
    return out;
}

Polynomial recurrence_pi(const DarbouxSeed& s, const Polynomial& q_pi) {
    const Polynomial dq = q_pi - q_pi.shifted(-1);
    const Rational p = s.prm.p;
    const long N = s.prm.N;
    Polynomial num;
    switch (s.j) {
        case 1: num = p * (Polynomial{Rational(-N), Rational(1)} * dq); break;
        case 2: num = p * dq; break;
        case 3: num = Polynomial{Rational(N), Rational(-1)} * dq; break;
        case 4: num = -dq; break;
        default: throw InvalidParam("recurrence_pi: j must be 1..4");
    }
    Polynomial pi;
    try {
        pi = poly_divide_exact(num, s.P_d);
    } catch (const NotDivisible&) {
        throw NotInSpan("pi for q_pi = " + q_pi.str() + " is not a polynomial (" + s.str() + ")");
    }
    if (!pi.is_zero()) {
        const long m = q_pi.degree();
        const long expected = m - s.d - ((s.j == 2 || s.j == 4) ? 1 : 0);
        if (pi.degree() != expected)
            throw Error("pi degree " + std::to_string(pi.degree()) + " != expected " +
                        std::to_string(expected) + " (" + s.str() + ")");
    }
    return pi;
}

std::map<long, Rational> expand_in_k_basis(const Polynomial& f, const Rational& p,
                                           const Rational& a) {
    std::map<long, Rational> out;
    Polynomial r = f;
    while (!r.is_zero()) {
        const long deg = r.degree();
        const Rational c = r.leading();
        out[deg] = c;
        r -= c * krawtchouk(deg, p, a);
    }
    return out;
}

std::map<long, Rational> expand_in_xk_basis(int j, long d, const KrawtchoukParams& prm,
                                            const Polynomial& f) {
    std::map<long, Rational> out;
    Polynomial r = f;
    while (!r.is_zero()) {
        const long deg = r.degree();
        long l = 0;
        switch (j) {
            case 1: l = deg - d + 1; break;
            case 2:
            case 3: l = deg - d; break;
            case 4: l = (deg == 0) ? -d - 1 : deg - d - 1; break;
            default: throw InvalidParam("expand_in_xk_basis: j must be 1..4");
        }
        const bool valid = (j == 4 && l == -d - 1) || (l >= 0 && !(j == 1 && l == d));
        if (!valid)
            throw NotInSpan("no xk member of degree " + std::to_string(deg) + " in family j=" +
                            std::to_string(j) + " d=" + std::to_string(d));
        const Rational c = r.leading();
        out[l] = c;
        r -= c * xk_member(j, d, l, prm);
    }
    return out;
}

std::map<long, Rational> recurrence_coefficients(const DarbouxSeed& s, long n) {
    return recurrence_coefficients(s, n, minimal_q_pi(s.j, s.d, s.prm));
}

std::map<long, Rational> recurrence_coefficients(const DarbouxSeed& s, long n,
                                                 const Polynomial& q_pi) {
    (void)recurrence_pi(s, q_pi);  // validates the multiplier (NotInSpan otherwise)
    const int j = s.j;
    const long d = s.d;
    const long N = s.prm.N;
    const Polynomial xkn = xk_member(j, d, n, s.prm);
    const Polynomial prod = q_pi * xkn;
    std::map<long, Rational> c;
    if (is_special_index(j, d, n, N)) {
        // the special members never reach the B route; expand directly
        c = expand_in_xk_basis(j, d, s.prm, prod);
    } else {
        const Polynomial img = darboux_backward(s, QuasiRational(prod)).as_polynomial();
        const std::map<long, Rational> kexp = expand_in_k_basis(img, s.prm.p, Rational(N));
        for (const auto& [l, coef] : kexp) {
            if (!in_index_set(j, d, l))
                throw Error("B-image contains K_" + std::to_string(l) +
                            " outside the index set (" + s.str() + ")");
            const Rational nt = nu_tilde(j, d, l, N);
            if (nt.is_zero())
                throw Error("B-image contains K_" + std::to_string(l) +
                            " at a nu_tilde = 0 index (" + s.str() + ")");
            c[l] = coef / nt;
        }
        // a member killed by B leaves no trace in the image; recover its
        // coefficient from the exact residual
        Polynomial acc;
        for (const auto& [l, cl] : c) acc += cl * xk_member(j, d, l, s.prm);
        const Polynomial resid = prod - acc;
        if (!resid.is_zero()) {
            long l0 = 0;
            if (j == 3) l0 = N - d;
            else if (j == 4) l0 = -d - 1;
            else throw Error("nonzero expansion residual (" + s.str() + " n=" + std::to_string(n) + ")");
            const Polynomial quot = poly_divide_exact(resid, xk_member(j, d, l0, s.prm));
            if (!quot.is_constant())
                throw Error("residual is not a multiple of the killed member (" + s.str() + ")");
            c[l0] = quot.coeff(0);
        }
    }
    // the identity itself, and the (2m+1)-term window of Prop 5.5
    Polynomial rhs;
    for (const auto& [l, cl] : c) rhs += cl * xk_member(j, d, l, s.prm);
    if (rhs != prod)
        throw Error("recurrence expansion does not reproduce q_pi * xk (" + s.str() + " n=" +
                    std::to_string(n) + ")");
    const long m = q_pi.degree();
    for (const auto& [l, cl] : c) {
        (void)cl;
        if (l < n - m || l > n + m)
            throw Error("coefficient outside the recurrence window: l=" + std::to_string(l) +
                        " n=" + std::to_string(n) + " m=" + std::to_string(m) + " (" + s.str() + ")");
    }
    return c;
}

namespace {

using SymbolVec = std::map<long, Rational>;

// X e_l = e_{l+1} + b_l e_l + u_l e_{l-1}, the multiplication-by-x symbol on
// the K basis (Eq. K:TRR); u_0 = 0 keeps the support in l >= 0.
SymbolVec apply_X(const SymbolVec& v, const KrawtchoukParams& prm) {
    const long N = prm.N;
    const Rational pq = prm.p * prm.q();
    SymbolVec w;
    for (const auto& [l, coef] : v) {
        w[l + 1] += coef;
        const Rational b = prm.p * Rational(N - l) + Rational(l) * prm.q();
        if (!b.is_zero()) w[l] += b * coef;
        const Rational u = Rational(N + 1 - l) * Rational(l) * pq;
        if (!u.is_zero()) w[l - 1] += u * coef;
    }
    for (auto it = w.begin(); it != w.end();)
        it = it->second.is_zero() ? w.erase(it) : std::next(it);
    return w;
}

// Horner evaluation of f at the symbol X, applied to v.
SymbolVec apply_poly_X(const Polynomial& f, const SymbolVec& v, const KrawtchoukParams& prm) {
    SymbolVec res;
    for (int k = f.degree(); k >= 0; --k) {
        res = apply_X(res, prm);
        const Rational a = f.coeff(k);
        if (a.is_zero()) continue;
        for (const auto& [l, coef] : v) {
            res[l] += a * coef;
            if (res[l].is_zero()) res.erase(l);
        }
    }
    return res;
}

} // namespace

std::map<long, Rational> recurrence_coefficients_operator_method(const DarbouxSeed& s, long n,
                                                                 const Polynomial& q_pi) {
    const int j = s.j;
    const long d = s.d;
    const long N = s.prm.N;
    // The symbol assembly below divides by the Casorati normalizer nu_n, so
    // the isolated members ((2): n = N+d+1, (4): n = -d-1) are out of reach.
    if (is_special_index(j, d, n, N))
        throw ExcludedIndex("operator method excluded at the isolated member j=" +
                            std::to_string(j) + " n=" + std::to_string(n));
    if (n < 0 || !in_index_set(j, d, n))
        throw InvalidParam("no regular member at n = " + std::to_string(n) + " (" + s.str() + ")");
    const Rational nu = casorati_nu(j, d, n, Rational(N));
    if (nu.is_zero())
        throw SpecialMemberRequired("operator method needs a Casorati member; n = " +
                                    std::to_string(n) + " is special (" + s.str() + ")");

    const Polynomial pi = recurrence_pi(s, q_pi);
    const Rational p = s.prm.p;
    const Rational q = s.prm.q();

    // pi * xk_n = A_n K_n(x+1) + B_n K_n with A_n = (x-N) Atilde_n; the same
    // reduction gives Atilde_n nu_n = -p (q_pi - q_pi(x-1)) for every type.
    const Polynomial At = Rational(-1) * p * (q_pi - q_pi.shifted(-1));
    const Polynomial Pup = s.P_d.shifted(1);
    Polynomial Bp;
    switch (j) {
        case 1: Bp = pi * Pup; break;
        case 2: Bp = pi * Pup * Polynomial{Rational(1), Rational(1)}; break;
        case 3: Bp = q * (pi * Pup); break;
        case 4: Bp = q * (pi * Pup * Polynomial{Rational(1), Rational(1)}); break;
        default: throw InvalidParam("recurrence_coefficients_operator_method: j must be 1..4");
    }

    // (x-N) K_n(x+1) = K_{n+1} + (2n-N)(1-p) K_n + n(n-N-1)(1-p)^2 K_{n-1}
    SymbolVec v0;
    v0[n + 1] = Rational(1);
    const Rational c_mid = Rational(2 * n - N) * q;
    if (!c_mid.is_zero()) v0[n] = c_mid;
    if (n >= 1) {
        const Rational c_low = Rational(n) * Rational(n - N - 1) * q * q;
        if (!c_low.is_zero()) v0[n - 1] = c_low;
    }
    SymbolVec en;
    en[n] = Rational(1);

    // B[q_pi xk_n] = nu_tilde_n q_pi(x-1) K_n + pi xk_n, all on K symbols
    SymbolVec total;
    auto add_scaled = [&total](const SymbolVec& v, const Rational& scale) {
        for (const auto& [l, coef] : v) {
            total[l] += coef * scale;
            if (total[l].is_zero()) total.erase(l);
        }
    };
    const Rational inv_nu = Rational(1) / nu;
    add_scaled(apply_poly_X(At, v0, s.prm), inv_nu);
    add_scaled(apply_poly_X(Bp, en, s.prm), inv_nu);
    const Rational nt_n = nu_tilde(j, d, n, N);
    if (!nt_n.is_zero()) add_scaled(apply_poly_X(q_pi.shifted(-1), en, s.prm), nt_n);

    std::map<long, Rational> out;
    for (const auto& [l, coef] : total) {
        if (!in_index_set(j, d, l))
            throw Error("operator method left mass outside the index set: l=" +
                        std::to_string(l) + " (" + s.str() + ")");
        const Rational nt = nu_tilde(j, d, l, N);
        if (nt.is_zero())
            throw Error("operator method left mass at a killed index: l=" + std::to_string(l) +
                        " (" + s.str() + ")");
        out[l] = coef / nt;
    }
    return out;
}

Report resultant_lemma_check(const Rational& p, const std::vector<Rational>& a_values,
                             long n_max) {
    Report rep;
    rep.suite = "resultant";
    const Rational q = Rational(1) - p;
    for (const Rational& a : a_values) {
        for (long n = 1; n <= n_max; ++n) {
            const std::string params = "p=" + p.str() + " a=" + a.str() + " n=" + std::to_string(n);
            const Polynomial Kn = krawtchouk(n, p, a);
            const Polynomial Kn_up = Kn.shifted(1);
            const Rational lhs = resultant(Kn, Kn_up);

            Rational closed = pow(Rational(n), n) * pow(p * q, n * (n - 1) / 2);
            for (long k = 1; k <= n - 1; ++k)
                closed *= pow(Rational(k), k) * pow(Rational(k) - a, k);
            rep.add_eq("res.closed", params, lhs == closed, lhs.str(), closed.str());

            // contiguous relations; the second Res argument pair is the
            // common right-hand side of both
            const Rational base = resultant(krawtchouk(n - 1, p, a - Rational(1)), Kn_up);
            const Rational rel1 = pow(Rational(n), n) * base;
            rep.add_eq("res.rel1", params, lhs == rel1, lhs.str(), rel1.str());

            const Rational lhs2 =
                resultant(krawtchouk(n, p, a - Rational(1)), krawtchouk(n + 1, p, a).shifted(1));
            const Rational rel2 = pow((Rational(n) - a) * Rational(n) * p * q, n) * base;
            rep.add_eq("res.rel2", params, lhs2 == rel2, lhs2.str(), rel2.str());

            // common zeros exist exactly for integer a in {1, ..., n-1}
            const bool common = poly_gcd(Kn, Kn_up).degree() > 0;
            const bool a_inside =
                a.is_integer() && a >= Rational(1) && a <= Rational(n - 1);
            rep.add_eq("res.corollary", params, common == a_inside,
                       common ? "common zero" : "coprime",
                       a_inside ? "common zero" : "coprime");
        }
    }
    return rep;
}

std::map<long, Rational> xkraw22_expected_coeffs(long n, const KrawtchoukParams& prm) {
    if (prm.N < 3) throw InvalidParam("xkraw22_expected_coeffs: requires N >= 3");
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational pq = p * prm.q();
    std::map<long, Rational> expect;
    auto put = [&expect, n](long off, const Rational& v) {
        if (!v.is_zero()) expect[n + off] = v;
    };
    put(3, Rational(1));
    put(2, Rational(3) * Rational(N - n + 1) * (Rational(2) * p - Rational(1)));
    put(1, Rational(3) * Rational(N - n + 2) *
               (Rational(N - n + 1) - Rational(4 * N - 5 * n + 2) * pq));
    put(-1, Rational(3) * Rational(N - n + 1) * Rational(-n) * (p - Rational(1)) * p *
                Rational(N - n + 4) *
                (Rational(N - n + 2) - Rational(4 * N - 5 * n + 7) * pq));
    put(-2, Rational(3) * pochhammer(Rational(N - n + 1), 2) * pochhammer(Rational(-n), 2) *
                pow(p - Rational(1), 2) * pow(p, 2) * Rational(N - n + 5) *
                (Rational(2) * p - Rational(1)));
    put(-3, pochhammer(Rational(N - n + 1), 2) * pochhammer(Rational(-n), 3) *
                pow(p - Rational(1), 3) * pow(p, 3) * Rational(N - n + 6));
    // The diagonal is pinned by evaluating the recurrence at x = -1, where
    // q_3 vanishes: sum_l c_{n,l} xk22(n+l)(-1) = 0.  Member values at -1 in
    // closed form:
    //   m in {0..N}:       (N+1)(N+2)(N+3)(1-p)^2 (-N)_m p^m / (N+3-m)
    //   m in {N+1,N+2}, m > N+3:  0   (these members vanish on the grid)
    //   m = N+3:           terminating double sum of the added member.
    auto at_minus1 = [&](long m) -> Rational {
        if (m > N && m != N + 3) return Rational(0);
        if (m == N + 3) {
            const std::array<Rational, 3> w = {Rational((N + 3) * (N + 2)),
                                               Rational(-2 * (N + 3)), Rational(1)};
            Rational s;
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) s += w[j] * w[k] * factorial(N + j + k + 1);
            return pow(Rational(-1), N + 1) * pow(p, N + 3) * pow(p - Rational(1), 2) * s;
        }
        return Rational((N + 1) * (N + 2) * (N + 3)) * pow(Rational(1) - p, 2) *
               pochhammer(Rational(-N), m) * pow(p, m) / Rational(N + 3 - m);
    };
    Rational c0;
    for (const auto& [l, coff] : expect) c0 -= coff * at_minus1(l);
    put(0, c0 / at_minus1(n));
    return expect;
}

Report xkraw22_family(const KrawtchoukParams& prm) {
    if (prm.N < 3) throw InvalidParam("xkraw22_family: requires N >= 3");
    Report rep;
    rep.suite = "family22";
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational q = prm.q();
    const std::string base_params = prm.str() + " j=2 d=2";
    const DarbouxSeed seed(2, 2, prm);

    // determinant form: (N+3-n) xk_n = (N-x) P2(x) K_n(x+1) + (1+x) P2(x+1) K_n(x)
    const Polynomial P2 = krawtchouk(2, p, Rational(-N - 2)).shifted(-N - 1);
    const Polynomial P2up = P2.shifted(1);
    for (long n = 0; n <= N; ++n) {
        const Polynomial Kn = krawtchouk(n, p, Rational(N));
        const Polynomial det = Polynomial{Rational(N), Rational(-1)} * P2 * Kn.shifted(1) +
                               Polynomial{Rational(1), Rational(1)} * P2up * Kn;
        const Polynomial lhs = Rational(N + 3 - n) * xk(2, 2, n, prm);
        rep.add_eq("fam22.det", base_params + " n=" + std::to_string(n), lhs == det, lhs.str(),
                   det.str());
    }

    // positivity of K_2(y;p,-N-2) over the shifted grid arguments
    {
        const Polynomial K2raw = krawtchouk(2, p, Rational(-N - 2));
        bool all_pos = true;
        for (long y = -N - 2; y <= 0; ++y)
            if (K2raw.eval(Rational(y)).sign() <= 0) all_pos = false;
        rep.add_eq("fam22.P2.positive", base_params, all_pos,
                   all_pos ? "positive" : "sign change", "positive");
    }

    // weights, norms, and the closed special-state norm
    const OrthogonalityData dat = orthogonality_data(2, 2, prm);
    rep.merge(verify_orthogonality(dat));
    {
        const Rational expect =
            Rational(2) * factorial(N + 1) * factorial(N + 3) * pow(q * p, N + 3);
        rep.add_eq("fam22.norm.special", base_params, dat.norms.at(N + 3) == expect,
                   dat.norms.at(N + 3).str(), expect.str());
        rep.add_eq("fam22.weight.positive", base_params, dat.weight_positive,
                   dat.weight_positive ? "positive" : "sign change", "positive");
    }

    // the two members that vanish identically on the grid
    for (long k = N + 1; k <= N + 2; ++k) {
        const Polynomial V = xk(2, 2, k, prm);
        bool vanishes = true;
        for (long x = -1; x <= N; ++x)
            if (!V.eval(Rational(x)).is_zero()) vanishes = false;
        rep.add_eq("fam22.vanish", base_params + " n=" + std::to_string(k), vanishes,
                   vanishes ? "0 on grid" : V.str(), "0 on grid");
    }

    // seven-term recurrence with q_3(x) = K_3(x-N;p,-N-1) - K_3(-1-N;p,-N-1)
    const Polynomial qmin = minimal_q_pi(2, 2, prm);
    const Polynomial q3 = qmin - Polynomial(qmin.eval(Rational(-1)));
    std::vector<long> idx;
    for (long n = 0; n <= N; ++n) idx.push_back(n);
    idx.push_back(N + 3);
    for (long n : idx) {
        const std::map<long, Rational> got = recurrence_coefficients(seed, n, q3);
        const std::map<long, Rational> expect = xkraw22_expected_coeffs(n, prm);
        rep.add_eq("fam22.rec", base_params + " n=" + std::to_string(n), got == expect,
                   coeff_map_str(got), coeff_map_str(expect));
        if (p == Rational(1, 2)) {
            const bool z2 = got.count(n + 2) == 0 && got.count(n - 2) == 0;
            rep.add_eq("fam22.rec.p12", base_params + " n=" + std::to_string(n), z2,
                       z2 ? "c[n+-2]=0" : "nonzero", "c[n+-2]=0");
        }
    }
    return rep;
}

} // namespace xkraw
