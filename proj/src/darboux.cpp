#include "xkraw/darboux.hpp"

#include "xkraw/errors.hpp"

namespace xkraw {

QuasiPolynomial darboux_eta(int j, const KrawtchoukParams& prm, bool negate) {
    const long N = prm.N;
    const Rational p = prm.p;
    const Rational ratio = (p - Rational(1)) / p;
    // (x-N+1)_N = (x-N+1)(x-N+2)...x
    const Polynomial rising =
        pochhammer_poly(Polynomial::x() - Polynomial(Rational(N - 1)), N);
    const Rational sign = negate ? Rational(-1) : Rational(1);
    switch (j) {
        case 1: return QuasiPolynomial(Polynomial(sign * Rational(-1)));
        case 2: return QuasiPolynomial((sign * Rational(-1)) * rising);
        case 3: return QuasiPolynomial(ratio, Polynomial(sign / p));
        case 4: return QuasiPolynomial(ratio, (sign / p) * rising);
        default: throw InvalidParam("darboux_eta: j must be 1..4");
    }
}

DarbouxSeed::DarbouxSeed(int j_, long d_, const KrawtchoukParams& prm_)
    : j(j_), d(d_), prm(prm_) {
    if (d < 0) throw InvalidParam("DarbouxSeed: d must be >= 0");
    const EigenPair e = eigen_pair(j, d, prm);
    mu = e.lambda;
    chi = e.phi;
    P_d = e.P;
    eta = darboux_eta(j, prm);
}

QuasiRational darboux_forward(const DarbouxSeed& s, const QuasiRational& f) {
    const QuasiRational chi(s.chi);
    const QuasiRational num = chi * f.shifted(1) - QuasiRational(s.chi.shifted(1)) * f;
    return num / QuasiRational(s.eta);
}

QuasiRational darboux_backward(const DarbouxSeed& s, const QuasiRational& f) {
    const QuasiRational eta(s.eta);
    const Polynomial x = Polynomial::x();
    const QuasiRational a(s.prm.p * (Polynomial(Rational(s.prm.N)) - x));
    const QuasiRational b(s.prm.q() * x);
    const QuasiRational num = a * eta * f - b * QuasiRational(s.eta.shifted(-1)) * f.shifted(-1);
    return num / QuasiRational(s.chi);
}

QuasiRational apply_x_operator(const DarbouxSeed& s, const QuasiRational& f) {
    return darboux_forward(s, darboux_backward(s, f)) + Rational(s.mu) * f;
}

Report verify_factorization(const DarbouxSeed& s, const std::vector<QuasiPolynomial>& samples) {
    Report rep;
    rep.suite = "factorization";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const QuasiRational f(samples[i]);
        const QuasiRational lhs = darboux_backward(s, darboux_forward(s, f)) + Rational(s.mu) * f;
        const QuasiRational rhs = apply_L(f, s.prm);
        rep.add_eq("darboux.factorization", s.str() + " sample=" + std::to_string(i),
                   lhs == rhs, lhs.str(), rhs.str());
    }
    return rep;
}

} // namespace xkraw
