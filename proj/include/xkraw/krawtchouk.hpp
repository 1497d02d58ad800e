#pragma once

#include <utility>

#include "xkraw/quasi.hpp"
#include "xkraw/report.hpp"

namespace xkraw {

// Parameters of the finite Krawtchouk family: success probability p and
// grid size N (grid {0, ..., N}).
struct KrawtchoukParams {
    Rational p;
    long N = 1;

    KrawtchoukParams(Rational p_, long N_) : p(std::move(p_)), N(N_) { validate(); }
    void validate() const;
    Rational q() const { return Rational(1) - p; }
    std::string str() const { return "p=" + p.str() + " N=" + std::to_string(N); }
};

// Monic Krawtchouk polynomial K_n(x; p, a) from the terminating
// hypergeometric sum; the degree parameter a may be any rational, which is
// what the factorization/Diophantine identities rely on.  Requires p != 0.
Polynomial krawtchouk(long n, const Rational& p, const Rational& a);

// Same polynomial built from the three-term recurrence; kept as an
// independent cross-check of the sum formula.
Polynomial krawtchouk_by_recurrence(long n, const Rational& p, const Rational& a);

// Binomial weight w(x) = C(N,x) p^x (1-p)^{N-x} on x in {0, ..., N}.
Rational weight(long x, const KrawtchoukParams& prm);

// Squared norm h_n = (-1)^n (-N)_n n! p^n (1-p)^n.
Rational norm_h(long n, const KrawtchoukParams& prm);

// Second-order difference operator
//   L = p(N-x)(T - I) + x(1-p)(T^{-1} - I),
// acting on quasi-rational functions; satisfies L K_n = -n K_n.
QuasiRational apply_L(const QuasiRational& f, const KrawtchoukParams& prm);

// One of the four eigen-solution families of L: L phi = lambda phi with
// phi(x) = xi(x) P(x), where xi is the quasi-polynomial gauge factor.
struct EigenPair {
    int j = 1;
    long n = 0;
    long lambda = 0;
    Rational xi_base;
    Polynomial xi_poly;
    Polynomial P;
    QuasiPolynomial phi;
};

EigenPair eigen_pair(int j, long n, const KrawtchoukParams& prm);

// Eigenvalue lambda^{(j)}_n for grid size N.
long eigenvalue(int j, long n, long N);

// Verifies the four duality/reflection relations: the first as a polynomial
// identity in x, the others pointwise on the grid {0, ..., N}.
Report check_symmetries(const KrawtchoukParams& prm, long n_max);

// Verifies the four forward-shift identities (contiguous relations in N) as
// polynomial identities in x for n <= n_max.
Report check_shift_variants(const KrawtchoukParams& prm, long n_max);

// For n >= N+1 splits K_n = K_{N+1} * Q_{n-N-1} with
// K_{N+1}(x) = x(x-1)...(x-N) and Q_m(x) = K_m(x-N-1; p, -N-2);
// returns the pair (K_{N+1}, Q_{n-N-1}).
std::pair<Polynomial, Polynomial> factorization_Q(long n, const KrawtchoukParams& prm);

} // namespace xkraw
