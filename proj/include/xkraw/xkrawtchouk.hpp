#pragma once

#include "xkraw/darboux.hpp"

namespace xkraw {

// Casorati normalizer nu^{(j)}_n making the X-Krawtchouk polynomials monic;
// depends on the degree parameter a (a = N on the standard grid).
Rational casorati_nu(int j, long d, long n, const Rational& a);

// Back-mapping factor: B^{(j,d)}[xk(j,d,n)] = nu_tilde * K_n.
Rational nu_tilde(int j, long d, long n, long N);

// Degree of xk(j,d,n): n+d-1, n+d, n+d, n+d+1 for j = 1..4 (also valid for
// the two special members).
long xk_degree(int j, long d, long n);

// True when (j, n) is one of the two members that exist outside the
// Casorati construction: (j=2, n=N+d+1) and (j=4, n=-d-1).
bool is_special_index(int j, long d, long n, long N);

// Membership in the index set Z^{(j,d)}_{>=0} spanned by the family.
bool in_index_set(int j, long d, long n);

// X-Krawtchouk polynomial of type j via the Casorati determinant
//   xk = (phi_d(x) K_n(x+1) - phi_d(x+1) K_n(x)) / (nu_n eta(x)),
// at general parameters (p, a); a must be an integer when j is 2 or 4
// (the gauge (x-a)_{a+1} continues to 1/(x+1)_{-a-1} for a <= -2).
// Throws SpecialMemberRequired when nu vanishes.
Polynomial xk_general(int j, long d, long n, const Rational& p, const Rational& a);

// Standard-grid member, a = N.
Polynomial xk(int j, long d, long n, const KrawtchoukParams& prm);

// The two isolated members: j=2 gives the double-sum polynomial of degree
// N+2d+1 at index n = N+d+1 (its B-image is K_{N+d+1}); j=4 gives the
// constant 1 at index n = -d-1.
Polynomial xk_special(int j, long d, const KrawtchoukParams& prm);

// Uniform accessor dispatching special indices to xk_special.
Polynomial xk_member(int j, long d, long n, const KrawtchoukParams& prm);

// Generator of Ker(B^{(j,d)}) (independent of d):
//   (-(1-p)/p)^x (x-N+1)_N,  (-(1-p)/p)^x,  (x-N+1)_N,  1.
QuasiPolynomial kernel_psi(int j, const KrawtchoukParams& prm);

// Proportionality constants of the grid relations (0 <= n <= N):
//   xk(3,d,n)(x) = type_gamma13(n,d,prm) * (p/(p-1))^x * xk(1,N-d,n)(x)
//     on x in {0..N-1}  (needs d <= N; vanishes exactly at n = N-d),
//   xk(4,d,n)(x) = type_gamma24(n,d,prm) * p^{-x}(p-1)^x * xk(2,d,N-n)(N-1-x).
Rational type_gamma13(long n, long d, const KrawtchoukParams& prm);
Rational type_gamma24(long n, long d, const KrawtchoukParams& prm);

// Identities tying the four families together: the d -> d+N+1 coincidences
// as polynomial identities and the gamma/gamma* grid relations pointwise on
// x in {0, ..., N-1}.
Report type_relations_check(long d, const KrawtchoukParams& prm, long n_max);

// The full list of factorization/Diophantine identities, including the
// d > N and (n, d) > N cases at continued parameters (p, -N-2).
Report diophantine_check(const KrawtchoukParams& prm, long d_max, long n_max);

} // namespace xkraw
