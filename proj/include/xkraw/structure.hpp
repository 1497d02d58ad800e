#pragma once

#include <map>
#include <vector>

#include "xkraw/xkrawtchouk.hpp"

namespace xkraw {

// Discrete orthogonality structure of one X-Krawtchouk family: grid,
// weights, admissible index set, norms, and sign bookkeeping of the weight.
// Types 3 and 4 are transported from types 1 and 2 through the exact grid
// relations (gamma, gamma*).
struct OrthogonalityData {
    int j = 1;
    long d = 0;
    Rational p;
    long N = 1;
    long x_min = 0;
    long x_max = 0;
    std::vector<Rational> weights;   // indexed by x - x_min
    std::vector<long> index_set;     // sorted admissible n
    std::map<long, Rational> norms;  // n -> nhat_n
    bool weight_sign_constant = false;
    bool weight_positive = false;
    bool positive_definite = false;  // = weight_sign_constant on a pole-free grid

    const Rational& weight_at(long x) const { return weights.at(static_cast<std::size_t>(x - x_min)); }
    std::string str() const {
        return "j=" + std::to_string(j) + " d=" + std::to_string(d) + " p=" + p.str() +
               " N=" + std::to_string(N);
    }
};

// Builds the orthogonality data; throws WeightPole when the denominator
// polynomial P^{(j)}_d vanishes at a grid point or its successor, and
// InvalidParam when j in {1,3} with d > N.
OrthogonalityData orthogonality_data(int j, long d, const KrawtchoukParams& prm);

// Exact check of sum_x w(x) xk_n(x) xk_m(x) = nhat_n delta_{nm} over every
// index pair (indices above n_max skipped when n_max >= 0).
Report verify_orthogonality(const OrthogonalityData& dat, long n_max = -1);

// q is in span{ xk(j,d,n) : n in Z^{(j,d)}_{>=0} } iff B[q] is polynomial.
bool span_membership(const DarbouxSeed& s, const Polynomial& q);

// Checks that B[q] and L^{(j,d)}[q] are polynomial for exactly the same
// inputs (the equivalence of Prop-style polynomiality tests).
Report polynomiality_equivalence_check(const DarbouxSeed& s, const std::vector<Polynomial>& samples);

// Lowest-degree multiplier q_pi (degree d+1) admitting a (2d+3)-term
// recurrence: K_{d+1}(x+1;p,N+1), K_{d+1}(x-N;p,-N-1) and their p -> 1-p
// mirrors for j = 1..4.
Polynomial minimal_q_pi(int j, long d, const KrawtchoukParams& prm);

// pi(x) = p(N-x) eta/(xi P_d) (q_pi(x) - q_pi(x-1)); exact division by P_d
// must succeed (NotInSpan otherwise).  Degree m-d-[j=2]-[j=4] and, for
// j in {1,3}, divisibility by (x-N) are asserted.
Polynomial recurrence_pi(const DarbouxSeed& s, const Polynomial& q_pi);

// Greedy exact expansion in the monic Krawtchouk basis K_n(x;p,a).
std::map<long, Rational> expand_in_k_basis(const Polynomial& f, const Rational& p, const Rational& a);

// Greedy exact expansion in the X-Krawtchouk basis (degrees are distinct
// within a family); throws NotInSpan when a needed degree is missing.
std::map<long, Rational> expand_in_xk_basis(int j, long d, const KrawtchoukParams& prm,
                                            const Polynomial& f);

// Recurrence coefficients c_{n,l} of q_pi(x) xk_n = sum_l c_{n,l} xk_l,
// computed by expanding B[q_pi xk_n] in the K basis, dividing by nu_tilde,
// and resolving the nu_tilde = 0 indices from the exact residual.  The full
// identity is re-asserted before returning.  Only nonzero coefficients are
// reported.
std::map<long, Rational> recurrence_coefficients(const DarbouxSeed& s, long n,
                                                 const Polynomial& q_pi);

// Same coefficients by pure operator symbols: multiplication by x becomes
// the tridiagonal symbol X e_n = e_{n+1} + b_n e_n + u_n e_{n-1} on the
// K-basis, so no polynomial products in x are formed.  The indices with
// nu_tilde = 0 are not determined by this route and are omitted.  Throws
// ExcludedIndex at the isolated members (j,n) = (2,N+d+1), (4,-d-1), whose
// Casorati normalizer nu_n vanishes.
std::map<long, Rational> recurrence_coefficients_operator_method(const DarbouxSeed& s, long n,
                                                                 const Polynomial& q_pi);

// Resultant identities of the classical family: the closed form
//   Res(K_n(x), K_n(x+1)) = n^n prod_k k^k (k-a)^k p^{n(n-1)/2} q^{n(n-1)/2},
// the two contiguous recursions, and the common-zero corollary
// (common zeros exist iff a in {1, ..., n-1}).
Report resultant_lemma_check(const Rational& p, const std::vector<Rational>& a_values, long n_max);

// Closed-form coefficients of the (2,2) seven-term recurrence at member n,
// with q_pi = K_3(x-N;p,-N-1) - K_3(-1-N;p,-N-1); the diagonal entry comes
// from the sum rule in its telescoped 0/0-free form (requires N >= 3).
std::map<long, Rational> xkraw22_expected_coeffs(long n, const KrawtchoukParams& prm);

// The concrete j=2, d=2 family: determinant form, weight positivity,
// orthogonality norms, the vanishing members, and the seven closed-form
// recurrence coefficients for every admissible n (requires N >= 3).
Report xkraw22_family(const KrawtchoukParams& prm);

// Overload using the minimal multiplier q_pi = minimal_q_pi(j, d, params).
std::map<long, Rational> recurrence_coefficients(const DarbouxSeed& s, long n);

} // namespace xkraw
