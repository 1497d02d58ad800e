#pragma once

#include <vector>

#include "xkraw/krawtchouk.hpp"

namespace xkraw {

// Seed data of a single-step Darboux transformation of L at the eigen-pair
// (mu, chi) = (lambda^{(j)}_d, phi^{(j)}_d), together with the decoupling
// gauge eta^{(j)} that makes the transformed eigenfunctions monic:
//   F = eta^{-1} (chi(x) T - chi(x+1) I),
//   B = chi^{-1} (p(N-x) I - x(1-p) T^{-1}) eta,
//   L = B o F + mu.
struct DarbouxSeed {
    int j = 1;
    long d = 0;
    KrawtchoukParams prm;
    long mu = 0;             // lambda^{(j)}_d
    QuasiPolynomial chi;     // phi^{(j)}_d
    QuasiPolynomial eta;     // eta^{(j)}
    Polynomial P_d;          // polynomial part of chi

    DarbouxSeed(int j_, long d_, const KrawtchoukParams& prm_);
    std::string str() const {
        return "j=" + std::to_string(j) + " d=" + std::to_string(d) + " " + prm.str();
    }
};

// eta^{(j)} for grid size N:
//   -1, -(x-N+1)_N, ((p-1)/p)^x / p, ((p-1)/p)^x (x-N+1)_N / p.
// negate flips the overall sign (fault-injection hook for the CLI tests).
QuasiPolynomial darboux_eta(int j, const KrawtchoukParams& prm, bool negate = false);

// F[f] = (chi(x) f(x+1) - chi(x+1) f(x)) / eta(x).
QuasiRational darboux_forward(const DarbouxSeed& s, const QuasiRational& f);

// B[f] = (p(N-x) eta(x) f(x) - x(1-p) eta(x-1) f(x-1)) / chi(x).
QuasiRational darboux_backward(const DarbouxSeed& s, const QuasiRational& f);

// X-Krawtchouk operator L^{(j,d)}[f] = F[B[f]] + lambda^{(j)}_d f.
QuasiRational apply_x_operator(const DarbouxSeed& s, const QuasiRational& f);

// Checks B o F + mu = L on each sample (exact quasi-rational identity).
Report verify_factorization(const DarbouxSeed& s, const std::vector<QuasiPolynomial>& samples);

} // namespace xkraw
