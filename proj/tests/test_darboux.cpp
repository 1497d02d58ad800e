#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xkraw/darboux.hpp"
#include "xkraw/xkrawtchouk.hpp"

using namespace xkraw;

TEST_CASE("decoupling gauges eta^(j)") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    Polynomial rising = pochhammer_poly(Polynomial::x() - Polynomial(Rational(prm.N - 1)), prm.N);

    QuasiPolynomial e1 = darboux_eta(1, prm);
    CHECK(e1.is_plain());
    CHECK(e1.poly() == Polynomial(Rational(-1)));

    QuasiPolynomial e2 = darboux_eta(2, prm);
    CHECK(e2.is_plain());
    CHECK(e2.poly() == -rising);

    QuasiPolynomial e3 = darboux_eta(3, prm);
    CHECK(e3.base() == (prm.p - Rational(1)) / prm.p);
    CHECK(e3.poly() == Polynomial(Rational(1) / prm.p));

    QuasiPolynomial e4 = darboux_eta(4, prm);
    CHECK(e4.base() == e3.base());
    CHECK(e4.poly() == Rational(1) / prm.p * rising);

    CHECK(darboux_eta(1, prm, true).poly() == Polynomial(Rational(1)));
}

TEST_CASE("seed data matches the eigen pair at depth d") {
    KrawtchoukParams prm(Rational(2, 5), 3);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 2; ++d) {
            DarbouxSeed s(j, d, prm);
            CHECK(s.mu == eigenvalue(j, d, prm.N));
            EigenPair e = eigen_pair(j, d, prm);
            CHECK(s.chi == e.phi);
            CHECK(s.P_d == e.P);
        }
    }
}

TEST_CASE("forward map lowers the classical family at d = 0") {
    // j=1, d=0: chi = 1, eta = -1, so F = -Delta and F[K_n] = -n K_{n-1}(x; p, N-1)
    KrawtchoukParams prm(Rational(1, 2), 2);
    DarbouxSeed s(1, 0, prm);
    QuasiRational f = darboux_forward(s, QuasiRational(krawtchouk(2, prm.p, Rational(prm.N))));
    REQUIRE(f.is_polynomial());
    CHECK(f.as_polynomial() == Rational(-2) * krawtchouk(1, prm.p, Rational(1)));

    for (long n = 1; n <= 5; ++n) {
        QuasiRational g = darboux_forward(s, QuasiRational(krawtchouk(n, prm.p, Rational(prm.N))));
        REQUIRE(g.is_polynomial());
        CHECK(g.as_polynomial() == Rational(-n) * krawtchouk(n - 1, prm.p, Rational(prm.N - 1)));
    }
}

TEST_CASE("factorization B o F + mu = L on a mixed sample set") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 2; ++d) {
            DarbouxSeed s(j, d, prm);
            std::vector<QuasiPolynomial> samples;
            samples.emplace_back(Polynomial::one());
            samples.emplace_back(Polynomial::x());
            samples.emplace_back(Polynomial::x() * Polynomial::x());
            samples.emplace_back(krawtchouk(3, prm.p, Rational(prm.N)));
            samples.push_back(kernel_psi(j, prm));
            samples.emplace_back(Rational(2, 3), pochhammer_poly(Polynomial::x(), 2));
            Report rep = verify_factorization(s, samples);
            CAPTURE(s.str());
            CHECK(rep.ok());
            CHECK(rep.total() == static_cast<int>(samples.size()));
        }
    }
}

TEST_CASE("chi spans the kernel of F") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 2; ++d) {
            DarbouxSeed s(j, d, prm);
            CHECK(darboux_forward(s, QuasiRational(s.chi)).is_zero());
        }
    }
}

TEST_CASE("psi^(j) spans the kernel of B, independently of d") {
    KrawtchoukParams prm(Rational(2, 7), 5);
    for (int j = 1; j <= 4; ++j) {
        QuasiPolynomial psi = kernel_psi(j, prm);
        for (long d = 0; d <= 3; ++d) {
            DarbouxSeed s(j, d, prm);
            CHECK(darboux_backward(s, QuasiRational(psi)).is_zero());
        }
    }
    CHECK(kernel_psi(4, prm) == QuasiPolynomial(Polynomial::one()));
    CHECK(kernel_psi(2, prm).base() == -(Rational(1) - prm.p) / prm.p);
}

TEST_CASE("transformed operator fixes its eigen-equation") {
    // L^{(j,d)} = F o B + mu acts on the transformed member with eigenvalue -n
    KrawtchoukParams prm(Rational(1, 3), 4);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 2; ++d) {
            DarbouxSeed s(j, d, prm);
            long lo = (j == 4) ? -d - 1 : 0;
            for (long n = lo; n <= prm.N + d + 1; ++n) {
                if (!in_index_set(j, d, n)) continue;
                QuasiRational m(xk_member(j, d, n, prm));
                CAPTURE(s.str());
                CAPTURE(n);
                CHECK(apply_x_operator(s, m) == Rational(-n) * m);
            }
        }
    }
}

TEST_CASE("back-mapping returns to the classical family") {
    // B[xk(j,d,n)] = nu_tilde^{(j)}_n K_n
    KrawtchoukParams prm(Rational(3, 5), 4);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 2; ++d) {
            DarbouxSeed s(j, d, prm);
            for (long n = 0; n <= prm.N + d + 1; ++n) {
                if (!in_index_set(j, d, n) || is_special_index(j, d, n, prm.N)) continue;
                QuasiRational img = darboux_backward(s, QuasiRational(xk(j, d, n, prm)));
                REQUIRE(img.is_polynomial());
                CAPTURE(s.str());
                CAPTURE(n);
                CHECK(img.as_polynomial() ==
                      nu_tilde(j, d, n, prm.N) * krawtchouk(n, prm.p, Rational(prm.N)));
            }
        }
    }
}
