#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xkraw/xkrawtchouk.hpp"

using namespace xkraw;

TEST_CASE("index bookkeeping") {
    CHECK(xk_degree(1, 2, 3) == 4);
    CHECK(xk_degree(2, 2, 3) == 5);
    CHECK(xk_degree(3, 2, 3) == 5);
    CHECK(xk_degree(4, 2, 3) == 6);

    CHECK(in_index_set(1, 2, 0));
    CHECK_FALSE(in_index_set(1, 2, 2));  // n = d is not a member for type 1
    CHECK(in_index_set(2, 2, 7));
    CHECK_FALSE(in_index_set(2, 2, -1));
    CHECK(in_index_set(4, 2, -3));  // the isolated constant member n = -d-1
    CHECK_FALSE(in_index_set(4, 2, -2));

    CHECK(is_special_index(2, 2, 7, 4));   // n = N+d+1
    CHECK_FALSE(is_special_index(2, 2, 6, 4));
    CHECK(is_special_index(4, 2, -3, 4));  // n = -d-1
    CHECK_FALSE(is_special_index(1, 2, 2, 4));
}

TEST_CASE("Casorati normalizers") {
    const Rational a(5);
    CHECK(casorati_nu(1, 2, 1, a) == Rational(1));       // d - n
    CHECK(casorati_nu(2, 2, 1, a) == Rational(7));       // d - n + N + 1
    CHECK(casorati_nu(3, 2, 1, a) == Rational(1));
    CHECK(casorati_nu(4, 2, 1, a) == Rational(1));
    CHECK(casorati_nu(2, 2, 8, a) == Rational(0));       // vanishes at the isolated index

    CHECK(nu_tilde(1, 2, 1, 5) == Rational(1));
    CHECK(nu_tilde(2, 2, 1, 5) == Rational(1));
    CHECK(nu_tilde(3, 2, 1, 5) == Rational(2));          // N - d - n
    CHECK(nu_tilde(3, 2, 3, 5) == Rational(0));          // killed at n = N - d
    CHECK(nu_tilde(4, 2, 1, 5) == Rational(-4));         // -(n + d + 1)
}

TEST_CASE("members are monic of the advertised degree") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    for (int j = 1; j <= 4; ++j) {
        for (long d = 0; d <= 3; ++d) {
            long lo = (j == 4) ? -d - 1 : 0;
            for (long n = lo; n <= prm.N + d + 1; ++n) {
                if (!in_index_set(j, d, n)) continue;
                Polynomial m = xk_member(j, d, n, prm);
                CAPTURE(j);
                CAPTURE(d);
                CAPTURE(n);
                CHECK(m.degree() == xk_degree(j, d, n));
                CHECK(m.is_monic());
            }
        }
    }
}

TEST_CASE("frozen small members") {
    KrawtchoukParams n1(Rational(1, 2), 1);
    CHECK(xk_member(2, 0, 0, n1) == Polynomial::one());
    CHECK(xk_member(2, 0, 1, n1) == Polynomial::x());
    CHECK(xk_member(2, 0, 2, n1) == Polynomial{Rational(-1, 2), Rational(0), Rational(1)});

    KrawtchoukParams n2(Rational(1, 2), 2);
    CHECK(xk_member(2, 2, 0, n2) == Polynomial{Rational(1), Rational(-1), Rational(1)});
}

TEST_CASE("isolated members") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    for (long d = 0; d <= 2; ++d) {
        // type 2: the double-sum member of degree N + 2d + 1 at index N+d+1
        Polynomial s2 = xk_special(2, d, prm);
        CHECK(s2.degree() == prm.N + 2 * d + 1);
        CHECK(s2.is_monic());
        CHECK(xk_member(2, d, prm.N + d + 1, prm) == s2);

        // type 4: the constant 1 at index -d-1
        CHECK(xk_special(4, d, prm) == Polynomial::one());
        CHECK(xk_member(4, d, -d - 1, prm) == Polynomial::one());

        // the Casorati construction itself refuses the degenerate index
        CHECK_THROWS_AS(xk_general(2, d, prm.N + d + 1, prm.p, Rational(prm.N)),
                        SpecialMemberRequired);
    }
    CHECK_THROWS_AS(xk_member(1, 2, 2, prm), InvalidParam);  // n = d is no member at all
}

TEST_CASE("type-2 isolated member maps back to K_{N+d+1}") {
    KrawtchoukParams prm(Rational(2, 5), 3);
    for (long d = 0; d <= 2; ++d) {
        DarbouxSeed s(2, d, prm);
        QuasiRational img = darboux_backward(s, QuasiRational(xk_special(2, d, prm)));
        REQUIRE(img.is_polynomial());
        CHECK(img.as_polynomial() == krawtchouk(prm.N + d + 1, prm.p, Rational(prm.N)));
    }
}

TEST_CASE("killed type-3 member is the rising factorial") {
    for (const Rational& p : {Rational(1, 3), Rational(3, 5)}) {
        for (long N = 3; N <= 5; ++N) {
            KrawtchoukParams prm(p, N);
            Polynomial rising = pochhammer_poly(Polynomial::x() - Polynomial(Rational(N - 1)), N);
            for (long d = 0; d <= 2; ++d) {
                CAPTURE(p.str());
                CAPTURE(N);
                CAPTURE(d);
                CHECK(xk_member(3, d, N - d, prm) == rising);
            }
        }
    }
}

TEST_CASE("depth d+N+1 coincides with the lower family") {
    KrawtchoukParams prm(Rational(1, 3), 3);
    Polynomial rising = pochhammer_poly(Polynomial::x() - Polynomial(Rational(prm.N - 1)), prm.N);
    for (long d = 0; d <= 2; ++d) {
        for (long n = 0; n <= prm.N + d; ++n) {
            if (!in_index_set(1, d + prm.N + 1, n) || !in_index_set(2, d, n)) continue;
            CAPTURE(d);
            CAPTURE(n);
            CHECK(xk_member(1, d + prm.N + 1, n, prm) == rising * xk_member(2, d, n, prm));
            CHECK(xk_member(3, d + prm.N + 1, n, prm) == rising * xk_member(4, d, n, prm));
        }
    }
}

TEST_CASE("gamma grid relations between mirror types") {
    KrawtchoukParams prm(Rational(1, 3), 4);
    const Rational p = prm.p;
    for (long d = 0; d <= 2; ++d) {
        for (long n = 0; n <= prm.N; ++n) {
            // type 3 against type 1 at depth N-d, gauge (p/(p-1))^x; at the
            // killed index n = N-d the right side has no member and gamma = 0
            if (in_index_set(1, prm.N - d, n)) {
                Polynomial lhs3 = xk_member(3, d, n, prm);
                Polynomial rhs1 = xk_member(1, prm.N - d, n, prm);
                Rational g13 = type_gamma13(n, d, prm);
                for (long x = 0; x <= prm.N - 1; ++x) {
                    CAPTURE(d);
                    CAPTURE(n);
                    CAPTURE(x);
                    CHECK(lhs3.eval(Rational(x)) ==
                          g13 * pow(p / (p - Rational(1)), x) * rhs1.eval(Rational(x)));
                }
            }

            // type 4 against type 2 reversed, gauge p^{-x}(p-1)^x
            Polynomial lhs4 = xk_member(4, d, n, prm);
            Polynomial rhs2 = xk_member(2, d, prm.N - n, prm);
            Rational g24 = type_gamma24(n, d, prm);
            for (long x = 0; x <= prm.N - 1; ++x) {
                CAPTURE(d);
                CAPTURE(n);
                CAPTURE(x);
                CHECK(lhs4.eval(Rational(x)) ==
                      g24 * pow(p, -x) * pow(p - Rational(1), x) * rhs2.eval(Rational(prm.N - 1 - x)));
            }
        }
    }
    // the type-3 relation degenerates exactly at the killed index
    CHECK(type_gamma13(prm.N - 1, 1, prm) == Rational(0));
    CHECK(type_gamma13(prm.N - 2, 1, prm) != Rational(0));
}

TEST_CASE("relation and Diophantine report sweeps") {
    for (const Rational& p : {Rational(1, 3), Rational(1, 2)}) {
        KrawtchoukParams prm(p, 4);
        for (long d = 0; d <= 2; ++d) {
            Report rel = type_relations_check(d, prm, 6);
            CAPTURE(p.str());
            CAPTURE(d);
            CHECK(rel.ok());
            CHECK(rel.total() > 0);
        }
        Report dio = diophantine_check(prm, 3, 8);
        CHECK(dio.ok());
        CHECK(dio.total() > 0);
    }
}
