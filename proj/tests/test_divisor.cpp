#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sl3kl/divisor.hpp"

using namespace sl3kl;

TEST_CASE("double divisor function, exact") {
    REQUIRE(sigma2(int64{0}, int64{0}, 1, 4) == 6);
    REQUIRE(sigma2(int64{1}, int64{0}, 1, 6) == 20);
    REQUIRE(sigma2(int64{0}, int64{0}, 4, 1) == 6);
    REQUIRE(sigma2(int64{0}, int64{0}, 2, 2) == 8);
    REQUIRE(sigma2(int64{2}, int64{1}, 6, 4) == 42439);
    REQUIRE(sigma2(int64{-1}, int64{2}, 3, 5) == Rational(403, 3));

    SECTION("nested divisor sum in the first slot") {
        for (int64 n = 1; n <= 30; ++n) {
            Rational nested = 0;
            for (int64 a : divisors(n)) {
                Rational inner = 0;
                for (int64 b : divisors(a)) inner += detail::rat_pow(Rational(b), 2);
                nested += detail::rat_pow(Rational(a), 1) * inner;
            }
            REQUIRE(sigma2(int64{2}, int64{1}, 1, n) == nested);
        }
    }

    SECTION("expansion and local-factor routes agree across a grid") {
        for (int64 s1 = -2; s1 <= 2; ++s1)
            for (int64 s2 = -2; s2 <= 2; ++s2)
                for (int64 n1 = 1; n1 <= 8; ++n1)
                    for (int64 n2 = 1; n2 <= 8; ++n2) REQUIRE_NOTHROW(sigma2(s1, s2, n1, n2));
    }

    SECTION("floating route tracks the exact one") {
        for (int64 n1 : {1LL, 4LL, 6LL})
            for (int64 n2 : {2LL, 9LL, 12LL}) {
                double exact = sigma2(int64{1}, int64{2}, n1, n2).convert_to<double>();
                REQUIRE(sigma2(1.0, 2.0, n1, n2) == Catch::Approx(exact).epsilon(1e-9));
            }
        REQUIRE(sigma2(0.5, 1.5, 4, 6) > 0);
    }

    REQUIRE_THROWS_AS(sigma2(int64{1}, int64{1}, 0, 3), std::invalid_argument);
}

TEST_CASE("schur evaluation internals") {
    using detail::schur_bialternant;
    Rational a(2), b(3), c(5);

    SECTION("symmetric in the evaluation points") {
        Rational base = schur_bialternant(a, b, c, 2, 1);
        REQUIRE(schur_bialternant(a, c, b, 2, 1) == base);
        REQUIRE(schur_bialternant(b, a, c, 2, 1) == base);
        REQUIRE(schur_bialternant(c, b, a, 2, 1) == base);
    }

    SECTION("coincident points are rejected") {
        REQUIRE_THROWS_AS(schur_bialternant(a, a, c, 2, 1), std::invalid_argument);
    }

    SECTION("degenerate local factors fall back to the expansion") {
        REQUIRE(detail::sigma2_prime_power(Rational(1), Rational(7), 2, 1) ==
                detail::sigma2_monomial(Rational(1), Rational(7), 2, 1));
        Rational alpha(1, 3), beta(3);
        REQUIRE(detail::sigma2_prime_power(alpha, beta, 1, 2) ==
                detail::sigma2_monomial(alpha, beta, 1, 2));
        REQUIRE_NOTHROW(detail::sigma2_prime_power(Rational(4), Rational(9), 3, 2));
    }

    SECTION("three-fold divisor count") {
        REQUIRE(detail::tau3(1) == 1);
        REQUIRE(detail::tau3(4) == 6);
        REQUIRE(detail::tau3(12) == 18);
    }
}

TEST_CASE("hecke recursion") {
    REQUIRE(hecke_check(int64{0}, 2, 2));
    REQUIRE(hecke_check(int64{1}, 4, 2));
    REQUIRE(hecke_check(int64{3}, 9, 3));
    REQUIRE(hecke_check(int64{-2}, 10, 5));
    REQUIRE(hecke_check(2.0, 6, 3));
    REQUIRE(hecke_check(1.5, 8, 2));

    SECTION("holds across a grid") {
        for (int64 p : {2LL, 3LL, 5LL, 7LL})
            for (int64 k = 1; k <= 8; ++k)
                for (int64 alpha = -3; alpha <= 3; ++alpha) REQUIRE(hecke_check(alpha, p * k, p));
    }

    SECTION("preconditions") {
        REQUIRE_THROWS_AS(hecke_check(int64{1}, 5, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(hecke_check(int64{1}, 4, 1), std::invalid_argument);
    }
}

TEST_CASE("zeta evaluation") {
    const double pi = 3.14159265358979323846;
    REQUIRE(zeta_em(2.0) == Catch::Approx(pi * pi / 6.0).epsilon(1e-13));
    REQUIRE(zeta_em(4.0) == Catch::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-13));
    REQUIRE(zeta_em(3.0) == Catch::Approx(1.2020569031595943).epsilon(1e-12));
    REQUIRE(zeta_em(1.5) == Catch::Approx(2.612375348685488).epsilon(1e-12));
    REQUIRE_THROWS_AS(zeta_em(1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(zeta_em(0.5), std::invalid_argument);
}

TEST_CASE("triple divisor identity report") {
    SECTION("holds at the quality the tail analysis predicts") {
        for (int64 n = 1; n <= 12; ++n) {
            DivisorReport r = verify_divisor_identity(2.0, 2.0, n, 400);
            REQUIRE(r.D == 400);
            REQUIRE(r.abs_err < 1e-3);
            REQUIRE(r.abs_err <= r.tail_bound);
            REQUIRE(r.tail_bound > 0);
        }
    }

    SECTION("truncation error shrinks with the cutoff") {
        double coarse = verify_divisor_identity(2.0, 2.0, 6, 250).abs_err;
        double fine = verify_divisor_identity(2.0, 2.0, 6, 2000).abs_err;
        REQUIRE(fine < coarse);
        REQUIRE(fine < 1e-5);
    }

    SECTION("away from the symmetric point") {
        DivisorReport r = verify_divisor_identity(2.5, 1.8, 4, 600);
        REQUIRE(r.abs_err < 1e-3);
        REQUIRE(r.abs_err <= r.tail_bound);
    }

    SECTION("domain checks") {
        REQUIRE_THROWS_AS(verify_divisor_identity(1.0, 2.0, 3, 100), std::invalid_argument);
        REQUIRE_THROWS_AS(verify_divisor_identity(2.0, 0.9, 3, 100), std::invalid_argument);
        REQUIRE_THROWS_AS(verify_divisor_identity(2.0, 2.0, 0, 100), std::invalid_argument);
        REQUIRE_THROWS_AS(verify_divisor_identity(2.0, 2.0, 3, 0), std::invalid_argument);
    }
}

TEST_CASE("classical series check") {
    for (int64 n = 1; n <= 12; ++n) {
        DivisorReport r = ramanujan_classical_check(3.0, n, 300);
        REQUIRE(r.abs_err < 1e-5);
        REQUIRE(r.abs_err <= r.tail_bound);
    }

    SECTION("slow decay near the edge still converges") {
        DivisorReport r = ramanujan_classical_check(2.0, 6, 5000);
        REQUIRE(r.abs_err < 1e-4);
        double coarse = ramanujan_classical_check(2.0, 6, 250).abs_err;
        REQUIRE(r.abs_err < coarse);
    }

    REQUIRE_THROWS_AS(ramanujan_classical_check(1.0, 6, 100), std::invalid_argument);
}
