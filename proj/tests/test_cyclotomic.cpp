#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "sl3kl/cyclotomic.hpp"

using namespace sl3kl;

namespace {
constexpr double TWO_PI = 6.283185307179586476925286766559;
}

TEST_CASE("rational angles normalize") {
    RationalAngle a(6, 4);
    REQUIRE(a.num == 1);
    REQUIRE(a.den == 2);
    REQUIRE(RationalAngle(-1, 3) == RationalAngle(2, 3));
    REQUIRE(RationalAngle(1, -3) == RationalAngle(2, 3));
    REQUIRE(RationalAngle(0, 7) == RationalAngle(0, 1));
    REQUIRE_THROWS_AS(RationalAngle(1, 0), std::invalid_argument);
}

TEST_CASE("roots of unity") {
    REQUIRE(root_of_unity(0, 1).as_integer().has_value());
    REQUIRE(*root_of_unity(0, 1).as_integer() == 1);
    REQUIRE(*root_of_unity(1, 2).as_integer() == -1);
    REQUIRE(*root_of_unity(3, 6).as_integer() == -1);

    std::complex<double> i4 = root_of_unity(1, 4).to_complex();
    REQUIRE(std::abs(i4.real()) < 1e-12);
    REQUIRE(std::abs(i4.imag() - 1) < 1e-12);

    SECTION("numeric agreement with the unit circle") {
        for (int64 q = 1; q <= 24; ++q)
            for (int64 a = 0; a < q; ++a) {
                std::complex<double> z = root_of_unity(a, q).to_complex();
                double ang = TWO_PI * static_cast<double>(a) / static_cast<double>(q);
                REQUIRE(std::abs(z.real() - std::cos(ang)) < 1e-10);
                REQUIRE(std::abs(z.imag() - std::sin(ang)) < 1e-10);
            }
    }
}

TEST_CASE("ring operations") {
    CycSum z = root_of_unity(1, 5);

    SECTION("inverse pairs multiply to one") {
        REQUIRE(mul(z, root_of_unity(4, 5)) == CycSum::integer(1));
    }

    SECTION("full geometric sum vanishes") {
        CycSum s;
        for (int64 k = 0; k < 5; ++k) s = add(s, root_of_unity(k, 5));
        REQUIRE(s.is_zero());
        REQUIRE(*s.as_integer() == 0);
    }

    SECTION("sixth root satisfies its quadratic") {
        CycSum w = root_of_unity(1, 6);
        REQUIRE(add(mul(w, w), CycSum::integer(1)) == w);
    }

    SECTION("scaling") {
        REQUIRE(*scale(CycSum::integer(3), BigInt(-2)).as_integer() == -6);
        REQUIRE(scale(z, BigInt(0)).is_zero());
    }

    SECTION("mixed moduli align automatically") {
        CycSum a = root_of_unity(1, 3);
        CycSum b = root_of_unity(1, 2);
        CycSum p = mul(a, b);
        REQUIRE(p == root_of_unity(5, 6));
        REQUIRE(add(a, b).modulus() == 6);
    }
}

TEST_CASE("canonical forms and comparisons") {
    SECTION("rebasing preserves the value") {
        CycSum a = root_of_unity(1, 3);
        REQUIRE(a.rebased(6) == a);
        REQUIRE(a.rebased(12).modulus() == 12);
        REQUIRE_THROWS_AS(a.rebased(4), std::invalid_argument);
    }

    SECTION("the same value built two ways compares equal") {
        CycSum half = root_of_unity(1, 2);
        REQUIRE(half == CycSum::integer(-1));
        CycSum quarter_pair = add(root_of_unity(1, 4), root_of_unity(3, 4));
        REQUIRE(quarter_pair.is_zero());
        REQUIRE(quarter_pair.as_integer().has_value());
    }

    SECTION("non-integers are detected") {
        REQUIRE_FALSE(root_of_unity(1, 4).as_integer().has_value());
        REQUIRE_FALSE(is_integer(root_of_unity(2, 7)).has_value());
    }

    SECTION("conjugation") {
        REQUIRE(root_of_unity(1, 7).conjugate() == root_of_unity(6, 7));
        CycSum real_sum = add(root_of_unity(1, 5), root_of_unity(4, 5));
        REQUIRE(real_sum.conjugate() == real_sum);
    }
}

TEST_CASE("raw coefficient constructors") {
    std::vector<int64> raw(6, 0);
    raw[0] = 2;
    raw[3] = 1;
    CycSum z = CycSum::from_raw64(6, raw);
    REQUIRE(z == add(CycSum::integer(2), root_of_unity(3, 6)));
    REQUIRE(*z.as_integer() == 1);

    std::vector<BigInt> big(4, BigInt(0));
    big[2] = 7;
    REQUIRE(CycSum::from_raw(4, big) == scale(root_of_unity(2, 4), BigInt(7)));
}

TEST_CASE("root order cap") {
    int64 old_cap = modulus_cap();
    set_modulus_cap(10);
    REQUIRE_THROWS(root_of_unity(1, 11));
    set_modulus_cap(old_cap);
    REQUIRE(root_of_unity(1, 11).modulus() == 11);
}
