#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "sl3kl/strata.hpp"

using namespace sl3kl;

namespace {

std::vector<StratumKey> keys_below(int64 c1, int64 c2, Word word) {
    std::vector<StratumKey> keys;
    for (int64 f : divisors(gcd64(c1, c2))) keys.push_back({c1 / f, c2 / f, f, word});
    return keys;
}

}  // namespace

TEST_CASE("stratum key validation") {
    REQUIRE_THROWS_AS((validate_key({0, 1, 1, Word::aba})), std::invalid_argument);
    REQUIRE_THROWS_AS((validate_key({1, 0, 1, Word::aba})), std::invalid_argument);
    REQUIRE_THROWS_AS((validate_key({1, 1, 0, Word::aba})), std::invalid_argument);
    REQUIRE_THROWS_AS((validate_key({1, 1, -2, Word::bab})), std::invalid_argument);
    REQUIRE_NOTHROW(validate_key({-3, 2, 4, Word::aba}));
}

TEST_CASE("stratum enumeration") {
    SECTION("cardinality matches the closed formula") {
        for (int64 d1 = 1; d1 <= 5; ++d1)
            for (int64 d2 = 1; d2 <= 5; ++d2)
                for (int64 f = 1; f <= 4; ++f) {
                    StratumKey key{d1, d2, f, Word::aba};
                    REQUIRE(static_cast<int64>(enumerate_cosets(key).size()) == stratum_size(key));
                    REQUIRE(stratum_size(key) == euler_phi(d1) * euler_phi(d2) * euler_phi(f) * f);
                }
    }

    SECTION("listing is lexicographic and duplicate-free") {
        StratumKey key{4, 3, 4, Word::aba};
        auto cosets = enumerate_cosets(key);
        std::vector<std::tuple<int64, int64, int64, int64>> tags;
        for (const CellParams& p : cosets) tags.emplace_back(p.x2, p.y1, p.x3, p.k);
        REQUIRE(std::is_sorted(tags.begin(), tags.end()));
        REQUIRE(std::adjacent_find(tags.begin(), tags.end()) == tags.end());
    }

    SECTION("lifts are usable as stated") {
        StratumKey key{4, 6, 2, Word::aba};
        int64 W = abs64(key.d1 * key.d2 * key.f);
        for (const CellParams& p : enumerate_cosets(key)) {
            REQUIRE(gcd64(p.x2, W) == 1);
            REQUIRE(gcd64(p.y1, W) == 1);
            REQUIRE(p.x3 > key.f);
            REQUIRE(p.x3 <= 2 * key.f);
            REQUIRE(mod_pos(p.x3 * p.y3, key.f) == mod_pos(1, key.f));
            REQUIRE(p.k >= 0);
            REQUIRE(p.k < key.f);
        }
    }

    SECTION("the two words enumerate mirror strata") {
        auto aba = enumerate_cosets({2, 3, 2, Word::aba});
        auto bab = enumerate_cosets({3, 2, 2, Word::bab});
        REQUIRE(aba.size() == bab.size());
        for (size_t i = 0; i < aba.size(); ++i) REQUIRE(aba[i] == bab[i]);
    }
}

TEST_CASE("coset counting") {
    REQUIRE(coset_count(2, 2) == 3);
    REQUIRE(coset_count(12, 12) == 140);
    REQUIRE(coset_count(1, 1) == 1);
    REQUIRE(coset_count(6, 35) == euler_phi(6) * euler_phi(35));

    for (int64 p : {3LL, 5LL, 7LL, 11LL}) REQUIRE(coset_count(p, p) == (p - 1) * (2 * p - 1));

    SECTION("per-stratum sizes add up") {
        for (int64 c1 = 1; c1 <= 10; ++c1)
            for (int64 c2 = 1; c2 <= 10; ++c2) {
                int64 total = 0;
                for (const StratumKey& key : keys_below(c1, c2, Word::aba))
                    total += stratum_size(key);
                REQUIRE(total == coset_count(c1, c2));
            }
    }

    SECTION("sign of the moduli does not change the count") {
        REQUIRE(coset_count(-12, 12) == 140);
        REQUIRE(coset_count(12, -12) == 140);
        REQUIRE_THROWS_AS(coset_count(0, 5), std::invalid_argument);
    }
}

TEST_CASE("classification inverts the representative map") {
    for (const StratumKey& key : {StratumKey{2, 3, 2, Word::aba}, StratumKey{4, 2, 1, Word::aba},
                                  StratumKey{1, 1, 4, Word::aba}, StratumKey{-2, 3, 2, Word::aba}}) {
        for (const CellParams& p : enumerate_cosets(key)) {
            auto [k2, p2] = classify(representative(key, p));
            REQUIRE(k2 == StratumKey{key.d1, key.d2, key.f, Word::aba});
            REQUIRE(p2 == p);
        }
    }

    SECTION("the mirror word lands in the mirror stratum") {
        StratumKey key{2, 3, 2, Word::bab};
        for (const CellParams& p : enumerate_cosets(key)) {
            IntMat3 A = representative(key, p);
            StratumInvariants inv = stratum_invariants(A);
            REQUIRE(inv.c1 == key.d1 * key.f);
            REQUIRE(inv.c2 == key.d2 * key.f);
            REQUIRE(stratum_invariants_braid(A).f == key.f);
        }
    }
}

TEST_CASE("refined classification") {
    for (const StratumKey& key : {StratumKey{2, 3, 2, Word::aba}, StratumKey{3, 1, 6, Word::aba},
                                  StratumKey{1, 4, 3, Word::aba}}) {
        for (const CellParams& p : enumerate_cosets(key)) {
            IntMat3 A = representative(key, p);
            RefinedKey rk = classify_refined(A);
            StratumInvariants ia = stratum_invariants(A);
            StratumInvariants ib = stratum_invariants_braid(A);
            REQUIRE(rk.f1 * rk.e == ia.f);
            REQUIRE(rk.f2 * rk.e == ib.f);
            REQUIRE(gcd64(rk.f1, rk.f2) == 1);
            REQUIRE(rk.d1 * rk.f1 * rk.f2 * rk.e == ia.c1);
            REQUIRE(rk.d2 * rk.f1 * rk.f2 * rk.e == ia.c2);
        }
    }
}

TEST_CASE("level restriction") {
    REQUIRE(level_admits(2, {1, 1, 4, Word::aba}));
    REQUIRE_FALSE(level_admits(3, {1, 1, 4, Word::aba}));
    REQUIRE(level_admits(1, {7, 5, 1, Word::aba}));
    REQUIRE_THROWS_AS((level_admits(0, StratumKey{1, 1, 1, Word::aba})), std::invalid_argument);

    SECTION("filter keeps exactly the admitted keys") {
        auto keys = keys_below(12, 12, Word::aba);
        for (int64 N : {2LL, 3LL, 4LL, 6LL}) {
            auto kept = level_filter(keys, N);
            size_t direct = 0;
            for (const StratumKey& k : keys)
                if (k.f % N == 0) ++direct;
            REQUIRE(kept.size() == direct);
            for (const StratumKey& k : kept) REQUIRE(level_admits(N, k));
        }
    }

    SECTION("stratum-level and matrix-level tests agree") {
        for (const StratumKey& key : keys_below(12, 12, Word::aba))
            for (int64 N : {2LL, 3LL, 4LL}) {
                IntMat3 A = representative(key, enumerate_cosets(key).front());
                REQUIRE(level_admits(N, key) == level_admits_matrix(N, A));
            }
    }
}

TEST_CASE("unipotent character") {
    REQUIRE(psi(1, 0, unipotent(Rational(1, 3), Rational(0), Rational(0))) == root_of_unity(1, 3));
    REQUIRE(psi(0, 1, unipotent(Rational(0), Rational(7), Rational(2, 5))) == root_of_unity(2, 5));
    REQUIRE(psi(1, 1, RatMat3::identity()) == CycSum::integer(1));
    REQUIRE(psi(2, 3, unipotent(Rational(1, 4), Rational(1, 9), Rational(1, 6))) ==
            root_of_unity(1, 2) * root_of_unity(1, 2));

    SECTION("the top right slot never contributes") {
        CycSum base = psi(5, -2, unipotent(Rational(1, 7), Rational(0), Rational(3, 4)));
        REQUIRE(psi(5, -2, unipotent(Rational(1, 7), Rational(99, 13), Rational(3, 4))) == base);
    }

    SECTION("multiplication of unipotents multiplies the values") {
        RatMat3 u = unipotent(Rational(1, 3), Rational(2), Rational(1, 4));
        RatMat3 v = unipotent(Rational(2, 5), Rational(1, 7), Rational(3, 8));
        for (int64 v1 = -2; v1 <= 2; ++v1)
            for (int64 v2 = -2; v2 <= 2; ++v2)
                REQUIRE(psi(v1, v2, u * v) == psi(v1, v2, u) * psi(v1, v2, v));
    }

    SECTION("denominators beyond the root cap are refused") {
        int64 old_cap = modulus_cap();
        set_modulus_cap(100);
        REQUIRE_THROWS_AS(psi(1, 0, unipotent(Rational(1, 101), Rational(0), Rational(0))),
                          std::runtime_error);
        set_modulus_cap(old_cap);
    }
}
