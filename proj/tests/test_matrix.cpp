#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "sl3kl/matrix.hpp"
#include "sl3kl/strata.hpp"

using namespace sl3kl;

namespace {

IntMat3 from_rows(std::array<int64, 9> v) {
    IntMat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = v[static_cast<size_t>(3 * i + j)];
    return m;
}

// Random SL3(Z) element: a short product of elementary transvections.
IntMat3 random_sl3(std::mt19937_64& rng, int factors = 6) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> slot(0, 5);
    IntMat3 A = IntMat3::identity();
    for (int s = 0; s < factors; ++s) {
        IntMat3 E = IntMat3::identity();
        int k = entry(rng);
        switch (slot(rng)) {
            case 0: E(1, 2) = k; break;
            case 1: E(1, 3) = k; break;
            case 2: E(2, 3) = k; break;
            case 3: E(2, 1) = k; break;
            case 4: E(3, 1) = k; break;
            default: E(3, 2) = k; break;
        }
        A = A * E;
    }
    return A;
}

}  // namespace

TEST_CASE("integer matrix basics") {
    IntMat3 I = IntMat3::identity();
    REQUIRE(I.det() == 1);
    REQUIRE(I * I == I);

    IntMat3 A = from_rows({1, 2, 3, 0, 1, 4, 0, 0, 1});
    REQUIRE(A.det() == 1);
    REQUIRE(A.transpose().transpose() == A);
    REQUIRE((A * inverse_unimodular(A)) == I);
    REQUIRE((inverse_unimodular(A) * A) == I);
    REQUIRE_THROWS_AS(inverse_unimodular(from_rows({2, 0, 0, 0, 1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("deletion minors") {
    IntMat3 W = weyl_matrix(Weyl::w0);
    REQUIRE(minor_del(W, 1, 3) == 1);
    REQUIRE(minor_del(W, 3, 1) == 1);
    REQUIRE(minor_del(W, 2, 2) == -1);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat3 A = random_sl3(rng);
        MinorTable M = minors(A);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) REQUIRE(M(i, j) == minor_del(A, i, j));
    }
}

TEST_CASE("weyl element representatives") {
    const Weyl all[] = {Weyl::id, Weyl::a, Weyl::b, Weyl::ab, Weyl::ba, Weyl::w0};
    for (Weyl w : all) {
        IntMat3 W = weyl_matrix(w);
        REQUIRE(W.det() == 1);
        REQUIRE(classify_cell(W) == w);
    }
    REQUIRE(weyl_length(Weyl::id) == 0);
    REQUIRE(weyl_length(Weyl::a) == 1);
    REQUIRE(weyl_length(Weyl::ba) == 2);
    REQUIRE(weyl_length(Weyl::w0) == 3);
    REQUIRE(std::string(weyl_name(Weyl::w0)) == "aba");

    SECTION("long element squares to the identity") {
        IntMat3 W = weyl_matrix(Weyl::w0);
        REQUIRE((W * W) == IntMat3::identity());
    }

    SECTION("unipotent slot masks partition the strict upper triangle") {
        for (Weyl w : all) {
            auto [sub, co] = uw_patterns(w);
            int inversions = (co.p12 ? 1 : 0) + (co.p13 ? 1 : 0) + (co.p23 ? 1 : 0);
            REQUIRE(inversions == weyl_length(w));
            REQUIRE(sub.p12 != co.p12);
            REQUIRE(sub.p13 != co.p13);
            REQUIRE(sub.p23 != co.p23);
        }
    }
}

TEST_CASE("cell classification covers every branch") {
    REQUIRE(classify_cell(from_rows({1, 2, 3, 0, 1, 4, 0, 0, 1})) == Weyl::id);
    REQUIRE(classify_cell(from_rows({3, 1, 0, 2, 1, 0, 0, 0, 1})) == Weyl::a);
    REQUIRE(classify_cell(from_rows({1, 0, 0, 0, 3, 1, 0, 2, 1})) == Weyl::b);
    REQUIRE(classify_cell(from_rows({1, 1, 1, 1, 2, 2, 0, 1, 2})) == Weyl::ab);
    REQUIRE(classify_cell(from_rows({0, 1, 0, -1, 0, 0, 3, 0, 1})) == Weyl::ba);
    REQUIRE(classify_cell(from_rows({1, 0, 0, 0, 1, 0, 1, 0, 1})) == Weyl::w0);
}

TEST_CASE("bruhat coordinates reconstruct the matrix") {
    std::vector<IntMat3> samples = {
        from_rows({1, 2, 3, 0, 1, 4, 0, 0, 1}),   // id
        from_rows({3, 1, 0, 2, 1, 0, 0, 0, 1}),   // a
        from_rows({1, 0, 0, 0, 3, 1, 0, 2, 1}),   // b
        from_rows({1, 1, 1, 1, 2, 2, 0, 1, 2}),   // ab
        from_rows({0, 1, 0, -1, 0, 0, 3, 0, 1}),  // ba
        from_rows({1, 0, 0, 0, 1, 0, 1, 0, 1}),   // long
    };
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) samples.push_back(random_sl3(rng));

    for (const IntMat3& A : samples) {
        BruhatCoords bc = bruhat_coords(A);
        REQUIRE(bc.cell == classify_cell(A));
        REQUIRE(bc.t[0] * bc.t[1] * bc.t[2] == 1);
        REQUIRE(reconstruct(bc) == RatMat3::from_int(A));

        auto [sub, co] = uw_patterns(bc.cell);
        if (!co.p12) REQUIRE(bc.uR(1, 2) == 0);
        if (!co.p13) REQUIRE(bc.uR(1, 3) == 0);
        if (!co.p23) REQUIRE(bc.uR(2, 3) == 0);
    }

    REQUIRE_THROWS_AS(bruhat_coords(from_rows({2, 0, 0, 0, 1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("long-cell invariants") {
    StratumKey key{2, 3, 2, Word::aba};
    for (const CellParams& p : enumerate_cosets(key)) {
        IntMat3 A = canonical_rep(p);
        StratumInvariants inv = stratum_invariants(A);
        REQUIRE(inv.c1 == key.d1 * key.f);
        REQUIRE(inv.c2 == key.d2 * key.f);
        REQUIRE(inv.f == key.f);
        REQUIRE(inv.d1 == key.d1);
        REQUIRE(inv.d2 == key.d2);
    }

    SECTION("rejects matrices outside the long cell") {
        REQUIRE_THROWS_AS(stratum_invariants(IntMat3::identity()), std::invalid_argument);
        REQUIRE_THROWS_AS(stratum_invariants_braid(weyl_matrix(Weyl::ab)), std::invalid_argument);
    }
}

TEST_CASE("minor flip involution") {
    std::mt19937_64 rng(23);
    int seen = 0;
    while (seen < 60) {
        IntMat3 A = random_sl3(rng, 8);
        if (classify_cell(A) != Weyl::w0) continue;
        ++seen;
        IntMat3 D = dagger(A);
        REQUIRE(D.det() == 1);
        REQUIRE(dagger(D) == A);

        StratumInvariants ia = stratum_invariants(A);
        StratumInvariants ib = stratum_invariants_braid(A);
        StratumInvariants id_ = stratum_invariants(D);
        REQUIRE(id_.c1 == ia.c2);
        REQUIRE(id_.c2 == ia.c1);
        REQUIRE(id_.f == ib.f);
        REQUIRE(stratum_invariants_braid(D).f == ia.f);
    }
}

TEST_CASE("corner shifts stay in the coset") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int64> n(-3, 3);
    int seen = 0;
    while (seen < 40) {
        IntMat3 A = random_sl3(rng, 8);
        if (classify_cell(A) != Weyl::w0) continue;
        ++seen;
        StratumInvariants inv = stratum_invariants(A);
        int64 n1 = n(rng), n2 = n(rng), n3 = n(rng), n4 = n(rng);
        ShiftResult s = shift_representative(A, n1, n2, n3, n4);
        REQUIRE(s.rep == s.left * A * s.right);
        REQUIRE(s.rep.det() == 1);
        StratumInvariants inv2 = stratum_invariants(s.rep);
        REQUIRE(inv2.c1 == inv.c1);
        REQUIRE(inv2.c2 == inv.c2);
        REQUIRE(inv2.f == inv.f);
        REQUIRE(coset_equal(A, s.rep));
    }

    SECTION("the first move shifts the bottom middle entry") {
        IntMat3 A = canonical_rep(enumerate_cosets({2, 3, 2, Word::aba}).front());
        StratumInvariants inv = stratum_invariants(A);
        ShiftResult s = shift_representative(A, 5, 0, 0, 0);
        REQUIRE(s.rep(3, 2) == A(3, 2) + 5 * inv.f * inv.d1);
        ShiftResult t = shift_representative(A, 0, 7, 0, 0);
        REQUIRE(t.rep(3, 3) == A(3, 3) + 7 * inv.f);
    }
}

TEST_CASE("cell parameters round-trip") {
    std::vector<StratumKey> keys = {
        {1, 1, 1, Word::aba}, {2, 2, 1, Word::aba},  {1, 1, 2, Word::aba},
        {3, 2, 2, Word::aba}, {-2, 3, 1, Word::aba}, {2, -3, 2, Word::aba},
        {4, 4, 3, Word::aba},
    };
    for (const StratumKey& key : keys) {
        for (const CellParams& p : enumerate_cosets(key)) {
            IntMat3 A = representative(key, p);
            REQUIRE(A.det() == 1);
            REQUIRE(cell_params_of(A) == p);
            REQUIRE(coset_equal(A, canonical_rep(p)));
        }
    }

    SECTION("parameters survive arbitrary coset moves") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int64> n(-4, 4);
        StratumKey key{3, 2, 2, Word::aba};
        for (const CellParams& p : enumerate_cosets(key)) {
            IntMat3 A = canonical_rep(p);
            IntMat3 B = shift_representative(A, n(rng), n(rng), n(rng), n(rng)).rep;
            REQUIRE(cell_params_of(B) == p);
        }
    }
}

TEST_CASE("integrality congruences") {
    std::vector<StratumKey> keys = {
        {1, 1, 1, Word::aba}, {2, 1, 2, Word::aba}, {2, 2, 1, Word::aba}, {3, 2, 2, Word::aba}};
    for (const StratumKey& key : keys)
        for (const CellParams& p : enumerate_cosets(key))
            REQUIRE(cell_congruences_hold(p.d1, p.d2, p.f, p.x2, p.y1, p.x3, p.y3, p.u(), p.v()));

    SECTION("perturbing the derived entry breaks them") {
        CellParams p = enumerate_cosets({2, 1, 2, Word::aba}).front();
        REQUIRE_FALSE(cell_congruences_hold(p.d1, p.d2, p.f, p.x2, p.y1, p.x3, p.y3, p.u() + 1, p.v()));
    }

    SECTION("canonical representative rejects inconsistent parameters") {
        CellParams p;
        p.d1 = 2;
        p.d2 = 1;
        p.f = 2;
        p.x3 = 3;
        p.y3 = 4;  // 3 * 4 = 12 is 0 mod 2, not 1
        REQUIRE_THROWS_AS(canonical_rep(p), std::invalid_argument);
    }
}

TEST_CASE("coset separation at small moduli") {
    std::vector<IntMat3> reps;
    for (const StratumKey& key :
         {StratumKey{2, 2, 1, Word::aba}, StratumKey{1, 1, 2, Word::aba}})
        for (const CellParams& p : enumerate_cosets(key)) reps.push_back(canonical_rep(p));
    REQUIRE(reps.size() == 3);
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) REQUIRE(coset_equal(reps[i], reps[j]) == (i == j));
}

TEST_CASE("rank-one factorizations reassemble") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int64> n(-3, 3);
    std::vector<IntMat3> samples;
    for (const StratumKey& key :
         {StratumKey{2, 3, 1, Word::aba}, StratumKey{3, 2, 2, Word::aba}, StratumKey{1, 1, 3, Word::aba}})
        for (const CellParams& p : enumerate_cosets(key)) {
            IntMat3 A = canonical_rep(p);
            samples.push_back(A);
            samples.push_back(shift_representative(A, n(rng), n(rng), n(rng), n(rng)).rep);
        }

    for (const IntMat3& A : samples) {
        MinorTable M = minors(A);
        if (A(3, 3) * M(3, 3) != 1) {
            BSFactors bs = bott_samelson(A);
            REQUIRE(embed_alpha(bs.g2) * embed_beta(bs.g3) * embed_alpha(bs.g1) == RatMat3::from_int(A));
        }
        if (A(1, 1) * M(1, 1) != 1) {
            BraidFactors br = braid_factorization(A);
            REQUIRE(embed_beta(br.g1) * embed_alpha(br.g3) * embed_beta(br.g2) == RatMat3::from_int(A));
        }
    }

    SECTION("degenerate corners are reported") {
        IntMat3 A = from_rows({1, 0, 0, 0, 1, 0, 1, 0, 1});
        REQUIRE_THROWS_AS(bott_samelson(A), std::invalid_argument);
        IntMat3 B = from_rows({1, 0, 0, 0, 1, 0, 1, 1, 1});
        REQUIRE_THROWS_AS(braid_factorization(B), std::invalid_argument);
    }
}
