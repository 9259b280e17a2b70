#pragma once

// Stratified enumeration of two-sided unipotent cosets in the long cell.
// A stratum is labeled by signed block sizes (d1, d2) together with the
// corner gcd f; its cosets are parametrized by two unit residues, an
// inverse pair modulo f, and a twist class modulo f. Either reduced word of
// the long Weyl element can carry the stratification; the second word is
// reached through the minor-flip involution.

#include <vector>

#include "cyclotomic.hpp"
#include "matrix.hpp"

namespace sl3kl {

enum class Word { aba, bab };

struct StratumKey {
    int64 d1 = 1, d2 = 1, f = 1;
    Word word = Word::aba;

    bool operator==(const StratumKey& o) const {
        return d1 == o.d1 && d2 == o.d2 && f == o.f && word == o.word;
    }
};

struct CharPair {
    int64 m1 = 0, m2 = 0, n1 = 0, n2 = 0;
};

inline void validate_key(const StratumKey& key) {
    if (key.d1 == 0 || key.d2 == 0) detail::fail_arg("stratum key: d1 and d2 must be nonzero");
    if (key.f < 1) detail::fail_arg("stratum key: f must be positive");
}

// All cosets of one stratum, ordered lexicographically by
// (x2 lift, y1 lift, x3 lift, k). Cardinality phi(|d1|) phi(|d2|) phi(f) f.
inline std::vector<CellParams> enumerate_cosets(const StratumKey& key) {
    validate_key(key);
    int64 d1 = key.d1, d2 = key.d2, f = key.f;
    if (key.word == Word::bab) {
        StratumKey flip{key.d2, key.d1, key.f, Word::aba};
        return enumerate_cosets(flip);
    }
    int64 W = abs64(d1 * d2 * f);
    std::vector<int64> x2lifts, y1lifts;
    for (int64 r = 0; r < abs64(d2); ++r)
        if (gcd64(r, abs64(d2)) == 1) x2lifts.push_back(coprime_lift(r, d2, W));
    for (int64 r = 0; r < abs64(d1); ++r)
        if (gcd64(r, abs64(d1)) == 1) y1lifts.push_back(coprime_lift(r, d1, W));
    std::sort(x2lifts.begin(), x2lifts.end());
    std::sort(y1lifts.begin(), y1lifts.end());

    std::vector<std::pair<int64, int64>> xy3;
    if (f == 1) {
        xy3.emplace_back(2, 2);
    } else {
        for (int64 x3 = f + 1; x3 <= 2 * f; ++x3) {
            if (gcd64(x3, f) != 1) continue;
            int64 y3 = detail::window_lift(inv_mod(x3, f), f);
            xy3.emplace_back(x3, y3);
        }
    }

    std::vector<CellParams> out;
    out.reserve(x2lifts.size() * y1lifts.size() * xy3.size() * static_cast<size_t>(f));
    for (int64 x2 : x2lifts)
        for (int64 y1 : y1lifts)
            for (auto [x3, y3] : xy3)
                for (int64 k = 0; k < f; ++k) {
                    CellParams p;
                    p.d1 = d1;
                    p.d2 = d2;
                    p.f = f;
                    p.x2 = x2;
                    p.y1 = y1;
                    p.x3 = x3;
                    p.y3 = y3;
                    p.k = k;
                    out.push_back(p);
                }
    return out;
}

// Integral representative of one enumerated coset, honoring the word choice.
inline IntMat3 representative(const StratumKey& key, const CellParams& p) {
    validate_key(key);
    if (key.word == Word::aba) return canonical_rep(p);
    return dagger(canonical_rep(p));
}

inline int64 stratum_size(const StratumKey& key) {
    validate_key(key);
    return euler_phi(abs64(key.d1)) * euler_phi(abs64(key.d2)) * euler_phi(key.f) * key.f;
}

// Number of cosets below a fixed modulus pair, summed over strata.
inline int64 coset_count(int64 c1, int64 c2) {
    if (c1 == 0 || c2 == 0) detail::fail_arg("coset_count: moduli must be nonzero");
    int64 total = 0;
    for (int64 f : divisors(gcd64(c1, c2)))
        total += euler_phi(abs64(c1) / f) * euler_phi(abs64(c2) / f) * euler_phi(f) * f;
    return total;
}

inline std::pair<StratumKey, CellParams> classify(const IntMat3& A) {
    CellParams p = cell_params_of(A);
    return {StratumKey{p.d1, p.d2, p.f, Word::aba}, p};
}

// Refined stratum label splitting the two corner gcds into coprime parts
// f1, f2 and their common factor e.
struct RefinedKey {
    int64 d1, d2, f1, f2, e;

    bool operator==(const RefinedKey& o) const {
        return d1 == o.d1 && d2 == o.d2 && f1 == o.f1 && f2 == o.f2 && e == o.e;
    }
};

inline RefinedKey classify_refined(const IntMat3& A) {
    StratumInvariants ia = stratum_invariants(A);
    StratumInvariants ib = stratum_invariants_braid(A);
    int64 e = gcd64(ia.f, ib.f);
    int64 f1 = ia.f / e, f2 = ib.f / e;
    if (gcd64(f1, f2) != 1) throw std::logic_error("classify_refined: split parts are not coprime");
    int64 den = f1 * f2 * e;
    if (ia.c1 % den != 0 || ia.c2 % den != 0)
        throw std::logic_error("classify_refined: invariants not divisible by the joint gcd");
    return {ia.c1 / den, ia.c2 / den, f1, f2, e};
}

// Congruence subgroup membership at the stratum level: the level divides
// the corner gcd.
inline bool level_admits(int64 N, const StratumKey& key) {
    if (N < 1) detail::fail_arg("level_admits: level must be positive");
    return key.f % N == 0;
}

inline bool level_admits_matrix(int64 N, const IntMat3& A) {
    if (N < 1) detail::fail_arg("level_admits_matrix: level must be positive");
    return mod_pos(A(3, 1), N) == 0 && mod_pos(A(3, 2), N) == 0;
}

inline std::vector<StratumKey> level_filter(const std::vector<StratumKey>& keys, int64 N) {
    std::vector<StratumKey> out;
    for (const StratumKey& k : keys)
        if (level_admits(N, k)) out.push_back(k);
    return out;
}

// Character of the upper unipotent group: e(v1 * u12 + v2 * u23).
inline CycSum psi(int64 v1, int64 v2, const RatMat3& u) {
    Rational ang = v1 * u(1, 2) + v2 * u(2, 3);
    BigInt num = boost::multiprecision::numerator(ang);
    BigInt den = boost::multiprecision::denominator(ang);
    if (den > modulus_cap())
        throw std::runtime_error("psi: character denominator exceeds the configured root order cap");
    int64 d = den.convert_to<long long>();
    BigInt r = num % d;
    if (r < 0) r += d;
    return root_of_unity(r.convert_to<long long>(), d);
}

}  // namespace sl3kl
