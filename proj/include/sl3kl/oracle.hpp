#pragma once

#include <vector>

#include "sl3kl/sums.hpp"

namespace sl3kl {

// Double-coset label for the long cell: bottom row (A1, B1, C1) and the
// lower 2x2 minors repackaged as (C2, B2, A2), subject to the linear relation
// A1*C2 + B1*B2 + C1*A2 = 0 and the two primitivity conditions.  B and C
// entries are integer lifts; the enumeration fixes B1, B2 as canonical
// integers in [0, A) before the C's are chosen, which is what makes the
// labels duplicate-free.
struct PluckerSextuple {
    int64 A1 = 1, B1 = 0, C1 = 0;
    int64 A2 = 1, B2 = 0, C2 = 0;

    bool operator==(const PluckerSextuple& o) const {
        return A1 == o.A1 && B1 == o.B1 && C1 == o.C1 &&
               A2 == o.A2 && B2 == o.B2 && C2 == o.C2;
    }
};

namespace detail {

inline int64 gcd3(int64 a, int64 b, int64 c) { return gcd64(gcd64(a, b), c); }

}  // namespace detail

inline void validate_sextuple(const PluckerSextuple& s) {
    using detail::checked_add;
    using detail::checked_mul;
    if (s.A1 < 1 || s.A2 < 1) detail::fail_arg("sextuple: A1, A2 must be positive");
    int64 rel = checked_add(checked_add(checked_mul(s.A1, s.C2), checked_mul(s.B1, s.B2)),
                            checked_mul(s.C1, s.A2));
    if (rel != 0) detail::fail_arg("sextuple: linear relation A1*C2 + B1*B2 + C1*A2 = 0 fails");
    if (detail::gcd3(s.A1, s.B1, s.C1) != 1) detail::fail_arg("sextuple: row (A1,B1,C1) not primitive");
    if (detail::gcd3(s.A2, s.B2, s.C2) != 1) detail::fail_arg("sextuple: row (A2,B2,C2) not primitive");
}

// Complete, duplicate-free labels for the (c1, c2) long-cell double cosets.
// B1 and B2 range over canonical lifts first; for each choice of C1 mod c1
// the relation forces a unique integer C2, which represents the C2 residue
// class (it may lie outside [0, c2) as an integer, which is harmless).
inline std::vector<PluckerSextuple> enumerate_plucker(int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("enumerate_plucker: moduli must be positive");
    std::vector<PluckerSextuple> out;
    for (int64 B1 = 0; B1 < c1; ++B1) {
        for (int64 B2 = 0; B2 < c2; ++B2) {
            for (int64 C1 = 0; C1 < c1; ++C1) {
                int64 num = detail::checked_add(detail::checked_mul(B1, B2),
                                                detail::checked_mul(C1, c2));
                if (mod_pos(num, c1) != 0) continue;
                int64 C2 = -(num / c1);
                if (detail::gcd3(c1, B1, C1) != 1) continue;
                if (detail::gcd3(c2, B2, C2) != 1) continue;
                out.push_back({c1, B1, C1, c2, B2, C2});
            }
        }
    }
    return out;
}

// Deliberately wrong counting used only to demonstrate why the ordering
// discipline matters: residue tuples (B1, C1 mod A1; B2, C2 mod A2) are
// chosen simultaneously and kept whenever ANY integer lifts satisfy the
// relation and primitivity.  Overcounts: distinct residue tuples can land
// in the same double coset.
inline int64 plucker_naive_count(int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("plucker_naive_count: moduli must be positive");
    int64 count = 0;
    for (int64 b1 = 0; b1 < c1; ++b1) {
        for (int64 r1 = 0; r1 < c1; ++r1) {
            if (detail::gcd3(c1, b1, r1) != 1) continue;
            for (int64 b2 = 0; b2 < c2; ++b2) {
                for (int64 r2 = 0; r2 < c2; ++r2) {
                    if (detail::gcd3(c2, b2, r2) != 1) continue;
                    // Lifts move the relation value by multiples of
                    // c1*c2, c1*b2 and c2*b1; an integer solution exists
                    // iff the gcd of those steps divides the base value.
                    int64 g = detail::gcd3(detail::checked_mul(c1, c2),
                                           detail::checked_mul(c1, b2),
                                           detail::checked_mul(c2, b1));
                    int64 base = detail::checked_add(
                        detail::checked_add(detail::checked_mul(c1, r2),
                                            detail::checked_mul(b1, b2)),
                        detail::checked_mul(r1, c2));
                    if (mod_pos(base, g) == 0) ++count;
                }
            }
        }
    }
    return count;
}

// Realizes a label as an integral determinant-1 matrix: bottom row is
// (A1, B1, C1) and the lower minors reproduce (A2, B2, C2).  Any valid
// completion of the upper rows represents the same double coset, so a
// Bezout-based one is used; the postconditions are asserted.
inline IntMat3 realize_matrix(const PluckerSextuple& s) {
    validate_sextuple(s);
    Bezout3 w = bezout3(s.A1, s.B1, s.C1);
    if (w.g != 1) throw std::logic_error("realize_matrix: bottom row not primitive");
    // v = (C2, B2, A2) is the cross product of rows 2 and 3; any r2 with
    // r2 x r3 = v works, and (w x v) x r3 = v(w.r3) - w(v.r3) = v because
    // w.r3 = 1 and v.r3 = 0 by the linear relation.
    int64 v1 = s.C2, v2 = s.B2, v3 = s.A2;
    int64 r21 = detail::checked_sub(detail::checked_mul(w.y, v3), detail::checked_mul(w.z, v2));
    int64 r22 = detail::checked_sub(detail::checked_mul(w.z, v1), detail::checked_mul(w.x, v3));
    int64 r23 = detail::checked_sub(detail::checked_mul(w.x, v2), detail::checked_mul(w.y, v1));
    Bezout3 r1 = bezout3(v1, v2, v3);
    if (r1.g != 1) throw std::logic_error("realize_matrix: minor row not primitive");

    IntMat3 A;
    A(1, 1) = r1.x; A(1, 2) = r1.y; A(1, 3) = r1.z;
    A(2, 1) = r21;  A(2, 2) = r22;  A(2, 3) = r23;
    A(3, 1) = s.A1; A(3, 2) = s.B1; A(3, 3) = s.C1;
    if (A.det() != 1) throw std::logic_error("realize_matrix: determinant check failed");
    if (minor_del(A, 1, 3) != s.A2 || minor_del(A, 1, 2) != -s.B2 || minor_del(A, 1, 1) != s.C2)
        throw std::logic_error("realize_matrix: minor relations failed");
    return A;
}

// One enumerated double coset with everything the character sum needs: the
// four Bruhat fractions (arguments of e(.)) read off the representative,
// plus the corner gcds of both reduced-word stratifications.
struct OracleCoset {
    PluckerSextuple label;
    IntMat3 rep;
    int64 f_long = 1;
    int64 f_braid = 1;
    RationalAngle fr_m1, fr_m2, fr_n1, fr_n2;
};

namespace detail {

inline RationalAngle angle_of(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    int64 d = den.convert_to<int64>();
    BigInt r = num % den;
    if (r < 0) r += den;
    return RationalAngle(r.convert_to<int64>(), d);
}

}  // namespace detail

inline std::vector<OracleCoset> oracle_cosets(int64 c1, int64 c2) {
    std::vector<OracleCoset> out;
    for (const PluckerSextuple& s : enumerate_plucker(c1, c2)) {
        OracleCoset oc;
        oc.label = s;
        oc.rep = realize_matrix(s);
        oc.f_long = gcd64(oc.rep(3, 1), oc.rep(3, 2));
        oc.f_braid = gcd64(oc.rep(3, 1), oc.rep(2, 1));
        BruhatCoords bc = bruhat_coords(oc.rep);
        if (bc.cell != Weyl::w0)
            throw std::logic_error("oracle_cosets: realized matrix left the long cell");
        oc.fr_m1 = detail::angle_of(bc.uL(1, 2));
        oc.fr_m2 = detail::angle_of(bc.uL(2, 3));
        oc.fr_n1 = detail::angle_of(bc.uR(1, 2));
        oc.fr_n2 = detail::angle_of(bc.uR(2, 3));
        out.push_back(std::move(oc));
    }
    return out;
}

namespace detail {

// Accumulates e(m1*fr_m1 + m2*fr_m2 + n1*fr_n1 + n2*fr_n2) over the given
// cosets as exponent multiplicities over the L-th roots, L = lcm(c1, c2).
template <typename Pred>
inline SumResult oracle_character_sum(const std::vector<OracleCoset>& cosets,
                                      const CharPair& ch, int64 L, Pred keep) {
    std::vector<int64> raw(static_cast<size_t>(L), 0);
    SumResult r;
    for (const OracleCoset& oc : cosets) {
        if (!keep(oc)) continue;
        int64 ang = 0;
        const RationalAngle* fr[4] = {&oc.fr_m1, &oc.fr_m2, &oc.fr_n1, &oc.fr_n2};
        int64 mult[4] = {ch.m1, ch.m2, ch.n1, ch.n2};
        for (int i = 0; i < 4; ++i) {
            if (L % fr[i]->den != 0)
                throw std::logic_error("oracle: fraction denominator outside the root order");
            ang = mod_pos(ang + mulmod(mod_pos(mult[i], L),
                                       mulmod(fr[i]->num, L / fr[i]->den, L), L),
                          L);
        }
        raw[static_cast<size_t>(ang)] += 1;
        ++r.terms;
    }
    r.value = CycSum::from_raw64(L, raw);
    return r;
}

}  // namespace detail

// Character sum over already-enumerated cosets; callers sweeping many
// characters over one (c1, c2) should enumerate once and reuse.  N > 1 keeps
// only the cosets whose representatives satisfy the level congruence
// N | A31, N | A32 (equivalently N | f_long).
inline SumResult oracle_character_sum(const std::vector<OracleCoset>& cosets,
                                      const CharPair& ch, int64 L, int64 N = 1) {
    if (N < 1) detail::fail_arg("oracle_character_sum: level must be positive");
    SumResult r = detail::oracle_character_sum(
        cosets, ch, L, [&](const OracleCoset& oc) { return oc.f_long % N == 0; });
    r.formula = "oracle coarse enumeration";
    return r;
}

// Brute-force coarse sum over all enumerated (c1, c2) cosets.
inline SumResult oracle_coarse(const CharPair& ch, int64 c1, int64 c2, int64 N = 1) {
    return oracle_character_sum(oracle_cosets(c1, c2), ch, lcm64(c1, c2), N);
}

// Brute-force fine sum: the coarse enumeration restricted to one stratum of
// the chosen reduced word.
inline SumResult oracle_fine(const CharPair& ch, const StratumKey& key) {
    validate_key(key);
    if (key.d1 < 1 || key.d2 < 1)
        detail::fail_arg("oracle_fine: enumeration requires positive moduli");
    int64 c1 = key.d1 * key.f;
    int64 c2 = key.d2 * key.f;
    std::vector<OracleCoset> cosets = oracle_cosets(c1, c2);
    SumResult r = detail::oracle_character_sum(
        cosets, ch, lcm64(c1, c2), [&](const OracleCoset& oc) {
            return key.word == Word::aba ? oc.f_long == key.f : oc.f_braid == key.f;
        });
    r.formula = key.word == Word::aba ? "oracle fine enumeration"
                                      : "oracle fine enumeration (braid word)";
    return r;
}

// Brute-force doubly-refined sum: restrict to the intersection stratum where
// the long-word corner gcd is f1*e and the braid-word corner gcd is f2*e.
inline SumResult oracle_refined(const CharPair& ch, const RefinedKey& rk) {
    if (rk.d1 < 1 || rk.d2 < 1 || rk.f1 < 1 || rk.f2 < 1 || rk.e < 1)
        detail::fail_arg("oracle_refined: labels must be positive");
    if (gcd64(rk.f1, rk.f2) != 1)
        detail::fail_arg("oracle_refined: f1 and f2 must be coprime");
    int64 scale = detail::checked_mul(detail::checked_mul(rk.f1, rk.f2), rk.e);
    int64 c1 = detail::checked_mul(rk.d1, scale);
    int64 c2 = detail::checked_mul(rk.d2, scale);
    std::vector<OracleCoset> cosets = oracle_cosets(c1, c2);
    SumResult r = detail::oracle_character_sum(
        cosets, ch, lcm64(c1, c2), [&](const OracleCoset& oc) {
            return oc.f_long == rk.f1 * rk.e && oc.f_braid == rk.f2 * rk.e;
        });
    r.formula = "oracle refined enumeration";
    return r;
}

}  // namespace sl3kl
