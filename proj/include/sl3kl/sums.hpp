#pragma once

#include <complex>
#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl3kl/expsum.hpp"
#include "sl3kl/strata.hpp"

namespace sl3kl {

// Result of evaluating one of the exponential-sum formulas.  `value` is exact;
// `formula` names the evaluation route; `terms` counts the summands that were
// actually accumulated (after vanishing checks and congruence filters).
struct SumResult {
    CycSum value;
    std::string formula;
    int64 terms = 0;

    std::complex<double> approx() const { return value.to_complex(); }
};

namespace detail {

// Memoized product of two classical Kloosterman sums,
//   S(a1, b1; q1) * S(a2, b2; q2),
// canonicalized over the lcm of the two moduli.  The product shows up once per
// inverse pair in the fine sums, with heavy repetition across strata sweeps,
// so the cache keys on the reduced argument classes.
inline const CycSum& kl_product(int64 a1, int64 b1, int64 q1,
                                int64 a2, int64 b2, int64 q2) {
    if (q1 < 1 || q2 < 1) fail_arg("kl_product: moduli must be positive");
    std::array<int64, 6> key = {mod_pos(a1, q1), mod_pos(b1, q1), q1,
                                mod_pos(a2, q2), mod_pos(b2, q2), q2};
    thread_local std::map<std::array<int64, 6>, CycSum> cache;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::vector<int64>& e1 = kloosterman_exponents(a1, b1, q1);
    const std::vector<int64>& e2 = kloosterman_exponents(a2, b2, q2);
    int64 L = lcm64(q1, q2);
    int64 s1 = L / q1;
    int64 s2 = L / q2;
    std::vector<int64> raw(static_cast<size_t>(L), 0);
    for (int64 x : e1)
        for (int64 y : e2)
            raw[static_cast<size_t>((x * s1 + y * s2) % L)] += 1;
    return cache.emplace(key, CycSum::from_raw64(L, raw)).first->second;
}

// Positive-part reduction for the twisted long-element sum: flipping the sign
// of d1 is absorbed by negating m1, and flipping d2 by negating m2.
inline void absorb_modulus_signs(CharPair& ch, int64& d1, int64& d2) {
    if (d1 < 0) { d1 = -d1; ch.m1 = -ch.m1; }
    if (d2 < 0) { d2 = -d2; ch.m2 = -ch.m2; }
}

}  // namespace detail

// Fine Kloosterman sum attached to the long Weyl element and the stratum
// (d1, d2, f): vanishes unless gcd(m2*d2, f) == gcd(n2*d1, f), and otherwise
// equals f times a sum of products of classical Kloosterman sums indexed by
// inverse pairs x3*y3 == 1 (mod f) satisfying m2*d2 + n2*d1*y3 == 0 (mod f).
// Negative d1/d2 are admitted via the character sign twists.
inline SumResult fine_kloosterman(CharPair ch, int64 d1, int64 d2, int64 f) {
    if (d1 == 0 || d2 == 0) detail::fail_arg("fine_kloosterman: zero modulus");
    if (f < 1) detail::fail_arg("fine_kloosterman: corner gcd must be >= 1");
    detail::absorb_modulus_signs(ch, d1, d2);

    SumResult r;
    r.formula = "fine long-element sum";
    if (gcd64(mod_pos(ch.m2 * d2, f), f) != gcd64(mod_pos(ch.n2 * d1, f), f)) {
        r.formula = "fine long-element sum (vanishing gcd criterion)";
        return r;
    }
    CycSum total;
    for (int64 x3 = 1; x3 <= f; ++x3) {
        if (gcd64(x3, f) != 1) continue;
        int64 y3 = f == 1 ? 1 : inv_mod(x3, f);
        int64 lhs = detail::checked_add(detail::checked_mul(ch.m2, d2),
                                        detail::checked_mul(detail::checked_mul(ch.n2, d1), y3));
        if (mod_pos(lhs, f) != 0) continue;
        int64 N = lhs / f;
        int64 mnum = detail::checked_add(detail::checked_mul(detail::checked_mul(ch.m2, d2), x3),
                                         detail::checked_mul(ch.n2, d1));
        if (mnum % f != 0)
            throw std::logic_error("fine_kloosterman: companion argument not integral");
        int64 M = mnum / f;
        total += detail::kl_product(ch.n1, N, d1, ch.m1, M, d2);
        ++r.terms;
    }
    r.value = total.scaled(f);
    return r;
}

// Companion fine sum attached to the other braid word.  Only defined here for
// positive moduli; callers needing signed moduli should use the long-element
// evaluator, whose sign twists have been checked against the coset expansion.
inline SumResult fine_kloosterman_braid(const CharPair& ch, int64 d1, int64 d2, int64 f) {
    if (d1 < 1 || d2 < 1)
        detail::fail_arg("fine_kloosterman_braid: moduli must be positive");
    if (f < 1) detail::fail_arg("fine_kloosterman_braid: corner gcd must be >= 1");

    SumResult r;
    r.formula = "fine braid-word sum";
    if (gcd64(mod_pos(ch.n1 * d2, f), f) != gcd64(mod_pos(ch.m1 * d1, f), f)) {
        r.formula = "fine braid-word sum (vanishing gcd criterion)";
        return r;
    }
    CycSum total;
    for (int64 x3 = 1; x3 <= f; ++x3) {
        if (gcd64(x3, f) != 1) continue;
        int64 y3 = f == 1 ? 1 : inv_mod(x3, f);
        int64 lhs = detail::checked_add(detail::checked_mul(ch.n1, d2),
                                        detail::checked_mul(detail::checked_mul(x3, ch.m1), d1));
        if (mod_pos(lhs, f) != 0) continue;
        int64 P = lhs / f;
        int64 qnum = detail::checked_add(detail::checked_mul(detail::checked_mul(ch.n1, d2), y3),
                                         detail::checked_mul(ch.m1, d1));
        if (qnum % f != 0)
            throw std::logic_error("fine_kloosterman_braid: companion argument not integral");
        int64 Q = qnum / f;
        total += detail::kl_product(P, ch.m2, d1, Q, ch.n2, d2);
        ++r.terms;
    }
    r.value = total.scaled(f);
    return r;
}

inline SumResult fine_kloosterman(const CharPair& ch, const StratumKey& key) {
    return key.word == Word::aba ? fine_kloosterman(ch, key.d1, key.d2, key.f)
                                 : fine_kloosterman_braid(ch, key.d1, key.d2, key.f);
}

// Full-cell sum with moduli (c1, c2): the fine sums over all strata
// f | gcd(c1, c2) with diagonal parts (c1/f, c2/f).
inline SumResult coarse_kloosterman(const CharPair& ch, int64 c1, int64 c2,
                                    Word word = Word::aba) {
    if (c1 == 0 || c2 == 0) detail::fail_arg("coarse_kloosterman: zero modulus");
    if (word == Word::bab && (c1 < 1 || c2 < 1))
        detail::fail_arg("coarse_kloosterman: braid word requires positive moduli");
    SumResult r;
    r.formula = word == Word::aba ? "coarse long-element sum"
                                  : "coarse braid-word sum";
    CycSum total;
    for (int64 f : divisors(gcd64(c1, c2))) {
        SumResult fr = word == Word::aba
                           ? fine_kloosterman(ch, c1 / f, c2 / f, f)
                           : fine_kloosterman_braid(ch, c1 / f, c2 / f, f);
        total += fr.value;
        r.terms += fr.terms;
    }
    r.value = std::move(total);
    return r;
}

// Torus compatibility of a character pair with a cell: the condition under
// which the attached sum is well defined on cosets.  Products are formed
// cross-multiplied so no divisibility assumptions are needed.
struct Compatibility {
    bool ok = false;
    std::string detail;
};

inline Compatibility compatibility_check(Weyl cell, const CharPair& ch,
                                         int64 c1, int64 c2) {
    using detail::checked_mul;
    Compatibility res;
    switch (cell) {
        case Weyl::w0:
            res.ok = true;
            res.detail = "long element: unconditionally compatible";
            return res;
        case Weyl::ab:
            res.ok = checked_mul(ch.n1, c2) == checked_mul(checked_mul(c1, c1), ch.m2);
            res.detail = "requires n1*c2 == m2*c1^2";
            return res;
        case Weyl::ba:
            res.ok = checked_mul(ch.n2, c1) == checked_mul(checked_mul(c2, c2), ch.m1);
            res.detail = "requires n2*c1 == m1*c2^2";
            return res;
        case Weyl::a:
            res.ok = ch.n2 == 0 && ch.m2 == 0;
            res.detail = "requires n2 == m2 == 0";
            return res;
        case Weyl::b:
            res.ok = ch.n1 == 0 && ch.m1 == 0;
            res.detail = "requires n1 == m1 == 0";
            return res;
        case Weyl::id:
            res.ok = checked_mul(ch.n1, c2) == checked_mul(checked_mul(c1, c1), ch.m1) &&
                     checked_mul(ch.n2, c1) == checked_mul(checked_mul(c2, c2), ch.m2);
            res.detail = "requires n1*c2 == m1*c1^2 and n2*c1 == m2*c2^2";
            return res;
    }
    detail::fail_arg("compatibility_check: bad cell");
}

// Closed form for the fine long-element sum when gcd(f, d1*d2) == 1: the
// inverse-pair sum collapses to a single product of classical sums with the
// arguments twisted by the inverse of f, scaled by a multiplicative factor
// depending only on how m2, n2 sit against f.  Falls back to the general
// evaluator when the coprimality precondition fails.
inline SumResult coprime_fast_path(CharPair ch, int64 d1, int64 d2, int64 f) {
    if (d1 == 0 || d2 == 0) detail::fail_arg("coprime_fast_path: zero modulus");
    if (f < 1) detail::fail_arg("coprime_fast_path: corner gcd must be >= 1");
    detail::absorb_modulus_signs(ch, d1, d2);
    if (gcd64(f, detail::checked_mul(d1, d2)) != 1)
        return fine_kloosterman(ch, d1, d2, f);

    SumResult r;
    r.formula = "fine long-element sum (coprime closed form)";
    int64 em = gcd64(ch.m2, f);
    int64 en = gcd64(ch.n2, f);
    if (em != en) {
        r.formula = "fine long-element sum (coprime closed form, vanishing)";
        return r;
    }
    int64 e = em;
    int64 h = f / e;
    // h-primary part of f: product of p^{v_p(f)} over primes p dividing h.
    int64 hstar = 1;
    for (const auto& [p, exp] : factorize(h)) {
        int64 ftmp = f;
        while (ftmp % p == 0) { ftmp /= p; hstar = detail::checked_mul(hstar, p); }
        (void)exp;
    }
    if (hstar % h != 0)
        throw std::logic_error("coprime_fast_path: primary part does not contain h");
    int64 W = detail::checked_mul(d1, d2);
    int64 fbar = inv_mod(f, W);
    int64 a1 = mulmod(mod_pos(detail::checked_mul(ch.m2, d2), d1), fbar, d1);
    int64 a2 = mulmod(mod_pos(detail::checked_mul(ch.n2, d1), d2), fbar, d2);
    int64 scale = detail::checked_mul(detail::checked_mul(f, euler_phi(f / hstar)),
                                      hstar / h);
    r.value = detail::kl_product(ch.n1, a1, d1, ch.m1, a2, d2).scaled(scale);
    r.terms = 1;
    return r;
}

// What to do when a hyper-Kloosterman evaluation is requested outside the
// divisibility range where the sum is independent of the choice of lifts.
enum class HiddenConditionPolicy { ignore, warn, error };

// Rank-three hyper-Kloosterman sum attached to the (ab)-type cell:
//   sum over x1 in (Z/d1)^*, x2 in (Z/d2)^* of
//     e(m1*x1/d1 + n1*inv(x1)*x2/d1 + n2*inv(x2)/d2).
// Well defined independently of lifts only when d1 | d2*n1; outside that range
// the value is still computed from canonical inverse lifts in [0, modulus).
inline SumResult hyper_kloosterman_ab(int64 m1, int64 n1, int64 n2,
                                      int64 d1, int64 d2,
                                      HiddenConditionPolicy policy = HiddenConditionPolicy::warn) {
    if (d1 < 1 || d2 < 1)
        detail::fail_arg("hyper_kloosterman_ab: moduli must be positive");
    if (mod_pos(detail::checked_mul(d2, n1), d1) != 0) {
        if (policy == HiddenConditionPolicy::error)
            detail::fail_arg("hyper_kloosterman_ab: d1 does not divide d2*n1");
        if (policy == HiddenConditionPolicy::warn)
            std::cerr << "hyper_kloosterman_ab: d1 does not divide d2*n1; "
                         "value depends on the canonical choice of lifts\n";
    }
    int64 L = lcm64(d1, d2);
    int64 s1 = L / d1;
    int64 s2 = L / d2;
    std::vector<int64> raw(static_cast<size_t>(L), 0);
    SumResult r;
    r.formula = "hyper-Kloosterman sum (ab cell)";
    for (int64 x1 = 0; x1 < d1; ++x1) {
        if (gcd64(x1, d1) != 1) continue;
        int64 x1b = inv_mod(x1, d1);
        int64 t1 = mulmod(m1, x1, d1);
        for (int64 x2 = 0; x2 < d2; ++x2) {
            if (gcd64(x2, d2) != 1) continue;
            int64 x2b = inv_mod(x2, d2);
            int64 t2 = mulmod(mulmod(n1, x1b, d1), x2, d1);
            int64 t3 = mulmod(n2, x2b, d2);
            int64 ang = mod_pos(mulmod(detail::checked_add(t1, t2), s1, L) +
                                    mulmod(t3, s2, L),
                                L);
            raw[static_cast<size_t>(ang)] += 1;
            ++r.terms;
        }
    }
    r.value = CycSum::from_raw64(L, raw);
    return r;
}

// Mirror sum attached to the (ba)-type cell:
//   sum over x1 in (Z/d1)^*, x2 in (Z/d2)^* of
//     e(m1*x2*inv(x1)/d2 + m2*x1/d1 + n1*inv(x2)/d2),
// where inv(x1) is the canonical lift in [0, d1) of the inverse mod d1.
// Well defined independently of lifts only when d2 | d1*m1.
inline SumResult hyper_kloosterman_ba(int64 m1, int64 m2, int64 n1,
                                      int64 d1, int64 d2,
                                      HiddenConditionPolicy policy = HiddenConditionPolicy::warn) {
    if (d1 < 1 || d2 < 1)
        detail::fail_arg("hyper_kloosterman_ba: moduli must be positive");
    if (mod_pos(detail::checked_mul(d1, m1), d2) != 0) {
        if (policy == HiddenConditionPolicy::error)
            detail::fail_arg("hyper_kloosterman_ba: d2 does not divide d1*m1");
        if (policy == HiddenConditionPolicy::warn)
            std::cerr << "hyper_kloosterman_ba: d2 does not divide d1*m1; "
                         "value depends on the canonical choice of lifts\n";
    }
    int64 L = lcm64(d1, d2);
    int64 s1 = L / d1;
    int64 s2 = L / d2;
    std::vector<int64> raw(static_cast<size_t>(L), 0);
    SumResult r;
    r.formula = "hyper-Kloosterman sum (ba cell)";
    for (int64 x1 = 0; x1 < d1; ++x1) {
        if (gcd64(x1, d1) != 1) continue;
        int64 x1b = inv_mod(x1, d1);
        int64 t2 = mulmod(m2, x1, d1);
        for (int64 x2 = 0; x2 < d2; ++x2) {
            if (gcd64(x2, d2) != 1) continue;
            int64 x2b = inv_mod(x2, d2);
            int64 t1 = mulmod(mulmod(m1, x2, d2), x1b, d2);
            int64 t3 = mulmod(n1, x2b, d2);
            int64 ang = mod_pos(mulmod(mod_pos(t1 + t3, d2), s2, L) +
                                    mulmod(t2, s1, L),
                                L);
            raw[static_cast<size_t>(ang)] += 1;
            ++r.terms;
        }
    }
    r.value = CycSum::from_raw64(L, raw);
    return r;
}

// Degenerate-character evaluation: with trivial first character the coarse
// long-element sum collapses to an integer combination of classical Ramanujan
// sums; this evaluates that closed form directly.
inline SumResult ramanujan_general(int64 c1, int64 c2, int64 n1, int64 n2) {
    if (c1 < 1 || c2 < 1)
        detail::fail_arg("ramanujan_general: moduli must be positive");
    SumResult r;
    r.formula = "generalized Ramanujan sum";
    BigInt total = 0;
    for (int64 f : divisors(gcd64(c1, c2))) {
        int64 v = detail::checked_mul(n2, c1 / f);
        if (mod_pos(v, f) != 0) continue;
        int64 term = detail::checked_mul(
            detail::checked_mul(f, ramanujan_c(c1 / f, n1)),
            detail::checked_mul(ramanujan_c(f, n2), ramanujan_c(c2 / f, v / f)));
        total += term;
        ++r.terms;
    }
    r.value = CycSum::integer(total);
    return r;
}

// Magnitude bounds for the coarse long-element sum.  All four are computed in
// double precision; they are diagnostics, not certified enclosures.

inline double bound_stevens(const CharPair& ch, int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("bound_stevens: moduli must be positive");
    int64 C = lcm64(c1, c2);
    return static_cast<double>(tau(c1)) * static_cast<double>(tau(c2)) *
           std::sqrt(static_cast<double>(gcd64(detail::checked_mul(ch.m1, ch.n2), C))) *
           std::sqrt(static_cast<double>(gcd64(detail::checked_mul(ch.m2, ch.n1), C))) *
           std::sqrt(static_cast<double>(gcd64(c1, c2))) *
           std::sqrt(static_cast<double>(c1) * static_cast<double>(c2));
}

inline double bound_refined(const CharPair& ch, int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("bound_refined: moduli must be positive");
    int64 g = gcd64(c1, c2);
    double base = std::sqrt(static_cast<double>(c1) * static_cast<double>(c2)) *
                  std::sqrt(static_cast<double>(g)) *
                  static_cast<double>(tau(g)) *
                  static_cast<double>(tau(c1)) * static_cast<double>(tau(c2));
    double A = std::sqrt(static_cast<double>(gcd64(detail::checked_mul(ch.m2, ch.n1), c1)) *
                         static_cast<double>(gcd64(detail::checked_mul(ch.n2, ch.m1), c2)));
    double B = std::sqrt(static_cast<double>(gcd64(detail::checked_mul(ch.m2, ch.n1), c2)) *
                         static_cast<double>(gcd64(detail::checked_mul(ch.n2, ch.m1), c1)));
    return base * std::min(A, B);
}

inline double bound_fine_sweep(const CharPair& ch, int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("bound_fine_sweep: moduli must be positive");
    double total = 0.0;
    double root = std::sqrt(static_cast<double>(c1) * static_cast<double>(c2));
    for (int64 f : divisors(gcd64(c1, c2))) {
        int64 d1 = c1 / f;
        int64 d2 = c2 / f;
        int64 a = detail::checked_mul(ch.m2, d2);
        int64 b = detail::checked_mul(ch.n2, d1);
        if (gcd64(mod_pos(a, f), f) != gcd64(mod_pos(b, f), f)) continue;
        total += static_cast<double>(gcd64(a, f)) *
                 std::sqrt(static_cast<double>(gcd64(ch.n1, d1))) *
                 std::sqrt(static_cast<double>(gcd64(ch.m1, d2))) * root *
                 static_cast<double>(tau(d1)) * static_cast<double>(tau(d2));
    }
    return total;
}

inline double bound_fine_sweep_braid(const CharPair& ch, int64 c1, int64 c2) {
    if (c1 < 1 || c2 < 1) detail::fail_arg("bound_fine_sweep_braid: moduli must be positive");
    double total = 0.0;
    double root = std::sqrt(static_cast<double>(c1) * static_cast<double>(c2));
    for (int64 f : divisors(gcd64(c1, c2))) {
        int64 d1 = c1 / f;
        int64 d2 = c2 / f;
        int64 a = detail::checked_mul(ch.n1, d2);
        int64 b = detail::checked_mul(ch.m1, d1);
        if (gcd64(mod_pos(a, f), f) != gcd64(mod_pos(b, f), f)) continue;
        total += static_cast<double>(gcd64(b, f)) *
                 std::sqrt(static_cast<double>(gcd64(ch.m2, d1))) *
                 std::sqrt(static_cast<double>(gcd64(ch.n2, d2))) * root *
                 static_cast<double>(tau(d1)) * static_cast<double>(tau(d2));
    }
    return total;
}

// One geometric-side term of the level-N spectral sum formula: which family
// it belongs to (4, 5, or 6), the sign choices, the moduli, the evaluated
// sum, and the arguments fed to the weight transforms.
struct KuznetsovTerm {
    int family = 0;
    int eps1 = 1;
    int eps2 = 1;
    int64 d1 = 0;
    int64 d2 = 0;
    int64 f = 0;
    SumResult value;
    double weight_arg1 = 0.0;
    double weight_arg2 = 0.0;
};

// Enumerate the geometric-side index set at level N for character moduli
// (m1, m2), (n1, n2), keeping every term whose cell moduli are <= cutoff.
// Family 4 runs over (eps, d1, d2) with d2*n1 == d1*m2 and N | d2 evaluating
// the ab-cell hyper sum; family 5 mirrors it with d2*n2 == d1*m1 and N | d1;
// family 6 runs over sign pairs and strata with N | f evaluating fine sums.
inline std::vector<KuznetsovTerm> kuznetsov_geometric_indices(
    int64 N, const CharPair& ch, int64 cutoff,
    HiddenConditionPolicy policy = HiddenConditionPolicy::ignore) {
    if (N < 1) detail::fail_arg("kuznetsov_geometric_indices: level must be positive");
    if (cutoff < 1) detail::fail_arg("kuznetsov_geometric_indices: cutoff must be positive");
    if (ch.m1 < 1 || ch.m2 < 1 || ch.n1 < 1 || ch.n2 < 1)
        detail::fail_arg("kuznetsov_geometric_indices: characters must be positive");

    std::vector<KuznetsovTerm> out;
    for (int eps : {1, -1}) {
        for (int64 d1 = 1; d1 <= cutoff; ++d1) {
            for (int64 d2 = 1; detail::checked_mul(d1, d2) <= cutoff; ++d2) {
                if (detail::checked_mul(d2, ch.n1) != detail::checked_mul(d1, ch.m2))
                    continue;
                if (d2 % N != 0) continue;
                KuznetsovTerm t;
                t.family = 4;
                t.eps1 = eps;
                t.d1 = d1;
                t.d2 = d2;
                t.value = hyper_kloosterman_ab(eps * ch.m1, ch.n1, ch.n2, d1, d2, policy);
                t.weight_arg1 =
                    std::sqrt(static_cast<double>(ch.n1) * static_cast<double>(ch.n2) *
                              static_cast<double>(ch.m1)) /
                    (static_cast<double>(d1) * std::sqrt(static_cast<double>(d2)));
                out.push_back(std::move(t));
            }
        }
    }
    for (int eps : {1, -1}) {
        for (int64 d1 = 1; d1 <= cutoff; ++d1) {
            for (int64 d2 = 1; detail::checked_mul(d1, d2) <= cutoff; ++d2) {
                if (detail::checked_mul(d2, ch.n2) != detail::checked_mul(d1, ch.m1))
                    continue;
                if (d1 % N != 0) continue;
                KuznetsovTerm t;
                t.family = 5;
                t.eps1 = eps;
                t.d1 = d1;
                t.d2 = d2;
                t.value = hyper_kloosterman_ab(eps * ch.m2, ch.n2, ch.n1, d1, d2, policy);
                t.weight_arg1 =
                    std::sqrt(static_cast<double>(ch.n1) * static_cast<double>(ch.n2) *
                              static_cast<double>(ch.m2)) /
                    (static_cast<double>(d1) * std::sqrt(static_cast<double>(d2)));
                out.push_back(std::move(t));
            }
        }
    }
    for (int eps1 : {1, -1}) {
        for (int eps2 : {1, -1}) {
            for (int64 f = N; f <= cutoff; f += N) {
                for (int64 d1 = 1; detail::checked_mul(d1, f) <= cutoff; ++d1) {
                    for (int64 d2 = 1; detail::checked_mul(d2, f) <= cutoff; ++d2) {
                        KuznetsovTerm t;
                        t.family = 6;
                        t.eps1 = eps1;
                        t.eps2 = eps2;
                        t.d1 = d1;
                        t.d2 = d2;
                        t.f = f;
                        CharPair tw{eps1 * ch.m1, eps2 * ch.m2, ch.n1, ch.n2};
                        t.value = fine_kloosterman(tw, d1, d2, f);
                        t.weight_arg1 =
                            std::sqrt(static_cast<double>(ch.n2) * static_cast<double>(ch.m1) *
                                      static_cast<double>(d1)) /
                            (static_cast<double>(d2) * std::sqrt(static_cast<double>(f)));
                        t.weight_arg2 =
                            std::sqrt(static_cast<double>(ch.n1) * static_cast<double>(ch.m2) *
                                      static_cast<double>(d2)) /
                            (static_cast<double>(d1) * std::sqrt(static_cast<double>(f)));
                        out.push_back(std::move(t));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace sl3kl
