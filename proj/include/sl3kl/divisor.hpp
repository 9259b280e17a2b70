#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sl3kl/arith.hpp"

namespace sl3kl {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Rational rat_pow(const Rational& base, int64 e) {
    if (e < 0) {
        if (base == 0) fail_arg("rat_pow: zero base with negative exponent");
        return 1 / rat_pow(base, -e);
    }
    Rational r = 1, b = base;
    for (int64 k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

// Ratio of alternants for the two-row shape (k1+k2, k1): rows carry the
// exponents (k1+k2+2, k1+1, 0).  Requires distinct evaluation points.
inline Rational schur_bialternant(const Rational& a, const Rational& b, const Rational& c,
                                  int64 k1, int64 k2) {
    if (a == b || b == c || a == c)
        fail_arg("schur_bialternant: evaluation points must be distinct");
    int64 e0 = k1 + k2 + 2, e1 = k1 + 1;
    auto det = [](const Rational& a0, const Rational& a1, const Rational& b0,
                  const Rational& b1, const Rational& c0, const Rational& c1) {
        // det [[a0,b0,c0],[a1,b1,c1],[1,1,1]]
        return a0 * (b1 - c1) - b0 * (a1 - c1) + c0 * (a1 - b1);
    };
    Rational num = det(rat_pow(a, e0), rat_pow(a, e1), rat_pow(b, e0), rat_pow(b, e1),
                       rat_pow(c, e0), rat_pow(c, e1));
    Rational den = det(a * a, a, b * b, b, c * c, c);
    return num / den;
}

// Closed monomial expansion of beta^{-k1} * S_{k1,k2}(1, beta, alpha*beta);
// valid for all (alpha, beta), including the degenerate points where the
// bialternant denominator vanishes.
inline Rational sigma2_monomial(const Rational& alpha, const Rational& beta,
                                int64 k1, int64 k2) {
    Rational total = 0;
    for (int64 i = 0; i <= k1; ++i) {
        for (int64 j = 0; j <= k2; ++j) {
            Rational geo = 0;
            for (int64 l = 0; l <= k1 - i + j; ++l) geo += rat_pow(alpha, l);
            total += rat_pow(beta, i + j) * rat_pow(alpha, i) * geo;
        }
    }
    return total;
}

// One local factor sigma_{s1,s2}(p^{k1}, p^{k2}) with alpha = p^{s1},
// beta = p^{s2}.  The bialternant ratio is 0/0 exactly when alpha, beta or
// alpha*beta equals 1; the monomial expansion covers those points.
inline Rational sigma2_prime_power(const Rational& alpha, const Rational& beta,
                                   int64 k1, int64 k2) {
    Rational expanded = sigma2_monomial(alpha, beta, k1, k2);
    if (alpha == 1 || beta == 1 || alpha * beta == 1) return expanded;
    Rational schur = rat_pow(beta, -k1) *
                     schur_bialternant(1, beta, alpha * beta, k1, k2);
    if (schur != expanded)
        throw std::logic_error("sigma2: bialternant and monomial expansions disagree");
    return schur;
}

inline int64 tau3(int64 n) {
    int64 s = 0;
    for (int64 e : divisors(n)) s += tau(e);
    return s;
}

}  // namespace detail

// sigma_{s1,s2}(n1, n2) with integer exponents, exact.  Evaluated by the
// triple-divisor expansion and independently by the product of local Schur
// factors; a mismatch is a hard error.
inline Rational sigma2(int64 s1, int64 s2, int64 n1, int64 n2) {
    if (n1 < 1 || n2 < 1) detail::fail_arg("sigma2: arguments must be positive");
    Rational direct = 0;
    for (int64 e1 : divisors(n1)) {
        for (int64 e2 : divisors(n2)) {
            for (int64 e3 : divisors(n1 / e1 * e2)) {
                direct += detail::rat_pow(e1, s1 + s2) * detail::rat_pow(e2, s2) *
                          detail::rat_pow(e3, s1);
            }
        }
    }
    Rational local = 1;
    for (const auto& [p, e] : factorize(detail::checked_mul(n1, n2))) {
        (void)e;
        int64 k1 = 0, k2 = 0;
        for (int64 v = n1; v % p == 0; v /= p) ++k1;
        for (int64 v = n2; v % p == 0; v /= p) ++k2;
        local *= detail::sigma2_prime_power(detail::rat_pow(p, s1),
                                            detail::rat_pow(p, s2), k1, k2);
    }
    if (direct != local)
        throw std::logic_error("sigma2: multiplicative and expansion routes disagree");
    return direct;
}

// Floating-point exponents.  Same dual evaluation; the local product is
// cross-checked against the direct expansion unless some local factor sits
// too close to a degenerate point for the bialternant to be trustworthy.
inline double sigma2(double s1, double s2, int64 n1, int64 n2) {
    if (n1 < 1 || n2 < 1) detail::fail_arg("sigma2: arguments must be positive");
    double direct = 0;
    for (int64 e1 : divisors(n1)) {
        for (int64 e2 : divisors(n2)) {
            for (int64 e3 : divisors(n1 / e1 * e2)) {
                direct += std::pow(static_cast<double>(e1), s1 + s2) *
                          std::pow(static_cast<double>(e2), s2) *
                          std::pow(static_cast<double>(e3), s1);
            }
        }
    }
    double local = 1;
    bool stable = true;
    for (const auto& [p, e] : factorize(detail::checked_mul(n1, n2))) {
        (void)e;
        int64 k1 = 0, k2 = 0;
        for (int64 v = n1; v % p == 0; v /= p) ++k1;
        for (int64 v = n2; v % p == 0; v /= p) ++k2;
        double alpha = std::pow(static_cast<double>(p), s1);
        double beta = std::pow(static_cast<double>(p), s2);
        if (std::abs(alpha - 1) < 1e-6 || std::abs(beta - 1) < 1e-6 ||
            std::abs(alpha * beta - 1) < 1e-6) {
            stable = false;
            break;
        }
        double factor = 0;
        double bk = std::pow(beta, static_cast<double>(-k1));
        double x0 = 1, x1 = beta, x2 = alpha * beta;
        int64 e0 = k1 + k2 + 2, e1x = k1 + 1;
        auto det = [](double a0, double a1, double b0, double b1, double c0, double c1) {
            return a0 * (b1 - c1) - b0 * (a1 - c1) + c0 * (a1 - b1);
        };
        double num = det(std::pow(x0, static_cast<double>(e0)), std::pow(x0, static_cast<double>(e1x)),
                         std::pow(x1, static_cast<double>(e0)), std::pow(x1, static_cast<double>(e1x)),
                         std::pow(x2, static_cast<double>(e0)), std::pow(x2, static_cast<double>(e1x)));
        double den = det(x0 * x0, x0, x1 * x1, x1, x2 * x2, x2);
        factor = bk * num / den;
        local *= factor;
    }
    if (stable && std::abs(direct - local) > 1e-9 * (1 + std::abs(direct)))
        throw std::logic_error("sigma2: multiplicative and expansion routes disagree");
    return direct;
}

// Hecke relation for the one-variable divisor sum: for p | n,
// sigma_a(n*p) = sigma_a(n) * sigma_a(p) - p^a * sigma_a(n/p).
inline bool hecke_check(int64 alpha, int64 n, int64 p) {
    if (p < 2) detail::fail_arg("hecke_check: p must be at least 2");
    if (n < 1 || n % p != 0) detail::fail_arg("hecke_check: p must divide n");
    auto sigma = [&](int64 v) {
        Rational s = 0;
        for (int64 d : divisors(v)) s += detail::rat_pow(d, alpha);
        return s;
    };
    return sigma(detail::checked_mul(n, p)) ==
           sigma(n) * sigma(p) - detail::rat_pow(p, alpha) * sigma(n / p);
}

inline bool hecke_check(double alpha, int64 n, int64 p) {
    if (p < 2) detail::fail_arg("hecke_check: p must be at least 2");
    if (n < 1 || n % p != 0) detail::fail_arg("hecke_check: p must divide n");
    auto sigma = [&](int64 v) {
        double s = 0;
        for (int64 d : divisors(v)) s += std::pow(static_cast<double>(d), alpha);
        return s;
    };
    double lhs = sigma(n * p);
    double rhs = sigma(n) * sigma(p) - std::pow(static_cast<double>(p), alpha) * sigma(n / p);
    return std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(lhs));
}

// Riemann zeta for real s > 1 by Euler-Maclaurin: 24 direct terms, the
// integral and half-term corrections, then 8 Bernoulli corrections.  Good to
// about 1e-10 for s >= 3/2.
inline double zeta_em(double s) {
    if (!(s > 1)) detail::fail_arg("zeta_em: requires s > 1");
    constexpr double N = 25.0;
    static const double bern[8] = {1.0 / 6,    -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                   5.0 / 66,   -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
    double total = 0;
    for (int k = 1; k < 25; ++k) total += std::pow(static_cast<double>(k), -s);
    total += std::pow(N, 1 - s) / (s - 1);
    total += std::pow(N, -s) / 2;
    double fact = 1;   // (2j)!
    double rising = 1; // s (s+1) ... (s+2j-2)
    for (int j = 1; j <= 8; ++j) {
        fact *= (2 * j - 1) * (2 * j);
        rising = (j == 1) ? s : rising * (s + 2 * j - 3) * (s + 2 * j - 2);
        total += bern[j - 1] / fact * rising * std::pow(N, -s - 2 * j + 1);
    }
    return total;
}

struct DivisorReport {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double abs_err = 0;
    int64 D = 0;
    double tail_bound = 0;
};

namespace detail {

// Prefix sums M_s[x] = sum_{k <= x} mu(k) k^{-s}.
inline std::vector<double> moebius_prefix(double s, int64 D) {
    std::vector<int8_t> mu = moebius_table(D);
    std::vector<double> M(static_cast<size_t>(D) + 1, 0.0);
    for (int64 k = 1; k <= D; ++k)
        M[static_cast<size_t>(k)] = M[static_cast<size_t>(k) - 1] +
                                    mu[static_cast<size_t>(k)] * std::pow(static_cast<double>(k), -s);
    return M;
}

}  // namespace detail

// Truncated numerical check of the double Dirichlet series identity
//   zeta(s1) zeta(s2) zeta(s1+s2-1) * sum_{d1,d2} mu(d1) d1^{-s1} d2^{-s2}
//     * sum_{f | n d1} c_f(n) c_{d2}(n d1 / f) f^{1-s1-s2}
//   = sigma_{1-s1,1-s2}(1, n).
// Both d-sums are truncated at D; the d2-sum is resummed exactly through the
// divisor expansion of c_{d2}, which turns it into a short sum over g | v
// against Moebius prefix sums.
inline DivisorReport verify_divisor_identity(double s1, double s2, int64 n, int64 D) {
    if (!(s1 > 1) || !(s2 > 1)) detail::fail_arg("verify_divisor_identity: requires s1, s2 > 1");
    if (n < 1) detail::fail_arg("verify_divisor_identity: n must be positive");
    if (D < 1) detail::fail_arg("verify_divisor_identity: D must be positive");

    std::vector<int8_t> mu = moebius_table(D);
    std::vector<double> M2 = detail::moebius_prefix(s2, D);
    std::map<int64, double> inner_memo;
    // inner(v) = sum_{d2 <= D} c_{d2}(v) d2^{-s2} = sum_{g | v, g <= D} g^{1-s2} M2[D/g]
    auto inner = [&](int64 v) {
        auto it = inner_memo.find(v);
        if (it != inner_memo.end()) return it->second;
        double t = 0;
        for (int64 g : divisors(v)) {
            if (g > D) continue;
            t += std::pow(static_cast<double>(g), 1 - s2) * M2[static_cast<size_t>(D / g)];
        }
        inner_memo.emplace(v, t);
        return t;
    };

    double series = 0;
    for (int64 d1 = 1; d1 <= D; ++d1) {
        if (mu[static_cast<size_t>(d1)] == 0) continue;
        double outer = mu[static_cast<size_t>(d1)] * std::pow(static_cast<double>(d1), -s1);
        int64 nd1 = detail::checked_mul(n, d1);
        double fsum = 0;
        for (int64 f : divisors(nd1)) {
            int64 cf = ramanujan_c(f, n);
            if (cf == 0) continue;
            fsum += cf * std::pow(static_cast<double>(f), 1 - s1 - s2) * inner(nd1 / f);
        }
        series += outer * fsum;
    }

    double zzz = zeta_em(s1) * zeta_em(s2) * zeta_em(s1 + s2 - 1);
    DivisorReport rep;
    rep.D = D;
    rep.lhs = zzz * series;
    rep.rhs = sigma2(1 - s1, 1 - s2, int64{1}, n);
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    rep.tail_bound = std::abs(zzz) * static_cast<double>(sigma1(n)) *
                     static_cast<double>(detail::tau3(n)) *
                     (std::pow(D + 1.0, 1 - s1) / (s1 - 1) + std::pow(D + 1.0, 1 - s2) / (s2 - 1));
    return rep;
}

// Truncated check of the classical Ramanujan identity
//   sigma_{1-s}(n) = zeta(s) * sum_q c_q(n) q^{-s},
// with the q-sum truncated at D and resummed the same way.
inline DivisorReport ramanujan_classical_check(double s, int64 n, int64 D) {
    if (!(s > 1)) detail::fail_arg("ramanujan_classical_check: requires s > 1");
    if (n < 1) detail::fail_arg("ramanujan_classical_check: n must be positive");
    if (D < 1) detail::fail_arg("ramanujan_classical_check: D must be positive");

    std::vector<double> M = detail::moebius_prefix(s, D);
    double series = 0;
    for (int64 g : divisors(n)) {
        if (g > D) continue;
        series += std::pow(static_cast<double>(g), 1 - s) * M[static_cast<size_t>(D / g)];
    }
    double z = zeta_em(s);
    DivisorReport rep;
    rep.D = D;
    rep.lhs = z * series;
    double rhs = 0;
    for (int64 d : divisors(n)) rhs += std::pow(static_cast<double>(d), 1 - s);
    rep.rhs = rhs;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    rep.tail_bound = z * static_cast<double>(sigma1(n)) * std::pow(D + 1.0, 1 - s) / (s - 1);
    return rep;
}

}  // namespace sl3kl
