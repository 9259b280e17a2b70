#pragma once

// Integer helpers: extended gcd, modular inverses, multiplicative functions,
// factorization with a deterministic Miller-Rabin screen, and small Bezout
// utilities used by the lattice constructions elsewhere in the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl3kl {

using int64 = long long;

namespace detail {

[[noreturn]] inline void fail_arg(const std::string& what) {
    throw std::invalid_argument(what);
}

inline int64 checked_add(int64 a, int64 b) {
    int64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
    return r;
}

inline int64 checked_sub(int64 a, int64 b) {
    int64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 sub overflow");
    return r;
}

inline int64 checked_mul(int64 a, int64 b) {
    int64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 mul overflow");
    return r;
}

}  // namespace detail

// Least nonnegative residue, defined for any nonzero modulus.
inline int64 mod_pos(int64 a, int64 m) {
    if (m == 0) detail::fail_arg("mod_pos: modulus is zero");
    int64 mm = m < 0 ? -m : m;
    int64 r = a % mm;
    return r < 0 ? r + mm : r;
}

// (a * b) mod m without intermediate overflow, result in [0, |m|).
inline int64 mulmod(int64 a, int64 b, int64 m) {
    if (m == 0) detail::fail_arg("mulmod: modulus is zero");
    int64 mm = m < 0 ? -m : m;
    __int128 p = static_cast<__int128>(a) * b % mm;
    int64 r = static_cast<int64>(p);
    return r < 0 ? r + mm : r;
}

inline int64 abs64(int64 a) { return a < 0 ? -a : a; }

inline int64 gcd64(int64 a, int64 b) { return std::gcd(a, b); }

inline int64 lcm64(int64 a, int64 b) {
    if (a == 0 || b == 0) detail::fail_arg("lcm64: zero argument");
    return detail::checked_mul(abs64(a) / gcd64(a, b), abs64(b));
}

struct ExtGcd {
    int64 g, x, y;  // g = a*x + b*y, g > 0
};

inline ExtGcd egcd(int64 a, int64 b) {
    if (a == 0 && b == 0) detail::fail_arg("egcd: gcd(0,0) is undefined");
    int64 r0 = a, r1 = b;
    int64 x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        int64 q = r0 / r1;
        int64 r2 = r0 - q * r1;
        int64 x2 = x0 - q * x1;
        int64 y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    return {r0, x0, y0};
}

// Inverse of a modulo q, canonical lift in [0, q).
inline int64 inv_mod(int64 a, int64 q) {
    if (q < 1) detail::fail_arg("inv_mod: modulus must be positive");
    if (q == 1) return 0;
    ExtGcd e = egcd(mod_pos(a, q), q);
    if (e.g != 1) detail::fail_arg("inv_mod: argument not coprime to modulus");
    return mod_pos(e.x, q);
}

struct Bezout3 {
    int64 g, x, y, z;  // g = a*x + b*y + c*z, g > 0
};

inline Bezout3 bezout3(int64 a, int64 b, int64 c) {
    if (a == 0 && b == 0) {
        if (c == 0) detail::fail_arg("bezout3: all arguments zero");
        return {abs64(c), 0, 0, c > 0 ? 1 : -1};
    }
    ExtGcd e1 = egcd(a, b);
    ExtGcd e2 = egcd(e1.g, c);
    return {e2.g, e1.x * e2.x, e1.y * e2.x, e2.y};
}

// Smallest nonnegative t with t = r (mod |m|) and gcd(t, k) = 1.
inline int64 coprime_lift(int64 r, int64 m, int64 k) {
    if (m == 0 || k == 0) detail::fail_arg("coprime_lift: zero argument");
    int64 mm = abs64(m), kk = abs64(k);
    if (gcd64(gcd64(mod_pos(r, mm), mm), kk) != 1)
        detail::fail_arg("coprime_lift: no lift exists, gcd(r, m, k) > 1");
    int64 t = mod_pos(r, mm);
    if (t == 0) t = mm;  // r = 0 mod m: only possible when gcd(m,k) = 1, lift m itself may fail, scan
    for (int64 tries = 0; tries <= kk + 1; ++tries) {
        if (gcd64(t, kk) == 1) return t;
        t += mm;
    }
    detail::fail_arg("coprime_lift: scan exceeded bound");
}

inline bool is_prime(int64 n) {
    if (n < 2) return false;
    for (int64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](int64 a, int64 b, int64 m) -> int64 {
        return static_cast<int64>(static_cast<__int128>(a) * b % m);
    };
    auto powmod = [&](int64 a, int64 e, int64 m) -> int64 {
        int64 r = 1;
        a %= m;
        while (e > 0) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    int64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for all n < 3.3e24 that fit in 64 bits.
    for (int64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        int64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

using Factorization = std::vector<std::pair<int64, int>>;

inline Factorization factorize(int64 n) {
    if (n < 1) detail::fail_arg("factorize: argument must be positive");
    Factorization out;
    auto push = [&out](int64 p, int e) {
        for (auto& pe : out) {
            if (pe.first == p) { pe.second += e; return; }
        }
        out.emplace_back(p, e);
    };
    auto strip = [&](int64& m, int64 p) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) push(p, e);
    };
    int64 m = n;
    strip(m, 2);
    strip(m, 3);
    for (int64 p = 5; m > 1; p += 6) {
        if (p * p > m) {
            if (m > 1) push(m, 1);
            break;
        }
        if (is_prime(m)) {  // screen saves the tail of the trial division
            push(m, 1);
            break;
        }
        strip(m, p);
        strip(m, p + 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int64 euler_phi(int64 n) {
    if (n < 1) detail::fail_arg("euler_phi: argument must be positive");
    int64 r = n;
    for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline int moebius(int64 n) {
    if (n < 1) detail::fail_arg("moebius: argument must be positive");
    int sign = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline int64 tau(int64 n) {
    if (n < 1) detail::fail_arg("tau: argument must be positive");
    int64 r = 1;
    for (auto& [p, e] : factorize(n)) r *= e + 1;
    return r;
}

inline int64 sigma1(int64 n) {
    if (n < 1) detail::fail_arg("sigma1: argument must be positive");
    int64 r = 1;
    for (auto& [p, e] : factorize(n)) {
        int64 pp = 1, s = 1;
        for (int i = 0; i < e; ++i) { pp *= p; s += pp; }
        r *= s;
    }
    return r;
}

inline std::vector<int64> divisors(int64 n) {
    if (n < 1) detail::fail_arg("divisors: argument must be positive");
    std::vector<int64> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t base = out.size();
        int64 pp = 1;
        for (int i = 0; i < e; ++i) {
            pp *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pp);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Moebius values 1..n by linear sieve, for truncated Dirichlet series work.
inline std::vector<int8_t> moebius_table(int64 n) {
    if (n < 1) detail::fail_arg("moebius_table: argument must be positive");
    std::vector<int8_t> mu(static_cast<size_t>(n) + 1, 0);
    std::vector<int64> primes;
    std::vector<char> composite(static_cast<size_t>(n) + 1, 0);
    mu[1] = 1;
    for (int64 i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int64 p : primes) {
            if (i * p > n) break;
            composite[i * p] = 1;
            if (i % p == 0) { mu[i * p] = 0; break; }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

// Ramanujan sum c_q(n) by the divisor form: sum over d | gcd(q, n) of d * mu(q/d).
inline int64 ramanujan_c(int64 q, int64 n) {
    if (q < 1) detail::fail_arg("ramanujan_c: modulus must be positive");
    int64 s = 0;
    for (int64 d : divisors(gcd64(q, n))) s += d * moebius(q / d);
    return s;
}

}  // namespace sl3kl
