#pragma once

// Classical complete exponential sums evaluated exactly as cyclotomic
// integers: Kloosterman sums S(m, n; c) and Ramanujan sums c_q(n) in their
// unit-sum form. Values are memoized per thread; the angle multisets are
// kept alongside the canonical values so products of two sums can be
// assembled without re-reducing intermediate results.

#include "cyclotomic.hpp"

namespace sl3kl {

namespace detail {

struct KloostermanEntry {
    CycSum value;
    std::vector<int64> exponents;  // phi(c) angles a with the sum = sum of e(a/c)
};

inline const KloostermanEntry& kloosterman_entry(int64 m, int64 n, int64 c) {
    if (c < 1) fail_arg("kloosterman: modulus must be positive");
    thread_local std::map<std::array<int64, 3>, KloostermanEntry> memo;
    std::array<int64, 3> key{mod_pos(m, c), mod_pos(n, c), c};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    KloostermanEntry e;
    e.exponents.reserve(static_cast<size_t>(euler_phi(c)));
    if (c == 1) {
        e.exponents.push_back(0);
    } else {
        for (int64 x = 1; x < c; ++x) {
            if (gcd64(x, c) != 1) continue;
            int64 xbar = inv_mod(x, c);
            e.exponents.push_back(mod_pos(key[0] * x + key[1] * xbar, c));
        }
    }
    std::vector<int64> raw(static_cast<size_t>(c), 0);
    for (int64 a : e.exponents) ++raw[static_cast<size_t>(a)];
    e.value = CycSum::from_raw64(c, std::move(raw));
    return memo.emplace(key, std::move(e)).first->second;
}

}  // namespace detail

inline const CycSum& kloosterman(int64 m, int64 n, int64 c) {
    return detail::kloosterman_entry(m, n, c).value;
}

inline const std::vector<int64>& kloosterman_exponents(int64 m, int64 n, int64 c) {
    return detail::kloosterman_entry(m, n, c).exponents;
}

inline double kloosterman_weil_bound(int64 m, int64 n, int64 c) {
    return static_cast<double>(tau(c)) *
           std::sqrt(static_cast<double>(gcd64(gcd64(m, n), c)) * static_cast<double>(c));
}

// Ramanujan sum in its definition as a sum over primitive roots of unity.
inline CycSum ramanujan_c_direct(int64 q, int64 n) {
    if (q < 1) detail::fail_arg("ramanujan_c_direct: modulus must be positive");
    return kloosterman(n, 0, q);
}

}  // namespace sl3kl
