#pragma once

// Exact arithmetic in the ring of cyclotomic integers. A value is stored
// against a fixed root order L as an integer polynomial in e(1/L), kept in
// canonical form: reduced modulo the L-th cyclotomic polynomial, so equality
// of values is equality of coefficient vectors after rebasing to a common
// root order.

#include <atomic>
#include <complex>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"

namespace sl3kl {

using BigInt = boost::multiprecision::cpp_int;

inline std::atomic<int64>& modulus_cap_ref() {
    static std::atomic<int64> cap{1000000};
    return cap;
}

inline int64 modulus_cap() { return modulus_cap_ref().load(); }

inline void set_modulus_cap(int64 cap) {
    if (cap < 1) detail::fail_arg("set_modulus_cap: cap must be positive");
    modulus_cap_ref().store(cap);
}

// Reduced fraction a/q with 0 <= a < q, the exponent of e(a/q).
struct RationalAngle {
    int64 num = 0;
    int64 den = 1;

    RationalAngle() = default;
    RationalAngle(int64 a, int64 q) {
        if (q == 0) detail::fail_arg("RationalAngle: zero denominator");
        if (q < 0) { a = -a; q = -q; }
        a = mod_pos(a, q);
        int64 g = gcd64(a, q);
        if (g == 0) g = q;  // a = 0
        num = a / g;
        den = q / g;
    }
    bool operator==(const RationalAngle& o) const { return num == o.num && den == o.den; }
};

namespace detail {

struct CycloTables {
    std::map<int64, std::vector<BigInt>> phi_poly;       // coefficients, degree phi(L), monic
    std::map<int64, std::vector<int64>> phi_poly_small;  // int64 copy when it fits
    std::map<int64, int64> phi_deg;
};

inline CycloTables& cyclo_tables() {
    thread_local CycloTables t;
    return t;
}

// Exact division of monic-divisor polynomials over the integers.
inline std::vector<BigInt> poly_exact_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<BigInt> q(dn - dd + 1);
    for (size_t i = dn + 1; i-- > dd;) {
        BigInt c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("poly_exact_div: nonzero remainder");
    return q;
}

inline const std::vector<BigInt>& phi_polynomial(int64 L) {
    auto& tab = cyclo_tables();
    auto it = tab.phi_poly.find(L);
    if (it != tab.phi_poly.end()) return it->second;
    std::vector<BigInt> p;
    if (L == 1) {
        p = {BigInt(-1), BigInt(1)};
    } else {
        p.assign(static_cast<size_t>(L) + 1, BigInt(0));
        p[0] = -1;
        p[static_cast<size_t>(L)] = 1;
        for (int64 d : divisors(L)) {
            if (d == L) continue;
            p = poly_exact_div(std::move(p), phi_polynomial(d));
        }
    }
    auto [pos, inserted] = tab.phi_poly.emplace(L, std::move(p));
    const auto& stored = pos->second;
    tab.phi_deg[L] = static_cast<int64>(stored.size()) - 1;
    std::vector<int64> small(stored.size());
    bool fits = true;
    for (size_t i = 0; i < stored.size(); ++i) {
        if (stored[i] < std::numeric_limits<long long>::min() ||
            stored[i] > std::numeric_limits<long long>::max()) { fits = false; break; }
        small[i] = stored[i].convert_to<long long>();
    }
    if (fits) tab.phi_poly_small.emplace(L, std::move(small));
    return stored;
}

inline int64 phi_degree(int64 L) {
    phi_polynomial(L);
    return cyclo_tables().phi_deg[L];
}

// In-place reduction of a length-L coefficient vector modulo the L-th
// cyclotomic polynomial, top degree down.
inline void reduce_raw_big(int64 L, std::vector<BigInt>& raw) {
    const auto& phi = phi_polynomial(L);
    size_t dphi = phi.size() - 1;
    for (size_t j = raw.size(); j-- > dphi;) {
        if (raw[j] == 0) continue;
        BigInt c = raw[j];
        raw[j] = 0;
        for (size_t i = 0; i < dphi; ++i) raw[j - dphi + i] -= c * phi[i];
    }
    raw.resize(dphi);
}

// int64 fast path; returns false when the coefficients outgrow int64 or the
// cyclotomic polynomial itself does.
inline bool reduce_raw_small(int64 L, std::vector<int64>& raw) {
    phi_polynomial(L);
    auto& tab = cyclo_tables();
    auto it = tab.phi_poly_small.find(L);
    if (it == tab.phi_poly_small.end()) return false;
    const auto& phi = it->second;
    size_t dphi = phi.size() - 1;
    try {
        for (size_t j = raw.size(); j-- > dphi;) {
            if (raw[j] == 0) continue;
            int64 c = raw[j];
            raw[j] = 0;
            for (size_t i = 0; i < dphi; ++i)
                raw[j - dphi + i] = checked_sub(raw[j - dphi + i], checked_mul(c, phi[i]));
        }
    } catch (const std::overflow_error&) {
        return false;
    }
    raw.resize(dphi);
    return true;
}

}  // namespace detail

class CycSum {
public:
    CycSum() : L_(1), c_{BigInt(0)} {}

    static CycSum integer(BigInt v) {
        CycSum z;
        z.c_[0] = std::move(v);
        return z;
    }

    static CycSum from_raw(int64 L, std::vector<BigInt> raw) {
        check_modulus(L);
        raw.resize(static_cast<size_t>(L), BigInt(0));
        detail::reduce_raw_big(L, raw);
        CycSum z;
        z.L_ = L;
        z.c_ = std::move(raw);
        return z;
    }

    static CycSum from_raw64(int64 L, std::vector<int64> raw) {
        check_modulus(L);
        raw.resize(static_cast<size_t>(L), 0);
        std::vector<int64> copy = raw;
        if (detail::reduce_raw_small(L, copy)) {
            CycSum z;
            z.L_ = L;
            z.c_.assign(copy.begin(), copy.end());
            return z;
        }
        std::vector<BigInt> big(raw.begin(), raw.end());
        return from_raw(L, std::move(big));
    }

    int64 modulus() const { return L_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const BigInt& v : c_)
            if (v != 0) return false;
        return true;
    }

    std::optional<BigInt> as_integer() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return std::nullopt;
        return c_[0];
    }

    CycSum rebased(int64 Lp) const {
        if (Lp == L_) return *this;
        if (Lp % L_ != 0) detail::fail_arg("CycSum::rebased: target is not a multiple of the root order");
        check_modulus(Lp);
        std::vector<BigInt> raw(static_cast<size_t>(Lp), BigInt(0));
        int64 stride = Lp / L_;
        for (size_t j = 0; j < c_.size(); ++j) raw[j * static_cast<size_t>(stride)] = c_[j];
        return from_raw(Lp, std::move(raw));
    }

    CycSum conjugate() const {
        std::vector<BigInt> raw(static_cast<size_t>(L_), BigInt(0));
        for (size_t j = 0; j < c_.size(); ++j) raw[(L_ - static_cast<int64>(j)) % L_] += c_[j];
        return from_raw(L_, std::move(raw));
    }

    std::complex<double> to_complex() const {
        std::complex<double> s(0.0, 0.0);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double ang = 2.0 * pi() * static_cast<double>(j) / static_cast<double>(L_);
            s += c_[j].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s;
    }

    friend CycSum operator+(const CycSum& x, const CycSum& y) {
        auto [a, b] = aligned(x, y);
        for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }

    friend CycSum operator-(const CycSum& x, const CycSum& y) {
        auto [a, b] = aligned(x, y);
        for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }

    CycSum operator-() const {
        CycSum z = *this;
        for (BigInt& v : z.c_) v = -v;
        return z;
    }

    friend CycSum operator*(const CycSum& x, const CycSum& y) {
        auto [a, b] = aligned(x, y);
        int64 L = a.L_;
        std::vector<BigInt> raw(static_cast<size_t>(L), BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                raw[(i + j) % static_cast<size_t>(L)] += a.c_[i] * b.c_[j];
            }
        }
        return from_raw(L, std::move(raw));
    }

    CycSum& operator+=(const CycSum& o) { return *this = *this + o; }
    CycSum& operator-=(const CycSum& o) { return *this = *this - o; }
    CycSum& operator*=(const CycSum& o) { return *this = *this * o; }

    CycSum scaled(const BigInt& k) const {
        CycSum z = *this;
        for (BigInt& v : z.c_) v *= k;
        return z;
    }

    friend bool operator==(const CycSum& x, const CycSum& y) {
        auto [a, b] = aligned(x, y);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycSum& x, const CycSum& y) { return !(x == y); }

private:
    static double pi() { return 3.141592653589793238462643383279502884; }

    static void check_modulus(int64 L) {
        if (L < 1) detail::fail_arg("CycSum: root order must be positive");
        if (L > modulus_cap())
            throw std::runtime_error("CycSum: root order " + std::to_string(L) +
                                     " exceeds the configured cap " + std::to_string(modulus_cap()));
    }

    static std::pair<CycSum, CycSum> aligned(const CycSum& x, const CycSum& y) {
        if (x.L_ == y.L_) return {x, y};
        int64 L = lcm64(x.L_, y.L_);
        return {x.rebased(L), y.rebased(L)};
    }

    int64 L_;
    std::vector<BigInt> c_;
};

inline CycSum root_of_unity(int64 a, int64 q) {
    RationalAngle ang(a, q);
    std::vector<int64> raw(static_cast<size_t>(ang.den), 0);
    raw[static_cast<size_t>(ang.num)] = 1;
    return CycSum::from_raw64(ang.den, std::move(raw));
}

inline CycSum root_of_unity(const RationalAngle& ang) { return root_of_unity(ang.num, ang.den); }

inline CycSum add(const CycSum& x, const CycSum& y) { return x + y; }
inline CycSum mul(const CycSum& x, const CycSum& y) { return x * y; }
inline CycSum scale(const CycSum& x, const BigInt& k) { return x.scaled(k); }
inline std::optional<BigInt> is_integer(const CycSum& z) { return z.as_integer(); }

}  // namespace sl3kl
