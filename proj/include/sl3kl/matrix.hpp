#pragma once

// Integer 3x3 unimodular matrices and their Bruhat geometry: deletion
// minors, cell detection, exact Bruhat coordinates for all six Weyl cells,
// long-cell stratification invariants, corner shift moves, the rank-one
// double factorization through both reduced words, the minor-flip involution
// and canonical coset representatives for the two-sided unipotent action.
//
// Index conventions: matrix accessors are 1-based, minor(i, j) deletes row i
// and column j and takes the plain 2x2 determinant, with no cofactor sign.

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"

namespace sl3kl {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// cpp_rational's two-argument constructor rejects negative denominators.
inline Rational ratio(int64 num, int64 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace detail

struct IntMat3 {
    std::array<std::array<int64, 3>, 3> a{};

    static IntMat3 identity() {
        IntMat3 m;
        m.a[0][0] = m.a[1][1] = m.a[2][2] = 1;
        return m;
    }

    int64& operator()(int r, int c) { return a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int64 operator()(int r, int c) const { return a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

    friend IntMat3 operator*(const IntMat3& x, const IntMat3& y) {
        IntMat3 z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int64 s = 0;
                for (int k = 0; k < 3; ++k)
                    s = detail::checked_add(s, detail::checked_mul(x.a[i][k], y.a[k][j]));
                z.a[i][j] = s;
            }
        return z;
    }

    int64 det() const {
        using detail::checked_add;
        using detail::checked_mul;
        using detail::checked_sub;
        int64 t1 = checked_mul(a[0][0], checked_sub(checked_mul(a[1][1], a[2][2]), checked_mul(a[1][2], a[2][1])));
        int64 t2 = checked_mul(a[0][1], checked_sub(checked_mul(a[1][0], a[2][2]), checked_mul(a[1][2], a[2][0])));
        int64 t3 = checked_mul(a[0][2], checked_sub(checked_mul(a[1][0], a[2][1]), checked_mul(a[1][1], a[2][0])));
        return checked_add(checked_sub(t1, t2), t3);
    }

    IntMat3 transpose() const {
        IntMat3 z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) z.a[j][i] = a[i][j];
        return z;
    }

    bool operator==(const IntMat3& o) const { return a == o.a; }
    bool operator!=(const IntMat3& o) const { return !(a == o.a); }
};

// Deletion minor: determinant of the 2x2 block left after removing row i
// and column j. No sign is attached.
inline int64 minor_del(const IntMat3& A, int i, int j) {
    int r[2], c[2], ri = 0, ci = 0;
    for (int k = 1; k <= 3; ++k) {
        if (k != i) r[ri++] = k;
        if (k != j) c[ci++] = k;
    }
    return detail::checked_sub(detail::checked_mul(A(r[0], c[0]), A(r[1], c[1])),
                               detail::checked_mul(A(r[0], c[1]), A(r[1], c[0])));
}

struct MinorTable {
    std::array<std::array<int64, 3>, 3> m{};
    int64 operator()(int i, int j) const { return m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
};

inline MinorTable minors(const IntMat3& A) {
    MinorTable t;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) t.m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = minor_del(A, i, j);
    return t;
}

// Unimodular inverse through the signed cofactor transpose.
inline IntMat3 inverse_unimodular(const IntMat3& A) {
    int64 d = A.det();
    if (d != 1 && d != -1) detail::fail_arg("inverse_unimodular: determinant is not a unit");
    IntMat3 z;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            int64 cof = minor_del(A, j, i);
            if ((i + j) % 2 == 1) cof = -cof;
            z(i, j) = d * cof;
        }
    return z;
}

// The six Weyl elements as words in the two simple reflections.
enum class Weyl { id, a, b, ab, ba, w0 };

inline int weyl_length(Weyl w) {
    switch (w) {
        case Weyl::id: return 0;
        case Weyl::a:
        case Weyl::b: return 1;
        case Weyl::ab:
        case Weyl::ba: return 2;
        case Weyl::w0: return 3;
    }
    return 0;
}

inline const char* weyl_name(Weyl w) {
    switch (w) {
        case Weyl::id: return "id";
        case Weyl::a: return "a";
        case Weyl::b: return "b";
        case Weyl::ab: return "ab";
        case Weyl::ba: return "ba";
        case Weyl::w0: return "aba";
    }
    return "?";
}

inline IntMat3 weyl_matrix(Weyl w) {
    auto rows = [](std::array<int64, 9> v) {
        IntMat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(3 * i + j)];
        return m;
    };
    switch (w) {
        case Weyl::id: return IntMat3::identity();
        case Weyl::a: return rows({0, -1, 0, 1, 0, 0, 0, 0, 1});
        case Weyl::b: return rows({1, 0, 0, 0, 0, -1, 0, 1, 0});
        case Weyl::ab: return rows({0, 0, 1, 1, 0, 0, 0, 1, 0});
        case Weyl::ba: return rows({0, -1, 0, 0, 0, -1, 1, 0, 0});
        case Weyl::w0: return rows({0, 0, 1, 0, -1, 0, 1, 0, 0});
    }
    return IntMat3::identity();
}

// Free strict-upper-triangle slots of the two unipotent groups attached to a
// Weyl element: U_w at positions (i, j) with w(i) < w(j), its complement
// U^w at positions with w(i) > w(j).
struct UnipMask {
    bool p12 = false, p13 = false, p23 = false;
};

inline std::pair<UnipMask, UnipMask> uw_patterns(Weyl w) {
    auto perm = [&](int i) {
        switch (w) {
            case Weyl::id: return i;
            case Weyl::a: return i == 1 ? 2 : i == 2 ? 1 : 3;
            case Weyl::b: return i == 1 ? 1 : i == 2 ? 3 : 2;
            case Weyl::ab: return i == 1 ? 2 : i == 2 ? 3 : 1;
            case Weyl::ba: return i == 1 ? 3 : i == 2 ? 1 : 2;
            case Weyl::w0: return 4 - i;
        }
        return i;
    };
    UnipMask sub, co;
    auto set = [&](int i, int j) {
        bool inc = perm(i) < perm(j);
        bool& s = i == 1 ? (j == 2 ? sub.p12 : sub.p13) : sub.p23;
        bool& c = i == 1 ? (j == 2 ? co.p12 : co.p13) : co.p23;
        s = inc;
        c = !inc;
    };
    set(1, 2);
    set(1, 3);
    set(2, 3);
    return {sub, co};
}

inline Weyl classify_cell(const IntMat3& A) {
    if (A(3, 1) != 0) return minor_del(A, 1, 3) != 0 ? Weyl::w0 : Weyl::ba;
    if (A(2, 1) != 0) return A(3, 2) != 0 ? Weyl::ab : Weyl::a;
    return A(3, 2) != 0 ? Weyl::b : Weyl::id;
}

struct RatMat3 {
    std::array<std::array<Rational, 3>, 3> a{};

    static RatMat3 identity() {
        RatMat3 m;
        m.a[0][0] = m.a[1][1] = m.a[2][2] = 1;
        return m;
    }

    static RatMat3 from_int(const IntMat3& x) {
        RatMat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }

    Rational& operator()(int r, int c) { return a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    const Rational& operator()(int r, int c) const { return a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

    friend RatMat3 operator*(const RatMat3& x, const RatMat3& y) {
        RatMat3 z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s = 0;
                for (int k = 0; k < 3; ++k) s += x.a[static_cast<size_t>(i)][static_cast<size_t>(k)] * y.a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                z.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            }
        return z;
    }

    bool operator==(const RatMat3& o) const { return a == o.a; }
};

// Upper unipotent rational matrix from its three strict-upper entries.
inline RatMat3 unipotent(const Rational& u12, const Rational& u13, const Rational& u23) {
    RatMat3 m = RatMat3::identity();
    m(1, 2) = u12;
    m(1, 3) = u13;
    m(2, 3) = u23;
    return m;
}

struct BruhatCoords {
    Weyl cell = Weyl::id;
    std::array<Rational, 3> t{};  // diagonal torus part, product 1
    RatMat3 uL, uR;               // A = uL * w * t * uR with uR supported on U^w
};

inline RatMat3 reconstruct(const BruhatCoords& bc) {
    RatMat3 t;
    t(1, 1) = bc.t[0];
    t(2, 2) = bc.t[1];
    t(3, 3) = bc.t[2];
    return bc.uL * RatMat3::from_int(weyl_matrix(bc.cell)) * t * bc.uR;
}

inline BruhatCoords bruhat_coords(const IntMat3& A) {
    if (A.det() != 1) detail::fail_arg("bruhat_coords: determinant must be 1");
    BruhatCoords bc;
    bc.cell = classify_cell(A);
    bc.uL = RatMat3::identity();
    bc.uR = RatMat3::identity();
    MinorTable M = minors(A);
    using detail::ratio;
    switch (bc.cell) {
        case Weyl::id:
            bc.t = {Rational(A(1, 1)), Rational(A(2, 2)), Rational(A(3, 3))};
            bc.uL = unipotent(ratio(A(1, 2), A(2, 2)), ratio(A(1, 3), A(3, 3)), ratio(A(2, 3), A(3, 3)));
            break;
        case Weyl::a:
            bc.t = {Rational(A(2, 1)), ratio(M(3, 3), A(2, 1)), Rational(A(3, 3))};
            bc.uL = unipotent(ratio(A(1, 1), A(2, 1)), ratio(A(1, 3), A(3, 3)), ratio(A(2, 3), A(3, 3)));
            bc.uR(1, 2) = ratio(A(2, 2), A(2, 1));
            break;
        case Weyl::b:
            bc.t = {Rational(A(1, 1)), Rational(A(3, 2)), ratio(M(1, 1), A(3, 2))};
            bc.uL = unipotent(ratio(M(2, 1), M(1, 1)), ratio(A(1, 2), A(3, 2)), ratio(A(2, 2), A(3, 2)));
            bc.uR(2, 3) = ratio(A(3, 3), A(3, 2));
            break;
        case Weyl::ab:
            bc.t = {Rational(A(2, 1)), Rational(A(3, 2)), ratio(1, M(1, 3))};
            bc.uL = unipotent(ratio(A(1, 1), A(2, 1)), ratio(A(1, 2), A(3, 2)), ratio(A(2, 2), A(3, 2)));
            bc.uR(1, 3) = ratio(-M(1, 1), M(1, 3));
            bc.uR(2, 3) = ratio(A(3, 3), A(3, 2));
            break;
        case Weyl::ba:
            bc.t = {Rational(A(3, 1)), ratio(1, M(1, 2)), ratio(M(1, 2), A(3, 1))};
            bc.uL = unipotent(ratio(M(2, 2), M(1, 2)), ratio(A(1, 1), A(3, 1)), ratio(A(2, 1), A(3, 1)));
            bc.uR(1, 2) = ratio(A(3, 2), A(3, 1));
            bc.uR(1, 3) = ratio(A(3, 3), A(3, 1));
            break;
        case Weyl::w0:
            bc.t = {Rational(A(3, 1)), ratio(M(1, 3), A(3, 1)), ratio(1, M(1, 3))};
            bc.uL = unipotent(ratio(M(2, 3), M(1, 3)), ratio(A(1, 1), A(3, 1)), ratio(A(2, 1), A(3, 1)));
            bc.uR = unipotent(ratio(A(3, 2), A(3, 1)), ratio(A(3, 3), A(3, 1)), ratio(M(1, 2), M(1, 3)));
            break;
    }
    return bc;
}

// Long-cell stratification data: corner entry c1, corner minor c2, and the
// common gcd f of the bottom row pair, which matches the gcd of the right
// column minor pair. d1 and d2 keep the signs of c1 and c2.
struct StratumInvariants {
    int64 c1, c2, f, d1, d2;
};

inline StratumInvariants stratum_invariants(const IntMat3& A) {
    int64 c1 = A(3, 1);
    int64 c2 = minor_del(A, 1, 3);
    if (c1 == 0 || c2 == 0) detail::fail_arg("stratum_invariants: matrix is not in the long cell");
    int64 f = gcd64(abs64(c1), abs64(A(3, 2)));
    int64 fm = gcd64(abs64(c2), abs64(minor_del(A, 2, 3)));
    if (f != fm) throw std::logic_error("stratum_invariants: row gcd and minor gcd disagree");
    if (c2 % f != 0) throw std::logic_error("stratum_invariants: corner minor not divisible by f");
    return {c1, c2, f, c1 / f, c2 / f};
}

// Mirror stratification along the first column and top minor row.
inline StratumInvariants stratum_invariants_braid(const IntMat3& A) {
    int64 c1 = A(3, 1);
    int64 c2 = minor_del(A, 1, 3);
    if (c1 == 0 || c2 == 0) detail::fail_arg("stratum_invariants_braid: matrix is not in the long cell");
    int64 f = gcd64(abs64(c1), abs64(A(2, 1)));
    int64 fm = gcd64(abs64(c2), abs64(minor_del(A, 1, 2)));
    if (f != fm) throw std::logic_error("stratum_invariants_braid: column gcd and minor gcd disagree");
    if (c1 % f != 0 || c2 % f != 0) throw std::logic_error("stratum_invariants_braid: invariants not divisible by f");
    return {c1, c2, f, c1 / f, c2 / f};
}

// Corner shift moves. Four integer parameters act by upper unipotent
// matrices on the two sides:
//   n1 shifts A32 by f*d1*n1      (right factor, column move)
//   n2 shifts A33 by f*n2         (right factor, Bezout column move)
//   n3 shifts minor(3,3) by f*n3  (left factor, Bezout row move)
//   n4 shifts minor(2,3) by f*d2*n4 (left factor, row move)
// The returned witnesses satisfy rep = left * A * right.
struct ShiftResult {
    IntMat3 rep, left, right;
};

inline ShiftResult shift_representative(const IntMat3& A, int64 n1, int64 n2, int64 n3, int64 n4) {
    StratumInvariants inv = stratum_invariants(A);
    IntMat3 cur = A;
    IntMat3 left = IntMat3::identity();
    IntMat3 right = IntMat3::identity();
    auto apply_right = [&](const IntMat3& g) {
        cur = cur * g;
        right = right * g;
    };
    auto apply_left = [&](const IntMat3& g) {
        cur = g * cur;
        left = g * left;
    };
    auto upper = [](int64 u12, int64 u13, int64 u23) {
        IntMat3 g = IntMat3::identity();
        g(1, 2) = u12;
        g(1, 3) = u13;
        g(2, 3) = u23;
        return g;
    };
    if (n1 != 0) apply_right(upper(n1, 0, 0));
    if (n2 != 0) {
        ExtGcd e = egcd(cur(3, 1), cur(3, 2));
        if (e.g != inv.f) throw std::logic_error("shift_representative: bottom row gcd drifted");
        apply_right(upper(0, n2 * e.x, n2 * e.y));
    }
    if (n3 != 0) {
        ExtGcd e = egcd(minor_del(cur, 1, 3), minor_del(cur, 2, 3));
        if (e.g != inv.f) throw std::logic_error("shift_representative: minor gcd drifted");
        apply_left(upper(0, -n3 * e.x, n3 * e.y));
    }
    if (n4 != 0) apply_left(upper(n4, 0, 0));
    return {cur, left, right};
}

// Cell parameters of a long-cell coset: signed block sizes d1, d2, corner
// gcd f, canonical coprime lifts of the two unit residues, the inverse pair
// (x3, y3) in the window (f, 2f], and the twist class k mod f. u and v are
// the derived matrix entries of the canonical representative.
struct CellParams {
    int64 d1 = 1, d2 = 1, f = 1;
    int64 x2 = 1, y1 = 1;  // lifts coprime to d1*d2*f
    int64 x3 = 2, y3 = 2;  // lifts in (f, 2f], x3*y3 = 1 mod f
    int64 k = 0;

    int64 weight() const { return abs64(d1 * d2 * f); }
    int64 x2bar() const { return inv_mod(x2, abs64(d2 * f)); }
    int64 y1bar() const { return inv_mod(y1, abs64(d1 * f)); }
    int64 u() const { return mod_pos(d1 * x3 * x2bar() + d2 * y1bar() + d1 * d2 * k, weight()); }
    int64 v() const { return mod_pos(d2 * y1bar() * y3 + d1 * x2bar() + d1 * d2 * y3 * k, weight()); }

    bool operator==(const CellParams& o) const {
        return d1 == o.d1 && d2 == o.d2 && f == o.f && x2 == o.x2 && y1 == o.y1 &&
               x3 == o.x3 && y3 == o.y3 && k == o.k;
    }
    bool operator!=(const CellParams& o) const { return !(*this == o); }
};

namespace detail {

inline int64 exact_div(int64 num, int64 den, const char* what) {
    if (den == 0 || num % den != 0) throw std::invalid_argument(std::string(what) + ": division is not exact");
    return num / den;
}

}  // namespace detail

// The five congruences that characterize integrality of the parametrized
// representative: given integer lifts (x2, y1, x3, y3, u, v) for the stratum
// (d1, d2, f), the fractional entries of the representative matrix are all
// integral exactly when these hold.
inline bool cell_congruences_hold(int64 d1, int64 d2, int64 f,
                                  int64 x2, int64 y1, int64 x3, int64 y3,
                                  int64 u, int64 v) {
    using detail::checked_mul;
    if (d1 == 0 || d2 == 0 || f < 1) detail::fail_arg("cell_congruences_hold: bad stratum labels");
    int64 W = checked_mul(checked_mul(d1, d2), f);
    return mod_pos(checked_mul(u, x2) - checked_mul(d1, x3), d2) == 0 &&
           mod_pos(checked_mul(u, y1) - d2, d1) == 0 &&
           mod_pos(checked_mul(checked_mul(u, x2), y1) - checked_mul(checked_mul(d1, x3), y1) -
                       checked_mul(d2, x2),
                   checked_mul(d1, d2)) == 0 &&
           mod_pos(v - checked_mul(u, y3), checked_mul(d1, f)) == 0 &&
           mod_pos(checked_mul(v, x2) - checked_mul(checked_mul(u, y3), x2) -
                       checked_mul(d1, 1 - checked_mul(x3, y3)),
                   W) == 0;
}

// Integral canonical representative built from cell parameters. Throws when
// the parameters violate the integrality congruences.
inline IntMat3 canonical_rep(const CellParams& p) {
    if (p.f < 1 || p.d1 == 0 || p.d2 == 0) detail::fail_arg("canonical_rep: bad stratum labels");
    if (mod_pos(p.x3 * p.y3, p.f) != mod_pos(1, p.f))
        detail::fail_arg("canonical_rep: x3*y3 is not 1 modulo f");
    int64 u = p.d1 * p.x3 * p.x2bar() + p.d2 * p.y1bar() + p.d1 * p.d2 * p.k;
    int64 v = p.d2 * p.y1bar() * p.y3 + p.d1 * p.x2bar() + p.d1 * p.d2 * p.y3 * p.k;
    if (!cell_congruences_hold(p.d1, p.d2, p.f, p.x2, p.y1, p.x3, p.y3, u, v))
        detail::fail_arg("canonical_rep: integrality congruences violated");
    using detail::checked_mul;
    using detail::exact_div;
    IntMat3 A;
    A(3, 1) = p.d1 * p.f;
    A(3, 2) = p.f * p.y1;
    A(3, 3) = p.y3;
    A(2, 1) = u;
    A(2, 2) = exact_div(u * p.y1 - p.d2, p.d1, "canonical_rep entry (2,2)");
    A(2, 3) = exact_div(u * p.y3 - v, p.d1 * p.f, "canonical_rep entry (2,3)");
    A(1, 1) = exact_div(checked_mul(u, p.x2) - p.d1 * p.x3, p.d2, "canonical_rep entry (1,1)");
    A(1, 2) = exact_div(checked_mul(checked_mul(u, p.x2), p.y1) - p.d1 * p.x3 * p.y1 - p.x2 * p.d2,
                        p.d1 * p.d2, "canonical_rep entry (1,2)");
    A(1, 3) = exact_div(checked_mul(-v, p.x2) + checked_mul(checked_mul(u, p.x2), p.y3) +
                            p.d1 * (1 - p.x3 * p.y3),
                        p.d1 * p.d2 * p.f, "canonical_rep entry (1,3)");
    if (A.det() != 1) throw std::logic_error("canonical_rep: determinant check failed");
    return A;
}

namespace detail {

// Window lift t = value mod f with t in (f, 2f].
inline int64 window_lift(int64 value, int64 f) {
    return f + 1 + mod_pos(value - f - 1, f);
}

}  // namespace detail

// Aligns a long-cell matrix to its canonical two-sided coset representative
// and reads off the cell parameters.
inline CellParams cell_params_of(const IntMat3& A0) {
    StratumInvariants inv = stratum_invariants(A0);
    int64 f = inv.f, d1 = inv.d1, d2 = inv.d2;
    int64 W = abs64(d1 * d2 * f);
    IntMat3 A = A0;

    int64 x3 = detail::window_lift(minor_del(A, 3, 3), f);
    A = shift_representative(A, 0, 0, (x3 - minor_del(A, 3, 3)) / f, 0).rep;
    int64 y3 = detail::window_lift(A(3, 3), f);
    A = shift_representative(A, 0, (y3 - A(3, 3)) / f, 0, 0).rep;

    int64 x2r = detail::exact_div(minor_del(A, 2, 3), f, "cell_params_of minor(2,3)");
    int64 x2 = coprime_lift(x2r, d2, W);
    A = shift_representative(A, 0, 0, 0, detail::exact_div(x2 - x2r, d2, "cell_params_of x2 alignment")).rep;
    int64 y1r = detail::exact_div(A(3, 2), f, "cell_params_of A(3,2)");
    int64 y1 = coprime_lift(y1r, d1, W);
    A = shift_representative(A, detail::exact_div(y1 - y1r, d1, "cell_params_of y1 alignment"), 0, 0, 0).rep;

    CellParams p;
    p.d1 = d1;
    p.d2 = d2;
    p.f = f;
    p.x2 = x2;
    p.y1 = y1;
    p.x3 = x3;
    p.y3 = y3;
    p.k = 0;
    int64 u = mod_pos(A(2, 1), W);
    int64 base = p.d1 * p.x3 * p.x2bar() + p.d2 * p.y1bar();
    int64 diff = u - mod_pos(base, W);
    if (mod_pos(diff, abs64(d1 * d2)) != 0)
        throw std::logic_error("cell_params_of: twist class is not integral");
    p.k = mod_pos(diff / (d1 * d2), f);
    if (p.u() != u) throw std::logic_error("cell_params_of: derived entry u disagrees");
    if (p.v() != mod_pos(minor_del(A, 1, 2), W))
        throw std::logic_error("cell_params_of: derived minor v disagrees");
    return p;
}

inline bool coset_equal(const IntMat3& A, const IntMat3& B) {
    StratumInvariants ia = stratum_invariants(A);
    StratumInvariants ib = stratum_invariants(B);
    if (ia.d1 != ib.d1 || ia.d2 != ib.d2 || ia.f != ib.f) return false;
    return cell_params_of(A) == cell_params_of(B);
}

// Minor-flip involution: the matrix of deletion minors read in reversed
// order. Exchanges the two stratifications and squares to the identity.
inline IntMat3 dagger(const IntMat3& A) {
    MinorTable M = minors(A);
    IntMat3 z;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) z(i, j) = M(4 - i, 4 - j);
    return z;
}

struct Rat2x2 {
    Rational a, b, c, d;  // [[a, b], [c, d]]

    Rational det() const { return a * d - b * c; }
};

// Embeddings of 2x2 blocks along the two simple roots.
inline RatMat3 embed_alpha(const Rat2x2& g) {
    RatMat3 m = RatMat3::identity();
    m(1, 1) = g.a;
    m(1, 2) = g.b;
    m(2, 1) = g.c;
    m(2, 2) = g.d;
    return m;
}

inline RatMat3 embed_beta(const Rat2x2& g) {
    RatMat3 m = RatMat3::identity();
    m(2, 2) = g.a;
    m(2, 3) = g.b;
    m(3, 2) = g.c;
    m(3, 3) = g.d;
    return m;
}

// Rank-one coordinates through the word alpha-beta-alpha:
//   A = embed_alpha(g2) * embed_beta(g3) * embed_alpha(g1).
struct BSFactors {
    Rat2x2 g2, g3, g1;
    int64 f = 1, D = 0;
};

inline BSFactors bott_samelson(const IntMat3& A) {
    StratumInvariants inv = stratum_invariants(A);
    MinorTable M = minors(A);
    int64 prod = detail::checked_mul(A(3, 3), M(3, 3)) - 1;
    if (prod == 0)
        detail::fail_arg("bott_samelson: A33 * minor(3,3) = 1, apply shift_representative first");
    if (prod % inv.f != 0) throw std::logic_error("bott_samelson: corner product not divisible by f");
    int64 D = prod / inv.f;
    int64 x2 = detail::exact_div(M(2, 3), inv.f, "bott_samelson x2");
    int64 y1 = detail::exact_div(A(3, 2), inv.f, "bott_samelson y1");
    int64 x3 = M(3, 3), y3 = A(3, 3);
    Rational x1 = detail::ratio(M(3, 2), D), y2 = detail::ratio(A(2, 3), D);
    BSFactors out;
    out.f = inv.f;
    out.D = D;
    out.g2 = {Rational(x2), (Rational(x2) * y2 - 1) / inv.d2, Rational(inv.d2), y2};
    out.g3 = {Rational(x3), Rational(D), Rational(inv.f), Rational(y3)};
    out.g1 = {x1, (x1 * y1 - 1) / inv.d1, Rational(inv.d1), Rational(y1)};
    if (out.g2.det() != 1 || out.g3.det() != 1 || out.g1.det() != 1)
        throw std::logic_error("bott_samelson: factor determinant check failed");
    return out;
}

// Mirror coordinates through the word beta-alpha-beta:
//   A = embed_beta(g1) * embed_alpha(g3) * embed_beta(g2).
struct BraidFactors {
    Rat2x2 g1, g3, g2;
    int64 f = 1, D = 0;
};

inline BraidFactors braid_factorization(const IntMat3& A) {
    StratumInvariants inv = stratum_invariants_braid(A);
    MinorTable M = minors(A);
    int64 prod = detail::checked_mul(A(1, 1), M(1, 1)) - 1;
    if (prod == 0)
        detail::fail_arg("braid_factorization: A11 * minor(1,1) = 1, shift the representative first");
    if (prod % inv.f != 0) throw std::logic_error("braid_factorization: corner product not divisible by f");
    int64 D = prod / inv.f;
    int64 x3 = A(1, 1), y3 = M(1, 1);
    int64 x1 = detail::exact_div(A(2, 1), inv.f, "braid_factorization x1");
    int64 y2 = detail::exact_div(M(1, 2), inv.f, "braid_factorization y2");
    Rational x2 = detail::ratio(A(1, 2), D), y1 = detail::ratio(M(2, 1), D);
    BraidFactors out;
    out.f = inv.f;
    out.D = D;
    out.g1 = {Rational(x1), (Rational(x1) * y1 - 1) / inv.d1, Rational(inv.d1), y1};
    out.g3 = {Rational(x3), Rational(D), Rational(inv.f), Rational(y3)};
    out.g2 = {x2, (x2 * Rational(y2) - 1) / inv.d2, Rational(inv.d2), Rational(y2)};
    if (out.g1.det() != 1 || out.g3.det() != 1 || out.g2.det() != 1)
        throw std::logic_error("braid_factorization: factor determinant check failed");
    return out;
}

}  // namespace sl3kl
