#pragma once

#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "json.hpp"

#include "sl3kl/divisor.hpp"
#include "sl3kl/oracle.hpp"

// JSON bindings for the documented output schemas.  Coefficients that fit
// int64 are emitted as JSON integers, anything larger as a decimal string.

namespace sl3kl {

namespace detail {

inline nlohmann::json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<int64>::min();
    static const BigInt hi = std::numeric_limits<int64>::max();
    if (v >= lo && v <= hi) return v.convert_to<int64>();
    return v.str();
}

inline BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<int64>());
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const CycSum& z) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& v : z.coeffs()) coeffs.push_back(detail::big_to_json(v));
    j = nlohmann::json{{"L", z.modulus()}, {"coeffs", std::move(coeffs)}};
}

inline void from_json(const nlohmann::json& j, CycSum& z) {
    std::vector<BigInt> coeffs;
    for (const auto& v : j.at("coeffs")) coeffs.push_back(detail::big_from_json(v));
    z = CycSum::from_raw(j.at("L").get<int64>(), std::move(coeffs));
}

inline void to_json(nlohmann::json& j, const SumResult& r) {
    std::complex<double> a = r.approx();
    j = nlohmann::json{{"exact", r.value},
                       {"approx", {a.real(), a.imag()}},
                       {"formula", r.formula},
                       {"terms", r.terms}};
}

inline void to_json(nlohmann::json& j, const IntMat3& A) {
    j = nlohmann::json{{"rows",
                        {{A(1, 1), A(1, 2), A(1, 3)},
                         {A(2, 1), A(2, 2), A(2, 3)},
                         {A(3, 1), A(3, 2), A(3, 3)}}}};
}

inline void from_json(const nlohmann::json& j, IntMat3& A) {
    const auto& rows = j.at("rows");
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            A(i, k) = rows.at(static_cast<size_t>(i) - 1).at(static_cast<size_t>(k) - 1).get<int64>();
}

inline void to_json(nlohmann::json& j, const StratumKey& k) {
    j = nlohmann::json{{"d1", k.d1}, {"d2", k.d2}, {"f", k.f},
                       {"word", k.word == Word::aba ? "aba" : "bab"}};
}

inline void from_json(const nlohmann::json& j, StratumKey& k) {
    k.d1 = j.at("d1").get<int64>();
    k.d2 = j.at("d2").get<int64>();
    k.f = j.at("f").get<int64>();
    std::string w = j.at("word").get<std::string>();
    if (w != "aba" && w != "bab") detail::fail_arg("StratumKey: word must be aba or bab");
    k.word = w == "aba" ? Word::aba : Word::bab;
}

inline void to_json(nlohmann::json& j, const RefinedKey& k) {
    j = nlohmann::json{{"d1", k.d1}, {"d2", k.d2}, {"f1", k.f1}, {"f2", k.f2}, {"e", k.e}};
}

inline void from_json(const nlohmann::json& j, RefinedKey& k) {
    k.d1 = j.at("d1").get<int64>();
    k.d2 = j.at("d2").get<int64>();
    k.f1 = j.at("f1").get<int64>();
    k.f2 = j.at("f2").get<int64>();
    k.e = j.at("e").get<int64>();
}

inline void to_json(nlohmann::json& j, const CharPair& ch) {
    j = nlohmann::json{{"m", {ch.m1, ch.m2}}, {"n", {ch.n1, ch.n2}}};
}

inline void from_json(const nlohmann::json& j, CharPair& ch) {
    ch.m1 = j.at("m").at(0).get<int64>();
    ch.m2 = j.at("m").at(1).get<int64>();
    ch.n1 = j.at("n").at(0).get<int64>();
    ch.n2 = j.at("n").at(1).get<int64>();
}

inline void to_json(nlohmann::json& j, const CellParams& p) {
    j = nlohmann::json{{"d1", p.d1}, {"d2", p.d2}, {"f", p.f},  {"x2", p.x2}, {"y1", p.y1},
                       {"x3", p.x3}, {"y3", p.y3}, {"k", p.k},  {"u", p.u()}, {"v", p.v()}};
}

inline void from_json(const nlohmann::json& j, CellParams& p) {
    p.d1 = j.at("d1").get<int64>();
    p.d2 = j.at("d2").get<int64>();
    p.f = j.at("f").get<int64>();
    p.x2 = j.at("x2").get<int64>();
    p.y1 = j.at("y1").get<int64>();
    p.x3 = j.at("x3").get<int64>();
    p.y3 = j.at("y3").get<int64>();
    p.k = j.at("k").get<int64>();
}

inline void to_json(nlohmann::json& j, const PluckerSextuple& s) {
    j = nlohmann::json{{"A1", s.A1}, {"B1", s.B1}, {"C1", s.C1},
                       {"A2", s.A2}, {"B2", s.B2}, {"C2", s.C2}};
}

inline void from_json(const nlohmann::json& j, PluckerSextuple& s) {
    s.A1 = j.at("A1").get<int64>();
    s.B1 = j.at("B1").get<int64>();
    s.C1 = j.at("C1").get<int64>();
    s.A2 = j.at("A2").get<int64>();
    s.B2 = j.at("B2").get<int64>();
    s.C2 = j.at("C2").get<int64>();
}

inline void to_json(nlohmann::json& j, const KuznetsovTerm& t) {
    j = nlohmann::json{{"family", t.family},
                       {"eps", {t.eps1, t.eps2}},
                       {"d1", t.d1},
                       {"d2", t.d2},
                       {"f", t.f},
                       {"value", t.value},
                       {"weight_args", {t.weight_arg1, t.weight_arg2}}};
}

inline void to_json(nlohmann::json& j, const DivisorReport& r) {
    j = nlohmann::json{{"lhs", {r.lhs.real(), r.lhs.imag()}},
                       {"rhs", {r.rhs.real(), r.rhs.imag()}},
                       {"abs_err", r.abs_err},
                       {"D", r.D},
                       {"tail_bound", r.tail_bound}};
}

}  // namespace sl3kl
