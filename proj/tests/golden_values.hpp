/**
 * @file golden_values.hpp
 * @brief Frozen closed forms of low-order correlations used as structural
 *        oracles across the test suites.
 */
#pragma once

#include <array>
#include <initializer_list>

#include "ellcorr/ellvalue.hpp"

namespace golden {

using ellcorr::Basis;
using ellcorr::EllValue;
using ellcorr::FieldElem;
using ellcorr::IntPoly;
using ellcorr::RatFunc;
using ellcorr::Regime;

inline RatFunc sh() { return RatFunc::var_h(); }
inline RatFunc sv() { return RatFunc::var_v(); }
inline RatFunc kk() { return RatFunc::modulus(); }
inline RatFunc qh() { return FieldElem::qh(); }
inline RatFunc qv() { return FieldElem::qv(); }
inline RatFunc poly(std::initializer_list<std::array<long, 3>> terms)
{
    IntPoly p;
    for (const auto& t : terms) p = p + IntPoly::monomial(t[0], (int)t[1], (int)t[2]);
    return RatFunc(p);
}
inline FieldElem uv_times(const RatFunc& r)
{
    return FieldElem::from_components(RatFunc(), r, RatFunc(), RatFunc());
}
inline FieldElem uh_times(const RatFunc& r)
{
    return FieldElem::from_components(RatFunc(), RatFunc(), r, RatFunc());
}

// ---- first-neighbor and diagonal values (all basis PI unless noted) ----

inline EllValue C11()
{
    return EllValue::E().mul_rat(RatFunc(1) / kk()) +
           EllValue::K().mul_rat((kk() * kk() - RatFunc(1)) / kk());
}

inline EllValue Cd11() { return EllValue::E(); }

inline EllValue C01()
{
    return EllValue::P().mul_field(uv_times(qh() / sh())) -
           EllValue::K().mul_field(uv_times(RatFunc(1) / sh()));
}

/// Basis PI_P (adapted to M > N).
inline EllValue C10()
{
    return EllValue::P(Basis::PI_P).mul_field(uh_times(qv() / sv())) -
           EllValue::K(Basis::PI_P).mul_field(uh_times(RatFunc(1) / sv()));
}

inline EllValue Cd01()
{
    return EllValue::P().mul_field(uh_times(qv())) -
           EllValue::K().mul_field(uh_times(sv() * sv()));
}

/// Basis PI_P.
inline EllValue Cd10()
{
    return EllValue::P(Basis::PI_P).mul_field(uv_times(qh())) -
           EllValue::K(Basis::PI_P).mul_field(uv_times(sh() * sh()));
}

inline EllValue C22()
{
    RatFunc k2 = kk() * kk();
    RatFunc cEE = (RatFunc(5) - k2) / (RatFunc(3) * k2);
    RatFunc cEK = RatFunc(8) * (k2 - RatFunc(1)) / (RatFunc(3) * k2);
    RatFunc cKK = (k2 - RatFunc(1)) * (k2 - RatFunc(1)) / k2;
    return EllValue::monomial(FieldElem(cEE), 2, 0, 0) +
           EllValue::monomial(FieldElem(cEK), 1, 1, 0) +
           EllValue::monomial(FieldElem(cKK), 0, 2, 0);
}

inline EllValue Cd22()
{
    RatFunc k2 = kk() * kk();
    RatFunc m1 = k2 - RatFunc(1);
    RatFunc cEE = (RatFunc(5) * k2 - RatFunc(1)) / (RatFunc(3) * k2);
    RatFunc cEK = RatFunc(2) * m1 * m1 / (RatFunc(3) * k2);
    RatFunc cKK = -m1 * m1 / (RatFunc(3) * k2);
    return EllValue::monomial(FieldElem(cEE), 2, 0, 0) +
           EllValue::monomial(FieldElem(cEK), 1, 1, 0) +
           EllValue::monomial(FieldElem(cKK), 0, 2, 0);
}

inline EllValue C02()
{
    RatFunc h2 = sh() * sh();
    RatFunc cKK = poly({{1, 2, 4}, {1, 0, 4}, {1, 0, 2}, {1, 0, 0}}) / h2;
    RatFunc cEE = RatFunc(-1) / h2;
    RatFunc cKP = RatFunc(-2) * qv() * qv() * qh() / h2;
    RatFunc cPP = qv() * qh() * poly({{1, 2, 0}, {1, 0, 2}, {2, 0, 0}}) / h2;
    return EllValue::monomial(FieldElem(cKK), 0, 2, 0) +
           EllValue::monomial(FieldElem(cEE), 2, 0, 0) +
           EllValue::monomial(FieldElem(cKP), 0, 1, 1) +
           EllValue::monomial(FieldElem(cPP), 0, 0, 2);
}

inline EllValue Cd02()
{
    RatFunc h2 = sh() * sh();
    RatFunc cKK = poly({{1, 2, 4}, {2, 2, 2}, {1, 0, 4}, {1, 0, 2}, {-1, 0, 0}}) / h2;
    RatFunc cEK = RatFunc(-2) * (kk() * kk() - RatFunc(1)) / h2;
    RatFunc cEE = RatFunc(-1) / h2;
    RatFunc cKP = RatFunc(-2) * sv() * sv() * qh() * qh() * qv() / h2;
    RatFunc cPP = qv() * qh() * poly({{1, 2, 0}, {1, 0, 2}, {2, 2, 2}}) / h2;
    return EllValue::monomial(FieldElem(cKK), 0, 2, 0) +
           EllValue::monomial(FieldElem(cEK), 1, 1, 0) +
           EllValue::monomial(FieldElem(cEE), 2, 0, 0) +
           EllValue::monomial(FieldElem(cKP), 0, 1, 1) +
           EllValue::monomial(FieldElem(cPP), 0, 0, 2);
}

inline EllValue C12()
{
    RatFunc d = sh() * sh() * sv();
    RatFunc k2m1 = kk() * kk() - RatFunc(1);
    return EllValue::monomial(uv_times(RatFunc(1) / d), 2, 0, 0) +
           EllValue::monomial(uv_times(-k2m1 / d), 0, 2, 0) +
           EllValue::monomial(uv_times((kk() * kk() + sv() * sv() - RatFunc(2)) / d), 1, 1, 0) +
           EllValue::monomial(uv_times(-qh() * (sv() * sv() - RatFunc(1)) / d), 1, 0, 1) +
           EllValue::monomial(uv_times(qh() * k2m1 / d), 0, 1, 1);
}

inline EllValue Cd12()
{
    RatFunc h2 = sh() * sh();
    RatFunc k2m1 = kk() * kk() - RatFunc(1);
    return EllValue::monomial(uh_times(sv() * sv() * k2m1 / h2), 0, 2, 0) +
           EllValue::monomial(uh_times((sv() * sv() - RatFunc(1)) / h2), 1, 1, 0) +
           EllValue::monomial(uh_times(RatFunc(1) / h2), 2, 0, 0) +
           EllValue::monomial(uh_times((h2 - RatFunc(1)) * qv() / h2), 1, 0, 1) +
           EllValue::monomial(uh_times(-qv() * k2m1 / h2), 0, 1, 1);
}

// ---- low-temperature values (regime Low; integrals take modulus 1/(s_h s_v),
//      characteristic -1/s_v^2 in basis PI) ----

inline EllValue Clow11() { return EllValue::E(Basis::PI, Regime::Low); }

inline EllValue Clow01()
{
    RatFunc d = sv() * sh() * sh();
    return EllValue::P(Basis::PI, Regime::Low).mul_field(uv_times(qh() / d)) -
           EllValue::K(Basis::PI, Regime::Low).mul_field(uv_times(RatFunc(1) / d));
}

// The printed K̃² coefficient of this value garbles two exponents; the form
// frozen here is the one that matches the determinant oracle numerically
// (the companion numeric test pins it) and makes the value the replacement
// image of Cd02 above.
inline EllValue Clow02()
{
    RatFunc h4 = sh() * sh() * sh() * sh();
    RatFunc h4v2 = h4 * sv() * sv();
    RatFunc cKK = poly({{1, 0, 0}, {2, 2, 0}, {1, 0, 2}, {1, 2, 2}, {-1, 4, 2}}) / h4;
    RatFunc cEK = poly({{-2, 0, 0}, {2, 2, 2}}) / (sh() * sh());
    RatFunc cEE = RatFunc(-1) * sv() * sv();
    RatFunc cKP = RatFunc(-2) * qh() * qv() * qv() / h4v2;
    RatFunc cPP = qh() * qv() * poly({{2, 0, 0}, {1, 2, 0}, {1, 0, 2}}) / h4v2;
    auto mono = [](RatFunc c, int i, int j, int l) {
        return EllValue::monomial(FieldElem(std::move(c)), i, j, l, Basis::PI, Regime::Low);
    };
    return mono(cKK, 0, 2, 0) + mono(cEK, 1, 1, 0) + mono(cEE, 2, 0, 0) + mono(cKP, 0, 1, 1) +
           mono(cPP, 0, 0, 2);
}

}  // namespace golden
