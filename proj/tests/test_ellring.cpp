#include <stdexcept>

#include "doctest.h"
#include "ellcorr/ellvalue.hpp"
#include "golden_values.hpp"
#include "test_util.hpp"

using namespace ellcorr;

TEST_SUITE("ellring")
{
    TEST_CASE("ellvalue construction and arithmetic")
    {
        EllValue E = EllValue::E(), K = EllValue::K(), P = EllValue::P();
        CHECK(EllValue().is_zero());
        CHECK((E + K) * (E - K) == E * E - K * K);

        EllValue c11 = golden::C11();
        CHECK(c11 * EllValue(1) == c11);
        CHECK(c11 + EllValue() == c11);
        CHECK(c11 - c11 == EllValue());
        CHECK((-c11) + c11 == EllValue());

        // square of the first row-neighbor: top third-kind coefficient
        EllValue sq = golden::C01() * golden::C01();
        CHECK(sq.max_pi_degree() == 2);
        CHECK(sq.homogeneous_degree() == 2);
        FieldElem top = sq.coeff(0, 0, 2);
        RatFunc expect = golden::qv() * golden::qh() * golden::qh() / (golden::sh() * golden::sh());
        CHECK(top == FieldElem(expect));

        // mixing the two third-kind bases is refused
        CHECK_THROWS_AS(EllValue::P() + EllValue::P(Basis::PI_P), std::domain_error);
        CHECK_THROWS_AS(EllValue::K() * EllValue::K(Basis::PI, Regime::Low), std::domain_error);
        // ...but the zero value is compatible with everything
        CHECK((EllValue() + EllValue::P(Basis::PI_P)) == EllValue::P(Basis::PI_P));
    }

    TEST_CASE("homogeneity and adapted-basis structure")
    {
        struct Row {
            EllValue v;
            int degree;
            int max_l;
        };
        const Row rows[] = {
            {golden::C11(), 1, 0},  {golden::Cd11(), 1, 0}, {golden::C01(), 1, 1},
            {golden::Cd01(), 1, 1}, {golden::C10(), 1, 1},  {golden::C22(), 2, 0},
            {golden::Cd22(), 2, 0}, {golden::C02(), 2, 2},  {golden::Cd02(), 2, 2},
            {golden::C12(), 2, 1},  {golden::Cd12(), 2, 1},
        };
        for (const auto& r : rows) {
            CHECK(r.v.homogeneous_degree() == r.degree);
            CHECK(r.v.max_pi_degree() <= r.max_l);
            for (const auto& [m, c] : r.v.terms()) CHECK(c.is_single_component());
        }
        // row values carry a single overall square-root factor; even split none
        EllValue c01 = golden::C01(), c12 = golden::C12();
        EllValue c02 = golden::C02(), c22 = golden::C22();
        for (const auto& [m, c] : c01.terms()) CHECK(!c.c10().is_zero());
        for (const auto& [m, c] : c12.terms()) CHECK(!c.c10().is_zero());
        for (const auto& [m, c] : c02.terms()) CHECK(c.is_rational());
        for (const auto& [m, c] : c22.terms()) CHECK(c.is_rational());

        EllValue stratum = golden::C02().pi_coefficient(1);
        CHECK(stratum == EllValue::K().mul_rat(RatFunc(-2) * golden::qv() * golden::qv() *
                                               golden::qh() / (golden::sh() * golden::sh())));
    }

    TEST_CASE("exact division")
    {
        EllValue E = EllValue::E(), K = EllValue::K();
        CHECK(exact_divide(E * E - K * K, E - K) == E + K);
        CHECK(exact_divide(EllValue(), E + K).is_zero());
        CHECK_THROWS_AS(exact_divide(E, EllValue()), std::domain_error);

        for (int i = 0; i < 20; i++) {
            EllValue a = testutil::rand_ell(2, 3);
            EllValue b = testutil::rand_ell(2, 3, Basis::PI, true);
            CHECK(exact_divide(a * b, b) == a);
        }

        // a nonzero remainder is an error that carries the evidence
        EllValue num = E * E + EllValue(1);
        try {
            exact_divide(num, E - K);
            CHECK(false);
        } catch (const ExactDivisionError& err) {
            CHECK(!err.remainder().is_zero());
        }
    }

    TEST_CASE("basis change")
    {
        // pure third-kind monomial: P' = K + 1/w - P
        FieldElem invw = FieldElem::from_components(
            RatFunc(), RatFunc(), RatFunc(), RatFunc(1) / (golden::qv() * golden::qh()));
        EllValue moved = change_basis(EllValue::P(Basis::PI_P), Basis::PI);
        CHECK(moved == EllValue::K() + EllValue(invw) - EllValue::P());

        // P-free values only change their tag
        EllValue k_moved = change_basis(golden::C11(), Basis::PI_P);
        CHECK(k_moved.coeff(1, 0, 0) == golden::C11().coeff(1, 0, 0));
        CHECK(k_moved.basis() == Basis::PI_P);

        for (const EllValue& v : {golden::C01(), golden::C02(), golden::C12(), golden::Cd02()})
            CHECK(change_basis(change_basis(v, Basis::PI_P), Basis::PI) == v);
        for (int i = 0; i < 25; i++) {
            EllValue v = testutil::rand_ell(2, 3);
            CHECK(change_basis(change_basis(v, Basis::PI_P), Basis::PI) == v);
        }

        // first-neighbor link: s_v C(1,0) = u_v - C_d(0,1) after re-basing
        EllValue lhs = change_basis(golden::C10(), Basis::PI).mul_rat(golden::sv());
        EllValue rhs = EllValue(FieldElem::u_v()) - golden::Cd01();
        CHECK(lhs == rhs);
        // and C(1,0) is the swap of C(0,1)
        CHECK(swap_hv(golden::C01()) == golden::C10());
    }

    TEST_CASE("derivative closure")
    {
        RatFunc k = RatFunc::modulus();
        EllValue dK = derivative_k(EllValue::K());
        CHECK(dK == EllValue::E().mul_rat(RatFunc(1) / (k * (RatFunc(1) - k * k))) -
                        EllValue::K().mul_rat(RatFunc(1) / k));
        EllValue dE = derivative_k(EllValue::E());
        CHECK(dE == (EllValue::E() - EllValue::K()).mul_rat(RatFunc(1) / k));
        CHECK(derivative_k(EllValue(1)).is_zero());

        // degree homogeneity is preserved and the third-kind power never grows
        for (const EllValue& v : {golden::C22(), golden::C02(), golden::C12()}) {
            EllValue d = derivative_k(v);
            CHECK(d.homogeneous_degree() == v.homogeneous_degree());
            CHECK(d.max_pi_degree() <= v.max_pi_degree());
        }

        for (int i = 0; i < 20; i++) {
            EllValue a = testutil::rand_ell(1, 2);
            EllValue b = testutil::rand_ell(1, 2);
            CHECK(derivative_k(a * b) == derivative_k(a) * b + a * derivative_k(b));
        }

        // differentiation commutes with the basis change
        for (const EllValue& v : {golden::C10(), golden::Cd10()}) {
            EllValue lhs = change_basis(derivative_k(v), Basis::PI);
            EllValue rhs = derivative_k(change_basis(v, Basis::PI));
            CHECK(lhs == rhs);
        }

        CHECK_THROWS_AS(derivative_k(golden::Clow01()), std::domain_error);
    }

    TEST_CASE("duality")
    {
        CHECK(duality_map(EllValue(1)) == EllValue(1));
        CHECK(duality_map(golden::C11()) == golden::Cd11());
        CHECK(duality_map(golden::C01()) == golden::Cd01());
        CHECK(duality_map(golden::C22()) == golden::Cd22());
        CHECK(duality_map(golden::C02()) == golden::Cd02());
        CHECK(duality_map(golden::C12()) == golden::Cd12());
        CHECK(duality_map(golden::C10()) == golden::Cd10());

        for (const EllValue& v : {golden::C11(), golden::C01(), golden::C02(), golden::C12()})
            CHECK(duality_map(duality_map(v)) == v);
        for (int i = 0; i < 10; i++) {
            EllValue v = testutil::rand_ell(2, 2);
            CHECK(duality_map(duality_map(v)) == v);
        }
        CHECK_THROWS_AS(duality_map(golden::Clow01()), std::domain_error);
    }

    TEST_CASE("swap")
    {
        EllValue k_swapped = swap_hv(EllValue::K());
        CHECK(k_swapped.basis() == Basis::PI_P);
        CHECK(k_swapped.coeff(0, 1, 0) == FieldElem(1));

        // diagonal is symmetric: only the basis tag moves
        EllValue c11s = swap_hv(golden::C11());
        CHECK(change_basis(c11s, Basis::PI) == golden::C11());

        CHECK(swap_hv(golden::Cd01()) == golden::Cd10());
        for (const EllValue& v : {golden::C01(), golden::C02(), golden::C12()})
            CHECK(swap_hv(swap_hv(v)) == v);
        for (int i = 0; i < 10; i++) {
            EllValue v = testutil::rand_ell(2, 2);
            CHECK(swap_hv(swap_hv(v)) == v);
        }
        // swap respects products
        EllValue a = golden::C01(), b = golden::C02();
        CHECK(swap_hv(a * b) == swap_hv(a) * swap_hv(b));
    }

    TEST_CASE("isotropic reduction")
    {
        CHECK(isotropic_reduce(EllValue(1)) == EllValue(1));

        RatFunc s = RatFunc::var_h();
        RatFunc s2 = s * s;
        // second row-neighbor on the isotropic line
        RatFunc cKK = (s2 + RatFunc(1)) * (s2 - RatFunc(1)) * (s2 - RatFunc(1)) /
                      (RatFunc(2) * s2);
        RatFunc cEE = RatFunc(-1) / s2;
        RatFunc c0 = (s2 + RatFunc(1)) / (RatFunc(2) * s2);
        EllValue expect = EllValue::monomial(FieldElem(cKK), 0, 2, 0) +
                          EllValue::monomial(FieldElem(cEE), 2, 0, 0) + EllValue(FieldElem(c0));
        CHECK(isotropic_reduce(golden::C02()) == expect);

        // nearest diagonal: coefficients collapse to one variable
        EllValue c11iso = isotropic_reduce(golden::C11());
        CHECK(c11iso == EllValue::E().mul_rat(RatFunc(1) / s2) +
                            EllValue::K().mul_rat((s2 * s2 - RatFunc(1)) / s2));

        // the reduced value no longer references the second variable
        EllValue c12iso = isotropic_reduce(golden::C12());
        for (const auto& [m, c] : c12iso.terms()) {
            CHECK(c.c10().is_zero());
            CHECK(c.c11().is_zero());
            CHECK(c.c00().num().degree_v() <= 0);
            CHECK(c.c00().den().degree_v() <= 0);
            CHECK(c.c01().num().degree_v() <= 0);
            CHECK(c.c01().den().degree_v() <= 0);
        }
    }
}
