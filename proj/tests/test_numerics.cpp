/**
 * @file test_numerics.cpp
 * @brief Numeric kernel tests: Carlson integrals, normalized elliptic
 *        integrals, parameter points, symbolic evaluation, identity
 *        verification reports, and the Toeplitz correlation oracles.
 */
#include <random>
#include <stdexcept>

#include "anchors.hpp"
#include "approx.hpp"
#include "doctest.h"
#include "ellcorr/numerics.hpp"
#include "golden_values.hpp"
#include "json.hpp"
#include "test_util.hpp"

using ellcorr::carlson_rc;
using ellcorr::carlson_rd;
using ellcorr::carlson_rf;
using ellcorr::carlson_rj;
using ellcorr::ell_tilde;
using ellcorr::EllKind;
using ellcorr::eval_field;
using ellcorr::eval_ratfunc;
using ellcorr::eval_value;
using ellcorr::ktilde_agm;
using ellcorr::ParamPoint;
using ellcorr::PrecisionConfig;
using ellcorr::PrecisionScope;
using ellcorr::Real;
using ellcorr::Regime;

using testnum::pi_real;
using testnum::udraw;

TEST_SUITE("numerics")
{
    TEST_CASE("carlson kernels and normalized integrals")
    {
        PrecisionScope scope(65);
        const Real pi = pi_real();

        // pinned special values
        CHECK_NEAR(carlson_rf(Real(1), Real(1), Real(1)), Real(1), "1e-60");
        CHECK_NEAR(carlson_rf(Real(0), Real(1), Real(1)), pi / 2, "1e-60");
        CHECK_NEAR(carlson_rc(Real(4), Real(4)), Real(1) / 2, "1e-60");
        CHECK_NEAR(carlson_rd(Real(0), Real(1), Real(1)), 3 * pi / 4, "1e-60");

        // frozen independent anchors for the normalized integrals
        CHECK_NEAR(ell_tilde(EllKind::K, Real(1) / 2), Real(anchors::kKt_half), "1e-50");
        CHECK_NEAR(ell_tilde(EllKind::E, Real(1) / 2), Real(anchors::kEt_half), "1e-50");
        CHECK_NEAR(ell_tilde(EllKind::Pi, Real(1) / 2, Real(-1) / 2),
                   Real(anchors::kPit_mhalf_half), "1e-50");
        CHECK_NEAR(ell_tilde(EllKind::Pi, Real(12) / 25, Real(-9) / 25),
                   Real(anchors::kPit_m9_25_12_25), "1e-50");
        CHECK_NEAR(ell_tilde(EllKind::Pi, Real(12) / 25, Real(-16) / 25),
                   Real(anchors::kPit_m16_25_12_25), "1e-50");

        // frozen anchors for the third-kind Carlson form, incl. principal values
        CHECK_NEAR(carlson_rj(Real(1), Real(2), Real(3), Real(-1) / 2),
                   Real(anchors::kRJ_1_2_3_mhalf), "1e-45");
        CHECK_NEAR(carlson_rj(Real(2), Real(5) / 4, Real(3), Real(-3)),
                   Real(anchors::kRJ_2_54_3_m3), "1e-45");
        CHECK_NEAR(carlson_rj(Real(0), Real(3) / 4, Real(1), Real(3) / 2),
                   Real(anchors::kRJ_0_34_1_32), "1e-50");

        // independent arithmetic-geometric-mean route agrees with the
        // Carlson route for the first kind
        CHECK_NEAR(ktilde_agm(Real(3) / 10), Real(anchors::kKt_310), "1e-50");
        std::mt19937_64 gen(0x616d67ULL);
        for (int i = 0; i < 50; i++) {
            Real k = Real(1) / 100 + Real(97) / 100 * Real(udraw(gen));
            CHECK_NEAR(ktilde_agm(k), ell_tilde(EllKind::K, k), "1e-50");
        }

        // Legendre relation in normalized form: E K' + E' K - K K' = 2/pi
        {
            Real k(Real(3) / 10);
            Real kp = sqrt(1 - k * k);
            Real lhs = ell_tilde(EllKind::E, k) * ell_tilde(EllKind::K, kp) +
                       ell_tilde(EllKind::E, kp) * ell_tilde(EllKind::K, k) -
                       ell_tilde(EllKind::K, k) * ell_tilde(EllKind::K, kp);
            CHECK_NEAR(lhs, 2 / pi, "1e-58");
        }

        // R_C is the two-argument degeneration of R_F
        for (int i = 0; i < 10; i++) {
            Real x = Real(1) / 10 + 5 * Real(udraw(gen));
            Real y = Real(1) / 10 + 5 * Real(udraw(gen));
            CHECK_NEAR(carlson_rc(x, y), carlson_rf(x, y, y), "1e-58");
        }

        // duplication invariance of R_F
        for (int i = 0; i < 10; i++) {
            Real x = Real(1) / 10 + 5 * Real(udraw(gen));
            Real y = Real(1) / 10 + 5 * Real(udraw(gen));
            Real z = Real(1) / 10 + 5 * Real(udraw(gen));
            Real lam = sqrt(x) * sqrt(y) + sqrt(y) * sqrt(z) + sqrt(z) * sqrt(x);
            CHECK_NEAR(carlson_rf(x, y, z),
                       carlson_rf((x + lam) / 4, (y + lam) / 4, (z + lam) / 4), "1e-58");
        }

        // symmetry of R_J in its first three arguments
        CHECK_NEAR(carlson_rj(Real(1), Real(2), Real(3), Real(1) / 2),
                   carlson_rj(Real(3), Real(1), Real(2), Real(1) / 2), "1e-60");

        // third-kind degenerations
        CHECK_NEAR(ell_tilde(EllKind::Pi, Real(12) / 25, Real(0)),
                   ell_tilde(EllKind::K, Real(12) / 25), "1e-58");
        CHECK_NEAR(ell_tilde(EllKind::Pi, Real(0), Real(-1)), 1 / sqrt(Real(2)), "1e-58");

        // domain restrictions fail loudly
        CHECK_THROWS_AS(carlson_rf(Real(-1), Real(1), Real(1)), std::domain_error);
        CHECK_THROWS_AS(carlson_rf(Real(0), Real(0), Real(1)), std::domain_error);
        CHECK_THROWS_AS(carlson_rd(Real(1), Real(1), Real(0)), std::domain_error);
        CHECK_THROWS_AS(carlson_rd(Real(0), Real(0), Real(1)), std::domain_error);
        CHECK_THROWS_AS(carlson_rj(Real(1), Real(2), Real(3), Real(0)), std::domain_error);
        CHECK_THROWS_AS(carlson_rc(Real(1), Real(0)), std::domain_error);
        CHECK_THROWS_AS(ell_tilde(EllKind::K, Real(1)), std::domain_error);
        CHECK_THROWS_AS(ell_tilde(EllKind::K, Real(-1) / 10), std::domain_error);
        CHECK_THROWS_AS(ell_tilde(EllKind::Pi, Real(1) / 2), std::domain_error);
        CHECK_THROWS_AS(ell_tilde(EllKind::Pi, Real(1) / 2, Real(1)), std::domain_error);
    }

    TEST_CASE("parameter point derived quantities")
    {
        PrecisionScope scope(65);
        ParamPoint p(Real(3) / 5, Real(4) / 5);

        CHECK_NEAR(p.k(), Real(12) / 25, "1e-62");
        CHECK_NEAR(p.k_dual(), Real(25) / 12, "1e-60");
        CHECK_NEAR(p.nu(), Real(3) / 4, "1e-62");
        CHECK_NEAR(p.u_h() * p.u_h(), 1 + p.s_h() * p.s_h(), "1e-60");
        CHECK_NEAR(p.u_v() * p.u_v(), 1 + p.s_v() * p.s_v(), "1e-60");
        CHECK_NEAR(p.k() * p.k_dual(), Real(1), "1e-60");
        CHECK(p.regime() == Regime::High);

        // z maps: z = (u - 1)/s, and (1 - z_v)/(1 + z_v) = u_v - s_v
        CHECK_NEAR(p.z_h(), (p.u_h() - 1) / p.s_h(), "1e-60");
        CHECK_NEAR((1 - p.z_v()) / (1 + p.z_v()), p.u_v() - p.s_v(), "1e-60");
        CHECK_NEAR(p.alpha1(), p.z_h() * (p.u_v() - p.s_v()), "1e-60");
        CHECK_NEAR(p.alpha2() * p.z_h(), p.u_v() - p.s_v(), "1e-60");
        CHECK_NEAR(p.alpha1() * p.alpha2(), (p.u_v() - p.s_v()) * (p.u_v() - p.s_v()),
                   "1e-60");

        ParamPoint low(Real(5) / 4, Real(8) / 5);
        CHECK(low.regime() == Regime::Low);
        CHECK_NEAR(low.k(), Real(2), "1e-60");
        CHECK_NEAR(low.k_dual(), Real(1) / 2, "1e-60");

        CHECK_THROWS_AS(ParamPoint(Real(0), Real(1)), std::domain_error);
        CHECK_THROWS_AS(ParamPoint(Real(1), Real(-2)), std::domain_error);
        CHECK_THROWS_AS(ParamPoint(Real(2), Real(1) / 2), std::domain_error);
    }

    TEST_CASE("symbolic value evaluation")
    {
        PrecisionScope scope(65);
        ParamPoint p(Real(3) / 5, Real(4) / 5);

        // coefficient-level evaluation
        CHECK_NEAR(eval_ratfunc(golden::sh(), p), Real(3) / 5, "1e-62");
        CHECK_NEAR(eval_ratfunc(golden::kk(), p), Real(12) / 25, "1e-60");
        CHECK_NEAR(eval_field(golden::uv_times(golden::sh()), p), p.u_v() * Real(3) / 5,
                   "1e-60");

        // closed forms against the independent quadrature anchors
        CHECK_NEAR(eval_value(golden::C11(), p), Real(anchors::kDiag35_45[0]), "1e-50");
        CHECK_NEAR(eval_value(golden::C22(), p), Real(anchors::kDiag35_45[1]), "1e-50");
        CHECK_NEAR(eval_value(golden::Cd11(), p), Real(anchors::kDualDiag35_45[0]), "1e-50");
        CHECK_NEAR(eval_value(golden::Cd22(), p), Real(anchors::kDualDiag35_45[1]), "1e-50");
        CHECK_NEAR(eval_value(golden::C01(), p), Real(anchors::kRow35_45[0]), "1e-50");
        CHECK_NEAR(eval_value(golden::C02(), p), Real(anchors::kRow35_45[1]), "1e-50");
        CHECK_NEAR(eval_value(golden::Cd01(), p), Real(anchors::kDualRow35_45[0]), "1e-50");
        CHECK_NEAR(eval_value(golden::Cd02(), p), Real(anchors::kDualRow35_45[1]), "1e-50");
        CHECK_NEAR(eval_value(golden::C10(), p), Real(anchors::kRowSwap35_45[0]), "1e-50");
        CHECK_NEAR(eval_value(golden::Cd10(), p), Real(anchors::kDualRowSwap35_45[0]),
                   "1e-50");

        // the horizontal/vertical swap commutes with evaluation
        CHECK_NEAR(eval_value(swap_hv(golden::C01()), p), Real(anchors::kRowSwap35_45[0]),
                   "1e-48");

        // low-temperature values resolve at the reciprocal modulus
        ParamPoint q(Real(5) / 4, Real(8) / 5);
        CHECK_NEAR(eval_value(golden::Clow11(), q), Real(anchors::kLowDiag54_85[0]),
                   "1e-50");
        CHECK_NEAR(eval_value(golden::Clow01(), q), Real(anchors::kLowRow54_85[0]),
                   "1e-50");
        ParamPoint qq(sqrt(Real(10)) / 2, 2 * sqrt(Real(10)) / 3);
        CHECK_NEAR(eval_value(golden::Clow01(), qq), Real(anchors::kClow01_nu34_x310),
                   "1e-50");

        // regime/modulus mismatch is rejected in both directions
        CHECK_THROWS_AS(eval_value(golden::C11(), q), std::domain_error);
        CHECK_THROWS_AS(eval_value(golden::Clow11(), p), std::domain_error);

        // evaluation is a ring homomorphism
        std::mt19937_64 gen(0x5eedULL);
        for (int i = 0; i < 10; i++) {
            ellcorr::EllValue a = testutil::rand_ell(2, 2);
            ellcorr::EllValue b = testutil::rand_ell(2, 2);
            Real ea = eval_value(a, p), eb = eval_value(b, p);
            Real scale = 1 + abs(ea) + abs(eb) + abs(ea * eb);
            CHECK_NEAR(eval_value(a + b, p), ea + eb, (scale * Real("1e-45")).str(10));
            CHECK_NEAR(eval_value(a * b, p), ea * eb, (scale * Real("1e-45")).str(10));
        }

        // symbolic derivative matches a central finite difference in the
        // modulus along fixed anisotropy nu = 3/4
        {
            auto at_k = [](const Real& k) {
                return ParamPoint(sqrt(3 * k / 4), sqrt(4 * k / 3));
            };
            Real h("1e-20");
            Real k0 = Real(12) / 25;
            for (const ellcorr::EllValue& v : {golden::C11(), golden::C01()}) {
                Real fd =
                    (eval_value(v, at_k(k0 + h)) - eval_value(v, at_k(k0 - h))) / (2 * h);
                Real sym = eval_value(ellcorr::derivative_k(v), p);
                CHECK_NEAR(sym, fd, "1e-35");
            }
        }

        // disorder limit: the first row correlation approaches sqrt(k)/2
        {
            ParamPoint tiny(Real(1) / 1000, Real(1) / 1000);
            Real c = eval_value(golden::C01(), tiny);
            Real target = sqrt(tiny.k()) / 2;
            CHECK(abs(c / target - 1) < Real("1e-3"));
        }
    }

    TEST_CASE("identity verification reports")
    {
        auto rep = ellcorr::verify_thirdident(100, 20260822ULL);
        CHECK(rep.identity == "third_kind_complement_sum");
        CHECK(rep.requested == 100);
        CHECK(rep.evaluated == 100);
        CHECK(rep.skipped == 0);
        CHECK(rep.samples.size() == 100);
        CHECK(rep.max_residual < Real("1e-25"));
        CHECK(rep.median_residual <= rep.max_residual);

        auto rep2 = ellcorr::verify_pi_identity(100, 7ULL);
        CHECK(rep2.identity == "pi_quadratic_transformation");
        CHECK(rep2.requested == 100);
        CHECK(rep2.evaluated + rep2.skipped == 100);
        CHECK(rep2.evaluated >= 90);
        CHECK(rep2.max_residual < Real("1e-25"));

        // the report serializes to well-formed JSON
        nlohmann::json j = nlohmann::json::parse(rep2.to_json());
        CHECK(j["identity"] == "pi_quadratic_transformation");
        CHECK(j["evaluated"].get<int>() == rep2.evaluated);
        CHECK(j["points"].size() == (size_t)rep2.evaluated);
        CHECK(j["points"][0].contains("modulus"));
        CHECK(j["points"][0].contains("z"));
        CHECK(j["points"][0].contains("residual"));

        // the z = 0 collapse of the transformation identity is an exact
        // rational cancellation
        CHECK(ellcorr::pi_identity_zero_combination(mpq_class(3, 10)) == 0);
        CHECK(ellcorr::pi_identity_zero_combination(mpq_class(7, 9)) == 0);
        CHECK(ellcorr::pi_identity_zero_combination(mpq_class(1, 2)) == 0);

        PrecisionScope scope(65);

        // isotropic reduction of the complement-sum identity
        {
            Real k = Real(37) / 100;
            CHECK_NEAR(ell_tilde(EllKind::Pi, k, -k),
                       (ell_tilde(EllKind::K, k) + 1 / (1 + k)) / 2, "1e-55");
        }

        // the two closed forms of the nearest-neighbor row correlation agree
        // in the disordered regime ...
        std::mt19937_64 gen(0xc01ULL);
        for (int i = 0; i < 10; i++) {
            Real k = Real(15) / 100 + Real(70) / 100 * Real(udraw(gen));
            Real nu = exp(log(Real(3) / 10) + log(Real(10)) * Real(udraw(gen)));
            ParamPoint pt(sqrt(nu * k), sqrt(k / nu));
            Real a1 = pt.alpha1(), a2 = pt.alpha2();
            Real direct = (1 / nu) * sqrt(1 + nu / k) *
                          ((1 + nu * k) * ell_tilde(EllKind::Pi, k, -nu * k) -
                           ell_tilde(EllKind::K, k));
            Real factored = (a1 - 1 / a1) / (1 - a1 / a2) *
                            (ell_tilde(EllKind::K, k) -
                             (1 + a1 / a2) * ell_tilde(EllKind::Pi, k, -a1 * k));
            CHECK_NEAR(direct, factored, "1e-20");
        }
        // ... and in the ordered regime
        for (int i = 0; i < 10; i++) {
            Real kl = Real(15) / 100 + Real(70) / 100 * Real(udraw(gen));
            Real nu = exp(log(Real(3) / 10) + log(Real(10)) * Real(udraw(gen)));
            ParamPoint pt(sqrt(nu / kl), 1 / sqrt(nu * kl));
            Real a1 = pt.alpha1(), a2 = pt.alpha2();
            Real direct = sqrt(1 + nu * kl) *
                          ((1 + kl / nu) * ell_tilde(EllKind::Pi, kl, -nu * kl) -
                           (kl / nu) * ell_tilde(EllKind::K, kl));
            Real factored = (a1 - 1 / a1) / (1 / a2 - a1) *
                            (ell_tilde(EllKind::K, kl) -
                             (1 + a1 / a2) * ell_tilde(EllKind::Pi, kl, -a1 * kl));
            CHECK_NEAR(direct, factored, "1e-20");
        }
    }

    TEST_CASE("correlation oracles")
    {
        PrecisionScope scope(65);

        // Fourier coefficients of the square-root symbol, both branches
        for (int n = -2; n <= 4; n++) {
            CHECK_NEAR(ellcorr::oracle_symbol_entry(n, Real(0), Real(7) / 20),
                       Real(anchors::kSymbolLow720[n + 2]), "1e-48");
            CHECK_NEAR(ellcorr::oracle_symbol_entry(n, Real(0), Real(20) / 7),
                       Real(anchors::kSymbolHigh720[n + 2]), "1e-48");
        }

        // row and diagonal determinants at the reference disordered point
        ParamPoint p(Real(3) / 5, Real(4) / 5);
        for (int n = 1; n <= 5; n++) {
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, p), Real(anchors::kRow35_45[n - 1]),
                       "1e-45");
            CHECK_NEAR(ellcorr::oracle_diag_correlation(n, p),
                       Real(anchors::kDiag35_45[n - 1]), "1e-45");
        }
        // the dual correlations are the correlations of the dual point
        ParamPoint pd(Real(5) / 4, Real(5) / 3);
        for (int n = 1; n <= 5; n++) {
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, pd),
                       Real(anchors::kDualRow35_45[n - 1]), "1e-45");
            CHECK_NEAR(ellcorr::oracle_diag_correlation(n, pd),
                       Real(anchors::kDualDiag35_45[n - 1]), "1e-45");
        }
        // swapped orientation
        ParamPoint psw(Real(4) / 5, Real(3) / 5);
        ParamPoint pswd(Real(5) / 3, Real(5) / 4);
        for (int n = 1; n <= 2; n++) {
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, psw),
                       Real(anchors::kRowSwap35_45[n - 1]), "1e-45");
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, pswd),
                       Real(anchors::kDualRowSwap35_45[n - 1]), "1e-45");
        }

        // a second disordered point with stronger anisotropy
        ParamPoint p2(Real(7) / 20, Real(6) / 5);
        for (int n = 1; n <= 3; n++) {
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, p2),
                       Real(anchors::kRow720_65[n - 1]), "1e-45");
            CHECK_NEAR(ellcorr::oracle_diag_correlation(n, p2),
                       Real(anchors::kDiag720_65[n - 1]), "1e-45");
        }

        // an ordered point: the same determinant formulas hold
        ParamPoint plow(Real(5) / 4, Real(8) / 5);
        for (int n = 1; n <= 3; n++) {
            CHECK_NEAR(ellcorr::oracle_row_correlation(n, plow),
                       Real(anchors::kLowRow54_85[n - 1]), "1e-45");
            CHECK_NEAR(ellcorr::oracle_diag_correlation(n, plow),
                       Real(anchors::kLowDiag54_85[n - 1]), "1e-45");
        }

        // degenerate sizes and domain restrictions
        CHECK(ellcorr::oracle_row_correlation(0, p) == 1);
        CHECK(ellcorr::oracle_diag_correlation(0, p) == 1);
        CHECK_THROWS_AS(ellcorr::oracle_symbol_entry(0, Real(0), Real(1)),
                        std::domain_error);
        CHECK_THROWS_AS(ellcorr::oracle_symbol_entry(0, Real(-1) / 10, Real(1) / 2),
                        std::domain_error);
        CHECK_THROWS_AS(ellcorr::oracle_symbol_entry(0, Real(1), Real(1) / 2),
                        std::domain_error);
        CHECK_THROWS_AS(ellcorr::oracle_symbol_entry(0, Real(0), Real(0)),
                        std::domain_error);
        CHECK_THROWS_AS(ellcorr::oracle_row_correlation(-1, p), std::domain_error);
        CHECK_THROWS_AS(ellcorr::oracle_row_correlation(13, p), std::domain_error);

        // finite-width transfer-matrix sanity check at double precision
        {
            double exact1 = std::stod(anchors::kRow35_45[0]);
            double exact2 = std::stod(anchors::kRow35_45[1]);
            double t12_1 = ellcorr::transfer_matrix_row_correlation(12, 1, 0.6, 0.8);
            double t12_2 = ellcorr::transfer_matrix_row_correlation(12, 2, 0.6, 0.8);
            CHECK(std::abs(t12_1 - exact1) < 2e-3);
            CHECK(std::abs(t12_2 - exact2) < 2e-3);
            double t6_1 = ellcorr::transfer_matrix_row_correlation(6, 1, 0.6, 0.8);
            CHECK(std::abs(t6_1 - exact1) >= std::abs(t12_1 - exact1));
            CHECK_THROWS_AS(ellcorr::transfer_matrix_row_correlation(13, 1, 0.6, 0.8),
                            std::domain_error);
            CHECK_THROWS_AS(ellcorr::transfer_matrix_row_correlation(1, 1, 0.6, 0.8),
                            std::domain_error);
            CHECK_THROWS_AS(ellcorr::transfer_matrix_row_correlation(12, -1, 0.6, 0.8),
                            std::domain_error);
        }
    }

    TEST_CASE("precision configuration")
    {
        PrecisionConfig bad;
        bad.working_digits = 20;
        bad.target_tolerance = Real("1e-30");
        CHECK_THROWS_AS(bad.validate(), std::domain_error);

        PrecisionConfig shallow;
        shallow.working_digits = 9;
        shallow.target_tolerance = Real("1e-1");
        CHECK_THROWS_AS(shallow.validate(), std::domain_error);

        PrecisionConfig nonpositive;
        nonpositive.target_tolerance = Real(0);
        CHECK_THROWS_AS(nonpositive.validate(), std::domain_error);

        CHECK_NOTHROW(PrecisionConfig::kernel().validate());
        CHECK_NOTHROW(PrecisionConfig::physics().validate());
        CHECK(PrecisionConfig::kernel().guarded_digits() ==
              PrecisionConfig::kernel().working_digits + 15);

        unsigned before = Real::default_precision();
        {
            PrecisionScope s(40);
            CHECK(Real::default_precision() == 40);
            {
                PrecisionScope t(70);
                CHECK(Real::default_precision() == 70);
            }
            CHECK(Real::default_precision() == 40);
        }
        CHECK(Real::default_precision() == before);
        CHECK_THROWS_AS(PrecisionScope(5), std::domain_error);
    }
}
