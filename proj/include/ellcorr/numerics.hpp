#pragma once
/** @file
 *  @brief Configurable-precision numerics: Carlson symmetric integrals, the
 *         normalized complete elliptic integrals, evaluation of symbolic
 *         correlation values at parameter points, identity verification, and
 *         independent Toeplitz-determinant correlation oracles.
 */

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include "ellcorr/ellvalue.hpp"

namespace ellcorr {

/// Arbitrary-precision real number. New values take the ambient default
/// precision installed by PrecisionScope.
using Real = boost::multiprecision::mpfr_float;

/// RAII guard that installs a default decimal precision for newly created
/// Real values and restores the previous one on destruction.
///
/// The default precision is a process-wide setting: concurrent threads must
/// not install different precisions, so scopes are created before any
/// worker threads are spawned.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned prev_;
};

/// Precision and tolerance settings for numeric verification runs.
struct PrecisionConfig {
    int working_digits = 50;
    Real target_tolerance{"1e-12"};

    /// Tight setting for exercising the integral kernel itself.
    static PrecisionConfig kernel();
    /// Default setting for physics cross-checks.
    static PrecisionConfig physics();

    /// The working precision must support the requested tolerance
    /// (at least two digits of headroom per tolerance digit).
    void validate() const;
    /// Working digits plus the internal rounding guard.
    int guarded_digits() const;
};

/// Carlson degenerate integral R_C(x, y); y < 0 is handled as a Cauchy
/// principal value.
Real carlson_rc(const Real& x, const Real& y);
/// Carlson symmetric integral of the first kind R_F(x, y, z).
Real carlson_rf(const Real& x, const Real& y, const Real& z);
/// Carlson degenerate integral of the third kind R_D(x, y, z).
Real carlson_rd(const Real& x, const Real& y, const Real& z);
/// Carlson symmetric integral of the third kind R_J(x, y, z, p); p < 0 is
/// handled as a Cauchy principal value.
Real carlson_rj(const Real& x, const Real& y, const Real& z, const Real& p);

enum class EllKind { K, E, Pi };

/// Normalized complete elliptic integral K̃(k) or Ẽ(k): the classical
/// integral rescaled by 2/π so that the value at k = 0 is one.
Real ell_tilde(EllKind kind, const Real& k);
/// Normalized complete elliptic integral; the third kind takes the
/// characteristic n (n < 1) as well.
Real ell_tilde(EllKind kind, const Real& k, const Real& n);
/// Independent arithmetic-geometric-mean route to K̃(k).
Real ktilde_agm(const Real& k);

/// A positive parameter point (s_h, s_v) with its derived quantities.
class ParamPoint {
public:
    ParamPoint(Real s_h, Real s_v);

    const Real& s_h() const { return sh_; }
    const Real& s_v() const { return sv_; }

    Real k() const;       ///< modulus combination s_h·s_v
    Real k_dual() const;  ///< reciprocal modulus 1/(s_h·s_v)
    Real nu() const;      ///< anisotropy s_h/s_v
    Real u_h() const;     ///< positive root of 1 + s_h²
    Real u_v() const;     ///< positive root of 1 + s_v²
    Real z_h() const;     ///< (u_h − 1)/s_h
    Real z_v() const;     ///< (u_v − 1)/s_v
    Real alpha1() const;  ///< z_h (1 − z_v)/(1 + z_v)
    Real alpha2() const;  ///< (1/z_h)(1 − z_v)/(1 + z_v)
    Regime regime() const;

private:
    Real sh_, sv_;
};

/// Evaluate a rational coefficient at a parameter point.
Real eval_ratfunc(const RatFunc& f, const ParamPoint& p);
/// Evaluate a coefficient-field element with u_v, u_h as positive roots.
Real eval_field(const FieldElem& a, const ParamPoint& p);
/// Evaluate a symbolic value; the elliptic symbols resolve according to the
/// value's regime and basis tags, and the resolved modulus must lie inside
/// the unit interval.
Real eval_value(const EllValue& a, const ParamPoint& p);

/// One sampled point of a verification run.
struct VerifySample {
    std::vector<std::pair<std::string, Real>> point;
    Real residual{0};
};

/// Outcome of a sampling verification.
struct VerifyReport {
    std::string identity;
    int requested = 0;
    int evaluated = 0;
    int skipped = 0;
    Real max_residual{0};
    Real median_residual{0};
    std::vector<VerifySample> samples;

    std::string to_json() const;
};

/// Verify the quadratic-transformation identity for Π̃ on a conservative
/// real sampling domain (0 < modulus < 1/2, |z| < 0.9·modulus²).
VerifyReport verify_pi_identity(int samples, unsigned long seed,
                                const PrecisionConfig& cfg = PrecisionConfig());
/// Verify Π̃(−νk, k) + Π̃(−k/ν, k) = K̃(k) + [(1+νk)(1+k/ν)]^{−1/2}.
VerifyReport verify_thirdident(int samples, unsigned long seed,
                               const PrecisionConfig& cfg = PrecisionConfig());

/// Exact coefficient combination of the Π̃ transformation identity at z = 0,
/// where both third-kind values collapse to K̃; vanishes identically.
mpq_class pi_identity_zero_combination(const mpq_class& k);

/// Fourier coefficient of the square-root symbol with parameters
/// (a1, a2), computed by trapezoid quadrature with doubling; a2 > 1 is
/// reduced to the winding-corrected form.
Real oracle_symbol_entry(int n, const Real& a1, const Real& a2);
/// Row correlation oracle: n×n Toeplitz determinant of the symbol at the
/// point's (α₁, α₂).
Real oracle_row_correlation(int n, const ParamPoint& p);
/// Diagonal correlation oracle: symbol parameters (0, 1/(s_h·s_v)).
Real oracle_diag_correlation(int n, const ParamPoint& p);

/// Finite-width strip sanity check: same-row spin correlation at the given
/// separation, from the leading transfer-matrix eigenvector. Double
/// precision, width ≤ 12; approximates the exact row correlation with a
/// finite-width error, it is not an acceptance-grade oracle.
double transfer_matrix_row_correlation(int width, int separation, double s_h, double s_v);

}  // namespace ellcorr
