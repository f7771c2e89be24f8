/** @file
 *  @brief Implementation of the configurable-precision numeric kernel and the
 *         quadrature-based correlation oracles.
 */

#include "ellcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace ellcorr {

namespace {

int ambient_digits() { return static_cast<int>(Real::default_precision()); }

Real pi_ambient()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const mpz_class& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

/// 10^{-e} at ambient precision.
Real neg_pow10(int e) { return 1 / pow(Real(10), e); }

/// Series cutoff for the Carlson duplication loops: the residual quintic
/// series then contributes below the ambient rounding level.
Real carlson_errtol()
{
    return pow(Real(10), Real(-(ambient_digits() + 2) / 6.0));
}

constexpr int kMaxDuplications = 10000;

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits) : prev_(Real::default_precision())
{
    if (digits < 10) throw std::domain_error("PrecisionScope: fewer than 10 digits requested");
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(prev_); }

PrecisionConfig PrecisionConfig::kernel()
{
    PrecisionConfig cfg;
    cfg.working_digits = 64;
    cfg.target_tolerance = Real("1e-30");
    return cfg;
}

PrecisionConfig PrecisionConfig::physics() { return PrecisionConfig(); }

void PrecisionConfig::validate() const
{
    if (working_digits < 10) throw std::domain_error("PrecisionConfig: too few working digits");
    if (!(target_tolerance > 0))
        throw std::domain_error("PrecisionConfig: tolerance must be positive");
    Real lg = log10(target_tolerance);
    double digits_needed = -2 * lg.convert_to<double>();
    if (working_digits < digits_needed)
        throw std::domain_error("PrecisionConfig: working digits do not support the tolerance");
}

int PrecisionConfig::guarded_digits() const { return working_digits + 15; }

Real carlson_rc(const Real& x, const Real& y)
{
    if (x < 0) throw std::domain_error("carlson_rc: negative first argument");
    if (y == 0) throw std::domain_error("carlson_rc: zero second argument");
    Real xt, yt, w;
    if (y > 0) {
        xt = x;
        yt = y;
        w = 1;
    } else {
        // Cauchy principal value via the reflection to positive arguments
        xt = x - y;
        yt = -y;
        w = sqrt(x / xt);
    }
    const Real errtol = carlson_errtol();
    Real ave, s;
    for (int it = 0;; it++) {
        if (it > kMaxDuplications) throw std::runtime_error("carlson_rc: no convergence");
        Real alamb = 2 * sqrt(xt) * sqrt(yt) + yt;
        xt = (xt + alamb) / 4;
        yt = (yt + alamb) / 4;
        ave = (xt + 2 * yt) / 3;
        s = (yt - ave) / ave;
        if (abs(s) < errtol) break;
    }
    Real series = 1 + s * s * (Real(3) / 10 + s * (Real(1) / 7 + s * (Real(3) / 8 + s * Real(9) / 22)));
    return w * series / sqrt(ave);
}

Real carlson_rf(const Real& x, const Real& y, const Real& z)
{
    if (x < 0 || y < 0 || z < 0) throw std::domain_error("carlson_rf: negative argument");
    if ((x == 0) + (y == 0) + (z == 0) > 1)
        throw std::domain_error("carlson_rf: more than one vanishing argument");
    Real xt = x, yt = y, zt = z;
    const Real errtol = carlson_errtol();
    Real ave, delx, dely, delz;
    for (int it = 0;; it++) {
        if (it > kMaxDuplications) throw std::runtime_error("carlson_rf: no convergence");
        Real sx = sqrt(xt), sy = sqrt(yt), sz = sqrt(zt);
        Real alamb = sx * (sy + sz) + sy * sz;
        xt = (xt + alamb) / 4;
        yt = (yt + alamb) / 4;
        zt = (zt + alamb) / 4;
        ave = (xt + yt + zt) / 3;
        delx = (ave - xt) / ave;
        dely = (ave - yt) / ave;
        delz = (ave - zt) / ave;
        if (std::max({Real(abs(delx)), Real(abs(dely)), Real(abs(delz))}) < errtol) break;
    }
    Real e2 = delx * dely - delz * delz;
    Real e3 = delx * dely * delz;
    return (1 + (e2 / 24 - Real(1) / 10 - 3 * e3 / 44) * e2 + e3 / 14) / sqrt(ave);
}

Real carlson_rd(const Real& x, const Real& y, const Real& z)
{
    if (x < 0 || y < 0) throw std::domain_error("carlson_rd: negative argument");
    if (x == 0 && y == 0) throw std::domain_error("carlson_rd: two vanishing arguments");
    if (!(z > 0)) throw std::domain_error("carlson_rd: third argument must be positive");
    Real xt = x, yt = y, zt = z;
    Real sum = 0, fac = 1;
    const Real errtol = carlson_errtol();
    Real ave, delx, dely, delz;
    for (int it = 0;; it++) {
        if (it > kMaxDuplications) throw std::runtime_error("carlson_rd: no convergence");
        Real sx = sqrt(xt), sy = sqrt(yt), sz = sqrt(zt);
        Real alamb = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + alamb));
        fac /= 4;
        xt = (xt + alamb) / 4;
        yt = (yt + alamb) / 4;
        zt = (zt + alamb) / 4;
        ave = (xt + yt + 3 * zt) / 5;
        delx = (ave - xt) / ave;
        dely = (ave - yt) / ave;
        delz = (ave - zt) / ave;
        if (std::max({Real(abs(delx)), Real(abs(dely)), Real(abs(delz))}) < errtol) break;
    }
    Real ea = delx * dely;
    Real eb = delz * delz;
    Real ec = ea - eb;
    Real ed = ea - 6 * eb;
    Real ee = ed + ec + ec;
    Real series = 1 + ed * (-Real(3) / 14 + Real(9) / 88 * ed - Real(9) / 52 * delz * ee) +
                  delz * (Real(1) / 6 * ee + delz * (-Real(9) / 22 * ec + delz * Real(3) / 26 * ea));
    return 3 * sum + fac * series / (ave * sqrt(ave));
}

Real carlson_rj(const Real& x, const Real& y, const Real& z, const Real& p)
{
    if (x < 0 || y < 0 || z < 0) throw std::domain_error("carlson_rj: negative argument");
    if ((x == 0) + (y == 0) + (z == 0) > 1)
        throw std::domain_error("carlson_rj: more than one vanishing argument");
    if (p == 0) throw std::domain_error("carlson_rj: zero fourth argument");

    Real xt, yt, zt, pt, a, b, rcx;
    bool principal = p < 0;
    if (principal) {
        // shift to a positive fourth argument; the correction terms reuse
        // the duplication-invariant first-kind integral
        xt = std::min({x, y, z});
        zt = std::max({x, y, z});
        yt = x + y + z - xt - zt;
        a = 1 / (yt - p);
        b = a * (zt - yt) * (yt - xt);
        pt = yt + b;
        rcx = carlson_rc(xt * zt / yt, p * pt / yt);
    } else {
        xt = x;
        yt = y;
        zt = z;
        pt = p;
    }

    Real sum = 0, fac = 1;
    const Real errtol = carlson_errtol();
    Real ave, delx, dely, delz, delp;
    for (int it = 0;; it++) {
        if (it > kMaxDuplications) throw std::runtime_error("carlson_rj: no convergence");
        Real sx = sqrt(xt), sy = sqrt(yt), sz = sqrt(zt);
        Real alamb = sx * (sy + sz) + sy * sz;
        Real alpha = pt * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        Real beta = pt * (pt + alamb) * (pt + alamb);
        sum += fac * carlson_rc(alpha, beta);
        fac /= 4;
        xt = (xt + alamb) / 4;
        yt = (yt + alamb) / 4;
        zt = (zt + alamb) / 4;
        pt = (pt + alamb) / 4;
        ave = (xt + yt + zt + 2 * pt) / 5;
        delx = (ave - xt) / ave;
        dely = (ave - yt) / ave;
        delz = (ave - zt) / ave;
        delp = (ave - pt) / ave;
        if (std::max({Real(abs(delx)), Real(abs(dely)), Real(abs(delz)), Real(abs(delp))}) < errtol) break;
    }
    Real ea = delx * (dely + delz) + dely * delz;
    Real eb = delx * dely * delz;
    Real ec = delp * delp;
    Real ed = ea - 3 * ec;
    Real ee = eb + 2 * delp * (ea - ec);
    Real series = 1 + ed * (-Real(3) / 14 + Real(9) / 88 * ed - Real(9) / 52 * ee) +
                  eb * (Real(1) / 6 + delp * (-Real(3) / 11 + delp * Real(3) / 26)) +
                  delp * ea * (Real(1) / 3 - delp * Real(3) / 22) - Real(1) / 3 * delp * ec;
    Real rj = 3 * sum + fac * series / (ave * sqrt(ave));
    if (principal) rj = a * (b * rj + 3 * (rcx - carlson_rf(x, y, z)));
    return rj;
}

Real ell_tilde(EllKind kind, const Real& k)
{
    if (kind == EllKind::Pi)
        throw std::domain_error("ell_tilde: the third kind requires the characteristic");
    if (k < 0 || k >= 1) throw std::domain_error("ell_tilde: modulus outside [0, 1)");
    Real kc2 = 1 - k * k;
    Real rf = carlson_rf(Real(0), kc2, Real(1));
    Real twopi = 2 / pi_ambient();
    if (kind == EllKind::K) return twopi * rf;
    return twopi * (rf - k * k / 3 * carlson_rd(Real(0), kc2, Real(1)));
}

Real ell_tilde(EllKind kind, const Real& k, const Real& n)
{
    if (kind != EllKind::Pi) return ell_tilde(kind, k);
    if (k < 0 || k >= 1) throw std::domain_error("ell_tilde: modulus outside [0, 1)");
    if (!(n < 1)) throw std::domain_error("ell_tilde: characteristic must be below one");
    Real kc2 = 1 - k * k;
    Real rf = carlson_rf(Real(0), kc2, Real(1));
    if (n == 0) return 2 / pi_ambient() * rf;
    Real rj = carlson_rj(Real(0), kc2, Real(1), 1 - n);
    return 2 / pi_ambient() * (rf + n / 3 * rj);
}

Real ktilde_agm(const Real& k)
{
    if (k < 0 || k >= 1) throw std::domain_error("ktilde_agm: modulus outside [0, 1)");
    Real a = 1, b = sqrt(1 - k * k);
    // converge to a couple of digits inside the ambient precision: the
    // remaining error is quadratically smaller, while the last ulps of
    // |a - b| never fall below rounding noise
    const Real tol = neg_pow10(ambient_digits() > 4 ? ambient_digits() - 2 : 2);
    for (int it = 0; it < 1000; it++) {
        if (abs(a - b) < tol) return 1 / a;
        Real am = (a + b) / 2;
        b = sqrt(a * b);
        a = am;
    }
    throw std::runtime_error("ktilde_agm: no convergence");
}

ParamPoint::ParamPoint(Real s_h, Real s_v) : sh_(std::move(s_h)), sv_(std::move(s_v))
{
    if (!(sh_ > 0) || !(sv_ > 0))
        throw std::domain_error("ParamPoint: parameters must be positive");
    if (sh_ * sv_ == 1) throw std::domain_error("ParamPoint: critical point s_h*s_v = 1");
}

Real ParamPoint::k() const { return sh_ * sv_; }
Real ParamPoint::k_dual() const { return 1 / (sh_ * sv_); }
Real ParamPoint::nu() const { return sh_ / sv_; }
Real ParamPoint::u_h() const { return sqrt(1 + sh_ * sh_); }
Real ParamPoint::u_v() const { return sqrt(1 + sv_ * sv_); }
Real ParamPoint::z_h() const { return (u_h() - 1) / sh_; }
Real ParamPoint::z_v() const { return (u_v() - 1) / sv_; }
Real ParamPoint::alpha1() const { return z_h() * (1 - z_v()) / (1 + z_v()); }
Real ParamPoint::alpha2() const { return (1 - z_v()) / (1 + z_v()) / z_h(); }
Regime ParamPoint::regime() const { return k() < 1 ? Regime::High : Regime::Low; }

namespace {

Real eval_poly(const IntPoly& f, const Real& sh, const Real& sv)
{
    if (f.is_zero()) return Real(0);
    int maxh = 0, maxv = 0;
    for (const auto& t : f.terms()) {
        maxh = std::max(maxh, t.dh);
        maxv = std::max(maxv, t.dv);
    }
    std::vector<Real> ph(maxh + 1), pv(maxv + 1);
    ph[0] = 1;
    for (int i = 1; i <= maxh; i++) ph[i] = ph[i - 1] * sh;
    pv[0] = 1;
    for (int i = 1; i <= maxv; i++) pv[i] = pv[i - 1] * sv;
    Real out(0);
    for (const auto& t : f.terms()) out += to_real(t.c) * ph[t.dh] * pv[t.dv];
    return out;
}

}  // namespace

Real eval_ratfunc(const RatFunc& f, const ParamPoint& p)
{
    Real den = eval_poly(f.den(), p.s_h(), p.s_v());
    if (den == 0)
        throw std::domain_error("eval_ratfunc: denominator vanishes at the parameter point");
    return eval_poly(f.num(), p.s_h(), p.s_v()) / den;
}

Real eval_field(const FieldElem& a, const ParamPoint& p)
{
    Real out(0);
    if (!a.c00().is_zero()) out += eval_ratfunc(a.c00(), p);
    if (!a.c10().is_zero()) out += eval_ratfunc(a.c10(), p) * p.u_v();
    if (!a.c01().is_zero()) out += eval_ratfunc(a.c01(), p) * p.u_h();
    if (!a.c11().is_zero()) out += eval_ratfunc(a.c11(), p) * p.u_v() * p.u_h();
    return out;
}

Real eval_value(const EllValue& a, const ParamPoint& p)
{
    Real out(0);
    if (a.is_zero()) return out;
    int maxi = 0, maxj = 0, maxl = 0;
    for (const auto& [m, c] : a.terms()) {
        maxi = std::max(maxi, m.i);
        maxj = std::max(maxj, m.j);
        maxl = std::max(maxl, m.l);
    }
    std::vector<Real> pe(maxi + 1), pk(maxj + 1), pp(maxl + 1);
    pe[0] = pk[0] = pp[0] = 1;
    if (maxi + maxj + maxl > 0) {
        Real m = a.regime() == Regime::High ? p.k() : p.k_dual();
        if (!(m < 1))
            throw std::domain_error("eval_value: resolved modulus is not inside the unit interval");
        if (maxi > 0) {
            Real base = ell_tilde(EllKind::E, m);
            for (int i = 1; i <= maxi; i++) pe[i] = pe[i - 1] * base;
        }
        if (maxj > 0) {
            Real base = ell_tilde(EllKind::K, m);
            for (int j = 1; j <= maxj; j++) pk[j] = pk[j - 1] * base;
        }
        if (maxl > 0) {
            Real n;
            if (a.regime() == Regime::High)
                n = a.basis() == Basis::PI ? -p.s_h() * p.s_h() : -p.s_v() * p.s_v();
            else
                n = a.basis() == Basis::PI ? -1 / (p.s_v() * p.s_v()) : -1 / (p.s_h() * p.s_h());
            Real base = ell_tilde(EllKind::Pi, m, n);
            for (int l = 1; l <= maxl; l++) pp[l] = pp[l - 1] * base;
        }
    }
    for (const auto& [m, c] : a.terms())
        out += eval_field(c, p) * pe[m.i] * pk[m.j] * pp[m.l];
    return out;
}

std::string VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["requested"] = requested;
    j["evaluated"] = evaluated;
    j["skipped"] = skipped;
    j["max_residual"] = max_residual.str(25);
    j["median_residual"] = median_residual.str(25);
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
        nlohmann::ordered_json pt;
        for (const auto& [name, v] : s.point) pt[name] = v.str(25);
        pt["residual"] = s.residual.str(25);
        pts.push_back(std::move(pt));
    }
    j["points"] = std::move(pts);
    return j.dump(2);
}

namespace {

/// Uniform draw in [0, 1) with reproducible cross-platform semantics.
double unit_draw(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

void finalize_report(VerifyReport& rep)
{
    std::vector<Real> res;
    res.reserve(rep.samples.size());
    for (const auto& s : rep.samples) res.push_back(s.residual);
    std::sort(res.begin(), res.end());
    if (!res.empty()) {
        rep.max_residual = res.back();
        std::size_t n = res.size();
        rep.median_residual =
            n % 2 ? res[n / 2] : (res[n / 2 - 1] + res[n / 2]) / 2;
    }
}

}  // namespace

VerifyReport verify_pi_identity(int samples, unsigned long seed, const PrecisionConfig& cfg)
{
    cfg.validate();
    PrecisionScope scope(cfg.guarded_digits());
    VerifyReport rep;
    rep.identity = "pi_quadratic_transformation";
    rep.requested = samples;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; i++) {
        Real k = Real(0.05) + Real(0.45) * Real(unit_draw(rng));
        Real z = Real(0.9) * k * k * Real(2 * unit_draw(rng) - 1);
        Real k2 = k * k;
        Real dn = (z * z - k2) * (z * z - k2);
        if (dn == 0 || !(z < 1)) {
            rep.skipped++;
            continue;
        }
        Real R = 4 * k2 * z * (z - 1) * (z - k2) / dn;
        if (!(R < 1)) {
            rep.skipped++;
            continue;
        }
        Real A = 4 * (z - 1) * (z * z - k2) * (z - k2);
        Real B = (z * z + k2 - 2 * z) * (z * z + k2 - 2 * k2 * z);
        Real C = -(z * z - k2) * (z * z - 2 * z - 2 * k2 * z + 3 * k2);
        Real res = A * ell_tilde(EllKind::Pi, k, z) + B * ell_tilde(EllKind::Pi, k, R) +
                   C * ell_tilde(EllKind::K, k);
        VerifySample s;
        s.point = {{"modulus", k}, {"z", z}};
        s.residual = abs(res);
        rep.samples.push_back(std::move(s));
        rep.evaluated++;
    }
    finalize_report(rep);
    return rep;
}

VerifyReport verify_thirdident(int samples, unsigned long seed, const PrecisionConfig& cfg)
{
    cfg.validate();
    PrecisionScope scope(cfg.guarded_digits());
    VerifyReport rep;
    rep.identity = "third_kind_complement_sum";
    rep.requested = samples;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; i++) {
        Real k = Real(0.02) + Real(0.96) * Real(unit_draw(rng));
        Real nu = exp(log(Real(1) / 5) + log(Real(25)) * Real(unit_draw(rng)));
        Real lhs = ell_tilde(EllKind::Pi, k, -nu * k) + ell_tilde(EllKind::Pi, k, -k / nu);
        Real rhs = ell_tilde(EllKind::K, k) + 1 / sqrt((1 + nu * k) * (1 + k / nu));
        VerifySample s;
        s.point = {{"modulus", k}, {"nu", nu}};
        s.residual = abs(lhs - rhs);
        rep.samples.push_back(std::move(s));
        rep.evaluated++;
    }
    finalize_report(rep);
    return rep;
}

mpq_class pi_identity_zero_combination(const mpq_class& k)
{
    mpq_class z(0);
    mpq_class k2 = k * k;
    mpq_class A = 4 * (z - 1) * (z * z - k2) * (z - k2);
    mpq_class B = (z * z + k2 - 2 * z) * (z * z + k2 - 2 * k2 * z);
    mpq_class C = -(z * z - k2) * (z * z - 2 * z - 2 * k2 * z + 3 * k2);
    // at z = 0 both third-kind values degenerate to the first kind, so the
    // identity collapses to this exact coefficient sum
    mpq_class out = A + B + C;
    out.canonicalize();
    return out;
}

namespace {

struct Cx {
    Real re, im;
};

Cx operator*(const Cx& a, const Cx& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cx operator/(const Cx& a, const Cx& b)
{
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

/// Principal square root for arguments in the right half-plane.
Cx csqrt_rhp(const Cx& w)
{
    Real mod = sqrt(w.re * w.re + w.im * w.im);
    Real u = sqrt((mod + w.re) / 2);
    return {u, w.im / (2 * u)};
}

}  // namespace

Real oracle_symbol_entry(int n, const Real& a1, const Real& a2)
{
    if (a1 < 0 || a1 >= 1)
        throw std::domain_error("oracle_symbol_entry: first parameter outside [0, 1)");
    if (!(a2 > 0)) throw std::domain_error("oracle_symbol_entry: second parameter not positive");
    if (a2 == 1) throw std::domain_error("oracle_symbol_entry: critical second parameter");

    const bool winding = a2 > 1;
    const Real b = winding ? Real(1 / a2) : a2;
    const int m = winding ? n + 1 : n;
    const Real twopi = 2 * pi_ambient();
    const Real tol = neg_pow10(ambient_digits() - 5);

    auto integrand = [&](const Real& theta, Real& out_re, Real& out_im) {
        Real c = cos(theta), s = sin(theta);
        Cx e{c, s}, ec{c, -s};
        Cx num, den;
        if (winding) {
            num = csqrt_rhp({1 - a1 * e.re, -a1 * e.im}) * csqrt_rhp({1 - b * e.re, -b * e.im});
            den = csqrt_rhp({1 - a1 * ec.re, -a1 * ec.im}) * csqrt_rhp({1 - b * ec.re, -b * ec.im});
        } else {
            num = csqrt_rhp({1 - a1 * e.re, -a1 * e.im}) * csqrt_rhp({1 - b * ec.re, -b * ec.im});
            den = csqrt_rhp({1 - a1 * ec.re, -a1 * ec.im}) * csqrt_rhp({1 - b * e.re, -b * e.im});
        }
        Real mt = m * theta;
        Cx val = Cx{cos(mt), -sin(mt)} * (num / den);
        out_re = val.re;
        out_im = val.im;
    };

    long pts = 64;
    Real sum_re(0), sum_im(0);
    for (long j = 0; j < pts; j++) {
        Real re, im;
        integrand(twopi * j / pts, re, im);
        sum_re += re;
        sum_im += im;
    }
    Real prev_re = sum_re / pts, prev_im = sum_im / pts;
    Real est(0);
    while (pts < (1L << 20)) {
        pts *= 2;
        for (long j = 1; j < pts; j += 2) {
            Real re, im;
            integrand(twopi * j / pts, re, im);
            sum_re += re;
            sum_im += im;
        }
        Real cur_re = sum_re / pts, cur_im = sum_im / pts;
        Real dre = cur_re - prev_re, dim = cur_im - prev_im;
        est = sqrt(dre * dre + dim * dim);
        if (est < tol) return winding ? Real(-cur_re) : cur_re;
        prev_re = cur_re;
        prev_im = cur_im;
    }
    throw std::runtime_error("oracle_symbol_entry: quadrature did not converge (estimated error " +
                             est.str(5) + ")");
}

namespace {

Real toeplitz_det(const std::vector<Real>& entries, int n)
{
    // entries[m + n - 1] holds the symbol coefficient of index m
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) a[i][j] = entries[i - j + n - 1];
    Real det(1);
    for (int col = 0; col < n; col++) {
        int piv = col;
        for (int r = col + 1; r < n; r++)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0) return Real(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; r++) {
            Real f = a[r][col] / a[col][col];
            for (int c2 = col; c2 < n; c2++) a[r][c2] -= f * a[col][c2];
        }
    }
    return det;
}

Real toeplitz_correlation(int n, const Real& a1, const Real& a2)
{
    if (n < 0) throw std::domain_error("oracle: negative separation");
    if (n == 0) return Real(1);
    if (n > 12) throw std::domain_error("oracle: Toeplitz dimension limited to 12");
    std::vector<Real> entries(2 * n - 1);
    for (int m = -(n - 1); m <= n - 1; m++)
        entries[m + n - 1] = oracle_symbol_entry(m, a1, a2);
    return toeplitz_det(entries, n);
}

}  // namespace

Real oracle_row_correlation(int n, const ParamPoint& p)
{
    return toeplitz_correlation(n, p.alpha1(), p.alpha2());
}

Real oracle_diag_correlation(int n, const ParamPoint& p)
{
    return toeplitz_correlation(n, Real(0), p.k_dual());
}

double transfer_matrix_row_correlation(int width, int separation, double s_h, double s_v)
{
    if (width < 2 || width > 12)
        throw std::domain_error("transfer_matrix: width must be between 2 and 12");
    if (separation < 0) throw std::domain_error("transfer_matrix: negative separation");
    if (!(s_h > 0) || !(s_v > 0))
        throw std::domain_error("transfer_matrix: parameters must be positive");

    const std::size_t dim = std::size_t(1) << width;
    const double kh = std::asinh(s_h) / 2, kv = std::asinh(s_v) / 2;
    const double ah = std::exp(kh), bh = std::exp(-kh);

    // square root of the diagonal intra-column bond factor, ring of `width` sites
    std::vector<double> dhalf(dim);
    for (std::size_t s = 0; s < dim; s++) {
        int e = 0;
        for (int i = 0; i < width; i++) {
            int si = (s >> i) & 1, sj = (s >> ((i + 1) % width)) & 1;
            e += si == sj ? 1 : -1;
        }
        dhalf[s] = std::exp(0.5 * kv * e);
    }

    auto matvec = [&](std::vector<double>& v) {
        for (std::size_t s = 0; s < dim; s++) v[s] *= dhalf[s];
        for (int i = 0; i < width; i++) {
            const std::size_t bit = std::size_t(1) << i;
            for (std::size_t s = 0; s < dim; s++) {
                if (s & bit) continue;
                double lo = v[s], hi = v[s | bit];
                v[s] = ah * lo + bh * hi;
                v[s | bit] = bh * lo + ah * hi;
            }
        }
        for (std::size_t s = 0; s < dim; s++) v[s] *= dhalf[s];
    };
    auto norm = [&](const std::vector<double>& v) {
        double t = 0;
        for (double x : v) t += x * x;
        return std::sqrt(t);
    };

    std::vector<double> psi(dim, 1.0 / std::sqrt(double(dim)));
    double lam = 0;
    for (int it = 0; it < 200000; it++) {
        std::vector<double> w = psi;
        matvec(w);
        double wn = norm(w);
        for (std::size_t s = 0; s < dim; s++) w[s] /= wn;
        // eigenpair residual of the normalized iterate
        std::vector<double> chk = w;
        matvec(chk);
        double ray = 0;
        for (std::size_t s = 0; s < dim; s++) ray += w[s] * chk[s];
        double res = 0;
        for (std::size_t s = 0; s < dim; s++) {
            double d = chk[s] - ray * w[s];
            res += d * d;
        }
        psi = std::move(w);
        lam = ray;
        if (std::sqrt(res) < 1e-13 * ray) break;
    }

    std::vector<double> u(dim);
    for (std::size_t s = 0; s < dim; s++) u[s] = (s & 1 ? 1.0 : -1.0) * psi[s];
    std::vector<double> w = u;
    for (int step = 0; step < separation; step++) {
        matvec(w);
        for (std::size_t s = 0; s < dim; s++) w[s] /= lam;
    }
    double corr = 0;
    for (std::size_t s = 0; s < dim; s++) corr += w[s] * u[s];
    return corr;
}

}  // namespace ellcorr
