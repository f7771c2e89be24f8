/**
 * @file intpoly.cpp
 * @brief IntPoly arithmetic and the bivariate gcd engine (content splitting,
 *        modular triviality probe, primitive pseudo-remainder sequences).
 */
#include "ellcorr/intpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ellcorr {

namespace {

bool term_less_asc(const PolyTerm& a, const PolyTerm& b)
{
    // ascending graded-lex (we sort ascending then reverse, or use with reverse comparators)
    if (a.dh + a.dv != b.dh + b.dv) return a.dh + a.dv < b.dh + b.dv;
    return a.dh < b.dh;
}

}  // namespace

IntPoly::IntPoly(long n)
{
    if (n != 0) terms_.push_back({0, 0, mpz_class(n)});
}

IntPoly::IntPoly(const mpz_class& n)
{
    if (n != 0) terms_.push_back({0, 0, n});
}

IntPoly IntPoly::monomial(mpz_class c, int dh, int dv)
{
    IntPoly p;
    if (c != 0) {
        if (dh < 0 || dv < 0) throw std::domain_error("IntPoly: negative exponent");
        p.terms_.push_back({dh, dv, std::move(c)});
    }
    return p;
}

IntPoly IntPoly::of(const std::vector<PolyTerm>& terms)
{
    IntPoly p;
    p.terms_ = terms;
    for (const auto& t : p.terms_)
        if (t.dh < 0 || t.dv < 0) throw std::domain_error("IntPoly: negative exponent");
    p.normalize();
    return p;
}

void IntPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_less_asc);
    std::vector<PolyTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().dh == t.dh && out.back().dv == t.dv)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const PolyTerm& t) { return t.c == 0; }),
              out.end());
    std::reverse(out.begin(), out.end());
    terms_ = std::move(out);
}

bool IntPoly::is_one() const
{
    return terms_.size() == 1 && terms_[0].dh == 0 && terms_[0].dv == 0 && terms_[0].c == 1;
}

bool IntPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].dh == 0 && terms_[0].dv == 0);
}

int IntPoly::degree_h() const
{
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.dh);
    return terms_.empty() ? -1 : d;
}

int IntPoly::degree_v() const
{
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.dv);
    return terms_.empty() ? -1 : d;
}

int IntPoly::total_degree() const
{
    if (terms_.empty()) return -1;
    return terms_.front().dh + terms_.front().dv;
}

int IntPoly::min_degree_h() const
{
    int d = INT32_MAX;
    for (const auto& t : terms_) d = std::min(d, t.dh);
    return terms_.empty() ? 0 : d;
}

int IntPoly::min_degree_v() const
{
    int d = INT32_MAX;
    for (const auto& t : terms_) d = std::min(d, t.dv);
    return terms_.empty() ? 0 : d;
}

const PolyTerm& IntPoly::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("IntPoly: leading term of zero");
    return terms_.front();
}

mpz_class IntPoly::coeff(int dh, int dv) const
{
    for (const auto& t : terms_)
        if (t.dh == dh && t.dv == dv) return t.c;
    return mpz_class(0);
}

bool IntPoly::equal(const IntPoly& o) const
{
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); i++)
        if (terms_[i].dh != o.terms_[i].dh || terms_[i].dv != o.terms_[i].dv ||
            terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    // merge two sorted (descending) term lists
    IntPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const PolyTerm& a = terms_[i];
        const PolyTerm& b = o.terms_[j];
        if (a.dh == b.dh && a.dv == b.dv) {
            mpz_class s = a.c + b.c;
            if (s != 0) r.terms_.push_back({a.dh, a.dv, std::move(s)});
            i++, j++;
        } else if (monomial_before(a.dh, a.dv, b.dh, b.dv)) {
            r.terms_.push_back(a);
            i++;
        } else {
            r.terms_.push_back(b);
            j++;
        }
    }
    for (; i < terms_.size(); i++) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); j++) r.terms_.push_back(o.terms_[j]);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    if (is_zero() || o.is_zero()) return IntPoly();
    // accumulate into a map keyed by packed exponents
    std::map<std::pair<int, int>, mpz_class> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            mpz_class& slot = acc[{a.dh + b.dh, a.dv + b.dv}];
            slot += a.c * b.c;
        }
    IntPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e.first, e.second, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const PolyTerm& a, const PolyTerm& b) {
                  return monomial_before(a.dh, a.dv, b.dh, b.dv);
              });
    return r;
}

IntPoly IntPoly::mul_scalar(const mpz_class& s) const
{
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& t : r.terms_) t.c *= s;
    return r;
}

IntPoly IntPoly::mul_monomial(const mpz_class& c, int dh, int dv) const
{
    if (c == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& t : r.terms_) {
        t.c *= c;
        t.dh += dh;
        t.dv += dv;
        if (t.dh < 0 || t.dv < 0) throw std::domain_error("IntPoly: negative exponent");
    }
    return r;
}

IntPoly IntPoly::div_scalar_exact(const mpz_class& s) const
{
    if (s == 0) throw std::domain_error("IntPoly: division by zero scalar");
    IntPoly r(*this);
    for (auto& t : r.terms_) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.c.get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw std::domain_error("IntPoly: inexact scalar division");
        t.c = std::move(q);
    }
    return r;
}

IntPoly IntPoly::div_monomial_exact(int dh, int dv) const
{
    IntPoly r(*this);
    for (auto& t : r.terms_) {
        t.dh -= dh;
        t.dv -= dv;
        if (t.dh < 0 || t.dv < 0)
            throw std::domain_error("IntPoly: inexact monomial division");
    }
    return r;
}

mpz_class IntPoly::content() const
{
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int IntPoly::leading_sign() const
{
    if (terms_.empty()) return 0;
    return sgn(terms_.front().c);
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) return IntPoly();
    mpz_class c = content();
    if (leading_sign() < 0) c = -c;
    return div_scalar_exact(c);
}

// IntPoly::div_exact is defined below the dense-division helpers.

IntPoly IntPoly::derivative_h() const
{
    IntPoly r;
    for (const auto& t : terms_)
        if (t.dh > 0) r.terms_.push_back({t.dh - 1, t.dv, t.c * t.dh});
    r.normalize();
    return r;
}

IntPoly IntPoly::derivative_v() const
{
    IntPoly r;
    for (const auto& t : terms_)
        if (t.dv > 0) r.terms_.push_back({t.dh, t.dv - 1, t.c * t.dv});
    r.normalize();
    return r;
}

IntPoly IntPoly::swap_vars() const
{
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.dv, t.dh, t.c});
    r.normalize();
    return r;
}

mpq_class IntPoly::eval_q(const mpq_class& sh, const mpq_class& sv) const
{
    mpq_class acc = 0;
    std::vector<mpq_class> ph{1}, pv{1};
    auto power = [](std::vector<mpq_class>& cache, const mpq_class& x, int e) {
        while ((int)cache.size() <= e) cache.push_back(cache.back() * x);
        return cache[e];
    };
    for (const auto& t : terms_)
        acc += mpq_class(t.c) * power(ph, sh, t.dh) * power(pv, sv, t.dv);
    return acc;
}

IntPoly IntPoly::remap_monomials(const std::function<std::pair<int, int>(int, int)>& f) const
{
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto [nh, nv] = f(t.dh, t.dv);
        if (nh < 0 || nv < 0) throw std::domain_error("IntPoly: negative exponent in remap");
        r.terms_.push_back({nh, nv, t.c});
    }
    r.normalize();
    return r;
}

bool IntPoly::perfect_square(IntPoly* root) const
{
    if (is_zero()) {
        if (root) *root = IntPoly();
        return true;
    }
    const PolyTerm& lt = leading_term();
    if (lt.dh % 2 || lt.dv % 2 || lt.c < 0) return false;
    mpz_class rc;
    mpz_sqrt(rc.get_mpz_t(), lt.c.get_mpz_t());
    if (rc * rc != lt.c) return false;
    IntPoly g = monomial(rc, lt.dh / 2, lt.dv / 2);
    IntPoly rem = *this - g * g;
    // classical sparse square-root recovery: peel terms via t = lt(rem)/(2 lt(g))
    size_t guard = 4 * (terms_.size() + 2) * (terms_.size() + 2);
    while (!rem.is_zero()) {
        if (guard-- == 0) return false;
        const PolyTerm& lr = rem.leading_term();
        int th = lr.dh - lt.dh / 2, tv = lr.dv - lt.dv / 2;
        if (th < 0 || tv < 0) return false;
        if (!monomial_before(lt.dh / 2, lt.dv / 2, th, tv)) return false;
        mpz_class tc, r2;
        mpz_class twice = 2 * rc;
        mpz_fdiv_qr(tc.get_mpz_t(), r2.get_mpz_t(), lr.c.get_mpz_t(), twice.get_mpz_t());
        if (r2 != 0) return false;
        IntPoly t = monomial(tc, th, tv);
        rem -= t * (g + g) + t * t;
        g += t;
    }
    if (root) *root = (g.leading_sign() < 0) ? -g : g;
    return true;
}

std::string IntPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class a = abs(t.c);
        os << (first ? (sgn(t.c) < 0 ? "-" : "") : (sgn(t.c) < 0 ? " - " : " + "));
        first = false;
        bool unit = (a == 1) && (t.dh || t.dv);
        if (!unit) os << a.get_str();
        if (t.dh) {
            if (!unit) os << "*";
            os << "h";
            if (t.dh > 1) os << "^" << t.dh;
        }
        if (t.dv) {
            if (!unit || t.dh) os << "*";
            os << "v";
            if (t.dv > 1) os << "^" << t.dv;
        }
    }
    return os.str();
}

std::string IntPoly::latex() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class a = abs(t.c);
        os << (first ? (sgn(t.c) < 0 ? "-" : "") : (sgn(t.c) < 0 ? " - " : " + "));
        first = false;
        bool unit = (a == 1) && (t.dh || t.dv);
        if (!unit) os << a.get_str();
        if (t.dh) {
            os << " s_h";
            if (t.dh > 1) os << "^{" << t.dh << "}";
        }
        if (t.dv) {
            os << " s_v";
            if (t.dv > 1) os << "^{" << t.dv << "}";
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// gcd engine
// --------------------------------------------------------------------------
namespace {

// ---- univariate dense polynomials over Z, ascending coefficients ----
using upoly = std::vector<mpz_class>;

void utrim(upoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const upoly& p) { return (int)p.size() - 1; }  // -1 for zero

mpz_class ucontent(const upoly& p)
{
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

upoly uprimitive(const upoly& p)
{
    if (p.empty()) return p;
    mpz_class c = ucontent(p);
    if (sgn(p.back()) < 0) c = -c;
    upoly r(p.size());
    for (size_t i = 0; i < p.size(); i++) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

// sign normalization only: gcd(0, p) keeps the content of p
upoly uposlead(upoly p)
{
    if (!p.empty() && sgn(p.back()) < 0)
        for (auto& c : p) c = -c;
    return p;
}

upoly umul(const upoly& a, const upoly& b)
{
    if (a.empty() || b.empty()) return {};
    upoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod b,
// with the exact classical exponent (needed by the subresultant divisions)
upoly uprem(upoly a, const upoly& b)
{
    int db = udeg(b);
    if (db < 0) throw std::domain_error("uprem: zero divisor");
    const mpz_class& lb = b.back();
    int want = udeg(a) - db + 1;
    int done = 0;
    while (udeg(a) >= db) {
        int da = udeg(a);
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        done++;
        for (int i = 0; i <= db; i++) a[da - db + i] -= la * b[i];
        utrim(a);
    }
    if (done < want) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), want - done);
        for (auto& c : a) c *= f;
    }
    return a;
}

// 64-bit modular image degree of gcd; -1 when the probe is unusable
int umod_gcd_degree_z(const upoly& a, const upoly& b);

upoly ugcd(upoly a, upoly b)
{
    utrim(a);
    utrim(b);
    if (a.empty()) return uposlead(std::move(b));
    if (b.empty()) return uposlead(std::move(a));
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ucontent(a).get_mpz_t(), ucontent(b).get_mpz_t());
    if (udeg(a) == 0 || udeg(b) == 0) return {cg};
    // modular fast path: degree-0 image gcd proves the primitive parts coprime
    // (worth the reduction cost only once the PRS would grow real coefficients)
    if (std::min(udeg(a), udeg(b)) >= 4 && umod_gcd_degree_z(a, b) == 0) return {cg};
    a = uprimitive(a);
    b = uprimitive(b);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    // subresultant PRS (Brown): controlled coefficient growth
    mpz_class g(1), h(1);
    while (true) {
        int delta = udeg(a) - udeg(b);
        upoly r = uprem(a, b);
        if (r.empty()) break;
        if (udeg(r) == 0) {
            b = {mpz_class(1)};
            break;
        }
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
        mpz_class div = g * hd;
        a = std::move(b);
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        b = std::move(r);
        g = a.back();
        // h = g^delta * h^(1-delta)
        mpz_class gd;
        mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
        if (delta == 0)
            ;  // h unchanged
        else if (delta == 1)
            h = gd;
        else {
            mpz_class hpow;
            mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hpow.get_mpz_t());
        }
    }
    upoly out = uprimitive(b);
    for (auto& c : out) c *= cg;
    utrim(out);
    return out;
}

bool u_is_one(const upoly& p) { return p.size() == 1 && p[0] == 1; }

// ---- recursive dense: main variable X, coefficients univariate in Y ----
using bpoly = std::vector<upoly>;  // index = X exponent

void btrim(bpoly& p)
{
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const bpoly& p) { return (int)p.size() - 1; }

// content in Z[Y]: gcd of all coefficients
upoly bcontent(const bpoly& p)
{
    upoly g;
    for (const auto& c : p) {
        g = ugcd(g, c);
        if (u_is_one(g)) break;
    }
    return g;
}

upoly udivexact(const upoly& a, const upoly& b)
{
    // exact division in Z[Y]; assumes divisibility (internal use after gcd)
    if (a.empty()) return {};
    if (b.empty() || a.size() < b.size()) throw std::domain_error("udivexact: inexact");
    upoly rem = a, q(a.size() - b.size() + 1);
    int db = udeg(b);
    while (udeg(rem) >= db) {
        int dr = udeg(rem);
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        q[dr - db] = qc;
        for (int i = 0; i <= db; i++) rem[dr - db + i] -= qc * b[i];
        utrim(rem);
    }
    if (!rem.empty()) throw std::domain_error("udivexact: inexact");
    utrim(q);
    return q;
}

bpoly bprimitive(const bpoly& p, upoly* content_out)
{
    upoly c = bcontent(p);
    if (content_out) *content_out = c;
    if (p.empty() || u_is_one(c)) return p;
    bpoly r(p.size());
    for (size_t i = 0; i < p.size(); i++)
        if (!p[i].empty()) r[i] = udivexact(p[i], c);
    return r;
}

bpoly bmul_u(const bpoly& a, const upoly& s)
{
    bpoly r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = umul(a[i], s);
    btrim(r);
    return r;
}

upoly usub(const upoly& a, const upoly& b)
{
    upoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    utrim(r);
    return r;
}

// pseudo-remainder in the main variable, exact classical exponent
bpoly bprem(bpoly a, const bpoly& b)
{
    int db = bdeg(b);
    if (db < 0) throw std::domain_error("bprem: zero divisor");
    const upoly& lb = b.back();
    int want = bdeg(a) - db + 1;
    int done = 0;
    while (bdeg(a) >= db) {
        int da = bdeg(a);
        upoly la = a.back();
        for (auto& c : a) c = umul(c, lb);
        done++;
        for (int i = 0; i <= db; i++) a[da - db + i] = usub(a[da - db + i], umul(la, b[i]));
        btrim(a);
    }
    if (done < want) {
        upoly f = {mpz_class(1)};
        for (int i = done; i < want; i++) f = umul(f, lb);
        for (auto& c : a) c = umul(c, f);
    }
    return a;
}

upoly upow(const upoly& p, int e)
{
    upoly r = {mpz_class(1)};
    for (int i = 0; i < e; i++) r = umul(r, p);
    return r;
}

bpoly bgcd_primitive(bpoly a, bpoly b)
{
    // both nonzero, primitive in Z[Y]; returns primitive gcd in the main var
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    if (bdeg(b) == 0) return {{mpz_class(1)}};
    upoly g = {mpz_class(1)}, h = {mpz_class(1)};
    while (true) {
        int delta = bdeg(a) - bdeg(b);
        bpoly r = bprem(a, b);
        if (r.empty()) break;
        if (bdeg(r) == 0) {
            b = {{mpz_class(1)}};
            break;
        }
        upoly div = umul(g, upow(h, delta));
        a = std::move(b);
        for (auto& c : r)
            if (!c.empty()) c = udivexact(c, div);
        b = std::move(r);
        g = a.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = udivexact(upow(g, delta), upow(h, delta - 1));
    }
    return bprimitive(b, nullptr);
}

// ---- modular degree probe ----
constexpr uint64_t kProbePrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b)
{
    return (uint64_t)((unsigned __int128)a * b % kProbePrime);
}

uint64_t powmod(uint64_t a, uint64_t e)
{
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kProbePrime - 2); }

uint64_t mod_of(const mpz_class& c)
{
    unsigned long m = mpz_fdiv_ui(c.get_mpz_t(), kProbePrime);
    return (uint64_t)m;
}

// collapse poly to univariate in `mainvar_h ? s_h : s_v` by evaluating the
// other variable at r mod p; returns dense ascending coefficients mod p
std::vector<uint64_t> eval_collapse(const IntPoly& p, bool mainvar_h, uint64_t r)
{
    int d = mainvar_h ? p.degree_h() : p.degree_v();
    std::vector<uint64_t> out(std::max(d + 1, 1), 0);
    std::vector<uint64_t> pw{1};
    for (const auto& t : p.terms()) {
        int em = mainvar_h ? t.dh : t.dv;
        int eo = mainvar_h ? t.dv : t.dh;
        while ((int)pw.size() <= eo) pw.push_back(mulmod(pw.back(), r));
        uint64_t add = mulmod(mod_of(t.c), pw[eo]);
        out[em] = (out[em] + add) % kProbePrime;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

int umod_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b)
{
    auto deg = [](const std::vector<uint64_t>& p) {
        int d = (int)p.size() - 1;
        while (d >= 0 && p[d] == 0) d--;
        return d;
    };
    int da = deg(a), db = deg(b);
    if (da < 0) return db;
    if (db < 0) return da;
    while (true) {
        da = deg(a);
        db = deg(b);
        if (db < 0) return da;
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // a -= lead(a)/lead(b) * x^(da-db) * b
        uint64_t f = mulmod(a[da], invmod(b[db]));
        for (int i = 0; i <= db; i++) {
            uint64_t s = mulmod(f, b[i]);
            uint64_t& slot = a[da - db + i];
            slot = (slot + kProbePrime - s) % kProbePrime;
        }
    }
}

// Modular gcd degree of two integer univariates.  Returns 0 only when the
// primitive gcd is genuinely constant: if at least one leading coefficient
// survives reduction, deg(gcd mod p) bounds deg(gcd) from above.  An unusable
// reduction reports 1 so callers never take a shortcut on bad evidence.
int umod_gcd_degree_z(const upoly& a, const upoly& b)
{
    if (a.empty() || b.empty()) return 1;
    std::vector<uint64_t> ma(a.size()), mb(b.size());
    for (size_t i = 0; i < a.size(); i++) ma[i] = mod_of(a[i]);
    for (size_t i = 0; i < b.size(); i++) mb[i] = mod_of(b[i]);
    if (ma.back() == 0 && mb.back() == 0) return 1;
    return umod_gcd_degree(std::move(ma), std::move(mb));
}

thread_local std::mt19937_64 g_probe_rng(0x5eedf00dULL);

// Probabilistic upper bound estimate for deg_main(gcd) via two independent
// evaluation points; returns 0 only when both probes report degree 0.
int probe_gcd_degree(const IntPoly& a, const IntPoly& b, bool mainvar_h)
{
    int da = mainvar_h ? a.degree_h() : a.degree_v();
    int db = mainvar_h ? b.degree_h() : b.degree_v();
    if (da == 0 || db == 0) return 0;
    int best = std::min(da, db);
    for (int trial = 0; trial < 2; trial++) {
        for (int attempt = 0; attempt < 32; attempt++) {
            uint64_t r = g_probe_rng() % (kProbePrime - 2) + 1;
            auto ua = eval_collapse(a, mainvar_h, r);
            auto ub = eval_collapse(b, mainvar_h, r);
            // degree must not collapse, else the sample is unusable
            if ((int)ua.size() - 1 != da || ua.back() == 0) continue;
            if ((int)ub.size() - 1 != db || ub.back() == 0) continue;
            best = std::min(best, umod_gcd_degree(std::move(ua), std::move(ub)));
            break;
        }
        if (best == 0) continue;
    }
    return best;
}

// conversions
bpoly to_bpoly(const IntPoly& p, bool mainvar_h)
{
    bpoly r((mainvar_h ? p.degree_h() : p.degree_v()) + 1);
    for (const auto& t : p.terms()) {
        int em = mainvar_h ? t.dh : t.dv;
        int eo = mainvar_h ? t.dv : t.dh;
        if ((int)r[em].size() <= eo) r[em].resize(eo + 1);
        r[em][eo] += t.c;
    }
    for (auto& c : r) utrim(c);
    btrim(r);
    return r;
}

IntPoly from_bpoly(const bpoly& p, bool mainvar_h)
{
    std::vector<PolyTerm> terms;
    for (int em = 0; em < (int)p.size(); em++)
        for (int eo = 0; eo < (int)p[em].size(); eo++)
            if (p[em][eo] != 0) {
                if (mainvar_h)
                    terms.push_back({em, eo, p[em][eo]});
                else
                    terms.push_back({eo, em, p[em][eo]});
            }
    return IntPoly::of(terms);
}

IntPoly from_upoly_other(const upoly& p, bool mainvar_h)
{
    // univariate poly in the NON-main variable
    std::vector<PolyTerm> terms;
    for (int e = 0; e < (int)p.size(); e++)
        if (p[e] != 0) {
            if (mainvar_h)
                terms.push_back({0, e, p[e]});
            else
                terms.push_back({e, 0, p[e]});
        }
    return IntPoly::of(terms);
}

}  // namespace

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (b.terms().size() == 1) {
        const PolyTerm& lb = b.terms().front();
        std::vector<PolyTerm> out;
        out.reserve(a.terms().size());
        for (const auto& t : a.terms()) {
            if (t.dh < lb.dh || t.dv < lb.dv)
                throw std::domain_error("IntPoly: inexact division");
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.c.get_mpz_t(), lb.c.get_mpz_t());
            if (r != 0) throw std::domain_error("IntPoly: inexact division");
            out.push_back({t.dh - lb.dh, t.dv - lb.dv, std::move(q)});
        }
        return IntPoly::of(out);
    }
    // dense recursive division in (Z[s_v])[s_h]: when the quotient exists,
    // every univariate coefficient division along the way is itself exact
    bpoly pa = to_bpoly(a, true), pb = to_bpoly(b, true);
    int db = bdeg(pb);
    if (bdeg(pa) < db) throw std::domain_error("IntPoly: inexact division");
    bpoly q(bdeg(pa) - db + 1);
    try {
        while (bdeg(pa) >= db) {
            int d = bdeg(pa) - db;
            upoly qc = udivexact(pa.back(), pb.back());
            for (int i = 0; i < db; i++) pa[d + i] = usub(pa[d + i], umul(qc, pb[i]));
            pa.pop_back();
            btrim(pa);
            q[d] = std::move(qc);
        }
    } catch (const std::domain_error&) {
        throw std::domain_error("IntPoly: inexact division");
    }
    if (!pa.empty()) throw std::domain_error("IntPoly: inexact division");
    return from_bpoly(q, true);
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) return b.primitive_part().mul_scalar(abs(b.content()));
    if (b.is_zero()) return a.primitive_part().mul_scalar(abs(a.content()));

    // integer and monomial content
    mpz_class ca = a.content(), cb = b.content(), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    int mh = std::min(a.min_degree_h(), b.min_degree_h());
    int mv = std::min(a.min_degree_v(), b.min_degree_v());
    IntPoly sa = a.div_scalar_exact(ca).div_monomial_exact(a.min_degree_h(), a.min_degree_v());
    IntPoly sb = b.div_scalar_exact(cb).div_monomial_exact(b.min_degree_h(), b.min_degree_v());
    if (sa.leading_sign() < 0) sa = -sa;
    if (sb.leading_sign() < 0) sb = -sb;
    // re-attach only the SHARED monomial part
    auto attach = [&](const IntPoly& g) { return g.mul_monomial(cg, mh, mv); };

    if (sa.is_constant() || sb.is_constant()) return attach(IntPoly(1));

    // both univariate in the same variable: straight to the univariate engine
    if (sa.degree_h() == 0 && sb.degree_h() == 0) {
        upoly ua = to_bpoly(sa, true)[0], ub = to_bpoly(sb, true)[0];
        return attach(from_upoly_other(ugcd(std::move(ua), std::move(ub)), true));
    }
    if (sa.degree_v() == 0 && sb.degree_v() == 0) {
        upoly ua = to_bpoly(sa, false)[0], ub = to_bpoly(sb, false)[0];
        return attach(from_upoly_other(ugcd(std::move(ua), std::move(ub)), false));
    }

    // for small operands a direct PRS beats the cost of modular probing
    bool small = std::max(std::max(sa.degree_h(), sb.degree_h()),
                          std::max(sa.degree_v(), sb.degree_v())) <= 3;
    int bh = small ? std::min(sa.degree_h(), sb.degree_h()) : probe_gcd_degree(sa, sb, true);
    int bv = small ? std::min(sa.degree_v(), sb.degree_v()) : probe_gcd_degree(sa, sb, false);
    if (bh == 0 && bv == 0) return attach(IntPoly(1));

    if (bh == 0) {
        // gcd lives in Z[s_v]: gcd of the s_v-contents
        upoly ga = bcontent(to_bpoly(sa, true));
        upoly gb = bcontent(to_bpoly(sb, true));
        return attach(from_upoly_other(ugcd(ga, gb), true));
    }
    if (bv == 0) {
        upoly ga = bcontent(to_bpoly(sa, false));
        upoly gb = bcontent(to_bpoly(sb, false));
        return attach(from_upoly_other(ugcd(ga, gb), false));
    }

    // full bivariate PRS; main variable = the one with the smaller probe bound
    bool mainvar_h = bh <= bv;
    upoly conta, contb;
    bpoly pa = bprimitive(to_bpoly(sa, mainvar_h), &conta);
    bpoly pb = bprimitive(to_bpoly(sb, mainvar_h), &contb);
    upoly contg = ugcd(conta, contb);
    bpoly gp = bgcd_primitive(std::move(pa), std::move(pb));
    IntPoly g = from_bpoly(bmul_u(gp, contg), mainvar_h);
    if (g.leading_sign() < 0) g = -g;
    return attach(g);
}

}  // namespace ellcorr
