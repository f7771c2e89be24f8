/**
 * @file ratfunc.cpp
 * @brief RatFunc canonical-form arithmetic with cross-gcd reduction.
 */
#include "ellcorr/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcorr {

RatFunc::RatFunc(long n, long d) : num_(n), den_(d)
{
    if (d == 0) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

RatFunc::RatFunc(const mpq_class& q) : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {}

RatFunc::RatFunc(IntPoly n, IntPoly d) : num_(std::move(n)), den_(std::move(d))
{
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce()
{
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
    }
    if (den_.leading_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const
{
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // d = gcd(den1, den2); t = n1 (d2/d) + n2 (d1/d); then remove gcd(t, d)
    IntPoly d = IntPoly::gcd(den_, o.den_);
    IntPoly d1r = IntPoly::div_exact(den_, d);
    IntPoly d2r = IntPoly::div_exact(o.den_, d);
    IntPoly t = num_ * d2r + o.num_ * d1r;
    if (t.is_zero()) return RatFunc();
    IntPoly h = IntPoly::gcd(t, d);
    RatFunc r;
    if (h.is_one()) {
        r.num_ = std::move(t);
        r.den_ = d1r * o.den_;
    } else {
        r.num_ = IntPoly::div_exact(t, h);
        r.den_ = d1r * IntPoly::div_exact(o.den_, h);
    }
    if (r.den_.leading_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    if (is_zero() || o.is_zero()) return RatFunc();
    IntPoly g1 = IntPoly::gcd(num_, o.den_);
    IntPoly g2 = IntPoly::gcd(o.num_, den_);
    RatFunc r;
    r.num_ = IntPoly::div_exact(num_, g1) * IntPoly::div_exact(o.num_, g2);
    r.den_ = IntPoly::div_exact(den_, g2) * IntPoly::div_exact(o.den_, g1);
    if (r.den_.leading_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::inv() const
{
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

bool RatFunc::operator==(const RatFunc& o) const
{
    // canonical forms compare structurally
    return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::derivative_h() const
{
    return RatFunc(num_.derivative_h() * den_ - num_ * den_.derivative_h(), den_ * den_);
}

RatFunc RatFunc::derivative_v() const
{
    return RatFunc(num_.derivative_v() * den_ - num_ * den_.derivative_v(), den_ * den_);
}

RatFunc RatFunc::swap_vars() const
{
    RatFunc r;
    r.num_ = num_.swap_vars();
    r.den_ = den_.swap_vars();
    if (r.den_.leading_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

namespace {

// evaluate poly at (P_h/Q_h, P_v/Q_v), returned as numerator over Q_h^Dh Q_v^Dv
IntPoly compose_poly(const IntPoly& p, const RatFunc& sh, const RatFunc& sv, int Dh, int Dv)
{
    std::vector<IntPoly> ph{IntPoly(1)}, qh{IntPoly(1)}, pv{IntPoly(1)}, qv{IntPoly(1)};
    auto pw = [](std::vector<IntPoly>& cache, const IntPoly& base, int e) -> const IntPoly& {
        while ((int)cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    IntPoly acc;
    for (const auto& t : p.terms()) {
        IntPoly part = pw(ph, sh.num(), t.dh) * pw(qh, sh.den(), Dh - t.dh) *
                       pw(pv, sv.num(), t.dv) * pw(qv, sv.den(), Dv - t.dv);
        acc += part.mul_scalar(t.c);
    }
    return acc;
}

}  // namespace

RatFunc RatFunc::substitute(const RatFunc& sh_image, const RatFunc& sv_image) const
{
    int Dh = std::max(num_.degree_h(), den_.degree_h());
    int Dv = std::max(num_.degree_v(), den_.degree_v());
    Dh = std::max(Dh, 0);
    Dv = std::max(Dv, 0);
    IntPoly n2 = compose_poly(num_, sh_image, sv_image, Dh, Dv);
    IntPoly d2 = compose_poly(den_, sh_image, sv_image, Dh, Dv);
    if (d2.is_zero()) throw std::domain_error("RatFunc: substitution kills denominator");
    return RatFunc(std::move(n2), std::move(d2));
}

mpq_class RatFunc::eval_q(const mpq_class& sh, const mpq_class& sv) const
{
    mpq_class d = den_.eval_q(sh, sv);
    if (d == 0) throw std::domain_error("RatFunc: denominator vanishes at point");
    return num_.eval_q(sh, sv) / d;
}

bool RatFunc::depends_only_on_modulus() const
{
    // after reduction f(k) keeps dh - dv constant within num and den separately,
    // with the two offsets equal (num shift == den shift)
    if (is_zero()) return true;
    auto shift = [](const IntPoly& p) {
        return p.terms().front().dh - p.terms().front().dv;
    };
    int sn = shift(num_), sd = shift(den_);
    for (const auto& t : num_.terms())
        if (t.dh - t.dv != sn) return false;
    for (const auto& t : den_.terms())
        if (t.dh - t.dv != sd) return false;
    return sn == sd;
}

std::string RatFunc::str() const
{
    if (is_polynomial()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

std::string RatFunc::latex() const
{
    if (is_polynomial()) return num_.latex();
    std::ostringstream os;
    os << "\\frac{" << num_.latex() << "}{" << den_.latex() << "}";
    return os.str();
}

}  // namespace ellcorr
