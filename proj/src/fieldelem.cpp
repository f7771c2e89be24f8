/**
 * @file fieldelem.cpp
 * @brief Tower arithmetic for FieldElem.
 */
#include "ellcorr/fieldelem.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcorr {

FieldElem FieldElem::from_components(RatFunc c00, RatFunc c10, RatFunc c01, RatFunc c11)
{
    FieldElem e;
    e.c00_ = std::move(c00);
    e.c10_ = std::move(c10);
    e.c01_ = std::move(c01);
    e.c11_ = std::move(c11);
    return e;
}

FieldElem FieldElem::u_v() { return from_components(RatFunc(), RatFunc(1), RatFunc(), RatFunc()); }
FieldElem FieldElem::u_h() { return from_components(RatFunc(), RatFunc(), RatFunc(1), RatFunc()); }
FieldElem FieldElem::w() { return from_components(RatFunc(), RatFunc(), RatFunc(), RatFunc(1)); }

RatFunc FieldElem::qv()
{
    return RatFunc(IntPoly::of({{0, 2, 1}, {0, 0, 1}}));
}

RatFunc FieldElem::qh()
{
    return RatFunc(IntPoly::of({{2, 0, 1}, {0, 0, 1}}));
}

bool FieldElem::is_zero() const
{
    return c00_.is_zero() && c10_.is_zero() && c01_.is_zero() && c11_.is_zero();
}

bool FieldElem::is_rational() const
{
    return c10_.is_zero() && c01_.is_zero() && c11_.is_zero();
}

bool FieldElem::is_single_component() const
{
    int n = (!c00_.is_zero()) + (!c10_.is_zero()) + (!c01_.is_zero()) + (!c11_.is_zero());
    return n <= 1;
}

bool FieldElem::operator==(const FieldElem& o) const
{
    return c00_ == o.c00_ && c10_ == o.c10_ && c01_ == o.c01_ && c11_ == o.c11_;
}

FieldElem FieldElem::operator-() const
{
    return from_components(-c00_, -c10_, -c01_, -c11_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const
{
    return from_components(c00_ + o.c00_, c10_ + o.c10_, c01_ + o.c01_, c11_ + o.c11_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const
{
    return from_components(c00_ - o.c00_, c10_ - o.c10_, c01_ - o.c01_, c11_ - o.c11_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const
{
    const RatFunc QV = qv(), QH = qh();
    const RatFunc &a0 = c00_, &a1 = c10_, &a2 = c01_, &a3 = c11_;
    const RatFunc &b0 = o.c00_, &b1 = o.c10_, &b2 = o.c01_, &b3 = o.c11_;
    RatFunc r0 = a0 * b0 + QV * (a1 * b1) + QH * (a2 * b2) + QV * QH * (a3 * b3);
    RatFunc r1 = a0 * b1 + a1 * b0 + QH * (a2 * b3 + a3 * b2);
    RatFunc r2 = a0 * b2 + a2 * b0 + QV * (a1 * b3 + a3 * b1);
    RatFunc r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return from_components(std::move(r0), std::move(r1), std::move(r2), std::move(r3));
}

FieldElem FieldElem::mul_rat(const RatFunc& r) const
{
    return from_components(c00_ * r, c10_ * r, c01_ * r, c11_ * r);
}

FieldElem FieldElem::conj_v() const
{
    return from_components(c00_, -c10_, c01_, -c11_);
}

FieldElem FieldElem::conj_h() const
{
    return from_components(c00_, c10_, -c01_, -c11_);
}

FieldElem FieldElem::inv() const
{
    if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
    // single-component shapes invert with one rational inversion
    bool z00 = c00_.is_zero(), z10 = c10_.is_zero(), z01 = c01_.is_zero(), z11 = c11_.is_zero();
    if (z10 && z01 && z11) return FieldElem(c00_.inv());
    if (z00 && z01 && z11)
        return from_components(RatFunc(), (qv() * c10_).inv(), RatFunc(), RatFunc());
    if (z00 && z10 && z11)
        return from_components(RatFunc(), RatFunc(), (qh() * c01_).inv(), RatFunc());
    if (z00 && z10 && z01)
        return from_components(RatFunc(), RatFunc(), RatFunc(), (qv() * qh() * c11_).inv());
    // elements of a single quadratic step need one conjugation
    if (z01 && z11) {
        RatFunc r = c00_ * c00_ - qv() * (c10_ * c10_);
        if (r.is_zero()) throw std::domain_error("FieldElem: vanishing tower norm");
        RatFunc ri = r.inv();
        return from_components(c00_ * ri, -(c10_ * ri), RatFunc(), RatFunc());
    }
    if (z10 && z11) {
        RatFunc r = c00_ * c00_ - qh() * (c01_ * c01_);
        if (r.is_zero()) throw std::domain_error("FieldElem: vanishing tower norm");
        RatFunc ri = r.inv();
        return from_components(c00_ * ri, RatFunc(), -(c01_ * ri), RatFunc());
    }
    // x = this * conj_h(this) lies in Q(s_h,s_v)[u_v]
    FieldElem x = *this * conj_h();
    // r = x * conj_v(x) = p^2 - (1+s_v^2) q^2 is rational and nonzero
    RatFunc r = x.c00_ * x.c00_ - qv() * (x.c10_ * x.c10_);
    if (r.is_zero()) throw std::domain_error("FieldElem: vanishing tower norm");
    return conj_h() * x.conj_v().mul_rat(r.inv());
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::partial_h() const
{
    // d u_h/ds_h = s_h u_h / (1+s_h^2); u_v is constant in s_h
    RatFunc chain = RatFunc::var_h() / qh();
    return from_components(c00_.derivative_h(), c10_.derivative_h(),
                           c01_.derivative_h() + c01_ * chain,
                           c11_.derivative_h() + c11_ * chain);
}

FieldElem FieldElem::partial_v() const
{
    RatFunc chain = RatFunc::var_v() / qv();
    return from_components(c00_.derivative_v(), c10_.derivative_v() + c10_ * chain,
                           c01_.derivative_v(),
                           c11_.derivative_v() + c11_ * chain);
}

FieldElem FieldElem::derivative_k() const
{
    RatFunc half_h = RatFunc(IntPoly(1), IntPoly::monomial(2, 0, 1));  // 1/(2 s_v)
    RatFunc half_v = RatFunc(IntPoly(1), IntPoly::monomial(2, 1, 0));  // 1/(2 s_h)
    return partial_h().mul_rat(half_h) + partial_v().mul_rat(half_v);
}

namespace {

/// Express sqrt(t) as rho * u_v^a u_h^b; throws when impossible.
void resolve_root(const RatFunc& t, RatFunc* rho, int* a, int* b)
{
    if (t.is_zero()) {
        *rho = RatFunc();
        *a = *b = 0;
        return;
    }
    for (int av = 0; av <= 1; av++)
        for (int bh = 0; bh <= 1; bh++) {
            RatFunc s = t;
            if (av) s = s / FieldElem::qv();
            if (bh) s = s / FieldElem::qh();
            IntPoly rn, rd;
            if (s.num().perfect_square(&rn) && s.den().perfect_square(&rd)) {
                *rho = RatFunc(std::move(rn), std::move(rd));
                *a = av;
                *b = bh;
                return;
            }
        }
    throw std::domain_error("FieldElem: substitution square root leaves the tower");
}

}  // namespace

FieldElem FieldElem::substitute(const RatFunc& sh_image, const RatFunc& sv_image) const
{
    // images of the generators
    RatFunc tv = RatFunc(1) + sv_image * sv_image;
    RatFunc th = RatFunc(1) + sh_image * sh_image;
    RatFunc rho_v, rho_h;
    int av, bv, ah, bh;
    resolve_root(tv, &rho_v, &av, &bv);
    resolve_root(th, &rho_h, &ah, &bh);
    auto radical = [](const RatFunc& rho, int a, int b) {
        FieldElem u = FieldElem(rho);
        if (a) u = u * u_v();
        if (b) u = u * u_h();
        return u;
    };
    FieldElem img_uv = radical(rho_v, av, bv);
    FieldElem img_uh = radical(rho_h, ah, bh);
    FieldElem r = FieldElem(c00_.substitute(sh_image, sv_image));
    r += FieldElem(c10_.substitute(sh_image, sv_image)) * img_uv;
    r += FieldElem(c01_.substitute(sh_image, sv_image)) * img_uh;
    r += FieldElem(c11_.substitute(sh_image, sv_image)) * img_uv * img_uh;
    return r;
}

FieldElem FieldElem::swap_vars() const
{
    return from_components(c00_.swap_vars(), c01_.swap_vars(), c10_.swap_vars(),
                           c11_.swap_vars());
}

std::string FieldElem::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const RatFunc& c, const char* tag) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (*tag) os << "*" << tag;
    };
    emit(c00_, "");
    emit(c10_, "uv");
    emit(c01_, "uh");
    emit(c11_, "uv*uh");
    return os.str();
}

std::string FieldElem::latex() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const RatFunc& c, const char* tag) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << c.latex() << "\\right)";
        if (*tag) os << " " << tag;
    };
    emit(c00_, "");
    emit(c10_, "(1+s_v^2)^{1/2}");
    emit(c01_, "(1+s_h^2)^{1/2}");
    emit(c11_, "(1+s_v^2)^{1/2} (1+s_h^2)^{1/2}");
    return os.str();
}

}  // namespace ellcorr
