/**
 * @file fieldelem.hpp
 * @brief Elements of the quadratic tower Q(s_h,s_v)[u_v,u_h] with
 *        u_v^2 = 1+s_v^2, u_h^2 = 1+s_h^2, as coordinates over the basis
 *        {1, u_v, u_h, u_v u_h}.
 */
#pragma once

#include "ellcorr/ratfunc.hpp"

namespace ellcorr {

class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(long n) : c00_(n) {}
    explicit FieldElem(RatFunc r) : c00_(std::move(r)) {}
    static FieldElem from_components(RatFunc c00, RatFunc c10, RatFunc c01, RatFunc c11);

    static FieldElem one() { return FieldElem(1); }
    /// u_v = (1+s_v^2)^(1/2)
    static FieldElem u_v();
    /// u_h = (1+s_h^2)^(1/2)
    static FieldElem u_h();
    /// w = u_v u_h
    static FieldElem w();

    /// 1+s_v^2 and 1+s_h^2 as rational values.
    static RatFunc qv();
    static RatFunc qh();

    const RatFunc& c00() const { return c00_; }
    const RatFunc& c10() const { return c10_; }  ///< coefficient of u_v
    const RatFunc& c01() const { return c01_; }  ///< coefficient of u_h
    const RatFunc& c11() const { return c11_; }  ///< coefficient of u_v u_h

    bool is_zero() const;
    bool is_rational() const;  ///< lies in Q(s_h, s_v)
    /// Exactly one basis component nonzero (or zero element); used by the
    /// ODE layer to strip a common algebraic factor from coefficient rows.
    bool is_single_component() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem mul_rat(const RatFunc& r) const;

    /// Multiplicative inverse by norming down the tower (conjugate by u_h,
    /// then by u_v, reducing to a rational inversion).
    FieldElem inv() const;

    FieldElem conj_v() const;  ///< u_v -> -u_v
    FieldElem conj_h() const;  ///< u_h -> -u_h

    FieldElem partial_h() const;  ///< d/ds_h with du_h/ds_h = s_h u_h/(1+s_h^2)
    FieldElem partial_v() const;
    /// Directional derivative along the modulus k = s_h s_v at fixed
    /// anisotropy s_h/s_v:  (s_h d/ds_h + s_v d/ds_v) / (2 s_h s_v).
    FieldElem derivative_k() const;

    /// Compose s_h -> sh_image, s_v -> sv_image; the square roots are mapped to
    /// exact radicals rho * u_v^a u_h^b recovered by perfect-square detection.
    /// Throws std::domain_error when an image square root leaves the tower.
    FieldElem substitute(const RatFunc& sh_image, const RatFunc& sv_image) const;

    FieldElem swap_vars() const;  ///< s_h <-> s_v together with u_h <-> u_v

    std::string str() const;
    std::string latex() const;

  private:
    RatFunc c00_, c10_, c01_, c11_;
};

}  // namespace ellcorr
