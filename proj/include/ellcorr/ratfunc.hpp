/**
 * @file ratfunc.hpp
 * @brief Canonical rational functions in (s_h, s_v): reduced fraction of
 *        IntPoly with positive-leading denominator.
 */
#pragma once

#include "ellcorr/intpoly.hpp"

namespace ellcorr {

class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(long n, long d);
    explicit RatFunc(const mpq_class& q);
    explicit RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(IntPoly n, IntPoly d);

    static RatFunc var_h() { return RatFunc(IntPoly::var_h()); }
    static RatFunc var_v() { return RatFunc(IntPoly::var_v()); }
    /// k = s_h s_v
    static RatFunc modulus() { return RatFunc(IntPoly::monomial(1, 1, 1)); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const;

    RatFunc derivative_h() const;
    RatFunc derivative_v() const;
    RatFunc swap_vars() const;

    /// Compose: s_h -> sh_image, s_v -> sv_image.
    RatFunc substitute(const RatFunc& sh_image, const RatFunc& sv_image) const;

    /// Exact evaluation; throws std::domain_error when the denominator vanishes.
    mpq_class eval_q(const mpq_class& sh, const mpq_class& sv) const;

    /// true when the value depends on (s_h, s_v) only through k = s_h s_v
    /// (every stored monomial has equal exponents after reduction).
    bool depends_only_on_modulus() const;

    std::string str() const;
    std::string latex() const;

  private:
    void reduce();

    IntPoly num_, den_;
};

}  // namespace ellcorr
