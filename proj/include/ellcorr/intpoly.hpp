/**
 * @file intpoly.hpp
 * @brief Sparse bivariate polynomials in (s_h, s_v) over arbitrary-precision
 *        integers, kept in graded-lexicographic order.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ellcorr {

/// One monomial c * s_h^dh * s_v^dv.
struct PolyTerm {
    int dh = 0;
    int dv = 0;
    mpz_class c;
};

/// true when (ah,av) sorts strictly before (bh,bv): higher total degree first,
/// ties broken by higher s_h exponent.
inline bool monomial_before(int ah, int av, int bh, int bv)
{
    if (ah + av != bh + bv) return ah + av > bh + bv;
    return ah > bh;
}

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(long n);
    explicit IntPoly(const mpz_class& n);

    static IntPoly monomial(mpz_class c, int dh, int dv);
    static IntPoly var_h() { return monomial(1, 1, 0); }
    static IntPoly var_v() { return monomial(1, 0, 1); }
    /// Build from an arbitrary term list (need not be sorted or combined).
    static IntPoly of(const std::vector<PolyTerm>& terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Single-term test.
    bool is_monomial() const { return terms_.size() == 1; }

    int degree_h() const;
    int degree_v() const;
    int total_degree() const;  ///< -1 for the zero polynomial
    int min_degree_h() const;
    int min_degree_v() const;

    const std::vector<PolyTerm>& terms() const { return terms_; }
    const PolyTerm& leading_term() const;  ///< graded-lex largest; poly must be nonzero
    /// Coefficient of s_h^dh s_v^dv (zero if absent).
    mpz_class coeff(int dh, int dv) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const { return equal(o); }
    bool operator!=(const IntPoly& o) const { return !equal(o); }

    IntPoly mul_scalar(const mpz_class& s) const;
    IntPoly mul_monomial(const mpz_class& c, int dh, int dv) const;
    /// Exact scalar division; throws std::domain_error when any coefficient fails.
    IntPoly div_scalar_exact(const mpz_class& s) const;
    /// Exact monomial division; throws std::domain_error when exponents underflow.
    IntPoly div_monomial_exact(int dh, int dv) const;

    /// gcd of all coefficients, canonically >= 0 (0 only for the zero poly).
    mpz_class content() const;
    /// this / content(), sign chosen so the graded-lex leading coefficient is positive.
    IntPoly primitive_part() const;
    /// Sign of graded-lex leading coefficient (0 for zero poly).
    int leading_sign() const;

    /// Quotient of exact division; throws std::domain_error when not divisible.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
    /// Greatest common divisor, positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    IntPoly derivative_h() const;
    IntPoly derivative_v() const;
    IntPoly swap_vars() const;

    /// Exact evaluation at rational (s_h, s_v).
    mpq_class eval_q(const mpq_class& sh, const mpq_class& sv) const;
    /// Substitute s_h -> x^eh_x * y^eh_y style monomial remaps (used for the
    /// lambda collapse s_h -> s, s_v -> s); exponents must stay nonnegative.
    IntPoly remap_monomials(const std::function<std::pair<int, int>(int, int)>& f) const;

    /// Perfect-square test; on success *root (if non-null) gets a square root
    /// with positive leading coefficient.
    bool perfect_square(IntPoly* root) const;

    std::string str() const;    ///< plain text, h/v variable names
    std::string latex() const;  ///< s_h / s_v variable names

  private:
    bool equal(const IntPoly& o) const;
    void normalize();  ///< sort, combine, strip zeros

    std::vector<PolyTerm> terms_;  ///< graded-lex descending, no zero coefficients
};

}  // namespace ellcorr
