/**
 * @file ellvalue.hpp
 * @brief Sparse polynomials in the normalized complete elliptic integrals
 *        E~, K~ and one third-kind integral, with FieldElem coefficients.
 */
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "ellcorr/fieldelem.hpp"

namespace ellcorr {

/// Which third-kind integral the l-exponent of a monomial refers to:
/// PI is P(-s_h^2, k), PI_P is P(-s_v^2, k), with modulus k = s_h s_v.
enum class Basis { PI, PI_P };

/// Variable regime.  High: the integrals take the arguments above.  Low: the
/// value has been pushed through the replacement s_h -> 1/s_v, s_v -> 1/s_h,
/// so the integrals take modulus 1/(s_h s_v) and characteristics -1/s_v^2
/// (basis PI) or -1/s_h^2 (basis PI_P), while coefficients are still read at
/// the physical (s_h, s_v).
enum class Regime { High, Low };

struct EllMonomial {
    int i = 0;  ///< power of E~
    int j = 0;  ///< power of K~
    int l = 0;  ///< power of the third-kind integral
    EllMonomial() = default;
    EllMonomial(int i_, int j_, int l_) : i(i_), j(j_), l(l_) {}
    int total_degree() const { return i + j + l; }
    bool operator==(const EllMonomial& o) const { return i == o.i && j == o.j && l == o.l; }
    bool operator!=(const EllMonomial& o) const { return !(*this == o); }
};

/// Map order placing the leading term first: (l, j, i) descending, so the
/// highest third-kind power heads the iteration.
struct EllTermOrder {
    bool operator()(const EllMonomial& a, const EllMonomial& b) const
    {
        if (a.l != b.l) return a.l > b.l;
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    }
};

class EllValue {
  public:
    using TermMap = std::map<EllMonomial, FieldElem, EllTermOrder>;

    EllValue() = default;
    explicit EllValue(long n, Basis basis = Basis::PI, Regime regime = Regime::High);
    explicit EllValue(FieldElem c, Basis basis = Basis::PI, Regime regime = Regime::High);

    static EllValue monomial(FieldElem c, int i, int j, int l, Basis basis = Basis::PI,
                             Regime regime = Regime::High);
    static EllValue E(Basis basis = Basis::PI, Regime regime = Regime::High);
    static EllValue K(Basis basis = Basis::PI, Regime regime = Regime::High);
    static EllValue P(Basis basis = Basis::PI, Regime regime = Regime::High);

    const TermMap& terms() const { return terms_; }
    Basis basis() const { return basis_; }
    Regime regime() const { return regime_; }

    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of E^i K^j P^l (zero element when absent).
    FieldElem coeff(int i, int j, int l) const;
    /// Highest total degree over the support; -1 for the zero value.
    int total_degree() const;
    /// Highest third-kind power over the support; -1 for the zero value.
    int max_pi_degree() const;
    /// True when every monomial has total degree deg (vacuously for zero).
    bool is_homogeneous(int deg) const;
    /// The common total degree when one exists, else -1 (zero value: -1).
    int homogeneous_degree() const;
    /// The (E,K)-polynomial multiplying P^l: terms with that exact l, with the
    /// third-kind power stripped off.
    EllValue pi_coefficient(int l) const;

    bool operator==(const EllValue& o) const;
    bool operator!=(const EllValue& o) const { return !(*this == o); }

    EllValue operator-() const;
    EllValue operator+(const EllValue& o) const;
    EllValue operator-(const EllValue& o) const;
    EllValue operator*(const EllValue& o) const;
    EllValue& operator+=(const EllValue& o) { return *this = *this + o; }
    EllValue& operator-=(const EllValue& o) { return *this = *this - o; }
    EllValue& operator*=(const EllValue& o) { return *this = *this * o; }

    EllValue mul_field(const FieldElem& c) const;
    EllValue mul_rat(const RatFunc& r) const;
    /// Shift every monomial by (di, dj, dl); the shift must keep exponents
    /// nonnegative.
    EllValue mul_monomial(int di, int dj, int dl) const;

    std::string str() const;
    std::string latex() const;

  private:
    friend EllValue swap_hv(const EllValue& a);
    TermMap terms_;
    Basis basis_ = Basis::PI;
    Regime regime_ = Regime::High;

    void add_term(const EllMonomial& m, const FieldElem& c);
    static void check_compatible(const EllValue& a, const EllValue& b);
};

/// Thrown when exact_divide meets a nonzero remainder; carries the remainder
/// as the primary evidence of the inconsistency that produced it.
class ExactDivisionError : public std::domain_error {
  public:
    ExactDivisionError(const std::string& msg, EllValue remainder);
    const EllValue& remainder() const { return *remainder_; }

  private:
    std::shared_ptr<const EllValue> remainder_;
};

/// Exact quotient num/den with E~, K~ and the third-kind integral treated as
/// algebraically independent; throws ExactDivisionError on nonzero remainder.
EllValue exact_divide(const EllValue& num, const EllValue& den);

/// Non-throwing form: true and the quotient when the division is exact,
/// false when a nonzero remainder appears.
bool try_exact_divide(const EllValue& num, const EllValue& den, EllValue& quotient);

/// Re-express through P(-s_h^2,k) + P(-s_v^2,k) = K~ + 1/w; an involution.
EllValue change_basis(const EllValue& a, Basis to);

/// d/dk at fixed anisotropy s_h/s_v, realized in (s_h, s_v) coordinates; the
/// closure keeps values inside the ring and never raises the third-kind power.
EllValue derivative_k(const EllValue& a);

/// Kramers-Wannier duality: s_h -> 1/s_v, s_v -> 1/s_h on coefficients with
/// E~ -> E~/k + (k^2-1) K~/k, K~ -> k K~, P -> k P on the integrals; an
/// involution mapping C(M,N) to C_d(M,N).
EllValue duality_map(const EllValue& a);

/// The replacement substitution s_h -> 1/s_v, s_v -> 1/s_h on coefficients
/// alone, retagging the integrals to the low-temperature regime (same basis,
/// modulus 1/(s_h s_v)); maps C_d(M,N) to the ordered-regime C_<(M,N).
EllValue replacement(const EllValue& a);

/// Exchange s_h <-> s_v; the modulus is fixed, the third-kind integrals trade
/// places, so the basis tag flips; an involution mapping C(M,N) to C(N,M).
EllValue swap_hv(const EllValue& a);

/// Specialize to the isotropic line s_h = s_v = s and eliminate the
/// third-kind integral via P(-s^2, s^2) = K~/2 + 1/(2(1+s^2)).
EllValue isotropic_reduce(const EllValue& a);

}  // namespace ellcorr
