#pragma once
/** @file
 *  @brief Diagonal correlations as Toeplitz determinants whose symbolic
 *         entries live in the degree-one (E~, K~) subring.
 */

#include "ellcorr/ellvalue.hpp"

namespace ellcorr {

/// Largest |n| served by diag_entry.
inline constexpr int kDiagEntryBound = 24;
/// Largest N served by diag_correlation.
inline constexpr int kDiagCorrelationBound = 8;

/// One entry of the diagonal Toeplitz symbol: a_n = alpha_n K~ + beta_n E~
/// with coefficients rational in the modulus combination s_h s_v alone; no
/// third-kind term and no u_v/u_h content.
struct DiagEntry {
    int n = 0;
    EllValue value;
};

/// Symbol entry a_n for the requested regime; |n| <= kDiagEntryBound.
DiagEntry diag_entry(int n, Regime regime);

/// Diagonal correlation C(N,N) (or its ordered-regime counterpart) as the
/// N x N Toeplitz determinant det[a_{i-j}], expanded fraction-free;
/// homogeneous of degree N.  1 <= N <= kDiagCorrelationBound.
EllValue diag_correlation(int N, Regime regime);

/// True when f is a rational function of the product s_h s_v alone.
bool depends_only_on_modulus(const RatFunc& f);

}  // namespace ellcorr
