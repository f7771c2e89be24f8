/**
 * @file diagonal.cpp
 * @brief Symbol entries by three-term recurrence and fraction-free Toeplitz
 *        determinants for the diagonal correlations.
 */
#include "ellcorr/diagonal.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace ellcorr {

namespace {

/// Entries of the non-winding square-root symbol at parameter a2, indexed
/// lo..hi, with E~/K~ carrying the given regime tag.  The base cases a_0, a_1
/// extend in both directions through the three-term recurrence
///   a2 (n + 1/2) a_n = [(1 + a2^2)(n - 1) + a2^2] a_{n-1} - a2 (n - 3/2) a_{n-2},
/// which the symbol's first-order differential equation imposes on its
/// Laurent coefficients.
std::map<int, EllValue> symbol_band(int lo, int hi, const RatFunc& a2, Regime regime)
{
    const EllValue E = EllValue::E(Basis::PI, regime);
    const EllValue K = EllValue::K(Basis::PI, regime);
    const RatFunc one(1);
    const RatFunc a2sq = a2 * a2;

    std::map<int, EllValue> a;
    a[0] = E;
    a[1] = E.mul_rat((RatFunc(2) * a2sq - one) / (RatFunc(3) * a2)) +
           K.mul_rat((one - a2sq) / (RatFunc(3) * a2));
    // ascend: a_n from a_{n-1}, a_{n-2} (doubled to keep integer literals)
    for (int n = 2; n <= hi; n++) {
        RatFunc r1 = (RatFunc(2 * (n - 1)) * (one + a2sq) + RatFunc(2) * a2sq) /
                     (a2 * RatFunc(2 * n + 1));
        RatFunc r2 = RatFunc(2 * n - 3) / RatFunc(2 * n + 1);
        a[n] = a[n - 1].mul_rat(r1) - a[n - 2].mul_rat(r2);
    }
    // descend: a_{n-2} from a_{n-1}, a_n
    for (int n = 1; n - 2 >= lo; n--) {
        RatFunc r1 = (RatFunc(2 * (n - 1)) * (one + a2sq) + RatFunc(2) * a2sq) /
                     (a2 * RatFunc(2 * n - 3));
        RatFunc r2 = RatFunc(2 * n + 1) / RatFunc(2 * n - 3);
        a[n - 2] = a[n - 1].mul_rat(r1) - a[n].mul_rat(r2);
    }
    return a;
}

/// The band a_{lo}..a_{hi} of diagonal symbol entries for a regime.  The
/// ordered regime reads the non-winding branch at parameter 1/(s_h s_v); the
/// disordered regime's branch winds once, which flips and shifts the index:
/// a_n = -b_{-n-1} with b the non-winding entries at parameter s_h s_v.
std::map<int, EllValue> diag_band(int lo, int hi, Regime regime)
{
    const RatFunc k = RatFunc::modulus();
    if (regime == Regime::Low) return symbol_band(lo, hi, RatFunc(1) / k, regime);
    std::map<int, EllValue> b = symbol_band(-hi - 1, -lo - 1, k, regime);
    std::map<int, EllValue> a;
    for (int n = lo; n <= hi; n++) a[n] = -b[-n - 1];
    return a;
}

}  // namespace

DiagEntry diag_entry(int n, Regime regime)
{
    if (n > kDiagEntryBound || n < -kDiagEntryBound)
        throw std::domain_error("diag_entry: index out of range");
    auto band = diag_band(std::min(n, 0), std::max(n, 0), regime);
    return {n, band[n]};
}

EllValue diag_correlation(int N, Regime regime)
{
    if (N < 1 || N > kDiagCorrelationBound)
        throw std::domain_error("diag_correlation: size out of range");
    auto a = diag_band(-(N - 1), N - 1, regime);

    std::vector<std::vector<EllValue>> m(N, std::vector<EllValue>(N));
    for (int i = 0; i < N; i++)
        for (int j = 0; j < N; j++) m[i][j] = a[i - j];

    // Bareiss fraction-free elimination: every division is exact in the ring,
    // and the last pivot is the determinant
    EllValue prev(1, Basis::PI, regime);
    for (int p = 0; p + 1 < N; p++) {
        if (m[p][p].is_zero())
            throw std::domain_error("diag_correlation: vanishing pivot");
        for (int i = p + 1; i < N; i++)
            for (int j = p + 1; j < N; j++)
                m[i][j] = exact_divide(m[p][p] * m[i][j] - m[i][p] * m[p][j], prev);
        prev = m[p][p];
    }
    return m[N - 1][N - 1];
}

bool depends_only_on_modulus(const RatFunc& f)
{
    auto balanced = [](const IntPoly& p) {
        for (const auto& t : p.terms())
            if (t.dh != t.dv) return false;
        return true;
    };
    return balanced(f.num()) && balanced(f.den());
}

}  // namespace ellcorr
