#pragma once
/** @file
 *  @brief Correlation table filled layer by layer from the quadratic
 *         difference equations, with exact audits of every relation instance
 *         and the replacement route to ordered-regime correlations.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellcorr/ellvalue.hpp"

namespace ellcorr {

/// How a table value came to be.
enum class Provenance { Seed, Diagonal, Solved, Swapped, DualDerived };

std::string provenance_name(Provenance p);

/// One lattice site's pair of values.
struct CorrEntry {
    EllValue C;
    EllValue Cd;
    Provenance prov_c = Provenance::Solved;
    Provenance prov_cd = Provenance::Solved;
};

/// Correlations C(M,N) and their duals C_d(M,N) on 0..Nmax squared, all
/// stored in the disordered regime with the third-kind basis of C(0,1).
/// Lookup is by literal index; the reflection symmetry C(-M,N) = C(M,N) is
/// applied by the equation machinery, not by the accessors.
class CorrTable {
  public:
    using Key = std::pair<int, int>;

    explicit CorrTable(int nmax);

    int nmax() const { return nmax_; }
    bool has(int m, int n) const;
    const EllValue& C(int m, int n) const;
    const EllValue& Cd(int m, int n) const;
    const CorrEntry& entry(int m, int n) const;
    const std::map<Key, CorrEntry>& entries() const { return entries_; }

    /// Install both values of a site (used by the builders).
    void set(int m, int n, EllValue c, EllValue cd, Provenance pc, Provenance pcd);

  private:
    int nmax_;
    std::map<Key, CorrEntry> entries_;
};

/// The seed table: the origin, the nearest-neighbor pair and its duals, and
/// every diagonal up to Nmax with its dual image.  Printed low-order dual
/// diagonals are re-derived and cross-checked; a mismatch throws.
CorrTable seeds(int nmax);

/// Extend a table complete through layer M+N = p by the layer p+1 entries:
/// solve the interior sites from the quadratic difference equations over the
/// fraction field (odd layers close their one-parameter family through the
/// tangency of the next diagonal), then fill the axis sites.  Throws
/// "insufficient seeds at layer p+1" when the system loses more rank than
/// the diagonal seeds account for.
CorrTable fill_layer(int p, const CorrTable& table);

/// seeds + fill_layer up to M+N = max_layer (default: the full square).
CorrTable fill(int nmax, int max_layer = -1);

/// One audited relation instance; residual is the exact ring value, zero
/// when the relation holds.
struct AuditCheck {
    std::string relation;
    int m = 0;
    int n = 0;
    EllValue residual;
    bool ok() const { return residual.is_zero(); }
};

/// Outcome of auditing every in-range relation instance plus the duality
/// cross-checks.
struct AuditReport {
    std::vector<AuditCheck> checks;
    int failures = 0;
    bool all_ok() const { return failures == 0; }
};

/// Exact residuals of every quadratic-equation instance whose participants
/// all lie inside the table, the nearest-neighbor dual relations at the
/// origin, and the site-by-site duality map and its involution.
AuditReport audit(const CorrTable& table);

/// Ordered-regime correlation C_<(M,N): the replacement substitution applied
/// to C_d(M,N).
EllValue low_temp(int m, int n, const CorrTable& table);

}  // namespace ellcorr
