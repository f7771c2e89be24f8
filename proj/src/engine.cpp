/** @file
 *  @brief Layer-by-layer construction of the correlation table from the
 *         quadratic difference equations, exact relation audits, and the
 *         replacement route to ordered-regime correlations.
 */

#include "ellcorr/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ellcorr/diagonal.hpp"

namespace ellcorr {

namespace {

// ---------------------------------------------------------------------------
// equation assembly
// ---------------------------------------------------------------------------

/// One bilinear participant of an equation instance, resolved against the
/// current table and the unknown list of the layer under construction.
struct Participant {
    enum Kind { Known, Unknown, Absent } kind = Absent;
    const EllValue* value = nullptr;  // when Known
    int index = -1;                   // when Unknown
};

/// Resolver for sites referenced by equation instances.  Indices are
/// reflected through the axes before lookup.
class SiteResolver {
  public:
    SiteResolver(const CorrTable& table, const std::map<std::tuple<int, int, int>, int>& unknowns)
        : table_(table), unknowns_(unknowns)
    {
    }

    Participant operator()(int m, int n, bool dual) const
    {
        m = std::abs(m);
        n = std::abs(n);
        Participant p;
        if (table_.has(m, n)) {
            p.kind = Participant::Known;
            p.value = dual ? &table_.Cd(m, n) : &table_.C(m, n);
            return p;
        }
        auto it = unknowns_.find({m, n, dual ? 1 : 0});
        if (it != unknowns_.end()) {
            p.kind = Participant::Unknown;
            p.index = it->second;
        }
        return p;
    }

  private:
    const CorrTable& table_;
    const std::map<std::tuple<int, int, int>, int>& unknowns_;
};

/// A bilinear equation instance: sum of fac * P1 * P2 terms equal to zero.
struct RawEquation {
    struct Term {
        RatFunc fac;
        Participant a;
        Participant b;
    };
    std::vector<Term> terms;

    void add(RatFunc fac, Participant a, Participant b) { terms.push_back({std::move(fac), a, b}); }

    /// Every participant resolved inside the layer's scope?
    bool complete() const
    {
        for (const auto& t : terms)
            if (t.a.kind == Participant::Absent || t.b.kind == Participant::Absent)
                return false;
        return true;
    }
};

/// A compiled linear row: sum over unknowns of coeff * x = rhs.
struct LinearRow {
    std::map<int, EllValue> coeff;
    EllValue rhs = EllValue(0);
};

/// Compile a complete instance to a linear row.  The layer schedule
/// guarantees at most one unknown per product; two would make the system
/// nonlinear and indicate a broken schedule.
LinearRow compile(const RawEquation& eq)
{
    LinearRow row;
    for (const auto& t : eq.terms) {
        bool ua = t.a.kind == Participant::Unknown;
        bool ub = t.b.kind == Participant::Unknown;
        if (ua && ub)
            throw std::logic_error("layer solve: quadratic term in the linear pass");
        if (!ua && !ub) {
            row.rhs -= (*t.a.value * *t.b.value).mul_rat(t.fac);
            continue;
        }
        const Participant& unknown = ua ? t.a : t.b;
        const Participant& known = ua ? t.b : t.a;
        row.coeff[unknown.index] += known.value->mul_rat(t.fac);
    }
    for (auto it = row.coeff.begin(); it != row.coeff.end();)
        it = it->second.is_zero() ? row.coeff.erase(it) : std::next(it);
    return row;
}

/// The first dual-difference relation at (m, n): the dual column square
/// against the horizontal product of the plain values.
RawEquation dual_vertical_instance(const SiteResolver& at, int m, int n)
{
    RatFunc sv2 = RatFunc::var_v() * RatFunc::var_v();
    RawEquation eq;
    eq.add(RatFunc(1), at(m, n, true), at(m, n, true));
    eq.add(RatFunc(-1), at(m, n - 1, true), at(m, n + 1, true));
    eq.add(sv2, at(m, n, false), at(m, n, false));
    eq.add(-sv2, at(m - 1, n, false), at(m + 1, n, false));
    return eq;
}

/// The second dual-difference relation at (m, n): horizontal dual square
/// against the vertical plain product.
RawEquation dual_horizontal_instance(const SiteResolver& at, int m, int n)
{
    RatFunc sh2 = RatFunc::var_h() * RatFunc::var_h();
    RawEquation eq;
    eq.add(RatFunc(1), at(m, n, true), at(m, n, true));
    eq.add(RatFunc(-1), at(m - 1, n, true), at(m + 1, n, true));
    eq.add(sh2, at(m, n, false), at(m, n, false));
    eq.add(-sh2, at(m, n - 1, false), at(m, n + 1, false));
    return eq;
}

/// The bilinear cross relation on the plaquette with corner (m, n).
RawEquation cross_instance(const SiteResolver& at, int m, int n)
{
    RatFunc k = RatFunc::modulus();
    RawEquation eq;
    eq.add(RatFunc(1), at(m, n, true), at(m + 1, n + 1, true));
    eq.add(RatFunc(-1), at(m, n + 1, true), at(m + 1, n, true));
    eq.add(-k, at(m, n, false), at(m + 1, n + 1, false));
    eq.add(k, at(m, n + 1, false), at(m + 1, n, false));
    return eq;
}

// ---------------------------------------------------------------------------
// fraction-free elimination
//
// Naive elimination over the fraction field of the value ring swells
// catastrophically: denominators pile up multiplicatively and every cross
// multiplication pays for coefficient gcds on the bloated products.  The
// one-step fraction-free Gauss-Jordan scheme keeps every matrix entry a ring
// element (a minor of the original system), with each step's division by the
// previous pivot guaranteed exact.
// ---------------------------------------------------------------------------

struct Reduction {
    EllValue det = EllValue(1);        // final pivot: common denominator of the solution
    std::vector<EllValue> constant;    // per column: D * x = constant + direction * tau
    std::vector<EllValue> direction;   // nonempty when exactly one free column
    std::vector<int> free_cols;
};

/// Fraction-free Gauss-Jordan: after each pivot step every row r != pivot is
/// replaced by (p_cur * row_r - row_r[col] * row_pivot) / p_prev, a division
/// that is exact by the Sylvester minor identity.  On return rows holds
/// diag(D) on the pivot columns; the solution over common denominator D is
/// read off the transformed right-hand sides.
Reduction reduce_system(std::vector<std::vector<EllValue>>& rows, int ncols)
{
    const int nrows = static_cast<int>(rows.size());
    std::vector<bool> pivoted(nrows, false);
    std::vector<int> pivot_col, pivot_row;
    EllValue p_prev(1);
    Reduction out;

    for (int col = 0; col < ncols; col++) {
        int best = -1;
        size_t best_weight = 0;
        for (int r = 0; r < nrows; r++) {
            if (pivoted[r] || rows[r][col].is_zero())
                continue;
            // prefer sparse rows (little fill-in), then light pivot values
            size_t nnz = 0;
            for (int j = 0; j < ncols; j++)
                if (!rows[r][j].is_zero())
                    nnz++;
            size_t weight = (nnz << 20) + rows[r][col].terms().size();
            if (best < 0 || weight < best_weight) {
                best = r;
                best_weight = weight;
            }
        }
        if (best < 0) {
            out.free_cols.push_back(col);
            continue;
        }
        const EllValue p_cur = rows[best][col];
        const bool unit_prev = p_prev == EllValue(1);
        for (int r = 0; r < nrows; r++) {
            if (r == best)
                continue;
            const EllValue factor = rows[r][col];
            for (int j = 0; j <= ncols; j++) {
                if (j == col)
                    continue;
                EllValue& entry = rows[r][j];
                const EllValue& top = rows[best][j];
                if (entry.is_zero() && (factor.is_zero() || top.is_zero()))
                    continue;
                EllValue numer;
                if (factor.is_zero() || top.is_zero())
                    numer = p_cur * entry;
                else if (entry.is_zero())
                    numer = -(factor * top);
                else
                    numer = p_cur * entry - factor * top;
                entry = unit_prev ? std::move(numer) : exact_divide(numer, p_prev);
            }
            rows[r][col] = EllValue(0);
        }
        pivoted[best] = true;
        pivot_col.push_back(col);
        pivot_row.push_back(best);
        p_prev = p_cur;
    }

    for (int r = 0; r < nrows; r++)
        if (!pivoted[r] && !rows[r][ncols].is_zero())
            throw std::logic_error("layer solve: inconsistent equation system");

    out.det = p_prev;
    out.constant.assign(ncols, EllValue(0));
    for (size_t r = 0; r < pivot_col.size(); r++)
        out.constant[pivot_col[r]] = rows[pivot_row[r]][ncols];
    if (out.free_cols.size() == 1) {
        const int free = out.free_cols.front();
        out.direction.assign(ncols, EllValue(0));
        out.direction[free] = out.det;
        for (size_t r = 0; r < pivot_col.size(); r++)
            out.direction[pivot_col[r]] = -rows[pivot_row[r]][free];
    }
    return out;
}

// ---------------------------------------------------------------------------
// audit residuals (all participants known, reflected lookup)
// ---------------------------------------------------------------------------

const EllValue& lookup(const CorrTable& t, int m, int n, bool dual)
{
    m = std::abs(m);
    n = std::abs(n);
    return dual ? t.Cd(m, n) : t.C(m, n);
}

bool sites_present(const CorrTable& t, std::initializer_list<std::pair<int, int>> sites)
{
    for (auto [m, n] : sites)
        if (!t.has(std::abs(m), std::abs(n)))
            return false;
    return true;
}

EllValue dual_vertical_residual(const CorrTable& t, int m, int n)
{
    RatFunc sv2 = RatFunc::var_v() * RatFunc::var_v();
    return lookup(t, m, n, true) * lookup(t, m, n, true) -
           lookup(t, m, n - 1, true) * lookup(t, m, n + 1, true) +
           (lookup(t, m, n, false) * lookup(t, m, n, false) -
            lookup(t, m - 1, n, false) * lookup(t, m + 1, n, false))
               .mul_rat(sv2);
}

EllValue dual_horizontal_residual(const CorrTable& t, int m, int n)
{
    RatFunc sh2 = RatFunc::var_h() * RatFunc::var_h();
    return lookup(t, m, n, true) * lookup(t, m, n, true) -
           lookup(t, m - 1, n, true) * lookup(t, m + 1, n, true) +
           (lookup(t, m, n, false) * lookup(t, m, n, false) -
            lookup(t, m, n - 1, false) * lookup(t, m, n + 1, false))
               .mul_rat(sh2);
}

EllValue cross_residual(const CorrTable& t, int m, int n)
{
    RatFunc k = RatFunc::modulus();
    return lookup(t, m, n, true) * lookup(t, m + 1, n + 1, true) -
           lookup(t, m, n + 1, true) * lookup(t, m + 1, n, true) -
           (lookup(t, m, n, false) * lookup(t, m + 1, n + 1, false) -
            lookup(t, m, n + 1, false) * lookup(t, m + 1, n, false))
               .mul_rat(k);
}

}  // namespace

// ---------------------------------------------------------------------------
// CorrTable
// ---------------------------------------------------------------------------

std::string provenance_name(Provenance p)
{
    switch (p) {
        case Provenance::Seed:
            return "seed";
        case Provenance::Diagonal:
            return "diagonal";
        case Provenance::Solved:
            return "solved";
        case Provenance::Swapped:
            return "swapped";
        case Provenance::DualDerived:
            return "dual-derived";
    }
    throw std::logic_error("provenance_name: unknown tag");
}

CorrTable::CorrTable(int nmax) : nmax_(nmax)
{
    if (nmax < 1 || nmax > kDiagCorrelationBound)
        throw std::domain_error("correlation table: Nmax must lie in 1.." +
                                std::to_string(kDiagCorrelationBound));
}

bool CorrTable::has(int m, int n) const { return entries_.count({m, n}) != 0; }

const CorrEntry& CorrTable::entry(int m, int n) const
{
    auto it = entries_.find({m, n});
    if (it == entries_.end())
        throw std::out_of_range("correlation table: site (" + std::to_string(m) + "," +
                                std::to_string(n) + ") not filled");
    return it->second;
}

const EllValue& CorrTable::C(int m, int n) const { return entry(m, n).C; }

const EllValue& CorrTable::Cd(int m, int n) const { return entry(m, n).Cd; }

void CorrTable::set(int m, int n, EllValue c, EllValue cd, Provenance pc, Provenance pcd)
{
    if (m < 0 || n < 0 || m > nmax_ || n > nmax_)
        throw std::domain_error("correlation table: site outside 0..Nmax");
    if (has(m, n))
        throw std::logic_error("correlation table: site set twice");
    entries_[{m, n}] = CorrEntry{std::move(c), std::move(cd), pc, pcd};
}

// ---------------------------------------------------------------------------
// seeds
// ---------------------------------------------------------------------------

CorrTable seeds(int nmax)
{
    CorrTable t(nmax);
    const RatFunc sh = RatFunc::var_h();
    const RatFunc sv = RatFunc::var_v();

    t.set(0, 0, EllValue(1), EllValue(1), Provenance::Seed, Provenance::Seed);

    // nearest-neighbor pair: the factored third-kind form of C(0,1), its
    // axis swap, and the dual pair obtained from the boundary relations
    FieldElem pi_coeff = FieldElem::from_components(RatFunc(), FieldElem::qh() / sh, RatFunc(), RatFunc());
    FieldElem k_coeff = FieldElem::from_components(RatFunc(), RatFunc(1) / sh, RatFunc(), RatFunc());
    EllValue c01 = EllValue::P().mul_field(pi_coeff) - EllValue::K().mul_field(k_coeff);
    EllValue c10 = change_basis(swap_hv(c01), Basis::PI);
    EllValue cd10 = EllValue(FieldElem::u_h()) - c01.mul_rat(sh);
    EllValue cd01 = EllValue(FieldElem::u_v()) - c10.mul_rat(sv);
    t.set(0, 1, c01, cd01, Provenance::Seed, Provenance::Seed);
    t.set(1, 0, c10, cd10, Provenance::Swapped, Provenance::Seed);

    for (int n = 1; n <= nmax; n++) {
        EllValue c = diag_correlation(n, Regime::High);
        EllValue cd = duality_map(c);
        t.set(n, n, std::move(c), std::move(cd), Provenance::Diagonal, Provenance::DualDerived);
    }

    // cross-check the dual diagonals against their closed forms
    if (!(t.Cd(1, 1) == EllValue::E()))
        throw std::logic_error("seeds: dual diagonal (1,1) fails its closed form");
    if (nmax >= 2) {
        RatFunc k2 = RatFunc::modulus() * RatFunc::modulus();
        RatFunc m1 = k2 - RatFunc(1);
        EllValue e = EllValue::E(), kv = EllValue::K();
        EllValue expected = (e * e).mul_rat((RatFunc(5) * k2 - RatFunc(1)) / (RatFunc(3) * k2)) +
                            (e * kv).mul_rat(RatFunc(2) * m1 * m1 / (RatFunc(3) * k2)) -
                            (kv * kv).mul_rat(m1 * m1 / (RatFunc(3) * k2));
        if (!(t.Cd(2, 2) == expected))
            throw std::logic_error("seeds: dual diagonal (2,2) fails its closed form");
    }
    return t;
}

// ---------------------------------------------------------------------------
// layer filling
// ---------------------------------------------------------------------------

CorrTable fill_layer(int p, const CorrTable& table)
{
    const int layer = p + 1;
    const int nmax = table.nmax();
    if (p < 1)
        throw std::domain_error("fill_layer: the table must already hold layers 0 and 1");
    if (layer > 2 * nmax)
        throw std::domain_error("fill_layer: layer beyond the table square");

    CorrTable out = table;

    // interior unknowns of the new layer (diagonal sites are seeded)
    std::vector<std::tuple<int, int, bool>> unknowns;
    std::map<std::tuple<int, int, int>, int> index;
    const int mlo = std::max(1, layer - nmax);
    const int mhi = std::min(layer - 1, nmax);
    for (int m = mlo; m <= mhi; m++) {
        int n = layer - m;
        if (table.has(m, n))
            continue;
        for (int dual = 0; dual < 2; dual++) {
            index[{m, n, dual}] = static_cast<int>(unknowns.size());
            unknowns.emplace_back(m, n, dual != 0);
        }
    }

    if (!unknowns.empty()) {
        const int ncols = static_cast<int>(unknowns.size());
        SiteResolver at(table, index);

        std::vector<std::vector<EllValue>> rows;
        auto push = [&](const RawEquation& eq) {
            if (!eq.complete())
                return;
            LinearRow lin = compile(eq);
            if (lin.coeff.empty())
                return;
            std::vector<EllValue> row(ncols + 1, EllValue(0));
            for (auto& [idx, c] : lin.coeff)
                row[idx] = c;
            row[ncols] = lin.rhs;
            rows.push_back(std::move(row));
        };
        for (int m = 0; m <= layer - 1; m++) {
            int n = layer - 1 - m;
            if (!(m == 0 && n == 0)) {
                push(dual_vertical_instance(at, m, n));
                push(dual_horizontal_instance(at, m, n));
            }
        }
        for (int m = 0; m <= layer - 2; m++)
            push(cross_instance(at, m, layer - 2 - m));

        Reduction red = reduce_system(rows, ncols);

        const bool odd = layer % 2 == 1;
        if (red.free_cols.size() > 1 || (!odd && !red.free_cols.empty()))
            throw std::runtime_error("insufficient seeds at layer " + std::to_string(layer));

        std::vector<EllValue> values(ncols);
        if (odd && red.free_cols.size() == 1) {
            // Close the one-parameter family through the next diagonal: the
            // cross relation on the plaquette at (j, j) is quadratic in the
            // parameter and by construction tangent, so the double root is
            // rational in the coefficients.  With D x_i = a_i + b_i tau the
            // quadratic's coefficients are ring elements.
            const int j = (layer - 1) / 2;
            auto pos = [&](int m, int n, int dual) {
                auto it = index.find({m, n, dual});
                if (it == index.end())
                    throw std::logic_error("layer closure: site missing from the unknown list");
                return it->second;
            };
            const int ca = pos(j, j + 1, 0), cb = pos(j + 1, j, 0);
            const int da = pos(j, j + 1, 1), db = pos(j + 1, j, 1);
            const RatFunc kmod = RatFunc::modulus();
            const std::vector<EllValue>& a = red.constant;
            const std::vector<EllValue>& b = red.direction;
            const EllValue dd = red.det * red.det;
            EllValue k1 = table.Cd(j, j) * table.Cd(j + 1, j + 1);
            EllValue k2 = table.C(j, j) * table.C(j + 1, j + 1);
            EllValue c0 = dd * k1 - a[da] * a[db] - (dd * k2 - a[ca] * a[cb]).mul_rat(kmod);
            EllValue c1 = (a[ca] * b[cb] + b[ca] * a[cb]).mul_rat(kmod) - a[da] * b[db] -
                          b[da] * a[db];
            EllValue c2 = (b[ca] * b[cb]).mul_rat(kmod) - b[da] * b[db];

            // The double root is the free unknown itself, a ring element, so
            // it comes out of an exact division; tangency is then certified
            // exactly by the vanishing of the quadratic and its derivative
            // at the root (the derivative vanishes by the root's
            // construction).
            EllValue tau;
            bool linear = c2.is_zero();
            try {
                if (linear) {
                    if (c1.is_zero()) {
                        if (c0.is_zero())
                            throw std::runtime_error("insufficient seeds at layer " +
                                                     std::to_string(layer));
                        throw std::logic_error(
                            "layer closure: plaquette relation unsatisfiable at layer " +
                            std::to_string(layer));
                    }
                    tau = exact_divide(-c0, c1);
                } else {
                    tau = exact_divide(-c1, c2 + c2);
                }
            } catch (const ExactDivisionError&) {
                throw std::logic_error("layer closure: family is not tangent to the diagonal at layer " +
                                       std::to_string(layer));
            }
            if (!linear && !(c0 + tau * (c1 + tau * c2)).is_zero())
                throw std::logic_error("layer closure: family is not tangent to the diagonal at layer " +
                                       std::to_string(layer));

            for (int i = 0; i < ncols; i++)
                values[i] = exact_divide(a[i] + b[i] * tau, red.det);
        } else {
            for (int i = 0; i < ncols; i++)
                values[i] = red.det == EllValue(1) ? red.constant[i]
                                                  : exact_divide(red.constant[i], red.det);
        }

        for (int m = mlo; m <= mhi; m++) {
            int n = layer - m;
            if (table.has(m, n))
                continue;
            out.set(m, n, values[index.at({m, n, 0})], values[index.at({m, n, 1})],
                    Provenance::Solved, Provenance::Solved);
        }

        if (odd && red.free_cols.empty()) {
            // fully determined without the closure plaquette; that relation
            // must then hold on its own
            const int j = (layer - 1) / 2;
            if (!cross_residual(out, j, j).is_zero())
                throw std::logic_error("layer solve: plaquette relation fails at layer " +
                                       std::to_string(layer));
        }
    }

    // axis sites, from the difference relations centered one step inside;
    // they need the interior of this same layer, so they come last
    if (layer <= nmax) {
        const int l = layer;
        RatFunc sh2 = RatFunc::var_h() * RatFunc::var_h();
        RatFunc sv2 = RatFunc::var_v() * RatFunc::var_v();

        EllValue cd_top = exact_divide(
            out.Cd(0, l - 1) * out.Cd(0, l - 1) +
                (out.C(0, l - 1) * out.C(0, l - 1) - out.C(1, l - 1) * out.C(1, l - 1)).mul_rat(sv2),
            out.Cd(0, l - 2));
        EllValue c_top = exact_divide(
            out.Cd(0, l - 1) * out.Cd(0, l - 1) - out.Cd(1, l - 1) * out.Cd(1, l - 1) +
                (out.C(0, l - 1) * out.C(0, l - 1)).mul_rat(sh2),
            out.C(0, l - 2).mul_rat(sh2));
        out.set(0, l, std::move(c_top), std::move(cd_top), Provenance::Solved, Provenance::Solved);

        EllValue cd_right = exact_divide(
            out.Cd(l - 1, 0) * out.Cd(l - 1, 0) +
                (out.C(l - 1, 0) * out.C(l - 1, 0) - out.C(l - 1, 1) * out.C(l - 1, 1)).mul_rat(sh2),
            out.Cd(l - 2, 0));
        EllValue c_right = exact_divide(
            out.Cd(l - 1, 0) * out.Cd(l - 1, 0) - out.Cd(l - 1, 1) * out.Cd(l - 1, 1) +
                (out.C(l - 1, 0) * out.C(l - 1, 0)).mul_rat(sv2),
            out.C(l - 2, 0).mul_rat(sv2));
        out.set(l, 0, std::move(c_right), std::move(cd_right), Provenance::Solved,
                Provenance::Solved);
    }

    return out;
}

CorrTable fill(int nmax, int max_layer)
{
    if (max_layer < 0)
        max_layer = 2 * nmax;
    CorrTable t = seeds(nmax);
    for (int p = 1; p + 1 <= max_layer; p++)
        t = fill_layer(p, t);
    return t;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

AuditReport audit(const CorrTable& t)
{
    struct Job {
        int kind;  // 0 vertical, 1 horizontal, 2 cross, 3 duality, 4 involution,
                   // 5 dual boundary (1,0), 6 dual boundary (0,1)
        int m = 0;
        int n = 0;
    };
    std::vector<Job> jobs;
    const int nmax = t.nmax();

    for (int m = 0; m <= nmax; m++) {
        for (int n = 0; n <= nmax; n++) {
            if (!(m == 0 && n == 0)) {
                if (sites_present(t, {{m, n}, {m, n - 1}, {m, n + 1}, {m - 1, n}, {m + 1, n}}))
                    jobs.push_back({0, m, n});
                if (sites_present(t, {{m, n}, {m - 1, n}, {m + 1, n}, {m, n - 1}, {m, n + 1}}))
                    jobs.push_back({1, m, n});
            }
            if (sites_present(t, {{m, n}, {m + 1, n + 1}, {m, n + 1}, {m + 1, n}}))
                jobs.push_back({2, m, n});
        }
    }
    for (const auto& [key, entry] : t.entries()) {
        jobs.push_back({3, key.first, key.second});
        jobs.push_back({4, key.first, key.second});
    }
    if (t.has(1, 0) && t.has(0, 1)) {
        jobs.push_back({5, 1, 0});
        jobs.push_back({6, 0, 1});
    }

    std::vector<AuditCheck> checks(jobs.size());
    auto run = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++) {
            const Job& job = jobs[i];
            AuditCheck& chk = checks[i];
            chk.m = job.m;
            chk.n = job.n;
            switch (job.kind) {
                case 0:
                    chk.relation = "dual_vertical_quadratic";
                    chk.residual = dual_vertical_residual(t, job.m, job.n);
                    break;
                case 1:
                    chk.relation = "dual_horizontal_quadratic";
                    chk.residual = dual_horizontal_residual(t, job.m, job.n);
                    break;
                case 2:
                    chk.relation = "cross_bilinear";
                    chk.residual = cross_residual(t, job.m, job.n);
                    break;
                case 3:
                    chk.relation = "duality";
                    chk.residual = duality_map(t.C(job.m, job.n)) - t.Cd(job.m, job.n);
                    break;
                case 4:
                    chk.relation = "duality_involution";
                    chk.residual = duality_map(t.Cd(job.m, job.n)) - t.C(job.m, job.n);
                    break;
                case 5:
                    chk.relation = "nearest_neighbor_dual_h";
                    chk.residual = t.Cd(1, 0) - EllValue(FieldElem::u_h()) +
                                   t.C(0, 1).mul_rat(RatFunc::var_h());
                    break;
                case 6:
                    chk.relation = "nearest_neighbor_dual_v";
                    chk.residual = t.Cd(0, 1) - EllValue(FieldElem::u_v()) +
                                   t.C(1, 0).mul_rat(RatFunc::var_v());
                    break;
            }
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    size_t nthreads = std::min<size_t>(hw == 0 ? 1 : hw, 4);
    nthreads = std::min(nthreads, jobs.size() == 0 ? size_t{1} : jobs.size());
    if (nthreads <= 1) {
        run(0, jobs.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (size_t k = 0; k < nthreads; k++) {
            size_t lo = k * chunk, hi = std::min(jobs.size(), lo + chunk);
            if (lo < hi)
                pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    AuditReport report;
    report.checks = std::move(checks);
    for (const auto& chk : report.checks)
        if (!chk.ok())
            report.failures++;
    return report;
}

// ---------------------------------------------------------------------------
// ordered regime
// ---------------------------------------------------------------------------

EllValue low_temp(int m, int n, const CorrTable& table) { return replacement(table.Cd(m, n)); }

}  // namespace ellcorr
