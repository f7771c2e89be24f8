/**
 * @file ellvalue.cpp
 * @brief Ring arithmetic, exact division, basis change, derivative closure,
 *        duality, swap, and isotropic reduction for EllValue.
 */
#include "ellcorr/ellvalue.hpp"

#include <sstream>
#include <vector>

namespace ellcorr {

namespace {

RatFunc rf_k() { return RatFunc::modulus(); }

RatFunc rf_one_minus_k2()
{
    return RatFunc(1) - rf_k() * rf_k();
}

// 2 s_h s_v (1+s_h^2)(1+s_v^2) as a rational value
RatFunc rf_two_k_qv_qh()
{
    return RatFunc(2) * rf_k() * FieldElem::qv() * FieldElem::qh();
}

}  // namespace

EllValue::EllValue(long n, Basis basis, Regime regime) : basis_(basis), regime_(regime)
{
    if (n != 0) terms_[EllMonomial(0, 0, 0)] = FieldElem(n);
}

EllValue::EllValue(FieldElem c, Basis basis, Regime regime) : basis_(basis), regime_(regime)
{
    if (!c.is_zero()) terms_[EllMonomial(0, 0, 0)] = std::move(c);
}

EllValue EllValue::monomial(FieldElem c, int i, int j, int l, Basis basis, Regime regime)
{
    if (i < 0 || j < 0 || l < 0) throw std::domain_error("EllValue: negative exponent");
    EllValue v;
    v.basis_ = basis;
    v.regime_ = regime;
    if (!c.is_zero()) v.terms_[EllMonomial(i, j, l)] = std::move(c);
    return v;
}

EllValue EllValue::E(Basis basis, Regime regime)
{
    return monomial(FieldElem(1), 1, 0, 0, basis, regime);
}

EllValue EllValue::K(Basis basis, Regime regime)
{
    return monomial(FieldElem(1), 0, 1, 0, basis, regime);
}

EllValue EllValue::P(Basis basis, Regime regime)
{
    return monomial(FieldElem(1), 0, 0, 1, basis, regime);
}

FieldElem EllValue::coeff(int i, int j, int l) const
{
    auto it = terms_.find(EllMonomial(i, j, l));
    return it == terms_.end() ? FieldElem() : it->second;
}

int EllValue::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int EllValue::max_pi_degree() const
{
    if (terms_.empty()) return -1;
    return terms_.begin()->first.l;  // leading term has the highest l
}

bool EllValue::is_homogeneous(int deg) const
{
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != deg) return false;
    return true;
}

int EllValue::homogeneous_degree() const
{
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.total_degree();
    return is_homogeneous(d) ? d : -1;
}

EllValue EllValue::pi_coefficient(int l) const
{
    EllValue out;
    out.basis_ = basis_;
    out.regime_ = regime_;
    for (const auto& [m, c] : terms_)
        if (m.l == l) out.terms_[EllMonomial(m.i, m.j, 0)] = c;
    return out;
}

bool EllValue::operator==(const EllValue& o) const
{
    if (terms_.empty() && o.terms_.empty()) return true;
    if (basis_ != o.basis_ || regime_ != o.regime_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

void EllValue::add_term(const EllMonomial& m, const FieldElem& c)
{
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void EllValue::check_compatible(const EllValue& a, const EllValue& b)
{
    if (a.terms_.empty() || b.terms_.empty()) return;
    if (a.basis_ != b.basis_ || b.regime_ != a.regime_)
        throw std::domain_error("EllValue: basis or regime mismatch");
}

EllValue EllValue::operator-() const
{
    EllValue out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

EllValue EllValue::operator+(const EllValue& o) const
{
    check_compatible(*this, o);
    EllValue out = terms_.empty() ? o : *this;
    if (terms_.empty()) return out;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

EllValue EllValue::operator-(const EllValue& o) const
{
    return *this + (-o);
}

EllValue EllValue::operator*(const EllValue& o) const
{
    check_compatible(*this, o);
    EllValue out;
    out.basis_ = terms_.empty() ? o.basis_ : basis_;
    out.regime_ = terms_.empty() ? o.regime_ : regime_;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(EllMonomial(ma.i + mb.i, ma.j + mb.j, ma.l + mb.l), ca * cb);
    return out;
}

EllValue EllValue::mul_field(const FieldElem& c) const
{
    if (c.is_zero()) {
        EllValue z;
        z.basis_ = basis_;
        z.regime_ = regime_;
        return z;
    }
    EllValue out = *this;
    for (auto& [m, t] : out.terms_) t *= c;
    return out;
}

EllValue EllValue::mul_rat(const RatFunc& r) const
{
    return mul_field(FieldElem(r));
}

EllValue EllValue::mul_monomial(int di, int dj, int dl) const
{
    EllValue out;
    out.basis_ = basis_;
    out.regime_ = regime_;
    for (const auto& [m, c] : terms_) {
        EllMonomial s(m.i + di, m.j + dj, m.l + dl);
        if (s.i < 0 || s.j < 0 || s.l < 0)
            throw std::domain_error("EllValue: monomial shift below zero");
        out.terms_[s] = c;
    }
    return out;
}

ExactDivisionError::ExactDivisionError(const std::string& msg, EllValue remainder)
    : std::domain_error(msg), remainder_(std::make_shared<EllValue>(std::move(remainder)))
{
}

bool try_exact_divide(const EllValue& num, const EllValue& den, EllValue& quotient)
{
    if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (num.is_zero()) {
        quotient = num;
        return true;
    }
    if (num.basis() != den.basis() || num.regime() != den.regime())
        throw std::domain_error("exact_divide: basis or regime mismatch");
    const auto& [dm, dc] = *den.terms().begin();
    FieldElem dc_inv = dc.inv();
    EllValue q;
    EllValue r = num;
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        if (rm.i < dm.i || rm.j < dm.j || rm.l < dm.l) return false;
        EllValue qt = EllValue::monomial(rc * dc_inv, rm.i - dm.i, rm.j - dm.j, rm.l - dm.l,
                                         num.basis(), num.regime());
        q += qt;
        r -= qt * den;
    }
    quotient = std::move(q);
    return true;
}

EllValue exact_divide(const EllValue& num, const EllValue& den)
{
    if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (num.is_zero()) return num;
    if (num.basis() != den.basis() || num.regime() != den.regime())
        throw std::domain_error("exact_divide: basis or regime mismatch");
    const auto& [dm, dc] = *den.terms().begin();
    FieldElem dc_inv = dc.inv();
    EllValue q;
    EllValue r = num;
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        if (rm.i < dm.i || rm.j < dm.j || rm.l < dm.l)
            throw ExactDivisionError("exact_divide: nonzero remainder", r);
        EllValue qt = EllValue::monomial(rc * dc_inv, rm.i - dm.i, rm.j - dm.j, rm.l - dm.l,
                                         num.basis(), num.regime());
        q += qt;
        r -= qt * den;
    }
    return q;
}

EllValue change_basis(const EllValue& a, Basis to)
{
    if (a.basis() == to || a.is_zero()) {
        EllValue out = a;
        if (out.is_zero()) out = EllValue(0, to, a.regime());
        return out;
    }
    // P + P' = K + 1/w, where 1/w carries an extra k factor in the low regime
    // (the replacement image of the high-temperature identity).
    RatFunc c11 = RatFunc(1) / (FieldElem::qv() * FieldElem::qh());
    if (a.regime() == Regime::Low) c11 *= rf_k();
    FieldElem invw = FieldElem::from_components(RatFunc(), RatFunc(), RatFunc(), c11);
    EllValue base = EllValue::K(to, a.regime()) + EllValue(invw, to, a.regime()) -
                    EllValue::P(to, a.regime());
    std::vector<EllValue> pw{EllValue(1, to, a.regime())};
    EllValue out(0, to, a.regime());
    for (const auto& [m, c] : a.terms()) {
        while ((int)pw.size() <= m.l) pw.push_back(pw.back() * base);
        out += pw[m.l].mul_field(c).mul_monomial(m.i, m.j, 0);
    }
    return out;
}

namespace {

// d/dk closure in the high-temperature PI basis; each entry is an exact
// degree-1 value, so differentiation is a ring operation.
const EllValue& closure_dE()
{
    static const EllValue v = EllValue::E().mul_rat(RatFunc(1) / rf_k()) -
                              EllValue::K().mul_rat(RatFunc(1) / rf_k());
    return v;
}

const EllValue& closure_dK()
{
    static const EllValue v =
        EllValue::E().mul_rat(RatFunc(1) / (rf_k() * rf_one_minus_k2())) -
        EllValue::K().mul_rat(RatFunc(1) / rf_k());
    return v;
}

const EllValue& closure_dPi()
{
    static const EllValue v = [] {
        // w'/w with w = u_v u_h: rational because w^2 is
        RatFunc wp_w = RatFunc(IntPoly::monomial(1, 2, 0) + IntPoly::monomial(1, 0, 2) +
                               IntPoly::monomial(2, 2, 2)) /
                       rf_two_k_qv_qh();
        RatFunc cK = RatFunc(-1) / (RatFunc(2) * rf_k() * FieldElem::qh());
        RatFunc cE = RatFunc(IntPoly::monomial(1, 2, 2) + IntPoly::monomial(2, 0, 2) +
                             IntPoly(1)) /
                     (rf_two_k_qv_qh() * rf_one_minus_k2());
        return EllValue::P().mul_rat(-wp_w) + EllValue::K().mul_rat(cK) +
               EllValue::E().mul_rat(cE);
    }();
    return v;
}

}  // namespace

EllValue derivative_k(const EllValue& a)
{
    if (a.regime() == Regime::Low)
        throw std::domain_error("derivative_k: low-temperature values are not differentiated");
    if (a.is_zero()) return a;
    if (a.basis() == Basis::PI_P) return swap_hv(derivative_k(swap_hv(a)));
    EllValue out;
    for (const auto& [m, c] : a.terms()) {
        FieldElem dc = c.derivative_k();
        if (!dc.is_zero()) out += EllValue::monomial(dc, m.i, m.j, m.l);
        if (m.i > 0)
            out += closure_dE().mul_field(c.mul_rat(RatFunc(m.i))).mul_monomial(m.i - 1, m.j, m.l);
        if (m.j > 0)
            out += closure_dK().mul_field(c.mul_rat(RatFunc(m.j))).mul_monomial(m.i, m.j - 1, m.l);
        if (m.l > 0)
            out += closure_dPi().mul_field(c.mul_rat(RatFunc(m.l))).mul_monomial(m.i, m.j, m.l - 1);
    }
    return out;
}

EllValue replacement(const EllValue& a)
{
    if (a.regime() == Regime::Low)
        throw std::domain_error("replacement: defined on high-temperature values");
    RatFunc sh_img = RatFunc(IntPoly(1), IntPoly::var_v());
    RatFunc sv_img = RatFunc(IntPoly(1), IntPoly::var_h());
    EllValue out(0, a.basis(), Regime::Low);
    for (const auto& [m, c] : a.terms())
        out += EllValue::monomial(c.substitute(sh_img, sv_img), m.i, m.j, m.l, a.basis(),
                                  Regime::Low);
    return out;
}

EllValue duality_map(const EllValue& a)
{
    if (a.regime() == Regime::Low)
        throw std::domain_error("duality_map: defined on high-temperature values");
    RatFunc sh_img = RatFunc(IntPoly(1), IntPoly::var_v());
    RatFunc sv_img = RatFunc(IntPoly(1), IntPoly::var_h());
    RatFunc k = rf_k();
    EllValue dualE = EllValue::E(a.basis()).mul_rat(RatFunc(1) / k) +
                     EllValue::K(a.basis()).mul_rat((k * k - RatFunc(1)) / k);
    std::vector<EllValue> pw{EllValue(1, a.basis())};
    EllValue out(0, a.basis());
    std::vector<RatFunc> kpow{RatFunc(1)};
    for (const auto& [m, c] : a.terms()) {
        while ((int)pw.size() <= m.i) pw.push_back(pw.back() * dualE);
        while ((int)kpow.size() <= m.j + m.l) kpow.push_back(kpow.back() * k);
        FieldElem cd = c.substitute(sh_img, sv_img).mul_rat(kpow[m.j + m.l]);
        out += pw[m.i].mul_field(cd).mul_monomial(0, m.j, m.l);
    }
    return out;
}

EllValue swap_hv(const EllValue& a)
{
    EllValue out;
    out.basis_ = a.basis_ == Basis::PI ? Basis::PI_P : Basis::PI;
    out.regime_ = a.regime_;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = c.swap_vars();
    return out;
}

EllValue isotropic_reduce(const EllValue& a)
{
    if (a.regime() == Regime::Low)
        throw std::domain_error("isotropic_reduce: defined on high-temperature values");
    EllValue v = a.basis() == Basis::PI_P ? change_basis(a, Basis::PI) : a;
    RatFunc s = RatFunc::var_h();
    // P(-s^2, s^2) = K/2 + 1/(2(1+s^2)) on the isotropic line
    EllValue base = EllValue::K().mul_rat(RatFunc(1, 2)) +
                    EllValue(FieldElem(RatFunc(1) / (RatFunc(2) * FieldElem::qh())));
    std::vector<EllValue> pw{EllValue(1)};
    EllValue out;
    for (const auto& [m, c] : v.terms()) {
        while ((int)pw.size() <= m.l) pw.push_back(pw.back() * base);
        FieldElem ciso = c.substitute(s, s);
        out += pw[m.l].mul_field(ciso).mul_monomial(m.i, m.j, 0);
    }
    return out;
}

namespace {

std::string symbol_str(const EllMonomial& m, Basis basis, bool latexmode)
{
    std::ostringstream os;
    auto emit = [&](const char* plain, const char* tex, int e) {
        if (e == 0) return;
        os << (latexmode ? tex : plain);
        if (e > 1) {
            if (latexmode)
                os << "^{" << e << "}";
            else
                os << "^" << e;
        }
        os << (latexmode ? " " : "");
    };
    emit("E", "\\tilde{E}", m.i);
    if (m.i && (m.j || m.l) && !latexmode) os << "*";
    emit("K", "\\tilde{K}", m.j);
    if (m.j && m.l && !latexmode) os << "*";
    if (basis == Basis::PI)
        emit("PI", "\\tilde{\\Pi}", m.l);
    else
        emit("PIp", "\\tilde{\\Pi}'", m.l);
    return os.str();
}

}  // namespace

std::string EllValue::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    if (regime_ == Regime::Low) os << "low:";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        std::string sym = symbol_str(m, basis_, false);
        if (!sym.empty()) os << "*" << sym;
    }
    return os.str();
}

std::string EllValue::latex() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << c.latex() << "\\right) " << symbol_str(m, basis_, true);
    }
    return os.str();
}

}  // namespace ellcorr
