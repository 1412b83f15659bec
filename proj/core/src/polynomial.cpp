#include "charvar/polynomial.hpp"
#include "charvar/quad.hpp"

#include <algorithm>
#include <sstream>

namespace charvar {

namespace {

bool monomial_uses(const Monomial& m, std::uint32_t var) {
    for (const auto& f : m.factors())
        if (f.var == var) return true;
    return false;
}

} // namespace

void Polynomial::add_term(TermMap& terms, const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Polynomial Polynomial::constant(VarTablePtr table, const mpz_class& c) {
    Polynomial p(std::move(table));
    add_term(p.terms_, Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(const VarTablePtr& table, std::string_view name, std::int32_t exp) {
    std::size_t idx = table->index_of(name);
    if (exp < 0 && !table->laurent(idx))
        throw DomainViolationError("negative exponent on non-Laurent variable: " + std::string(name));
    Polynomial p(table);
    add_term(p.terms_, Monomial::var(static_cast<std::uint32_t>(idx), exp), 1);
    return p;
}

Polynomial Polynomial::from_terms(VarTablePtr table, TermMap terms) {
    Polynomial p(std::move(table));
    for (auto& [m, c] : terms) add_term(p.terms_, m, c);
    p.check_exponent_validity();
    return p;
}

void Polynomial::check_exponent_validity() const {
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) {
            if (f.exp < 0 && !table_->laurent(f.var))
                throw DomainViolationError("negative exponent on non-Laurent variable: " +
                                           table_->name(f.var));
        }
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

const std::pair<const Monomial, mpz_class>& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainViolationError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.total_degree() > d) d = m.total_degree();
        first = false;
    }
    return d;
}

std::int32_t Polynomial::max_exponent(std::string_view var) const {
    auto idx = table_->find(var);
    if (!idx) return 0;
    std::int32_t e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(static_cast<std::uint32_t>(*idx)));
    return e;
}

std::int32_t Polynomial::min_exponent(std::string_view var) const {
    auto idx = table_->find(var);
    if (!idx || terms_.empty()) return 0;
    bool first = true;
    std::int32_t e = 0;
    for (const auto& [m, c] : terms_) {
        std::int32_t v = m.exponent(static_cast<std::uint32_t>(*idx));
        if (first || v < e) e = v;
        first = false;
    }
    return e;
}

bool Polynomial::uses(std::string_view var) const {
    auto idx = table_->find(var);
    if (!idx) return false;
    for (const auto& [m, c] : terms_)
        if (monomial_uses(m, static_cast<std::uint32_t>(*idx))) return true;
    return false;
}

std::pair<Polynomial, Polynomial> Polynomial::coerce(const Polynomial& a, const Polynomial& b) {
    if (a.table_ == b.table_ || a.table_->same_as(*b.table_)) return {a, b};
    VarTablePtr merged = VarTable::merge(a.table_, b.table_);
    return {a.remap(merged), b.remap(merged)};
}

Polynomial Polynomial::operator-() const {
    Polynomial out(table_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    auto [a, b] = coerce(*this, o);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) add_term(out.terms_, m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    auto [a, b] = coerce(*this, o);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) add_term(out.terms_, m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    auto [a, b] = coerce(*this, o);
    Polynomial out(a.table_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    // Accumulating into the ordered map keeps results canonical as they form.
    mpz_class prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            add_term(out.terms_, ma * mb, prod);
        }
    }
    return out;
}

Polynomial Polynomial::operator+(long c) const { return *this + Polynomial::constant(table_, c); }
Polynomial Polynomial::operator-(long c) const { return *this - Polynomial::constant(table_, c); }

Polynomial Polynomial::operator*(const mpz_class& c) const {
    Polynomial out(table_);
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

Polynomial operator*(long c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = Polynomial::constant(table_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = (n >>= 1) ? base * base : base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    auto [a, b] = coerce(*this, o);
    return a.terms_ == b.terms_;
}

Monomial Polynomial::laurent_normalizer() const {
    // True minimum exponent per used Laurent variable, counting terms where
    // the variable is absent as exponent zero.
    std::map<std::uint32_t, std::int32_t> mins;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors())
            if (table_->laurent(f.var)) mins.emplace(f.var, f.exp);
    for (const auto& [m, c] : terms_) {
        for (auto& [v, e] : mins) e = std::min(e, m.exponent(v));
    }
    std::vector<Monomial::VarPow> factors;
    for (const auto& [v, e] : mins)
        if (e != 0) factors.push_back({v, -e});
    return Monomial(std::move(factors));
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
    Polynomial out(table_);
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
    return out;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [p0, d0] = coerce(*this, divisor);
    if (d0.is_zero()) throw DomainViolationError("exact_div: division by zero polynomial");
    if (p0.is_zero()) return Polynomial(p0.table_);

    // Normalize away Laurent units so the ordinary division algorithm applies.
    Monomial shift_p = p0.laurent_normalizer();
    Monomial shift_d = d0.laurent_normalizer();
    Polynomial rem = p0.mul_monomial(shift_p);
    Polynomial den = d0.mul_monomial(shift_d);

    const auto& dlt = den.leading_term();
    Polynomial quotient(p0.table_);
    mpz_class q, r;
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        if (!rlt.first.divisible_by(dlt.first))
            throw NotDivisibleError("exact_div: monomial not divisible");
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlt.second.get_mpz_t(), dlt.second.get_mpz_t());
        if (r != 0) throw NotDivisibleError("exact_div: coefficient not divisible");
        Monomial qm = rlt.first.divide_by(dlt.first);
        Polynomial term(p0.table_);
        term.terms_.emplace(qm, q);
        quotient += term;
        rem -= term * den;
    }
    // Restore the unit shift: quotient * shift_d / shift_p.
    return quotient.mul_monomial(shift_d.divide_by(shift_p));
}

Polynomial Polynomial::sqrt_exact() const {
    if (is_zero()) return *this;
    Monomial shift = laurent_normalizer();
    for (const auto& f : shift.factors()) {
        if (f.exp % 2 != 0) throw NotASquareError("sqrt: odd Laurent valuation");
    }
    Polynomial p = mul_monomial(shift);

    const auto& lt = p.leading_term();
    for (const auto& f : lt.first.factors())
        if (f.exp % 2 != 0) throw NotASquareError("sqrt: odd exponent in leading monomial");
    if (lt.second < 0) throw NotASquareError("sqrt: negative leading coefficient");
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), lt.second.get_mpz_t());
    if (rem != 0) throw NotASquareError("sqrt: leading coefficient is not a perfect square");

    Monomial half;
    {
        std::vector<Monomial::VarPow> factors;
        for (const auto& f : lt.first.factors()) factors.push_back({f.var, f.exp / 2});
        half = Monomial(std::move(factors));
    }
    Polynomial q(table_);
    q.terms_.emplace(half, root);

    Polynomial residual = p - q * q;
    mpz_class two_lc = 2 * root;
    mpz_class c, r;
    Monomial prev_lt = lt.first;
    while (!residual.is_zero()) {
        const auto& rlt = residual.leading_term();
        if (!GrlexLess{}(rlt.first, prev_lt))
            throw NotASquareError("sqrt: residual does not decrease");
        prev_lt = rlt.first;
        if (!rlt.first.divisible_by(half))
            throw NotASquareError("sqrt: residual term not reachable");
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rlt.second.get_mpz_t(), two_lc.get_mpz_t());
        if (r != 0) throw NotASquareError("sqrt: coefficient not divisible");
        Polynomial term(table_);
        term.terms_.emplace(rlt.first.divide_by(half), c);
        // (q + term)^2 = q^2 + 2 q term + term^2
        residual -= q * term * 2 + term * term;
        q += term;
    }
    // Undo the Laurent shift by its half.
    std::vector<Monomial::VarPow> unshift;
    for (const auto& f : shift.factors()) unshift.push_back({f.var, -f.exp / 2});
    Polynomial out = q.mul_monomial(Monomial(std::move(unshift)));
    if (out.leading_term().second < 0) out = -out;
    return out;
}

Polynomial Polynomial::subst(std::string_view var, const Polynomial& value) const {
    auto idx_opt = table_->find(var);
    if (!idx_opt || !uses(var)) {
        // Nothing to substitute; still merge tables so callers land in the joint ring.
        return remap(VarTable::merge(table_, value.table()));
    }
    std::uint32_t idx = static_cast<std::uint32_t>(*idx_opt);

    VarTablePtr joint = VarTable::merge(table_, value.table());
    Polynomial val = value.remap(joint);

    std::int32_t min_e = min_exponent(var);
    Polynomial val_inv(joint);
    if (min_e < 0) {
        // Inverse needed: only unit (single-term, coefficient +-1) replacements qualify.
        if (val.term_count() != 1)
            throw DomainViolationError("subst: negative exponent needs an invertible replacement");
        const auto& [m, c] = *val.terms().begin();
        if (c != 1 && c != -1)
            throw DomainViolationError("subst: negative exponent needs a unit replacement");
        val_inv = Polynomial(joint);
        val_inv.terms_.emplace(m.pow(-1), c);
    }

    // Group terms by the exponent of var and use cached powers of the value.
    std::map<std::int32_t, Polynomial> powers;
    auto power_of = [&](std::int32_t e) -> const Polynomial& {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        Polynomial p(joint);
        if (e == 0) {
            p = Polynomial::constant(joint, 1);
        } else if (e > 0) {
            p = val.pow(static_cast<unsigned>(e));
        } else {
            p = val_inv.pow(static_cast<unsigned>(-e));
        }
        return powers.emplace(e, std::move(p)).first->second;
    };

    Polynomial out(joint);
    for (const auto& [m, c] : terms_) {
        std::int32_t e = m.exponent(idx);
        Monomial rest = m.divide_by(Monomial::var(idx, e));
        Polynomial base(joint);
        // Remap the residual monomial into the joint table.
        {
            std::vector<Monomial::VarPow> factors;
            for (const auto& f : rest.factors()) {
                std::uint32_t tgt = static_cast<std::uint32_t>(joint->index_of(table_->name(f.var)));
                factors.push_back({tgt, f.exp});
            }
            std::sort(factors.begin(), factors.end(),
                      [](const auto& a, const auto& b) { return a.var < b.var; });
            base.terms_.emplace(Monomial(std::move(factors)), c);
        }
        out += base * power_of(e);
    }
    return out;
}

Polynomial Polynomial::subst_invert(std::string_view var) const {
    auto idx_opt = table_->find(var);
    if (!idx_opt) return *this;
    std::uint32_t idx = static_cast<std::uint32_t>(*idx_opt);
    if (!table_->laurent(idx) && max_exponent(var) > 0)
        throw DomainViolationError("subst_invert: variable is not Laurent: " + std::string(var));
    Polynomial out(table_);
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::VarPow> factors;
        for (const auto& f : m.factors()) factors.push_back({f.var, f.var == idx ? -f.exp : f.exp});
        out.terms_.emplace(Monomial(std::move(factors)), c);
    }
    return out;
}

Polynomial Polynomial::derivative(std::string_view var) const {
    auto idx_opt = table_->find(var);
    Polynomial out(table_);
    if (!idx_opt) return out;
    std::uint32_t idx = static_cast<std::uint32_t>(*idx_opt);
    for (const auto& [m, c] : terms_) {
        std::int32_t e = m.exponent(idx);
        if (e == 0) continue;
        Monomial dm = m.divide_by(Monomial::var(idx, 1));
        add_term(out.terms_, dm, c * e);
    }
    return out;
}

Polynomial Polynomial::remap(const VarTablePtr& target,
                             const std::vector<std::pair<std::string, std::string>>& renames) const {
    if (renames.empty() && (table_ == target || table_->same_as(*target))) return *this;
    auto mapped_name = [&](const std::string& name) -> const std::string& {
        for (const auto& [from, to] : renames)
            if (from == name) return to;
        return name;
    };
    std::vector<std::int64_t> index_map(table_->size(), -1);
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::VarPow> factors;
        factors.reserve(m.factors().size());
        for (const auto& f : m.factors()) {
            if (index_map[f.var] < 0) {
                const std::string& name = mapped_name(table_->name(f.var));
                index_map[f.var] = static_cast<std::int64_t>(target->index_of(name));
            }
            std::uint32_t tgt = static_cast<std::uint32_t>(index_map[f.var]);
            if (f.exp < 0 && !target->laurent(tgt))
                throw DomainViolationError("remap: negative exponent on non-Laurent target variable: " +
                                           target->name(tgt));
            factors.push_back({tgt, f.exp});
        }
        std::sort(factors.begin(), factors.end(),
                  [](const auto& a, const auto& b) { return a.var < b.var; });
        out.terms_.emplace(Monomial(std::move(factors)), c);
    }
    return out;
}

namespace {

template <typename Real>
std::complex<Real> eval_impl(const VarTable& table, const Polynomial::TermMap& terms,
                             const std::map<std::string, std::complex<Real>>& assignment) {
    std::vector<std::complex<Real>> values(table.size());
    std::vector<bool> have(table.size(), false);
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto it = assignment.find(table.name(i));
        if (it != assignment.end()) {
            values[i] = it->second;
            have[i] = true;
        }
    }
    std::complex<Real> acc = 0;
    for (const auto& [m, c] : terms) {
        std::complex<Real> term = static_cast<Real>(c.get_d());
        for (const auto& f : m.factors()) {
            if (!have[f.var])
                throw MissingVariableError("eval: missing value for variable " + table.name(f.var));
            std::complex<Real> v = values[f.var];
            if (f.exp < 0 && v == std::complex<Real>(0, 0))
                throw ZeroAtLaurentVariableError("eval: Laurent variable " + table.name(f.var) +
                                                 " assigned zero");
            std::complex<Real> p = 1;
            std::complex<Real> base = v;
            for (std::int32_t e = f.exp > 0 ? f.exp : -f.exp; e > 0; e >>= 1) {
                if (e & 1) p *= base;
                base *= base;
            }
            term *= (f.exp > 0) ? p : std::complex<Real>(1, 0) / p;
        }
        acc += term;
    }
    return acc;
}

} // namespace

std::complex<double> Polynomial::eval(const std::map<std::string, std::complex<double>>& assignment) const {
    return eval_impl<double>(*table_, terms_, assignment);
}

std::complex<long double> Polynomial::eval_ld(
    const std::map<std::string, std::complex<long double>>& assignment) const {
    return eval_impl<long double>(*table_, terms_, assignment);
}

std::complex<double> Polynomial::eval_quad(
    const std::map<std::string, std::complex<double>>& assignment) const {
    std::vector<QuadComplex> values(table_->size());
    std::vector<bool> have(table_->size(), false);
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = assignment.find(table_->name(i));
        if (it != assignment.end()) {
            values[i] = QuadComplex(it->second);
            have[i] = true;
        }
    }
    QuadComplex one{1, 0};
    QuadComplex acc;
    for (const auto& [m, c] : terms_) {
        QuadComplex term{static_cast<__float128>(c.get_d()), 0};
        for (const auto& f : m.factors()) {
            if (!have[f.var])
                throw MissingVariableError("eval: missing value for variable " + table_->name(f.var));
            QuadComplex v = values[f.var];
            if (f.exp < 0 && v.re == 0 && v.im == 0)
                throw ZeroAtLaurentVariableError("eval: Laurent variable " + table_->name(f.var) +
                                                 " assigned zero");
            QuadComplex p = one;
            QuadComplex base = v;
            for (std::int32_t e = f.exp > 0 ? f.exp : -f.exp; e > 0; e >>= 1) {
                if (e & 1) p = p * base;
                base = base * base;
            }
            term = (f.exp > 0) ? term * p : term / p;
        }
        acc += term;
    }
    return acc.to_double();
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first: iterate in descending grlex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool coef_printed = false;
        if (abs_c != 1 || m.is_one()) {
            os << abs_c.get_str();
            coef_printed = true;
        }
        bool any_var = false;
        for (const auto& f : m.factors()) {
            if (coef_printed || any_var) os << "*";
            os << table_->name(f.var);
            if (f.exp != 1) os << "^" << f.exp;
            any_var = true;
        }
    }
    return os.str();
}

} // namespace charvar
