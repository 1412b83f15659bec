#pragma once

#include <cstdint>
#include <vector>

namespace charvar {

/// Sparse exponent vector: (variable index, nonzero exponent) pairs sorted by
/// variable index. Negative exponents are only ever stored for Laurent
/// variables; the owning Polynomial enforces that.
class Monomial {
public:
    struct VarPow {
        std::uint32_t var;
        std::int32_t exp;
        bool operator==(const VarPow&) const = default;
    };

    Monomial() = default;
    explicit Monomial(std::vector<VarPow> factors) : factors_(std::move(factors)) {}

    static Monomial one() { return Monomial(); }
    static Monomial var(std::uint32_t index, std::int32_t exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.push_back({index, exp});
        return m;
    }

    bool is_one() const { return factors_.empty(); }
    const std::vector<VarPow>& factors() const { return factors_; }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (const auto& f : factors_) d += f.exp;
        return d;
    }

    std::int32_t exponent(std::uint32_t var) const {
        for (const auto& f : factors_)
            if (f.var == var) return f.exp;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + o.factors_.size());
        std::size_t i = 0, j = 0;
        while (i < factors_.size() || j < o.factors_.size()) {
            if (j == o.factors_.size() || (i < factors_.size() && factors_[i].var < o.factors_[j].var)) {
                out.factors_.push_back(factors_[i++]);
            } else if (i == factors_.size() || o.factors_[j].var < factors_[i].var) {
                out.factors_.push_back(o.factors_[j++]);
            } else {
                std::int32_t e = factors_[i].exp + o.factors_[j].exp;
                if (e != 0) out.factors_.push_back({factors_[i].var, e});
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Component-wise quotient; valid whenever the subtraction is meaningful
    /// for the caller (ordinary division checks non-negativity separately).
    Monomial divide_by(const Monomial& o) const {
        Monomial inv;
        inv.factors_.reserve(o.factors_.size());
        for (const auto& f : o.factors_) inv.factors_.push_back({f.var, -f.exp});
        return *this * inv;
    }

    /// True when every exponent of o is <= the matching exponent here and the
    /// quotient has no negative entries (ordinary monomial divisibility).
    bool divisible_by(const Monomial& o) const {
        std::size_t i = 0;
        for (const auto& f : o.factors_) {
            while (i < factors_.size() && factors_[i].var < f.var) ++i;
            std::int32_t mine = (i < factors_.size() && factors_[i].var == f.var) ? factors_[i].exp : 0;
            if (mine < f.exp) return false;
        }
        return true;
    }

    Monomial pow(std::int32_t e) const {
        Monomial out;
        if (e == 0) return out;
        out.factors_ = factors_;
        for (auto& f : out.factors_) f.exp *= e;
        return out;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<VarPow> factors_;
};

/// Graded lexicographic order over the owning table's variable order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::int64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0, j = 0;
        while (i < fa.size() || j < fb.size()) {
            std::uint32_t va = i < fa.size() ? fa[i].var : UINT32_MAX;
            std::uint32_t vb = j < fb.size() ? fb[j].var : UINT32_MAX;
            std::uint32_t v = va < vb ? va : vb;
            std::int32_t ea = (va == v) ? fa[i].exp : 0;
            std::int32_t eb = (vb == v) ? fb[j].exp : 0;
            if (ea != eb) return ea < eb;
            if (va == v) ++i;
            if (vb == v) ++j;
        }
        return false;
    }
};

} // namespace charvar
