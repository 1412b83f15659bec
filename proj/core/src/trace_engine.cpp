#include "charvar/trace_engine.hpp"

#include "charvar/cheb.hpp"

namespace charvar {

VarTablePtr trace_table() {
    static VarTablePtr table = VarTable::make({{"t", false}, {"r", false}});
    return table;
}

Polynomial seed_e0(std::size_t s) {
    if (s == 0) throw DomainViolationError("seed_e0: empty continued fraction");
    VarTablePtr tbl = trace_table();
    Polynomial t = Polynomial::variable(tbl, "t");
    Polynomial r = Polynomial::variable(tbl, "r");
    return (s % 2 == 1) ? t * t - r : r;
}

PsiState PsiState::level0(std::size_t s) {
    PsiState st;
    st.j_ = 0;
    st.e_j_ = seed_e0(s);
    st.memo_ = std::make_shared<std::map<long, Polynomial>>();
    return st;
}

PsiState PsiState::advance(long k_next) const {
    PsiState st;
    st.j_ = j_ + 1;
    st.e_prev_ = e_j_;
    st.e_j_ = psi(k_next);
    st.psi_prev_km1_ = psi(k_next - 1);
    st.memo_ = std::make_shared<std::map<long, Polynomial>>();
    return st;
}

const Polynomial& PsiState::psi(long n) const {
    auto it = memo_->find(n);
    if (it != memo_->end()) return it->second;

    VarTablePtr tbl = trace_table();
    Polynomial t2 = Polynomial::variable(tbl, "t") * Polynomial::variable(tbl, "t");
    Polynomial two_plus_e = e_j_ + 2;
    Polynomial value(tbl);
    if (j_ == 0) {
        // psi_0(n) = theta_n(-e_0) + (2 - theta_n(-e_0)) t^2 / (2 + e_0)
        Polynomial th = cheb_theta(n, -e_j_);
        value = th + ((Polynomial::constant(tbl, 2) - th) * t2).exact_div(two_plus_e);
    } else {
        // psi_j(n) = e_{j-1} w_{n+1}(-e_j) - psi_{j-1}(k_j - 1) w_n(-e_j)
        //            + 2 t^2 (1 - w_{n+1}(-e_j) + w_n(-e_j)) / (2 + e_j)
        Polynomial w_np1 = cheb_omega(n + 1, -e_j_);
        Polynomial w_n = cheb_omega(n, -e_j_);
        Polynomial bracket = Polynomial::constant(tbl, 1) - w_np1 + w_n;
        value = e_prev_ * w_np1 - psi_prev_km1_ * w_n + (t2 * bracket * 2).exact_div(two_plus_e);
    }
    return memo_->emplace(n, std::move(value)).first->second;
}

TraceTriple trace_triple(const RationalTangle& tangle) {
    const auto& ks = tangle.cf.ks;
    std::size_t s = ks.size();
    if (s == 0) throw DomainViolationError("trace_triple: empty continued fraction");

    PsiState state = PsiState::level0(s);
    for (std::size_t j = 1; j <= s - 1; ++j) state = state.advance(ks[j - 1]);

    long k_last = ks[s - 1];
    TraceTriple out;
    out.zdot = state.e() - 2;
    out.zgrave = state.psi(k_last - 1) - 2;
    out.z = state.psi(k_last) - 2;
    return out;
}

} // namespace charvar
