#include "charvar/cheb.hpp"

namespace charvar {

namespace {

Polynomial cheb_run(long n, const Polynomial& x, const Polynomial& base0, const Polynomial& base1) {
    if (n == 0) return base0;
    Polynomial prev = base0;
    Polynomial cur = base1;
    for (long i = 1; i < n; ++i) {
        Polynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Polynomial cheb_omega(long n, const Polynomial& x) {
    if (n < 0) return -cheb_omega(-n, x);
    return cheb_run(n, x, Polynomial(x.table()), Polynomial::constant(x.table(), 1));
}

Polynomial cheb_theta(long n, const Polynomial& x) {
    if (n < 0) n = -n;
    return cheb_run(n, x, Polynomial::constant(x.table(), 2), x);
}

} // namespace charvar
