#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "charvar/monomial.hpp"
#include "charvar/vartable.hpp"

namespace charvar {

/// Sparse multivariate (optionally Laurent) polynomial with arbitrary-precision
/// integer coefficients. Values are immutable in spirit: every operation
/// returns a new polynomial, terms never hold zero coefficients, and the term
/// map is ordered by the canonical graded-lex order for deterministic output.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, GrlexLess>;

    Polynomial() : table_(VarTable::empty()) {}
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

    static Polynomial constant(VarTablePtr table, const mpz_class& c);
    static Polynomial constant(VarTablePtr table, long c) { return constant(std::move(table), mpz_class(c)); }
    static Polynomial variable(const VarTablePtr& table, std::string_view name, std::int32_t exp = 1);
    static Polynomial from_terms(VarTablePtr table, TermMap terms);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (zero polynomial evaluates to 0).
    mpz_class constant_value() const;
    bool is_one() const;

    /// Largest monomial in grlex order; polynomial must be nonzero.
    const std::pair<const Monomial, mpz_class>& leading_term() const;

    std::int64_t total_degree() const;
    std::int32_t max_exponent(std::string_view var) const;
    std::int32_t min_exponent(std::string_view var) const;
    bool uses(std::string_view var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator+(long c) const;
    Polynomial operator-(long c) const;
    Polynomial operator*(const mpz_class& c) const;
    Polynomial operator*(long c) const { return *this * mpz_class(c); }

    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact quotient; throws NotDivisibleError when none exists. Laurent
    /// variables are handled by normalizing both operands by unit monomials.
    Polynomial exact_div(const Polynomial& divisor) const;

    /// Exact square root with the leading coefficient normalized positive;
    /// throws NotASquareError when the polynomial is not a perfect square.
    Polynomial sqrt_exact() const;

    /// Substitute a polynomial for a variable. Negative exponents of the
    /// substituted variable require the replacement to be an invertible
    /// (single-term, coefficient +-1) element.
    Polynomial subst(std::string_view var, const Polynomial& value) const;
    /// Replace a Laurent variable by its inverse (exponent sign flip).
    Polynomial subst_invert(std::string_view var) const;

    Polynomial derivative(std::string_view var) const;

    /// Re-express over another table, mapping variables by name (with optional
    /// renames old->new). Used variables must exist in the target table.
    Polynomial remap(const VarTablePtr& target,
                     const std::vector<std::pair<std::string, std::string>>& renames = {}) const;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& assignment) const;
    /// Extended-precision evaluation for oracle comparisons where huge twist
    /// powers would exhaust double precision.
    std::complex<long double> eval_ld(
        const std::map<std::string, std::complex<long double>>& assignment) const;
    /// Quad-precision evaluation (double in, double out); the term sums of the
    /// larger trace polynomials cancel far past long-double headroom.
    std::complex<double> eval_quad(const std::map<std::string, std::complex<double>>& assignment) const;

    /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
    mpz_class content() const;

    std::string to_string() const;

private:
    static void add_term(TermMap& terms, const Monomial& m, const mpz_class& c);
    void check_exponent_validity() const;
    /// Unit monomial u such that (*this) * u has all-nonnegative exponents and
    /// zero minimum exponent in every Laurent variable it uses.
    Monomial laurent_normalizer() const;
    Polynomial mul_monomial(const Monomial& m) const;
    static std::pair<Polynomial, Polynomial> coerce(const Polynomial& a, const Polynomial& b);

    VarTablePtr table_;
    TermMap terms_;
};

Polynomial operator*(long c, const Polynomial& p);

} // namespace charvar
