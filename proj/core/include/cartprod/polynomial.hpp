#ifndef CARTPROD_POLYNOMIAL_HPP
#define CARTPROD_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartprod/monomial.hpp"
#include "cartprod/scalar.hpp"

namespace cartprod {

/// Sparse multivariate polynomial: finite map monomial -> nonzero scalar over
/// a fixed universe and field. Immutable in spirit; all operations are pure.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() = default;
    Polynomial(UniversePtr uni, Field field) : uni_(std::move(uni)), field_(field) {}

    static Polynomial zero(UniversePtr uni, Field field) { return Polynomial(std::move(uni), field); }
    static Polynomial constant(UniversePtr uni, const Scalar& c);
    static Polynomial variable(UniversePtr uni, Field field, std::size_t var, std::uint32_t e = 1);
    static Polynomial term(UniversePtr uni, const Scalar& c, const Monomial& m);

    const UniversePtr& universe() const { return uni_; }
    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }
    /// Total degree; nullopt is the degree of the zero polynomial.
    std::optional<std::uint32_t> degree() const;
    std::uint32_t degree_or_zero() const { return degree().value_or(0); }
    /// Degree counted only over the given variable indices.
    std::uint32_t degree_on(const std::vector<std::size_t>& vars) const;

    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const;
    /// True when every monomial is supported inside `vars`.
    bool supported_on(const std::vector<std::size_t>& vars) const;
    bool depends_on(std::size_t var) const;
    std::vector<std::size_t> support_variables() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(std::uint32_t e) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Largest term under the given order; polynomial must be nonzero.
    std::pair<Monomial, Scalar> leading_term(const MonomialOrder& order) const;

    /// Ring-morphism substitution; unassigned variables pass through.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& assignment) const;
    Polynomial substitute_scalar(const std::map<std::size_t, Scalar>& assignment) const;
    /// Full evaluation; every variable must be assigned.
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Coefficient of var^e, a polynomial in the remaining variables.
    Polynomial coefficient_of(std::size_t var, std::uint32_t e) const;
    std::uint32_t degree_in(std::size_t var) const;

    /// Monic under the given order (leading coefficient 1).
    Polynomial monic(const MonomialOrder& order) const;
    /// Removes rational content over Q / QI: clears denominators and divides
    /// by the integer gcd of all coordinates; sign-normalized over GF(p) by
    /// making the map's first stored coefficient 1. Pure rescaling.
    Polynomial primitive_part() const;

    /// Re-expresses the polynomial over a larger universe; var_map[i] is the
    /// index in `target` of this polynomial's variable i.
    Polynomial mapped_to(UniversePtr target, const std::vector<std::size_t>& var_map) const;

    /// Canonical text, terms in decreasing grevlex order.
    std::string str() const;

    void add_term(const Monomial& m, const Scalar& c); // internal-ish builder

private:
    UniversePtr uni_;
    Field field_{};
    TermMap terms_;

    void check_compatible(const Polynomial& o) const;
};

/// Multivariate division: f = sum q_i g_i + r with no monomial of r divisible
/// by any LM(g_i). `steps` (when given) is incremented per reduction step and
/// checked against `step_limit`; exceeding it throws budget_exhausted.
class budget_exhausted : public std::runtime_error {
public:
    budget_exhausted() : std::runtime_error("computation budget exhausted") {}
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

DivisionResult divide_multi(const Polynomial& f, const std::vector<Polynomial>& divisors,
                            const MonomialOrder& order, std::uint64_t* steps = nullptr,
                            std::uint64_t step_limit = 0);

/// Reduction of a Q / QI polynomial mod p. The imaginary unit maps to a
/// square root of -1, so imaginary parts require p == 1 (mod 4); throws
/// when a denominator vanishes mod p.
Polynomial to_prime_field(const Polynomial& f, std::uint64_t p);

/// Least r in [2, p) with r^2 == -1 (mod p); nullopt when p != 1 (mod 4).
std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p);

} // namespace cartprod

#endif
