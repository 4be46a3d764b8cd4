#ifndef CARTPROD_MONOMIAL_HPP
#define CARTPROD_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cartprod {

/// Ordered list of variable names. Shared immutably by every polynomial over
/// the same ring.
class Universe {
public:
    explicit Universe(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Universe& o) const { return names_ == o.names_; }

    static std::shared_ptr<const Universe> make(std::vector<std::string> names) {
        return std::make_shared<const Universe>(std::move(names));
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Exponent vector over a fixed universe. Total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const { return degree_; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Componentwise quotient; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& numerator) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Degree counted over a subset of variable indices.
    std::uint32_t degree_on(const std::vector<std::size_t>& vars) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
    /// Plain lexicographic compare of exponent vectors; canonical storage
    /// order only, not an admissible monomial order by itself.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Admissible monomial order: lex, graded lex, graded reverse lex, or a
/// two-group elimination order (grevlex on the leading group, ties broken by
/// grevlex on the rest).
class MonomialOrder {
public:
    enum class Kind { Lex, GrLex, GrevLex, Elimination };

    MonomialOrder() : kind_(Kind::GrevLex) {}
    explicit MonomialOrder(Kind k) : kind_(k) {}

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grlex() { return MonomialOrder(Kind::GrLex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
    /// `leading` holds the indices of the variables to be eliminated first.
    static MonomialOrder elimination(std::vector<std::size_t> leading, std::size_t nvars);
    static MonomialOrder parse(const std::string& s);

    Kind kind() const { return kind_; }
    std::string name() const;

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    Kind kind_;
    // Elimination order: flag per variable, true when in the leading group.
    std::vector<bool> leading_;
};

/// All monomials over `allowed` variables with total degree <= max_degree,
/// in ascending (degree, lex) order. Deterministic.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree,
                                      const std::vector<std::size_t>& allowed);

} // namespace cartprod

#endif
