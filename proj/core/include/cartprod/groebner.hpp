#ifndef CARTPROD_GROEBNER_HPP
#define CARTPROD_GROEBNER_HPP

#include <vector>

#include "cartprod/polynomial.hpp"

namespace cartprod {

/// Hard resource cap. Runaway computations surface as budget_exhausted, never
/// as a wrong answer.
struct Budget {
    std::uint64_t max_steps = 2'000'000; // single reduction steps
    std::size_t max_basis = 4096;
    std::uint64_t steps_used = 0;

    void charge_basis(std::size_t size) const {
        if (size > max_basis) throw budget_exhausted();
    }
};

/// Reduced Groebner basis: monic generators, no term of any generator
/// divisible by another generator's leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> gens, MonomialOrder order)
        : gens_(std::move(gens)), order_(order) {}

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         Budget& budget);

/// Same computation, additionally expressing every basis element as a
/// combination of the input generators.
struct TracedBasis {
    GroebnerBasis basis;
    std::vector<std::vector<Polynomial>> reps; // reps[i][j]: cofactor of input j in basis elem i
};
TracedBasis buchberger_traced(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                              Budget& budget);

/// Unique canonical representative of f modulo the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget& budget);

struct MembershipResult {
    bool member = false;
    std::vector<Polynomial> cofactors; // f == sum cofactors[j] * gens[j] when member
};
/// Ideal membership with a re-expanded, verified cofactor witness.
MembershipResult ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const MonomialOrder& order, Budget& budget);

/// Weak Nullstellensatz consistency test over the algebraic closure; the
/// system has a common zero iff the reduced basis is not {1}. Field must be
/// Q or QI for the closure reading to be meaningful.
bool is_consistent_over_closure(const std::vector<Polynomial>& gens, Budget& budget);

struct EliminationResult {
    std::vector<Polynomial> generators; // involve only retained variables
};
/// Generators of the elimination ideal after dropping the given variables.
EliminationResult eliminate(const std::vector<Polynomial>& gens,
                            const std::vector<std::size_t>& drop, Budget& budget);

} // namespace cartprod

#endif
