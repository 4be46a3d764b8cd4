#ifndef CARTPROD_CARTESIAN_HPP
#define CARTPROD_CARTESIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cartprod/blocks.hpp"
#include "cartprod/groebner.hpp"
#include "cartprod/polynomial.hpp"

namespace cartprod {

/// Nullstellensatz degree cap for the bounded decision: 24 for d = 2,
/// otherwise max{(d+1)d^2, 27}.
std::uint32_t degree_cap(std::uint32_t d);

struct DegreeCaps {
    std::uint32_t generator_degree = 1; // cap on each block generator G_j
    std::uint32_t product_degree = 3;   // cap on q(1-uF), q_j G_j
};

enum class VerdictKind { Cartesian, NonCartesian, Inconclusive };

enum class Certificate {
    None,
    UnitIdealAtCaps,   // coefficient system inconsistent within the caps
    CriteriaCertificate,
    Budget,
    RelativeNonMember, // not a member of the concrete generators supplied
};
std::string certificate_name(Certificate c);

struct CartesianWitness {
    std::vector<Polynomial> generators; // G_j, non-constant, block-supported
    std::vector<Polynomial> cofactors;  // H_j with F = sum G_j H_j
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<CartesianWitness> witness;
    Certificate certificate = Certificate::None;
    std::uint64_t budget_used = 0;

    bool is_cartesian() const { return kind == VerdictKind::Cartesian; }
};

/// Constructive split P = (x - alpha) H1 + P(alpha, y) with P(alpha, y)
/// non-constant; alpha runs through 0, 1, -1, 2, ... until the fiber is
/// non-constant. Variable roles swap when P does not depend on the first one.
struct BivariateDecomposition {
    Scalar alpha;
    Polynomial g1; // x - alpha (or y - alpha after the swap)
    Polynomial h1;
    Polynomial g2; // the non-constant fiber
    bool swapped = false;
};
BivariateDecomposition bivariate_decompose(const Polynomial& p);

/// Membership of F in (G_1, ..., G_k) for concrete block generators; the
/// positive verdict carries re-expanded cofactors.
Verdict is_cartesian_given_generators(const Polynomial& F, const BlockStructure& blocks,
                                      const std::vector<Polynomial>& gens, Budget& budget);

/// Coefficient system whose solvability over the closure is equivalent to a
/// capped Cartesian decomposition: unknown generator and cofactor
/// coefficients matched against q(1-uF) + sum q_j G_j == 1, plus one
/// inverse-pair non-constancy constraint per generator.
struct PolySystem {
    UniversePtr unknowns;
    Field field;
    std::vector<Polynomial> equations;
    // Unknown index and the ambient block-monomial it multiplies, per block.
    struct GeneratorShape {
        std::size_t block;
        std::vector<std::pair<std::size_t, Monomial>> coeffs;
    };
    std::vector<GeneratorShape> generator_shapes;
    UniversePtr ambient; // F's universe extended by the Rabinowitsch variable
    // equations[0..matching_count) match coefficients of the identity; the
    // remainder encode generator non-constancy.
    std::size_t matching_count = 0;
};

PolySystem build_rabinowitsch_system(const Polynomial& F, const BlockStructure& blocks,
                                     const DegreeCaps& caps);

struct CartesianQuery {
    Polynomial F;
    BlockStructure blocks;
    DegreeCaps caps;
    bool extract_witness = true;
    std::size_t witness_value_tries = 8; // candidate values per coefficient
    std::optional<std::uint64_t> scout_prime;
};

struct DecideResult {
    Verdict verdict;
    std::optional<bool> scout_consistent; // GF(p) pre-pass outcome, advisory only
};

/// Bounded-degree Cartesian decision through the Rabinowitsch consistency
/// test. Consistent => Cartesian. Inconsistent at the full Nullstellensatz
/// caps => NonCartesian; inconsistent below them => Inconclusive.
DecideResult decide_cartesian_bounded(const CartesianQuery& query, Budget& budget);

/// Relations among the coefficients of bounded-cap Cartesian polynomials of
/// degree <= d: eliminates generator/cofactor coefficients from the direct
/// decomposition F = sum G_j C_j. Only toy caps terminate.
struct LocusResult {
    UniversePtr coefficient_universe;          // one variable per F-monomial
    std::vector<std::string> monomial_legend;  // coefficient variable -> monomial text
    std::vector<Polynomial> relations;
};
LocusResult cartesian_locus(const BlockStructure& blocks, std::uint32_t d,
                            std::uint32_t generator_cap, std::uint32_t cofactor_cap,
                            Budget& budget);

} // namespace cartprod

#endif
