#include "cartprod/cartesian.hpp"

#include <algorithm>
#include <set>

namespace cartprod {

std::uint32_t degree_cap(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("degree_cap requires d >= 1");
    if (d == 2) return 24;
    return std::max<std::uint32_t>((d + 1) * d * d, 27);
}

std::string certificate_name(Certificate c) {
    switch (c) {
        case Certificate::None: return "none";
        case Certificate::UnitIdealAtCaps: return "unit-ideal-at-caps";
        case Certificate::CriteriaCertificate: return "criteria-certificate";
        case Certificate::Budget: return "budget";
        case Certificate::RelativeNonMember: return "relative-non-member";
    }
    return "?";
}

BivariateDecomposition bivariate_decompose(const Polynomial& p) {
    if (p.universe()->size() != 2)
        throw std::invalid_argument("bivariate_decompose expects a 2-variable universe");
    if (p.is_constant()) throw std::domain_error("constant polynomial has no decomposition");

    const Field& K = p.field();
    auto try_role = [&](std::size_t xv, std::size_t yv,
                        bool swapped) -> std::optional<BivariateDecomposition> {
        if (!p.depends_on(xv)) return std::nullopt;
        std::uint32_t trials = p.degree_or_zero() + 2;
        long value = 0;
        for (std::uint32_t t = 0; t < 2 * trials; ++t) {
            // 0, 1, -1, 2, -2, ...
            Scalar alpha = Scalar::from_int(K, value);
            value = value <= 0 ? -value + 1 : -value;
            Polynomial fiber = p.substitute_scalar({{xv, alpha}});
            if (fiber.is_constant()) continue;
            Polynomial gen = Polynomial::variable(p.universe(), K, xv) -
                             Polynomial::constant(p.universe(), alpha);
            auto dres = divide_multi(p - fiber, {gen}, MonomialOrder::lex());
            if (!dres.remainder.is_zero())
                throw std::logic_error("fiber split not divisible by linear factor");
            BivariateDecomposition out{alpha, gen, dres.quotients[0], fiber, swapped};
            return out;
        }
        return std::nullopt;
    };
    if (auto d = try_role(0, 1, false)) return *d;
    if (auto d = try_role(1, 0, true)) return *d;
    throw std::domain_error("depends on one variable only with constant fiber");
}

Verdict is_cartesian_given_generators(const Polynomial& F, const BlockStructure& blocks,
                                      const std::vector<Polynomial>& gens, Budget& budget) {
    if (gens.size() != blocks.block_count())
        throw std::invalid_argument("one generator per block expected");
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_constant())
            throw std::invalid_argument("generator " + std::to_string(j + 1) + " is constant");
        if (!gens[j].supported_on(blocks.block(j)))
            throw std::invalid_argument("generator " + std::to_string(j + 1) +
                                        " supported outside its block");
    }
    Verdict v;
    std::uint64_t before = budget.steps_used;
    try {
        auto mem = ideal_member(F, gens, MonomialOrder::grevlex(), budget);
        if (mem.member) {
            v.kind = VerdictKind::Cartesian;
            v.witness = CartesianWitness{gens, mem.cofactors};
        } else {
            v.kind = VerdictKind::NonCartesian;
            v.certificate = Certificate::RelativeNonMember;
        }
    } catch (const budget_exhausted&) {
        v.kind = VerdictKind::Inconclusive;
        v.certificate = Certificate::Budget;
    }
    v.budget_used = budget.steps_used - before;
    return v;
}

namespace {

std::string fresh_name(std::set<std::string>& taken, std::string base) {
    while (taken.count(base)) base += "_";
    taken.insert(base);
    return base;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Shared builder state for coefficient systems over a combined universe
// [ambient vars..., unknown vars...].
struct SystemBuilder {
    UniversePtr ambient;
    Field field;
    std::set<std::string> taken;
    std::vector<std::string> unknown_names;

    explicit SystemBuilder(UniversePtr amb, Field f) : ambient(std::move(amb)), field(f) {
        for (const auto& n : ambient->names()) taken.insert(n);
    }

    std::size_t add_unknown(const std::string& base) {
        unknown_names.push_back(fresh_name(taken, base));
        return unknown_names.size() - 1;
    }

    UniversePtr combined;
    UniversePtr unknowns;

    void freeze() {
        auto names = ambient->names();
        names.insert(names.end(), unknown_names.begin(), unknown_names.end());
        combined = Universe::make(std::move(names));
        unknowns = Universe::make(unknown_names);
    }

    std::size_t nA() const { return ambient->size(); }

    Polynomial unknown_var(std::size_t t) const {
        return Polynomial::variable(combined, field, nA() + t);
    }

    // sum over coefficient unknowns times ambient monomials
    Polynomial linear_combination(const std::vector<std::size_t>& unknown_idx,
                                  const std::vector<Monomial>& ambient_monos) const {
        Polynomial acc(combined, field);
        for (std::size_t t = 0; t < unknown_idx.size(); ++t) {
            std::vector<std::uint32_t> exps(combined->size(), 0);
            for (std::size_t i = 0; i < nA(); ++i) exps[i] = ambient_monos[t].exp(i);
            exps[nA() + unknown_idx[t]] = 1;
            acc.add_term(Monomial(std::move(exps)), Scalar::one(field));
        }
        return acc;
    }

    // Splits an identity polynomial over the combined universe into one
    // equation (over the unknowns) per ambient monomial.
    std::vector<Polynomial> bucket_by_ambient(const Polynomial& e) const {
        std::map<std::vector<std::uint32_t>, Polynomial> buckets;
        for (const auto& [m, c] : e.terms()) {
            std::vector<std::uint32_t> amb(m.exps().begin(), m.exps().begin() + nA());
            std::vector<std::uint32_t> unk(m.exps().begin() + nA(), m.exps().end());
            auto it = buckets.find(amb);
            if (it == buckets.end())
                it = buckets.emplace(std::move(amb), Polynomial(unknowns, field)).first;
            it->second.add_term(Monomial(std::move(unk)), c);
        }
        std::vector<Polynomial> eqs;
        eqs.reserve(buckets.size());
        for (auto& [amb, poly] : buckets)
            if (!poly.is_zero()) eqs.push_back(std::move(poly));
        return eqs;
    }
};

} // namespace

PolySystem build_rabinowitsch_system(const Polynomial& F, const BlockStructure& blocks,
                                     const DegreeCaps& caps) {
    if (F.is_zero()) throw std::invalid_argument("F must be nonzero");
    if (!(*F.universe() == *blocks.universe()))
        throw std::invalid_argument("F universe must match the block structure");
    if (caps.generator_degree < 1) throw std::invalid_argument("generator cap must be >= 1");

    const Field K = F.field();
    const std::size_t n = F.universe()->size();
    const std::uint32_t d = *F.degree();

    std::set<std::string> taken(F.universe()->names().begin(), F.universe()->names().end());
    std::vector<std::string> ambient_names = F.universe()->names();
    ambient_names.push_back(fresh_name(taken, "u"));
    auto ambient = Universe::make(std::move(ambient_names));
    const std::size_t u_idx = n;

    SystemBuilder sb(ambient, K);

    const std::size_t k = blocks.block_count();
    std::vector<std::vector<Monomial>> gen_monos(k);
    std::vector<std::vector<std::size_t>> gen_vars(k);
    for (std::size_t j = 0; j < k; ++j) {
        // block monomials over the ambient universe (same leading indices)
        gen_monos[j] = monomials_up_to(ambient->size(), caps.generator_degree, blocks.block(j));
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t)
            gen_vars[j].push_back(sb.add_unknown("g" + std::to_string(j + 1) + "_" + std::to_string(t)));
    }

    std::vector<Monomial> q_monos;
    std::vector<std::size_t> q_vars;
    if (caps.product_degree >= d + 1) {
        q_monos = monomials_up_to(ambient->size(), caps.product_degree - (d + 1),
                                  all_indices(ambient->size()));
        for (std::size_t t = 0; t < q_monos.size(); ++t)
            q_vars.push_back(sb.add_unknown("q_" + std::to_string(t)));
    }

    std::vector<std::vector<Monomial>> cof_monos(k);
    std::vector<std::vector<std::size_t>> cof_vars(k);
    for (std::size_t j = 0; j < k; ++j) {
        cof_monos[j] = monomials_up_to(ambient->size(), caps.product_degree - 1,
                                       all_indices(ambient->size()));
        for (std::size_t t = 0; t < cof_monos[j].size(); ++t)
            cof_vars[j].push_back(sb.add_unknown("p" + std::to_string(j + 1) + "_" + std::to_string(t)));
    }

    // Non-constancy auxiliaries: w_j * sum(g_j,alpha * v_j,alpha) == 1 over the
    // non-constant coefficients of each generator.
    std::vector<std::size_t> w_vars;
    std::vector<std::vector<std::size_t>> v_vars(k);
    for (std::size_t j = 0; j < k; ++j) {
        w_vars.push_back(sb.add_unknown("w" + std::to_string(j + 1)));
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t)
            if (gen_monos[j][t].degree() > 0)
                v_vars[j].push_back(sb.add_unknown("v" + std::to_string(j + 1) + "_" + std::to_string(t)));
    }

    sb.freeze();

    std::vector<std::size_t> embed(n);
    for (std::size_t i = 0; i < n; ++i) embed[i] = i;
    Polynomial Fc = F.mapped_to(sb.combined, embed);
    Polynomial one = Polynomial::constant(sb.combined, Scalar::one(K));
    Polynomial u = Polynomial::variable(sb.combined, K, u_idx);

    Polynomial identity = -one;
    if (!q_vars.empty()) {
        Polynomial q = sb.linear_combination(q_vars, q_monos);
        identity += q * (one - u * Fc);
    }
    for (std::size_t j = 0; j < k; ++j) {
        Polynomial G = sb.linear_combination(gen_vars[j], gen_monos[j]);
        Polynomial Qj = sb.linear_combination(cof_vars[j], cof_monos[j]);
        identity += Qj * G;
    }

    PolySystem sys;
    sys.unknowns = sb.unknowns;
    sys.field = K;
    sys.ambient = ambient;
    sys.equations = sb.bucket_by_ambient(identity);
    sys.matching_count = sys.equations.size();

    for (std::size_t j = 0; j < k; ++j) {
        Polynomial sum(sb.unknowns, K);
        std::size_t vslot = 0;
        PolySystem::GeneratorShape shape;
        shape.block = j;
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t) {
            // shape monomials over F's own universe
            std::vector<std::uint32_t> exps(n, 0);
            for (std::size_t i = 0; i < n; ++i) exps[i] = gen_monos[j][t].exp(i);
            shape.coeffs.emplace_back(gen_vars[j][t], Monomial(std::move(exps)));
            if (gen_monos[j][t].degree() == 0) continue;
            Polynomial gv = Polynomial::variable(sb.unknowns, K, gen_vars[j][t]);
            Polynomial vv = Polynomial::variable(sb.unknowns, K, v_vars[j][vslot++]);
            sum += gv * vv;
        }
        Polynomial w = Polynomial::variable(sb.unknowns, K, w_vars[j]);
        sys.equations.push_back(w * sum - Polynomial::constant(sb.unknowns, Scalar::one(K)));
        sys.generator_shapes.push_back(std::move(shape));
    }
    return sys;
}

namespace {

std::optional<CartesianWitness> extract_witness(const PolySystem& sys,
                                                const GroebnerBasis& consistent_basis,
                                                const Polynomial& F, const BlockStructure& blocks,
                                                std::size_t value_tries, Budget& budget) {
    // Pin generator coefficients one at a time to small rationals, keeping the
    // system consistent; then recover cofactors by an explicit membership run.
    std::vector<Polynomial> current = consistent_basis.generators();
    std::map<std::size_t, Scalar> assignment;

    struct Slot {
        std::size_t var;
        bool constant_coeff;
    };
    std::vector<Slot> slots;
    for (const auto& shape : sys.generator_shapes) {
        std::vector<std::pair<std::size_t, Monomial>> sorted = shape.coeffs;
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.second.degree() > b.second.degree();
        });
        for (const auto& [var, mono] : sorted) slots.push_back({var, mono.degree() == 0});
    }

    // 0, 1, -1, 2, -2, ... ; leading roles try 1 before 0.
    auto nth_value = [](std::size_t t) -> long {
        if (t == 0) return 0;
        long k = static_cast<long>((t + 1) / 2);
        return (t % 2) ? k : -k;
    };

    for (const auto& slot : slots) {
        bool pinned = false;
        for (std::size_t t = 0; t < value_tries && !pinned; ++t) {
            std::size_t pick = t;
            if (!slot.constant_coeff && t < 2) pick = 1 - t;
            Scalar c = Scalar::from_int(sys.field, nth_value(pick));
            std::vector<Polynomial> substituted;
            substituted.reserve(current.size());
            bool nonzero = false;
            for (const auto& g : current) {
                Polynomial s = g.substitute_scalar({{slot.var, c}});
                if (!s.is_zero()) nonzero = true;
                substituted.push_back(std::move(s));
            }
            if (!nonzero) substituted.clear();
            try {
                auto gb = buchberger(substituted, MonomialOrder::grevlex(), budget);
                if (!gb.is_unit_ideal()) {
                    current = gb.generators();
                    assignment.emplace(slot.var, c);
                    pinned = true;
                }
            } catch (const budget_exhausted&) {
                return std::nullopt;
            }
        }
        if (!pinned) return std::nullopt;
    }

    std::vector<Polynomial> gens;
    for (const auto& shape : sys.generator_shapes) {
        Polynomial g(F.universe(), F.field());
        for (const auto& [var, mono] : shape.coeffs) g.add_term(mono, assignment.at(var));
        if (g.is_constant()) return std::nullopt;
        if (!g.supported_on(blocks.block(shape.block))) return std::nullopt;
        gens.push_back(std::move(g));
    }
    try {
        auto mem = ideal_member(F, gens, MonomialOrder::grevlex(), budget);
        if (!mem.member) return std::nullopt;
        return CartesianWitness{std::move(gens), std::move(mem.cofactors)};
    } catch (const budget_exhausted&) {
        return std::nullopt;
    }
}

} // namespace

DecideResult decide_cartesian_bounded(const CartesianQuery& query, Budget& budget) {
    const Polynomial& F = query.F;
    if (F.is_zero()) throw std::invalid_argument("F must be nonzero");

    DecideResult out;
    Verdict& v = out.verdict;
    std::uint64_t before = budget.steps_used;

    if (F.is_constant()) {
        // A nonzero constant lies in no proper ideal, and non-constant block
        // generators always generate a proper ideal over the closure.
        v.kind = VerdictKind::NonCartesian;
        v.certificate = Certificate::UnitIdealAtCaps;
        return out;
    }

    auto sys = build_rabinowitsch_system(F, query.blocks, query.caps);

    if (query.scout_prime) {
        try {
            std::vector<Polynomial> mod;
            mod.reserve(sys.equations.size());
            for (const auto& e : sys.equations) mod.push_back(to_prime_field(e, *query.scout_prime));
            Budget scout_budget{budget.max_steps / 4, budget.max_basis, 0};
            out.scout_consistent = is_consistent_over_closure(mod, scout_budget);
        } catch (...) {
            out.scout_consistent = std::nullopt; // scout is advisory only
        }
    }

    try {
        auto gb = buchberger(sys.equations, MonomialOrder::grevlex(), budget);
        if (gb.is_unit_ideal()) {
            std::uint32_t d = *F.degree();
            bool full_caps = query.caps.generator_degree >= std::max<std::uint32_t>(d, 1) &&
                             query.caps.product_degree >= degree_cap(std::max<std::uint32_t>(d, 1));
            v.kind = full_caps ? VerdictKind::NonCartesian : VerdictKind::Inconclusive;
            v.certificate = Certificate::UnitIdealAtCaps;
        } else {
            v.kind = VerdictKind::Cartesian;
            if (query.extract_witness)
                v.witness = extract_witness(sys, gb, F, query.blocks, query.witness_value_tries,
                                            budget);
        }
    } catch (const budget_exhausted&) {
        v.kind = VerdictKind::Inconclusive;
        v.certificate = Certificate::Budget;
    }
    v.budget_used = budget.steps_used - before;
    return out;
}

LocusResult cartesian_locus(const BlockStructure& blocks, std::uint32_t d,
                            std::uint32_t generator_cap, std::uint32_t cofactor_cap,
                            Budget& budget) {
    const auto& V = blocks.universe();
    const Field K = Field::rationals();
    const std::size_t n = V->size();

    SystemBuilder sb(V, K);

    auto f_monos = monomials_up_to(n, d, all_indices(n));
    std::vector<std::size_t> f_vars;
    for (std::size_t t = 0; t < f_monos.size(); ++t) f_vars.push_back(sb.add_unknown("a" + std::to_string(t)));

    const std::size_t k = blocks.block_count();
    std::vector<std::vector<Monomial>> gen_monos(k), cof_monos(k);
    std::vector<std::vector<std::size_t>> gen_vars(k), cof_vars(k);
    for (std::size_t j = 0; j < k; ++j) {
        gen_monos[j] = monomials_up_to(n, generator_cap, blocks.block(j));
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t)
            gen_vars[j].push_back(sb.add_unknown("g" + std::to_string(j + 1) + "_" + std::to_string(t)));
        cof_monos[j] = monomials_up_to(n, cofactor_cap, all_indices(n));
        for (std::size_t t = 0; t < cof_monos[j].size(); ++t)
            cof_vars[j].push_back(sb.add_unknown("c" + std::to_string(j + 1) + "_" + std::to_string(t)));
    }
    std::vector<std::size_t> w_vars;
    std::vector<std::vector<std::size_t>> v_vars(k);
    for (std::size_t j = 0; j < k; ++j) {
        w_vars.push_back(sb.add_unknown("w" + std::to_string(j + 1)));
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t)
            if (gen_monos[j][t].degree() > 0)
                v_vars[j].push_back(sb.add_unknown("v" + std::to_string(j + 1) + "_" + std::to_string(t)));
    }

    sb.freeze();

    Polynomial identity = -sb.linear_combination(f_vars, f_monos);
    for (std::size_t j = 0; j < k; ++j) {
        Polynomial G = sb.linear_combination(gen_vars[j], gen_monos[j]);
        Polynomial C = sb.linear_combination(cof_vars[j], cof_monos[j]);
        identity += G * C;
    }
    auto equations = sb.bucket_by_ambient(identity);
    for (std::size_t j = 0; j < k; ++j) {
        Polynomial sum(sb.unknowns, K);
        std::size_t vslot = 0;
        for (std::size_t t = 0; t < gen_monos[j].size(); ++t) {
            if (gen_monos[j][t].degree() == 0) continue;
            sum += Polynomial::variable(sb.unknowns, K, gen_vars[j][t]) *
                   Polynomial::variable(sb.unknowns, K, v_vars[j][vslot++]);
        }
        equations.push_back(Polynomial::variable(sb.unknowns, K, w_vars[j]) * sum -
                            Polynomial::constant(sb.unknowns, Scalar::one(K)));
    }

    // Drop everything except the F-coefficient variables.
    std::vector<std::size_t> drop;
    std::vector<bool> retained(sb.unknowns->size(), false);
    for (auto t : f_vars) retained[t] = true;
    for (std::size_t t = 0; t < sb.unknowns->size(); ++t)
        if (!retained[t]) drop.push_back(t);

    auto elim = eliminate(equations, drop, budget);

    LocusResult res;
    std::vector<std::string> coeff_names;
    for (auto t : f_vars) coeff_names.push_back(sb.unknowns->name(t));
    res.coefficient_universe = Universe::make(coeff_names);
    for (std::size_t t = 0; t < f_monos.size(); ++t) {
        res.monomial_legend.push_back(
            Polynomial::term(V, Scalar::one(K), f_monos[t]).str());
    }
    std::vector<std::size_t> down(sb.unknowns->size(), 0);
    for (std::size_t t = 0; t < f_vars.size(); ++t) down[f_vars[t]] = t;
    for (const auto& g : elim.generators)
        res.relations.push_back(g.mapped_to(res.coefficient_universe, down));
    return res;
}

} // namespace cartprod
