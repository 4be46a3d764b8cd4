#include "cartprod/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <tuple>

namespace cartprod {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = Monomial::lcm(mf, mg);
    return f.times_monomial(mf.quotient_of(l), cf.inverse()) -
           g.times_monomial(mg.quotient_of(l), cg.inverse());
}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

struct Engine {
    const MonomialOrder& order;
    Budget& budget;
    bool traced;

    std::vector<Polynomial> basis;
    std::vector<Monomial> lead;
    std::vector<Scalar> lead_coeff;
    std::vector<std::vector<Polynomial>> reps;

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    // Normal strategy: smallest lcm degree first, ties by lcm then indices.
    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> queue;

    static inline const bool stats = std::getenv("CARTPROD_GB_STATS") != nullptr;

    Engine(const MonomialOrder& o, Budget& b, bool t)
        : order(o), budget(b), traced(t), queue(PairLess{&o}) {}

    static Scalar rescale_factor(const Polynomial& before, const Polynomial& after) {
        return after.terms().begin()->second / before.terms().begin()->second;
    }

    // Gebauer-Moeller update: prune the pending set against the new element
    // and create only the surviving new pairs.
    void update_pairs(std::size_t t) {
        const Monomial& mt = lead[t];

        // Candidate new pairs, processed by increasing lcm.
        struct Cand {
            Monomial lcm;
            std::size_t i;
            bool coprime_flag;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cands.push_back({Monomial::lcm(lead[i], mt), i, coprime(lead[i], mt)});
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            int c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return a.i < b.i;
        });

        std::vector<Cand> kept;
        for (const auto& c : cands) {
            bool drop = false;
            for (const auto& k : kept) {
                if (k.lcm.divides(c.lcm)) {
                    drop = true;
                    break;
                }
            }
            // A coprime candidate still participates in pruning (it may kill
            // multiples) but is never queued itself.
            if (!drop) kept.push_back(c);
        }

        // Prune old pairs covered by the new element.
        for (auto it = queue.begin(); it != queue.end();) {
            const Pair& p = *it;
            if (mt.divides(p.lcm) && !(Monomial::lcm(lead[p.i], mt) == p.lcm) &&
                !(Monomial::lcm(lead[p.j], mt) == p.lcm)) {
                it = queue.erase(it);
            } else {
                ++it;
            }
        }

        for (const auto& c : kept)
            if (!c.coprime_flag) queue.insert(Pair{c.lcm, c.i, t});
    }

    void add_element(Polynomial p, std::vector<Polynomial> rep) {
        Polynomial norm = p.primitive_part();
        if (traced) {
            Scalar f = rescale_factor(p, norm);
            for (auto& r : rep) r = r.scaled(f);
            reps.push_back(std::move(rep));
        }
        std::size_t n = basis.size();
        basis.push_back(std::move(norm));
        auto [lm, lc] = basis[n].leading_term(order);
        lead.push_back(lm);
        lead_coeff.push_back(lc);
        budget.charge_basis(basis.size());
        update_pairs(n);
        if (stats && basis.size() % 200 == 0)
            std::cerr << "[gb] basis=" << basis.size() << " queue=" << queue.size()
                      << " steps=" << budget.steps_used << "\n";
    }

    // Full reduction against the current basis with cached leading terms.
    // Quotients are tracked only when a rep is requested.
    Polynomial reduce(const Polynomial& p, std::vector<Polynomial>* rep) {
        if (basis.empty() || p.is_zero()) return p;
        auto cmp = [this](const Monomial& a, const Monomial& b) { return order.less(a, b); };
        std::map<Monomial, Scalar, decltype(cmp)> work(cmp);
        for (const auto& [m, c] : p.terms()) work.emplace(m, c);
        Polynomial remainder(p.universe(), p.field());
        std::vector<Polynomial> quot;
        if (rep) quot.assign(basis.size(), Polynomial(p.universe(), p.field()));

        while (!work.empty()) {
            ++budget.steps_used;
            if (budget.max_steps && budget.steps_used > budget.max_steps)
                throw budget_exhausted();
            auto it = std::prev(work.end());
            Monomial lm = it->first;
            Scalar lc = it->second;
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!lead[k].divides(lm)) continue;
                Monomial qm = lead[k].quotient_of(lm);
                Scalar qc = lc / lead_coeff[k];
                if (rep) quot[k].add_term(qm, qc);
                for (const auto& [gm, gc] : basis[k].terms()) {
                    Monomial tm = gm * qm;
                    Scalar tc = gc * qc;
                    auto jt = work.find(tm);
                    if (jt == work.end()) {
                        work.emplace(std::move(tm), -tc);
                    } else {
                        jt->second = jt->second - tc;
                        if (jt->second.is_zero()) work.erase(jt);
                    }
                }
                reduced = true;
                break;
            }
            if (!reduced) {
                remainder.add_term(lm, lc);
                work.erase(it);
            }
        }
        if (rep) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (quot[k].is_zero()) continue;
                for (std::size_t j = 0; j < rep->size(); ++j)
                    (*rep)[j] -= quot[k] * reps[k][j];
            }
        }
        return remainder;
    }

    void run(const std::vector<Polynomial>& gens) {
        const auto& uni = gens.front().universe();
        Field field = gens.front().field();
        std::size_t input_count = gens.size();
        for (std::size_t j = 0; j < input_count; ++j) {
            if (gens[j].is_zero()) continue;
            std::vector<Polynomial> rep;
            if (traced) {
                rep.assign(input_count, Polynomial::zero(uni, field));
                rep[j] = Polynomial::constant(uni, Scalar::one(field));
            }
            // Interreduce inputs on the way in.
            Polynomial r = reduce(gens[j], traced ? &rep : nullptr);
            if (!r.is_zero()) add_element(std::move(r), std::move(rep));
        }

        while (!queue.empty()) {
            auto it = queue.begin();
            Pair p = *it;
            queue.erase(it);

            Polynomial sp =
                basis[p.i].times_monomial(lead[p.i].quotient_of(p.lcm), lead_coeff[p.i].inverse()) -
                basis[p.j].times_monomial(lead[p.j].quotient_of(p.lcm), lead_coeff[p.j].inverse());
            std::vector<Polynomial> rep;
            if (traced) {
                rep.assign(reps[p.i].size(), Polynomial::zero(basis[p.i].universe(), basis[p.i].field()));
                for (std::size_t t = 0; t < rep.size(); ++t) {
                    rep[t] = reps[p.i][t].times_monomial(lead[p.i].quotient_of(p.lcm),
                                                         lead_coeff[p.i].inverse()) -
                             reps[p.j][t].times_monomial(lead[p.j].quotient_of(p.lcm),
                                                         lead_coeff[p.j].inverse());
                }
            }
            Polynomial r = reduce(sp, traced ? &rep : nullptr);
            if (!r.is_zero()) {
                // A nonzero constant makes the ideal trivial; no further pairs
                // can change that.
                bool constant = r.is_constant();
                add_element(std::move(r), std::move(rep));
                if (constant) break;
            }
        }

        minimalize();
        tail_reduce();
        make_monic_sorted();
    }

    void minimalize() {
        std::vector<bool> alive(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
                if (i == j || !alive[j]) continue;
                if (lead[j].divides(lead[i]) && !(lead[i] == lead[j] && j > i)) alive[i] = false;
            }
        }
        std::vector<Polynomial> nb;
        std::vector<Monomial> nl;
        std::vector<Scalar> nc;
        std::vector<std::vector<Polynomial>> nr;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!alive[i]) continue;
            nb.push_back(std::move(basis[i]));
            nl.push_back(std::move(lead[i]));
            nc.push_back(std::move(lead_coeff[i]));
            if (traced) nr.push_back(std::move(reps[i]));
        }
        basis = std::move(nb);
        lead = std::move(nl);
        lead_coeff = std::move(nc);
        reps = std::move(nr);
    }

    void tail_reduce() {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) {
                    others.push_back(basis[j]);
                    idx.push_back(j);
                }
            if (others.empty()) continue;
            auto dres = divide_multi(basis[i], others, order, &budget.steps_used, budget.max_steps);
            if (traced) {
                for (std::size_t k = 0; k < others.size(); ++k) {
                    if (dres.quotients[k].is_zero()) continue;
                    for (std::size_t t = 0; t < reps[i].size(); ++t)
                        reps[i][t] -= dres.quotients[k] * reps[idx[k]][t];
                }
            }
            Polynomial norm = dres.remainder.primitive_part();
            if (traced) {
                Scalar f = rescale_factor(dres.remainder, norm);
                for (auto& r : reps[i]) r = r.scaled(f);
            }
            basis[i] = std::move(norm);
        }
    }

    void make_monic_sorted() {
        std::vector<std::size_t> perm(basis.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return order.compare(lead[a], lead[b]) < 0;
        });
        std::vector<Polynomial> nb;
        std::vector<std::vector<Polynomial>> nr;
        for (auto i : perm) {
            Scalar lc = basis[i].leading_term(order).second;
            nb.push_back(basis[i].scaled(lc.inverse()));
            if (traced) {
                auto rep = reps[i];
                for (auto& r : rep) r = r.scaled(lc.inverse());
                nr.push_back(std::move(rep));
            }
        }
        basis = std::move(nb);
        reps = std::move(nr);
    }
};

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         Budget& budget) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (gens.empty() || all_zero) return GroebnerBasis({}, order);
    Engine e(order, budget, false);
    e.run(gens);
    return GroebnerBasis(std::move(e.basis), order);
}

TracedBasis buchberger_traced(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                              Budget& budget) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (gens.empty() || all_zero) return {GroebnerBasis({}, order), {}};
    Engine e(order, budget, true);
    e.run(gens);
    return {GroebnerBasis(std::move(e.basis), order), std::move(e.reps)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget& budget) {
    if (gb.is_zero_ideal() || f.is_zero()) return f;
    return divide_multi(f, gb.generators(), gb.order(), &budget.steps_used, budget.max_steps)
        .remainder;
}

MembershipResult ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const MonomialOrder& order, Budget& budget) {
    MembershipResult res;
    if (f.is_zero()) {
        res.member = true;
        res.cofactors.assign(gens.size(), Polynomial::zero(f.universe(), f.field()));
        return res;
    }
    auto traced = buchberger_traced(gens, order, budget);
    if (traced.basis.is_zero_ideal()) return res; // zero ideal, f != 0
    auto dres = divide_multi(f, traced.basis.generators(), order, &budget.steps_used,
                             budget.max_steps);
    if (!dres.remainder.is_zero()) return res;
    res.member = true;
    res.cofactors.assign(gens.size(), Polynomial::zero(f.universe(), f.field()));
    for (std::size_t k = 0; k < traced.basis.generators().size(); ++k) {
        if (dres.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < gens.size(); ++j)
            res.cofactors[j] += dres.quotients[k] * traced.reps[k][j];
    }
    // The witness must re-expand exactly.
    Polynomial check(f.universe(), f.field());
    for (std::size_t j = 0; j < gens.size(); ++j) check += res.cofactors[j] * gens[j];
    if (check != f) throw std::logic_error("cofactor witness failed re-expansion");
    return res;
}

bool is_consistent_over_closure(const std::vector<Polynomial>& gens, Budget& budget) {
    auto gb = buchberger(gens, MonomialOrder::grevlex(), budget);
    return !gb.is_unit_ideal();
}

EliminationResult eliminate(const std::vector<Polynomial>& gens,
                            const std::vector<std::size_t>& drop, Budget& budget) {
    if (gens.empty()) return {};
    std::size_t nvars = gens.front().universe()->size();
    if (drop.empty()) {
        auto gb = buchberger(gens, MonomialOrder::grevlex(), budget);
        return {gb.generators()};
    }
    auto order = MonomialOrder::elimination(drop, nvars);
    auto gb = buchberger(gens, order, budget);
    std::vector<bool> dropped(nvars, false);
    for (auto v : drop) dropped[v] = true;
    EliminationResult res;
    for (const auto& g : gb.generators()) {
        bool retained_only = true;
        for (auto v : g.support_variables())
            if (dropped[v]) retained_only = false;
        if (retained_only) res.generators.push_back(g);
    }
    return res;
}

} // namespace cartprod
