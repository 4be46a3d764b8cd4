#include "cartprod/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace cartprod {

Polynomial Polynomial::constant(UniversePtr uni, const Scalar& c) {
    Polynomial p(uni, c.field());
    if (!c.is_zero()) p.terms_.emplace(Monomial(uni->size()), c);
    return p;
}

Polynomial Polynomial::variable(UniversePtr uni, Field field, std::size_t var, std::uint32_t e) {
    Polynomial p(uni, field);
    if (var >= uni->size()) throw std::out_of_range("variable index");
    p.terms_.emplace(Monomial::variable(uni->size(), var, e), Scalar::one(field));
    return p;
}

Polynomial Polynomial::term(UniversePtr uni, const Scalar& c, const Monomial& m) {
    Polynomial p(uni, c.field());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (field_ != o.field_) throw field_mismatch();
    if (uni_ != o.uni_ && !(*uni_ == *o.uni_))
        throw std::invalid_argument("polynomials over different universes");
}

std::optional<std::uint32_t> Polynomial::degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& [m, c] : terms_)
        if (!d || m.degree() > *d) d = m.degree();
    return d;
}

std::uint32_t Polynomial::degree_on(const std::vector<std::size_t>& vars) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_on(vars));
    return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial(uni_->size())); }

bool Polynomial::supported_on(const std::vector<std::size_t>& vars) const {
    std::vector<bool> ok(uni_->size(), false);
    for (auto v : vars) ok[v] = true;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exp(i) > 0 && !ok[i]) return false;
    return true;
}

bool Polynomial::depends_on(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.exp(var) > 0) return true;
    return false;
}

std::vector<std::size_t> Polynomial::support_variables() const {
    std::vector<bool> seen(uni_->size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exp(i) > 0) seen[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(uni_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(uni_, field_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(uni_, Scalar::one(field_));
    Polynomial base(*this);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(uni_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
    Polynomial r(uni_, field_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && *uni_ == *o.uni_ && terms_ == o.terms_;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assignment) const {
    for (const auto& [v, p] : assignment) {
        if (v >= uni_->size()) throw std::out_of_range("substituted variable index");
        if (p.field() != field_ || !(*p.universe() == *uni_))
            throw std::invalid_argument("substitution must stay in the same ring");
    }
    // Power cache per substituted variable.
    std::map<std::size_t, std::vector<Polynomial>> powers;
    Polynomial result(uni_, field_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(uni_, c);
        Monomial passthrough(uni_->size());
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            std::uint32_t e = m.exp(i);
            if (e == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                passthrough = passthrough * Monomial::variable(uni_->size(), i, e);
            } else {
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(constant(uni_, Scalar::one(field_)));
                while (cache.size() <= e) cache.push_back(cache.back() * it->second);
                t = t * cache[e];
            }
        }
        result += t.times_monomial(passthrough, Scalar::one(field_));
    }
    return result;
}

Polynomial Polynomial::substitute_scalar(const std::map<std::size_t, Scalar>& assignment) const {
    std::map<std::size_t, Polynomial> as;
    for (const auto& [v, s] : assignment) as.emplace(v, constant(uni_, s));
    return substitute(as);
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != uni_->size()) throw std::invalid_argument("point dimension mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            for (std::uint32_t e = 0; e < m.exp(i); ++e) t = t * point[i];
        }
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::coefficient_of(std::size_t var, std::uint32_t e) const {
    Polynomial r(uni_, field_);
    for (const auto& [m, c] : terms_) {
        if (m.exp(var) != e) continue;
        auto exps = m.exps();
        exps[var] = 0;
        r.terms_.emplace(Monomial(std::move(exps)), c);
    }
    return r;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    auto [lm, lc] = leading_term(order);
    if (lc.is_one()) return *this;
    return scaled(lc.inverse());
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    if (field_.tag == FieldTag::GFp) {
        const Scalar& first = terms_.begin()->second;
        return first.is_one() ? *this : scaled(first.inverse());
    }
    // lcm of denominators, then gcd of integer numerators (re and im alike).
    mpz_class den(1), num(0);
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den().get_mpz_t());
        if (field_.tag == FieldTag::QI)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den().get_mpz_t());
    }
    for (const auto& [m, c] : terms_) {
        mpq_class re = c.re() * den;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), re.get_num().get_mpz_t());
        if (field_.tag == FieldTag::QI) {
            mpq_class im = c.im() * den;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), im.get_num().get_mpz_t());
        }
    }
    if (num == 0) num = 1;
    mpq_class factor(den, num);
    factor.canonicalize();
    Scalar f = Scalar::from_mpq(field_, factor);
    // Sign normalization: first stored coefficient gets a positive real part
    // (or positive imaginary part when purely imaginary).
    const Scalar& lead = terms_.begin()->second;
    mpq_class probe = lead.re() != 0 ? lead.re() : lead.im();
    if (probe < 0) f = -f;
    return scaled(f);
}

Polynomial Polynomial::mapped_to(UniversePtr target, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != uni_->size()) throw std::invalid_argument("var_map size mismatch");
    Polynomial r(target, field_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> exps(target->size(), 0);
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            std::size_t j = var_map[i];
            if (j >= target->size()) throw std::out_of_range("var_map target index");
            exps[j] += m.exp(i);
        }
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.compare(a->first, b->first) > 0; });

    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        bool negated = false;
        if (field_.tag != FieldTag::GFp && cs.size() > 1 && cs[0] == '-' &&
            cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos) {
            // Simple negative coefficient: print via the minus sign.
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool complex_sum = cs.find('+') != std::string::npos ||
                           cs.find('-', 1) != std::string::npos;
        if (m.is_constant()) {
            os << cs;
            continue;
        }
        bool need_star = false;
        if (cs != "1") {
            if (complex_sum)
                os << "(" << cs << ")";
            else
                os << cs;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (need_star) os << "*";
            os << uni_->name(i);
            if (m.exp(i) > 1) os << "^" << m.exp(i);
            need_star = true;
        }
    }
    return os.str();
}

std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p) {
    if (p % 4 != 1) return std::nullopt;
    auto powmod = [p](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
            a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a = 2; a < p; ++a) {
        std::uint64_t r = powmod(a, (p - 1) / 4);
        if (static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * r) % p) == p - 1)
            return r;
    }
    return std::nullopt;
}

Polynomial to_prime_field(const Polynomial& f, std::uint64_t p) {
    Field gf = Field::prime_field(p);
    if (f.field().tag == FieldTag::GFp) {
        if (f.field().p != p) throw std::domain_error("cannot move between prime fields");
        return f;
    }
    std::optional<std::uint64_t> root;
    Polynomial out(f.universe(), gf);
    for (const auto& [m, c] : f.terms()) {
        std::uint64_t r = mod_reduce(c.re(), p);
        if (c.im() != 0) {
            if (!root) {
                root = sqrt_minus_one(p);
                if (!root) throw std::domain_error("p must be 1 mod 4 to reduce qi coefficients");
            }
            std::uint64_t im = mod_reduce(c.im(), p);
            r = (r + static_cast<std::uint64_t>((static_cast<unsigned __int128>(im) * *root) % p)) % p;
        }
        out.add_term(m, Scalar::from_mpq(gf, mpq_class(static_cast<unsigned long>(r))));
    }
    return out;
}

DivisionResult divide_multi(const Polynomial& f, const std::vector<Polynomial>& divisors,
                            const MonomialOrder& order, std::uint64_t* steps,
                            std::uint64_t step_limit) {
    if (divisors.empty()) throw std::invalid_argument("no divisors");
    for (const auto& g : divisors)
        if (g.is_zero()) throw std::invalid_argument("zero divisor");

    const auto& uni = f.universe();
    const Field field = f.field();

    struct Lead {
        Monomial m;
        Scalar c;
    };
    std::vector<Lead> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) {
        auto [lm, lc] = g.leading_term(order);
        leads.push_back({lm, lc});
    }

    // Working copy sorted by the active order so the current leading term is
    // always the map's last element.
    auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
    std::map<Monomial, Scalar, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero(uni, field));
    res.remainder = Polynomial::zero(uni, field);

    static const bool stats = std::getenv("CARTPROD_GB_STATS") != nullptr;
    while (!work.empty()) {
        if (steps) {
            ++*steps;
            if (step_limit && *steps > step_limit) throw budget_exhausted();
            if (stats && (*steps & 0xffff) == 0)
                std::cerr << "[div] steps=" << *steps << " work=" << work.size()
                          << " rem=" << res.remainder.term_count() << "\n";
        }
        auto it = std::prev(work.end());
        Monomial lm = it->first;
        Scalar lc = it->second;
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!leads[k].m.divides(lm)) continue;
            Monomial qm = leads[k].m.quotient_of(lm);
            Scalar qc = lc / leads[k].c;
            res.quotients[k].add_term(qm, qc);
            // work -= (qc * qm) * g_k
            for (const auto& [gm, gc] : divisors[k].terms()) {
                Monomial tm = gm * qm;
                Scalar tc = gc * qc;
                auto jt = work.find(tm);
                if (jt == work.end()) {
                    work.emplace(tm, -tc);
                } else {
                    jt->second = jt->second - tc;
                    if (jt->second.is_zero()) work.erase(jt);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lm, lc);
            work.erase(it);
        }
    }
    return res;
}

} // namespace cartprod
