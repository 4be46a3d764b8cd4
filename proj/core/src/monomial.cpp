#include "cartprod/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartprod {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Universe::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
    Monomial m(nvars);
    m.exps_[i] = e;
    m.degree_ = e;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    m.degree_ += o.degree_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    Monomial m(numerator);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= exps_[i];
    m.degree_ -= degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += m.exps_[i];
    }
    m.degree_ = deg;
    return m;
}

std::uint32_t Monomial::degree_on(const std::vector<std::size_t>& vars) const {
    std::uint32_t d = 0;
    for (auto i : vars) d += exps_[i];
    return d;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> leading, std::size_t nvars) {
    MonomialOrder o(Kind::Elimination);
    o.leading_.assign(nvars, false);
    for (auto i : leading) {
        if (i >= nvars) throw std::out_of_range("elimination variable index");
        o.leading_[i] = true;
    }
    return o;
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "grevlex") return grevlex();
    throw std::invalid_argument("unknown order '" + s + "'");
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::GrLex: return "grlex";
        case Kind::GrevLex: return "grevlex";
        case Kind::Elimination: return "elimination";
    }
    return "?";
}

namespace {

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    }
    return 0;
}

// Graded; ties broken by the last differing exponent, smaller exponent wins.
int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree,
                                      const std::vector<std::size_t>& allowed) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(nvars, 0);
    // Enumerate exponent choices over `allowed` recursively.
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
        if (pos == allowed.size()) {
            out.emplace_back(exps);
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            exps[allowed[pos]] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[allowed[pos]] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exps() < b.exps();
    });
    return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::GrLex:
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            return lex_cmp(a, b);
        case Kind::GrevLex:
            return grevlex_cmp(a, b);
        case Kind::Elimination: {
            // Compare the leading-group projections by grevlex, then the rest.
            std::uint32_t da = 0, db = 0;
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (leading_[i]) { da += a.exp(i); db += b.exp(i); }
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = a.nvars(); i-- > 0;)
                if (leading_[i] && a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
            std::uint32_t ra = a.degree() - da, rb = b.degree() - db;
            if (ra != rb) return ra < rb ? -1 : 1;
            for (std::size_t i = a.nvars(); i-- > 0;)
                if (!leading_[i] && a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

} // namespace cartprod
