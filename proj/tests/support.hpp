#ifndef CARTPROD_TESTS_SUPPORT_HPP
#define CARTPROD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "cartprod/parse.hpp"
#include "cartprod/polynomial.hpp"

namespace testsupport {

// splitmix64; deterministic across platforms, unlike <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

inline cartprod::Scalar random_scalar(Rng& rng, const cartprod::Field& f) {
    using namespace cartprod;
    switch (f.tag) {
        case FieldTag::GFp:
            return Scalar::from_int(f, rng.int_in(0, static_cast<long>(f.p - 1)));
        case FieldTag::Q: {
            mpq_class q(rng.int_in(-9, 9), rng.int_in(1, 9));
            q.canonicalize();
            return Scalar::from_mpq(f, q);
        }
        case FieldTag::QI: {
            mpq_class re(rng.int_in(-9, 9), rng.int_in(1, 9));
            mpq_class im(rng.int_in(-9, 9), rng.int_in(1, 9));
            re.canonicalize();
            im.canonicalize();
            return Scalar::complex(f, re, im);
        }
    }
    return cartprod::Scalar::zero(f);
}

inline cartprod::Polynomial random_polynomial(Rng& rng, const cartprod::UniversePtr& uni,
                                              const cartprod::Field& f, std::uint32_t max_degree,
                                              std::size_t max_terms) {
    using namespace cartprod;
    while (true) {
        Polynomial p(uni, f);
        std::size_t nterms = 1 + rng.below(max_terms);
        for (std::size_t t = 0; t < nterms; ++t) {
            std::vector<std::uint32_t> exps(uni->size(), 0);
            std::uint32_t budget = max_degree;
            for (std::size_t i = 0; i < uni->size() && budget; ++i) {
                std::uint32_t e = static_cast<std::uint32_t>(rng.below(budget + 1));
                exps[i] = e;
                budget -= e;
            }
            long c = rng.int_in(-5, 5);
            if (c == 0) c = 1;
            p.add_term(Monomial(std::move(exps)), Scalar::from_int(f, c));
        }
        if (!p.is_zero()) return p;
    }
}

} // namespace testsupport

#endif
