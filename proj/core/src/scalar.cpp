#include "cartprod/scalar.hpp"

#include <sstream>

namespace cartprod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in GF(p)");
    return powmod(a, p - 2, p); // p prime
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::string Field::name() const {
    switch (tag) {
        case FieldTag::Q: return "q";
        case FieldTag::QI: return "qi";
        case FieldTag::GFp: return "gf:" + std::to_string(p);
    }
    return "?";
}

Field Field::prime_field(std::uint64_t p) {
    if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p))
        throw std::invalid_argument("GF(p) modulus must be an odd prime < 2^31");
    return Field{FieldTag::GFp, p};
}

Field Field::parse(const std::string& s) {
    if (s == "q") return rationals();
    if (s == "qi") return gaussian_rationals();
    if (s.rfind("gf:", 0) == 0) return prime_field(std::stoull(s.substr(3)));
    throw std::invalid_argument("unknown field '" + s + "' (expected q, qi or gf:<p>)");
}

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    if (f.tag == FieldTag::GFp)
        s.r_ = 1 % f.p;
    else
        s.re_ = 1;
    return s;
}

Scalar Scalar::from_int(const Field& f, long n) {
    Scalar s(f);
    if (f.tag == FieldTag::GFp) {
        long m = n % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    } else {
        s.re_ = n;
    }
    return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
    Scalar s(f);
    if (f.tag == FieldTag::GFp)
        s.r_ = mod_reduce(q, f.p);
    else
        s.re_ = q;
    return s;
}

Scalar Scalar::complex(const Field& f, const mpq_class& re, const mpq_class& im) {
    if (im != 0 && f.tag != FieldTag::QI)
        throw std::domain_error("imaginary part requires field qi");
    Scalar s = from_mpq(f, re);
    if (f.tag == FieldTag::QI) s.im_ = im;
    return s;
}

Scalar Scalar::imaginary_unit(const Field& f) {
    if (f.tag != FieldTag::QI)
        throw std::domain_error("imaginary unit requires field qi");
    Scalar s(f);
    s.im_ = 1;
    return s;
}

bool Scalar::is_zero() const {
    if (field_.tag == FieldTag::GFp) return r_ == 0;
    return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
    if (field_.tag == FieldTag::GFp) return r_ == 1;
    return re_ == 1 && im_ == 0;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.tag == FieldTag::GFp) return r_ == o.r_;
    return re_ == o.re_ && im_ == o.im_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.tag == FieldTag::GFp) {
        s.r_ = (r_ + o.r_) % field_.p;
    } else {
        s.re_ = re_ + o.re_;
        s.im_ = im_ + o.im_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.tag == FieldTag::GFp) {
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    } else {
        s.re_ = re_ - o.re_;
        s.im_ = im_ - o.im_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.tag == FieldTag::GFp) {
        s.r_ = mulmod(r_, o.r_, field_.p);
    } else if (field_.tag == FieldTag::Q) {
        s.re_ = re_ * o.re_;
    } else {
        s.re_ = re_ * o.re_ - im_ * o.im_;
        s.im_ = re_ * o.im_ + im_ * o.re_;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.tag == FieldTag::GFp) {
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    } else {
        s.re_ = -re_;
        s.im_ = -im_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(field_);
    switch (field_.tag) {
        case FieldTag::GFp:
            s.r_ = invmod(r_, field_.p);
            break;
        case FieldTag::Q:
            s.re_ = 1 / re_;
            break;
        case FieldTag::QI: {
            mpq_class n = re_ * re_ + im_ * im_;
            s.re_ = re_ / n;
            s.im_ = -im_ / n;
            break;
        }
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

std::optional<Scalar> Scalar::sqrt() const {
    if (field_.tag == FieldTag::GFp) return std::nullopt; // not needed over GF(p)
    if (field_.tag == FieldTag::Q) {
        auto r = rational_sqrt(re_);
        if (!r) return std::nullopt;
        return from_mpq(field_, *r);
    }
    // (u + v i)^2 = re + im i  =>  u^2 - v^2 = re, 2 u v = im.
    mpq_class norm = re_ * re_ + im_ * im_;
    auto n = rational_sqrt(norm);
    if (!n) return std::nullopt;
    auto try_u2 = [&](const mpq_class& u2) -> std::optional<Scalar> {
        if (u2 < 0) return std::nullopt;
        auto u = rational_sqrt(u2);
        if (!u) return std::nullopt;
        if (*u == 0) {
            auto v2 = -re_;
            auto v = rational_sqrt(v2);
            if (!v) return std::nullopt;
            return complex(field_, 0, *v);
        }
        mpq_class v = im_ / (2 * *u);
        if (*u * *u - v * v != re_) return std::nullopt;
        return complex(field_, *u, v);
    };
    if (auto s = try_u2((re_ + *n) / 2)) return s;
    return try_u2((re_ - *n) / 2);
}

std::string Scalar::str() const {
    if (field_.tag == FieldTag::GFp) return std::to_string(r_);
    std::ostringstream os;
    auto rat = [&](const mpq_class& q) {
        os << q.get_num();
        if (q.get_den() != 1) os << "/" << q.get_den();
    };
    if (im_ == 0) {
        rat(re_);
    } else if (re_ == 0) {
        if (im_ == 1) {
            os << "i";
        } else if (im_ == -1) {
            os << "-i";
        } else {
            rat(im_);
            os << "*i";
        }
    } else {
        rat(re_);
        if (im_ > 0) os << "+";
        if (im_ == 1) {
            os << "i";
        } else if (im_ == -1) {
            os << "-i";
        } else {
            rat(im_);
            os << "*i";
        }
    }
    return os.str();
}

int Scalar::cmp(const Scalar& o) const {
    check_same(o);
    if (field_.tag == FieldTag::GFp) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    int c = ::cmp(re_, o.re_);
    if (c != 0) return c;
    return ::cmp(im_, o.im_);
}

std::uint64_t mod_reduce(const mpq_class& q, std::uint64_t p) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr == 0) throw std::domain_error("denominator vanishes mod p");
    std::uint64_t n = nr.get_ui();
    std::uint64_t d = dr.get_ui();
    return mulmod(n, invmod(d, p), p);
}

} // namespace cartprod
