#ifndef CARTPROD_SCALAR_HPP
#define CARTPROD_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cartprod {

/// All arithmetic in the library is exact; a Scalar is an element of one of
/// three computable subfields standing in for the complex numbers.
enum class FieldTag { Q, QI, GFp };

struct Field {
    FieldTag tag = FieldTag::Q;
    std::uint64_t p = 0; // modulus, GFp only; must be an odd prime < 2^31

    bool operator==(const Field&) const = default;

    bool has_imaginary_unit() const { return tag == FieldTag::QI; }
    std::string name() const;

    static Field rationals() { return Field{FieldTag::Q, 0}; }
    static Field gaussian_rationals() { return Field{FieldTag::QI, 0}; }
    static Field prime_field(std::uint64_t p);

    /// Parses "q", "qi" or "gf:<p>".
    static Field parse(const std::string& s);
};

class field_mismatch : public std::logic_error {
public:
    field_mismatch() : std::logic_error("scalars from different fields") {}
};

/// Exact field element. Values are immutable after construction apart from
/// assignment; all operations return canonical forms (reduced fractions,
/// residues in [0,p)).
class Scalar {
public:
    Scalar() = default; // zero of Q
    explicit Scalar(const Field& f) : field_(f) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long n);
    static Scalar from_mpq(const Field& f, const mpq_class& q);
    /// re + im*i; requires f.tag == QI unless im == 0.
    static Scalar complex(const Field& f, const mpq_class& re, const mpq_class& im);
    static Scalar imaginary_unit(const Field& f);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Rational part accessors (Q and QI).
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    std::uint64_t residue() const { return r_; }

    /// Exact square root when one exists in the field (Q and QI only).
    std::optional<Scalar> sqrt() const;

    /// Canonical text: "p/q", "p/q+r/s*i" (or just the imaginary part), or a
    /// residue. Used by the polynomial printer.
    std::string str() const;

    /// Total order used only for deterministic serialization, not algebra.
    int cmp(const Scalar& o) const;

private:
    Field field_{};
    mpq_class re_{0};
    mpq_class im_{0};
    std::uint64_t r_ = 0;

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw field_mismatch();
    }
};

/// Reduces a rational to GF(p); throws if the denominator vanishes mod p.
std::uint64_t mod_reduce(const mpq_class& q, std::uint64_t p);

/// Square root of a non-negative rational when it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

} // namespace cartprod

#endif
