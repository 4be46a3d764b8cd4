#include "cartprod/parse.hpp"

#include <cctype>

namespace cartprod {

namespace {

class Parser {
public:
    Parser(const std::string& text, const UniversePtr& uni, const Field& field)
        : text_(text), uni_(uni), field_(field) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected input");
        return p;
    }

private:
    const std::string& text_;
    const UniversePtr& uni_;
    Field field_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (eat('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        Polynomial p = power();
        return neg ? -p : p;
    }

    Polynomial power() {
        Polynomial base = primary();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected non-negative integer exponent");
            return base.pow(static_cast<std::uint32_t>(integer_literal()));
        }
        return base;
    }

    unsigned long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n(text_.substr(pos_, count_digits()));
            advance_digits();
            mpq_class value(n);
            // rational literal p/q
            std::size_t save = pos_;
            if (eat('/')) {
                skip_ws();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    mpz_class d(text_.substr(pos_, count_digits()));
                    advance_digits();
                    if (d == 0) fail("zero denominator");
                    value = mpq_class(n, d);
                    value.canonicalize();
                } else {
                    pos_ = save;
                }
            }
            return Polynomial::constant(uni_, Scalar::from_mpq(field_, value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string id = identifier();
            if (id == "i" && field_.has_imaginary_unit())
                return Polynomial::constant(uni_, Scalar::imaginary_unit(field_));
            auto idx = uni_->index_of(id);
            if (!idx) {
                pos_ = start;
                if (id == "i") fail("imaginary unit requires field qi");
                fail("unknown variable '" + id + "'");
            }
            return Polynomial::variable(uni_, field_, *idx);
        }
        fail("expected term");
    }

    std::size_t count_digits() {
        std::size_t n = 0;
        while (pos_ + n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + n]))) ++n;
        return n;
    }

    void advance_digits() { pos_ += count_digits(); }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return text_.substr(start, pos_ - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const UniversePtr& universe, const Field& field) {
    if (field.has_imaginary_unit() && universe->index_of("i"))
        throw std::invalid_argument("variable name 'i' clashes with the imaginary unit under qi");
    return Parser(text, universe, field).run();
}

} // namespace cartprod
